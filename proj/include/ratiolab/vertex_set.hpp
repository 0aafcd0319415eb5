#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ratiolab {

// Subset of the universe {1, ..., 128} packed into two 64-bit words; vertex v
// occupies bit v-1. Intersection, cardinality and order tests are word ops.
class VertexSet {
 public:
  static constexpr int kMaxUniverse = 128;

  VertexSet() = default;

  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }
  static VertexSet from_elements(const std::vector<int>& vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }
  // {1, ..., n}
  static VertexSet full(int n) {
    if (n < 0 || n > kMaxUniverse) fail(Errc::UniverseTooLarge, "universe exceeds 128 vertices");
    VertexSet s;
    for (int w = 0; w < 2; ++w) {
      const int lo = 64 * w;
      if (n <= lo) break;
      const int count = std::min(64, n - lo);
      s.w_[static_cast<std::size_t>(w)] =
          count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
    }
    return s;
  }

  void insert(int v) {
    check_range(v);
    w_[word(v)] |= mask(v);
  }
  void erase(int v) {
    check_range(v);
    w_[word(v)] &= ~mask(v);
  }
  bool contains(int v) const {
    if (v < 1 || v > kMaxUniverse) return false;
    return w_[word(v)] & mask(v);
  }

  int size() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }
  bool empty() const { return !(w_[0] | w_[1]); }

  bool intersects(const VertexSet& o) const {
    return ((w_[0] & o.w_[0]) | (w_[1] & o.w_[1])) != 0;
  }
  bool subset_of(const VertexSet& o) const {
    return ((w_[0] & ~o.w_[0]) | (w_[1] & ~o.w_[1])) == 0;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) {
    a.w_[0] &= b.w_[0];
    a.w_[1] &= b.w_[1];
    return a;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) {
    a.w_[0] |= b.w_[0];
    a.w_[1] |= b.w_[1];
    return a;
  }
  // set difference
  friend VertexSet operator-(VertexSet a, const VertexSet& b) {
    a.w_[0] &= ~b.w_[0];
    a.w_[1] &= ~b.w_[1];
    return a;
  }
  VertexSet& operator|=(const VertexSet& b) {
    w_[0] |= b.w_[0];
    w_[1] |= b.w_[1];
    return *this;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.w_ == b.w_; }
  friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }

  int min_element() const {
    if (w_[0]) return std::countr_zero(w_[0]) + 1;
    if (w_[1]) return std::countr_zero(w_[1]) + 65;
    return 0;
  }

  template <typename F>
  void for_each(F&& f) const {  // ascending
    for (int w = 0; w < 2; ++w) {
      std::uint64_t bits = w_[static_cast<std::size_t>(w)];
      while (bits) {
        f(std::countr_zero(bits) + 64 * w + 1);
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  // Order of the ascending element lists. For equal-size sets the smallest
  // element of the symmetric difference decides: its owner comes first.
  static int canonical_compare(const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return list_compare(a, b);
    for (std::size_t i = 0; i < 2; ++i) {
      const std::uint64_t d = a.w_[i] ^ b.w_[i];
      if (d) {
        const std::uint64_t low = d & (~d + 1);
        return (a.w_[i] & low) ? -1 : 1;
      }
    }
    return 0;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for_each([&](int v) {
      if (!first) out += ",";
      out += std::to_string(v);
      first = false;
    });
    return out + "}";
  }

 private:
  static std::size_t word(int v) { return static_cast<std::size_t>((v - 1) >> 6); }
  static std::uint64_t mask(int v) { return std::uint64_t{1} << ((v - 1) & 63); }
  static void check_range(int v) {
    if (v < 1 || v > kMaxUniverse)
      fail(Errc::ElementOutOfRange, "vertex " + std::to_string(v) + " outside [1,128]");
  }

  static int list_compare(const VertexSet& a, const VertexSet& b) {
    const std::vector<int> ea = a.elements(), eb = b.elements();
    const std::size_t m = std::min(ea.size(), eb.size());
    for (std::size_t i = 0; i < m; ++i) {
      if (ea[i] != eb[i]) return ea[i] < eb[i] ? -1 : 1;
    }
    return ea.size() < eb.size() ? -1 : (ea.size() > eb.size() ? 1 : 0);
  }

  std::array<std::uint64_t, 2> w_{};
};

inline bool canonical_less(const VertexSet& a, const VertexSet& b) {
  return VertexSet::canonical_compare(a, b) < 0;
}

struct CanonicalLess {
  bool operator()(const VertexSet& a, const VertexSet& b) const { return canonical_less(a, b); }
};

}  // namespace ratiolab
