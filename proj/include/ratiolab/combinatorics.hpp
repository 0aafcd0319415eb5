#pragma once

#include <cstdint>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace ratiolab {

// C(a, b), exact. Out-of-range lower index yields 0, C(a, 0) = 1.
inline BigUint binomial(int a, int b) {
  if (a < 0) fail(Errc::BadParameters, "binomial: negative upper index");
  if (b < 0 || b > a) return BigUint{};
  if (b > a - b) b = a - b;
  BigUint out(1);
  for (int i = 1; i <= b; ++i) {
    out *= BigUint(static_cast<std::uint64_t>(a - b + i));
    out = out.divmod_u64(static_cast<std::uint64_t>(i)).first;  // exact at each step
  }
  return out;
}

// Binomials used for enumeration bookkeeping. Values above the saturation
// threshold all report kBinomialSat; exact only below it.
inline constexpr std::uint64_t kBinomialSat = ~std::uint64_t{0};

inline std::uint64_t binomial_sat(int a, int b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  const unsigned __int128 limit = (unsigned __int128)1 << 100;
  unsigned __int128 out = 1;
  for (int i = 1; i <= b; ++i) {
    out = out * (unsigned __int128)(a - b + i) / (unsigned __int128)i;
    if (out >= limit) return kBinomialSat;
  }
  return out > (unsigned __int128)UINT64_MAX ? kBinomialSat
                                             : static_cast<std::uint64_t>(out);
}

// Lexicographic r-subsets of {1, ..., n} as ascending element lists.
// Usage: for (CombinationGen g(n, r); g.valid(); g.next()) { ... g.elems() }
class CombinationGen {
 public:
  CombinationGen(int n, int r) : n_(n), r_(r), elems_(static_cast<std::size_t>(r)) {
    valid_ = (0 <= r && r <= n);
    for (int i = 0; i < r; ++i) elems_[static_cast<std::size_t>(i)] = i + 1;
  }

  // Starts at the combination of the given lex rank. Requires rank < C(n, r).
  CombinationGen(int n, int r, std::uint64_t rank) : CombinationGen(n, r) {
    int v = 1;
    for (int pos = 0; pos < r_; ++pos) {
      for (;; ++v) {
        const std::uint64_t c = binomial_sat(n_ - v, r_ - pos - 1);
        if (rank < c) {
          elems_[static_cast<std::size_t>(pos)] = v;
          ++v;
          break;
        }
        rank -= c;
      }
    }
  }

  bool valid() const { return valid_; }
  const std::vector<int>& elems() const { return elems_; }

  void next() {
    int i = r_ - 1;
    while (i >= 0 && elems_[static_cast<std::size_t>(i)] == n_ - r_ + 1 + i) --i;
    if (i < 0) {
      valid_ = false;
      return;
    }
    ++elems_[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r_; ++j)
      elems_[static_cast<std::size_t>(j)] = elems_[static_cast<std::size_t>(j - 1)] + 1;
  }

 private:
  int n_;
  int r_;
  std::vector<int> elems_;
  bool valid_ = false;
};

}  // namespace ratiolab
