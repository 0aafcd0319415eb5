#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "vertex_set.hpp"

namespace ratiolab {

// Explicit families stay desk-sized; anything larger is refused up front.
inline constexpr std::uint64_t kMaxFamilyMembers = std::uint64_t{1} << 24;
// Full scans over C([n], r) are refused beyond this many candidates.
inline constexpr std::uint64_t kMaxScanCandidates = std::uint64_t{1} << 26;

// Uniform family of distinct r-subsets of {1, ..., n}. Members are kept in
// canonical (lexicographic) order, so equal families serialize identically.
struct Family {
  int n = 0;
  int r = 0;
  std::vector<VertexSet> sets;

  std::size_t size() const { return sets.size(); }

  bool contains(const VertexSet& s) const {
    auto it = std::lower_bound(sets.begin(), sets.end(), s, CanonicalLess{});
    return it != sets.end() && *it == s;
  }

  friend bool operator==(const Family& a, const Family& b) {
    return a.n == b.n && a.r == b.r && a.sets == b.sets;
  }
  friend bool operator!=(const Family& a, const Family& b) { return !(a == b); }
};

// Orders families by their canonical member sequences.
inline bool family_canonical_less(const Family& a, const Family& b) {
  const std::size_t m = std::min(a.sets.size(), b.sets.size());
  for (std::size_t i = 0; i < m; ++i) {
    const int c = VertexSet::canonical_compare(a.sets[i], b.sets[i]);
    if (c != 0) return c < 0;
  }
  return a.sets.size() < b.sets.size();
}

// Members already validated as r-subsets of [1, n]; sorts canonically and
// rejects duplicates. The shared back end of make_family and the builders.
inline Family family_from_sets(int n, int r, std::vector<VertexSet> sets) {
  if (n < 1 || n > VertexSet::kMaxUniverse)
    fail(Errc::UniverseTooLarge, "universe size " + std::to_string(n) + " outside [1,128]");
  if (r < 1 || r > n)
    fail(Errc::BadParameters, "rank " + std::to_string(r) + " outside [1," + std::to_string(n) + "]");
  if (sets.size() > kMaxFamilyMembers)
    fail(Errc::FamilyTooLarge, "family would have " + std::to_string(sets.size()) + " members");
  const VertexSet universe = VertexSet::full(n);
  for (const VertexSet& s : sets) {
    if (!s.subset_of(universe))
      fail(Errc::ElementOutOfRange, "set " + s.to_string() + " not inside [1," + std::to_string(n) + "]");
    if (s.size() != r)
      fail(Errc::RankMismatch, "set " + s.to_string() + " is not a " + std::to_string(r) + "-set");
  }
  std::sort(sets.begin(), sets.end(), CanonicalLess{});
  for (std::size_t i = 1; i < sets.size(); ++i)
    if (sets[i] == sets[i - 1])
      fail(Errc::DuplicateSet, "duplicate member " + sets[i].to_string());
  return Family{n, r, std::move(sets)};
}

inline Family make_family(int n, int r, const std::vector<std::vector<int>>& sets) {
  if (n < 1 || n > VertexSet::kMaxUniverse)
    fail(Errc::UniverseTooLarge, "universe size " + std::to_string(n) + " outside [1,128]");
  std::vector<VertexSet> members;
  members.reserve(sets.size());
  for (const auto& elems : sets) {
    VertexSet s;
    for (int v : elems) {
      if (v < 1 || v > n)
        fail(Errc::ElementOutOfRange,
             "element " + std::to_string(v) + " outside [1," + std::to_string(n) + "]");
      s.insert(v);
    }
    if (s.size() != static_cast<int>(elems.size()) || static_cast<int>(elems.size()) != r)
      fail(Errc::RankMismatch, "input set is not a set of " + std::to_string(r) + " distinct elements");
    members.push_back(s);
  }
  return family_from_sets(n, r, std::move(members));
}

struct DegreeProfile {
  std::vector<std::uint64_t> degrees;  // degrees[v-1] = d(v)
  std::uint64_t delta_max = 0;
  std::uint64_t delta_min = 0;
  std::optional<Rational> ratio;  // delta_max / delta_min, present iff delta_min > 0

  std::uint64_t degree(int v) const { return degrees[static_cast<std::size_t>(v - 1)]; }

  const Rational& ratio_checked() const {
    if (!ratio) fail(Errc::UncoveredVertex, "ratio undefined: some vertex has degree 0");
    return *ratio;
  }
};

inline DegreeProfile degree_profile(const Family& f) {
  DegreeProfile p;
  p.degrees.assign(static_cast<std::size_t>(f.n), 0);
  for (const VertexSet& s : f.sets)
    s.for_each([&](int v) { ++p.degrees[static_cast<std::size_t>(v - 1)]; });
  for (std::uint64_t d : p.degrees) {
    p.delta_max = std::max(p.delta_max, d);
  }
  p.delta_min = p.degrees.empty() ? 0 : *std::min_element(p.degrees.begin(), p.degrees.end());
  if (p.delta_min > 0) p.ratio = Rational(p.delta_max, p.delta_min);
  return p;
}

}  // namespace ratiolab
