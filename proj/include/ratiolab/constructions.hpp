#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "family.hpp"
#include "projective.hpp"
#include "rational.hpp"
#include "verify.hpp"
#include "vertex_set.hpp"

namespace ratiolab {

// All r-sets through vertex 1. |F| = C(n-1, r-1).
inline Family star_family(int n, int r) {
  if (r < 1 || 2 * r > n || n > VertexSet::kMaxUniverse)
    fail(Errc::BadParameters, "star family needs 1 <= r and 2r <= n <= 128");
  if (binomial_sat(n - 1, r - 1) > kMaxFamilyMembers)
    fail(Errc::FamilyTooLarge, "star family exceeds the member limit");
  std::vector<VertexSet> sets;
  // combinations of [2, n] of size r-1, each joined with the center
  for (CombinationGen g(n - 1, r - 1); g.valid(); g.next()) {
    VertexSet s;
    s.insert(1);
    for (int v : g.elems()) s.insert(v + 1);
    sets.push_back(s);
  }
  return family_from_sets(n, r, std::move(sets));
}

// High-ratio family: vertex 1 plus most of the small core S = [2, 2r-2]
// dominates, tail vertices 2r-1..n stay at minimum degree. Four parts:
//   part 1: {1} u G           for G an (r-1)-subset of S
//   part 2: {1, i} u H        for 2r-1 <= i <= n, H an (r-2)-subset of S, H != S0
//   part 3: every r-subset of S
//   part 4: (S \ S0) u {i}    for 2r-1 <= i <= n
// with S0 = [2, r-1].
inline Family thm1ii_family(int n, int r) {
  if (r < 3 || 2 * r + 2 >= n || n > VertexSet::kMaxUniverse)
    fail(Errc::BadParameters, "family needs r >= 3 and 2r+2 < n <= 128");
  const int tail = n - 2 * r + 2;  // number of vertices i with 2r-1 <= i <= n
  {
    // 128-bit so a saturated binomial cannot wrap past the cap
    const unsigned __int128 size =
        (unsigned __int128)binomial_sat(2 * r - 3, r - 1) +
        (unsigned __int128)(binomial_sat(2 * r - 3, r - 2) - 1) * static_cast<unsigned>(tail) +
        (unsigned __int128)binomial_sat(2 * r - 3, r) + static_cast<unsigned>(tail);
    if (size > kMaxFamilyMembers)
      fail(Errc::FamilyTooLarge, "family exceeds the member limit");
  }
  VertexSet s_minus_s0;  // [r, 2r-2]
  for (int v = r; v <= 2 * r - 2; ++v) s_minus_s0.insert(v);
  VertexSet s0;  // [2, r-1]
  for (int v = 2; v <= r - 1; ++v) s0.insert(v);

  std::vector<VertexSet> sets;
  // part 1; S = [2, 2r-2] has 2r-3 elements, combination index shifts by 1
  for (CombinationGen g(2 * r - 3, r - 1); g.valid(); g.next()) {
    VertexSet m;
    m.insert(1);
    for (int v : g.elems()) m.insert(v + 1);
    sets.push_back(m);
  }
  // part 2
  for (CombinationGen g(2 * r - 3, r - 2); g.valid(); g.next()) {
    VertexSet h;
    for (int v : g.elems()) h.insert(v + 1);
    if (h == s0) continue;
    for (int i = 2 * r - 1; i <= n; ++i) {
      VertexSet m = h;
      m.insert(1);
      m.insert(i);
      sets.push_back(m);
    }
  }
  // part 3
  for (CombinationGen g(2 * r - 3, r); g.valid(); g.next()) {
    VertexSet m;
    for (int v : g.elems()) m.insert(v + 1);
    sets.push_back(m);
  }
  // part 4
  for (int i = 2 * r - 1; i <= n; ++i) {
    VertexSet m = s_minus_s0;
    m.insert(i);
    sets.push_back(m);
  }
  return family_from_sets(n, r, std::move(sets));
}

namespace detail {

struct PlaneWindow {
  bool has_outside = false;  // vertices beyond the plane exist
};

// Shared parameter window of the plane family and its degree formulas.
inline PlaneWindow check_plane_window(int n, int r, int p) {
  if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
  const int points = p * p + p + 1;
  if (n < points || n > VertexSet::kMaxUniverse)
    fail(Errc::BadParameters, "need p^2+p+1 <= n <= 128");
  if (r < p + 1 || 2 * r >= 3 * (p + 1))
    fail(Errc::BadParameters, "need p+1 <= r < 3(p+1)/2 for the blocking-set argument");
  PlaneWindow w;
  w.has_outside = n > points;
  if (w.has_outside) {
    if (r < p + 2)
      fail(Errc::UncoveredUniverse, "r = p+1 leaves the vertices outside the plane uncovered");
    if (n < 2 * r) fail(Errc::BadParameters, "need n >= 2r to extend a disjoint line to an r-set");
  }
  return w;
}

}  // namespace detail

// All r-subsets of [n] containing a line of the order-p plane embedded at
// offset 1. Since r < 2p+1 no member can hold two lines, so
// |F| = (p^2+p+1) * C(n-p-1, r-p-1) and members decompose uniquely.
inline Family plane_family(int n, int r, int p) {
  detail::check_plane_window(n, r, p);
  const int points = p * p + p + 1;
  const unsigned __int128 size =
      (unsigned __int128)points * binomial_sat(n - p - 1, r - p - 1);
  if (size > kMaxFamilyMembers) fail(Errc::FamilyTooLarge, "plane family exceeds the member limit");
  const ProjectivePlane plane = build_plane(p, 1);

  std::vector<VertexSet> sets;
  sets.reserve(static_cast<std::size_t>(size));
  for (const VertexSet& line : plane.lines) {
    std::vector<int> rest;  // [n] minus the line, ascending
    for (int v = 1; v <= n; ++v)
      if (!line.contains(v)) rest.push_back(v);
    for (CombinationGen g(n - p - 1, r - p - 1); g.valid(); g.next()) {
      VertexSet m = line;
      for (int idx : g.elems()) m.insert(rest[static_cast<std::size_t>(idx - 1)]);
      sets.push_back(m);
    }
  }
  Family f = family_from_sets(n, r, std::move(sets));
  if (!covers_universe(f))
    fail(Errc::UncoveredUniverse, "plane family does not cover the universe");
  return f;
}

// Parameters of the multi-plane regular family: k disjoint planes of order p,
// members hold a line in some (k+1)/2 of them plus s free vertices.
struct MultiPlaneParams {
  int k = 1;
  int p = 2;
  int s = 0;

  int universe() const { return k * (p * p + p + 1); }
  int rank() const { return (k + 1) / 2 * (p + 1) + s; }

  // k/p/s constraints alone; report-only parameter matching may exceed the
  // constructible universe.
  void validate_shape() const {
    if (k < 1 || k % 2 == 0) fail(Errc::BadParameters, "k must be a positive odd integer");
    if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (s < 0 || 2 * s > p) fail(Errc::BadParameters, "s must satisfy 0 <= 2s <= p");
  }
  void validate() const {
    validate_shape();
    if (universe() > VertexSet::kMaxUniverse)
      fail(Errc::BadParameters, "derived universe exceeds 128 vertices");
  }
};

// Every member holds exactly one line in exactly (k+1)/2 planes (s <= p/2
// leaves no room for more), so the triple (plane subset, lines, extras) is a
// unique decomposition and direct generation is duplicate-free.
inline Family multi_plane_family(const MultiPlaneParams& params) {
  params.validate();
  const int k = params.k, p = params.p, s = params.s;
  const int n = params.universe();
  const int r = params.rank();
  const int half = (k + 1) / 2;
  const int points = p * p + p + 1;
  {
    unsigned __int128 size = binomial_sat(k, half);
    for (int i = 0; i < half; ++i) size *= static_cast<unsigned>(points);
    size *= binomial_sat(n - half * (p + 1), s);
    if (size > kMaxFamilyMembers) fail(Errc::FamilyTooLarge, "family exceeds the member limit");
  }

  std::vector<ProjectivePlane> planes;
  planes.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) planes.push_back(build_plane(p, i * points + 1));

  std::vector<VertexSet> sets;
  for (CombinationGen chosen(k, half); chosen.valid(); chosen.next()) {
    std::vector<int> idx(static_cast<std::size_t>(half), 0);  // line index per chosen plane
    for (;;) {
      VertexSet base;
      for (int j = 0; j < half; ++j)
        base |= planes[static_cast<std::size_t>(chosen.elems()[static_cast<std::size_t>(j)] - 1)]
                    .lines[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
      std::vector<int> rest;
      for (int v = 1; v <= n; ++v)
        if (!base.contains(v)) rest.push_back(v);
      for (CombinationGen extra(static_cast<int>(rest.size()), s); extra.valid(); extra.next()) {
        VertexSet m = base;
        for (int e : extra.elems()) m.insert(rest[static_cast<std::size_t>(e - 1)]);
        sets.push_back(m);
      }
      // odometer over the line choices
      int j = half - 1;
      while (j >= 0 && idx[static_cast<std::size_t>(j)] == points - 1) {
        idx[static_cast<std::size_t>(j)] = 0;
        --j;
      }
      if (j < 0) break;
      ++idx[static_cast<std::size_t>(j)];
    }
  }
  return family_from_sets(n, r, std::move(sets));
}

// One set from each complementary pair on n = 2r vertices: all r-sets
// avoiding vertex 1 except [r+1, 2r], plus [1, r].
inline Family halving_family(int r) {
  if (r < 3 || 2 * r > VertexSet::kMaxUniverse)
    fail(Errc::BadParameters, "halving family needs 3 <= r <= 64");
  const int n = 2 * r;
  if (binomial_sat(n - 1, r) > kMaxFamilyMembers)
    fail(Errc::FamilyTooLarge, "halving family exceeds the member limit");
  VertexSet top;  // [r+1, 2r]
  for (int v = r + 1; v <= n; ++v) top.insert(v);
  std::vector<VertexSet> sets;
  VertexSet head;  // [1, r]
  for (int v = 1; v <= r; ++v) head.insert(v);
  sets.push_back(head);
  for (CombinationGen g(n - 1, r); g.valid(); g.next()) {
    VertexSet m;
    for (int v : g.elems()) m.insert(v + 1);
    if (m == top) continue;
    sets.push_back(m);
  }
  return family_from_sets(n, r, std::move(sets));
}

// Smallest prime p with 2r/3 < p < 4r/5. Existence is guaranteed by the
// prime-gap bound once 2r/3 >= 25; below that the window may be empty.
inline int prime_pick(int r) {
  if (r < 2) fail(Errc::BadParameters, "prime window needs r >= 2");
  for (long long p = 2LL * r / 3 + 1; 5 * p < 4LL * r; ++p)
    if (3 * p > 2LL * r && is_prime(static_cast<int>(p))) return static_cast<int>(p);
  fail(Errc::NoPrimeInWindow,
       "no prime in (2r/3, 4r/5) for r = " + std::to_string(r));
}

struct MatchResult {
  MultiPlaneParams params;
  int n_achieved = 0;
  int r_achieved = 0;
  Rational deviation;  // max(|n'-n|/n, |r'-r|/r)
};

// Best multi-plane parameters for a target (n, r) by minimax relative
// deviation; ties break to smaller p, then k, then s. The capped search is
// bounded by the 128-vertex universe; otherwise by 2n, beyond which the
// deviation already exceeds the always-feasible (k=1, p=2) baseline.
inline MatchResult match_regular_params(int n, int r, bool capped = true) {
  if (r < 2 || n < 7) fail(Errc::BadParameters, "parameter matching needs n >= 7 and r >= 2");
  if (n > 100'000'000) fail(Errc::BadParameters, "parameter matching caps the target at 10^8");
  const long long cap =
      capped ? VertexSet::kMaxUniverse : std::max<long long>(VertexSet::kMaxUniverse, 2LL * n);
  bool found = false;
  MatchResult best;
  for (long long p = 2; p * p + p + 1 <= cap; ++p) {
    if (!is_prime(static_cast<int>(p))) continue;
    const long long points = p * p + p + 1;
    for (long long k = 1; k * points <= cap; k += 2) {
      const long long n2 = k * points;
      for (long long s = 0; 2 * s <= p; ++s) {
        const long long r2 = (k + 1) / 2 * (p + 1) + s;
        const Rational dev_n(static_cast<std::uint64_t>(n2 > n ? n2 - n : n - n2),
                             static_cast<std::uint64_t>(n));
        const Rational dev_r(static_cast<std::uint64_t>(r2 > r ? r2 - r : r - r2),
                             static_cast<std::uint64_t>(r));
        const Rational dev = dev_n < dev_r ? dev_r : dev_n;
        if (!found || dev < best.deviation) {
          found = true;
          best.params = MultiPlaneParams{static_cast<int>(k), static_cast<int>(p),
                                         static_cast<int>(s)};
          best.n_achieved = static_cast<int>(n2);
          best.r_achieved = static_cast<int>(r2);
          best.deviation = dev;
        }
      }
    }
  }
  if (!found) fail(Errc::NoFeasibleParams, "no multi-plane parameters under the cap");
  if (capped)
    best.params.validate();
  else
    best.params.validate_shape();
  return best;
}

}  // namespace ratiolab
