#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "combinatorics.hpp"
#include "constructions.hpp"
#include "errors.hpp"
#include "family.hpp"
#include "rational.hpp"
#include "verify.hpp"

namespace ratiolab {

struct BoundsReport {
  int n = 0;
  int r = 0;
  Rational m_lower;                          // n / r^2
  BigUint M_upper;                           // n + r^r
  std::optional<Rational> M_lower_thm1ii;    // n-2r+3 - (n-2r+2)/C(2r-3, r-2)
};

// The three closed-form bounds. The construction-based lower bound needs
// 2r+2 < n; at r = 1 its denominator C(-1, -1) is 0, so it is omitted there.
inline BoundsReport bounds(int n, int r) {
  if (r < 1 || r > n || n > VertexSet::kMaxUniverse)
    fail(Errc::BadParameters, "bounds need 1 <= r <= n <= 128");
  BoundsReport rep;
  rep.n = n;
  rep.r = r;
  rep.m_lower = Rational(static_cast<std::uint64_t>(n),
                         static_cast<std::uint64_t>(r) * static_cast<std::uint64_t>(r));
  rep.M_upper = BigUint(static_cast<std::uint64_t>(n)) +
                BigUint::pow(static_cast<std::uint64_t>(r), static_cast<unsigned>(r));
  if (2 * r + 2 < n && r >= 2) {
    const BigUint c = binomial(2 * r - 3, r - 2);
    const BigUint num =
        BigUint(static_cast<std::uint64_t>(n - 2 * r + 3)) * c -
        BigUint(static_cast<std::uint64_t>(n - 2 * r + 2));
    rep.M_lower_thm1ii = Rational(num, c);
  }
  return rep;
}

struct Thm1iiDegrees {
  BigUint deg_one;   // C(2r-3, r-1) + (C(2r-3, r-2) - 1)(n-2r+2)
  BigUint deg_tail;  // C(2r-3, r-2), the degree of every vertex >= 2r-1
};

inline Thm1iiDegrees thm1ii_degree_formula(int n, int r) {
  if (r < 3 || 2 * r + 2 >= n || n > VertexSet::kMaxUniverse)
    fail(Errc::BadParameters, "degree formula needs r >= 3 and 2r+2 < n <= 128");
  Thm1iiDegrees d;
  d.deg_tail = binomial(2 * r - 3, r - 2);
  d.deg_one = binomial(2 * r - 3, r - 1) +
              (d.deg_tail - BigUint(1)) * BigUint(static_cast<std::uint64_t>(n - 2 * r + 2));
  return d;
}

struct PlaneDegrees {
  BigUint deg_inside;                 // (p+1)C(n-p-1, r-p-1) + p^2 C(n-p-2, r-p-2)
  std::optional<BigUint> deg_outside; // (p^2+p+1)C(n-p-2, r-p-2); absent when n = p^2+p+1
  Rational ratio;                     // inside/outside, or 1/1 when all vertices are plane points
};

inline PlaneDegrees plane_degree_formula(int n, int r, int p) {
  const auto window = detail::check_plane_window(n, r, p);
  PlaneDegrees d;
  d.deg_inside =
      BigUint(static_cast<std::uint64_t>(p + 1)) * binomial(n - p - 1, r - p - 1) +
      BigUint(static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(p)) *
          binomial(n - p - 2, r - p - 2);
  if (window.has_outside) {
    const BigUint outside =
        BigUint(static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(p + 1) + 1) *
        binomial(n - p - 2, r - p - 2);
    if (outside.is_zero())
      fail(Errc::UncoveredUniverse, "outside degree vanishes; the family cannot cover [n]");
    d.ratio = Rational(d.deg_inside, outside);
    d.deg_outside = outside;
  } else {
    d.ratio = Rational(1, 1);
  }
  return d;
}

struct PartitionReport {
  Family f1;  // members with a removable vertex
  Family f2;  // members where every deletion loses some intersection
  std::vector<int> removable;     // g(F) per f1 member, aligned with f1.sets
  std::vector<std::uint64_t> dj;  // d_1..d_r over f2; empty when f2 is empty
};

namespace detail {

// A member F sits in the first class iff some x in F leaves F\{x} meeting
// every member; g(F) is the smallest such x.
inline int removable_vertex(const Family& f, const VertexSet& member) {
  for (int x : member.elements()) {
    VertexSet reduced = member;
    reduced.erase(x);
    bool meets_all = true;
    for (const VertexSet& other : f.sets) {
      if (!reduced.intersects(other)) {
        meets_all = false;
        break;
      }
    }
    if (meets_all) return x;
  }
  return 0;
}

inline void require_maximal(const Family& f, int jobs) {
  if (binomial_sat(f.n, f.r) > kMaxScanCandidates) return;  // caller-asserted beyond the scan cap
  const MaximalityCheck check = check_maximal_intersecting(f, jobs);
  if (!check.maximal)
    fail(Errc::NotMaximal, "family is not maximal: " + check.addable->to_string() + " is addable");
}

inline PartitionReport partition_impl(const Family& f) {
  PartitionReport rep;
  rep.f1.n = rep.f2.n = f.n;
  rep.f1.r = rep.f2.r = f.r;
  for (const VertexSet& member : f.sets) {
    if (const int g = removable_vertex(f, member)) {
      rep.f1.sets.push_back(member);
      rep.removable.push_back(g);
    } else {
      rep.f2.sets.push_back(member);
    }
  }
  if (!rep.f2.sets.empty()) {
    rep.dj.assign(static_cast<std::size_t>(f.r), 0);
    for (int j = 1; j <= f.r; ++j) {
      std::map<VertexSet, std::uint64_t, CanonicalLess> counts;
      for (const VertexSet& member : rep.f2.sets) {
        const std::vector<int> elems = member.elements();
        for (CombinationGen g(f.r, j); g.valid(); g.next()) {
          VertexSet sub;
          for (int idx : g.elems()) sub.insert(elems[static_cast<std::size_t>(idx - 1)]);
          ++counts[sub];
        }
      }
      std::uint64_t dmax = 0;
      for (const auto& [sub, c] : counts) dmax = std::max(dmax, c);
      rep.dj[static_cast<std::size_t>(j - 1)] = dmax;
    }
  }
  return rep;
}

}  // namespace detail

// Splits a maximal intersecting family by whether a member can shed a vertex
// and still meet everything, and tabulates the j-subset multiplicities of the
// rigid part. Maximality is verified when the scan fits the cap.
inline PartitionReport classify_f1_f2(const Family& f, int jobs = 1) {
  detail::require_maximal(f, jobs);
  return detail::partition_impl(f);
}

struct Claim1Check {
  bool ok = true;
  enum class Violation { none, f2_vs_r_pow_r, f2_vs_r_d1, dj_recursion } violation = Violation::none;
  int j = 0;  // the failing index for dj_recursion
};

// |F2| <= r^r, |F2| <= r*d_1 and d_j <= r*d_{j+1}; vacuous for empty F2.
inline Claim1Check check_claim1(const PartitionReport& rep, int r) {
  Claim1Check out;
  if (rep.f2.sets.empty()) return out;
  const std::uint64_t f2_size = rep.f2.sets.size();
  if (BigUint(f2_size) > BigUint::pow(static_cast<std::uint64_t>(r), static_cast<unsigned>(r))) {
    out.ok = false;
    out.violation = Claim1Check::Violation::f2_vs_r_pow_r;
    return out;
  }
  if (f2_size > static_cast<std::uint64_t>(r) * rep.dj[0]) {
    out.ok = false;
    out.violation = Claim1Check::Violation::f2_vs_r_d1;
    return out;
  }
  for (int j = 1; j < r; ++j) {
    if (rep.dj[static_cast<std::size_t>(j - 1)] >
        static_cast<std::uint64_t>(r) * rep.dj[static_cast<std::size_t>(j)]) {
      out.ok = false;
      out.violation = Claim1Check::Violation::dj_recursion;
      out.j = j;
      return out;
    }
  }
  return out;
}

struct FMapReport {
  int tau = 0;
  int y = 0;  // smallest vertex of minimum degree
  std::uint64_t max_preimage = 0;
  int bound = 0;  // n - r + 1
  bool ok = false;
};

// Builds the map F -> F\{g(F)} u {y} on the flexible part and verifies that
// every image is a member and no image is hit more than n-r+1 times.
// Defined only for covering number below r.
inline FMapReport f_map_check(const Family& f, int jobs = 1) {
  detail::require_maximal(f, jobs);
  FMapReport rep;
  rep.tau = covering_number(f);
  rep.bound = f.n - f.r + 1;
  if (rep.tau == f.r) fail(Errc::TauEqualsR, "covering number equals r; the map is undefined");

  const DegreeProfile prof = degree_profile(f);
  for (int v = 1; v <= f.n; ++v) {
    if (prof.degree(v) == prof.delta_min) {
      rep.y = v;
      break;
    }
  }

  const PartitionReport part = detail::partition_impl(f);
  std::map<VertexSet, std::uint64_t, CanonicalLess> preimages;
  for (std::size_t i = 0; i < part.f1.sets.size(); ++i) {
    VertexSet image = part.f1.sets[i];
    if (!image.contains(rep.y)) {
      image.erase(part.removable[i]);
      image.insert(rep.y);
    }
    if (!f.contains(image))
      fail(Errc::NotMaximal, "image " + image.to_string() + " missing; the family cannot be maximal");
    ++preimages[image];
  }
  for (const auto& [image, count] : preimages) rep.max_preimage = std::max(rep.max_preimage, count);
  rep.ok = rep.max_preimage <= static_cast<std::uint64_t>(rep.bound);
  return rep;
}

}  // namespace ratiolab
