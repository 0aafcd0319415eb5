#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "ratiolab/combinatorics.hpp"
#include "ratiolab/family.hpp"
#include "ratiolab/verify.hpp"
#include "ratiolab/vertex_set.hpp"

using namespace ratiolab;

namespace {

Family triangle(int n) { return make_family(n, 2, {{1, 2}, {1, 3}, {2, 3}}); }

// the seven lines of the classical order-2 plane on [7], written out by hand
const std::vector<std::vector<int>> kFanoLines = {
    {1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};

Family fano() { return make_family(7, 3, kFanoLines); }

// brute-force transversal search by subset enumeration, independent of the
// branching implementation
int covering_number_oracle(const Family& f) {
  const std::vector<int> universe = [&] {
    VertexSet u;
    for (const auto& s : f.sets) u |= s;
    return u.elements();
  }();
  for (int k = 0; k <= static_cast<int>(universe.size()); ++k) {
    for (CombinationGen g(static_cast<int>(universe.size()), k); g.valid(); g.next()) {
      VertexSet t;
      for (int idx : g.elems()) t.insert(universe[static_cast<std::size_t>(idx - 1)]);
      bool hits_all = true;
      for (const auto& s : f.sets)
        if (!s.intersects(t)) {
          hits_all = false;
          break;
        }
      if (hits_all) return k;
    }
  }
  return static_cast<int>(universe.size());
}

}  // namespace

TEST_CASE("VertexSet basics") {
  VertexSet s = VertexSet::of({3, 1, 128});
  CHECK(s.size() == 3);
  CHECK(s.contains(1));
  CHECK(s.contains(128));
  CHECK_FALSE(s.contains(2));
  CHECK(s.min_element() == 1);
  CHECK(s.elements() == std::vector<int>{1, 3, 128});
  s.erase(1);
  CHECK(s.elements() == std::vector<int>{3, 128});
  CHECK_THROWS_AS(s.insert(129), Error);
  CHECK_THROWS_AS(s.insert(0), Error);

  CHECK(VertexSet::full(7).size() == 7);
  CHECK(VertexSet::full(128).size() == 128);
  CHECK(VertexSet::full(64).elements().back() == 64);

  const VertexSet a = VertexSet::of({1, 2}), b = VertexSet::of({3, 4});
  CHECK_FALSE(a.intersects(b));
  CHECK((a | b).size() == 4);
  CHECK((a & b).empty());
  CHECK((VertexSet::of({1, 2, 3}) - VertexSet::of({2})).elements() == std::vector<int>{1, 3});
  CHECK(a.subset_of(VertexSet::of({1, 2, 5})));
  CHECK_FALSE(VertexSet::of({1, 2, 5}).subset_of(a));
}

TEST_CASE("canonical order is lexicographic on sorted element lists") {
  CHECK(canonical_less(VertexSet::of({1, 4}), VertexSet::of({2, 3})));
  CHECK(canonical_less(VertexSet::of({1, 2}), VertexSet::of({1, 3})));
  CHECK(canonical_less(VertexSet::of({1, 2, 5}), VertexSet::of({1, 3, 4})));
  CHECK_FALSE(canonical_less(VertexSet::of({2, 3}), VertexSet::of({1, 4})));
  CHECK(VertexSet::canonical_compare(VertexSet::of({2, 3}), VertexSet::of({2, 3})) == 0);
  // spans both words
  CHECK(canonical_less(VertexSet::of({1, 100}), VertexSet::of({2, 80})));
  CHECK(canonical_less(VertexSet::of({70, 80}), VertexSet::of({70, 81})));

  // against a sorted-list oracle on random equal-size pairs
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 2000; ++i) {
    VertexSet x, y;
    while (x.size() < 4) x.insert(static_cast<int>(rng() % 128 + 1));
    while (y.size() < 4) y.insert(static_cast<int>(rng() % 128 + 1));
    CHECK(canonical_less(x, y) == (x.elements() < y.elements()));
  }
}

TEST_CASE("make_family validates and canonicalizes") {
  const Family t = triangle(3);
  CHECK(t.size() == 3);
  CHECK(t.n == 3);
  CHECK(t.r == 2);

  CHECK_THROWS_AS(make_family(5, 2, {{1, 2}, {1, 2}}), Error);
  CHECK_THROWS_AS(make_family(130, 2, {{1, 2}}), Error);
  CHECK_THROWS_AS(make_family(5, 2, {{1, 2, 3}}), Error);
  CHECK_THROWS_AS(make_family(5, 2, {{1, 1}}), Error);
  CHECK_THROWS_AS(make_family(5, 2, {{1, 6}}), Error);
  CHECK_THROWS_AS(make_family(5, 0, {}), Error);

  try {
    make_family(5, 2, {{1, 2}, {2, 1}});
    FAIL("duplicate not caught");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DuplicateSet);
  }

  // canonicalization: any permutation of the sets yields the same order
  std::vector<std::vector<int>> lines = kFanoLines;
  std::mt19937_64 rng(7);
  const Family reference = fano();
  for (int i = 0; i < 20; ++i) {
    std::shuffle(lines.begin(), lines.end(), rng);
    for (auto& l : lines) std::shuffle(l.begin(), l.end(), rng);
    CHECK(make_family(7, 3, lines) == reference);
  }
}

TEST_CASE("degree profile") {
  const DegreeProfile p = degree_profile(fano());
  CHECK(p.delta_max == 3);
  CHECK(p.delta_min == 3);
  CHECK(p.ratio->to_string() == "1/1");
  for (int v = 1; v <= 7; ++v) CHECK(p.degree(v) == 3);

  const DegreeProfile t = degree_profile(triangle(5));
  CHECK(t.delta_max == 2);
  CHECK(t.delta_min == 0);
  CHECK_FALSE(t.ratio.has_value());
  CHECK_THROWS_AS(t.ratio_checked(), Error);

  // ratio 1 exactly when all degrees agree
  for (const Family& f : {fano(), triangle(3), make_family(5, 2, {{1, 2}, {1, 3}, {4, 5}})}) {
    const DegreeProfile prof = degree_profile(f);
    if (prof.ratio) {
      CHECK(*prof.ratio >= Rational(1, 1));
      CHECK((*prof.ratio == Rational(1, 1)) == (prof.delta_max == prof.delta_min));
    }
  }

  // handshake identity on random families
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 200; ++iter) {
    const int n = 3 + static_cast<int>(rng() % 10);
    const int r = 1 + static_cast<int>(rng() % std::min(4, n));
    std::vector<VertexSet> sets;
    for (int i = 0; i < 6; ++i) {
      VertexSet s;
      while (s.size() < r) s.insert(static_cast<int>(rng() % n + 1));
      if (std::find(sets.begin(), sets.end(), s) == sets.end()) sets.push_back(s);
    }
    const Family f = family_from_sets(n, r, sets);
    const DegreeProfile prof = degree_profile(f);
    std::uint64_t total = 0;
    for (const std::uint64_t d : prof.degrees) total += d;
    CHECK(total == static_cast<std::uint64_t>(r) * f.size());
  }
}

TEST_CASE("is_intersecting and witnesses") {
  CHECK(is_intersecting(triangle(3)));
  CHECK(is_intersecting(fano()));
  const Family bad = make_family(4, 2, {{1, 2}, {3, 4}});
  const auto witness = find_disjoint_pair(bad);
  REQUIRE(witness.has_value());
  CHECK(witness->first == VertexSet::of({1, 2}));
  CHECK(witness->second == VertexSet::of({3, 4}));
}

TEST_CASE("maximality verifier") {
  CHECK(is_maximal_intersecting(fano()));
  CHECK(is_maximal_intersecting(triangle(5)));  // no 2-set meets all three edges

  // a non-maximal family: two sets sharing a point on a large universe
  const Family open_star = make_family(6, 2, {{1, 2}, {1, 3}});
  const MaximalityCheck check = check_maximal_intersecting(open_star);
  CHECK_FALSE(check.maximal);
  REQUIRE(check.addable.has_value());
  // witness validity: adding it keeps the family intersecting
  std::vector<VertexSet> extended = open_star.sets;
  extended.push_back(*check.addable);
  CHECK(is_intersecting(family_from_sets(6, 2, extended)));
  // lex-least witness: {1,4} meets both members and precedes every other candidate
  CHECK(*check.addable == VertexSet::of({1, 4}));

  // precondition is checked
  CHECK_THROWS_AS(is_maximal_intersecting(make_family(4, 2, {{1, 2}, {3, 4}})), Error);

  // refuses oversized scans: C(128,11) is astronomically past the cap
  std::vector<std::vector<int>> one = {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}};
  try {
    is_maximal_intersecting(make_family(128, 11, one));
    FAIL("cap not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooLargeToVerify);
  }
}

TEST_CASE("maximality verifier is independent of the worker count") {
  const Family f = triangle(5);
  const Family notmax = make_family(9, 3, {{1, 2, 3}, {1, 2, 4}, {2, 3, 4}});
  for (int jobs : {1, 2, 4, 7}) {
    CHECK(is_maximal_intersecting(f, jobs));
    const auto check = check_maximal_intersecting(notmax, jobs);
    CHECK_FALSE(check.maximal);
    CHECK(*check.addable == *check_maximal_intersecting(notmax, 1).addable);
  }
}

TEST_CASE("covers_universe") {
  CHECK(covers_universe(fano()));
  CHECK_FALSE(covers_universe(triangle(5)));
  CHECK(covers_universe(triangle(3)));
}

TEST_CASE("covering number") {
  CHECK(covering_number(fano()) == 3);
  CHECK(covering_number(triangle(5)) == 2);
  CHECK(covering_number(make_family(7, 3, {{1, 2, 3}})) == 1);
  CHECK_THROWS_AS(covering_number(Family{5, 2, {}}), Error);

  // against the subset-enumeration oracle on assorted small families
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 60; ++iter) {
    const int n = 4 + static_cast<int>(rng() % 4);
    const int r = 2 + static_cast<int>(rng() % 2);
    std::vector<VertexSet> sets;
    for (int i = 0; i < 5; ++i) {
      VertexSet s;
      while (s.size() < r) s.insert(static_cast<int>(rng() % n + 1));
      if (std::find(sets.begin(), sets.end(), s) == sets.end()) sets.push_back(s);
    }
    const Family f = family_from_sets(n, r, sets);
    CHECK(covering_number(f) == covering_number_oracle(f));
  }
}

TEST_CASE("intersecting families obey the degree floor") {
  // delta_max >= ceil(|F| / r) whenever the family is intersecting
  const auto check_floor = [](const Family& f) {
    const DegreeProfile p = degree_profile(f);
    const std::uint64_t size = f.size();
    CHECK(p.delta_max >=
          (size + static_cast<std::uint64_t>(f.r) - 1) / static_cast<std::uint64_t>(f.r));
  };
  check_floor(fano());
  check_floor(triangle(5));
  check_floor(make_family(6, 3, {{1, 2, 3}, {1, 2, 4}, {3, 4, 5}, {1, 3, 6}}));
}
