#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ratiolab/analysis.hpp"
#include "ratiolab/constructions.hpp"
#include "ratiolab/search.hpp"

using namespace ratiolab;

namespace {

Family star_at(int n, int center) {
  std::vector<VertexSet> sets;
  for (int v = 1; v <= n; ++v)
    if (v != center) sets.push_back(VertexSet::of({center, v}));
  return family_from_sets(n, 2, sets);
}

}  // namespace

TEST_CASE("enumeration at (5,2): stars with cover, triangles join without") {
  const std::vector<Family> covered = enumerate_maximal_families(5, 2, true);
  CHECK(covered.size() == 5);
  std::vector<Family> expected;
  for (int c = 1; c <= 5; ++c) expected.push_back(star_at(5, c));
  std::sort(expected.begin(), expected.end(), family_canonical_less);
  CHECK(covered == expected);

  const std::vector<Family> all = enumerate_maximal_families(5, 2, false);
  CHECK(all.size() == 15);  // 5 stars + C(5,3) triangles
  for (const Family& f : all) {
    CHECK(is_intersecting(f));
    CHECK(is_maximal_intersecting(f));
  }
  // no duplicates under canonical order
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i] != all[i - 1]);
}

TEST_CASE("enumeration at (4,2) and (6,2) matches the complement-pair counts") {
  // n = 2r: one set per complementary pair, and any two non-complementary
  // 2-sets of [4] meet, so all 2^3 selections are maximal
  CHECK(enumerate_maximal_families(4, 2, false).size() == 8);
  CHECK(enumerate_maximal_families(4, 2, true).size() == 4);  // the four stars
  const std::vector<Family> at4 = enumerate_maximal_families(4, 2, true);
  CHECK(std::find(at4.begin(), at4.end(), star_family(4, 2)) != at4.end());

  // maximal intersecting 2-set families are full stars or triangles
  CHECK(enumerate_maximal_families(6, 2, false).size() == 26);  // 6 + C(6,3)
  CHECK(enumerate_maximal_families(6, 2, true).size() == 6);
}

TEST_CASE("enumeration at (7,3) contains the named families") {
  const std::vector<Family> families = enumerate_maximal_families(7, 3, true);
  CHECK(std::find(families.begin(), families.end(), star_family(7, 3)) != families.end());
  const Family fano = multi_plane_family(MultiPlaneParams{1, 2, 0});
  CHECK(std::find(families.begin(), families.end(), fano) != families.end());

  // labeled copies of the order-2 plane: 7-member families, every vertex on
  // 3 members, any two members meeting in exactly one vertex
  std::size_t plane_like = 0;
  for (const Family& f : families) {
    if (f.size() != 7) continue;
    const DegreeProfile p = degree_profile(f);
    if (p.delta_max != 3 || p.delta_min != 3) continue;
    bool pairwise_one = true;
    for (std::size_t i = 0; i < f.sets.size() && pairwise_one; ++i)
      for (std::size_t j = i + 1; j < f.sets.size(); ++j)
        if ((f.sets[i] & f.sets[j]).size() != 1) {
          pairwise_one = false;
          break;
        }
    if (pairwise_one) ++plane_like;
  }
  CHECK(plane_like == 30);  // 7! / 168
}

TEST_CASE("every covered family obeys the ratio floor and the star-size cap") {
  for (const auto& [n, r] : std::vector<std::pair<int, int>>{{5, 2}, {6, 2}, {6, 3}, {7, 3}}) {
    const Rational floor = bounds(n, r).m_lower;
    const BigUint star_size = binomial(n - 1, r - 1);  // no intersecting family is bigger
    for (const Family& f : enumerate_maximal_families(n, r, true)) {
      CHECK(*degree_profile(f).ratio >= floor);
      if (2 * r <= n) CHECK(BigUint(f.size()) <= star_size);
    }
  }
}

TEST_CASE("sampled families from the (7,3) stream verify as maximal") {
  const std::vector<Family> families = enumerate_maximal_families(7, 3, false);
  for (std::size_t i = 0; i < families.size(); i += 37) {
    CHECK(is_intersecting(families[i]));
    CHECK(is_maximal_intersecting(families[i]));
  }
}

TEST_CASE("enumeration is independent of the worker count") {
  const std::vector<Family> one = enumerate_maximal_families(7, 3, false, 1);
  for (int jobs : {2, 4}) CHECK(enumerate_maximal_families(7, 3, false, jobs) == one);
}

TEST_CASE("enumeration cap") {
  try {
    enumerate_maximal_families(10, 4, true);
    FAIL("expected TooLargeToEnumerate");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooLargeToEnumerate);
  }
  CHECK_THROWS_AS(enumerate_maximal_families(5, 0, true), Error);
}

TEST_CASE("extremal ratios at (5,2)") {
  const ExtremalReport rep = extremal_ratios(5, 2, true);
  CHECK(rep.family_count == 5);
  CHECK(rep.m.to_string() == "4/1");
  CHECK(rep.M.to_string() == "4/1");
  CHECK(rep.m_witness == star_family(5, 2));
  CHECK(rep.M_witness == star_family(5, 2));
}

TEST_CASE("extremal ratios at (7,3)") {
  const ExtremalReport rep = extremal_ratios(7, 3, true);
  CHECK(rep.m.to_string() == "1/1");
  // the minimizing witness is a regular 7-member family
  CHECK(rep.m_witness.size() == 7);
  const DegreeProfile p = degree_profile(rep.m_witness);
  CHECK(p.delta_max == 3);
  CHECK(p.delta_min == 3);
  // the star reaches ratio 3, so the maximum is at least that
  CHECK(rep.M >= Rational(3, 1));
  CHECK(rep.m <= rep.M);
}

TEST_CASE("extremal report is deterministic across worker counts") {
  const ExtremalReport a = extremal_ratios(7, 3, true, 1);
  const ExtremalReport b = extremal_ratios(7, 3, true, 4);
  CHECK(a.family_count == b.family_count);
  CHECK(a.m == b.m);
  CHECK(a.M == b.M);
  CHECK(a.m_witness == b.m_witness);
  CHECK(a.M_witness == b.M_witness);
}

TEST_CASE("no-cover extremal ratios skip uncovered families but count them") {
  const ExtremalReport rep = extremal_ratios(5, 2, false);
  CHECK(rep.family_count == 15);
  CHECK(rep.m.to_string() == "4/1");  // triangles have uncovered vertices, no ratio
  CHECK(rep.M.to_string() == "4/1");
}
