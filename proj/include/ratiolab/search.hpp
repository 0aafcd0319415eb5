#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "family.hpp"
#include "parallel.hpp"
#include "rational.hpp"
#include "verify.hpp"

namespace ratiolab {

// The intersection graph of C([n], r) must fit in one machine word.
inline constexpr int kMaxIntersectionGraphVertices = 64;

namespace detail {

// Bron-Kerbosch with pivoting on bitmask sets. Vertices are the lex ranks of
// the r-sets, so ascending bit order is canonical order.
inline void bron_kerbosch(const std::vector<std::uint64_t>& adj, std::uint64_t r_set,
                          std::uint64_t p_set, std::uint64_t x_set,
                          std::vector<std::uint64_t>& out) {
  if (!p_set && !x_set) {
    out.push_back(r_set);
    return;
  }
  int pivot = -1, best = -1;
  for (std::uint64_t px = p_set | x_set; px;) {
    const int v = std::countr_zero(px);
    px &= px - 1;
    const int c = std::popcount(p_set & adj[static_cast<std::size_t>(v)]);
    if (c > best) {
      best = c;
      pivot = v;
    }
  }
  std::uint64_t cand = p_set & ~adj[static_cast<std::size_t>(pivot)];
  while (cand) {
    const int v = std::countr_zero(cand);
    const std::uint64_t bit = std::uint64_t{1} << v;
    cand &= cand - 1;
    bron_kerbosch(adj, r_set | bit, p_set & adj[static_cast<std::size_t>(v)],
                  x_set & adj[static_cast<std::size_t>(v)], out);
    p_set &= ~bit;
    x_set |= bit;
  }
}

}  // namespace detail

// Every maximal intersecting family of r-subsets of [n], in canonical order:
// these are exactly the maximal cliques of the graph joining intersecting
// r-sets. With require_cover, families not covering [n] are dropped after
// maximality (maximality is always relative to all of C([n], r)).
inline std::vector<Family> enumerate_maximal_families(int n, int r, bool require_cover,
                                                      int jobs = 1) {
  if (r < 1 || r > n || n > VertexSet::kMaxUniverse)
    fail(Errc::BadParameters, "enumeration needs 1 <= r <= n <= 128");
  const std::uint64_t total = binomial_sat(n, r);
  if (total > kMaxIntersectionGraphVertices)
    fail(Errc::TooLargeToEnumerate,
         "C(" + std::to_string(n) + "," + std::to_string(r) + ") exceeds 64 r-sets");
  const int vcount = static_cast<int>(total);

  std::vector<VertexSet> verts;
  verts.reserve(static_cast<std::size_t>(vcount));
  for (CombinationGen g(n, r); g.valid(); g.next())
    verts.push_back(VertexSet::from_elements(g.elems()));

  std::vector<std::uint64_t> adj(static_cast<std::size_t>(vcount), 0);
  for (int i = 0; i < vcount; ++i)
    for (int j = i + 1; j < vcount; ++j)
      if (verts[static_cast<std::size_t>(i)].intersects(verts[static_cast<std::size_t>(j)])) {
        adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        adj[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }

  const std::uint64_t all =
      vcount == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << vcount) - 1;

  std::vector<std::uint64_t> cliques;
  jobs = detail::clamp_jobs(jobs);
  if (jobs == 1) {
    detail::bron_kerbosch(adj, 0, all, 0, cliques);
  } else {
    // Split the root loop: branch i of the pivot-reduced candidate list gets
    // P and X as they stand after the earlier branches, so the branches are
    // independent and their outputs only need concatenating.
    int pivot = -1, best = -1;
    for (int v = 0; v < vcount; ++v) {
      const int c = std::popcount(all & adj[static_cast<std::size_t>(v)]);
      if (c > best) {
        best = c;
        pivot = v;
      }
    }
    std::vector<int> branch_vertices;
    for (std::uint64_t cand = all & ~adj[static_cast<std::size_t>(pivot)]; cand;) {
      branch_vertices.push_back(std::countr_zero(cand));
      cand &= cand - 1;
    }
    std::vector<std::vector<std::uint64_t>> branch_out(branch_vertices.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= branch_vertices.size()) return;
        std::uint64_t p_set = all, x_set = 0;
        for (std::size_t j = 0; j < i; ++j) {
          const std::uint64_t done = std::uint64_t{1} << branch_vertices[j];
          p_set &= ~done;
          x_set |= done;
        }
        const int v = branch_vertices[i];
        detail::bron_kerbosch(adj, std::uint64_t{1} << v,
                              p_set & adj[static_cast<std::size_t>(v)] & ~(std::uint64_t{1} << v),
                              x_set & adj[static_cast<std::size_t>(v)], branch_out[i]);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (auto& part : branch_out) cliques.insert(cliques.end(), part.begin(), part.end());
  }

  std::vector<Family> out;
  out.reserve(cliques.size());
  const VertexSet universe = VertexSet::full(n);
  for (const std::uint64_t mask : cliques) {
    Family f;
    f.n = n;
    f.r = r;
    VertexSet covered;
    for (std::uint64_t m = mask; m;) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      f.sets.push_back(verts[static_cast<std::size_t>(v)]);
      covered |= verts[static_cast<std::size_t>(v)];
    }
    if (require_cover && covered != universe) continue;
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), family_canonical_less);
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i] == out[i - 1]) throw std::logic_error("duplicate maximal clique");
  return out;
}

struct ExtremalReport {
  int n = 0;
  int r = 0;
  bool require_cover = true;
  std::uint64_t family_count = 0;
  Rational m;
  Family m_witness;
  Rational M;
  Family M_witness;
};

// Exact min and max of the degree ratio over all enumerated families, with
// the canonically first witness for each. Families with an uncovered vertex
// (possible only without the cover filter) have no ratio and are skipped.
inline ExtremalReport extremal_ratios(int n, int r, bool require_cover, int jobs = 1) {
  const std::vector<Family> families = enumerate_maximal_families(n, r, require_cover, jobs);
  ExtremalReport rep;
  rep.n = n;
  rep.r = r;
  rep.require_cover = require_cover;
  rep.family_count = families.size();
  bool found = false;
  for (const Family& f : families) {
    const DegreeProfile prof = degree_profile(f);
    if (!prof.ratio) continue;
    const Rational& ratio = *prof.ratio;
    if (!found) {
      rep.m = rep.M = ratio;
      rep.m_witness = rep.M_witness = f;
      found = true;
      continue;
    }
    if (ratio < rep.m) {
      rep.m = ratio;
      rep.m_witness = f;
    }
    if (ratio > rep.M) {
      rep.M = ratio;
      rep.M_witness = f;
    }
  }
  if (!found) fail(Errc::NoFamilies, "no family with every vertex covered");
  return rep;
}

}  // namespace ratiolab
