#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#include "combinatorics.hpp"
#include "family.hpp"
#include "parallel.hpp"

namespace ratiolab {

struct DisjointPair {
  VertexSet first, second;
};

inline std::optional<DisjointPair> find_disjoint_pair(const Family& f) {
  for (std::size_t i = 0; i < f.sets.size(); ++i)
    for (std::size_t j = i + 1; j < f.sets.size(); ++j)
      if (!f.sets[i].intersects(f.sets[j])) return DisjointPair{f.sets[i], f.sets[j]};
  return std::nullopt;
}

inline bool is_intersecting(const Family& f) { return !find_disjoint_pair(f).has_value(); }

inline bool covers_universe(const Family& f) {
  VertexSet seen;
  for (const VertexSet& s : f.sets) seen |= s;
  return seen == VertexSet::full(f.n);
}

struct MaximalityCheck {
  bool maximal = false;
  std::optional<VertexSet> addable;  // lex-least r-set that still meets every member
};

namespace detail {

constexpr std::uint64_t kNoWitness = ~std::uint64_t{0};

// Scans candidate ranks [lo, hi) in lex order; returns the first rank whose
// r-set is outside the family yet meets every member, or kNoWitness.
// stop_at lets workers bail out once a smaller-rank witness is known.
inline std::uint64_t scan_addable(const Family& f, std::uint64_t lo, std::uint64_t hi,
                                  const std::atomic<std::uint64_t>* stop_at = nullptr) {
  CombinationGen gen(f.n, f.r, lo);
  std::size_t member_idx = 0;
  {
    const VertexSet first = VertexSet::from_elements(gen.elems());
    member_idx = static_cast<std::size_t>(
        std::lower_bound(f.sets.begin(), f.sets.end(), first, CanonicalLess{}) - f.sets.begin());
  }
  for (std::uint64_t rank = lo; rank < hi; ++rank, gen.next()) {
    if (stop_at && (rank & 0xfff) == 0 && stop_at->load(std::memory_order_relaxed) < rank)
      return kNoWitness;
    const VertexSet g = VertexSet::from_elements(gen.elems());
    if (member_idx < f.sets.size() && f.sets[member_idx] == g) {
      ++member_idx;  // candidates and members share the lex order
      continue;
    }
    bool meets_all = true;
    for (const VertexSet& m : f.sets) {
      if (!m.intersects(g)) {
        meets_all = false;
        break;
      }
    }
    if (meets_all) return rank;
  }
  return kNoWitness;
}

}  // namespace detail

// Full scan of C([n], r): F is maximal iff no r-set outside F meets every
// member. On failure reports the lex-least addable witness regardless of the
// worker count.
inline MaximalityCheck check_maximal_intersecting(const Family& f, int jobs = 1) {
  if (auto d = find_disjoint_pair(f))
    fail(Errc::NotIntersecting, "members " + d->first.to_string() + " and " +
                                    d->second.to_string() + " are disjoint");
  const std::uint64_t total = binomial_sat(f.n, f.r);
  if (total > kMaxScanCandidates)
    fail(Errc::TooLargeToVerify, "C(" + std::to_string(f.n) + "," + std::to_string(f.r) +
                                     ") exceeds the scan limit");
  jobs = detail::clamp_jobs(jobs);
  std::uint64_t best = detail::kNoWitness;
  if (jobs == 1) {
    best = detail::scan_addable(f, 0, total);
  } else {
    std::atomic<std::uint64_t> shared_best{detail::kNoWitness};
    const std::uint64_t block =
        std::max<std::uint64_t>(4096, total / (static_cast<std::uint64_t>(jobs) * 16));
    detail::parallel_blocks(total, block, jobs, [&](std::uint64_t, std::uint64_t lo,
                                                    std::uint64_t hi) {
      if (shared_best.load(std::memory_order_relaxed) < lo) return;
      const std::uint64_t found = detail::scan_addable(f, lo, hi, &shared_best);
      if (found == detail::kNoWitness) return;
      std::uint64_t cur = shared_best.load(std::memory_order_relaxed);
      while (found < cur && !shared_best.compare_exchange_weak(cur, found)) {
      }
    });
    best = shared_best.load();
  }
  MaximalityCheck out;
  out.maximal = best == detail::kNoWitness;
  if (!out.maximal)
    out.addable = VertexSet::from_elements(CombinationGen(f.n, f.r, best).elems());
  return out;
}

inline bool is_maximal_intersecting(const Family& f, int jobs = 1) {
  return check_maximal_intersecting(f, jobs).maximal;
}

namespace detail {

// Depth-bounded transversal search: branch on the vertices of the first
// member missed by the current choice.
inline bool has_transversal(const Family& f, const VertexSet& chosen, int budget) {
  const VertexSet* unhit = nullptr;
  for (const VertexSet& m : f.sets) {
    if (!m.intersects(chosen)) {
      unhit = &m;
      break;
    }
  }
  if (!unhit) return true;
  if (budget == 0) return false;
  for (int v : unhit->elements()) {
    VertexSet next = chosen;
    next.insert(v);
    if (has_transversal(f, next, budget - 1)) return true;
  }
  return false;
}

}  // namespace detail

// Exact covering number: smallest vertex set meeting every member.
inline int covering_number(const Family& f) {
  if (f.sets.empty()) fail(Errc::BadParameters, "covering number needs a nonempty family");
  for (int k = 0;; ++k)
    if (detail::has_transversal(f, VertexSet{}, k)) return k;
}

}  // namespace ratiolab
