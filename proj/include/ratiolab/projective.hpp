#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "errors.hpp"
#include "family.hpp"
#include "parallel.hpp"
#include "vertex_set.hpp"

namespace ratiolab {

inline bool is_prime(int x) {
  if (x < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

// Point-line incidence structure of the classical plane of prime order p,
// embedded on the labels [offset, offset + p^2 + p].
struct ProjectivePlane {
  int order = 0;   // p
  int offset = 1;  // label of point index 0
  int point_count = 0;
  std::vector<std::array<int, 3>> coords;       // normalized point coordinates
  std::vector<VertexSet> lines;                 // label sets, canonical order by index
  std::vector<std::vector<int>> line_points;    // point indices per line
  std::vector<std::vector<int>> lines_through;  // line indices per point

  int label(int point_index) const { return offset + point_index; }
  VertexSet point_labels() const {
    VertexSet s;
    for (int i = 0; i < point_count; ++i) s.insert(label(i));
    return s;
  }
};

// Points and lines are the projective triples over the p-element field,
// normalized so the first nonzero coordinate is 1 and enumerated in
// lexicographic order of (a, b, c); this fixes the labeling across runs.
// A point lies on a line iff the dot product of their triples vanishes mod p.
inline ProjectivePlane build_plane(int p, int offset) {
  if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
  const int count = p * p + p + 1;
  if (offset < 1 || offset + count - 1 > VertexSet::kMaxUniverse)
    fail(Errc::UniverseTooLarge,
         "plane of order " + std::to_string(p) + " at offset " + std::to_string(offset) +
             " does not fit in [1,128]");

  ProjectivePlane plane;
  plane.order = p;
  plane.offset = offset;
  plane.point_count = count;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c) {
        const int first = a != 0 ? a : (b != 0 ? b : c);
        if (first != 1) continue;
        plane.coords.push_back({a, b, c});
      }
  if (static_cast<int>(plane.coords.size()) != count)
    throw std::logic_error("projective point enumeration is off");

  plane.lines.resize(static_cast<std::size_t>(count));
  plane.line_points.resize(static_cast<std::size_t>(count));
  plane.lines_through.resize(static_cast<std::size_t>(count));
  for (int li = 0; li < count; ++li) {
    const auto& l = plane.coords[static_cast<std::size_t>(li)];
    for (int pi = 0; pi < count; ++pi) {
      const auto& pt = plane.coords[static_cast<std::size_t>(pi)];
      if ((l[0] * pt[0] + l[1] * pt[1] + l[2] * pt[2]) % p == 0) {
        plane.lines[static_cast<std::size_t>(li)].insert(plane.label(pi));
        plane.line_points[static_cast<std::size_t>(li)].push_back(pi);
        plane.lines_through[static_cast<std::size_t>(pi)].push_back(li);
      }
    }
  }

  // Axioms are asserted eagerly at build time; the pair scan is O(p^4).
  for (int i = 0; i < count; ++i) {
    if (plane.lines[static_cast<std::size_t>(i)].size() != p + 1)
      throw std::logic_error("plane axiom violated: line size");
    if (static_cast<int>(plane.lines_through[static_cast<std::size_t>(i)].size()) != p + 1)
      throw std::logic_error("plane axiom violated: point degree");
  }
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j) {
      const VertexSet meet =
          plane.lines[static_cast<std::size_t>(i)] & plane.lines[static_cast<std::size_t>(j)];
      if (meet.size() != 1) throw std::logic_error("plane axiom violated: line meet");
      int common = 0;
      for (int li : plane.lines_through[static_cast<std::size_t>(i)])
        for (int lj : plane.lines_through[static_cast<std::size_t>(j)])
          if (li == lj) ++common;
      if (common != 1) throw std::logic_error("plane axiom violated: point join");
    }
  return plane;
}

inline bool is_blocking_set(const ProjectivePlane& plane, const VertexSet& b) {
  if (!b.subset_of(plane.point_labels()))
    fail(Errc::BadParameters, "blocking-set candidate has vertices outside the plane");
  for (const VertexSet& l : plane.lines)
    if (!l.intersects(b)) return false;
  return true;
}

struct BlokhuisReport {
  int p = 0;
  int bound = 0;  // largest subset size checked, i.e. the biggest size < 3(p+1)/2
  std::uint64_t checked = 0;
  std::uint64_t blocking_sets = 0;
  std::vector<std::vector<int>> violations;  // blocking sets containing no line, as labels
};

// Enumerates every point subset of size < 3(p+1)/2 and reports the blocking
// sets among them that contain no full line. For prime order the list must
// come back empty.
inline BlokhuisReport verify_blokhuis(const ProjectivePlane& plane, int jobs = 1) {
  const int p = plane.order;
  const int points = plane.point_count;
  const int bound = (3 * (p + 1) - 1) / 2;
  if (binomial_sat(points, bound) > kMaxScanCandidates || points > 64)
    fail(Errc::TooLargeToVerify, "Blokhuis scan too large for order " + std::to_string(p));

  std::vector<std::uint64_t> line_masks;  // over point indices 0..points-1
  line_masks.reserve(plane.line_points.size());
  for (const auto& pts : plane.line_points) {
    std::uint64_t m = 0;
    for (int pi : pts) m |= std::uint64_t{1} << pi;
    line_masks.push_back(m);
  }

  BlokhuisReport report;
  report.p = p;
  report.bound = bound;

  for (int size = 0; size <= bound; ++size) {
    const std::uint64_t layer = binomial_sat(points, size);
    report.checked += layer;
    const std::uint64_t nblocks = 64;
    const std::uint64_t block = std::max<std::uint64_t>(1, (layer + nblocks - 1) / nblocks);
    struct BlockOut {
      std::uint64_t blocking = 0;
      std::vector<std::uint64_t> violations;
    };
    std::vector<BlockOut> outs(static_cast<std::size_t>((layer + block - 1) / block));
    detail::parallel_blocks(layer, block, jobs, [&](std::uint64_t bi, std::uint64_t lo,
                                                    std::uint64_t hi) {
      BlockOut& out = outs[static_cast<std::size_t>(bi)];
      CombinationGen gen(points, size, lo);
      for (std::uint64_t rank = lo; rank < hi; ++rank, gen.next()) {
        std::uint64_t mask = 0;
        for (int idx : gen.elems()) mask |= std::uint64_t{1} << (idx - 1);
        bool blocking = true;
        for (const std::uint64_t lm : line_masks) {
          if (!(mask & lm)) {
            blocking = false;
            break;
          }
        }
        if (!blocking) continue;
        ++out.blocking;
        bool has_line = false;
        for (const std::uint64_t lm : line_masks) {
          if ((mask & lm) == lm) {
            has_line = true;
            break;
          }
        }
        if (!has_line) out.violations.push_back(mask);
      }
    });
    for (const BlockOut& out : outs) {
      report.blocking_sets += out.blocking;
      for (const std::uint64_t mask : out.violations) {
        std::vector<int> labels;
        for (int i = 0; i < points; ++i)
          if (mask & (std::uint64_t{1} << i)) labels.push_back(plane.label(i));
        report.violations.push_back(std::move(labels));
      }
    }
  }
  return report;
}

}  // namespace ratiolab
