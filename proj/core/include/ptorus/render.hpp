#pragma once

#include <cstdint>
#include <vector>

#include "ptorus/moebius.hpp"

namespace ptorus {

struct RenderTarget {
  std::vector<MoebiusMap> generators;
  int max_depth = 8;
  int width = 512;
  int height = 512;
  double x0 = -2.0, x1 = 4.0, y0 = -2.0, y1 = 2.0;
  long long point_budget = 1'000'000;
  double contraction_threshold = 1e-4;
};

struct RenderResult {
  std::vector<Complex> points;          // orbit points, DFS order
  std::vector<std::uint32_t> histogram; // width x height hit counts
  long long in_box = 0;
};

/// Depth-first enumeration of reduced words in the generators, emitting
/// images of the tracked base points (finite fixed points of the
/// generators and their commutator). A branch stops early once the word's
/// derivative at the base points contracts below the threshold. Output is
/// deterministic for a fixed target; workers only split the top-level
/// branches. Throws EmptyOutput when no finite point lands in the box.
RenderResult render_limit_set(const RenderTarget& target, int workers = 1);

}  // namespace ptorus
