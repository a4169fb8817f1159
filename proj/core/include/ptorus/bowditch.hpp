#pragma once

#include <string>
#include <vector>

#include "ptorus/representation.hpp"

namespace ptorus {

struct BowditchOptions {
  int depth = 24;              // Farey-tree exploration depth
  double trace_bound = 10.0;   // traces past this are treated as escaped
  double small_margin = tol::elliptic_margin;  // |tr| < 2 - margin is "small"
  double real_tol = 1e-8;      // |Im tr| below this treats the trace as real
  int descent_cap = 12;        // consecutive small mediants along one path
  int small_slope_cap = 64;    // total slopes with small trace
};

enum class BowditchVerdict { NotRejected, Rejected, Inconclusive };

struct BowditchResult {
  BowditchVerdict verdict = BowditchVerdict::Inconclusive;
  std::vector<FareySlope> witness;  // slope path ending at the violation
  std::string reason;
};

/// Trace-based discreteness filter over the Farey triangulation. Walks the
/// tree from the base triangle (1/0, 0/1, 1/1), descending toward slopes
/// with small |trace| and pruning branches whose traces grow monotonically
/// past the bound. Rejects on a real trace in the open elliptic interval
/// (-2, 2), or on evidence of infinitely many small traces (a long
/// descending run of |tr| < 2, or too many small-trace slopes in total).
/// NotRejected means every branch was closed off by growth; it is a
/// heuristic, not a discreteness certificate. Inconclusive is reported
/// when the depth budget ran out with live branches.
BowditchResult bowditch_test(const TraceTriple& base,
                             const BowditchOptions& opt = {});
BowditchResult bowditch_test(const Representation& r,
                             const BowditchOptions& opt = {});

}  // namespace ptorus
