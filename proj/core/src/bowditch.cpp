#include "ptorus/bowditch.hpp"

#include <algorithm>
#include <cmath>

#include "ptorus/errors.hpp"

namespace ptorus {

namespace {

struct Vec {
  long long p, q;
  Vec operator+(const Vec& o) const { return {p + o.p, q + o.q}; }
};

FareySlope slope_of(const Vec& v) { return make_slope(v.p, v.q); }

struct Search {
  const BowditchOptions& opt;
  int small_count = 0;
  bool inconclusive = false;
  bool rejected = false;
  std::string reason;
  std::vector<FareySlope> path;
  std::vector<FareySlope> witness;

  bool elliptic_real(const Complex& t) const {
    return std::abs(t.imag()) <= opt.real_tol &&
           std::abs(t.real()) <= 2.0 - opt.real_tol;
  }

  void reject(std::string why) {
    rejected = true;
    reason = std::move(why);
    witness = path;
  }

  // Explores the triangle across the edge (u, v); its new vertex is u + v
  // and tw is the trace at the reflected vertex u - v.
  void explore(const Vec& u, const Vec& v, const Complex& tu,
               const Complex& tv, const Complex& tw, int depth,
               int small_run) {
    if (rejected) return;
    const Vec m = u + v;
    const Complex tm = tu * tv - tw;
    const double am = std::abs(tm);
    path.push_back(slope_of(m));

    if (elliptic_real(tm)) {
      reject("real trace in (-2, 2) at slope " + to_string(slope_of(m)));
      path.pop_back();
      return;
    }
    if (am < 2.0 - opt.small_margin) {
      ++small_count;
      ++small_run;
      if (small_run >= opt.descent_cap) {
        reject("descending run of " + std::to_string(small_run) +
               " slopes with |trace| < 2");
        path.pop_back();
        return;
      }
      if (small_count > opt.small_slope_cap) {
        reject("more than " + std::to_string(opt.small_slope_cap) +
               " slopes with |trace| < 2");
        path.pop_back();
        return;
      }
    } else {
      small_run = 0;
    }

    // Growth pruning: once the new trace dominates both edge traces and
    // everything sits past 2, the Markov dynamics only increase.
    const double au = std::abs(tu), av = std::abs(tv);
    const bool nondecreasing = am >= std::max(au, av) - 1e-12;
    const bool grown =
        nondecreasing && am > 2.0 + 1e-6 && std::min(au, av) >= 2.0 - 1e-12;
    const bool escaped = nondecreasing && am > opt.trace_bound;
    if (grown || escaped) {
      path.pop_back();
      return;
    }
    if (depth <= 0) {
      inconclusive = true;
      path.pop_back();
      return;
    }
    explore(u, m, tu, tm, tv, depth - 1, small_run);
    explore(m, v, tm, tv, tu, depth - 1, small_run);
    path.pop_back();
  }
};

}  // namespace

BowditchResult bowditch_test(const TraceTriple& base,
                             const BowditchOptions& opt) {
  Search s{opt};

  const struct {
    FareySlope slope;
    Complex t;
  } corners[] = {{{1, 0}, base.x}, {{0, 1}, base.y}, {{1, 1}, base.z}};
  for (const auto& c : corners) {
    if (s.elliptic_real(c.t)) {
      return {BowditchVerdict::Rejected,
              {c.slope},
              "real trace in (-2, 2) at slope " + to_string(c.slope)};
    }
    if (std::abs(c.t) < 2.0 - opt.small_margin) ++s.small_count;
  }

  // The three triangles adjacent to the base triangle (1/0, 0/1, 1/1).
  s.explore({1, 0}, {0, -1}, base.x, base.y, base.z, opt.depth, 0);
  s.explore({0, 1}, {1, 1}, base.y, base.z, base.x, opt.depth, 0);
  s.explore({1, 0}, {1, 1}, base.x, base.z, base.y, opt.depth, 0);

  if (s.rejected) return {BowditchVerdict::Rejected, s.witness, s.reason};
  if (s.inconclusive)
    return {BowditchVerdict::Inconclusive,
            {},
            "depth budget exhausted with live branches"};
  return {BowditchVerdict::NotRejected, {}, "all branches closed by growth"};
}

BowditchResult bowditch_test(const Representation& r,
                             const BowditchOptions& opt) {
  return bowditch_test(trace_triple(r), opt);
}

}  // namespace ptorus
