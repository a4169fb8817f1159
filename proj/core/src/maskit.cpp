#include "ptorus/maskit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ptorus/errors.hpp"
#include "ptorus/parallel.hpp"

namespace ptorus {

namespace {
constexpr Complex kI{0.0, 1.0};
}

Representation maskit_rep(Complex mu) {
  return {MoebiusMap::translation(2.0), MoebiusMap::maskit_u(mu)};
}

TraceTriple maskit_base_triple(Complex mu) {
  return {Complex{2.0}, kI * mu, kI * (mu - 2.0)};
}

Complex maskit_slope_trace(Complex mu, const FareySlope& s) {
  return trace_of_slope(maskit_base_triple(mu), s);
}

TraceDual maskit_slope_trace_dual(Complex mu, const FareySlope& s) {
  DualTriple base{{Complex{2.0}, Complex{0.0}},
                  {kI * mu, kI},
                  {kI * (mu - 2.0), kI}};
  return trace_of_slope(base, s);
}

namespace {

// Damped Newton on tr_s(mu) - target. Returns nullopt when it fails to
// reach the residual tolerance.
std::optional<Complex> newton_root(const FareySlope& s, double target,
                                   Complex guess, const NewtonOptions& opt) {
  Complex mu = guess;
  TraceDual t = maskit_slope_trace_dual(mu, s);
  Complex f = t.v - target;
  double fa = std::abs(f);
  for (int iter = 0; iter < opt.max_iter; ++iter) {
    if (fa < opt.residual_tol) return mu;
    if (std::abs(t.d) < 1e-30) return std::nullopt;
    const Complex step = f / t.d;
    double damp = 1.0;
    for (int trial = 0; trial < 40; ++trial) {
      const Complex mu2 = mu - damp * step;
      const TraceDual t2 = maskit_slope_trace_dual(mu2, s);
      const double fa2 = std::abs(t2.v - target);
      if (fa2 <= fa || damp < 1e-9) {
        mu = mu2;
        t = t2;
        f = t2.v - target;
        fa = fa2;
        break;
      }
      damp *= 0.5;
    }
    if (std::abs(mu) > 1e8) return std::nullopt;
  }
  return fa < opt.residual_tol ? std::optional<Complex>(mu) : std::nullopt;
}

}  // namespace

CuspPoint cusp_solve(const FareySlope& s, Complex guess,
                     const NewtonOptions& opt) {
  const FareySlope slope = make_slope(s.p, s.q);
  struct Candidate {
    Complex mu;
    int sign;
  };
  std::vector<Candidate> valid;
  bool any_root = false;
  for (double target : {-2.0, 2.0}) {
    auto root = newton_root(slope, target, guess, opt);
    if (!root) continue;
    any_root = true;
    if (root->imag() <= tol::upper_half) continue;
    if (opt.guess_radius > 0.0 && std::abs(*root - guess) > opt.guess_radius)
      continue;
    valid.push_back({*root, static_cast<int>(target)});
  }
  if (valid.empty()) {
    if (any_root)
      throw NoUpperHalfPlaneRoot("cusp_solve: no root with Im mu > 0 at slope " +
                                 to_string(slope));
    throw NewtonDiverged("cusp_solve: Newton failed at slope " +
                         to_string(slope));
  }
  const auto best = std::min_element(
      valid.begin(), valid.end(), [&](const Candidate& a, const Candidate& b) {
        return std::abs(a.mu - guess) < std::abs(b.mu - guess);
      });
  const double residual =
      std::abs(maskit_slope_trace(best->mu, slope) -
               static_cast<double>(best->sign));
  return {slope, best->mu, best->sign, residual};
}

double BoundaryTrace::column_max_im(double re, double window) const {
  double r = std::fmod(re, 2.0);
  if (r < 0.0) r += 2.0;
  double col = -std::numeric_limits<double>::infinity();
  double global = col;
  for (const auto& c : cusps) {
    global = std::max(global, c.mu.imag());
    const double dre = std::abs(c.mu.real() - r);
    if (std::min(dre, 2.0 - dre) <= window)
      col = std::max(col, c.mu.imag());
  }
  return std::isinf(col) ? global : col;
}

BoundaryTrace trace_boundary(int q_max, int workers,
                             const NewtonOptions& nopt) {
  if (q_max < 1) throw std::invalid_argument("trace_boundary: q_max must be >= 1");
  NewtonOptions opt = nopt;
  if (opt.guess_radius <= 0.0) opt.guess_radius = 0.75;

  const CuspPoint left = cusp_solve({0, 1}, Complex{0.0, 1.9}, opt);
  const CuspPoint right = cusp_solve({1, 1}, Complex{2.0, 1.9}, opt);

  struct Edge {
    CuspPoint L, R;
  };
  std::vector<Edge> level{{left, right}};
  std::vector<CuspPoint> out{left};

  while (!level.empty()) {
    std::vector<Edge> active;
    for (const auto& e : level)
      if (e.L.slope.q + e.R.slope.q <= q_max) active.push_back(e);
    if (active.empty()) break;

    std::vector<CuspPoint> solved(active.size());
    std::vector<std::string> failures(active.size());
    parallel_for(static_cast<long long>(active.size()), workers,
                 [&](long long i) {
                   const auto& e = active[i];
                   const FareySlope m = make_slope(
                       e.L.slope.p + e.R.slope.p, e.L.slope.q + e.R.slope.q);
                   try {
                     solved[i] = cusp_solve(m, (e.L.mu + e.R.mu) / 2.0, opt);
                   } catch (const std::exception& ex) {
                     failures[i] = to_string(m) + ": " + ex.what();
                   }
                 });
    for (const auto& msg : failures)
      if (!msg.empty())
        throw NewtonDiverged("trace_boundary: cusp solve failed at slope " + msg);

    std::vector<Edge> next;
    next.reserve(active.size() * 2);
    for (size_t i = 0; i < active.size(); ++i) {
      out.push_back(solved[i]);
      next.push_back({active[i].L, solved[i]});
      next.push_back({solved[i], active[i].R});
    }
    level = std::move(next);
  }

  std::sort(out.begin(), out.end(), [](const CuspPoint& a, const CuspPoint& b) {
    return slope_less(a.slope, b.slope);
  });
  double min_im = std::numeric_limits<double>::infinity();
  for (const auto& c : out) min_im = std::min(min_im, c.mu.imag());
  return {q_max, std::move(out), min_im};
}

Membership membership(Complex mu, const BoundaryTrace& boundary,
                      const MembershipOptions& opt) {
  if (mu.imag() <= 0.0) return Membership::Outside;
  BowditchOptions bopt;
  bopt.depth = opt.depth;
  const BowditchResult res = bowditch_test(maskit_base_triple(mu), bopt);
  if (res.verdict == BowditchVerdict::Rejected) return Membership::Outside;
  if (res.verdict == BowditchVerdict::NotRejected &&
      mu.imag() >
          boundary.column_max_im(mu.real(), opt.column_window) + opt.margin)
    return Membership::Inside;
  return Membership::Unknown;
}

const char* to_string(Membership m) {
  switch (m) {
    case Membership::Inside:
      return "inside";
    case Membership::Outside:
      return "outside";
    default:
      return "unknown";
  }
}

CuspPoint rational_end_invariant(const FareySlope& x,
                                 const NewtonOptions& nopt) {
  const FareySlope slope = make_slope(x.p, x.q);
  if (is_infinity(slope))
    throw InvalidSlope("rational_end_invariant: slope 1/0 is the pinched base curve");
  NewtonOptions opt = nopt;
  if (opt.guess_radius <= 0.0) opt.guess_radius = 0.75;

  const long long n = floor_div(slope.p, slope.q);
  const FareySlope s0 = make_slope(slope.p - n * slope.q, slope.q);

  CuspPoint folded;
  if (s0 == FareySlope{0, 1}) {
    folded = cusp_solve(s0, Complex{0.0, 1.9}, opt);
  } else {
    // Stern-Brocot descent toward s0, solving each mediant on the path so
    // every Newton start is a solved-parents midpoint.
    CuspPoint L = cusp_solve({0, 1}, Complex{0.0, 1.9}, opt);
    CuspPoint R = cusp_solve({1, 1}, Complex{2.0, 1.9}, opt);
    for (;;) {
      const FareySlope m =
          make_slope(L.slope.p + R.slope.p, L.slope.q + R.slope.q);
      const CuspPoint cm = cusp_solve(m, (L.mu + R.mu) / 2.0, opt);
      if (m == s0) {
        folded = cm;
        break;
      }
      if (slope_less(s0, m))
        R = cm;
      else
        L = cm;
    }
  }

  const Complex mu = folded.mu + 2.0 * static_cast<double>(n);
  const Complex tr = maskit_slope_trace(mu, slope);
  const int sign = std::abs(tr - 2.0) < std::abs(tr + 2.0) ? 2 : -2;
  return {slope, mu, sign, std::abs(tr - static_cast<double>(sign))};
}

}  // namespace ptorus
