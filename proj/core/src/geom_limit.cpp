#include "ptorus/geom_limit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ptorus/errors.hpp"
#include "ptorus/parallel.hpp"

namespace ptorus {

namespace {
constexpr Complex kI{0.0, 1.0};
constexpr double kPi = 3.14159265358979323846;

// Translation value of a matrix expected to be (projectively) T_z.
// Invariant under the sign ambiguity.
Complex translation_value(const MoebiusMap& g) { return g.b() / g.a(); }

bool is_translation(const MoebiusMap& g, double tolerance) {
  return std::abs(g.c()) <= tolerance && std::abs(g.a() - g.d()) <= tolerance;
}

}  // namespace

DrilledGroup drilled_group(Complex mu, Complex nu) {
  const Complex nubar = std::conj(nu);
  return {MoebiusMap::translation(2.0), MoebiusMap::maskit_u(mu),
          MoebiusMap::maskit_u(nubar), MoebiusMap::translation(2.0),
          MoebiusMap::translation(mu - nubar)};
}

Complex SyntheticFamily::lambda(long long n) const {
  const double mn = static_cast<double>(m.term(n));
  return (2.0 * kPi * kI + kPi * kI * w / mn) / mn;
}

MoebiusMap SyntheticFamily::member(long long n) const {
  const Complex half = std::exp(lambda(n) / 2.0);
  // Affine map e^{lambda} z + 2 as a det-1 matrix.
  return MoebiusMap::from_entries(half, 2.0 / half, 0.0, 1.0 / half);
}

std::vector<PowerResidualRow> power_limit_check(
    const SyntheticFamily& fam, const std::vector<long long>& n_list) {
  if (std::abs(fam.w) < 1e-15)
    throw DegenerateTarget("power_limit_check: target translation w = 0");
  const MoebiusMap target = MoebiusMap::translation(fam.w);
  std::vector<PowerResidualRow> rows(n_list.size());
  parallel_for(static_cast<long long>(n_list.size()), 1, [&](long long i) {
    const long long n = n_list[static_cast<size_t>(i)];
    const long long mn = fam.exponent(n);
    rows[static_cast<size_t>(i)] = {
        n, mn, projective_distance(power(fam.member(n), mn), target)};
  });
  return rows;
}

namespace {

std::pair<Complex, Complex> lattice_generators(const MoebiusMap& delta,
                                               const MoebiusMap& delta_hat) {
  if (frobenius_distance(compose(delta, delta_hat),
                         compose(delta_hat, delta)) > 1e-9)
    throw NonCommuting("lattice_ball: generators do not commute");
  for (const MoebiusMap* g : {&delta, &delta_hat}) {
    const IsometryClass c = classify(*g);
    if (c != IsometryClass::Parabolic)
      throw NotParabolic("lattice_ball: generator is not parabolic");
    if (!is_translation(*g, 1e-9))
      throw NotParabolic("lattice_ball: expected translations");
  }
  return {translation_value(delta), translation_value(delta_hat)};
}

GroupBallSnapshot::Element make_element(Complex w_hat, Complex w_base,
                                        long long a, long long b) {
  const Complex z = static_cast<double>(a) * w_hat +
                    static_cast<double>(b) * w_base;
  return {MoebiusMap::translation(z),
          "a=" + std::to_string(a) + ",b=" + std::to_string(b), a, b};
}

}  // namespace

GroupBallSnapshot lattice_ball(const MoebiusMap& delta,
                               const MoebiusMap& delta_hat, double R) {
  const auto [w_base, w_hat] = lattice_generators(delta, delta_hat);
  GroupBallSnapshot out;
  out.radius = R;
  // Height of w_hat over the real span of w_base bounds |a|.
  const double height =
      std::abs((w_hat * std::conj(w_base)).imag()) / std::abs(w_base);
  const long long a_max =
      height > 1e-12 ? static_cast<long long>(std::floor(R / height)) + 1
                     : static_cast<long long>(std::floor(R / std::abs(w_hat))) + 1;
  for (long long a = -a_max; a <= a_max; ++a) {
    const long long b_span = static_cast<long long>(
        std::floor((R + std::abs(static_cast<double>(a) * w_hat)) /
                   std::abs(w_base))) + 1;
    for (long long b = -b_span; b <= b_span; ++b) {
      auto el = make_element(w_hat, w_base, a, b);
      if (frobenius_from_identity(el.g) > R + 1e-12) continue;
      // Rank-deficient lattices can repeat values; keep the first label.
      bool dup = false;
      for (const auto& kept : out.elements)
        if (frobenius_distance(kept.g, el.g) < 1e-12) {
          dup = true;
          break;
        }
      if (!dup) out.elements.push_back(std::move(el));
    }
  }
  return out;
}

GroupBallSnapshot lattice_window(const MoebiusMap& delta,
                                 const MoebiusMap& delta_hat, long long a_max,
                                 long long b_max) {
  const auto [w_base, w_hat] = lattice_generators(delta, delta_hat);
  GroupBallSnapshot out;
  for (long long a = -a_max; a <= a_max; ++a)
    for (long long b = -b_max; b <= b_max; ++b) {
      auto el = make_element(w_hat, w_base, a, b);
      out.radius = std::max(out.radius, frobenius_from_identity(el.g));
      out.elements.push_back(std::move(el));
    }
  return out;
}

double hausdorff_distance_ball(const GroupBallSnapshot& s1,
                               const GroupBallSnapshot& s2) {
  if (std::abs(s1.radius - s2.radius) > 1e-9)
    throw RadiusMismatch("hausdorff_distance_ball: radii differ");
  auto directed = [](const GroupBallSnapshot& from,
                     const GroupBallSnapshot& to) {
    double worst = 0.0;
    for (const auto& x : from.elements) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& y : to.elements)
        best = std::min(best, frobenius_distance(x.g, y.g));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(s1, s2), directed(s2, s1));
}

bool GeomConvergenceReport::sup_trend_decreasing() const {
  for (size_t i = 1; i < rows.size(); ++i)
    if (rows[i].sup_residual >= rows[i - 1].sup_residual) return false;
  return true;
}

bool GeomConvergenceReport::margin_trend_decreasing() const {
  for (size_t i = 1; i < rows.size(); ++i)
    if (rows[i].spurious_margin >= rows[i - 1].spurious_margin) return false;
  return true;
}

namespace {

// Distance of a near-translation power to the nearest lattice element,
// searching integer indices around the least-squares projection.
double nearest_lattice_distance(const MoebiusMap& g, Complex w_hat,
                                Complex w_base, bool rank2) {
  const Complex t = translation_value(g);
  long long a0 = 0;
  if (rank2 && std::abs(w_hat.imag()) > 1e-12)
    a0 = std::llround(t.imag() / w_hat.imag());
  double best = std::numeric_limits<double>::infinity();
  for (long long a = rank2 ? a0 - 1 : 0; a <= (rank2 ? a0 + 1 : 0); ++a) {
    const Complex rem = t - static_cast<double>(a) * w_hat;
    const long long b0 = std::llround((rem / w_base).real());
    for (long long b = b0 - 1; b <= b0 + 1; ++b) {
      const Complex z = static_cast<double>(a) * w_hat +
                        static_cast<double>(b) * w_base;
      best = std::min(best,
                      projective_distance(g, MoebiusMap::translation(z)));
    }
  }
  return best;
}

}  // namespace

GeomConvergenceReport cyclic_geom_limit_check(
    const SyntheticFamily& fam, const GroupBallSnapshot& target,
    const std::vector<long long>& n_list, const GeomCheckOptions& opt) {
  if (std::abs(fam.w) < 1e-15)
    throw DegenerateTarget("cyclic_geom_limit_check: w = 0");
  const Complex w_hat = fam.w;
  const Complex w_base{2.0, 0.0};

  GeomConvergenceReport report;
  report.rows.resize(n_list.size());
  parallel_for(static_cast<long long>(n_list.size()), 1, [&](long long idx) {
    const long long n = n_list[static_cast<size_t>(idx)];
    const long long mn = fam.exponent(n);
    const MoebiusMap A = fam.member(n);
    GeomConvergenceRow row{n, mn, 0.0, 0.0, false};

    // Condition 1: every ball element is approximated by a power.
    for (const auto& el : target.elements) {
      long long window = opt.search_window;
      double best = std::numeric_limits<double>::infinity();
      for (;;) {
        const long long j0 = el.a * mn + el.b;
        for (long long j = j0 - window; j <= j0 + window; ++j)
          best = std::min(best, projective_distance(power(A, j), el.g));
        if (best <= opt.widen_threshold || window >= 32) break;
        window *= 4;
        row.widened = true;
      }
      row.sup_residual = std::max(row.sup_residual, best);
    }

    // Condition 2: powers inside the ball accumulate only on the lattice.
    const double h = std::max(std::abs(w_hat.imag()), 0.5);
    const long long a_cap =
        static_cast<long long>(std::ceil((target.radius + 2.0) / h)) + 1;
    const long long Jmax =
        (a_cap + 1) * mn + static_cast<long long>(std::ceil(target.radius)) + 2;
    for (int dir = 0; dir < 2; ++dir) {
      const MoebiusMap step = dir == 0 ? A : A.inverse();
      MoebiusMap P = MoebiusMap::identity();
      for (long long j = 1; j <= Jmax; ++j) {
        P = compose(P, step);
        if (frobenius_from_identity(P) > target.radius + opt.ball_slack)
          continue;
        row.spurious_margin =
            std::max(row.spurious_margin,
                     nearest_lattice_distance(P, w_hat, w_base, opt.rank2));
      }
    }
    report.rows[static_cast<size_t>(idx)] = row;
  });
  return report;
}

GeomConvergenceReport cyclic_geom_limit_check(
    const SyntheticFamily& fam, double R,
    const std::vector<long long>& n_list, const GeomCheckOptions& opt) {
  const GroupBallSnapshot ball =
      lattice_ball(MoebiusMap::translation(2.0),
                   MoebiusMap::translation(fam.w), R);
  return cyclic_geom_limit_check(fam, ball, n_list, opt);
}

}  // namespace ptorus
