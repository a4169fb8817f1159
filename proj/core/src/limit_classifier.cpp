#include "ptorus/limit_classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ptorus/errors.hpp"
#include "ptorus/moebius.hpp"

namespace ptorus {

namespace {
constexpr Complex kI{0.0, 1.0};
constexpr double kPi = 3.14159265358979323846;
}  // namespace

BoundarySide BoundarySide::twist_orbit(Complex u, IntegerSequenceSpec k) {
  BoundarySide s;
  s.kind = Kind::TwistOrbit;
  s.u = u;
  s.twists = std::move(k);
  return s;
}

BoundarySide BoundarySide::path(double re_lin, double re_off, double im_lin,
                                double im_off) {
  BoundarySide s;
  s.kind = Kind::ExplicitPath;
  s.re_lin = re_lin;
  s.re_off = re_off;
  s.im_lin = im_lin;
  s.im_off = im_off;
  return s;
}

BoundarySide BoundarySide::at_infinity() {
  BoundarySide s;
  s.kind = Kind::ConstantInfinity;
  return s;
}

namespace {

enum class SideBehavior {
  ConvergesFinite,
  TangentialInf,
  TangentialNoOrbit,
  HorocyclicInf,
  Irregular
};

struct SideInfo {
  SideBehavior behavior = SideBehavior::Irregular;
  Complex limit{};               // for ConvergesFinite
  IntegerSequenceSpec twists{};  // for TangentialInf
  std::string note;
};

bool near_integer(double x) { return std::abs(x - std::round(x)) < 1e-12; }

SideInfo analyze(const BoundarySide& side) {
  SideInfo info;
  switch (side.kind) {
    case BoundarySide::Kind::ConstantInfinity:
      info.behavior = SideBehavior::HorocyclicInf;
      return info;
    case BoundarySide::Kind::TwistOrbit: {
      if (side.twists.diverges()) {
        info.behavior = SideBehavior::TangentialInf;
        info.twists = side.twists;
        return info;
      }
      if (auto c = side.twists.eventually_constant()) {
        info.behavior = SideBehavior::ConvergesFinite;
        info.limit = side.u - static_cast<double>(*c);
        return info;
      }
      info.behavior = SideBehavior::Irregular;
      info.note = "bounded non-constant twist indices";
      return info;
    }
    case BoundarySide::Kind::ExplicitPath: {
      if (side.im_lin > 0.0) {
        info.behavior = SideBehavior::HorocyclicInf;
        return info;
      }
      if (side.im_lin < 0.0) {
        info.behavior = SideBehavior::Irregular;
        info.note = "path leaves the closed upper half plane";
        return info;
      }
      if (side.re_lin == 0.0) {
        info.behavior = SideBehavior::ConvergesFinite;
        info.limit = Complex(side.re_off, side.im_off);
        return info;
      }
      if (near_integer(side.re_lin)) {
        info.behavior = SideBehavior::TangentialInf;
        info.twists = IntegerSequenceSpec::affine(
            -static_cast<long long>(std::llround(side.re_lin)), 0);
        return info;
      }
      info.behavior = SideBehavior::TangentialNoOrbit;
      info.note = "non-integer drift admits no convergent twist orbit";
      return info;
    }
  }
  return info;
}

}  // namespace

Approach classify_boundary_approach(const BoundarySide& side) {
  switch (analyze(side).behavior) {
    case SideBehavior::HorocyclicInf:
      return Approach::Horocyclic;
    case SideBehavior::TangentialInf:
    case SideBehavior::TangentialNoOrbit:
      return Approach::Tangential;
    case SideBehavior::ConvergesFinite:
      throw NotConvergingToInfinity(
          "classify_boundary_approach: side converges to a finite point");
    case SideBehavior::Irregular:
      return Approach::Mixed;
  }
  return Approach::Mixed;
}

Approach classify_boundary_approach(
    const std::vector<RiemannPoint>& samples) {
  if (samples.size() < 4)
    throw NotConvergingToInfinity(
        "classify_boundary_approach: need at least 4 samples");

  const size_t half = samples.size() / 2;
  auto magnitude = [](const RiemannPoint& p) {
    return p.is_infinity() ? std::numeric_limits<double>::infinity()
                           : std::abs(p.value());
  };
  auto im_part = [](const RiemannPoint& p) {
    return p.is_infinity() ? std::numeric_limits<double>::infinity()
                           : p.value().imag();
  };
  auto re_abs = [](const RiemannPoint& p) {
    return p.is_infinity() ? std::numeric_limits<double>::infinity()
                           : std::abs(p.value().real());
  };
  auto median = [](std::vector<double> v) {
    std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
    return v[v.size() / 2];
  };
  auto split_median = [&](auto&& f) {
    std::vector<double> head, tail;
    for (size_t i = 0; i < samples.size(); ++i)
      (i < half ? head : tail).push_back(f(samples[i]));
    return std::pair(median(head), median(tail));
  };

  const auto [mag_head, mag_tail] = split_median(magnitude);
  const bool all_inf = std::all_of(samples.begin(), samples.end(),
                                   [](const RiemannPoint& p) {
                                     return p.is_infinity();
                                   });
  if (all_inf) return Approach::Horocyclic;
  if (!(std::isinf(mag_tail) || mag_tail > 2.0 * mag_head + 1.0))
    throw NotConvergingToInfinity(
        "classify_boundary_approach: samples show no escape to infinity");

  const auto [im_head, im_tail] = split_median(im_part);
  if (std::isinf(im_tail) || im_tail > 2.0 * im_head + 1.0)
    return Approach::Horocyclic;

  double im_max = 0.0;
  for (const auto& p : samples)
    if (!p.is_infinity()) im_max = std::max(im_max, p.value().imag());
  const auto [re_head, re_tail] = split_median(re_abs);
  if (im_max <= 1.5 * std::max(1.0, im_head) &&
      (std::isinf(re_tail) || re_tail > 2.0 * re_head + 1.0))
    return Approach::Tangential;
  return Approach::Mixed;
}

const char* to_string(Approach a) {
  switch (a) {
    case Approach::Horocyclic:
      return "horocyclic";
    case Approach::Tangential:
      return "tangential";
    default:
      return "mixed";
  }
}

const char* to_string(ConvergenceVerdict::Kind k) {
  switch (k) {
    case ConvergenceVerdict::Kind::ConvergesStandard:
      return "converges_standard";
    case ConvergenceVerdict::Kind::ConvergesExotic:
      return "converges_exotic";
    case ConvergenceVerdict::Kind::Diverges:
      return "diverges";
    case ConvergenceVerdict::Kind::SplitsBySubsequence:
      return "splits_by_subsequence";
    default:
      return "unknown";
  }
}

Complex predict_limit(Complex mu, Complex nu, long long p, long long q) {
  return static_cast<double>(p + 1) * mu -
         static_cast<double>(p) * std::conj(nu) +
         2.0 * static_cast<double>(q);
}

bool reindex_invariance_check(Complex mu, Complex nu, long long p,
                              long long q, long long u_shift,
                              long long v_shift, double tolerance) {
  const Complex mu2 = mu + 2.0 * static_cast<double>(u_shift);
  const Complex nu2 = nu + 2.0 * static_cast<double>(v_shift);
  const long long q2 = q - (p + 1) * u_shift + p * v_shift;
  return std::abs(predict_limit(mu2, nu2, p, q2) -
                  predict_limit(mu, nu, p, q)) <= tolerance;
}

ConvergenceVerdict classify_sequence(const TwistSequenceSpec& spec) {
  using Kind = ConvergenceVerdict::Kind;
  const SideInfo sx = analyze(spec.x);
  const SideInfo sy = analyze(spec.y);

  if (sx.behavior == SideBehavior::Irregular ||
      sy.behavior == SideBehavior::Irregular) {
    const std::string why =
        sx.behavior == SideBehavior::Irregular ? sx.note : sy.note;
    return {Kind::Unknown, 0, 0, std::nullopt,
            "irregular endpoint behavior: " + why};
  }

  const bool x_fin = sx.behavior == SideBehavior::ConvergesFinite;
  const bool y_fin = sy.behavior == SideBehavior::ConvergesFinite;
  if (x_fin && y_fin) {
    if (std::abs(sx.limit - sy.limit) < 1e-12)
      return {Kind::Unknown, 0, 0, std::nullopt,
              "endpoints meet at a finite diagonal point"};
    return {Kind::ConvergesStandard, 0, 0, std::nullopt,
            "endpoints converge off the diagonal"};
  }
  if (x_fin || y_fin)
    return {Kind::ConvergesStandard, 0, 0, std::nullopt,
            "one endpoint stays finite; the limit pair is off the diagonal"};

  if (sx.behavior == SideBehavior::HorocyclicInf ||
      sy.behavior == SideBehavior::HorocyclicInf)
    return {Kind::Diverges, 0, 0, std::nullopt,
            "horocyclic approach to infinity"};

  if (sx.behavior == SideBehavior::TangentialNoOrbit ||
      sy.behavior == SideBehavior::TangentialNoOrbit)
    return {Kind::Unknown, 0, 0, std::nullopt,
            "tangential side without a twist-orbit normal form"};

  // Both sides are tangential twist orbits.
  const IntegerSequenceSpec& k = sx.twists;
  const IntegerSequenceSpec& l = sy.twists;
  if (auto pq = solve_pq(k, l)) {
    const auto [p, q] = *pq;
    if (p == 0 || p == -1)
      return {Kind::Unknown, 0, 0, std::nullopt,
              "degenerate twist ratio; indices cannot both diverge"};
    std::optional<Complex> xi;
    if (spec.mu && spec.nu) xi = predict_limit(*spec.mu, *spec.nu, p, q);
    return {Kind::ConvergesExotic, p, q, xi,
            "twist speeds lock at ratio " + std::to_string(p) + " : " +
                std::to_string(p + 1)};
  }
  if (bounding_p(k, l))
    return {Kind::SplitsBySubsequence, 0, 0, std::nullopt,
            "residual bounded for some p but not eventually constant"};
  return {Kind::Diverges, 0, 0, std::nullopt,
          "every integer p leaves a divergent twist residual"};
}

Complex pivot_estimate(Complex lambda) {
  if (std::abs(lambda) < 1e-300)
    throw ZeroMultiplier("pivot_estimate: lambda = 0");
  return 2.0 * kPi * kI / lambda - kI;
}

double pivot_distance(Complex lambda, Complex x, Complex y) {
  if (std::abs(lambda) < 1e-300)
    throw ZeroMultiplier("pivot_distance: lambda = 0");
  return hyperbolic_distance(2.0 * kPi * kI / lambda,
                             x - std::conj(y) + kI);
}

bool multiplier_horocyclic_check(const std::vector<Complex>& lambdas,
                                 double eps) {
  if (lambdas.empty()) return false;
  return std::abs(lambdas.back() - eps) <= eps;
}

}  // namespace ptorus
