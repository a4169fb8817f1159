#include "ptorus/moebius.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "ptorus/errors.hpp"

namespace ptorus {

namespace {

constexpr Complex kI{0.0, 1.0};

std::array<Complex, 4> entries(const MoebiusMap& f) {
  return {f.a(), f.b(), f.c(), f.d()};
}

double frob_norm(const std::array<Complex, 4>& e) {
  double s = 0.0;
  for (const auto& z : e) s += std::norm(z);
  return std::sqrt(s);
}

double frob_diff(const std::array<Complex, 4>& x,
                 const std::array<Complex, 4>& y, double sign) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i) s += std::norm(x[i] - sign * y[i]);
  return std::sqrt(s);
}

}  // namespace

MoebiusMap MoebiusMap::from_entries(Complex a, Complex b, Complex c,
                                    Complex d) {
  Complex det = a * d - b * c;
  double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  if (std::abs(det) < 1e-28 * std::max(1.0, scale * scale))
    throw SingularMatrix("moebius: determinant is numerically zero");
  Complex s = std::sqrt(det);
  return MoebiusMap(a / s, b / s, c / s, d / s);
}

MoebiusMap MoebiusMap::translation(Complex z) {
  return MoebiusMap(1.0, z, 0.0, 1.0);
}

MoebiusMap MoebiusMap::maskit_u(Complex mu) {
  // det = -i*i = 1 already.
  return MoebiusMap(kI * mu, kI, kI, 0.0);
}

MoebiusMap MoebiusMap::diagonal(Complex k) {
  if (std::abs(k) < 1e-300) throw SingularMatrix("moebius: diagonal(0)");
  return MoebiusMap(k, 0.0, 0.0, 1.0 / k);
}

MoebiusMap MoebiusMap::inverse() const {
  // det = 1, so the adjugate is the inverse.
  return MoebiusMap(d_, -b_, -c_, a_);
}

double MoebiusMap::max_abs_entry() const {
  return std::max(
      {std::abs(a_), std::abs(b_), std::abs(c_), std::abs(d_)});
}

RiemannPoint MoebiusMap::apply(const RiemannPoint& z) const {
  const double scale = max_abs_entry();
  auto negligible = [&](Complex w, double extra) {
    return std::abs(w) <= 1e-14 * scale * std::max(1.0, extra);
  };
  if (z.is_infinity()) {
    if (negligible(c_, 1.0)) return RiemannPoint::infinity();
    return RiemannPoint(a_ / c_);
  }
  const Complex zv = z.value();
  const Complex den = c_ * zv + d_;
  if (negligible(den, std::abs(zv))) return RiemannPoint::infinity();
  return RiemannPoint((a_ * zv + b_) / den);
}

Complex MoebiusMap::derivative(Complex z) const {
  const Complex den = c_ * z + d_;
  return 1.0 / (den * den);
}

MoebiusMap compose(const MoebiusMap& f, const MoebiusMap& g) {
  return MoebiusMap::from_entries(f.a() * g.a() + f.b() * g.c(),
                                  f.a() * g.b() + f.b() * g.d(),
                                  f.c() * g.a() + f.d() * g.c(),
                                  f.c() * g.b() + f.d() * g.d());
}

MoebiusMap power(const MoebiusMap& f, long long k) {
  MoebiusMap base = k < 0 ? f.inverse() : f;
  unsigned long long e =
      k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1ull
            : static_cast<unsigned long long>(k);
  MoebiusMap acc = MoebiusMap::identity();
  while (e > 0) {
    if (e & 1ull) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1ull;
  }
  return acc;
}

bool projectively_equal(const MoebiusMap& f, const MoebiusMap& g, double tol) {
  const auto x = entries(f), y = entries(g);
  auto ok = [&](double sign) {
    for (int i = 0; i < 4; ++i)
      if (std::abs(x[i] - sign * y[i]) > tol) return false;
    return true;
  };
  return ok(1.0) || ok(-1.0);
}

double frobenius_distance(const MoebiusMap& f, const MoebiusMap& g) {
  const auto x = entries(f), y = entries(g);
  return std::min(frob_diff(x, y, 1.0), frob_diff(x, y, -1.0));
}

double frobenius_from_identity(const MoebiusMap& f) {
  return frobenius_distance(f, MoebiusMap::identity());
}

double projective_distance(const MoebiusMap& f, const MoebiusMap& g) {
  auto x = entries(f), y = entries(g);
  const double nx = frob_norm(x), ny = frob_norm(y);
  for (auto& z : x) z /= nx;
  for (auto& z : y) z /= ny;
  return std::min(frob_diff(x, y, 1.0), frob_diff(x, y, -1.0));
}

IsometryClass classify(const MoebiusMap& f, double tol) {
  const Complex t2 = f.trace() * f.trace();
  if (std::abs(t2 - 4.0) < tol) {
    return projectively_equal(f, MoebiusMap::identity(), tol)
               ? IsometryClass::Identity
               : IsometryClass::Parabolic;
  }
  if (std::abs(t2.imag()) < tol && t2.real() >= 0.0 && t2.real() < 4.0)
    return IsometryClass::Elliptic;
  return IsometryClass::Loxodromic;
}

Complex complex_translation_length(const MoebiusMap& f) {
  switch (classify(f)) {
    case IsometryClass::Loxodromic:
      break;
    case IsometryClass::Identity:
      throw NotLoxodromic("translation length: identity");
    case IsometryClass::Parabolic:
      throw NotLoxodromic("translation length: parabolic");
    case IsometryClass::Elliptic:
      throw NotLoxodromic("translation length: elliptic");
  }
  // Eigenvalues k, 1/k with k the larger one; the multiplier at the
  // repelling fixed point is k^2, so lambda = log(k^2) has Re > 0 and the
  // principal branch puts theta in (-pi, pi].
  const Complex t = f.trace();
  const Complex root = std::sqrt(t * t - 4.0);
  Complex k = (t + root) / 2.0;
  if (std::abs(k) < 1.0) k = (t - root) / 2.0;
  return std::log(k * k);
}

std::vector<RiemannPoint> fixed_points(const MoebiusMap& f) {
  if (projectively_equal(f, MoebiusMap::identity(), tol::projective_eq))
    throw IdentityMap("fixed points: identity fixes everything");
  const Complex a = f.a(), b = f.b(), c = f.c(), d = f.d();
  const double scale = std::max(
      {std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  if (std::abs(c) <= 1e-14 * scale) {
    // Affine map; infinity is always fixed.
    if (std::abs(d - a) <= 1e-12 * scale) return {RiemannPoint::infinity()};
    return {RiemannPoint(b / (d - a)), RiemannPoint::infinity()};
  }
  // Roots of c z^2 + (d-a) z - b = 0; discriminant is tr^2 - 4.
  const Complex t = f.trace();
  const Complex disc = t * t - 4.0;
  if (std::abs(disc) < tol::parabolic) {
    return {RiemannPoint((a - d) / (2.0 * c))};
  }
  const Complex sq = std::sqrt(disc);
  // Pick the larger-magnitude numerator first, recover the other root from
  // the product z1 z2 = -b/c to avoid cancellation.
  const Complex n1 = (a - d) + sq, n2 = (a - d) - sq;
  const Complex num = std::abs(n1) >= std::abs(n2) ? n1 : n2;
  const Complex z1 = num / (2.0 * c);
  Complex z2;
  if (std::abs(z1) > 1e-300) {
    z2 = (-b / c) / z1;
  } else {
    z2 = (std::abs(n1) >= std::abs(n2) ? n2 : n1) / (2.0 * c);
  }
  return {RiemannPoint(z1), RiemannPoint(z2)};
}

double hyperbolic_distance(Complex z, Complex w) {
  if (z.imag() <= 0.0 || w.imag() <= 0.0)
    throw NotInUpperHalfPlane("hyperbolic distance: point not in H");
  const double arg = 1.0 + std::norm(z - w) / (2.0 * z.imag() * w.imag());
  return std::acosh(std::max(arg, 1.0));
}

}  // namespace ptorus
