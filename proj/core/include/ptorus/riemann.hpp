#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace ptorus {

using Complex = std::complex<double>;

/// A point of the Riemann sphere: a finite complex number or the point at
/// infinity. Infinity compares equal only to itself; the finite branch
/// compares exactly (callers needing tolerance use chordal_distance).
class RiemannPoint {
 public:
  RiemannPoint() = default;
  RiemannPoint(Complex z) : z_(z) {}  // NOLINT: implicit by design
  RiemannPoint(double x) : z_(x, 0.0) {}

  static RiemannPoint infinity() {
    RiemannPoint p;
    p.infinite_ = true;
    return p;
  }

  bool is_infinity() const { return infinite_; }

  Complex value() const {
    if (infinite_) throw std::logic_error("RiemannPoint: value() of infinity");
    return z_;
  }

  friend bool operator==(const RiemannPoint& a, const RiemannPoint& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ && b.infinite_;
    return a.z_ == b.z_;
  }
  friend bool operator!=(const RiemannPoint& a, const RiemannPoint& b) {
    return !(a == b);
  }

 private:
  Complex z_{0.0, 0.0};
  bool infinite_ = false;
};

/// Chordal metric on the sphere; range [0, 2].
inline double chordal_distance(const RiemannPoint& a, const RiemannPoint& b) {
  auto lift = [](const RiemannPoint& p, double& n2) {
    n2 = p.is_infinity() ? 0.0 : std::norm(p.value());
  };
  double na, nb;
  lift(a, na);
  lift(b, nb);
  if (a.is_infinity() && b.is_infinity()) return 0.0;
  if (a.is_infinity()) return 2.0 / std::sqrt(1.0 + nb);
  if (b.is_infinity()) return 2.0 / std::sqrt(1.0 + na);
  return 2.0 * std::abs(a.value() - b.value()) /
         std::sqrt((1.0 + na) * (1.0 + nb));
}

}  // namespace ptorus
