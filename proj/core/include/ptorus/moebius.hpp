#pragma once

#include <vector>

#include "ptorus/riemann.hpp"
#include "ptorus/tolerances.hpp"

namespace ptorus {

/// A Moebius transformation as a 2x2 complex matrix with determinant
/// normalized to 1. Equality and all metrics are projective: M and -M
/// represent the same map.
class MoebiusMap {
 public:
  MoebiusMap() = default;  // identity

  /// Builds from raw entries, rescaling to det = 1. Throws SingularMatrix
  /// when the determinant is (numerically) zero.
  static MoebiusMap from_entries(Complex a, Complex b, Complex c, Complex d);

  static MoebiusMap identity() { return MoebiusMap(); }

  /// T_z = [[1, z], [0, 1]], the translation w -> w + z.
  static MoebiusMap translation(Complex z);

  /// U_mu = [[i mu, i], [i, 0]].
  static MoebiusMap maskit_u(Complex mu);

  /// diag(k, 1/k), acting as w -> k^2 w.
  static MoebiusMap diagonal(Complex k);

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  Complex c() const { return c_; }
  Complex d() const { return d_; }

  Complex trace() const { return a_ + d_; }
  Complex det() const { return a_ * d_ - b_ * c_; }

  MoebiusMap inverse() const;

  RiemannPoint apply(const RiemannPoint& z) const;

  /// Derivative at a finite point, 1/(cz+d)^2 for det-1 matrices.
  Complex derivative(Complex z) const;

 private:
  MoebiusMap(Complex a, Complex b, Complex c, Complex d)
      : a_(a), b_(b), c_(c), d_(d) {}

  double max_abs_entry() const;

  Complex a_{1.0}, b_{0.0}, c_{0.0}, d_{1.0};
};

/// Matrix product, renormalized to det = 1 on every call so determinant
/// drift stays below tol::det_unit through long composition chains.
MoebiusMap compose(const MoebiusMap& f, const MoebiusMap& g);

/// f^k by binary exponentiation (k may be negative or zero).
MoebiusMap power(const MoebiusMap& f, long long k);

bool projectively_equal(const MoebiusMap& f, const MoebiusMap& g,
                        double tol = tol::projective_eq);

/// Frobenius distance min over the sign ambiguity: min ||F -+ G||_F.
/// Distance from the identity of T_z is |z|, which fixes the radius
/// semantics of group-ball snapshots.
double frobenius_distance(const MoebiusMap& f, const MoebiusMap& g);
double frobenius_from_identity(const MoebiusMap& f);

/// Scale-free distance between the projective classes: both matrices are
/// normalized to unit Frobenius norm before taking the sign-minimized
/// Frobenius difference. Used for convergence residuals.
double projective_distance(const MoebiusMap& f, const MoebiusMap& g);

enum class IsometryClass { Identity, Parabolic, Elliptic, Loxodromic };

/// Classification by tr^2: equal to 4 (within tol) means parabolic or
/// identity; real in [0, 4) means elliptic; anything else is loxodromic.
IsometryClass classify(const MoebiusMap& f, double tol = tol::parabolic);

/// Complex translation length lambda = l + i theta of a loxodromic map:
/// the log of the derivative at the repelling fixed point, with l > 0 and
/// theta in (-pi, pi]. Throws NotLoxodromic otherwise.
Complex complex_translation_length(const MoebiusMap& f);

/// Fixed points in the Riemann sphere: the roots of cz^2 + (d-a)z - b = 0,
/// with the double root reported once for parabolics. Throws IdentityMap.
std::vector<RiemannPoint> fixed_points(const MoebiusMap& f);

/// Hyperbolic distance in the upper half plane,
/// cosh d = 1 + |z-w|^2 / (2 Im z Im w). Throws NotInUpperHalfPlane.
double hyperbolic_distance(Complex z, Complex w);

}  // namespace ptorus
