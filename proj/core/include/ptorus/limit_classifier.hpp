#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptorus/riemann.hpp"
#include "ptorus/sequence_spec.hpp"

namespace ptorus {

enum class Approach { Horocyclic, Tangential, Mixed };

/// One end-invariant path in the closed upper half plane, described
/// symbolically.
struct BoundarySide {
  enum class Kind { TwistOrbit, ExplicitPath, ConstantInfinity };
  Kind kind = Kind::TwistOrbit;

  // TwistOrbit: x_n = tau^{-k_n} u with u finite, i.e. x_n = u - k_n.
  Complex u{};
  IntegerSequenceSpec twists{};

  // ExplicitPath: x_n = (re_lin n + re_off) + i (im_lin n + im_off).
  double re_lin = 0, re_off = 0, im_lin = 0, im_off = 0;

  static BoundarySide twist_orbit(Complex u, IntegerSequenceSpec k);
  static BoundarySide path(double re_lin, double re_off, double im_lin,
                           double im_off);
  static BoundarySide at_infinity();
};

/// Exact mode of approach to infinity for a symbolic side. Horocyclic
/// means Im -> infinity (constant infinity included); tangential means Im
/// bounded with |Re| -> infinity. Throws NotConvergingToInfinity when the
/// side does not escape.
Approach classify_boundary_approach(const BoundarySide& side);

/// Trend heuristic on a sampled sequence; the symbolic overload is exact.
Approach classify_boundary_approach(const std::vector<RiemannPoint>& samples);

const char* to_string(Approach a);

/// A pair of end-invariant paths plus the slice parameters of the twist
/// limits, when known (mu = m(u); supplied directly or solved from a
/// rational u by the caller).
struct TwistSequenceSpec {
  std::string name;
  BoundarySide x;
  BoundarySide y;
  std::optional<Complex> mu;
  std::optional<Complex> nu;
};

struct ConvergenceVerdict {
  enum class Kind {
    ConvergesStandard,
    ConvergesExotic,
    Diverges,
    SplitsBySubsequence,
    Unknown
  };
  Kind kind = Kind::Unknown;
  long long p = 0, q = 0;        // for ConvergesExotic
  std::optional<Complex> xi;     // predicted limit parameter, when mu/nu known
  std::string reason;
};

const char* to_string(ConvergenceVerdict::Kind k);

/// Predicted limit parameter xi = (p+1) mu - p conj(nu) + 2q.
Complex predict_limit(Complex mu, Complex nu, long long p, long long q);

/// Checks the re-indexing identity: shifting the twist indices by (u, v)
/// moves (mu, nu, q) to (mu + 2u, nu + 2v, q - (p+1)u + pv) and leaves xi
/// unchanged.
bool reindex_invariance_check(Complex mu, Complex nu, long long p,
                              long long q, long long u_shift,
                              long long v_shift,
                              double tolerance = 1e-14);

/// The full verdict: horocyclic approach on either side diverges; two
/// tangential twist orbits converge exactly when the twist speeds satisfy
/// (p+1) k_n - p l_n + q = 0 eventually, with limit parameter xi; a
/// residual that stays bounded for some p without becoming constant
/// splits into distinct convergent subsequences; endpoints that do not fit
/// the twist-orbit normal form are reported Unknown, never guessed.
ConvergenceVerdict classify_sequence(const TwistSequenceSpec& spec);

/// Pivot estimate 2 pi i / lambda - i for x - conj(y), and the hyperbolic
/// distance d_H(2 pi i / lambda, x - conj(y) + i). The comparison constants
/// are not explicit, so only the distance is reported. Throws
/// ZeroMultiplier for lambda = 0.
Complex pivot_estimate(Complex lambda);
double pivot_distance(Complex lambda, Complex x, Complex y);

/// True when the tail of the multiplier sequence lies in the closed disk
/// |z - eps| <= eps (horocyclic decay toward 0).
bool multiplier_horocyclic_check(const std::vector<Complex>& lambdas,
                                 double eps);

}  // namespace ptorus
