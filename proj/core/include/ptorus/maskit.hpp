#pragma once

#include <optional>
#include <vector>

#include "ptorus/bowditch.hpp"
#include "ptorus/representation.hpp"

namespace ptorus {

/// The normalized representation with rho(alpha) = T_2 and rho(beta) = U_mu.
/// Its trace coordinates are (2, i mu, i(mu - 2)) and the commutator trace
/// is -2 identically in mu.
Representation maskit_rep(Complex mu);

TraceTriple maskit_base_triple(Complex mu);

/// Trace of the slope-s curve in the mu-family; polynomial in mu.
Complex maskit_slope_trace(Complex mu, const FareySlope& s);

/// Value and d/dmu of the slope trace (differentiated Farey recursion).
TraceDual maskit_slope_trace_dual(Complex mu, const FareySlope& s);

struct NewtonOptions {
  int max_iter = 200;
  double residual_tol = tol::cusp_residual;
  // Roots farther than this from the initial guess are discarded; keeps
  // continuation from jumping tracks. Non-positive disables the check.
  double guess_radius = 0.0;
};

/// A solved boundary point: tr W_s(mu) = trace_sign with Im mu > 0.
struct CuspPoint {
  FareySlope slope;
  Complex mu{};
  int trace_sign = -2;   // -2 or +2
  double residual = 0.0; // |tr_s(mu) - trace_sign|
};

/// Newton iteration on tr_s(mu) -+ 2 from the given guess, trying the -2
/// target first. Damps by halving on overshoot. Throws NewtonDiverged or
/// NoUpperHalfPlaneRoot.
CuspPoint cusp_solve(const FareySlope& s, Complex guess,
                     const NewtonOptions& opt = {});

/// The cusps over one period of the boundary: all reduced p/q in [0, 1)
/// with q <= q_max, solved by Newton continuation in Stern-Brocot
/// breadth-first order (each mediant starts from its parents' midpoint).
struct BoundaryTrace {
  int q_max = 0;
  std::vector<CuspPoint> cusps;  // sorted by slope value
  double min_im = 0.0;

  /// Max Im over cusps whose Re lies within the window of the given Re
  /// (mod the period 2); falls back to the global max when the column is
  /// empty.
  double column_max_im(double re, double window = 0.25) const;
};

BoundaryTrace trace_boundary(int q_max, int workers = 1,
                             const NewtonOptions& opt = {});

enum class Membership { Inside, Outside, Unknown };

struct MembershipOptions {
  int depth = 24;           // Bowditch depth
  double margin = 0.05;     // Im clearance above the traced column
  double column_window = 0.25;
};

/// Three-valued slice membership: Outside when Im mu <= 0 or the Bowditch
/// filter rejects; Inside when not rejected and Im mu clears the traced
/// boundary column by the margin; Unknown otherwise. Heuristics are never
/// promoted to proofs.
Membership membership(Complex mu, const BoundaryTrace& boundary,
                      const MembershipOptions& opt = {});

const char* to_string(Membership m);

/// The boundary point pinching the slope-x curve: the computable rational
/// shadow of the end-invariant parametrization. Slopes outside [0, 1) are
/// folded by the period (mu(x + 1) = mu(x) + 2). Throws InvalidSlope for
/// x = 1/0.
CuspPoint rational_end_invariant(const FareySlope& x,
                                 const NewtonOptions& opt = {});

}  // namespace ptorus
