#pragma once

// Central numeric tolerances. Kept in one place so the scalar kernel could be
// swapped for higher precision without touching call sites.
namespace ptorus::tol {

inline constexpr double det_unit = 1e-12;        // |det - 1| allowed after renormalization
inline constexpr double parabolic = 1e-9;        // |tr^2 - 4| below this means parabolic
inline constexpr double projective_eq = 1e-9;    // entrywise tolerance for M == +-N
inline constexpr double trace_identity = 1e-9;   // commutator / Markov residual checks
inline constexpr double cusp_residual = 1e-12;   // Newton stopping residual
inline constexpr double upper_half = 1e-9;       // Im threshold for "lies in H"
inline constexpr double elliptic_margin = 1e-7;  // strictly-inside margin for |tr| < 2
inline constexpr double exact_identity = 1e-14;  // re-indexing / witness identities

}  // namespace ptorus::tol
