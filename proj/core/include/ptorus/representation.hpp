#pragma once

#include "ptorus/farey.hpp"
#include "ptorus/moebius.hpp"

namespace ptorus {

/// A marked representation of the once-punctured-torus group: the images
/// (A, B) of the fixed generator pair (alpha, beta). The group-theoretic
/// condition "commutator parabolic" reads tr[A,B] = -2 here.
struct Representation {
  MoebiusMap A;
  MoebiusMap B;
};

/// tr(A B A^{-1} B^{-1}).
Complex commutator_trace(const Representation& r);

/// Trace coordinates (tr W_{1/0}, tr W_{0/1}, tr W_{1/1})
/// = (tr A, tr B, tr A^{-1}B).
struct TraceTriple {
  Complex x;
  Complex y;
  Complex z;
};

TraceTriple trace_triple(const Representation& r);

/// x^2 + y^2 + z^2 - xyz; vanishes exactly when the commutator trace is -2.
Complex markov_residual(const TraceTriple& t);

/// k-fold Dehn twist about the slope-infinity curve: (A, B) -> (A, A^k B).
Representation twist_action(const Representation& r, long long k);

/// Necessary discreteness condition |tr^2 A - 4| + |tr[A,B] - 2| >= 1.
/// Throws ElementaryPair when A and B share a fixed point.
bool jorgensen_filter(const Representation& r);

/// Image of a word under the representation (matrix product).
MoebiusMap evaluate(const FareyWord& w, const Representation& r);

/// Trace of the slope-s curve computed from the base triple by the Farey
/// vertex relation tr_{u (+) v} = tr_u tr_v - tr_{u (-) v}, memoized per
/// call. Throws InconsistentBase when the base triple is off the Markov
/// surface.
Complex trace_of_slope(const TraceTriple& base, const FareySlope& s);

/// First-order jet (value, d/dmu) carried through the trace recursion;
/// used by the Newton cusp solver.
struct TraceDual {
  Complex v{};
  Complex d{};
};

inline TraceDual operator*(const TraceDual& a, const TraceDual& b) {
  return {a.v * b.v, a.d * b.v + a.v * b.d};
}
inline TraceDual operator-(const TraceDual& a, const TraceDual& b) {
  return {a.v - b.v, a.d - b.d};
}

struct DualTriple {
  TraceDual x;
  TraceDual y;
  TraceDual z;
};

TraceDual trace_of_slope(const DualTriple& base, const FareySlope& s);

}  // namespace ptorus
