#pragma once

#include <string>
#include <vector>

#include "ptorus/moebius.hpp"
#include "ptorus/sequence_spec.hpp"

namespace ptorus {

/// The drilled-group data for a parameter pair: generators
/// (T_2, U_mu, U_conj(nu)) together with the rank-2 parabolic cusp pair
/// (T_2, T_{mu - conj(nu)}).
struct DrilledGroup {
  MoebiusMap gen_alpha;      // T_2
  MoebiusMap gen_beta;       // U_mu
  MoebiusMap gen_beta_bar;   // U_conj(nu)
  MoebiusMap cusp_alpha;     // T_2
  MoebiusMap cusp_twist;     // T_{mu - conj(nu)}
};

DrilledGroup drilled_group(Complex mu, Complex nu);

/// A family of loxodromic maps A_n(z) = e^{lambda_n} z + 2 with
/// lambda_n = (2 pi i + pi i w / m_n) / m_n, so that A_n -> T_2 entrywise
/// and A_n^{m_n} -> T_w. It realizes the limiting mechanism (multiplier
/// near 2 pi i / m_n, powers m_n converging to a translation) of cyclic
/// geometric limits; it is a model family, not a reproduction of any
/// specific representation sequence.
struct SyntheticFamily {
  Complex w{};               // target translation of the power limit
  IntegerSequenceSpec m{};   // exponents m_n

  Complex lambda(long long n) const;
  long long exponent(long long n) const { return m.term(n); }
  MoebiusMap member(long long n) const;
};

struct PowerResidualRow {
  long long n = 0;
  long long m = 0;
  double residual = 0.0;  // projective distance of A_n^{m_n} from T_w
};

/// Entrywise (projectively normalized) distance of the binary-exponentiated
/// power A_n^{m_n} from T_w, per requested n. Throws DegenerateTarget when
/// w = 0.
std::vector<PowerResidualRow> power_limit_check(
    const SyntheticFamily& fam, const std::vector<long long>& n_list);

/// A finite ball of a rank-<=2 translation lattice, with labels and
/// lattice indices. Radius is measured in the sign-normalized Frobenius
/// metric, so the distance of T_z from the identity is |z|.
struct GroupBallSnapshot {
  struct Element {
    MoebiusMap g;
    std::string label;
    long long a = 0, b = 0;  // lattice indices: g = delta_hat^a delta^b
  };
  std::vector<Element> elements;
  double radius = 0.0;
};

/// All delta_hat^a delta^b within metric radius R of the identity. Both
/// generators must be commuting parabolic translations. Throws
/// NonCommuting / NotParabolic.
GroupBallSnapshot lattice_ball(const MoebiusMap& delta,
                               const MoebiusMap& delta_hat, double R);

/// The index window |a| <= a_max, |b| <= b_max; radius is the max metric
/// norm over the window.
GroupBallSnapshot lattice_window(const MoebiusMap& delta,
                                 const MoebiusMap& delta_hat, long long a_max,
                                 long long b_max);

/// Symmetric max-min (Hausdorff) distance between two snapshots of equal
/// radius, in the sign-normalized Frobenius metric. Throws RadiusMismatch.
double hausdorff_distance_ball(const GroupBallSnapshot& s1,
                               const GroupBallSnapshot& s2);

struct GeomConvergenceRow {
  long long n = 0;
  long long m = 0;
  double sup_residual = 0.0;     // condition 1: lattice approximated by powers
  double spurious_margin = 0.0;  // condition 2: in-ball powers near the lattice
  bool widened = false;          // exponent search window had to grow
};

struct GeomConvergenceReport {
  std::vector<GeomConvergenceRow> rows;
  bool sup_trend_decreasing() const;
  bool margin_trend_decreasing() const;
};

struct GeomCheckOptions {
  long long search_window = 2;   // condition 1: j in a m_n + b +- window
  double widen_threshold = 0.1;  // widen the window past this residual
  double ball_slack = 0.05;      // condition 2: accept powers within R + slack
  bool rank2 = true;             // compare against the rank-2 lattice
};

/// Desk-scale check of geometric convergence of the cyclic groups <A_n> to
/// the translation lattice: condition 1 finds, for every lattice element
/// in the ball, a power A_n^j (j near a m_n + b) approximating it;
/// condition 2 scans all powers landing inside the ball and measures their
/// distance to the lattice. Both residuals must trend to zero.
GeomConvergenceReport cyclic_geom_limit_check(
    const SyntheticFamily& fam, const GroupBallSnapshot& target,
    const std::vector<long long>& n_list, const GeomCheckOptions& opt = {});

/// Convenience overload: target ball built from (T_2, T_w) with radius R.
GeomConvergenceReport cyclic_geom_limit_check(
    const SyntheticFamily& fam, double R,
    const std::vector<long long>& n_list, const GeomCheckOptions& opt = {});

}  // namespace ptorus
