#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptorus/maskit.hpp"

namespace ptorus {

/// A finite sampled parameter set in the complex plane with per-point
/// provenance. Clouds are samples of the named regions, never claimed to
/// be the full sets.
struct RegionCloud {
  enum class Tag { M, Mstar, Mp, BersGeom, BumpSet };
  Tag tag = Tag::M;
  long long p = 0;                        // for Mp / BumpSet
  std::optional<Complex> nu;              // for BersGeom
  std::optional<FareySlope> chart_slope;  // for BumpSet

  struct Point {
    Complex xi{};
    int mu_index = -1;  // index of the mu sample, -1 when not applicable
    int nu_index = -1;  // index of the nu sample, -1 when not applicable
    std::string branch;
  };
  std::vector<Point> points;

  double min_im() const;
};

const char* to_string(RegionCloud::Tag t);

/// Wraps raw slice samples as an M-tagged cloud.
RegionCloud m_samples(const std::vector<Complex>& mus);

/// The pairwise set {(p+1) mu - p conj(nu)} over the sample cloud; p = 0
/// returns the samples themselves. Requires p >= 0.
RegionCloud bump_set(long long p, const RegionCloud& samples);

/// Witness for folding higher bump sets into the first one: for p = k+1,
/// (p+1) mu - p conj(nu) = 2 mu - ((k+1) conj(nu) - k mu) exactly, and the
/// conjugate-side candidate (k+1) nu - k conj(mu) is membership-tested.
struct SubsetWitness {
  long long p = 0;
  Complex mu{}, nu{};
  Complex mu_prime{};       // = mu
  Complex nu_prime_bar{};   // (k+1) conj(nu) - k mu
  Complex nu_prime{};       // (k+1) nu - k conj(mu)
  Complex lhs{}, rhs{};     // the two sides of the identity
  double identity_error = 0.0;
  Membership conjugate_membership = Membership::Unknown;
};

SubsetWitness subset_witness(Complex mu, Complex nu, long long p,
                             const BoundaryTrace& boundary,
                             const MembershipOptions& opt = {});

/// Parameter cloud of the geometric limit of slices approaching nu
/// tangentially: the samples themselves plus their conjugates shifted by
/// 2 conj(nu); branches tagged "M" and "Mstar+2conj(nu)".
RegionCloud bers_geom_limit_cloud(Complex nu, const RegionCloud& samples);

/// Integer determinant-1 chart sending 1/0 to y, canonicalized by taking
/// the continued-fraction parent of y as second column (the chart is only
/// unique up to a twist power).
struct SlopeChart {
  FareySlope y;
  long long m[2][2] = {{1, 0}, {0, 1}};

  FareySlope apply(const FareySlope& s) const;
  long long det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
};

SlopeChart sigma_chart(const FareySlope& y);

/// The first bump set labelled as the parameter set of the slope-y bump
/// locus. The chart transports labels only; the mu-plane point set is
/// slope-independent.
RegionCloud bump_boundary_set(const FareySlope& y, const RegionCloud& samples);

}  // namespace ptorus
