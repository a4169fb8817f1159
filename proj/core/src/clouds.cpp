#include "ptorus/clouds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ptorus/errors.hpp"

namespace ptorus {

double RegionCloud::min_im() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& pt : points) m = std::min(m, pt.xi.imag());
  return m;
}

const char* to_string(RegionCloud::Tag t) {
  switch (t) {
    case RegionCloud::Tag::M:
      return "M";
    case RegionCloud::Tag::Mstar:
      return "Mstar";
    case RegionCloud::Tag::Mp:
      return "Mp";
    case RegionCloud::Tag::BersGeom:
      return "BersGeom";
    default:
      return "BumpSet";
  }
}

RegionCloud m_samples(const std::vector<Complex>& mus) {
  RegionCloud cloud;
  cloud.tag = RegionCloud::Tag::M;
  cloud.points.reserve(mus.size());
  for (size_t i = 0; i < mus.size(); ++i)
    cloud.points.push_back({mus[i], static_cast<int>(i), -1, "M"});
  return cloud;
}

RegionCloud bump_set(long long p, const RegionCloud& samples) {
  if (p < 0) throw std::invalid_argument("bump_set: p must be >= 0");
  RegionCloud out;
  out.tag = RegionCloud::Tag::Mp;
  out.p = p;
  if (p == 0) {
    out.points = samples.points;
    return out;
  }
  out.points.reserve(samples.points.size() * samples.points.size());
  for (size_t i = 0; i < samples.points.size(); ++i)
    for (size_t j = 0; j < samples.points.size(); ++j) {
      const Complex xi =
          static_cast<double>(p + 1) * samples.points[i].xi -
          static_cast<double>(p) * std::conj(samples.points[j].xi);
      out.points.push_back(
          {xi, static_cast<int>(i), static_cast<int>(j), "Mp"});
    }
  return out;
}

SubsetWitness subset_witness(Complex mu, Complex nu, long long p,
                             const BoundaryTrace& boundary,
                             const MembershipOptions& opt) {
  if (p < 2) throw std::invalid_argument("subset_witness: p must be >= 2");
  const long long k = p - 1;
  SubsetWitness w;
  w.p = p;
  w.mu = mu;
  w.nu = nu;
  w.mu_prime = mu;
  w.nu_prime_bar = static_cast<double>(k + 1) * std::conj(nu) -
                   static_cast<double>(k) * mu;
  w.nu_prime = static_cast<double>(k + 1) * nu -
               static_cast<double>(k) * std::conj(mu);
  w.lhs = static_cast<double>(p + 1) * mu -
          static_cast<double>(p) * std::conj(nu);
  w.rhs = 2.0 * w.mu_prime - w.nu_prime_bar;
  w.identity_error = std::abs(w.lhs - w.rhs);
  w.conjugate_membership = membership(w.nu_prime, boundary, opt);
  return w;
}

RegionCloud bers_geom_limit_cloud(Complex nu, const RegionCloud& samples) {
  RegionCloud out;
  out.tag = RegionCloud::Tag::BersGeom;
  out.nu = nu;
  out.points.reserve(samples.points.size() * 2);
  for (size_t i = 0; i < samples.points.size(); ++i)
    out.points.push_back(
        {samples.points[i].xi, static_cast<int>(i), -1, "M"});
  const Complex shift = 2.0 * std::conj(nu);
  for (size_t i = 0; i < samples.points.size(); ++i)
    out.points.push_back({std::conj(samples.points[i].xi) + shift,
                          static_cast<int>(i), -1, "Mstar+2conj(nu)"});
  return out;
}

FareySlope SlopeChart::apply(const FareySlope& s) const {
  return make_slope(m[0][0] * s.p + m[0][1] * s.q,
                    m[1][0] * s.p + m[1][1] * s.q);
}

SlopeChart sigma_chart(const FareySlope& y) {
  const FareySlope c = make_slope(y.p, y.q);
  SlopeChart chart;
  chart.y = c;
  if (is_infinity(c)) return chart;  // identity
  if (c.q == 1) {
    // Integer slope: continued-fraction parent is 1/0 (as -1/0).
    chart.m[0][0] = c.p;
    chart.m[0][1] = -1;
    chart.m[1][0] = 1;
    chart.m[1][1] = 0;
    return chart;
  }
  const long long b = mod_inverse(c.p, c.q);
  const long long a = (c.p * b - 1) / c.q;
  chart.m[0][0] = c.p;
  chart.m[0][1] = a;
  chart.m[1][0] = c.q;
  chart.m[1][1] = b;
  return chart;
}

RegionCloud bump_boundary_set(const FareySlope& y,
                              const RegionCloud& samples) {
  RegionCloud out = bump_set(1, samples);
  out.tag = RegionCloud::Tag::BumpSet;
  out.p = 1;
  out.chart_slope = sigma_chart(y).y;
  for (auto& pt : out.points) pt.branch = "B_y(1)";
  return out;
}

}  // namespace ptorus
