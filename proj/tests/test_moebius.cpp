#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ptorus/errors.hpp"
#include "ptorus/moebius.hpp"
#include "test_util.hpp"

using namespace ptorus;
namespace tu = ptorus::testutil;

namespace {
const double kPi = std::acos(-1.0);
}

TEST_CASE("translations compose additively") {
  const MoebiusMap t = compose(MoebiusMap::translation(2.0),
                               MoebiusMap::translation(3.0));
  CHECK(projectively_equal(t, MoebiusMap::translation(5.0), 1e-14));
}

TEST_CASE("U_mu U_nu^{-1} = T_{mu-nu}") {
  const Complex mu{1.0, 2.0}, nu{0.0, 3.0};
  const MoebiusMap lhs =
      compose(MoebiusMap::maskit_u(mu), MoebiusMap::maskit_u(nu).inverse());
  CHECK(frobenius_distance(lhs, MoebiusMap::translation(mu - nu)) < 1e-14);
}

TEST_CASE("f composed with its inverse is the identity") {
  auto g = tu::rng(11);
  for (int i = 0; i < 50; ++i) {
    const MoebiusMap f = tu::random_moebius(g);
    CHECK(projectively_equal(compose(f, f.inverse()), MoebiusMap::identity(),
                             1e-12));
  }
}

TEST_CASE("determinant stays unit through long composition chains") {
  auto g = tu::rng(12);
  MoebiusMap acc = MoebiusMap::identity();
  for (int i = 0; i < 10000; ++i) acc = compose(acc, tu::random_moebius(g));
  CHECK(std::abs(acc.det() - 1.0) < tol::det_unit);
}

TEST_CASE("compose and classify agree projectively on M and -M") {
  auto g = tu::rng(13);
  for (int i = 0; i < 50; ++i) {
    const MoebiusMap f = tu::random_moebius(g);
    const MoebiusMap nf =
        MoebiusMap::from_entries(-f.a(), -f.b(), -f.c(), -f.d());
    CHECK(frobenius_distance(f, nf) < 1e-14);
    CHECK(classify(f) == classify(nf));
    const MoebiusMap h = tu::random_moebius(g);
    CHECK(projectively_equal(compose(f, h), compose(nf, h), 1e-10));
  }
}

TEST_CASE("classification of the standard examples") {
  CHECK(classify(MoebiusMap::translation(2.0)) == IsometryClass::Parabolic);
  CHECK(classify(MoebiusMap::maskit_u({0.0, 2.0})) ==
        IsometryClass::Parabolic);  // trace i * 2i = -2
  CHECK(classify(MoebiusMap::diagonal(2.0)) == IsometryClass::Loxodromic);
  CHECK(classify(MoebiusMap::identity()) == IsometryClass::Identity);
  CHECK(classify(MoebiusMap::diagonal(std::polar(1.0, 0.7))) ==
        IsometryClass::Elliptic);
}

TEST_CASE("classification is conjugation invariant") {
  auto g = tu::rng(14);
  for (int i = 0; i < 60; ++i) {
    const MoebiusMap f = tu::random_moebius(g);
    const MoebiusMap c = tu::random_moebius(g);
    CHECK(classify(f) == classify(compose(compose(c, f), c.inverse())));
  }
}

TEST_CASE("complex translation length on diagonal models") {
  CHECK(std::abs(complex_translation_length(MoebiusMap::diagonal(2.0)) -
                 Complex(std::log(4.0), 0.0)) < 1e-12);
  // multiplier 4 e^{i pi/3}
  const Complex k = std::sqrt(4.0 * std::polar(1.0, kPi / 3.0));
  CHECK(std::abs(complex_translation_length(MoebiusMap::diagonal(k)) -
                 Complex(std::log(4.0), kPi / 3.0)) < 1e-12);
  CHECK_THROWS_AS(complex_translation_length(MoebiusMap::translation(2.0)),
                  NotLoxodromic);
}

TEST_CASE("exp of translation length equals the eigenvalue multiplier") {
  auto g = tu::rng(15);
  for (int i = 0; i < 60; ++i) {
    const MoebiusMap f = tu::random_loxodromic(g);
    const Complex lambda = complex_translation_length(f);
    CHECK(lambda.real() > 0.0);
    CHECK(lambda.imag() > -kPi - 1e-15);
    CHECK(lambda.imag() <= kPi + 1e-15);
    // Larger eigenvalue from the trace.
    const Complex t = f.trace();
    const Complex root = std::sqrt(t * t - 4.0);
    Complex k = (t + root) / 2.0;
    if (std::abs(k) < 1.0) k = (t - root) / 2.0;
    CHECK(std::abs(std::exp(lambda) - k * k) < 1e-10 * std::norm(k));
  }
}

TEST_CASE("fixed points of the standard examples") {
  const auto ft = fixed_points(MoebiusMap::translation(2.0));
  REQUIRE(ft.size() == 1);
  CHECK(ft[0].is_infinity());

  const auto fu = fixed_points(MoebiusMap::maskit_u({0.0, 2.0}));
  REQUIRE(fu.size() == 1);  // (z - i)^2
  CHECK(std::abs(fu[0].value() - Complex(0.0, 1.0)) < 1e-9);

  const auto fd = fixed_points(MoebiusMap::diagonal(2.0));
  REQUIRE(fd.size() == 2);
  const bool has_zero = (!fd[0].is_infinity() && std::abs(fd[0].value()) < 1e-14) ||
                        (!fd[1].is_infinity() && std::abs(fd[1].value()) < 1e-14);
  const bool has_inf = fd[0].is_infinity() || fd[1].is_infinity();
  CHECK(has_zero);
  CHECK(has_inf);

  CHECK_THROWS_AS(fixed_points(MoebiusMap::identity()), IdentityMap);
}

TEST_CASE("fixed points satisfy f(z) = z") {
  auto g = tu::rng(16);
  for (int i = 0; i < 60; ++i) {
    const MoebiusMap f = tu::random_moebius(g);
    if (classify(f) == IsometryClass::Identity) continue;
    for (const auto& fp : fixed_points(f))
      CHECK(chordal_distance(f.apply(fp), fp) < 1e-6);
  }
}

TEST_CASE("hyperbolic distance") {
  CHECK(std::abs(hyperbolic_distance({0, 1}, {0, 2}) - std::log(2.0)) <
        1e-12);
  CHECK(hyperbolic_distance({0.3, 0.8}, {0.3, 0.8}) == 0.0);
  auto g = tu::rng(17);
  for (int i = 0; i < 40; ++i) {
    const Complex z = tu::random_complex(g, -3, 3, 0.1, 4);
    const Complex w = tu::random_complex(g, -3, 3, 0.1, 4);
    CHECK(hyperbolic_distance(z, w) ==
          doctest::Approx(hyperbolic_distance(w, z)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(hyperbolic_distance({0, -1}, {0, 1}), NotInUpperHalfPlane);
}

TEST_CASE("metric conventions") {
  // Radius semantics: T_z sits at distance |z| from the identity.
  CHECK(frobenius_from_identity(MoebiusMap::translation({3.0, 4.0})) ==
        doctest::Approx(5.0).epsilon(1e-14));
  auto g = tu::rng(18);
  for (int i = 0; i < 20; ++i) {
    const MoebiusMap f = tu::random_moebius(g);
    const MoebiusMap nf =
        MoebiusMap::from_entries(-f.a(), -f.b(), -f.c(), -f.d());
    CHECK(projective_distance(f, nf) < 1e-14);
    CHECK(projective_distance(f, f) == 0.0);
  }
}

TEST_CASE("evaluation handles infinity and poles explicitly") {
  const MoebiusMap u = MoebiusMap::maskit_u({0.5, 1.5});
  CHECK(!u.apply(RiemannPoint::infinity()).is_infinity());
  // U_mu maps 0 to infinity (c z + d = 0 at z = 0).
  CHECK(u.apply(RiemannPoint(Complex{0.0, 0.0})).is_infinity());
  const MoebiusMap t = MoebiusMap::translation(1.0);
  CHECK(t.apply(RiemannPoint::infinity()).is_infinity());
  CHECK(RiemannPoint::infinity() == RiemannPoint::infinity());
  CHECK(RiemannPoint(Complex{1, 0}) != RiemannPoint::infinity());
}
