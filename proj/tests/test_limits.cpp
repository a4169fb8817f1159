#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ptorus/errors.hpp"
#include "ptorus/limit_classifier.hpp"
#include "test_util.hpp"

using namespace ptorus;
namespace tu = ptorus::testutil;

namespace {
const double kPi = std::acos(-1.0);
const Complex kI{0.0, 1.0};
using Kind = ConvergenceVerdict::Kind;

TwistSequenceSpec ac_spec(long long p, Complex mu, Complex nu) {
  TwistSequenceSpec s;
  s.name = "ratio " + std::to_string(p);
  s.x = BoundarySide::twist_orbit({0.5, 1.0}, IntegerSequenceSpec::affine(-p, 0));
  s.y = BoundarySide::twist_orbit({0.2, 1.3},
                                  IntegerSequenceSpec::affine(-(p + 1), 0));
  s.mu = mu;
  s.nu = nu;
  return s;
}
}  // namespace

TEST_CASE("sequence spec evaluation") {
  IntegerSequenceSpec s = IntegerSequenceSpec::affine(3, -2);
  CHECK(s.term(1) == 1);
  CHECK(s.term(10) == 28);
  CHECK(s.diverges());
  IntegerSequenceSpec alt = IntegerSequenceSpec::periodic(2, {1, -1});
  CHECK(alt.term(2) == 5);   // 4 + offsets[0]
  CHECK(alt.term(3) == 5);   // 6 + offsets[1]
  IntegerSequenceSpec pre = IntegerSequenceSpec::affine(0, 7);
  pre.prefix = {100, 200};
  CHECK(pre.term(1) == 100);
  CHECK(pre.term(2) == 200);
  CHECK(pre.term(3) == 7);
  CHECK(pre.eventually_constant() == 7);
  CHECK(!alt.eventually_constant());
}

TEST_CASE("solve_pq on the worked examples") {
  SUBCASE("twist ratio 3 : 4") {
    const auto pq = solve_pq(IntegerSequenceSpec::affine(-3, 0),
                             IntegerSequenceSpec::affine(-4, 0));
    REQUIRE(pq.has_value());
    CHECK(pq->first == 3);
    CHECK(pq->second == 0);
  }
  SUBCASE("affine offsets determine q") {
    const auto pq = solve_pq(IntegerSequenceSpec::affine(2, 1),
                             IntegerSequenceSpec::affine(3, 5));
    REQUIRE(pq.has_value());
    CHECK(pq->first == 2);
    CHECK(pq->second == 7);
  }
  SUBCASE("equal speeds never lock") {
    CHECK(!solve_pq(IntegerSequenceSpec::affine(1, 0),
                    IntegerSequenceSpec::affine(1, 0)));
  }
  SUBCASE("prefix values are exempt (tail analysis)") {
    IntegerSequenceSpec k = IntegerSequenceSpec::affine(2, 1);
    k.prefix = {99, -7};
    const auto pq = solve_pq(k, IntegerSequenceSpec::affine(3, 5));
    REQUIRE(pq.has_value());
    CHECK(*pq == std::pair<long long, long long>{2, 7});
  }
}

TEST_CASE("solve_pq swap symmetry") {
  // If (p, q) solves (k, l), then (-1-p, q) solves (l, k): the defining
  // relation is literally the same equation read with the roles swapped.
  auto g = tu::rng(41);
  for (int i = 0; i < 100; ++i) {
    const long long p =
        (static_cast<long long>(g() % 9) - 4 <= -1)
            ? static_cast<long long>(g() % 9) - 6
            : static_cast<long long>(g() % 9) + 1;  // avoid 0, -1
    const long long t = static_cast<long long>(g() % 5) + 1;
    const long long bk = static_cast<long long>(g() % 21) - 10;
    const long long bl = static_cast<long long>(g() % 21) - 10;
    const IntegerSequenceSpec k = IntegerSequenceSpec::affine(p * t, bk);
    const IntegerSequenceSpec l = IntegerSequenceSpec::affine((p + 1) * t, bl);
    const long long q = p * bl - (p + 1) * bk;
    const auto fwd = solve_pq(k, l);
    REQUIRE(fwd.has_value());
    CHECK(*fwd == std::pair<long long, long long>{p, q});
    const auto swapped = solve_pq(l, k);
    REQUIRE(swapped.has_value());
    CHECK(swapped->first == -1 - p);
    CHECK(swapped->second == q);
  }
}

TEST_CASE("predict_limit") {
  const Complex mu{0.3, 2.1}, nu{-0.4, 1.9};
  CHECK(predict_limit(mu, nu, 1, 0) == 2.0 * mu - std::conj(nu));
  CHECK(predict_limit(mu, nu, 0, 0) == mu);
  CHECK(std::abs(predict_limit({0, 2}, {0, 2}, 2, 1) - Complex(2.0, 10.0)) <
        1e-15);
}

TEST_CASE("re-indexing invariance") {
  CHECK(reindex_invariance_check({0.3, 2.1}, {-0.4, 1.9}, 3, -2, 0, 0));
  CHECK(reindex_invariance_check({0.3, 2.1}, {-0.4, 1.9}, 3, -2, 1, 0));
  auto g = tu::rng(42);
  for (int i = 0; i < 100; ++i) {
    const Complex mu = tu::random_complex(g, -3, 3, 0.5, 4);
    const Complex nu = tu::random_complex(g, -3, 3, 0.5, 4);
    const long long p = static_cast<long long>(g() % 11) - 5;
    const long long q = static_cast<long long>(g() % 11) - 5;
    const long long u = static_cast<long long>(g() % 11) - 5;
    const long long v = static_cast<long long>(g() % 11) - 5;
    CHECK(reindex_invariance_check(mu, nu, p, q, u, v));
  }
}

TEST_CASE("symbolic approach classification") {
  CHECK(classify_boundary_approach(BoundarySide::path(1, 0, 1, 0)) ==
        Approach::Horocyclic);
  CHECK(classify_boundary_approach(BoundarySide::path(1, 0, 0, 1)) ==
        Approach::Tangential);
  CHECK(classify_boundary_approach(BoundarySide::at_infinity()) ==
        Approach::Horocyclic);
  CHECK(classify_boundary_approach(BoundarySide::twist_orbit(
            {0, 1}, IntegerSequenceSpec::affine(2, 0))) ==
        Approach::Tangential);
  CHECK_THROWS_AS(
      classify_boundary_approach(BoundarySide::path(0, 3, 0, 1)),
      NotConvergingToInfinity);
}

TEST_CASE("sampled approach classification") {
  std::vector<RiemannPoint> horo, tang, constinf, stay;
  for (int n = 1; n <= 40; ++n) {
    horo.push_back(Complex(n, n));
    tang.push_back(Complex(n, 1));
    constinf.push_back(RiemannPoint::infinity());
    stay.push_back(Complex(3, 1));
  }
  CHECK(classify_boundary_approach(horo) == Approach::Horocyclic);
  CHECK(classify_boundary_approach(tang) == Approach::Tangential);
  CHECK(classify_boundary_approach(constinf) == Approach::Horocyclic);
  CHECK_THROWS_AS(classify_boundary_approach(stay),
                  NotConvergingToInfinity);
}

TEST_CASE("classifier: twisting families converge exotically") {
  const Complex mu{0.3, 2.1}, nu{-0.4, 1.9};
  for (long long p : {-3ll, -2ll, 1ll, 2ll, 3ll}) {
    const ConvergenceVerdict v = classify_sequence(ac_spec(p, mu, nu));
    CHECK(v.kind == Kind::ConvergesExotic);
    CHECK(v.p == p);
    CHECK(v.q == 0);
    REQUIRE(v.xi.has_value());
    CHECK(*v.xi == predict_limit(mu, nu, p, 0));
    CHECK(v.p != 0);
    CHECK(v.p != -1);
  }
}

TEST_CASE("classifier: divergence and splitting") {
  SUBCASE("horocyclic side diverges") {
    TwistSequenceSpec s;
    s.x = BoundarySide::path(1, 0, 1, 0);  // x_n = n + i n
    s.y = BoundarySide::twist_orbit({0, 1}, IntegerSequenceSpec::affine(1, 0));
    CHECK(classify_sequence(s).kind == Kind::Diverges);
  }
  SUBCASE("quadratic against linear speed diverges") {
    TwistSequenceSpec s;
    s.x = BoundarySide::twist_orbit({0, 1}, IntegerSequenceSpec::affine(1, 0));
    IntegerSequenceSpec sq;
    sq.quad = 1;
    s.y = BoundarySide::twist_orbit({0, 1}, sq);
    CHECK(classify_sequence(s).kind == Kind::Diverges);
  }
  SUBCASE("alternating offset splits") {
    TwistSequenceSpec s;
    s.x = BoundarySide::twist_orbit({0, 1}, IntegerSequenceSpec::affine(1, 0));
    s.y = BoundarySide::twist_orbit({0, 1},
                                    IntegerSequenceSpec::periodic(2, {1, -1}));
    CHECK(classify_sequence(s).kind == Kind::SplitsBySubsequence);
  }
}

TEST_CASE("classifier: standard convergence and unknowns") {
  SUBCASE("both endpoints finite and distinct") {
    TwistSequenceSpec s;
    s.x = BoundarySide::path(0, 0.5, 0, 1.0);
    s.y = BoundarySide::path(0, -0.5, 0, 2.0);
    CHECK(classify_sequence(s).kind == Kind::ConvergesStandard);
  }
  SUBCASE("one finite endpoint against an escaping one") {
    TwistSequenceSpec s;
    s.x = BoundarySide::path(0, 0.5, 0, 1.0);
    s.y = BoundarySide::path(1, 0, 1, 0);
    CHECK(classify_sequence(s).kind == Kind::ConvergesStandard);
  }
  SUBCASE("non-integer drift is not a twist orbit") {
    TwistSequenceSpec s;
    s.x = BoundarySide::path(0.5, 0, 0, 1.0);
    s.y = BoundarySide::twist_orbit({0, 1}, IntegerSequenceSpec::affine(1, 0));
    CHECK(classify_sequence(s).kind == Kind::Unknown);
  }
  SUBCASE("bounded non-constant twist indices are irregular") {
    TwistSequenceSpec s;
    s.x = BoundarySide::twist_orbit({0, 1},
                                    IntegerSequenceSpec::periodic(0, {0, 1}));
    s.y = BoundarySide::twist_orbit({0, 1}, IntegerSequenceSpec::affine(1, 0));
    CHECK(classify_sequence(s).kind == Kind::Unknown);
  }
}

TEST_CASE("classifier verdicts survive re-indexing") {
  const Complex mu{0.3, 2.1}, nu{-0.4, 1.9};
  auto g = tu::rng(43);
  for (int i = 0; i < 30; ++i) {
    const long long p = static_cast<long long>(g() % 4) + 1;
    const long long u = static_cast<long long>(g() % 11) - 5;
    const long long v = static_cast<long long>(g() % 11) - 5;
    TwistSequenceSpec base = ac_spec(p, mu, nu);
    TwistSequenceSpec shifted = base;
    shifted.x.twists.offsets[0] += u;
    shifted.y.twists.offsets[0] += v;
    shifted.mu = mu + 2.0 * static_cast<double>(u);
    shifted.nu = nu + 2.0 * static_cast<double>(v);
    const ConvergenceVerdict v1 = classify_sequence(base);
    const ConvergenceVerdict v2 = classify_sequence(shifted);
    CHECK(v1.kind == v2.kind);
    REQUIRE(v1.xi.has_value());
    REQUIRE(v2.xi.has_value());
    CHECK(std::abs(*v1.xi - *v2.xi) <= 1e-14);
    CHECK(v2.q == v1.q - (p + 1) * u + p * v);
  }
}

TEST_CASE("exotic limits land in the expected half plane") {
  auto g = tu::rng(44);
  for (int i = 0; i < 60; ++i) {
    const Complex mu = tu::random_complex(g, -3, 3, 0.3, 4);
    const Complex nu = tu::random_complex(g, -3, 3, 0.3, 4);
    long long p = static_cast<long long>(g() % 5) + 1;
    if (g() % 2) p = -1 - p;
    const Complex xi = predict_limit(mu, nu, p, 0);
    if (p >= 1) CHECK(xi.imag() > 0.0);
    if (p <= -2) CHECK(xi.imag() < 0.0);
    CHECK(xi.imag() ==
          doctest::Approx((p + 1) * mu.imag() + p * nu.imag()).epsilon(1e-12));
  }
}

TEST_CASE("pivot estimates") {
  const Complex lam = 2.0 * kPi * kI / Complex(5.0, 1.0);
  CHECK(pivot_distance(lam, {5.0, 0.0}, {0.0, 0.0}) < 1e-12);
  const Complex est = pivot_estimate(-2.0 * kPi * kI / 100.0);
  CHECK(std::abs(est - Complex(-100.0, -1.0)) < 1e-12);
  CHECK_THROWS_AS(pivot_estimate({0, 0}), ZeroMultiplier);
  CHECK_THROWS_AS(pivot_distance({0, 0}, {0, 0}, {0, 0}), ZeroMultiplier);
}

TEST_CASE("horocyclic multiplier disk") {
  std::vector<Complex> real_decay, imag_decay, constant;
  for (int n = 1; n <= 50; ++n) {
    real_decay.emplace_back(1.0 / n, 0.0);
    imag_decay.push_back(2.0 * kPi * kI / static_cast<double>(n));
  }
  constant.assign(5, Complex(0.005, 0.0));
  CHECK(multiplier_horocyclic_check(real_decay, 0.01));
  CHECK(!multiplier_horocyclic_check(imag_decay, 0.01));
  CHECK(multiplier_horocyclic_check(constant, 0.01));
}
