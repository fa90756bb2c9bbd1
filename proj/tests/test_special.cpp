#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <iostream>

#include "heun/quad_core.hpp"
#include "heun/special.hpp"
#include "test_util.hpp"

using namespace heun;
using namespace heun::special;
using test_util::fd_stencil;
using test_util::rel_err;

namespace {

// Independent oracle for the exponential integral E1(x), x > 0, by the
// standard continued fraction e^{-x}/(x+1- 1/(x+3- 4/(x+5- ...))) evaluated
// with modified Lentz.  Used to check psi(1,1;x) = e^x E1(x).
double e1_cf(double x) {
  const double tiny = 1e-300;
  double f = tiny, C = f, D = 0.0;
  for (int n = 0; n < 500; ++n) {
    const double a = (n == 0) ? 1.0 : -double(n) * double(n);
    const double b = x + 2.0 * n + 1.0;
    D = b + a * D;
    if (D == 0.0)
      D = tiny;
    C = b + a / C;
    if (C == 0.0)
      C = tiny;
    D = 1.0 / D;
    const double delta = C * D;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16)
      break;
  }
  return std::exp(-x) * f;
}

} // namespace

TEST_CASE("confluent Phi: fixed values") {
  // Empty tail at u = 0.
  CHECK(rel_err(phi({{0.7, 0.2}, {1.3, 0.0}}, 0.0), 1.0) < 1e-15);
  // Phi(1,1;u) = e^u.
  CHECK(rel_err(phi({1.0, 1.0}, 2.5), std::exp(2.5)) < 1e-13);
  // First Kummer relation at a specific point.
  {
    const cplx u{0.5, 0.2};
    const cplx lhs = phi({0.3, 1.7}, u);
    const cplx rhs = std::exp(u) * phi({1.4, 1.7}, -u);
    CHECK(rel_err(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("confluent Phi: degenerate c rejected") {
  CHECK_THROWS_AS((void)phi({1.0, 0.0}, 1.0), DegenerateParameter);
  CHECK_THROWS_AS((void)phi({1.0, -3.0}, 1.0), DegenerateParameter);
}

TEST_CASE("confluent Psi: fixed values") {
  // Terminating case against the explicit degree-2 Laguerre polynomial
  // 2! L_2^{1/2}(y) with L_2^a(y) = (a+1)(a+2)/2 - (a+2) y + y^2/2.
  {
    const double al = 0.5, y = 1.2;
    const double expected =
        2.0 * ((al + 1.0) * (al + 2.0) / 2.0 - (al + 2.0) * y + y * y / 2.0);
    CHECK(rel_err(psi({-2.0, al + 1.0}, y), expected) < 1e-14);
    CHECK(rel_err(cplx(2.0) * laguerre(2, al, y), expected) < 1e-14);
  }
  // psi(1,1;x) = e^x E1(x) with E1 from an independent continued fraction.
  {
    const double x = 10.0;
    const double expected = std::exp(x) * e1_cf(x);
    CHECK(rel_err(psi({1.0, 1.0}, x), expected) < 1e-12);
  }
  // Second Kummer relation at a specific point.
  {
    const cplx u{2.0, 1.0};
    const cplx lhs = psi({0.4, 1.6}, u);
    const cplx rhs = pow_principal(u, cplx(-0.6)) * psi({-0.2, 0.4}, u);
    CHECK(rel_err(lhs, rhs) < 1e-12);
  }
  CHECK_THROWS_AS((void)psi({0.4, 1.3}, 0.0), PoleAtOrigin);
}

TEST_CASE("Kummer identities over random sample") {
  test_util::Rng rng(20240901ul);
  int n_phi = 0, n_psi = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const cplx a = rng.box(-4.0, 4.0, -2.0, 2.0);
    const cplx c = rng.off_integer(-4.0, 4.0, 0.15);
    cplx u = rng.disk(0.3, 25.0);

    {
      const cplx lhs = phi({a, c}, u);
      const cplx rhs = std::exp(u) * phi({c - a, c}, -u);
      CHECK(rel_err(lhs, rhs) < 1e-12);
      ++n_phi;
    }
    // Keep psi away from its branch cut for the two-route comparison.
    if (std::abs(std::arg(u)) < 2.8 && !near_nonpositive_integer(a, 1e-3)) {
      const cplx lhs = psi({a, c}, u);
      const cplx rhs =
          pow_principal(u, 1.0 - c) * psi({1.0 + a - c, 2.0 - c}, u);
      CHECK(rel_err(lhs, rhs) < 1e-11);
      ++n_psi;
    }
  }
  CHECK(n_phi == 100);
  CHECK(n_psi > 60);
}

TEST_CASE("Gauss F: fixed values") {
  CHECK(rel_err(gauss_f({0.4, 0.7, 1.2}, 0.0), 1.0) < 1e-15);
  // F(1/2,-1/2;1/2;y^2) = cos(arcsin y).
  {
    const double y = 0.3;
    CHECK(rel_err(gauss_f({0.5, -0.5, 0.5}, y * y), std::cos(std::asin(y))) <
          1e-13);
  }
  // Euler relation F = (1-u)^{c-a-b} F(c-a,c-b;c;u).
  {
    const cplx a{0.2, 0.0}, b{0.9, 0.0}, c{1.4, 0.0}, u{0.3, 0.1};
    const cplx lhs = gauss_f({a, b, c}, u);
    const cplx rhs = pow_principal(1.0 - u, c - a - b) *
                     gauss_f({c - a, c - b, c}, u);
    CHECK(rel_err(lhs, rhs) < 1e-12);
  }
  CHECK_THROWS_AS((void)gauss_f({0.3, 0.4, -1.0}, 0.2), DegenerateParameter);
  CHECK_THROWS_AS((void)gauss_f({0.3, 0.4, 1.1}, 1.5), BranchCut);
}

TEST_CASE("Gauss F: Euler and Pfaff over random sample") {
  test_util::Rng rng(77001ul);
  for (int trial = 0; trial < 60; ++trial) {
    const cplx a = rng.box(-2.0, 2.0, -1.0, 1.0);
    const cplx b = rng.box(-2.0, 2.0, -1.0, 1.0);
    const cplx c = rng.off_integer(-3.0, 3.0, 0.15);
    const cplx u = rng.disk(0.05, 0.85);

    const cplx direct = gauss_f({a, b, c}, u);
    const cplx euler = pow_principal(1.0 - u, c - a - b) *
                       gauss_f({c - a, c - b, c}, u);
    CHECK(rel_err(direct, euler) < 1e-11);

    const cplx pfaff = pow_principal(1.0 - u, -a) *
                       gauss_f({a, c - b, c}, u / (u - 1.0));
    CHECK(rel_err(direct, pfaff) < 1e-11);
  }
}

TEST_CASE("Bessel: closed forms at half-integer order") {
  {
    const double x = 2.0;
    const double expected = std::sqrt(2.0 / (pi_const * x)) * std::sin(x);
    CHECK(rel_err(bessel({BesselTag::J, 0.5}, x), expected) < 1e-14);
  }
  {
    const double x = 1.5;
    const cplx expected = cplx(0.0, -1.0) *
                          std::sqrt(2.0 / (pi_const * x)) *
                          std::exp(cplx(0.0, x));
    CHECK(rel_err(bessel({BesselTag::H1, 0.5}, x), expected) < 1e-14);
  }
  // Order -1/2 columns.
  {
    const double x = 2.7;
    const double pref = std::sqrt(2.0 / (pi_const * x));
    CHECK(rel_err(bessel({BesselTag::J, -0.5}, x), pref * std::cos(x)) < 1e-14);
    CHECK(rel_err(bessel({BesselTag::Y, 0.5}, x), -pref * std::cos(x)) < 1e-14);
    CHECK(rel_err(bessel({BesselTag::Y, -0.5}, x), pref * std::sin(x)) < 1e-14);
  }
}

TEST_CASE("Bessel: Y from the Hankel pair") {
  const cplx al{0.7, 0.0};
  const cplx y{3.0, 0.5};
  const cplx h1 = bessel({BesselTag::H1, al}, y);
  const cplx h2 = bessel({BesselTag::H2, al}, y);
  const cplx yv = bessel({BesselTag::Y, al}, y);
  CHECK(rel_err(yv, (h1 - h2) / cplx(0.0, 2.0)) < 1e-12);
  CHECK_THROWS_AS((void)bessel({BesselTag::Y, 0.3}, 0.0), PoleAtOrigin);
}

TEST_CASE("Bessel: J/H consistency across evaluation regimes") {
  test_util::Rng rng(5150ul);
  for (int trial = 0; trial < 40; ++trial) {
    const cplx al = rng.box(-3.0, 3.0, -1.0, 1.0);
    const cplx y = rng.disk(0.5, 60.0);
    const cplx j = bessel({BesselTag::J, al}, y);
    const cplx h1 = bessel({BesselTag::H1, al}, y);
    const cplx h2 = bessel({BesselTag::H2, al}, y);
    // J = (H1 + H2)/2 and the dominant member controls the scale.
    const double scale = std::max({std::abs(h1), std::abs(h2), 1e-30});
    CHECK(std::abs(j - 0.5 * (h1 + h2)) / scale < 1e-10);
  }
}

TEST_CASE("Bessel-confluent connection") {
  // Phi(alpha+1/2, 2 alpha+1; -2iy) = Gamma(alpha+1) e^{-iy} (y/2)^{-alpha}
  // J_alpha(y), checked over |y| <= 20, |alpha| <= 5.
  test_util::Rng rng(31415ul);
  for (int trial = 0; trial < 25; ++trial) {
    const cplx al = rng.box(-4.5, 4.5, -1.0, 1.0);
    if (near_nonpositive_integer(2.0 * al + 1.0, 1e-3))
      continue;
    const cplx y = rng.disk(0.3, 20.0);
    const cplx lhs = phi({al + 0.5, 2.0 * al + 1.0}, cplx(0.0, -2.0) * y);
    const cplx rhs = std::exp(lgamma_c(al + 1.0)) *
                     std::exp(cplx(0.0, -1.0) * y) *
                     pow_principal(0.5 * y, -al) * bessel({BesselTag::J, al}, y);
    CHECK(rel_err(lhs, rhs) < 1e-10);
  }
}

TEST_CASE("confluent limit to Bessel at large a") {
  // lim_{a->inf} Phi(a,c;-y/a) = Gamma(c) y^{(1-c)/2} J_{c-1}(2 sqrt y);
  // at a = 1e4 the 1/a error dominates, so a 1e-3 window applies.
  const double a = 1.0e4;
  const cplx c{1.3, 0.0};
  const double y = 2.5;
  const cplx lhs = phi({a, c}, -y / a);
  const cplx rhs = std::exp(lgamma_c(c)) *
                   std::pow(y, (1.0 - c.real()) / 2.0) *
                   bessel({BesselTag::J, c - 1.0}, 2.0 * std::sqrt(y));
  CHECK(rel_err(lhs, rhs) < 1e-3);
}

TEST_CASE("confluent variants satisfy the defining ODE") {
  const ConfluentParams p{{0.35, 0.1}, {1.45, 0.0}};
  const cplx u0{0.8, 0.3};
  for (int i = 1; i <= 4; ++i) {
    auto f = [&](cplx u) { return confluent_variant(i, p, u); };
    const double h = 1e-3 * (1.0 + std::abs(u0));
    const auto d = fd_stencil(f, u0, h);
    const cplx resid = u0 * d.d2 + (p.c - u0) * d.d1 - p.a * d.f0;
    const double scale = std::max(1.0, std::abs(d.f0));
    CHECK(std::abs(resid) / scale < 1e-8);
  }
  // Variant 2 against its explicit definition.
  {
    const ConfluentParams q{{0.3, 0.0}, {1.4, 0.0}};
    const cplx u{1.0, 1.0};
    const cplx direct = confluent_variant(2, q, u);
    const cplx expected = std::exp(u) * pow_principal(u, cplx(-0.4)) *
                          phi({0.7, 0.6}, -u);
    CHECK(rel_err(direct, expected) < 1e-13);
  }
}

TEST_CASE("Gauss variants satisfy the defining ODE") {
  const GaussParams p{{0.45, 0.1}, {0.8, -0.2}, {1.35, 0.0}};
  // Variants at their own singular points need arguments in their domains.
  const cplx at0{0.3, 0.15};
  const cplx at1{0.75, 0.2};
  const cplx atInf{3.0, 1.0};
  const cplx pts[6] = {at0, at0, at1, at1, atInf, atInf};
  for (int j = 1; j <= 6; ++j) {
    auto f = [&](cplx u) { return gauss_variant(j, p, u); };
    const cplx u0 = pts[j - 1];
    const double h = 1e-3;
    const auto d = fd_stencil(f, u0, h);
    const cplx resid = u0 * (1.0 - u0) * d.d2 +
                       (p.c - (p.a + p.b + 1.0) * u0) * d.d1 -
                       p.a * p.b * d.f0;
    const double scale = std::max(1.0, std::abs(d.f0));
    CHECK(std::abs(resid) / scale < 1e-8);
  }
  // Variant 2 against its explicit definition.
  {
    const GaussParams q{{0.3, 0.0}, {0.8, 0.0}, {1.6, 0.0}};
    const cplx u{0.2, 0.0};
    const cplx direct = gauss_variant(2, q, u);
    const cplx expected = pow_principal(u, cplx(-0.6)) *
                          gauss_f({-0.3, 0.2, 0.4}, u);
    CHECK(rel_err(direct, expected) < 1e-12);
  }
}
