// Helpers shared by the test suites: relative error, finite-difference
// derivatives along the real direction of a complex argument, and seeded
// random parameter draws.
#ifndef HEUN_TEST_UTIL_HPP
#define HEUN_TEST_UTIL_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <random>

#include "heun/numeric.hpp"

namespace test_util {

using heun::cplx;

inline double rel_err(const cplx &got, const cplx &want) {
  const double scale = std::max(std::abs(want), 1e-30);
  return std::abs(got - want) / scale;
}

// 4th-order central differences; f is evaluated at u + k*h for real h.
struct Derivs {
  cplx f0, d1, d2;
};

inline Derivs fd_stencil(const std::function<cplx(cplx)> &f, const cplx &u,
                         double h) {
  const cplx fm2 = f(u - 2.0 * h), fm1 = f(u - h), f0 = f(u),
             fp1 = f(u + h), fp2 = f(u + 2.0 * h);
  Derivs d;
  d.f0 = f0;
  d.d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
  d.d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
  return d;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(unsigned long seed) : gen(seed) {}

  double uniform(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(gen);
  }

  cplx box(double re_lo, double re_hi, double im_lo, double im_hi) {
    return {uniform(re_lo, re_hi), uniform(im_lo, im_hi)};
  }

  // Complex value in a disk, with modulus log-uniform in [r_lo, r_hi].
  cplx disk(double r_lo, double r_hi) {
    const double r = std::exp(uniform(std::log(r_lo), std::log(r_hi)));
    const double th = uniform(-heun::pi_const, heun::pi_const);
    return {r * std::cos(th), r * std::sin(th)};
  }

  // Value kept away from all integers by at least margin.
  cplx off_integer(double re_lo, double re_hi, double margin) {
    for (;;) {
      const cplx z = box(re_lo, re_hi, -0.5, 0.5);
      if (std::abs(z.real() - std::round(z.real())) > margin)
        return z;
    }
  }
};

} // namespace test_util

#endif
