// Shared numeric primitives: complex helpers, principal-branch powers,
// complex log-gamma, and a small double-double layer used to re-sum
// cancellation-prone power series to better than working precision.
#ifndef HEUN_NUMERIC_HPP
#define HEUN_NUMERIC_HPP

#include <cmath>
#include <complex>
#include <limits>

namespace heun {

using cplx = std::complex<double>;

inline constexpr double pi_const = 3.141592653589793238462643383279502884;

// ---------------------------------------------------------------------------
// Small predicates

// True if z is within tol of a real integer.
inline bool near_integer(const cplx &z, double tol = 1e-12) {
  return std::abs(z.imag()) <= tol &&
         std::abs(z.real() - std::round(z.real())) <= tol;
}

// True if z is within tol of an integer <= 0.
inline bool near_nonpositive_integer(const cplx &z, double tol = 1e-12) {
  return near_integer(z, tol) && z.real() <= tol;
}

// ---------------------------------------------------------------------------
// Principal-branch power: arg in (-pi, pi].  pow_principal(0, w) is 0 for
// Re(w) > 0, 1 for w = 0, and infinity otherwise (matching the limit along
// any ray).
inline cplx pow_principal(const cplx &base, const cplx &expo) {
  if (base == cplx(0.0)) {
    if (expo == cplx(0.0))
      return {1.0, 0.0};
    if (expo.real() > 0.0)
      return {0.0, 0.0};
    return {std::numeric_limits<double>::infinity(), 0.0};
  }
  return std::exp(expo * std::log(base));
}

// ---------------------------------------------------------------------------
// Complex log-gamma (Lanczos, g = 607/128, 15 terms; reflection for
// Re z < 1/2).  exp(lgamma_c(z)) reproduces Gamma(z) to ~1e-15 relative;
// the imaginary part is continuous on the right half plane but is not
// reduced to a particular branch, which is immaterial after exponentiation.
inline cplx lgamma_c(cplx z) {
  static const double g = 607.0 / 128.0;
  static const double coef[15] = {
      0.99999999999999709182,     57.156235665862923517,
      -59.597960355475491248,     14.136097974741747174,
      -0.49191381609762019978,    0.33994649984811888699e-4,
      0.46523628927048575665e-4,  -0.98374475304879564677e-4,
      0.15808870322491248884e-3,  -0.21026444172410488319e-3,
      0.21743961811521264320e-3,  -0.16431810653676389022e-3,
      0.84418223983852743293e-4,  -0.26190838401581408670e-4,
      0.36899182659531622704e-5};

  if (z.real() < 0.5) {
    // log Gamma(z) = log(pi/sin(pi z)) - log Gamma(1-z), with log sin(pi z)
    // expanded to avoid overflow for large |Im z|.
    const cplx one_minus = 1.0 - z;
    cplx log_sin;
    if (z.imag() >= 0.0) {
      // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z})
      log_sin = cplx(0.0, -pi_const) * z +
                std::log(1.0 - std::exp(cplx(0.0, 2.0 * pi_const) * z)) +
                cplx(std::log(0.5), 0.5 * pi_const);
    } else {
      log_sin = cplx(0.0, pi_const) * z +
                std::log(1.0 - std::exp(cplx(0.0, -2.0 * pi_const) * z)) +
                cplx(std::log(0.5), -0.5 * pi_const);
    }
    return std::log(cplx(pi_const)) - log_sin - lgamma_c(one_minus);
  }

  z -= 1.0;
  cplx a(coef[0]);
  for (int k = 1; k < 15; ++k)
    a += coef[k] / (z + static_cast<double>(k));
  const cplx t = z + g + 0.5;
  return 0.5 * std::log(2.0 * pi_const) + (z + 0.5) * std::log(t) - t +
         std::log(a);
}

// Gamma function; infinite at non-positive integers.
inline cplx gamma_c(const cplx &z) {
  if (near_nonpositive_integer(z, 1e-14))
    return {std::numeric_limits<double>::infinity(), 0.0};
  return std::exp(lgamma_c(z));
}

// Reciprocal gamma, zero at the poles of Gamma.
inline cplx rgamma_c(const cplx &z) {
  if (near_nonpositive_integer(z, 1e-14))
    return {0.0, 0.0};
  return std::exp(-lgamma_c(z));
}

// Rising factorial (a)_n for integer n >= 0 by direct product.
inline cplx pochhammer(const cplx &a, int n) {
  cplx p(1.0);
  for (int k = 0; k < n; ++k)
    p *= a + static_cast<double>(k);
  return p;
}

// ---------------------------------------------------------------------------
// Double-double arithmetic (Dekker/Knuth splits).  Only the operations the
// series summations need: +, -, *, / on real pairs and on complex pairs.
namespace dd {

struct Real {
  double hi = 0.0, lo = 0.0;
};

inline Real two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline Real quick_norm(double s, double e) {
  const double s2 = s + e;
  return {s2, e - (s2 - s)};
}

inline Real two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline Real add(const Real &x, const Real &y) {
  Real s = two_sum(x.hi, y.hi);
  return quick_norm(s.hi, s.lo + x.lo + y.lo);
}

inline Real sub(const Real &x, const Real &y) {
  Real s = two_sum(x.hi, -y.hi);
  return quick_norm(s.hi, s.lo + x.lo - y.lo);
}

inline Real mul(const Real &x, const Real &y) {
  Real p = two_prod(x.hi, y.hi);
  return quick_norm(p.hi, p.lo + x.hi * y.lo + x.lo * y.hi);
}

inline Real div(const Real &x, const Real &y) {
  const double q1 = x.hi / y.hi;
  const Real r = sub(x, mul({q1, 0.0}, y));
  const double q2 = (r.hi + r.lo) / y.hi;
  return quick_norm(q1, q2);
}

struct Complex {
  Real re, im;
};

inline Complex make(const cplx &z) { return {{z.real(), 0.0}, {z.imag(), 0.0}}; }

inline cplx to_cplx(const Complex &z) {
  return {z.re.hi + z.re.lo, z.im.hi + z.im.lo};
}

inline Complex add(const Complex &x, const Complex &y) {
  return {add(x.re, y.re), add(x.im, y.im)};
}

inline Complex mul(const Complex &x, const Complex &y) {
  return {sub(mul(x.re, y.re), mul(x.im, y.im)),
          add(mul(x.re, y.im), mul(x.im, y.re))};
}

inline Complex mul(const Complex &x, const Real &s) {
  return {mul(x.re, s), mul(x.im, s)};
}

inline Complex div(const Complex &x, const Complex &y) {
  const Real denom = add(mul(y.re, y.re), mul(y.im, y.im));
  const Complex num = {add(mul(x.re, y.re), mul(x.im, y.im)),
                       sub(mul(x.im, y.re), mul(x.re, y.im))};
  return {div(num.re, denom), div(num.im, denom)};
}

inline double abs_estimate(const Complex &z) {
  return std::hypot(z.re.hi, z.im.hi);
}

} // namespace dd

} // namespace heun

#endif
