// Complex-valued special functions underlying the equation family: regular
// and irregular confluent hypergeometric functions, the Gauss hypergeometric
// function with its six local solutions, and the Bessel family J/Y/H1/H2
// with complex order and argument.
//
// Accuracy targets (relative): 1e-12 for the confluent/Gauss functions on
// moderate parameter domains, 1e-12 for Bessel away from function zeros.
// All branches are principal (arg in (-pi, pi]).
#ifndef HEUN_SPECIAL_HPP
#define HEUN_SPECIAL_HPP

#include "heun/errors.hpp"
#include "heun/numeric.hpp"

namespace heun::special {

struct ConfluentParams {
  cplx a, c;
};

struct GaussParams {
  cplx a, b, c;
};

enum class BesselTag { J, Y, H1, H2 };

struct BesselKind {
  BesselTag tag = BesselTag::J;
  cplx order{0.0, 0.0};
};

// Crossover radius |u| between the Maclaurin series and the large-argument
// expansion of the confluent functions.  Tunable; the asymptotic branch is
// only accepted when its own error estimate meets tolerance, so raising or
// lowering this trades speed, not correctness.
inline double phi_crossover_radius = 30.0;

// Regular confluent hypergeometric function Phi(a, c; u).
// Throws DegenerateParameter when c is a non-positive integer and
// OverflowError when the result magnitude leaves the double range.
cplx phi(const ConfluentParams &p, const cplx &u);

// Irregular confluent hypergeometric function Psi(a, c; u), behaving as
// u^{-a} for large |u|.  Polynomial short-circuit when a is a non-positive
// integer; otherwise u = 0 is a singular point (PoleAtOrigin).
cplx psi(const ConfluentParams &p, const cplx &u);

// Gauss hypergeometric function F(a, b; c; u) off the cut [1, infinity).
cplx gauss_f(const GaussParams &p, const cplx &u);

// Bessel family member of the given kind and complex order at complex y.
cplx bessel(const BesselKind &k, const cplx &y);

// The four local solutions of the confluent equation
//   u w'' + (c - u) w' - a w = 0:
//   1: Phi(a,c;u)                      2: e^u u^{1-c} Phi(1-a,2-c;-u)
//   3: Psi(a,c;u)                      4: e^u u^{1-c} Psi(1-a,2-c;-u)
cplx confluent_variant(int i, const ConfluentParams &p, const cplx &u);

// The six local solutions of the hypergeometric equation
//   u(1-u) F'' + [c - (a+b+1)u] F' - ab F = 0
// at u = 0 (1,2), u = 1 (3,4) and u = infinity (5,6).
cplx gauss_variant(int j, const GaussParams &p, const cplx &u);

// Generalized Laguerre polynomial L_n^{alpha}(y) by its explicit finite sum;
// used by the polynomial branch of psi and by callers working with
// terminated series.
cplx laguerre(int n, const cplx &alpha, const cplx &y);

} // namespace heun::special

#endif
