// Equation-family parameter records (CHE, RCHE, DHE, RDHE), the associated
// differential operators, local-exponent and asymptotic descriptors, the
// limits connecting the four equations, spheroidal/Mathieu parameter maps,
// and the substitution groups acting on solutions.
//
// Equation forms:
//   CHE :  z(z-z0) U'' + (B1+B2 z) U' + [B3 - 2 w n (z-z0) + w^2 z(z-z0)] U = 0
//   RCHE:  z(z-z0) U'' + (B1+B2 z) U' + [B3 + q (z-z0)] U = 0
//   DHE :  z^2 U''     + (B1+B2 z) U' + [B3 - 2 n w z + w^2 z^2] U = 0
//   RDHE:  z^2 U''     + (B1+B2 z) U' + [B3 + q z] U = 0
// with w = omega, n = eta.
#ifndef HEUN_HEUN_MODEL_HPP
#define HEUN_HEUN_MODEL_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "heun/errors.hpp"
#include "heun/numeric.hpp"

namespace heun::model {

// ---------------------------------------------------------------------------
// Parameter records.  validate() enforces the structural invariants; the
// factory functions below call it.

struct CheParams {
  cplx B1, B2, B3, z0, omega, eta;
  void validate() const;
};

struct RcheParams {
  cplx B1, B2, B3, z0, q;
  void validate() const;
};

struct DheParams {
  cplx B1, B2, B3, omega, eta;
  void validate() const;
};

struct RdheParams {
  cplx B1, B2, B3, q;
  void validate() const;
};

struct SpheroidalParams {
  cplx gamma2;     // square of the spheroidal size parameter
  cplx lambda_bar; // angular eigenvalue
  cplx mu;         // azimuthal index
};

struct MathieuParams {
  cplx a_char; // characteristic value
  cplx k2;     // k^2 coefficient of the periodic term
  cplx sigma;  // 1 for Mathieu, i for modified Mathieu
  void validate() const;
};

// The second substitution of the DHE requires B1 != 0.
struct ZeroB1 : InvalidParameter {
  using InvalidParameter::InvalidParameter;
};

// The Whittaker-Ince limit was supplied a q inconsistent with -2*eta*omega.
struct InconsistentLimit : InputError {
  using InputError::InputError;
};

// ---------------------------------------------------------------------------
// Prefactor / argument-map descriptor attached to a transformed solution:
//   (XU)(z) = z^{pow_z} (z-z0)^{pow_z_minus_z0}
//             exp(rate_z * z + rate_inv_z / z) * U(map(z))
// with map(z) = z, z0 - z, or i*B1/(2z) according to `arg`.  Descriptors are
// carried explicitly and never applied implicitly; classes are identified up
// to multiplicative constants, which this normal form already drops.
enum class ArgMap { identity, reflect, half_inverse };

struct PrefactorDescriptor {
  cplx pow_z{0.0};
  cplx pow_z_minus_z0{0.0};
  cplx rate_z{0.0};
  cplx rate_inv_z{0.0};
  ArgMap arg = ArgMap::identity;

  static PrefactorDescriptor identity_descriptor() { return {}; }

  // Multiplicative value at z (argument mapping NOT included).
  cplx value(const cplx &z0, const cplx &z) const;

  // Mapped argument.
  cplx mapped(const cplx &z0, const cplx &B1, const cplx &z) const;
};

// Chaining for the reflection subfamily (identity/reflect argument maps):
// result.value(z) = outer.value(z) * inner.value(outer.mapped(z)) up to a
// multiplicative constant, and result.mapped = inner.mapped ∘ outer.mapped.
PrefactorDescriptor compose(const PrefactorDescriptor &outer,
                            const PrefactorDescriptor &inner);

// ---------------------------------------------------------------------------
// Differential-operator applications: value of the left-hand side given
// samples (u, u', u'') at z; zero iff the samples are consistent with a
// solution at that point.

cplx apply_che(const CheParams &p, const cplx &u, const cplx &du,
               const cplx &d2u, const cplx &z);
cplx apply_rche(const RcheParams &p, const cplx &u, const cplx &du,
                const cplx &d2u, const cplx &z);
cplx apply_dhe(const DheParams &p, const cplx &u, const cplx &du,
               const cplx &d2u, const cplx &z);
cplx apply_rdhe(const RdheParams &p, const cplx &u, const cplx &du,
                const cplx &d2u, const cplx &z);

// ---------------------------------------------------------------------------
// Local exponents at the two regular singular points z = 0 and z = z0.

struct FrobeniusExponents {
  std::array<cplx, 2> at_zero; // {0, 1 + B1/z0}
  std::array<cplx, 2> at_z0;   // {0, 1 - B2 - B1/z0}
};

FrobeniusExponents frobenius_exponents(const CheParams &p);
FrobeniusExponents frobenius_exponents(const RcheParams &p);

// ---------------------------------------------------------------------------
// Leading behaviour at the irregular point: U ~ exp(rate * z) z^{power}
// (CHE/DHE), or U ~ exp(rate * sqrt(z)) z^{power} when sqrt_argument is set
// (RCHE/RDHE).  For the DHE the origin is irregular as well, with
// U ~ 1 or U ~ exp(B1/z) z^{2-B2}; rate then multiplies 1/z.

struct ThomeForm {
  cplx rate{0.0};
  cplx power{0.0};
  bool sqrt_argument = false;
  bool at_origin = false;
};

ThomeForm thome_behavior(const CheParams &p, int branch);
ThomeForm thome_behavior(const RcheParams &p, int branch);
ThomeForm thome_behavior(const DheParams &p, int branch);
ThomeForm thome_behavior(const RdheParams &p, int branch);
ThomeForm dhe_origin_behavior(const DheParams &p, int branch);

// ---------------------------------------------------------------------------
// Substitution groups.  Index ranges: CHE 1..4, RCHE 1..3, DHE 1..3,
// RDHE has a single generator.
//
// Orientation: transform_*(i, p) returns (image, f) such that whenever V
// solves the image equation, z -> f.value(z0, z) * V(f.mapped(z0, B1, z))
// solves the input equation p.  Each generator is an involution at the
// parameter level.

std::pair<CheParams, PrefactorDescriptor> transform_solution(int i,
                                                             const CheParams &p);
std::pair<RcheParams, PrefactorDescriptor> transform_rche(int i,
                                                          const RcheParams &p);
std::pair<DheParams, PrefactorDescriptor> transform_dhe(int i,
                                                        const DheParams &p);
std::pair<RdheParams, PrefactorDescriptor> transform_rdhe(const RdheParams &p);

// Closure of the generator set from a seed, canonicalized (parameters to
// 1e-12, prefactors up to constant).  A generic CHE seed yields 16 classes,
// a generic RCHE seed at most 8.
std::vector<std::pair<CheParams, PrefactorDescriptor>>
enumerate_solution_group(const CheParams &seed);
std::vector<std::pair<RcheParams, PrefactorDescriptor>>
enumerate_rche_group(const RcheParams &seed);

// ---------------------------------------------------------------------------
// Limits between the families.

// omega -> 0, eta -> inf with 2*eta*omega = -q.  The caller supplies the
// target q, which must match -2*eta*omega to 1e-12 (InconsistentLimit).
RcheParams whittaker_ince_limit(const CheParams &p, const cplx &q);

// z0 -> 0.
DheParams leaver_limit(const CheParams &p);
RdheParams leaver_limit_r(const RcheParams &p);

// ---------------------------------------------------------------------------
// Specializations.

CheParams spheroidal_to_che(const SpheroidalParams &s);

// The Mathieu map includes the coordinate substitution z = cos^2(sigma u),
// returned as an explicit descriptor.
struct CosSquaredMap {
  cplx sigma;
  cplx z_of_u(const cplx &u) const;
};

std::pair<RcheParams, CosSquaredMap> mathieu_to_rche(const MathieuParams &m);

// ---------------------------------------------------------------------------
// JSON serialization.  Field names: b1, b2, b3, z0, omega, eta, q; complex
// numbers as [re, im].

nlohmann::json to_json(const CheParams &p);
nlohmann::json to_json(const RcheParams &p);
nlohmann::json to_json(const DheParams &p);
nlohmann::json to_json(const RdheParams &p);
CheParams che_from_json(const nlohmann::json &j);
RcheParams rche_from_json(const nlohmann::json &j);
DheParams dhe_from_json(const nlohmann::json &j);
RdheParams rdhe_from_json(const nlohmann::json &j);

nlohmann::json complex_to_json(const cplx &z);
cplx complex_from_json(const nlohmann::json &j);

} // namespace heun::model

#endif
