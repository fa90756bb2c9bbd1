// Implementation of the equation-family records, operators, substitution
// groups, limits and parameter maps declared in heun/heun_model.hpp.
#include "heun/heun_model.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace heun::model {

namespace {

bool nonzero(const cplx &z) { return std::abs(z) != 0.0; }

// Componentwise closeness with mixed absolute/relative scale, used by the
// group canonicalization.
bool close(const cplx &a, const cplx &b, double tol = 1e-12) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

} // namespace

// ---------------------------------------------------------------------------
// Validation.

void CheParams::validate() const {
  if (!nonzero(z0))
    throw InvalidParameter("CheParams: z0 must be nonzero");
  if (!nonzero(omega))
    throw InvalidParameter("CheParams: omega must be nonzero");
}

void RcheParams::validate() const {
  if (!nonzero(z0))
    throw InvalidParameter("RcheParams: z0 must be nonzero");
  if (!nonzero(q))
    throw InvalidParameter("RcheParams: q must be nonzero");
}

void DheParams::validate() const {
  if (!nonzero(B1))
    throw InvalidParameter("DheParams: B1 must be nonzero");
  if (!nonzero(omega))
    throw InvalidParameter("DheParams: omega must be nonzero");
}

void RdheParams::validate() const {
  if (!nonzero(B1))
    throw InvalidParameter("RdheParams: B1 must be nonzero");
  if (!nonzero(q))
    throw InvalidParameter("RdheParams: q must be nonzero");
}

void MathieuParams::validate() const {
  const cplx i_unit{0.0, 1.0};
  if (!(close(sigma, cplx{1.0, 0.0}) || close(sigma, i_unit)))
    throw InvalidParameter("MathieuParams: sigma must be 1 or i");
}

// ---------------------------------------------------------------------------
// Prefactor descriptor.

cplx PrefactorDescriptor::value(const cplx &z0, const cplx &z) const {
  cplx out{1.0, 0.0};
  if (nonzero(pow_z))
    out *= pow_principal(z, pow_z);
  if (nonzero(pow_z_minus_z0))
    out *= pow_principal(z - z0, pow_z_minus_z0);
  cplx arg_exp = rate_z * z;
  if (nonzero(rate_inv_z))
    arg_exp += rate_inv_z / z;
  if (nonzero(arg_exp))
    out *= std::exp(arg_exp);
  return out;
}

cplx PrefactorDescriptor::mapped(const cplx &z0, const cplx &B1,
                                 const cplx &z) const {
  switch (arg) {
  case ArgMap::identity:
    return z;
  case ArgMap::reflect:
    return z0 - z;
  case ArgMap::half_inverse:
    return cplx{0.0, 1.0} * B1 / (2.0 * z);
  }
  return z;
}

PrefactorDescriptor compose(const PrefactorDescriptor &outer,
                            const PrefactorDescriptor &inner) {
  if (outer.arg == ArgMap::half_inverse || inner.arg == ArgMap::half_inverse)
    throw InvalidParameter(
        "compose: the inverse-argument substitution does not compose within "
        "the power/exponential descriptor family");
  PrefactorDescriptor out = outer;
  if (outer.arg == ArgMap::reflect) {
    // inner factors are evaluated at z0 - z: z^p -> (z0-z)^p which equals
    // (z-z0)^p up to a constant, exp(r z) -> exp(-r z) up to a constant.
    if (nonzero(inner.rate_inv_z))
      throw InvalidParameter(
          "compose: 1/z exponential does not survive argument reflection");
    out.pow_z += inner.pow_z_minus_z0;
    out.pow_z_minus_z0 += inner.pow_z;
    out.rate_z -= inner.rate_z;
    out.arg = inner.arg == ArgMap::reflect ? ArgMap::identity : ArgMap::reflect;
  } else {
    out.pow_z += inner.pow_z;
    out.pow_z_minus_z0 += inner.pow_z_minus_z0;
    out.rate_z += inner.rate_z;
    out.rate_inv_z += inner.rate_inv_z;
    out.arg = inner.arg;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Differential operators.

cplx apply_che(const CheParams &p, const cplx &u, const cplx &du,
               const cplx &d2u, const cplx &z) {
  const cplx zz = z * (z - p.z0);
  return zz * d2u + (p.B1 + p.B2 * z) * du +
         (p.B3 - 2.0 * p.omega * p.eta * (z - p.z0) + p.omega * p.omega * zz) *
             u;
}

cplx apply_rche(const RcheParams &p, const cplx &u, const cplx &du,
                const cplx &d2u, const cplx &z) {
  const cplx zz = z * (z - p.z0);
  return zz * d2u + (p.B1 + p.B2 * z) * du + (p.B3 + p.q * (z - p.z0)) * u;
}

cplx apply_dhe(const DheParams &p, const cplx &u, const cplx &du,
               const cplx &d2u, const cplx &z) {
  return z * z * d2u + (p.B1 + p.B2 * z) * du +
         (p.B3 - 2.0 * p.eta * p.omega * z + p.omega * p.omega * z * z) * u;
}

cplx apply_rdhe(const RdheParams &p, const cplx &u, const cplx &du,
                const cplx &d2u, const cplx &z) {
  return z * z * d2u + (p.B1 + p.B2 * z) * du + (p.B3 + p.q * z) * u;
}

// ---------------------------------------------------------------------------
// Local exponents and irregular-point behaviour.

namespace {
FrobeniusExponents frobenius_impl(const cplx &B1, const cplx &B2,
                                  const cplx &z0) {
  FrobeniusExponents f;
  f.at_zero = {cplx{0.0, 0.0}, 1.0 + B1 / z0};
  f.at_z0 = {cplx{0.0, 0.0}, 1.0 - B2 - B1 / z0};
  return f;
}

void check_branch(int branch) {
  if (branch != +1 && branch != -1)
    throw InvalidParameter("thome_behavior: branch must be +1 or -1");
}
} // namespace

FrobeniusExponents frobenius_exponents(const CheParams &p) {
  return frobenius_impl(p.B1, p.B2, p.z0);
}

FrobeniusExponents frobenius_exponents(const RcheParams &p) {
  return frobenius_impl(p.B1, p.B2, p.z0);
}

ThomeForm thome_behavior(const CheParams &p, int branch) {
  check_branch(branch);
  const cplx i_unit{0.0, 1.0};
  const double s = branch;
  return {s * i_unit * p.omega, -s * i_unit * p.eta - p.B2 / 2.0, false,
          false};
}

ThomeForm thome_behavior(const DheParams &p, int branch) {
  check_branch(branch);
  const cplx i_unit{0.0, 1.0};
  const double s = branch;
  return {s * i_unit * p.omega, -s * i_unit * p.eta - p.B2 / 2.0, false,
          false};
}

namespace {
ThomeForm rche_thome(const cplx &B2, const cplx &q, int branch) {
  check_branch(branch);
  const cplx i_unit{0.0, 1.0};
  const double s = branch;
  return {s * 2.0 * i_unit * std::sqrt(q), 0.25 - B2 / 2.0, true, false};
}
} // namespace

ThomeForm thome_behavior(const RcheParams &p, int branch) {
  return rche_thome(p.B2, p.q, branch);
}

ThomeForm thome_behavior(const RdheParams &p, int branch) {
  return rche_thome(p.B2, p.q, branch);
}

ThomeForm dhe_origin_behavior(const DheParams &p, int branch) {
  check_branch(branch);
  if (branch == +1)
    return {cplx{0.0, 0.0}, cplx{0.0, 0.0}, false, true};
  return {p.B1, 2.0 - p.B2, false, true};
}

// ---------------------------------------------------------------------------
// Substitution groups.

std::pair<CheParams, PrefactorDescriptor>
transform_solution(int i, const CheParams &p) {
  p.validate();
  const cplx r = p.B1 / p.z0;
  CheParams out = p;
  PrefactorDescriptor f;
  switch (i) {
  case 1:
    out.B1 = -p.B1 - 2.0 * p.z0;
    out.B2 = 2.0 + p.B2 + 2.0 * r;
    out.B3 = p.B3 + (1.0 + r) * (p.B2 + r);
    f.pow_z = 1.0 + r;
    break;
  case 2:
    out.B2 = 2.0 - p.B2 - 2.0 * r;
    out.B3 = p.B3 + r * (r + p.B2 - 1.0);
    f.pow_z_minus_z0 = 1.0 - p.B2 - r;
    break;
  case 3:
    out.omega = -p.omega;
    out.eta = -p.eta;
    break;
  case 4:
    out.B1 = -p.B1 - p.B2 * p.z0;
    out.B3 = p.B3 + 2.0 * p.eta * p.omega * p.z0;
    out.omega = -p.omega;
    f.arg = ArgMap::reflect;
    break;
  default:
    throw InvalidParameter("transform_solution: index must be 1..4");
  }
  return {out, f};
}

std::pair<RcheParams, PrefactorDescriptor>
transform_rche(int i, const RcheParams &p) {
  p.validate();
  const cplx r = p.B1 / p.z0;
  RcheParams out = p;
  PrefactorDescriptor f;
  switch (i) {
  case 1:
    out.B1 = -p.B1 - 2.0 * p.z0;
    out.B2 = 2.0 + p.B2 + 2.0 * r;
    out.B3 = p.B3 + (1.0 + r) * (p.B2 + r);
    f.pow_z = 1.0 + r;
    break;
  case 2:
    out.B2 = 2.0 - p.B2 - 2.0 * r;
    out.B3 = p.B3 + r * (r + p.B2 - 1.0);
    f.pow_z_minus_z0 = 1.0 - p.B2 - r;
    break;
  case 3:
    out.B1 = -p.B1 - p.B2 * p.z0;
    out.B3 = p.B3 - p.q * p.z0;
    out.q = -p.q;
    f.arg = ArgMap::reflect;
    break;
  default:
    throw InvalidParameter("transform_rche: index must be 1..3");
  }
  return {out, f};
}

std::pair<DheParams, PrefactorDescriptor> transform_dhe(int i,
                                                        const DheParams &p) {
  p.validate();
  const cplx i_unit{0.0, 1.0};
  DheParams out = p;
  PrefactorDescriptor f;
  switch (i) {
  case 1:
    out.B1 = -p.B1;
    out.B2 = 4.0 - p.B2;
    out.B3 = p.B3 + 2.0 - p.B2;
    f.rate_inv_z = p.B1;
    f.pow_z = 2.0 - p.B2;
    break;
  case 2: {
    if (!nonzero(p.B1))
      throw ZeroB1("transform_dhe: the inverse-argument substitution "
                   "requires B1 != 0");
    // New parameters, with the argument mapped to i*B1/(2z); eta' solves
    // i*eta' = B2/2 - 1.
    out.B1 = p.omega * p.B1;
    out.B2 = 2.0 + 2.0 * i_unit * p.eta;
    out.B3 = p.B3 - (p.B2 / 2.0 + i_unit * p.eta) *
                        (p.B2 / 2.0 - i_unit * p.eta - 1.0);
    out.omega = cplx{1.0, 0.0};
    out.eta = -i_unit * (p.B2 / 2.0 - 1.0);
    f.rate_z = i_unit * p.omega;
    f.rate_inv_z = p.B1 / 2.0;
    f.pow_z = -i_unit * p.eta - p.B2 / 2.0;
    f.arg = ArgMap::half_inverse;
    break;
  }
  case 3:
    out.omega = -p.omega;
    out.eta = -p.eta;
    break;
  default:
    throw InvalidParameter("transform_dhe: index must be 1..3");
  }
  return {out, f};
}

std::pair<RdheParams, PrefactorDescriptor> transform_rdhe(const RdheParams &p) {
  p.validate();
  RdheParams out = p;
  out.B1 = -p.B1;
  out.B2 = 4.0 - p.B2;
  out.B3 = p.B3 + 2.0 - p.B2;
  PrefactorDescriptor f;
  f.rate_inv_z = p.B1;
  f.pow_z = 2.0 - p.B2;
  return {out, f};
}

namespace {

bool same_prefactor(const PrefactorDescriptor &a, const PrefactorDescriptor &b) {
  return a.arg == b.arg && close(a.pow_z, b.pow_z) &&
         close(a.pow_z_minus_z0, b.pow_z_minus_z0) &&
         close(a.rate_z, b.rate_z) && close(a.rate_inv_z, b.rate_inv_z);
}

bool same_che(const CheParams &a, const CheParams &b) {
  return close(a.B1, b.B1) && close(a.B2, b.B2) && close(a.B3, b.B3) &&
         close(a.z0, b.z0) && close(a.omega, b.omega) && close(a.eta, b.eta);
}

bool same_rche(const RcheParams &a, const RcheParams &b) {
  return close(a.B1, b.B1) && close(a.B2, b.B2) && close(a.B3, b.B3) &&
         close(a.z0, b.z0) && close(a.q, b.q);
}

// Breadth-first closure of the generator set acting on (params, prefactor)
// classes.  Params is the equation record, Xform the per-index generator.
template <typename Params, typename Same, typename Xform>
std::vector<std::pair<Params, PrefactorDescriptor>>
closure(const Params &seed, int n_generators, Same same, Xform apply) {
  std::vector<std::pair<Params, PrefactorDescriptor>> classes;
  classes.emplace_back(seed, PrefactorDescriptor::identity_descriptor());
  // The closure is tiny (<= 16 classes); quadratic scanning is fine.
  for (std::size_t head = 0; head < classes.size(); ++head) {
    if (classes.size() > 4096)
      throw NoConvergence("substitution-group closure did not close");
    for (int i = 1; i <= n_generators; ++i) {
      auto [q, f] = apply(i, classes[head].first);
      // Element semantics: seed solutions factor through classes[head] as
      // f_head(z) * v(m_head(z)) with v solving classes[head].first; expanding
      // v through the new generator chains f inside f_head.
      PrefactorDescriptor combined = compose(classes[head].second, f);
      bool found = false;
      for (const auto &[qp, qf] : classes) {
        if (same(q, qp) && same_prefactor(combined, qf)) {
          found = true;
          break;
        }
      }
      if (!found)
        classes.emplace_back(q, combined);
    }
  }
  return classes;
}

} // namespace

std::vector<std::pair<CheParams, PrefactorDescriptor>>
enumerate_solution_group(const CheParams &seed) {
  seed.validate();
  return closure(seed, 4, same_che,
                 [](int i, const CheParams &p) { return transform_solution(i, p); });
}

std::vector<std::pair<RcheParams, PrefactorDescriptor>>
enumerate_rche_group(const RcheParams &seed) {
  seed.validate();
  return closure(seed, 3, same_rche,
                 [](int i, const RcheParams &p) { return transform_rche(i, p); });
}

// ---------------------------------------------------------------------------
// Limits.

RcheParams whittaker_ince_limit(const CheParams &p, const cplx &q) {
  p.validate();
  if (!nonzero(q))
    throw InvalidParameter("whittaker_ince_limit: q must be nonzero");
  const cplx product = 2.0 * p.eta * p.omega;
  const double scale = std::max({1.0, std::abs(q), std::abs(product)});
  if (std::abs(product + q) > 1e-12 * scale)
    throw InconsistentLimit(
        "whittaker_ince_limit: q must equal -2*eta*omega to 1e-12");
  RcheParams out{p.B1, p.B2, p.B3, p.z0, q};
  out.validate();
  return out;
}

DheParams leaver_limit(const CheParams &p) {
  p.validate();
  DheParams out{p.B1, p.B2, p.B3, p.omega, p.eta};
  out.validate(); // rejects B1 == 0, where the limit degenerates
  return out;
}

RdheParams leaver_limit_r(const RcheParams &p) {
  p.validate();
  RdheParams out{p.B1, p.B2, p.B3, p.q};
  out.validate();
  return out;
}

// ---------------------------------------------------------------------------
// Specializations.

CheParams spheroidal_to_che(const SpheroidalParams &s) {
  if (!nonzero(s.gamma2))
    throw InvalidParameter(
        "spheroidal_to_che: gamma^2 must be nonzero (the zero case reduces "
        "to a hypergeometric equation outside this family)");
  CheParams out;
  out.z0 = cplx{1.0, 0.0};
  out.B1 = -(s.mu + 1.0);
  out.B2 = 2.0 * (s.mu + 1.0);
  out.B3 = s.mu * (s.mu + 1.0) - s.lambda_bar;
  out.eta = cplx{0.0, 0.0};
  out.omega = 2.0 * std::sqrt(s.gamma2);
  out.validate();
  return out;
}

cplx CosSquaredMap::z_of_u(const cplx &u) const {
  const cplx c = std::cos(sigma * u);
  return c * c;
}

std::pair<RcheParams, CosSquaredMap> mathieu_to_rche(const MathieuParams &m) {
  m.validate();
  if (!nonzero(m.k2))
    throw InvalidParameter("mathieu_to_rche: k^2 must be nonzero");
  RcheParams out;
  out.z0 = cplx{1.0, 0.0};
  out.B1 = cplx{-0.5, 0.0};
  out.B2 = cplx{1.0, 0.0};
  out.B3 = m.k2 / 2.0 - m.a_char / 4.0;
  out.q = m.k2;
  out.validate();
  return {out, CosSquaredMap{m.sigma}};
}

// ---------------------------------------------------------------------------
// JSON serialization.

nlohmann::json complex_to_json(const cplx &z) {
  return nlohmann::json::array({z.real(), z.imag()});
}

cplx complex_from_json(const nlohmann::json &j) {
  if (j.is_number())
    return cplx{j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2)
    throw InvalidParameter("complex value must be [re, im]");
  return cplx{j[0].get<double>(), j[1].get<double>()};
}

nlohmann::json to_json(const CheParams &p) {
  return {{"b1", complex_to_json(p.B1)}, {"b2", complex_to_json(p.B2)},
          {"b3", complex_to_json(p.B3)}, {"z0", complex_to_json(p.z0)},
          {"omega", complex_to_json(p.omega)}, {"eta", complex_to_json(p.eta)}};
}

nlohmann::json to_json(const RcheParams &p) {
  return {{"b1", complex_to_json(p.B1)},
          {"b2", complex_to_json(p.B2)},
          {"b3", complex_to_json(p.B3)},
          {"z0", complex_to_json(p.z0)},
          {"q", complex_to_json(p.q)}};
}

nlohmann::json to_json(const DheParams &p) {
  return {{"b1", complex_to_json(p.B1)},
          {"b2", complex_to_json(p.B2)},
          {"b3", complex_to_json(p.B3)},
          {"omega", complex_to_json(p.omega)},
          {"eta", complex_to_json(p.eta)}};
}

nlohmann::json to_json(const RdheParams &p) {
  return {{"b1", complex_to_json(p.B1)},
          {"b2", complex_to_json(p.B2)},
          {"b3", complex_to_json(p.B3)},
          {"q", complex_to_json(p.q)}};
}

namespace {
cplx field(const nlohmann::json &j, const char *name) {
  if (!j.contains(name))
    throw InvalidParameter(std::string("missing field: ") + name);
  return complex_from_json(j.at(name));
}
} // namespace

CheParams che_from_json(const nlohmann::json &j) {
  CheParams p{field(j, "b1"), field(j, "b2"),    field(j, "b3"),
              field(j, "z0"), field(j, "omega"), field(j, "eta")};
  p.validate();
  return p;
}

RcheParams rche_from_json(const nlohmann::json &j) {
  RcheParams p{field(j, "b1"), field(j, "b2"), field(j, "b3"), field(j, "z0"),
               field(j, "q")};
  p.validate();
  return p;
}

DheParams dhe_from_json(const nlohmann::json &j) {
  DheParams p{field(j, "b1"), field(j, "b2"), field(j, "b3"),
              field(j, "omega"), field(j, "eta")};
  p.validate();
  return p;
}

RdheParams rdhe_from_json(const nlohmann::json &j) {
  RdheParams p{field(j, "b1"), field(j, "b2"), field(j, "b3"), field(j, "q")};
  p.validate();
  return p;
}

} // namespace heun::model
