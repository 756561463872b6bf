#include "cl3/ideal.hpp"

#include <cmath>
#include <stdexcept>

namespace cl3 {

RingElement RingElement::inverse() const {
  if (std::abs(c) <= 1e-14 * std::max(1.0, std::abs(c)))
    throw std::runtime_error("RingElement: not invertible (|c| ~ 0)");
  return {1.0 / c};
}

IdealBasis ideal_basis(const DeformedBasis& b, const TimeReversedBasis& tb) {
  if (b.param.gamma != tb.param.gamma)
    throw std::invalid_argument("ideal_basis: gamma mismatch");
  const CMat2 id = CMat2::identity();
  const double w4 = 0.25 * b.param.omega;
  IdealBasis out;
  out.g0 = 0.5 * id + w4 * (b.e3g - tb.e3b);
  out.g1 = 0.5 * b.e2g + w4 * (b.e23g + tb.e23b);
  out.g2 = 0.5 * b.e31g - w4 * (b.e1g - tb.e1b);
  out.g3 = 0.5 * b.e123g + w4 * (b.e12g + tb.e12b);
  return out;
}

IdealSpinor embed(const Spinor& psi) {
  return {psi.c1.real(), psi.c2.imag(), -psi.c2.real(), psi.c1.imag()};
}

Spinor extract(const IdealSpinor& p) {
  return {cplx(p.xi0, p.xi3), cplx(-p.xi2, p.xi1)};
}

IdealSpinor left_action(const Multivector& u, const IdealSpinor& p) {
  const CMat2 prod = to_matrix(u) * p.matrix();
  // Second column is exactly zero: every term is multiplied by a 0.0 entry.
  return {prod.a11.real(), prod.a21.imag(), -prod.a21.real(), prod.a11.imag()};
}

RingElement reversion_product(const IdealSpinor& psi, const IdealSpinor& phi) {
  const CMat2 prod =
      involution_matrix(psi.matrix(), InvolutionKind::Reversion) * phi.matrix();
  return {prod.a11};
}

RingElement conjugation_product(const IdealSpinor& phi,
                                const IdealSpinor& psi) {
  const CMat2 inner_prod =
      involution_matrix(phi.matrix(), InvolutionKind::CliffordConjugation) *
      involution_matrix(psi.matrix(), InvolutionKind::GradeInversion);
  const CMat2 prod =
      involution_matrix(inner_prod, InvolutionKind::CliffordConjugation);
  return {prod.a11};
}

IdealSpinor flip(const IdealSpinor& p) { return embed(apply_T(extract(p))); }

VerificationReport unitary_invariance_check(const Multivector& s,
                                            const IdealSpinor& psi,
                                            const IdealSpinor& phi) {
  VerificationReport rep;
  const Multivector rs = geometric_product(
      involution(s, InvolutionKind::Reversion), s);
  const double pre =
      (rs - Multivector::scalar(1.0)).max_abs();
  if (pre > 1e-12) {
    rep.add("precondition_reversion_norm", CheckStatus::Fail, pre,
            "reversion(s)*s != 1;  invariance not evaluated");
    return rep;
  }
  rep.add("precondition_reversion_norm", CheckStatus::Pass, pre);

  const CMat2 sm = to_matrix(s);
  const double unit = (sm.adjoint() * sm - CMat2::identity()).max_abs();
  rep.add("matrix_unitarity",
          unit <= 1e-12 ? CheckStatus::Pass : CheckStatus::Fail, unit);

  const Multivector smv = s;
  const cplx before = reversion_product(psi, phi).c;
  const cplx after =
      reversion_product(left_action(smv, psi), left_action(smv, phi)).c;
  const double inv = std::abs(after - before);
  rep.add("reversion_product_invariance",
          inv <= 1e-12 ? CheckStatus::Pass : CheckStatus::Fail, inv);
  return rep;
}

}  // namespace cl3
