#pragma once
#include "cl3/multivector.hpp"
#include "cl3/time_reversal.hpp"

namespace cl3 {

// Element of the minimal left ideal S = M(2,C) g0, stored by its four real
// coordinates.  The derived matrix is [[psi1, 0], [psi2, 0]] with
// psi1 = xi0 + i xi3 and psi2 = -xi2 + i xi1.
struct IdealSpinor {
  double xi0{}, xi1{}, xi2{}, xi3{};

  CMat2 matrix() const {
    return {cplx(xi0, xi3), 0.0, cplx(-xi2, xi1), 0.0};
  }

  IdealSpinor operator-() const { return {-xi0, -xi1, -xi2, -xi3}; }
};

// Scalar of the division ring R = g0 Cl3 g0, realized as [[c, 0], [0, 0]].
struct RingElement {
  cplx c{0.0, 0.0};

  CMat2 matrix() const { return {c, 0.0, 0.0, 0.0}; }

  RingElement operator*(const RingElement& o) const { return {c * o.c}; }

  // Throws when |c| falls under the numerical-zero threshold.
  RingElement inverse() const;
};

struct IdealBasis {
  CMat2 g0, g1, g2, g3;
};

// g0..g3 assembled from the displayed direct/time-reversed generator
// combinations; g0 is the idempotent [[1,0],[0,0]].
// Throws std::invalid_argument when the two bases carry different gammas.
IdealBasis ideal_basis(const DeformedBasis& b, const TimeReversedBasis& tb);

IdealSpinor embed(const Spinor& psi);
Spinor extract(const IdealSpinor& p);

// Left multiplication u * Psi; stays inside S with an exactly zero second
// column.
IdealSpinor left_action(const Multivector& u, const IdealSpinor& p);

// (reversion(Psi) * Phi) = psi1^* phi1 + psi2^* phi2, the conventional
// inner product.
RingElement reversion_product(const IdealSpinor& psi, const IdealSpinor& phi);

// conj_cl(conj_cl(Phi) * grade_inv(Psi)) = phi1 psi1^* + phi2 psi2^*, the
// pairing built from the time reversal.
RingElement conjugation_product(const IdealSpinor& phi, const IdealSpinor& psi);

// Restriction of the basis flip to S; equals embed(apply_T(extract(.))).
IdealSpinor flip(const IdealSpinor& p);

// Precondition report for reversion(s)*s = 1, then invariance of the
// reversion product under Psi -> s Psi and unitarity of the matrix of s.
VerificationReport unitary_invariance_check(const Multivector& s,
                                            const IdealSpinor& psi,
                                            const IdealSpinor& phi);

}  // namespace cl3
