#pragma once
#include "cl3/deformed.hpp"
#include "cl3/spectral.hpp"

namespace cl3 {

// Antilinear operator psi -> M conj(psi).  For the fermionic time reversal
// T the linear factor is -i s2, and M conj(M) = -1 (T^2 = -1).
struct AntiLinearOp {
  CMat2 m;

  Spinor apply(const Spinor& psi) const {
    return m * Spinor{std::conj(psi.c1), std::conj(psi.c2)};
  }

  static AntiLinearOp time_reversal() {
    return {CMat2{0.0, -1.0, 1.0, 0.0}};  // -i s2
  }
};

// T psi = (-psi2^*, psi1^*).
Spinor apply_T(const Spinor& psi);

// Linear matrix of the antilinear sandwich T^{-1} M T.  Because T^{-1} = -T,
// this equals -U conj(M) U with U = -i s2, which is exactly the
// grade-inversion matrix form.  In particular generators map to minus their
// reversed-deformation twins and scalars pick up complex conjugation.
CMat2 conjugate_by_T(const CMat2& m);

// Breve generators: conjugate_by_T applied to every element of the deformed
// generator set.
struct TimeReversedBasis {
  DeformationParam param;
  CMat2 one, e1b, e2b, e3b;
  CMat2 e12b, e23b, e31b, e123b;
};

TimeReversedBasis time_reversed_generators(const DeformedBasis& b);

// T psi_+ = psi_-^{-gamma} (n = 0) and T psi_- = -psi_+^{-gamma} (n = 1).
struct PairingReport {
  int n_plus;
  int n_minus;
  cplx ratio_plus;
  cplx ratio_minus;
  double dev_plus;   // | |ratio| - 1 | plus residual off the ray
  double dev_minus;
};

// Throws std::runtime_error when a ratio deviates from a unimodular +-1
// by more than 1e-10.
PairingReport kramers_pairing(const BiorthoEigensystem& sys);

// psi(t) = exp(-i H t) psi0 through the exact 2x2 exponential.
Spinor evolve(const CMat2& h, const Spinor& psi0, double t);

}  // namespace cl3
