#pragma once
#include <utility>

#include "cl3/deformed.hpp"

namespace cl3 {

// In-plane field (B1, B2) with magnitude B > 0.
struct FieldConfig {
  double b1;
  double b2;
  double b;

  FieldConfig(double b1_, double b2_);
};

// Exact bi-orthogonal eigensystem of H_gamma and H_{-gamma}.
//   psi_plus_g  = (e^{-i theta+}, 1)/sqrt(2)   eigenvalue +B of H_gamma
//   psi_minus_g = (-e^{i theta-}, 1)/sqrt(2)   eigenvalue -B of H_gamma
//   psi_plus_mg = (1, e^{-i theta-})/sqrt(2)   eigenvalue +B of H_{-gamma}
//   psi_minus_mg= (-1, e^{i theta+})/sqrt(2)   eigenvalue -B of H_{-gamma}
struct BiorthoEigensystem {
  double e_plus;
  double e_minus;
  Spinor psi_plus_g, psi_minus_g;
  Spinor psi_plus_mg, psi_minus_mg;
  double theta_plus;
  double theta_minus;
};

struct ProjectorPair {
  CMat2 pi_plus;
  CMat2 pi_minus;
};

// Split H = H0 + i G with H0, G Hermitian by construction.
struct DecomposedHamiltonian {
  CMat2 h;
  CMat2 h0;
  CMat2 g;

  static DecomposedHamiltonian split(const CMat2& h);
};

// General dense 2x2 eigensolver (quadratic formula + row null vectors).
struct Eigen2 {
  cplx lambda1, lambda2;
  Spinor v1, v2;
};
Eigen2 eig2(const CMat2& m);

// H_gamma = e1g*B1 + e2g*B2; traceless, det = -B^2, adjoint flips gamma.
CMat2 build_hamiltonian(const DeformationParam& p, const FieldConfig& f);

// Quadrant-aware angles (theta_plus, theta_minus).  The minus-branch
// numerator sign is chosen so that (-e^{i theta-}, 1) solves
// H psi = -B psi for every sign combination of B1, B2; it also enforces
// theta_-(gamma) = -theta_+(-gamma).
std::pair<double, double> theta_pm(const DeformationParam& p,
                                   const FieldConfig& f);

BiorthoEigensystem eigensystem(const DeformationParam& p, const FieldConfig& f);

// Pi_+ = |psi_+><psi_+^-| / <psi_+^-|psi_+> and the minus twin.  Throws on
// numerically self-orthogonal normalization.
ProjectorPair projectors(const BiorthoEigensystem& sys);

// Numerical check of the sum/difference relations coupling <u_m|u_n> to
// matrix elements of H0 and G, the v-family analogues, and <u_m|v_n> = 0.
// Identities whose denominator magnitude falls below 1e-10 are reported as
// Skip.  Throws on a degenerate spectrum.
VerificationReport verify_brody_relations(const DecomposedHamiltonian& d);

// Expectation <psi_check|F|psi> / <psi_check|psi> where psi_check carries the
// same expansion coefficients over the (-gamma) eigenbasis.
cplx biortho_expectation(const CMat2& f, const Spinor& psi,
                         const BiorthoEigensystem& sys);

// Associated state psi_check of psi.
Spinor associated_state(const Spinor& psi, const BiorthoEigensystem& sys);

// Expansion coefficients (alpha_plus, alpha_minus) of psi over
// {psi_plus_g, psi_minus_g}.
std::pair<cplx, cplx> eigenbasis_coefficients(const Spinor& psi,
                                              const BiorthoEigensystem& sys);

}  // namespace cl3
