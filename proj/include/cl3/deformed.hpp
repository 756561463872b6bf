#pragma once
#include "cl3/cmat2.hpp"
#include "cl3/report.hpp"

namespace cl3 {

// Deformation strength gamma on (-1, 1) with omega = sqrt(1 - gamma^2).
struct DeformationParam {
  double gamma;
  double omega;

  explicit DeformationParam(double g);
};

struct BiorthogonalPair {
  Spinor phi1, phi2, chi1, chi2;
};

// The gamma-deformed generator set together with its derived even-grade
// elements.  e2g is gamma-independent; e1g and e3g are non-Hermitian for
// gamma != 0 but still square to the identity.
struct DeformedBasis {
  DeformationParam param;
  CMat2 e1g, e2g, e3g;
  CMat2 e12g, e23g, e31g, e123g;
};

// Hermitian transform T = cos(t/2) 1 + 2 cos(p/2) sin(t/2) s1
//                        - 2 sin(p/2) sin(t/2) s2.
// Becomes singular when tan(t/2) = 1/2; callers needing T^{-1} must check.
CMat2 auerbach_transform(double theta, double phi);

// Normalized variant whose similarity action generates the deformed basis:
// cos(t/2) 1 + sin(t/2) s2 with t = asin(gamma).  Determinant is omega > 0.
CMat2 deformation_transform(double gamma);

// phi_j = T u_j, chi_j = (T^{-1})^dagger u_j for u_j = (1, (-1)^{j-1})/sqrt(2),
// built from the two-angle transform at theta = asin(gamma), phi = pi.
// Throws std::runtime_error when T is numerically singular.
BiorthogonalPair biorthogonal_pair(const DeformationParam& p);

// Pauli-like generator m in {1,2,3} from the rank-one expansion
// i^{m+1} sum_jk c_jk |T u_j><(T^{-1})^dagger u_k|.
CMat2 outer_product_generator(int m, const CMat2& transform);

// Closed-form deformed generators plus derived products.
DeformedBasis deformed_generators(const DeformationParam& p);

// Residuals of (e_i)^2 - 1 and of the anticommutators {e_i, e_j}, i != j.
VerificationReport verify_clifford_relations(const DeformedBasis& b);

}  // namespace cl3
