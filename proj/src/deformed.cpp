#include "cl3/deformed.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cl3 {

DeformationParam::DeformationParam(double g) : gamma(g) {
  if (!(std::abs(g) < 1.0 - 1e-9))
    throw std::invalid_argument(
        "DeformationParam: |gamma| must be < 1 - 1e-9, got " +
        std::to_string(g));
  omega = std::sqrt(1.0 - g * g);
}

CMat2 auerbach_transform(double theta, double phi) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const CMat2 id = CMat2::identity();
  return c * id + (2.0 * std::cos(0.5 * phi) * s) * pauli1() -
         (2.0 * std::sin(0.5 * phi) * s) * pauli2();
}

CMat2 deformation_transform(double gamma) {
  const double theta = std::asin(gamma);
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  return c * CMat2::identity() + s * pauli2();
}

namespace {

Spinor base_vector(int j) {
  const double r = 1.0 / std::sqrt(2.0);
  return {cplx(r, 0.0), cplx(j == 1 ? r : -r, 0.0)};
}

}  // namespace

BiorthogonalPair biorthogonal_pair(const DeformationParam& p) {
  const CMat2 t = auerbach_transform(std::asin(p.gamma), M_PI);
  if (std::abs(t.det()) < 1e-12)
    throw std::runtime_error(
        "biorthogonal_pair: singular transform at gamma = " +
        std::to_string(p.gamma));
  const CMat2 tinv_dag = t.inverse().adjoint();
  BiorthogonalPair out;
  out.phi1 = t * base_vector(1);
  out.phi2 = t * base_vector(2);
  out.chi1 = tinv_dag * base_vector(1);
  out.chi2 = tinv_dag * base_vector(2);
  return out;
}

CMat2 outer_product_generator(int m, const CMat2& transform) {
  if (m < 1 || m > 3)
    throw std::invalid_argument("outer_product_generator: m must be 1..3");
  // c^(1) = diag(-1, +1); c^(3) has unit antidiagonal; c^(2)_jk = (-1)^j c^(3)_jk.
  double c[3][2][2] = {{{-1, 0}, {0, 1}},
                       {{0, -1}, {1, 0}},
                       {{0, 1}, {1, 0}}};
  const cplx pref[3] = {cplx(-1, 0), cplx(0, -1), cplx(1, 0)};  // i^{m+1}
  const CMat2 tinv_dag = transform.inverse().adjoint();
  Spinor phi[2] = {transform * base_vector(1), transform * base_vector(2)};
  Spinor chi[2] = {tinv_dag * base_vector(1), tinv_dag * base_vector(2)};
  CMat2 acc = CMat2::zero();
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k)
      if (c[m - 1][j][k] != 0.0)
        acc = acc + c[m - 1][j][k] * outer(phi[j], chi[k]);
  return pref[m - 1] * acc;
}

DeformedBasis deformed_generators(const DeformationParam& p) {
  const double g = p.gamma;
  const double winv = 1.0 / p.omega;
  CMat2 e1g{cplx(0.0, -g * winv), cplx(winv, 0.0),  //
            cplx(winv, 0.0), cplx(0.0, g * winv)};
  CMat2 e2g = pauli2();
  CMat2 e3g{cplx(winv, 0.0), cplx(0.0, g * winv),  //
            cplx(0.0, g * winv), cplx(-winv, 0.0)};
  DeformedBasis b{p, e1g, e2g, e3g, CMat2::zero(), CMat2::zero(), CMat2::zero(),
                  CMat2::zero()};
  b.e12g = b.e1g * b.e2g;
  b.e23g = b.e2g * b.e3g;
  b.e31g = b.e3g * b.e1g;
  b.e123g = b.e1g * b.e2g * b.e3g;
  return b;
}

VerificationReport verify_clifford_relations(const DeformedBasis& b) {
  VerificationReport rep;
  const CMat2 gen[3] = {b.e1g, b.e2g, b.e3g};
  const CMat2 id = CMat2::identity();
  for (int i = 0; i < 3; ++i) {
    const double r = (gen[i] * gen[i] - id).max_abs();
    rep.add("square_e" + std::to_string(i + 1),
            r <= 1e-12 ? CheckStatus::Pass : CheckStatus::Fail, r);
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const double r = (gen[i] * gen[j] + gen[j] * gen[i]).max_abs();
      rep.add("anticommutator_e" + std::to_string(i + 1) + "e" +
                  std::to_string(j + 1),
              r <= 1e-12 ? CheckStatus::Pass : CheckStatus::Fail, r);
    }
  return rep;
}

}  // namespace cl3
