#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "cl3/rng.hpp"
#include "cl3/spectral.hpp"
#include "test_util.hpp"

using namespace cl3;
using namespace cl3::test;

TEST_CASE("field config rejects the degenerate field") {
  CHECK_THROWS_AS(FieldConfig(0.0, 0.0), std::invalid_argument);
  const FieldConfig f(3.0, 4.0);
  CHECK(f.b == doctest::Approx(5.0));
}

TEST_CASE("hamiltonian closed form") {
  const CMat2 h0 = build_hamiltonian(DeformationParam(0.0), FieldConfig(1, 0));
  CHECK(mat_approx(h0, pauli1(), 1e-15));

  // gamma = 0.6, B = (1,1): (1/w) [[-0.6i, 1 - 0.8i], [1 + 0.8i, 0.6i]]
  const CMat2 h = build_hamiltonian(DeformationParam(0.6), FieldConfig(1, 1));
  CHECK(std::abs(h.a11 - cplx(0.0, -0.75)) <= 1e-14);
  CHECK(std::abs(h.a12 - cplx(1.25, -1.0)) <= 1e-14);
  CHECK(std::abs(h.a21 - cplx(1.25, 1.0)) <= 1e-14);
  CHECK(std::abs(h.a22 - cplx(0.0, 0.75)) <= 1e-14);

  Rng r(3);
  for (int i = 0; i < 200; ++i) {
    const DeformationParam p(r.range(-0.99, 0.99));
    const FieldConfig f(r.range(-2, 2), r.range(-2, 2) + 0.1);
    const CMat2 hh = build_hamiltonian(p, f);
    CHECK(std::abs(hh.trace()) <= 1e-13 * f.b);
    CHECK(std::abs(hh.det() + f.b * f.b) <= 1e-13 * f.b * f.b);
    CHECK(mat_approx(hh.adjoint(),
                     build_hamiltonian(DeformationParam(-p.gamma), f), 1e-13));
  }
}

TEST_CASE("angles make the printed spinors exact eigenvectors") {
  // at gamma = 0, B = (1,1) the plus angle is pi/4 and the minus angle is
  // its negative, so that (-e^{i theta-}, 1) really solves H psi = -B psi
  const auto [tp, tm] = theta_pm(DeformationParam(0.0), FieldConfig(1, 1));
  CHECK(tp == doctest::Approx(M_PI / 4).epsilon(1e-14));
  CHECK(tm == doctest::Approx(-M_PI / 4).epsilon(1e-14));

  Rng r(9);
  for (int i = 0; i < 400; ++i) {
    const DeformationParam p(r.range(-0.99, 0.99));
    double b1 = r.range(-2, 2), b2 = r.range(-2, 2);
    if (std::abs(b1) < 1e-3 && std::abs(b2) < 1e-3) b1 = 1.0;
    const FieldConfig f(b1, b2);
    const CMat2 h = build_hamiltonian(p, f);
    const CMat2 hm = build_hamiltonian(DeformationParam(-p.gamma), f);
    const BiorthoEigensystem s = eigensystem(p, f);
    CHECK(norm(h * s.psi_plus_g - f.b * s.psi_plus_g) <= 1e-12 * f.b);
    CHECK(norm(h * s.psi_minus_g + f.b * s.psi_minus_g) <= 1e-12 * f.b);
    CHECK(norm(hm * s.psi_plus_mg - f.b * s.psi_plus_mg) <= 1e-12 * f.b);
    CHECK(norm(hm * s.psi_minus_mg + f.b * s.psi_minus_mg) <= 1e-12 * f.b);
  }
}

TEST_CASE("angles depend only on the field direction") {
  const DeformationParam p(0.4);
  const auto [tp, tm] = theta_pm(p, FieldConfig(1.3, 1.3));
  const auto [tp2, tm2] = theta_pm(p, FieldConfig(2.6, 2.6));
  CHECK(std::abs(tp - tp2) <= 1e-13);
  CHECK(std::abs(tm - tm2) <= 1e-13);
}

TEST_CASE("bi-orthogonality of the eigen-spinor families") {
  const BiorthoEigensystem s =
      eigensystem(DeformationParam(0.5), FieldConfig(2, 3));
  CHECK(std::abs(inner(s.psi_minus_mg, s.psi_plus_g)) <= 1e-13);
  CHECK(std::abs(inner(s.psi_plus_mg, s.psi_minus_g)) <= 1e-13);
}

TEST_CASE("eigensystem against the dense solver") {
  const DeformationParam p(0.6);
  const FieldConfig f(1, 1);
  const CMat2 h = build_hamiltonian(p, f);
  const Eigen2 e = eig2(h);
  const double hi = std::max(e.lambda1.real(), e.lambda2.real());
  const double lo = std::min(e.lambda1.real(), e.lambda2.real());
  CHECK(hi == doctest::Approx(f.b).epsilon(1e-13));
  CHECK(lo == doctest::Approx(-f.b).epsilon(1e-13));
  CHECK(std::abs(e.lambda1.imag()) <= 1e-13);

  // ray comparison against the closed-form eigenvectors
  const BiorthoEigensystem s = eigensystem(p, f);
  const Spinor& v = e.lambda1.real() > 0 ? e.v1 : e.v2;
  const cplx ratio = inner(v, s.psi_plus_g) / inner(v, v);
  CHECK(norm(s.psi_plus_g - ratio * v) <= 1e-12);
}

TEST_CASE("hermitian limit gives sigma.B eigenvectors") {
  const BiorthoEigensystem s =
      eigensystem(DeformationParam(0.0), FieldConfig(1, 0));
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(spinor_approx(s.psi_plus_g, {cplx(r, 0), cplx(r, 0)}, 1e-14));
  CHECK(spinor_approx(s.psi_minus_g, {cplx(-r, 0), cplx(r, 0)}, 1e-14));
}

TEST_CASE("projectors") {
  SUBCASE("hermitian limit") {
    const ProjectorPair pp =
        projectors(eigensystem(DeformationParam(0.0), FieldConfig(1, 2)));
    CHECK(mat_approx(pp.pi_plus, pp.pi_plus.adjoint(), 1e-13));
  }

  SUBCASE("algebraic identities") {
    const FieldConfig f(1, 2);
    const BiorthoEigensystem s = eigensystem(DeformationParam(0.7), f);
    const ProjectorPair pp = projectors(s);
    const CMat2 id = CMat2::identity();
    CHECK(mat_approx(pp.pi_plus + pp.pi_minus, id, 1e-12));
    CHECK((pp.pi_plus * pp.pi_minus).max_abs() <= 1e-12);
    CHECK(mat_approx(pp.pi_plus * pp.pi_plus, pp.pi_plus, 1e-12));
    CHECK(mat_approx(pp.pi_minus * pp.pi_minus, pp.pi_minus, 1e-12));
    CHECK((pp.pi_plus - pp.pi_plus.adjoint()).max_abs() > 1e-6);

    // closed form with prefactor 1/(e^{-i tp} + e^{i tm}); the (1,2) entry
    // is e^{i(tm - tp)} = e^{i tm} e^{-i tp}
    const cplx etp = std::exp(cplx(0, -s.theta_plus));
    const cplx etm = std::exp(cplx(0, s.theta_minus));
    const cplx pref = 1.0 / (etp + etm);
    const CMat2 want{pref * etp, pref * etm * etp, pref, pref * etm};
    CHECK(mat_approx(pp.pi_plus, want, 1e-13));

    const CMat2 h = build_hamiltonian(DeformationParam(0.7), f);
    CHECK((h - f.b * pp.pi_plus + f.b * pp.pi_minus).max_abs() <=
          1e-12 * f.b);
  }

  SUBCASE("grade involution swaps branch and deformation sign") {
    Rng r(19);
    for (int i = 0; i < 100; ++i) {
      const double g = r.range(-0.95, 0.95);
      const FieldConfig f(r.range(0.2, 2), r.range(-2, 2));
      const ProjectorPair pp = projectors(eigensystem(DeformationParam(g), f));
      const ProjectorPair pm =
          projectors(eigensystem(DeformationParam(-g), f));
      CHECK(mat_approx(
          involution_matrix(pp.pi_plus, InvolutionKind::GradeInversion),
          pm.pi_minus, 1e-12));
      CHECK(mat_approx(
          involution_matrix(pp.pi_minus, InvolutionKind::GradeInversion),
          pm.pi_plus, 1e-12));
    }
  }
}

TEST_CASE("hermitian/anti-hermitian split") {
  Rng r(59);
  for (int i = 0; i < 100; ++i) {
    const CMat2 m = random_cmat(r);
    const DecomposedHamiltonian d = DecomposedHamiltonian::split(m);
    CHECK(mat_approx(d.h0, d.h0.adjoint(), 0));
    CHECK(mat_approx(d.g, d.g.adjoint(), 0));
    CHECK(mat_approx(d.h0 + cplx(0, 1) * d.g, m, 1e-15));
  }
}

TEST_CASE("sum/difference eigenvector relations") {
  SUBCASE("hermitian input reduces to orthonormality") {
    Rng r(41);
    for (int i = 0; i < 50; ++i) {
      CMat2 m = random_cmat(r);
      m = 0.5 * (m + m.adjoint());  // G = 0
      // keep the gap and all sum denominators well conditioned
      const Eigen2 e = eig2(m);
      if (std::abs(e.lambda1 - e.lambda2) < 0.1) continue;
      if (std::abs(e.lambda1 + e.lambda2) < 0.1) continue;
      if (std::abs(e.lambda1) < 0.1 || std::abs(e.lambda2) < 0.1) continue;
      const VerificationReport rep =
          verify_brody_relations(DecomposedHamiltonian::split(m));
      CHECK(rep.max_residual() <= 1e-10);
    }
  }

  SUBCASE("deformed family skips exactly the predicted branches") {
    const CMat2 h =
        build_hamiltonian(DeformationParam(0.5), FieldConfig(1, 1));
    const VerificationReport rep =
        verify_brody_relations(DecomposedHamiltonian::split(h));
    int skipped_sum_offdiag = 0, skipped_diff_diag = 0, other_skips = 0;
    for (const auto& e : rep.entries) {
      const bool off_diag = e.name.find("[1,2]") != std::string::npos ||
                            e.name.find("[2,1]") != std::string::npos;
      if (e.status != CheckStatus::Skip) continue;
      if ((e.name.rfind("u_h0", 0) == 0 || e.name.rfind("v_h0", 0) == 0) &&
          off_diag)
        ++skipped_sum_offdiag;
      else if ((e.name.rfind("u_gamma", 0) == 0 ||
                e.name.rfind("v_gamma", 0) == 0) &&
               !off_diag)
        ++skipped_diff_diag;
      else
        ++other_skips;
    }
    CHECK(skipped_sum_offdiag == 4);  // opposite-sign iso-spectral pairs
    CHECK(skipped_diff_diag == 4);    // real spectrum on the diagonal
    CHECK(other_skips == 0);
    CHECK(rep.passed());
    CHECK(rep.max_residual() <= 1e-10);
  }

  SUBCASE("random non-hermitian matrices with complex spectra") {
    Rng r(43);
    int done = 0;
    while (done < 100) {
      const CMat2 m = random_cmat(r);
      const Eigen2 e = eig2(m);
      const cplx l[2] = {e.lambda1, e.lambda2};
      double sep = std::abs(l[0] - l[1]);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          sep = std::min(sep, std::abs(std::conj(l[a]) + l[b]));
          sep = std::min(sep, std::abs(std::conj(l[a]) - l[b]));
        }
      if (sep < 0.05) continue;
      ++done;
      const VerificationReport rep =
          verify_brody_relations(DecomposedHamiltonian::split(m));
      CHECK(rep.passed());
      CHECK(rep.skipped() == 0);
      CHECK(rep.max_residual() <= 1e-10);
    }
  }

  SUBCASE("degenerate spectrum is rejected") {
    CHECK_THROWS_AS(
        verify_brody_relations(DecomposedHamiltonian::split(CMat2::identity())),
        std::runtime_error);
  }
}

TEST_CASE("bi-orthogonal expectation values") {
  const DeformationParam p(0.4);
  const FieldConfig f(1, 2);
  const CMat2 h = build_hamiltonian(p, f);
  const BiorthoEigensystem s = eigensystem(p, f);

  CHECK(std::abs(biortho_expectation(h, s.psi_plus_g, s) - f.b) <= 1e-12 * f.b);
  CHECK(std::abs(biortho_expectation(CMat2::identity(), s.psi_plus_g, s) -
                 1.0) <= 1e-12);

  // equal-weight superposition balances +B and -B exactly
  const Spinor mix = s.psi_plus_g + s.psi_minus_g;
  CHECK(std::abs(biortho_expectation(h, mix, s)) <= 1e-12 * f.b);

  Rng r(47);
  for (int i = 0; i < 50; ++i) {
    const Spinor psi = random_spinor(r);
    if (norm(psi) < 0.1) continue;
    CHECK(std::abs(biortho_expectation(CMat2::identity(), psi, s) - 1.0) <=
          1e-11);
  }

  // vanishing bi-norm is rejected
  CHECK_THROWS_AS(biortho_expectation(h, Spinor{0.0, 0.0}, s),
                  std::runtime_error);
}
