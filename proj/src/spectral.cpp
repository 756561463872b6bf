#include "cl3/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cl3 {

FieldConfig::FieldConfig(double b1_, double b2_) : b1(b1_), b2(b2_) {
  b = std::hypot(b1_, b2_);
  if (!(b > 0.0) || !std::isfinite(b))
    throw std::invalid_argument("FieldConfig: |B| must be positive and finite");
}

DecomposedHamiltonian DecomposedHamiltonian::split(const CMat2& h) {
  const CMat2 hd = h.adjoint();
  DecomposedHamiltonian d;
  d.h = h;
  d.h0 = 0.5 * (h + hd);
  d.g = cplx(0.0, -0.5) * (h - hd);
  return d;
}

Eigen2 eig2(const CMat2& m) {
  const cplx alpha = 0.5 * m.trace();
  const cplx disc = std::sqrt(alpha * alpha - m.det());
  const cplx l1 = alpha + disc;
  const cplx l2 = alpha - disc;
  auto vec = [&m](cplx l) -> Spinor {
    const Spinor r1{m.a12, l - m.a11};  // annihilated by row 1 of (m - l)
    const Spinor r2{l - m.a22, m.a21};  // annihilated by row 2
    Spinor v = norm(r1) >= norm(r2) ? r1 : r2;
    const double nv = norm(v);
    if (nv == 0.0) return {1.0, 0.0};
    return {v.c1 / nv, v.c2 / nv};
  };
  return {l1, l2, vec(l1), vec(l2)};
}

CMat2 build_hamiltonian(const DeformationParam& p, const FieldConfig& f) {
  const DeformedBasis b = deformed_generators(p);
  return f.b1 * b.e1g + f.b2 * b.e2g;
}

std::pair<double, double> theta_pm(const DeformationParam& p,
                                   const FieldConfig& f) {
  const double g = p.gamma, w = p.omega, b = f.b;
  const double np = g * f.b1 * f.b1 + w * w * b * f.b2;
  const double dp = w * b * f.b1 - g * w * f.b1 * f.b2;
  const double nm = g * f.b1 * f.b1 - w * w * b * f.b2;
  const double dm = w * b * f.b1 + g * w * f.b1 * f.b2;
  if ((std::abs(np) < 1e-15 && std::abs(dp) < 1e-15) ||
      (std::abs(nm) < 1e-15 && std::abs(dm) < 1e-15))
    throw std::runtime_error("theta_pm: degenerate direction");
  return {std::atan2(np, dp), std::atan2(nm, dm)};
}

BiorthoEigensystem eigensystem(const DeformationParam& p,
                               const FieldConfig& f) {
  const auto [tp, tm] = theta_pm(p, f);
  const double r = 1.0 / std::sqrt(2.0);
  const cplx ep = std::exp(cplx(0.0, -tp));
  const cplx em = std::exp(cplx(0.0, tm));
  BiorthoEigensystem sys;
  sys.e_plus = f.b;
  sys.e_minus = -f.b;
  sys.theta_plus = tp;
  sys.theta_minus = tm;
  sys.psi_plus_g = {r * ep, cplx(r, 0.0)};
  sys.psi_minus_g = {-r * em, cplx(r, 0.0)};
  sys.psi_plus_mg = {cplx(r, 0.0), r * std::exp(cplx(0.0, -tm))};
  sys.psi_minus_mg = {cplx(-r, 0.0), r * std::exp(cplx(0.0, tp))};
  return sys;
}

ProjectorPair projectors(const BiorthoEigensystem& sys) {
  const cplx dp = inner(sys.psi_plus_mg, sys.psi_plus_g);
  const cplx dm = inner(sys.psi_minus_mg, sys.psi_minus_g);
  if (std::abs(dp) < 1e-12 || std::abs(dm) < 1e-12)
    throw std::runtime_error("projectors: self-orthogonal eigenstate");
  ProjectorPair pp;
  pp.pi_plus = (1.0 / dp) * outer(sys.psi_plus_g, sys.psi_plus_mg);
  pp.pi_minus = (1.0 / dm) * outer(sys.psi_minus_g, sys.psi_minus_mg);
  return pp;
}

namespace {

struct Pair2 {
  cplx lambda[2];
  Spinor v[2];
};

// Eigensystem sorted so that family index is stable under conjugation
// pairing: the H^dagger eigenvalue matched to lambda_n is lambda_n^*.
Pair2 paired_adjoint_system(const Eigen2& eh, const Eigen2& ehd) {
  Pair2 out;
  const double direct = std::abs(ehd.lambda1 - std::conj(eh.lambda1)) +
                        std::abs(ehd.lambda2 - std::conj(eh.lambda2));
  const double swapped = std::abs(ehd.lambda2 - std::conj(eh.lambda1)) +
                         std::abs(ehd.lambda1 - std::conj(eh.lambda2));
  if (direct <= swapped) {
    out.lambda[0] = ehd.lambda1;
    out.lambda[1] = ehd.lambda2;
    out.v[0] = ehd.v1;
    out.v[1] = ehd.v2;
  } else {
    out.lambda[0] = ehd.lambda2;
    out.lambda[1] = ehd.lambda1;
    out.v[0] = ehd.v2;
    out.v[1] = ehd.v1;
  }
  return out;
}

}  // namespace

VerificationReport verify_brody_relations(const DecomposedHamiltonian& d) {
  const double scale = std::max(1.0, d.h.max_abs());
  const Eigen2 eh = eig2(d.h);
  if (std::abs(eh.lambda1 - eh.lambda2) < 1e-12 * scale)
    throw std::runtime_error("verify_brody_relations: degenerate spectrum");
  const Pair2 adj = paired_adjoint_system(eh, eig2(d.h.adjoint()));

  const cplx lam[2] = {eh.lambda1, eh.lambda2};
  const Spinor u[2] = {eh.v1, eh.v2};
  const cplx* mu = adj.lambda;
  const Spinor* v = adj.v;

  VerificationReport rep;
  auto tag = [](const char* base, int m, int n) {
    return std::string(base) + "[" + std::to_string(m + 1) + "," +
           std::to_string(n + 1) + "]";
  };

  for (int m = 0; m < 2; ++m)
    for (int n = 0; n < 2; ++n) {
      const cplx uu = inner(u[m], u[n]);
      const cplx vv = inner(v[m], v[n]);

      // (lambda_m^* + lambda_n) <u_m|u_n> = 2 <u_m|H0|u_n>, division form.
      cplx den = std::conj(lam[m]) + lam[n];
      if (std::abs(den) < 1e-10) {
        rep.add(tag("u_h0", m, n), CheckStatus::Skip, 0.0, "denominator ~ 0");
      } else {
        const double r = std::abs(uu - 2.0 / den * inner(u[m], d.h0 * u[n]));
        rep.add(tag("u_h0", m, n),
                r <= 1e-10 ? CheckStatus::Pass : CheckStatus::Fail, r);
      }

      // (lambda_m^* - lambda_n) <u_m|u_n> = -2i <u_m|G|u_n>.
      den = std::conj(lam[m]) - lam[n];
      if (std::abs(den) < 1e-10) {
        rep.add(tag("u_gamma", m, n), CheckStatus::Skip, 0.0,
                "denominator ~ 0");
      } else {
        const double r =
            std::abs(uu - cplx(0.0, -2.0) / den * inner(u[m], d.g * u[n]));
        rep.add(tag("u_gamma", m, n),
                r <= 1e-10 ? CheckStatus::Pass : CheckStatus::Fail, r);
      }

      den = std::conj(mu[m]) + mu[n];
      if (std::abs(den) < 1e-10) {
        rep.add(tag("v_h0", m, n), CheckStatus::Skip, 0.0, "denominator ~ 0");
      } else {
        const double r = std::abs(vv - 2.0 / den * inner(v[m], d.h0 * v[n]));
        rep.add(tag("v_h0", m, n),
                r <= 1e-10 ? CheckStatus::Pass : CheckStatus::Fail, r);
      }

      // For the adjoint family the split is H^dagger = H0 - iG, so the
      // difference relation carries the opposite sign:
      // (mu_m^* - mu_n) <v_m|v_n> = +2i <v_m|G|v_n>.
      den = std::conj(mu[m]) - mu[n];
      if (std::abs(den) < 1e-10) {
        rep.add(tag("v_gamma", m, n), CheckStatus::Skip, 0.0,
                "denominator ~ 0");
      } else {
        const double r =
            std::abs(vv - cplx(0.0, 2.0) / den * inner(v[m], d.g * v[n]));
        rep.add(tag("v_gamma", m, n),
                r <= 1e-10 ? CheckStatus::Pass : CheckStatus::Fail, r);
      }

      // Cross family: <u_m|v_n> = 0 whenever lambda_m^* != mu_n.
      if (m != n) {
        if (std::abs(std::conj(lam[m]) - mu[n]) < 1e-10) {
          rep.add(tag("cross", m, n), CheckStatus::Skip, 0.0,
                  "eigenvalue clash");
        } else {
          const double r = std::abs(inner(u[m], v[n]));
          rep.add(tag("cross", m, n),
                  r <= 1e-10 ? CheckStatus::Pass : CheckStatus::Fail, r);
        }
      }
    }
  return rep;
}

std::pair<cplx, cplx> eigenbasis_coefficients(const Spinor& psi,
                                              const BiorthoEigensystem& sys) {
  // Columns [psi_plus_g psi_minus_g] form the change-of-basis matrix.
  const CMat2 m{sys.psi_plus_g.c1, sys.psi_minus_g.c1, sys.psi_plus_g.c2,
                sys.psi_minus_g.c2};
  const cplx det = m.det();
  if (std::abs(det) < 1e-14)
    throw std::runtime_error("eigenbasis_coefficients: dependent eigenvectors");
  const Spinor alpha = m.inverse() * psi;
  return {alpha.c1, alpha.c2};
}

Spinor associated_state(const Spinor& psi, const BiorthoEigensystem& sys) {
  const auto [ap, am] = eigenbasis_coefficients(psi, sys);
  return ap * sys.psi_plus_mg + am * sys.psi_minus_mg;
}

cplx biortho_expectation(const CMat2& f, const Spinor& psi,
                         const BiorthoEigensystem& sys) {
  const Spinor check = associated_state(psi, sys);
  const cplx denom = inner(check, psi);
  if (std::abs(denom) < 1e-12)
    throw std::runtime_error("biortho_expectation: vanishing bi-norm");
  return inner(check, f * psi) / denom;
}

}  // namespace cl3
