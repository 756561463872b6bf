#include "cl3/time_reversal.hpp"

#include <cmath>
#include <stdexcept>

namespace cl3 {

Spinor apply_T(const Spinor& psi) {
  return {-std::conj(psi.c2), std::conj(psi.c1)};
}

CMat2 conjugate_by_T(const CMat2& m) {
  return {std::conj(m.a22), -std::conj(m.a21), -std::conj(m.a12),
          std::conj(m.a11)};
}

TimeReversedBasis time_reversed_generators(const DeformedBasis& b) {
  TimeReversedBasis tb{b.param,
                       conjugate_by_T(CMat2::identity()),
                       conjugate_by_T(b.e1g),
                       conjugate_by_T(b.e2g),
                       conjugate_by_T(b.e3g),
                       conjugate_by_T(b.e12g),
                       conjugate_by_T(b.e23g),
                       conjugate_by_T(b.e31g),
                       conjugate_by_T(b.e123g)};
  return tb;
}

namespace {

// Complex ratio candidate/partner along the dominant component, plus the
// residual of candidate - ratio * partner.
std::pair<cplx, double> ray_ratio(const Spinor& candidate,
                                  const Spinor& partner) {
  const cplx denom = inner(partner, partner);
  const cplx ratio = inner(partner, candidate) / denom;
  const Spinor res = candidate - ratio * partner;
  return {ratio, norm(res)};
}

}  // namespace

PairingReport kramers_pairing(const BiorthoEigensystem& sys) {
  PairingReport rep{};
  {
    const auto [ratio, res] = ray_ratio(apply_T(sys.psi_plus_g), sys.psi_minus_mg);
    rep.ratio_plus = ratio;
    rep.n_plus = ratio.real() >= 0.0 ? 0 : 1;
    rep.dev_plus = std::abs(std::abs(ratio) - 1.0) + res;
  }
  {
    const auto [ratio, res] =
        ray_ratio(apply_T(sys.psi_minus_g), sys.psi_plus_mg);
    rep.ratio_minus = ratio;
    rep.n_minus = ratio.real() >= 0.0 ? 0 : 1;
    rep.dev_minus = std::abs(std::abs(ratio) - 1.0) + res;
  }
  if (rep.dev_plus > 1e-10 || rep.dev_minus > 1e-10)
    throw std::runtime_error("kramers_pairing: time-reversed state is not on "
                             "the bi-orthogonal partner ray");
  return rep;
}

Spinor evolve(const CMat2& h, const Spinor& psi0, double t) {
  return expm(cplx(0.0, -t) * h) * psi0;
}

}  // namespace cl3
