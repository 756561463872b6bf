#include "cl3/spinor_ks.hpp"

#include <cmath>
#include <stdexcept>

namespace cl3 {

CMat2 spinor_operator(const SpinorOperatorCoords& c, const DeformedBasis& b,
                      const TimeReversedBasis& tb) {
  if (b.param.gamma != tb.param.gamma)
    throw std::invalid_argument("spinor_operator: gamma mismatch");
  const double w = b.param.omega;
  const CMat2 id = CMat2::identity();
  const CMat2 direct =
      c.xi0 * id + (w * c.xi12) * b.e12g + (w * c.xi23) * b.e23g +
      c.xi31 * b.e31g;
  const CMat2 reversed =
      c.xi0 * id + (w * c.xi12) * tb.e12b + (w * c.xi23) * tb.e23b +
      c.xi31 * tb.e31b;
  return 0.5 * (direct + reversed);
}

KSQuadruple quadruple_from_coords(const SpinorOperatorCoords& c) {
  return {c.xi0, c.xi12, -c.xi31, c.xi23};
}

std::array<double, 3> ks_map(KSVariant variant, const KSQuadruple& r) {
  if (variant == KSVariant::MinusBranch)
    return {2.0 * (r.r2 * r.r3 - r.r1 * r.r4),
            2.0 * (r.r1 * r.r3 + r.r2 * r.r4),
            r.r1 * r.r1 + r.r2 * r.r2 - r.r3 * r.r3 - r.r4 * r.r4};
  return {2.0 * (r.r1 * r.r2 + r.r3 * r.r4),
          2.0 * (r.r1 * r.r3 - r.r2 * r.r4),
          r.r1 * r.r1 - r.r2 * r.r2 - r.r3 * r.r3 + r.r4 * r.r4};
}

KSQuadruple ks_lift(KSVariant variant, double r, double theta, double phi,
                    double omega1) {
  if (r < 0.0) throw std::invalid_argument("ks_lift: r must be >= 0");
  const double sr = std::sqrt(r);
  const double ch = std::cos(0.5 * theta);
  const double sh = std::sin(0.5 * theta);
  if (variant == KSVariant::MinusBranch) {
    const double omega2 = phi - omega1;
    return {sr * ch * std::sin(omega1), sr * ch * std::cos(omega1),
            sr * sh * std::cos(omega2), sr * sh * std::sin(omega2)};
  }
  const double omega2 = omega1 - phi;
  return {sr * ch * std::sin(omega1), sr * sh * std::sin(omega2),
          sr * sh * std::cos(omega2), sr * ch * std::cos(omega1)};
}

Multivector upsilon(KSVariant variant, const CMat2& xi, const DeformedBasis& b,
                    const TimeReversedBasis& tb) {
  if (b.param.gamma != tb.param.gamma)
    throw std::invalid_argument("upsilon: gamma mismatch");
  if (variant == KSVariant::PlusBranch && std::abs(b.param.gamma) <= 1e-9)
    throw std::runtime_error("upsilon: plus branch degenerates at gamma ~ 0");
  const CMat2 core = variant == KSVariant::MinusBranch ? b.e3g - tb.e3b
                                                       : b.e3g + tb.e3b;
  const CMat2 xirev = involution_matrix(xi, InvolutionKind::Reversion);
  return from_matrix((0.5 * b.param.omega) * (xi * core * xirev));
}

std::array<double, 3> upsilon_coords(KSVariant variant, const Multivector& m,
                                     double gamma) {
  if (variant == KSVariant::MinusBranch) return {-m.u2, m.u1, m.u3};
  if (std::abs(gamma) <= 1e-9)
    throw std::runtime_error("upsilon_coords: plus branch needs gamma != 0");
  return {m.u13 / gamma, -m.u12 / gamma, m.u23 / gamma};
}

}  // namespace cl3
