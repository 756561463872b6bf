#pragma once
#include <array>

#include "cl3/ideal.hpp"

namespace cl3 {

struct SpinorOperatorCoords {
  double xi0{}, xi12{}, xi23{}, xi31{};
};

struct KSQuadruple {
  double r1{}, r2{}, r3{}, r4{};

  double norm_sq() const { return r1 * r1 + r2 * r2 + r3 * r3 + r4 * r4; }
};

enum class KSVariant { MinusBranch, PlusBranch };

// Even-subalgebra operator Xi = (Xi_g + breve(Xi_g))/2 with
// Xi_g = xi0 1 + w xi12 e12g + w xi23 e23g + xi31 e31g.  The gamma
// dependence cancels; the closed form is
// [[xi0 + i xi12, xi31 + i xi23], [-xi31 + i xi23, xi0 - i xi12]].
// Throws std::invalid_argument on mismatched gammas.
CMat2 spinor_operator(const SpinorOperatorCoords& c, const DeformedBasis& b,
                      const TimeReversedBasis& tb);

// Quadruple identification Xi1 = xi0 + i xi12, Xi2 = -xi31 + i xi23.
KSQuadruple quadruple_from_coords(const SpinorOperatorCoords& c);

// Quadratic map R^4 -> R^3 satisfying x1^2+x2^2+x3^2 = (sum r_i^2)^2.
std::array<double, 3> ks_map(KSVariant variant, const KSQuadruple& r);

// Spherical lift: ks_map(ks_lift(v, r, th, ph, w1)) =
// (r sin th cos ph, r sin th sin ph, r cos th).  The free angle w1 is a
// gauge choice.  Throws on negative r.
KSQuadruple ks_lift(KSVariant variant, double r, double theta, double phi,
                    double omega1);

// Sandwich (w/2) Xi (e3g -+ breve e3g) reversion(Xi).  MinusBranch is pure
// grade 1; PlusBranch is pure grade 2 and scales linearly in gamma, so it
// degenerates at gamma ~ 0 (throws below 1e-9).
Multivector upsilon(KSVariant variant, const CMat2& xi, const DeformedBasis& b,
                    const TimeReversedBasis& tb);

// Component extraction fixed by matching the quadratic-map formulas:
// MinusBranch (c1,c2,c3) grade-1 coefficients -> (x1,x2,x3) = (-c2, c1, c3);
// PlusBranch divides the bivector by gamma and reads (d1,d2,d3) from
// (e23, e31, e12) -> (x1,x2,x3) = (-d2, -d3, d1).
std::array<double, 3> upsilon_coords(KSVariant variant, const Multivector& m,
                                     double gamma);

}  // namespace cl3
