#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "cl3/rng.hpp"
#include "cl3/spinor_ks.hpp"
#include "test_util.hpp"

using namespace cl3;
using namespace cl3::test;

namespace {

struct BasisPack {
  DeformedBasis b;
  TimeReversedBasis tb;
};

BasisPack pack(double gamma) {
  const DeformedBasis b = deformed_generators(DeformationParam(gamma));
  return {b, time_reversed_generators(b)};
}

}  // namespace

TEST_CASE("spinor operator") {
  const BasisPack p = pack(0.5);
  CHECK(mat_approx(spinor_operator({1, 0, 0, 0}, p.b, p.tb), CMat2::identity(),
                   1e-14));
  // coords (0,1,0,0) give i sigma3
  CHECK(mat_approx(spinor_operator({0, 1, 0, 0}, p.b, p.tb),
                   cplx(0, 1) * pauli3(), 1e-14));

  Rng r(97);
  for (int i = 0; i < 100; ++i) {
    const SpinorOperatorCoords c{r.range(-2, 2), r.range(-2, 2),
                                 r.range(-2, 2), r.range(-2, 2)};
    const BasisPack pa = pack(0.2), pb = pack(0.8);
    const CMat2 xa = spinor_operator(c, pa.b, pa.tb);
    const CMat2 xb = spinor_operator(c, pb.b, pb.tb);
    CHECK(mat_approx(xa, xb, 1e-13));  // gamma cancels

    const CMat2 closed{cplx(c.xi0, c.xi12), cplx(c.xi31, c.xi23),
                       cplx(-c.xi31, c.xi23), cplx(c.xi0, -c.xi12)};
    CHECK(mat_approx(xa, closed, 1e-13));

    // second column carries the time reverse of the first
    const Spinor col1{xa.a11, xa.a21};
    CHECK(norm(Spinor{xa.a12, xa.a22} - apply_T(col1)) <= 1e-13);
  }

  const BasisPack other = pack(0.3);
  CHECK_THROWS_AS(spinor_operator({1, 0, 0, 0}, p.b, other.tb),
                  std::invalid_argument);
}

TEST_CASE("quadratic map") {
  auto x = ks_map(KSVariant::MinusBranch, {1, 0, 0, 0});
  CHECK(x[0] == 0.0);
  CHECK(x[1] == 0.0);
  CHECK(x[2] == 1.0);

  x = ks_map(KSVariant::MinusBranch, {0, 1, 1, 0});
  CHECK(x[0] == 2.0);
  CHECK(x[1] == 0.0);
  CHECK(x[2] == 0.0);

  x = ks_map(KSVariant::PlusBranch, {1, 1, 1, 1});
  CHECK(x[0] == 4.0);
  CHECK(x[1] == 0.0);
  CHECK(x[2] == 0.0);

  Rng r(101);
  for (int i = 0; i < 2000; ++i) {
    const KSQuadruple q{r.range(-2, 2), r.range(-2, 2), r.range(-2, 2),
                        r.range(-2, 2)};
    for (KSVariant v : {KSVariant::MinusBranch, KSVariant::PlusBranch}) {
      const auto y = ks_map(v, q);
      const double lhs = y[0] * y[0] + y[1] * y[1] + y[2] * y[2];
      const double rhs = q.norm_sq() * q.norm_sq();
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(rhs, 1e-30));
    }
  }
}

TEST_CASE("spherical lift") {
  for (KSVariant v : {KSVariant::MinusBranch, KSVariant::PlusBranch}) {
    // pole: theta = 0 maps to (0, 0, r) for any phi and gauge angle
    for (double phi : {0.0, 1.0, 2.5})
      for (double w1 : {0.0, 0.7, 4.0}) {
        const auto x = ks_map(v, ks_lift(v, 1.0, 0.0, phi, w1));
        CHECK(std::abs(x[0]) <= 1e-14);
        CHECK(std::abs(x[1]) <= 1e-14);
        CHECK(x[2] == doctest::Approx(1.0).epsilon(1e-14));
      }
  }

  // r = 2, theta = pi/2, phi = pi/3 -> (1, sqrt(3), 0)
  const auto x =
      ks_map(KSVariant::MinusBranch, ks_lift(KSVariant::MinusBranch, 2.0,
                                             M_PI / 2, M_PI / 3, 0.7));
  CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(x[1] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-13));
  CHECK(std::abs(x[2]) <= 1e-13);

  // gauge freedom: different w1, different quadruple, same target
  const KSQuadruple qa = ks_lift(KSVariant::MinusBranch, 2.0, 1.1, 0.4, 0.0);
  const KSQuadruple qb = ks_lift(KSVariant::MinusBranch, 2.0, 1.1, 0.4, 1.3);
  CHECK(std::abs(qa.r1 - qb.r1) > 1e-3);
  const auto xa = ks_map(KSVariant::MinusBranch, qa);
  const auto xb = ks_map(KSVariant::MinusBranch, qb);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(xa[k] - xb[k]) <= 1e-13);

  CHECK_THROWS_AS(ks_lift(KSVariant::MinusBranch, -1.0, 0.0, 0.0, 0.0),
                  std::invalid_argument);

  Rng r(103);
  for (int i = 0; i < 500; ++i) {
    const double rad = r.range(0.0, 3.0);
    const double th = r.range(0.0, M_PI);
    const double ph = r.range(0.0, 2 * M_PI);
    const double w1 = r.range(0.0, 2 * M_PI);
    for (KSVariant v : {KSVariant::MinusBranch, KSVariant::PlusBranch}) {
      const auto y = ks_map(v, ks_lift(v, rad, th, ph, w1));
      CHECK(std::abs(y[0] - rad * std::sin(th) * std::cos(ph)) <=
            1e-12 * std::max(rad, 1.0));
      CHECK(std::abs(y[1] - rad * std::sin(th) * std::sin(ph)) <=
            1e-12 * std::max(rad, 1.0));
      CHECK(std::abs(y[2] - rad * std::cos(th)) <= 1e-12 * std::max(rad, 1.0));
    }
  }
}

TEST_CASE("sandwich maps") {
  // (w/2)(e3g - breve e3g) = sigma3 makes the minus sandwich gamma-free
  const BasisPack p5 = pack(0.5);
  CHECK(mat_approx((0.5 * p5.b.param.omega) * (p5.b.e3g - p5.tb.e3b), pauli3(),
                   1e-14));

  // coords with quadruple (1,0,0,0): Xi = identity, minus sandwich = e3
  const SpinorOperatorCoords unit{1, 0, 0, 0};
  const CMat2 xi = spinor_operator(unit, p5.b, p5.tb);
  const Multivector um = upsilon(KSVariant::MinusBranch, xi, p5.b, p5.tb);
  CHECK(mv_approx(um, Multivector::e3(), 1e-13));
  CHECK(grade_part(um, 0).max_abs() <= 1e-14);
  CHECK(grade_part(um, 2).max_abs() <= 1e-14);
  CHECK(grade_part(um, 3).max_abs() <= 1e-14);

  Rng r(107);
  for (int i = 0; i < 100; ++i) {
    const SpinorOperatorCoords c{r.range(-2, 2), r.range(-2, 2),
                                 r.range(-2, 2), r.range(-2, 2)};
    const double g = r.range(0.05, 0.95);
    const BasisPack bp = pack(g);
    const CMat2 x = spinor_operator(c, bp.b, bp.tb);
    const KSQuadruple q = quadruple_from_coords(c);
    const double scale = std::max(1.0, q.norm_sq());

    const Multivector mm = upsilon(KSVariant::MinusBranch, x, bp.b, bp.tb);
    CHECK(grade_part(mm, 0).max_abs() <= 1e-13 * scale);
    CHECK(grade_part(mm, 2).max_abs() <= 1e-13 * scale);
    CHECK(grade_part(mm, 3).max_abs() <= 1e-13 * scale);
    const auto xm = upsilon_coords(KSVariant::MinusBranch, mm, g);
    const auto wm = ks_map(KSVariant::MinusBranch, q);
    for (int k = 0; k < 3; ++k)
      CHECK(std::abs(xm[k] - wm[k]) <= 1e-12 * scale);

    const Multivector mp = upsilon(KSVariant::PlusBranch, x, bp.b, bp.tb);
    CHECK(grade_part(mp, 0).max_abs() <= 1e-13 * scale);
    CHECK(grade_part(mp, 1).max_abs() <= 1e-13 * scale);
    CHECK(grade_part(mp, 3).max_abs() <= 1e-13 * scale);
    const auto xp = upsilon_coords(KSVariant::PlusBranch, mp, g);
    const auto wp = ks_map(KSVariant::PlusBranch, q);
    for (int k = 0; k < 3; ++k)
      CHECK(std::abs(xp[k] - wp[k]) <= 1e-12 * scale);

    // minus sandwich ignores gamma; plus sandwich scales linearly with it
    const BasisPack bp2 = pack(g * 0.5);
    const CMat2 x2 = spinor_operator(c, bp2.b, bp2.tb);
    CHECK(mv_approx(upsilon(KSVariant::MinusBranch, x2, bp2.b, bp2.tb), mm,
                    1e-12));
    const Multivector mp2 = upsilon(KSVariant::PlusBranch, x2, bp2.b, bp2.tb);
    CHECK(mv_approx(2.0 * mp2, mp, 1e-11));
  }

  const BasisPack p0 = pack(0.0);
  const CMat2 x0 = spinor_operator(unit, p0.b, p0.tb);
  CHECK_THROWS_AS(upsilon(KSVariant::PlusBranch, x0, p0.b, p0.tb),
                  std::runtime_error);
}
