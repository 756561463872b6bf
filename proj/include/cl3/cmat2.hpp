#pragma once
#include <cmath>
#include <complex>

namespace cl3 {

using cplx = std::complex<double>;

// Two complex amplitudes (psi1, psi2); column-vector state.
struct Spinor {
  cplx c1{0.0, 0.0};
  cplx c2{0.0, 0.0};

  Spinor operator+(const Spinor& o) const { return {c1 + o.c1, c2 + o.c2}; }
  Spinor operator-(const Spinor& o) const { return {c1 - o.c1, c2 - o.c2}; }
  Spinor operator*(cplx s) const { return {s * c1, s * c2}; }
  Spinor operator-() const { return {-c1, -c2}; }
};

inline Spinor operator*(cplx s, const Spinor& v) { return v * s; }

// Conventional inner product <a|b>, antilinear in the first slot.
inline cplx inner(const Spinor& a, const Spinor& b) {
  return std::conj(a.c1) * b.c1 + std::conj(a.c2) * b.c2;
}

inline double norm(const Spinor& a) {
  return std::sqrt(std::norm(a.c1) + std::norm(a.c2));
}

// 2x2 complex matrix, the faithful representation carrier for Cl3 elements.
struct CMat2 {
  cplx a11{0.0, 0.0}, a12{0.0, 0.0}, a21{0.0, 0.0}, a22{0.0, 0.0};

  static CMat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static CMat2 zero() { return {}; }

  CMat2 operator+(const CMat2& o) const {
    return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22};
  }
  CMat2 operator-(const CMat2& o) const {
    return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22};
  }
  CMat2 operator-() const { return {-a11, -a12, -a21, -a22}; }
  CMat2 operator*(const CMat2& o) const {
    return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
            a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
  }
  CMat2 operator*(cplx s) const { return {s * a11, s * a12, s * a21, s * a22}; }

  Spinor operator*(const Spinor& v) const {
    return {a11 * v.c1 + a12 * v.c2, a21 * v.c1 + a22 * v.c2};
  }

  CMat2 adjoint() const {
    return {std::conj(a11), std::conj(a21), std::conj(a12), std::conj(a22)};
  }
  CMat2 conjugate() const {
    return {std::conj(a11), std::conj(a12), std::conj(a21), std::conj(a22)};
  }
  CMat2 transpose() const { return {a11, a21, a12, a22}; }

  cplx trace() const { return a11 + a22; }
  cplx det() const { return a11 * a22 - a12 * a21; }

  CMat2 inverse() const {
    const cplx d = det();
    return {a22 / d, -a12 / d, -a21 / d, a11 / d};
  }

  double max_abs() const {
    return std::max(std::max(std::abs(a11), std::abs(a12)),
                    std::max(std::abs(a21), std::abs(a22)));
  }

  double frobenius() const {
    return std::sqrt(std::norm(a11) + std::norm(a12) + std::norm(a21) +
                     std::norm(a22));
  }
};

inline CMat2 operator*(cplx s, const CMat2& m) { return m * s; }
inline CMat2 operator*(double s, const CMat2& m) { return m * cplx(s, 0.0); }

inline CMat2 pauli1() { return {0.0, 1.0, 1.0, 0.0}; }
inline CMat2 pauli2() { return {0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0}; }
inline CMat2 pauli3() { return {1.0, 0.0, 0.0, -1.0}; }

// Outer product |a><b|.
inline CMat2 outer(const Spinor& a, const Spinor& b) {
  return {a.c1 * std::conj(b.c1), a.c1 * std::conj(b.c2),
          a.c2 * std::conj(b.c1), a.c2 * std::conj(b.c2)};
}

// Exact 2x2 exponential through the traceless split m = alpha*I + n with
// n^2 = delta^2 * I:  exp(m) = e^alpha (cosh(delta) I + sinh(delta)/delta n).
inline CMat2 expm(const CMat2& m) {
  const cplx alpha = 0.5 * m.trace();
  CMat2 n = m;
  n.a11 -= alpha;
  n.a22 -= alpha;
  const cplx delta2 = n.a11 * n.a11 + n.a12 * n.a21;
  const cplx delta = std::sqrt(delta2);
  cplx ch, shs;
  if (std::abs(delta) < 1e-6) {
    // series fallback; keeps sinh(delta)/delta finite at delta -> 0
    ch = 1.0 + delta2 / 2.0 + delta2 * delta2 / 24.0;
    shs = 1.0 + delta2 / 6.0 + delta2 * delta2 / 120.0;
  } else {
    ch = std::cosh(delta);
    shs = std::sinh(delta) / delta;
  }
  CMat2 r = shs * n;
  r.a11 += ch;
  r.a22 += ch;
  return std::exp(alpha) * r;
}

}  // namespace cl3
