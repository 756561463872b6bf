#include "cl3/multivector.hpp"

#include <algorithm>
#include <stdexcept>

namespace cl3 {

double Multivector::max_abs() const {
  double m = 0.0;
  for (double c : coeffs()) m = std::max(m, std::abs(c));
  return m;
}

// Structure constants of Cl3 with e_i^2 = 1, e_i e_j = -e_j e_i.
Multivector geometric_product(const Multivector& a, const Multivector& b) {
  Multivector w;
  w.u0 = a.u0 * b.u0 + a.u1 * b.u1 + a.u2 * b.u2 + a.u3 * b.u3 -
         a.u12 * b.u12 - a.u13 * b.u13 - a.u23 * b.u23 - a.u123 * b.u123;
  w.u1 = a.u0 * b.u1 + a.u1 * b.u0 - a.u2 * b.u12 + a.u12 * b.u2 -
         a.u3 * b.u13 + a.u13 * b.u3 - a.u23 * b.u123 - a.u123 * b.u23;
  w.u2 = a.u0 * b.u2 + a.u2 * b.u0 + a.u1 * b.u12 - a.u12 * b.u1 -
         a.u3 * b.u23 + a.u23 * b.u3 + a.u13 * b.u123 + a.u123 * b.u13;
  w.u3 = a.u0 * b.u3 + a.u3 * b.u0 + a.u1 * b.u13 - a.u13 * b.u1 +
         a.u2 * b.u23 - a.u23 * b.u2 - a.u12 * b.u123 - a.u123 * b.u12;
  w.u12 = a.u0 * b.u12 + a.u12 * b.u0 + a.u1 * b.u2 - a.u2 * b.u1 +
          a.u3 * b.u123 + a.u123 * b.u3 - a.u13 * b.u23 + a.u23 * b.u13;
  w.u13 = a.u0 * b.u13 + a.u13 * b.u0 + a.u1 * b.u3 - a.u3 * b.u1 -
          a.u2 * b.u123 - a.u123 * b.u2 + a.u12 * b.u23 - a.u23 * b.u12;
  w.u23 = a.u0 * b.u23 + a.u23 * b.u0 + a.u2 * b.u3 - a.u3 * b.u2 +
          a.u1 * b.u123 + a.u123 * b.u1 - a.u12 * b.u13 + a.u13 * b.u12;
  w.u123 = a.u0 * b.u123 + a.u123 * b.u0 + a.u1 * b.u23 + a.u23 * b.u1 -
           a.u2 * b.u13 - a.u13 * b.u2 + a.u3 * b.u12 + a.u12 * b.u3;
  return w;
}

CMat2 to_matrix(const Multivector& u) {
  return {cplx(u.u0 + u.u3, u.u12 + u.u123), cplx(u.u1 - u.u13, -u.u2 + u.u23),
          cplx(u.u1 + u.u13, u.u2 + u.u23), cplx(u.u0 - u.u3, -u.u12 + u.u123)};
}

Multivector from_matrix(const CMat2& m) {
  Multivector u;
  u.u0 = 0.5 * (m.a11.real() + m.a22.real());
  u.u3 = 0.5 * (m.a11.real() - m.a22.real());
  u.u12 = 0.5 * (m.a11.imag() - m.a22.imag());
  u.u123 = 0.5 * (m.a11.imag() + m.a22.imag());
  u.u1 = 0.5 * (m.a12.real() + m.a21.real());
  u.u13 = 0.5 * (m.a21.real() - m.a12.real());
  u.u2 = 0.5 * (m.a21.imag() - m.a12.imag());
  u.u23 = 0.5 * (m.a12.imag() + m.a21.imag());
  return u;
}

Multivector involution(const Multivector& u, InvolutionKind kind) {
  switch (kind) {
    case InvolutionKind::GradeInversion:
      return {u.u0, -u.u1, -u.u2, -u.u3, u.u12, u.u13, u.u23, -u.u123};
    case InvolutionKind::Reversion:
      return {u.u0, u.u1, u.u2, u.u3, -u.u12, -u.u13, -u.u23, -u.u123};
    case InvolutionKind::CliffordConjugation:
      return {u.u0, -u.u1, -u.u2, -u.u3, -u.u12, -u.u13, -u.u23, u.u123};
  }
  throw std::invalid_argument("unknown involution kind");
}

CMat2 involution_matrix(const CMat2& m, InvolutionKind kind) {
  switch (kind) {
    case InvolutionKind::GradeInversion:
      return {std::conj(m.a22), -std::conj(m.a21), -std::conj(m.a12),
              std::conj(m.a11)};
    case InvolutionKind::Reversion:
      return m.adjoint();
    case InvolutionKind::CliffordConjugation:
      return {m.a22, -m.a12, -m.a21, m.a11};
  }
  throw std::invalid_argument("unknown involution kind");
}

Multivector grade_part(const Multivector& u, int k) {
  switch (k) {
    case 0:
      return {u.u0, 0, 0, 0, 0, 0, 0, 0};
    case 1:
      return {0, u.u1, u.u2, u.u3, 0, 0, 0, 0};
    case 2:
      return {0, 0, 0, 0, u.u12, u.u13, u.u23, 0};
    case 3:
      return {0, 0, 0, 0, 0, 0, 0, u.u123};
    default:
      throw std::invalid_argument("grade_part: k must be in 0..3");
  }
}

Multivector basis_flip(const Multivector& u) {
  return {-u.u13, u.u3, -u.u123, -u.u1, u.u23, u.u0, -u.u12, u.u2};
}

CMat2 basis_flip_matrix(const CMat2& m) {
  return {-std::conj(m.a21), -std::conj(m.a22), std::conj(m.a11),
          std::conj(m.a12)};
}

}  // namespace cl3
