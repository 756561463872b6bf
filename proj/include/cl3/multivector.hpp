#pragma once
#include <array>

#include "cl3/cmat2.hpp"

namespace cl3 {

enum class InvolutionKind { GradeInversion, Reversion, CliffordConjugation };

// Element of the real Clifford algebra Cl3(R) over the basis
// {1, e1, e2, e3, e12, e13, e23, e123}, canonical coefficient order
// (u0, u1, u2, u3, u12, u13, u23, u123).  e31 is stored as -e13.
struct Multivector {
  double u0{}, u1{}, u2{}, u3{}, u12{}, u13{}, u23{}, u123{};

  static Multivector scalar(double s) { return {s, 0, 0, 0, 0, 0, 0, 0}; }
  static Multivector e1() { return {0, 1, 0, 0, 0, 0, 0, 0}; }
  static Multivector e2() { return {0, 0, 1, 0, 0, 0, 0, 0}; }
  static Multivector e3() { return {0, 0, 0, 1, 0, 0, 0, 0}; }
  static Multivector e12() { return {0, 0, 0, 0, 1, 0, 0, 0}; }
  static Multivector e13() { return {0, 0, 0, 0, 0, 1, 0, 0}; }
  static Multivector e23() { return {0, 0, 0, 0, 0, 0, 1, 0}; }
  static Multivector e123() { return {0, 0, 0, 0, 0, 0, 0, 1}; }

  std::array<double, 8> coeffs() const {
    return {u0, u1, u2, u3, u12, u13, u23, u123};
  }

  Multivector operator+(const Multivector& o) const {
    return {u0 + o.u0,   u1 + o.u1,   u2 + o.u2,   u3 + o.u3,
            u12 + o.u12, u13 + o.u13, u23 + o.u23, u123 + o.u123};
  }
  Multivector operator-(const Multivector& o) const {
    return {u0 - o.u0,   u1 - o.u1,   u2 - o.u2,   u3 - o.u3,
            u12 - o.u12, u13 - o.u13, u23 - o.u23, u123 - o.u123};
  }
  Multivector operator*(double s) const {
    return {s * u0, s * u1, s * u2, s * u3, s * u12, s * u13, s * u23, s * u123};
  }
  Multivector operator-() const { return *this * -1.0; }

  double max_abs() const;
};

inline Multivector operator*(double s, const Multivector& u) { return u * s; }

// Coefficient-space geometric product (the matrix route is the oracle).
Multivector geometric_product(const Multivector& u, const Multivector& v);

// Linear bijection onto 2x2 complex matrices with e_i -> sigma_i.
CMat2 to_matrix(const Multivector& u);
Multivector from_matrix(const CMat2& m);

// Grade-sign involutions: grade inversion flips grades 1,3; reversion flips
// 2,3; Clifford conjugation flips 1,2.
Multivector involution(const Multivector& u, InvolutionKind kind);

// Matrix form of the same involution, applied directly to a 2x2 matrix.
CMat2 involution_matrix(const CMat2& m, InvolutionKind kind);

// Projection onto grade k in {0,1,2,3}; throws std::invalid_argument otherwise.
Multivector grade_part(const Multivector& u, int k);

// Basis flip: 1 -> e13, e13 -> -1, e1 -> -e3, e3 -> e1, e2 -> e123,
// e123 -> -e2, e12 -> -e23, e23 -> e12.  Applied twice it negates.
Multivector basis_flip(const Multivector& u);

// Matrix form of the basis flip.
CMat2 basis_flip_matrix(const CMat2& m);

}  // namespace cl3
