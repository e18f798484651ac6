#pragma once

#include <array>
#include <string>

#include "nijenhuis2d/rational_function.hpp"

namespace nijenhuis2d {

// 2x2 field of endomorphisms [[a, b], [c, d]] in coordinates (x, y).
struct OperatorField2 {
  RationalFunction2 a;
  RationalFunction2 b;
  RationalFunction2 c;
  RationalFunction2 d;

  static OperatorField2 identity();

  RationalFunction2 trace() const { return a + d; }
  RationalFunction2 det() const { return a * d - b * c; }
  // Row-major index 0..3.
  const RationalFunction2& entry(int index) const;
  bool is_polynomial() const noexcept;

  friend bool operator==(const OperatorField2&, const OperatorField2&) = default;
};

// The two independent torsion components of a 2x2 operator:
//   n1 = a_y (a - d) + (bc)_y - (a + d)_x b
//   n2 = d_x (a - d) - (bc)_x + (a + d)_y c
struct Torsion {
  RationalFunction2 n1;
  RationalFunction2 n2;
  bool is_zero() const noexcept { return n1.is_zero() && n2.is_zero(); }
};

Torsion torsion(const OperatorField2& op);
bool is_nijenhuis(const OperatorField2& op);

// Jacobian determinant of (trace, det) with respect to (x, y).
RationalFunction2 differential_degeneracy(const OperatorField2& op);

enum class AlgebraicType { RealDiagonalDistinct, ComplexPair, ScalarMultipleOfIdentity, JordanBlock };

// Exact pointwise type; throws UndefinedAtPoint when an entry has a pole there.
AlgebraicType algebraic_type_at(const OperatorField2& op, const Rational& x, const Rational& y);
std::string to_string(AlgebraicType type);

std::array<std::string, 4> render_entries(const OperatorField2& op);
// "[[a, b], [c, d]]"
std::string render(const OperatorField2& op);

}  // namespace nijenhuis2d
