#include "nijenhuis2d/operator.hpp"

#include <stdexcept>

namespace nijenhuis2d {

OperatorField2 OperatorField2::identity() { return {1, 0, 0, 1}; }

const RationalFunction2& OperatorField2::entry(int index) const {
  switch (index) {
    case 0: return a;
    case 1: return b;
    case 2: return c;
    case 3: return d;
    default: throw std::out_of_range("operator entry index");
  }
}

bool OperatorField2::is_polynomial() const noexcept {
  return a.is_polynomial() && b.is_polynomial() && c.is_polynomial() && d.is_polynomial();
}

Torsion torsion(const OperatorField2& op) {
  const RationalFunction2 tr = op.trace();
  const RationalFunction2 bc = op.b * op.c;
  const RationalFunction2 diff = op.a - op.d;
  Torsion t;
  t.n1 = partial_y(op.a) * diff + partial_y(bc) - partial_x(tr) * op.b;
  t.n2 = partial_x(op.d) * diff - partial_x(bc) + partial_y(tr) * op.c;
  return t;
}

bool is_nijenhuis(const OperatorField2& op) { return torsion(op).is_zero(); }

RationalFunction2 differential_degeneracy(const OperatorField2& op) {
  const RationalFunction2 tr = op.trace();
  const RationalFunction2 dt = op.det();
  return partial_x(tr) * partial_y(dt) - partial_y(tr) * partial_x(dt);
}

AlgebraicType algebraic_type_at(const OperatorField2& op, const Rational& x, const Rational& y) {
  const Rational a = op.a.evaluate(x, y);
  const Rational b = op.b.evaluate(x, y);
  const Rational c = op.c.evaluate(x, y);
  const Rational d = op.d.evaluate(x, y);
  const Rational half_diff = (a - d) / Rational(2);
  const Rational disc = half_diff * half_diff + b * c;
  if (disc.sign() > 0) return AlgebraicType::RealDiagonalDistinct;
  if (disc.sign() < 0) return AlgebraicType::ComplexPair;
  if (b.is_zero() && c.is_zero() && a == d) return AlgebraicType::ScalarMultipleOfIdentity;
  return AlgebraicType::JordanBlock;
}

std::string to_string(AlgebraicType type) {
  switch (type) {
    case AlgebraicType::RealDiagonalDistinct: return "real-distinct";
    case AlgebraicType::ComplexPair: return "complex-pair";
    case AlgebraicType::ScalarMultipleOfIdentity: return "scalar";
    case AlgebraicType::JordanBlock: return "jordan-block";
  }
  return "unknown";
}

std::array<std::string, 4> render_entries(const OperatorField2& op) {
  return {render(op.a), render(op.b), render(op.c), render(op.d)};
}

std::string render(const OperatorField2& op) {
  const auto e = render_entries(op);
  return "[[" + e[0] + ", " + e[1] + "], [" + e[2] + ", " + e[3] + "]]";
}

}  // namespace nijenhuis2d
