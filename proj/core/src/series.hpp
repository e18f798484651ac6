#pragma once

#include <vector>

#include "nijenhuis2d/rational.hpp"

// Truncated univariate power series; index i holds the coefficient of t^i.
namespace nijenhuis2d::detail {

using Series = std::vector<Rational>;

Series series_mul(const Series& a, const Series& b, std::size_t length);
// out += a * b, truncated to out.size().
void series_mul_add(const Series& a, const Series& b, Series& out);
// 1 / a; a[0] must be nonzero.
Series series_inverse(const Series& a, std::size_t length);
// a^(1/p) with a[0] == 1 and result[0] == 1.
Series series_root(const Series& a, unsigned p, std::size_t length);

}  // namespace nijenhuis2d::detail
