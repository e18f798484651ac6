#pragma once

#include <string>
#include <vector>

#include "nijenhuis2d/classify.hpp"
#include "nijenhuis2d/discriminant.hpp"
#include "nijenhuis2d/jets.hpp"
#include "nijenhuis2d/numeric.hpp"
#include "nijenhuis2d/operator.hpp"

namespace nijenhuis2d {

// Structured reports. Expressions are canonical renderings that parse back
// with parse_poly / parse_rational; jets are given as {polynomial, order}.
// JSON documents carry "schema": 1 and a "kind" tag; text is "key: value"
// lines. Both are deterministic.
enum class Format { Text, Json };

std::string report(const ClassificationResult& result, Format format);
std::string report(const AdmissibilityVerdict& verdict, Format format);
// Operator entries plus the polynomial flag; `source` names the invariant
// ("disc" or "det") and `input` is its canonical text.
std::string report(const Reconstruction& r, const std::string& source, const BivariatePolynomial& input,
                   Format format);
std::string report(const OperatorField2& op, const Torsion& t, Format format);
std::string report(const std::vector<InverseQuadraticCheck>& checks, Format format);
// det = f(x): the residual (x - f') f' - f decides the whole family.
std::string report_y_independent_det(const BivariatePolynomial& f, const BivariatePolynomial& residual,
                                     Format format);
// Node counts per region, polyline count and the files written.
std::string report(const EigenField& field, const ContourSet& contours, const std::vector<std::string>& written,
                   Format format);

}  // namespace nijenhuis2d
