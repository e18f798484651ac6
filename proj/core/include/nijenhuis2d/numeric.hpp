#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nijenhuis2d/operator.hpp"

namespace nijenhuis2d {

// Uniform node grid over [x0, x1] x [y0, y1], nx by ny nodes including the
// boundary.
struct GridSpec {
  double x0 = -1.0;
  double x1 = 1.0;
  double y0 = -1.0;
  double y1 = 1.0;
  unsigned nx = 201;
  unsigned ny = 201;

  // Throws InvalidGrid.
  void validate() const;
  double x(unsigned i) const { return x0 + (x1 - x0) * static_cast<double>(i) / (nx - 1); }
  double y(unsigned j) const { return y0 + (y1 - y0) * static_cast<double>(j) / (ny - 1); }
  double dx() const { return (x1 - x0) / (nx - 1); }
  double dy() const { return (y1 - y0) / (ny - 1); }
};

enum class Region { RealDistinct, Complex, Coincident, Masked };
std::string to_string(Region region);

struct EigenNode {
  double x = 0.0;
  double y = 0.0;
  double trace = 0.0;
  double det = 0.0;
  double disc = 0.0;
  Region region = Region::Masked;
  // NaN in the complex region and at masked nodes.
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;

  bool real() const noexcept { return region == Region::RealDistinct || region == Region::Coincident; }
};

// Nodes in row-major order: index j * nx + i.
struct EigenField {
  GridSpec grid;
  std::vector<EigenNode> nodes;

  const EigenNode& at(unsigned i, unsigned j) const { return nodes[static_cast<std::size_t>(j) * grid.nx + i]; }
};

// |disc| <= kCoincidentBand * (1 + trace^2/4 + |det|) counts as coincident.
inline constexpr double kCoincidentBand = 1e-12;

// Nodes where an entry has a zero or non-finite value are masked. Throws
// AllNodesMasked when nothing is left.
EigenField eval_eigenfield(const OperatorField2& op, const GridSpec& grid);

enum class Branch { Plus, Minus };
std::string to_string(Branch branch);

struct Polyline {
  Branch branch = Branch::Plus;
  double level = 0.0;
  bool closed = false;
  std::vector<std::pair<double, double>> points;
};

struct ContourSet {
  std::vector<Polyline> lines;
};

// Marching squares on lambda_plus and lambda_minus. A node counts as above the
// level when its value is strictly greater, so level sets that only touch the
// grid (minima) still produce lines through those nodes. Cells with a complex
// or masked corner are skipped; saddles are split by the cell-center average.
ContourSet extract_levels(const EigenField& field, const std::vector<double>& levels);

// `count` levels evenly spaced from the smallest lambda_minus to the largest
// lambda_plus; a single level when that range is a point.
std::vector<double> default_levels(const EigenField& field, unsigned count = 21);

// max |n1| + max |n2| over interior nodes, with derivatives by central
// differences of step h. Nodes within `margin` of a zero of an entry
// denominator (estimated as |den| / |grad den|) are skipped. Throws
// SingularOnGrid when no interior node is left.
double fd_torsion_residual(const OperatorField2& op, const GridSpec& grid, double h, double margin = 1e-2);

// Header x,y,disc,region,lambda_plus,lambda_minus; one row per node in
// row-major order, values with 17 significant digits, empty where undefined.
std::string to_csv(const EigenField& field);

struct SvgOptions {
  unsigned width = 640;
  unsigned height = 640;
  std::string title;
};

// Complex region as shaded rectangles (one per run of complex nodes in a row),
// then one path per polyline in ContourSet order.
std::string to_svg(const EigenField& field, const ContourSet& contours, const SvgOptions& options = {});

// Write the text to `path`; throw IoError on failure.
void emit_csv(const EigenField& field, const std::string& path);
void emit_svg(const EigenField& field, const ContourSet& contours, const std::string& path,
              const SvgOptions& options = {});

}  // namespace nijenhuis2d
