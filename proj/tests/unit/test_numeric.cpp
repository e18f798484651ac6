#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nijenhuis2d/discriminant.hpp"
#include "nijenhuis2d/errors.hpp"
#include "nijenhuis2d/numeric.hpp"
#include "nijenhuis2d/parser.hpp"
#include "oracle.hpp"

using namespace nijenhuis2d;

namespace {

OperatorField2 L(const char* a, const char* b, const char* c, const char* d) { return parse_operator({a, b, c, d}); }

GridSpec square(unsigned n) {
  GridSpec g;
  g.nx = n;
  g.ny = n;
  return g;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST(Numeric, GridValidation) {
  GridSpec g;
  EXPECT_NO_THROW(g.validate());
  g.nx = 1;
  EXPECT_THROW(g.validate(), InvalidGrid);
  g = GridSpec{};
  g.x1 = g.x0;
  EXPECT_THROW(g.validate(), InvalidGrid);
  g = GridSpec{};
  g.y0 = NAN;
  EXPECT_THROW(g.validate(), InvalidGrid);
}

TEST(Numeric, IdentityIsCoincidentEverywhere) {
  const auto field = eval_eigenfield(OperatorField2::identity(), square(11));
  for (const auto& n : field.nodes) {
    EXPECT_EQ(n.region, Region::Coincident);
    EXPECT_DOUBLE_EQ(n.lambda_plus, 1.0);
    EXPECT_DOUBLE_EQ(n.lambda_minus, 1.0);
  }
}

TEST(Numeric, ComplexRegionMatchesExactDiscriminantSign) {
  // L1- has disc x^2/4 - y^2.
  const auto op = L("x", "-2*y", "y/2", "0");
  const GridSpec grid = square(41);
  const auto field = eval_eigenfield(op, grid);
  const oracle::QPoly g = oracle::QPoly::mono(mpq_class(1, 4), 2, 0) - oracle::QPoly::mono(1, 0, 2);
  for (unsigned j = 0; j < grid.ny; ++j) {
    for (unsigned i = 0; i < grid.nx; ++i) {
      const int s = sgn(g.eval(oracle::grid_coordinate(-1, 1, i, grid.nx), oracle::grid_coordinate(-1, 1, j, grid.ny)));
      const Region expected = s > 0 ? Region::RealDistinct : s < 0 ? Region::Complex : Region::Coincident;
      EXPECT_EQ(field.at(i, j).region, expected) << i << "," << j;
    }
  }
}

TEST(Numeric, MaskedNodes) {
  const auto field = eval_eigenfield(L("1/x", "0", "0", "1"), square(5));
  EXPECT_EQ(field.at(2, 0).region, Region::Masked);
  EXPECT_TRUE(std::isnan(field.at(2, 0).lambda_plus));
  EXPECT_NE(field.at(0, 0).region, Region::Masked);
  GridSpec tiny;
  tiny.x0 = 0.0;
  tiny.x1 = 1e-300;
  tiny.nx = 2;
  tiny.ny = 2;
  EXPECT_THROW(eval_eigenfield(L("1/x^2", "0", "0", "1"), tiny), AllNodesMasked);
}

TEST(Numeric, LevelZeroPassesThroughOrigin) {
  const auto field = eval_eigenfield(L("x", "2*y", "y/2", "0"), square(201));
  const auto set = extract_levels(field, {0.0});
  bool hit = false;
  for (const auto& line : set.lines) {
    for (const auto& [x, y] : line.points) hit = hit || (std::abs(x) < 1e-9 && std::abs(y) < 1e-9);
  }
  EXPECT_TRUE(hit);
}

TEST(Numeric, ConstantFieldHasNoContours) {
  const auto field = eval_eigenfield(L("2", "0", "0", "2"), square(21));
  EXPECT_TRUE(extract_levels(field, {0.5, 3.0}).lines.empty());
  EXPECT_EQ(default_levels(field).size(), 1u);
}

TEST(Numeric, ContoursFollowClosedFormEigenvalue) {
  // L2+ has lambda_plus = x/2 + |y|.
  const GridSpec grid = square(101);
  const auto field = eval_eigenfield(L("x/2", "2*y", "y/2", "x/2"), grid);
  const auto set = extract_levels(field, {-0.25, 0.3, 0.9});
  std::size_t plus_lines = 0;
  for (const auto& line : set.lines) {
    if (line.branch != Branch::Plus) continue;
    ++plus_lines;
    for (const auto& [x, y] : line.points) EXPECT_NEAR(x / 2 + std::abs(y), line.level, 2 * grid.dx());
  }
  EXPECT_GT(plus_lines, 0u);
}

TEST(Numeric, DefaultLevelsSpanObservedRange) {
  const auto field = eval_eigenfield(L("x", "2*y", "y/2", "0"), square(51));
  const auto levels = default_levels(field, 21);
  ASSERT_EQ(levels.size(), 21u);
  double lo = INFINITY, hi = -INFINITY;
  for (const auto& n : field.nodes) {
    if (!n.real()) continue;
    lo = std::min(lo, n.lambda_minus);
    hi = std::max(hi, n.lambda_plus);
  }
  EXPECT_DOUBLE_EQ(levels.front(), lo);
  EXPECT_DOUBLE_EQ(levels.back(), hi);
}

TEST(Numeric, FiniteDifferenceResidual) {
  const GridSpec grid = square(101);
  EXPECT_LT(fd_torsion_residual(L("x", "2*y", "y/2", "0"), grid, 1e-4), 1e-6);
  EXPECT_LT(fd_torsion_residual(L("1", "2", "-3", "5"), grid, 1e-4), 1e-12);
  // Torsion (y - x, y - x): each component peaks at |y - x| = 1.96 on interior nodes.
  EXPECT_NEAR(fd_torsion_residual(L("y", "0", "0", "x"), grid, 1e-4), 3.92, 1e-6);
  // Entries with a pole on the grid stay finite away from the pole.
  EXPECT_LT(fd_torsion_residual(reconstruct_from_disc(parse_poly("y^2 + 2*x*y")).op, grid, 1e-4), 1e-5);
  EXPECT_THROW(fd_torsion_residual(L("1", "0", "0", "1"), square(2), 1e-4), SingularOnGrid);
}

TEST(Numeric, CsvLayout) {
  const auto field = eval_eigenfield(L("x", "2*y", "y/2", "0"), square(2));
  const std::string csv = to_csv(field);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "x,y,disc,region,lambda_plus,lambda_minus");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 4);
  EXPECT_NE(csv.find("-1,-1,1.25,real-distinct,"), std::string::npos);
  const auto complex = eval_eigenfield(L("0", "-1", "1", "0"), square(2));
  EXPECT_NE(to_csv(complex).find(",complex,,\n"), std::string::npos);
}

TEST(Numeric, SvgLayersAndDeterminism) {
  const auto field = eval_eigenfield(L("x", "-2*y", "y/2", "0"), square(31));
  const std::string empty = to_svg(field, ContourSet{});
  EXPECT_EQ(empty.rfind("<?xml", 0), 0u);
  EXPECT_NE(empty.find("id=\"complex-region\""), std::string::npos);
  EXPECT_EQ(empty.find("class=\"plus\""), std::string::npos);
  EXPECT_NE(empty.find("</svg>"), std::string::npos);

  const auto set = extract_levels(field, default_levels(field));
  SvgOptions options;
  options.title = "L1-";
  const std::string a = to_svg(field, set, options);
  EXPECT_EQ(a, to_svg(field, set, options));
  EXPECT_NE(a.find("<title>L1-</title>"), std::string::npos);

  const auto dir = std::filesystem::temp_directory_path();
  const std::string p1 = (dir / "nj_numeric_a.svg").string();
  const std::string p2 = (dir / "nj_numeric_b.svg").string();
  emit_svg(field, set, p1, options);
  emit_svg(field, set, p2, options);
  EXPECT_EQ(slurp(p1), slurp(p2));
  EXPECT_EQ(slurp(p1), a);
  std::filesystem::remove(p1);
  std::filesystem::remove(p2);
  EXPECT_THROW(emit_csv(field, "/nonexistent-dir/out.csv"), IoError);
}
