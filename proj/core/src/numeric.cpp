#include "nijenhuis2d/numeric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "nijenhuis2d/errors.hpp"

namespace nijenhuis2d {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string format(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path);
  out << text;
  out.flush();
  if (!out) throw IoError(path);
}

// Entries of an operator evaluated in double precision.
struct EntryValues {
  std::array<double, 4> v{};
  bool ok = false;
};

class NumericOperator {
 public:
  explicit NumericOperator(const OperatorField2& op) {
    for (int k = 0; k < 4; ++k) {
      num_[k] = op.entry(k).numerator();
      den_[k] = op.entry(k).denominator();
    }
  }

  EntryValues at(double x, double y) const {
    EntryValues out;
    for (int k = 0; k < 4; ++k) {
      const double d = den_[k].evaluate(x, y);
      if (d == 0.0 || !std::isfinite(d)) return out;
      out.v[k] = num_[k].evaluate(x, y) / d;
      if (!std::isfinite(out.v[k])) return out;
    }
    out.ok = true;
    return out;
  }

  const BivariatePolynomial& den(int k) const { return den_[k]; }

 private:
  std::array<BivariatePolynomial, 4> num_;
  std::array<BivariatePolynomial, 4> den_;
};

}  // namespace

void GridSpec::validate() const {
  if (!std::isfinite(x0) || !std::isfinite(x1) || !std::isfinite(y0) || !std::isfinite(y1)) {
    throw InvalidGrid("ranges must be finite");
  }
  if (!(x0 < x1)) throw InvalidGrid("x0 < x1 required");
  if (!(y0 < y1)) throw InvalidGrid("y0 < y1 required");
  if (nx < 2 || ny < 2) throw InvalidGrid("at least 2 nodes per axis");
}

std::string to_string(Region region) {
  switch (region) {
    case Region::RealDistinct: return "real-distinct";
    case Region::Complex: return "complex";
    case Region::Coincident: return "coincident";
    case Region::Masked: return "masked";
  }
  return "unknown";
}

std::string to_string(Branch branch) { return branch == Branch::Plus ? "plus" : "minus"; }

EigenField eval_eigenfield(const OperatorField2& op, const GridSpec& grid) {
  grid.validate();
  const NumericOperator num(op);
  EigenField field;
  field.grid = grid;
  field.nodes.resize(static_cast<std::size_t>(grid.nx) * grid.ny);
  bool any = false;
  for (unsigned j = 0; j < grid.ny; ++j) {
    for (unsigned i = 0; i < grid.nx; ++i) {
      EigenNode& n = field.nodes[static_cast<std::size_t>(j) * grid.nx + i];
      n.x = grid.x(i);
      n.y = grid.y(j);
      const EntryValues e = num.at(n.x, n.y);
      if (!e.ok) {
        n.region = Region::Masked;
        n.trace = n.det = n.disc = kNaN;
        n.lambda_plus = n.lambda_minus = kNaN;
        continue;
      }
      any = true;
      const auto& [a, b, c, d] = e.v;
      n.trace = a + d;
      n.det = a * d - b * c;
      n.disc = n.trace * n.trace / 4.0 - n.det;
      const double band = kCoincidentBand * (1.0 + n.trace * n.trace / 4.0 + std::abs(n.det));
      const double half = n.trace / 2.0;
      if (n.disc > band) {
        n.region = Region::RealDistinct;
        const double s = std::sqrt(n.disc);
        n.lambda_plus = half + s;
        n.lambda_minus = half - s;
      } else if (n.disc < -band) {
        n.region = Region::Complex;
        n.lambda_plus = n.lambda_minus = kNaN;
      } else {
        n.region = Region::Coincident;
        n.lambda_plus = n.lambda_minus = half;
      }
    }
  }
  if (!any) throw AllNodesMasked();
  return field;
}

namespace {

struct Segment {
  std::size_t edge[2];
  bool visited = false;
};

// Contours of one scalar field at one level. Edge ids: 2 * node for the
// horizontal edge to the right of a node, 2 * node + 1 for the vertical edge
// above it.
class LevelTracer {
 public:
  LevelTracer(const EigenField& field, Branch branch, double level)
      : field_(field), branch_(branch), level_(level) {}

  void run(std::vector<Polyline>& out) {
    const GridSpec& g = field_.grid;
    incident_.assign(2 * static_cast<std::size_t>(g.nx) * g.ny, {kNone, kNone});
    for (unsigned j = 0; j + 1 < g.ny; ++j) {
      for (unsigned i = 0; i + 1 < g.nx; ++i) cell(i, j);
    }
    for (std::size_t s = 0; s < segments_.size(); ++s) {
      for (std::size_t e : segments_[s].edge) {
        if (!segments_[s].visited && degree(e) == 1) out.push_back(trace_from(s, e, false));
      }
    }
    for (std::size_t s = 0; s < segments_.size(); ++s) {
      if (!segments_[s].visited) out.push_back(trace_from(s, segments_[s].edge[0], true));
    }
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  double value(unsigned i, unsigned j) const {
    const EigenNode& n = field_.at(i, j);
    if (!n.real()) return kNaN;
    return branch_ == Branch::Plus ? n.lambda_plus : n.lambda_minus;
  }

  std::size_t node(unsigned i, unsigned j) const { return static_cast<std::size_t>(j) * field_.grid.nx + i; }

  void cell(unsigned i, unsigned j) {
    // Corners counterclockwise from the lower left.
    const double v[4] = {value(i, j), value(i + 1, j), value(i + 1, j + 1), value(i, j + 1)};
    for (double c : v) {
      if (std::isnan(c)) return;
    }
    bool above[4];
    for (int k = 0; k < 4; ++k) above[k] = v[k] > level_;
    // Edges: bottom, right, top, left.
    const std::size_t edges[4] = {2 * node(i, j), 2 * node(i + 1, j) + 1, 2 * node(i, j + 1), 2 * node(i, j) + 1};
    std::vector<int> crossing;
    for (int k = 0; k < 4; ++k) {
      if (above[k] != above[(k + 1) % 4]) crossing.push_back(k);
    }
    if (crossing.size() == 2) {
      add(edges[crossing[0]], edges[crossing[1]]);
    } else if (crossing.size() == 4) {
      const bool center = (v[0] + v[1] + v[2] + v[3]) / 4.0 > level_;
      if (center == above[0]) {
        add(edges[0], edges[1]);
        add(edges[2], edges[3]);
      } else {
        add(edges[3], edges[0]);
        add(edges[1], edges[2]);
      }
    }
  }

  void add(std::size_t e0, std::size_t e1) {
    const std::size_t s = segments_.size();
    segments_.push_back({{e0, e1}});
    for (std::size_t e : {e0, e1}) {
      auto& slot = incident_[e];
      (slot[0] == kNone ? slot[0] : slot[1]) = s;
    }
  }

  int degree(std::size_t e) const { return (incident_[e][0] != kNone) + (incident_[e][1] != kNone); }

  std::pair<double, double> point(std::size_t e) const {
    const GridSpec& g = field_.grid;
    const std::size_t n = e / 2;
    const unsigned i = static_cast<unsigned>(n % g.nx);
    const unsigned j = static_cast<unsigned>(n / g.nx);
    const bool vertical = e % 2 == 1;
    const unsigned i1 = vertical ? i : i + 1;
    const unsigned j1 = vertical ? j + 1 : j;
    const double va = value(i, j);
    const double vb = value(i1, j1);
    const double t = (level_ - va) / (vb - va);
    return {g.x(i) + t * (g.x(i1) - g.x(i)), g.y(j) + t * (g.y(j1) - g.y(j))};
  }

  Polyline trace_from(std::size_t s, std::size_t entry, bool closed) {
    Polyline line;
    line.branch = branch_;
    line.level = level_;
    line.closed = closed;
    line.points.push_back(point(entry));
    std::size_t e = entry;
    while (s != kNone && !segments_[s].visited) {
      segments_[s].visited = true;
      const std::size_t next = segments_[s].edge[0] == e ? segments_[s].edge[1] : segments_[s].edge[0];
      e = next;
      if (closed && e == entry) break;
      line.points.push_back(point(e));
      const auto& slot = incident_[e];
      s = slot[0] == s ? slot[1] : slot[0];
    }
    return line;
  }

  const EigenField& field_;
  Branch branch_;
  double level_;
  std::vector<Segment> segments_;
  std::vector<std::array<std::size_t, 2>> incident_;
};

}  // namespace

ContourSet extract_levels(const EigenField& field, const std::vector<double>& levels) {
  ContourSet out;
  for (double level : levels) {
    if (!std::isfinite(level)) continue;
    for (Branch b : {Branch::Plus, Branch::Minus}) LevelTracer(field, b, level).run(out.lines);
  }
  return out;
}

std::vector<double> default_levels(const EigenField& field, unsigned count) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& n : field.nodes) {
    if (!n.real()) continue;
    lo = std::min(lo, n.lambda_minus);
    hi = std::max(hi, n.lambda_plus);
  }
  if (count == 0 || !(lo <= hi)) return {};
  if (count == 1 || lo == hi) return {(lo + hi) / 2.0};
  std::vector<double> levels(count);
  for (unsigned k = 0; k < count; ++k) levels[k] = lo + (hi - lo) * static_cast<double>(k) / (count - 1);
  return levels;
}

double fd_torsion_residual(const OperatorField2& op, const GridSpec& grid, double h, double margin) {
  grid.validate();
  if (!(h > 0.0)) throw InvalidGrid("finite-difference step must be positive");
  const NumericOperator num(op);
  struct DenominatorCheck {
    BivariatePolynomial den;
    BivariatePolynomial dx;
    BivariatePolynomial dy;
  };
  std::vector<DenominatorCheck> dens;
  for (int k = 0; k < 4; ++k) {
    const BivariatePolynomial& d = num.den(k);
    if (!d.is_constant()) dens.push_back({d, partial_x(d), partial_y(d)});
  }
  auto near_pole = [&](double x, double y) {
    for (const auto& c : dens) {
      const double v = std::abs(c.den.evaluate(x, y));
      const double g = std::hypot(c.dx.evaluate(x, y), c.dy.evaluate(x, y));
      if (v <= margin * g || v == 0.0) return true;
    }
    return false;
  };
  double max1 = 0.0;
  double max2 = 0.0;
  bool any = false;
  for (unsigned j = 1; j + 1 < grid.ny; ++j) {
    for (unsigned i = 1; i + 1 < grid.nx; ++i) {
      const double x = grid.x(i);
      const double y = grid.y(j);
      if (near_pole(x, y)) continue;
      const EntryValues c = num.at(x, y);
      const EntryValues xp = num.at(x + h, y);
      const EntryValues xm = num.at(x - h, y);
      const EntryValues yp = num.at(x, y + h);
      const EntryValues ym = num.at(x, y - h);
      if (!c.ok || !xp.ok || !xm.ok || !yp.ok || !ym.ok) continue;
      auto ddx = [&](auto f) { return (f(xp.v) - f(xm.v)) / (2.0 * h); };
      auto ddy = [&](auto f) { return (f(yp.v) - f(ym.v)) / (2.0 * h); };
      auto ea = [](const std::array<double, 4>& v) { return v[0]; };
      auto ed = [](const std::array<double, 4>& v) { return v[3]; };
      auto bc = [](const std::array<double, 4>& v) { return v[1] * v[2]; };
      auto tr = [](const std::array<double, 4>& v) { return v[0] + v[3]; };
      const auto& [a, b, cc, d] = c.v;
      const double n1 = ddy(ea) * (a - d) + ddy(bc) - ddx(tr) * b;
      const double n2 = ddx(ed) * (a - d) - ddx(bc) + ddy(tr) * cc;
      max1 = std::max(max1, std::abs(n1));
      max2 = std::max(max2, std::abs(n2));
      any = true;
    }
  }
  if (!any) throw SingularOnGrid();
  return max1 + max2;
}

std::string to_csv(const EigenField& field) {
  std::string out = "x,y,disc,region,lambda_plus,lambda_minus\n";
  auto cell = [](double v) { return std::isfinite(v) ? format("%.17g", v) : std::string(); };
  for (const auto& n : field.nodes) {
    out += format("%.17g", n.x);
    out += ',';
    out += format("%.17g", n.y);
    out += ',';
    out += cell(n.disc);
    out += ',';
    out += to_string(n.region);
    out += ',';
    out += cell(n.lambda_plus);
    out += ',';
    out += cell(n.lambda_minus);
    out += '\n';
  }
  return out;
}

namespace {

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// One rectangle per maximal run of nodes with the given region in a grid row,
// each node covering half a cell around it.
std::string region_path(const EigenField& field, Region region, double w, double h) {
  const GridSpec& g = field.grid;
  auto sx = [&](double x) { return format("%.3f", (x - g.x0) / (g.x1 - g.x0) * w); };
  auto sy = [&](double y) { return format("%.3f", (g.y1 - y) / (g.y1 - g.y0) * h); };
  std::string d;
  for (unsigned j = 0; j < g.ny; ++j) {
    unsigned i = 0;
    while (i < g.nx) {
      if (field.at(i, j).region != region) {
        ++i;
        continue;
      }
      unsigned k = i;
      while (k + 1 < g.nx && field.at(k + 1, j).region == region) ++k;
      const double xa = std::max(g.x0, g.x(i) - g.dx() / 2);
      const double xb = std::min(g.x1, g.x(k) + g.dx() / 2);
      const double ya = std::max(g.y0, g.y(j) - g.dy() / 2);
      const double yb = std::min(g.y1, g.y(j) + g.dy() / 2);
      if (!d.empty()) d += ' ';
      d += "M" + sx(xa) + ' ' + sy(ya) + " H" + sx(xb) + " V" + sy(yb) + " H" + sx(xa) + " Z";
      i = k + 1;
    }
  }
  return d;
}

}  // namespace

std::string to_svg(const EigenField& field, const ContourSet& contours, const SvgOptions& options) {
  const GridSpec& g = field.grid;
  const double w = options.width;
  const double h = options.height;
  auto sx = [&](double x) { return format("%.3f", (x - g.x0) / (g.x1 - g.x0) * w); };
  auto sy = [&](double y) { return format("%.3f", (g.y1 - y) / (g.y1 - g.y0) * h); };
  const std::string ws = std::to_string(options.width);
  const std::string hs = std::to_string(options.height);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + ws + "\" height=\"" + hs + "\" viewBox=\"0 0 " +
         ws + " " + hs + "\">\n";
  if (!options.title.empty()) out += "<title>" + escape_xml(options.title) + "</title>\n";
  out += "<desc>grid [" + format("%.17g", g.x0) + ", " + format("%.17g", g.x1) + "] x [" + format("%.17g", g.y0) +
         ", " + format("%.17g", g.y1) + "], " + std::to_string(g.nx) + " x " + std::to_string(g.ny) +
         " nodes</desc>\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + ws + "\" height=\"" + hs + "\" fill=\"white\" stroke=\"black\"/>\n";
  out += "<g id=\"complex-region\" fill=\"#9ecae1\" fill-opacity=\"0.7\" stroke=\"none\">\n";
  if (const std::string d = region_path(field, Region::Complex, w, h); !d.empty()) {
    out += "<path d=\"" + d + "\"/>\n";
  }
  out += "</g>\n";
  if (const std::string d = region_path(field, Region::Masked, w, h); !d.empty()) {
    out += "<g id=\"masked\" fill=\"#bdbdbd\" stroke=\"none\">\n<path d=\"" + d + "\"/>\n</g>\n";
  }
  out += "<g id=\"contours\" fill=\"none\" stroke-width=\"1\">\n";
  for (const auto& line : contours.lines) {
    if (line.points.size() < 2) continue;
    std::string d;
    for (std::size_t k = 0; k < line.points.size(); ++k) {
      d += (k == 0 ? "M" : " L") + sx(line.points[k].first) + ' ' + sy(line.points[k].second);
    }
    if (line.closed) d += " Z";
    const char* color = line.branch == Branch::Plus ? "#d62728" : "#1f77b4";
    out += "<path class=\"" + to_string(line.branch) + "\" data-level=\"" + format("%.9g", line.level) +
           "\" stroke=\"" + color + "\" d=\"" + d + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

void emit_csv(const EigenField& field, const std::string& path) { write_file(path, to_csv(field)); }

void emit_svg(const EigenField& field, const ContourSet& contours, const std::string& path,
              const SvgOptions& options) {
  write_file(path, to_svg(field, contours, options));
}

}  // namespace nijenhuis2d
