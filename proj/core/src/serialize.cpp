#include "nijenhuis2d/serialize.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace nijenhuis2d {

namespace {

using nlohmann::ordered_json;

ordered_json jet_json(const Jet2& j) {
  return ordered_json{{"polynomial", render(j.to_polynomial())}, {"order", j.order()}};
}

ordered_json entries_json(const OperatorField2& op) {
  const auto e = render_entries(op);
  return ordered_json::array({e[0], e[1], e[2], e[3]});
}

template <typename T>
ordered_json optional_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  return v->to_string();
}

std::string sign_text(int sign) { return sign < 0 ? "-" : "+"; }

std::string summary(const ClassificationResult& r) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(const YIndependentData& d) const {
      if (d.zero_family) return "YIndependent(g = 0)";
      if (d.alpha) return "YIndependent(alpha = " + d.alpha->to_string() + ")";
      return "YIndependent";
    }
    std::string operator()(const YOnlyData& d) const {
      return "YOnly(" + sign_text(d.sign) + ", k=" + std::to_string(d.k) + ")";
    }
    std::string operator()(const LinearInYData& d) const {
      const std::string m = d.m.infinite ? "inf" : std::to_string(d.m.value);
      return "LinearInY(m=" + m + ", k=" + std::to_string(d.k) + ")";
    }
    std::string operator()(const HomogeneousData& d) const {
      return "Homogeneous(m=" + std::to_string(d.m) + ", k=" + std::to_string(d.k) + ")";
    }
    std::string operator()(const MorseData& d) const {
      return "Morse(" + sign_text(d.sign) + (d.with_quarter_x2 ? ", with x^2/4)" : ")");
    }
    std::string operator()(const CubicData& d) const {
      return std::string("Cubic(") + (d.with_quarter_x2 ? "with x^2/4)" : "beta = 0)");
    }
  };
  const std::string s = std::visit(Visitor{}, r.data);
  return s.empty() ? to_string(r.path) : s;
}

ordered_json parameters_json(const PathData& data) {
  struct Visitor {
    ordered_json operator()(std::monostate) const { return ordered_json::object(); }
    ordered_json operator()(const YIndependentData& d) const {
      return {{"alpha", optional_json(d.alpha)}, {"zero_family", d.zero_family}};
    }
    ordered_json operator()(const YOnlyData& d) const {
      return {{"k", d.k}, {"sign", d.sign}, {"lead", d.lead.to_string()}};
    }
    ordered_json operator()(const LinearInYData& d) const {
      ordered_json m = d.m.infinite ? ordered_json("infinite") : ordered_json(d.m.value);
      return {{"a", render(d.a)},
              {"b", render(d.b)},
              {"m", m},
              {"k", d.k},
              {"fractions_polynomial", d.fractions_polynomial}};
    }
    ordered_json operator()(const HomogeneousData& d) const {
      return {{"degree", d.degree},       {"m", d.m},
              {"k", d.k},                 {"pattern", d.pattern},
              {"lambda", d.lambda.to_string()}, {"r", d.r.to_string()},
              {"sign", d.sign},           {"a", optional_json(d.a)},
              {"b", optional_json(d.b)}};
    }
    ordered_json operator()(const MorseData& d) const {
      return {{"sign", d.sign},
              {"with_quarter_x2", d.with_quarter_x2},
              {"tau", jet_json(d.form.tau)},
              {"residual", jet_json(d.residual)}};
    }
    ordered_json operator()(const CubicData& d) const {
      ordered_json j = {{"with_quarter_x2", d.with_quarter_x2},
                        {"lead", d.form.lead.to_string()},
                        {"tau_unit", jet_json(d.form.tau_unit)},
                        {"beta_unit", jet_json(d.form.beta_unit)},
                        {"residual1", jet_json(d.residual1)},
                        {"residual2", jet_json(d.residual2)}};
      j["tau"] = d.form.tau ? jet_json(*d.form.tau) : ordered_json(nullptr);
      j["beta"] = d.form.beta ? jet_json(*d.form.beta) : ordered_json(nullptr);
      return j;
    }
  };
  return std::visit(Visitor{}, data);
}

ordered_json verdict_json(const AdmissibilityVerdict& v) {
  ordered_json j;
  j["status"] = to_string(v.status);
  j["scope"] = v.scope == CheckScope::Box ? "box" : "local";
  j["admissible"] = v.admissible();
  j["quotient"] = v.quotient ? ordered_json(render(*v.quotient)) : ordered_json(nullptr);
  j["witness"] = v.witness ? ordered_json(render(*v.witness)) : ordered_json(nullptr);
  j["reduced"] = v.reduced ? ordered_json(render(*v.reduced)) : ordered_json(nullptr);
  j["alpha"] = optional_json(v.alpha);
  j["zero_family"] = v.zero_family;
  j["locally_smooth_at_origin"] = v.locally_smooth_at_origin;
  if (v.vanishing_point) {
    j["vanishing_point"] = {v.vanishing_point->first, v.vanishing_point->second};
  } else {
    j["vanishing_point"] = nullptr;
  }
  if (std::isfinite(v.radius)) {
    j["radius"] = v.radius;
  } else {
    j["radius"] = "infinite";
  }
  j["note"] = v.note;
  return j;
}

std::string verdict_text(const AdmissibilityVerdict& v, const std::string& indent) {
  std::string out;
  out += indent + "status: " + to_string(v.status) + " (" + (v.scope == CheckScope::Box ? "box" : "local") + ")\n";
  if (v.quotient) out += indent + "quotient: " + render(*v.quotient) + "\n";
  if (v.witness) out += indent + "witness: " + render(*v.witness) + "\n";
  if (v.reduced) out += indent + "reduced: " + render(*v.reduced) + "\n";
  if (v.alpha) out += indent + "alpha: " + v.alpha->to_string() + "\n";
  if (v.vanishing_point) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "(%.6g, %.6g)", v.vanishing_point->first, v.vanishing_point->second);
    out += indent + "vanishing point: " + buf + "\n";
  }
  if (!v.note.empty()) out += indent + "note: " + v.note + "\n";
  return out;
}

std::string dump(ordered_json j) { return j.dump(2) + "\n"; }

ordered_json document(const char* kind) {
  ordered_json j;
  j["schema"] = 1;
  j["kind"] = kind;
  return j;
}

}  // namespace

std::string report(const ClassificationResult& r, Format format) {
  if (format == Format::Json) {
    ordered_json j = document("classification");
    j["outcome"] = to_string(r.outcome);
    j["path"] = to_string(r.path);
    j["summary"] = summary(r);
    j["reason"] = r.reason;
    j["exact"] = r.exact;
    j["jet_order"] = r.jet_order;
    j["normal_form"] = r.normal_form ? ordered_json(render(*r.normal_form)) : ordered_json(nullptr);
    j["substitution"] = r.substitution;
    j["parameters"] = parameters_json(r.data);
    j["canonical_operator"] = r.canonical_operator ? entries_json(*r.canonical_operator) : ordered_json(nullptr);
    j["operator_xy"] = r.operator_xy ? entries_json(*r.operator_xy) : ordered_json(nullptr);
    j["witness"] = r.witness ? ordered_json(render(*r.witness)) : ordered_json(nullptr);
    j["raw"] = r.raw ? verdict_json(*r.raw) : ordered_json(nullptr);
    return dump(std::move(j));
  }
  std::string out;
  out += "outcome: " + to_string(r.outcome) + "\n";
  out += "path: " + summary(r) + "\n";
  if (!r.reason.empty()) out += "reason: " + r.reason + "\n";
  if (r.normal_form) out += "normal form: " + render(*r.normal_form) + "  (y = ytilde)\n";
  if (!r.substitution.empty()) out += "substitution: " + r.substitution + "\n";
  if (r.path == Path::Morse || r.path == Path::Cubic) {
    out += std::string("certificate: ") + (r.exact ? "exact" : "jet") + ", jet order " +
           std::to_string(r.jet_order) + "\n";
  }
  if (r.canonical_operator) out += "canonical operator: " + render(*r.canonical_operator) + "\n";
  if (r.operator_xy) out += "operator in (x, y): " + render(*r.operator_xy) + "\n";
  if (r.witness) out += "witness: " + render(*r.witness) + "\n";
  if (r.raw) out += "divisibility verdict:\n" + verdict_text(*r.raw, "  ");
  return out;
}

std::string report(const AdmissibilityVerdict& v, Format format) {
  if (format == Format::Json) {
    ordered_json j = document("admissibility");
    const ordered_json body = verdict_json(v);
    for (const auto& [key, value] : body.items()) j[key] = value;
    return dump(std::move(j));
  }
  return verdict_text(v, "");
}

std::string report(const Reconstruction& r, const std::string& source, const BivariatePolynomial& input,
                   Format format) {
  if (format == Format::Json) {
    ordered_json j = document("reconstruction");
    j["from"] = source;
    j["input"] = render(input);
    j["operator"] = entries_json(r.op);
    j["polynomial"] = r.polynomial;
    return dump(std::move(j));
  }
  const auto e = render_entries(r.op);
  std::string out;
  out += source + " = " + render(input) + "\n";
  out += "a = " + e[0] + "\n";
  out += "b = " + e[1] + "\n";
  out += "c = " + e[2] + "\n";
  out += "d = " + e[3] + "\n";
  out += std::string("entry (2,1): ") + (r.polynomial ? "polynomial" : "not polynomial") + "\n";
  return out;
}

std::string report(const OperatorField2& op, const Torsion& t, Format format) {
  const bool nij = t.is_zero();
  if (format == Format::Json) {
    ordered_json j = document("torsion");
    j["operator"] = entries_json(op);
    j["n1"] = render(t.n1);
    j["n2"] = render(t.n2);
    j["nijenhuis"] = nij;
    return dump(std::move(j));
  }
  return "operator: " + render(op) + "\n" + "n1 = " + render(t.n1) + ", n2 = " + render(t.n2) + ", " +
         (nij ? "NIJENHUIS" : "NOT NIJENHUIS") + "\n";
}

std::string report(const std::vector<InverseQuadraticCheck>& checks, Format format) {
  bool all = true;
  for (const auto& c : checks) all = all && c.holds();
  if (format == Format::Json) {
    ordered_json j = document("inverse_quadratic");
    ordered_json rows = ordered_json::array();
    for (const auto& c : checks) {
      rows.push_back({{"k", c.k},
                      {"c", c.c.to_string()},
                      {"even_value", c.even_value.to_string()},
                      {"even_expected", c.even_expected.to_string()},
                      {"odd_value", c.odd_value.to_string()},
                      {"odd_expected", c.odd_expected.to_string()},
                      {"holds", c.holds()}});
    }
    j["checks"] = std::move(rows);
    j["all_hold"] = all;
    return dump(std::move(j));
  }
  std::string out;
  for (const auto& c : checks) {
    out += "k=" + std::to_string(c.k) + " c=" + c.c.to_string() + "  even " + c.even_value.to_string() +
           " (expected " + c.even_expected.to_string() + ")  odd " + c.odd_value.to_string() + " (expected " +
           c.odd_expected.to_string() + ")  " + (c.holds() ? "ok" : "FAIL") + "\n";
  }
  out += all ? "all hold\n" : "some checks fail\n";
  return out;
}

std::string report_y_independent_det(const BivariatePolynomial& f, const BivariatePolynomial& residual,
                                     Format format) {
  if (format == Format::Json) {
    ordered_json j = document("y_independent_det");
    j["det"] = render(f);
    j["residual"] = render(residual);
    j["nijenhuis"] = residual.is_zero();
    return dump(std::move(j));
  }
  return "det = " + render(f) + " does not depend on y\n" + "(x - f') f' - f = " + render(residual) + "\n" +
         (residual.is_zero() ? "every c gives a Nijenhuis operator [[x - f', 0], [c, f']]\n"
                             : "no Nijenhuis operator with this trace and det\n");
}

std::string report(const EigenField& field, const ContourSet& contours, const std::vector<std::string>& written,
                   Format format) {
  std::size_t counts[4] = {0, 0, 0, 0};
  for (const auto& n : field.nodes) ++counts[static_cast<int>(n.region)];
  if (format == Format::Json) {
    ordered_json j = document("plot");
    j["grid"] = {{"x0", field.grid.x0}, {"x1", field.grid.x1}, {"y0", field.grid.y0},
                 {"y1", field.grid.y1}, {"nx", field.grid.nx}, {"ny", field.grid.ny}};
    j["nodes"] = {{"real_distinct", counts[0]}, {"complex", counts[1]}, {"coincident", counts[2]},
                  {"masked", counts[3]}};
    j["polylines"] = contours.lines.size();
    j["written"] = written;
    return dump(std::move(j));
  }
  std::string out;
  out += "nodes: " + std::to_string(field.nodes.size()) + " (real-distinct " + std::to_string(counts[0]) +
         ", complex " + std::to_string(counts[1]) + ", coincident " + std::to_string(counts[2]) + ", masked " +
         std::to_string(counts[3]) + ")\n";
  out += "polylines: " + std::to_string(contours.lines.size()) + "\n";
  for (const auto& w : written) out += "wrote " + w + "\n";
  return out;
}

}  // namespace nijenhuis2d
