// nijenhuis2d: torsion, admissibility, reconstruction, classification and
// eigenvalue plots for 2x2 operator fields with polynomial entries.
//
// Exit codes: 0 positive verdict, 1 negative verdict, 2 input or usage error,
// 3 undecided.

#include <unistd.h>

#include <CLI11.hpp>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "nijenhuis2d/classify.hpp"
#include "nijenhuis2d/discriminant.hpp"
#include "nijenhuis2d/errors.hpp"
#include "nijenhuis2d/jets.hpp"
#include "nijenhuis2d/numeric.hpp"
#include "nijenhuis2d/operator.hpp"
#include "nijenhuis2d/parser.hpp"
#include "nijenhuis2d/serialize.hpp"

namespace nj = nijenhuis2d;

namespace {

enum Exit { kPositive = 0, kNegative = 1, kInputError = 2, kUndecided = 3 };

bool use_color() {
  const char* no_color = std::getenv("NO_COLOR");
  if (no_color != nullptr && no_color[0] != '\0') return false;
  return isatty(fileno(stderr)) != 0;
}

void print_error(const std::string& message) {
  if (use_color()) {
    std::cerr << "\033[1;31merror:\033[0m " << message << "\n";
  } else {
    std::cerr << "error: " << message << "\n";
  }
}

// The offending text with a caret line under the span.
void print_span(const std::string& text, nj::SourceSpan span) {
  const std::size_t begin = std::min(span.begin, text.size());
  const std::size_t width = span.end > begin ? span.end - begin : 1;
  std::cerr << "  " << text << "\n  " << std::string(begin, ' ') << std::string(width, '^') << "\n";
}

struct Common {
  std::string format = "text";
  nj::Format fmt() const { return format == "json" ? nj::Format::Json : nj::Format::Text; }
};

void add_format(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

// Parses `text` as a polynomial; input errors are reported with a caret.
std::optional<nj::BivariatePolynomial> parse_or_report(const std::string& flag, const std::string& text) {
  try {
    return nj::parse_poly(text);
  } catch (const nj::InputError& e) {
    print_error(flag + ": " + e.what());
    print_span(text, e.span());
    return std::nullopt;
  }
}

std::optional<nj::OperatorField2> parse_entries_or_report(const std::vector<std::string>& entries) {
  try {
    return nj::parse_operator({entries[0], entries[1], entries[2], entries[3]});
  } catch (const nj::EntryInputError& e) {
    print_error(std::string("--L ") + e.what());
    print_span(entries[static_cast<std::size_t>(e.entry())], e.span());
    return std::nullopt;
  }
}

void emit(const std::string& text) { std::cout << text << std::flush; }

int run_torsion(const std::vector<std::string>& entries, const Common& common) {
  const auto op = parse_entries_or_report(entries);
  if (!op) return kInputError;
  const nj::Torsion t = nj::torsion(*op);
  emit(nj::report(*op, t, common.fmt()));
  return t.is_zero() ? kPositive : kNegative;
}

int run_check(const std::string& g_text, const std::string& scope, double radius, unsigned resolution,
              const Common& common) {
  const auto g = parse_or_report("--g", g_text);
  if (!g) return kInputError;
  nj::CheckOptions options;
  options.scope = scope == "local" ? nj::CheckScope::Local : nj::CheckScope::Box;
  options.box_radius = radius;
  options.scan_resolution = resolution;
  const nj::AdmissibilityVerdict v = nj::admissible_check(*g, options);
  emit(nj::report(v, common.fmt()));
  // Local smoothness is certified by a coefficient bound; a box scan is not.
  if (v.status == nj::Admissibility::NumericOnly && v.scope == nj::CheckScope::Box) return kUndecided;
  return v.admissible() ? kPositive : kNegative;
}

int run_reconstruct(const std::string& g_text, const std::string& f_text, const Common& common) {
  if (!g_text.empty()) {
    const auto g = parse_or_report("--g", g_text);
    if (!g) return kInputError;
    if (nj::partial_y(*g).is_zero()) {
      // No unique reconstruction: report the y-independent family instead.
      const nj::ClassificationResult r = nj::classify(*g);
      emit(nj::report(r, common.fmt()));
      return r.admissible() ? kPositive : kNegative;
    }
    const nj::Reconstruction rec = nj::reconstruct_from_disc(*g);
    emit(nj::report(rec, "disc", *g, common.fmt()));
    return rec.polynomial ? kPositive : kNegative;
  }
  const auto f = parse_or_report("--f", f_text);
  if (!f) return kInputError;
  if (nj::partial_y(*f).is_zero()) {
    const nj::BivariatePolynomial residual = nj::y_independent_ode_residual(*f);
    emit(nj::report_y_independent_det(*f, residual, common.fmt()));
    return residual.is_zero() ? kPositive : kNegative;
  }
  const nj::Reconstruction rec = nj::reconstruct_from_det(*f);
  emit(nj::report(rec, "det", *f, common.fmt()));
  return rec.polynomial ? kPositive : kNegative;
}

int run_classify(const std::string& g_text, unsigned jet_order, const Common& common) {
  const auto g = parse_or_report("--g", g_text);
  if (!g) return kInputError;
  const nj::ClassificationResult r = nj::classify(*g, jet_order);
  emit(nj::report(r, common.fmt()));
  switch (r.outcome) {
    case nj::Outcome::Admissible:
      return kPositive;
    case nj::Outcome::NotAdmissible:
      return kNegative;
    case nj::Outcome::Undecided:
      break;
  }
  return kUndecided;
}

struct PlotArgs {
  std::vector<std::string> entries;
  std::string g_text;
  std::vector<std::string> outputs;
  nj::GridSpec grid;
  unsigned levels = 21;
  std::string title;
};

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int run_plot(const PlotArgs& args, const Common& common) {
  for (const auto& out : args.outputs) {
    if (!ends_with(out, ".svg") && !ends_with(out, ".csv")) {
      print_error("--out " + out + ": expected a .svg or .csv path");
      return kInputError;
    }
  }
  std::optional<nj::OperatorField2> op;
  if (!args.entries.empty()) {
    op = parse_entries_or_report(args.entries);
    if (!op) return kInputError;
  } else {
    const auto g = parse_or_report("--g", args.g_text);
    if (!g) return kInputError;
    if (nj::partial_y(*g).is_zero()) {
      const nj::ClassificationResult r = nj::classify(*g);
      if (!r.canonical_operator) {
        print_error("no operator with trace x has discriminant " + nj::render(*g));
        return kNegative;
      }
      op = *r.canonical_operator;
    } else {
      op = nj::reconstruct_from_disc(*g).op;
    }
  }
  const nj::EigenField field = nj::eval_eigenfield(*op, args.grid);
  const nj::ContourSet contours = nj::extract_levels(field, nj::default_levels(field, args.levels));
  nj::SvgOptions svg;
  svg.title = args.title;
  for (const auto& out : args.outputs) {
    if (ends_with(out, ".svg")) {
      nj::emit_svg(field, contours, out, svg);
    } else {
      nj::emit_csv(field, out);
    }
  }
  emit(nj::report(field, contours, args.outputs, common.fmt()));
  return kPositive;
}

int run_lemma_verify(unsigned k_max, const std::vector<std::string>& c_texts, const Common& common) {
  std::vector<nj::Rational> cs;
  for (const auto& text : c_texts) {
    try {
      cs.push_back(nj::Rational::parse(text));
    } catch (const std::exception& e) {
      print_error("--c " + text + ": " + e.what());
      return kInputError;
    }
    if (cs.back().sign() == 0) {
      print_error("--c must be nonzero");
      return kInputError;
    }
  }
  std::vector<nj::InverseQuadraticCheck> checks;
  for (const auto& c : cs) {
    for (unsigned k = 0; k <= k_max; ++k) checks.push_back(nj::verify_inverse_quadratic(k, c));
  }
  emit(nj::report(checks, common.fmt()));
  for (const auto& c : checks) {
    if (!c.holds()) return kNegative;
  }
  return kPositive;
}

void add_grid_options(CLI::App* cmd, nj::GridSpec& grid) {
  cmd->add_option("--xmin", grid.x0, "Left edge of the grid")->capture_default_str();
  cmd->add_option("--xmax", grid.x1, "Right edge of the grid")->capture_default_str();
  cmd->add_option("--ymin", grid.y0, "Bottom edge of the grid")->capture_default_str();
  cmd->add_option("--ymax", grid.y1, "Top edge of the grid")->capture_default_str();
  cmd->add_option("--nx", grid.nx, "Nodes along x")->capture_default_str();
  cmd->add_option("--ny", grid.ny, "Nodes along y")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nijenhuis operators on the plane: torsion, admissibility, normal forms, eigenvalue plots"};
  app.require_subcommand(1);
  Common common;

  std::vector<std::string> entries;
  auto* torsion_cmd = app.add_subcommand("torsion", "Torsion of [[a, b], [c, d]]");
  torsion_cmd->add_option("--L", entries, "Entries a b c d in row-major order")->expected(4)->required();
  add_format(torsion_cmd, common);

  std::string g_text;
  std::string scope = "box";
  double radius = 1.0;
  unsigned resolution = 201;
  auto* check_cmd = app.add_subcommand("check", "Is g the discriminant of a Nijenhuis operator with trace x?");
  check_cmd->add_option("--g", g_text, "Discriminant")->required();
  check_cmd->add_option("--scope", scope, "Where smoothness is judged")
      ->check(CLI::IsMember({"box", "local"}))
      ->capture_default_str();
  check_cmd->add_option("--radius", radius, "Half-width of the box")->check(CLI::PositiveNumber)->capture_default_str();
  check_cmd->add_option("--scan", resolution, "Scan nodes per side in box scope")
      ->check(CLI::Range(2u, 4001u))
      ->capture_default_str();
  add_format(check_cmd, common);

  std::string f_text;
  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "Operator with trace x and the given disc or det");
  auto* g_opt = reconstruct_cmd->add_option("--g", g_text, "Discriminant");
  auto* f_opt = reconstruct_cmd->add_option("--f", f_text, "Determinant");
  g_opt->excludes(f_opt);
  reconstruct_cmd->require_option(1);
  add_format(reconstruct_cmd, common);

  unsigned jet_order = nj::kDefaultJetOrder;
  auto* classify_cmd = app.add_subcommand("classify", "Classify the singularity of g at the origin");
  classify_cmd->add_option("--g", g_text, "Discriminant")->required();
  classify_cmd->add_option("--jet-order", jet_order, "Jet order for the Morse and cubic normal forms")
      ->check(CLI::Range(2u, 64u))
      ->capture_default_str();
  add_format(classify_cmd, common);

  PlotArgs plot;
  auto* plot_cmd = app.add_subcommand("plot", "Eigenvalue level lines and complex region");
  auto* plot_l = plot_cmd->add_option("--L", plot.entries, "Entries a b c d")->expected(4);
  auto* plot_g = plot_cmd->add_option("--g", plot.g_text, "Discriminant; the operator is reconstructed");
  plot_l->excludes(plot_g);
  plot_cmd->add_option("--out", plot.outputs, "Output .svg or .csv path (repeatable)")->required();
  plot_cmd->add_option("--levels", plot.levels, "Number of levels")->check(CLI::Range(1u, 1000u))->capture_default_str();
  plot_cmd->add_option("--title", plot.title, "SVG title");
  add_grid_options(plot_cmd, plot.grid);
  add_format(plot_cmd, common);

  unsigned k_max = 5;
  std::vector<std::string> c_texts = {"1", "2", "3", "-1", "1/2"};
  auto* lemma_cmd = app.add_subcommand(
      "lemma-verify", "Check y-derivatives of 1/(y^2 + c) and y/(y^2 + c) at 0 against closed forms");
  lemma_cmd->add_option("--k-max", k_max, "Largest derivative order")->check(CLI::Range(0u, 40u))->capture_default_str();
  lemma_cmd->add_option("--c", c_texts, "Values of c (rationals)")->capture_default_str();
  add_format(lemma_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*torsion_cmd) return run_torsion(entries, common);
    if (*check_cmd) return run_check(g_text, scope, radius, resolution, common);
    if (*reconstruct_cmd) return run_reconstruct(g_text, f_text, common);
    if (*classify_cmd) return run_classify(g_text, jet_order, common);
    if (*plot_cmd) {
      if (plot.entries.empty() && plot.g_text.empty()) {
        print_error("plot needs --L or --g");
        return kInputError;
      }
      return run_plot(plot, common);
    }
    if (*lemma_cmd) return run_lemma_verify(k_max, c_texts, common);
  } catch (const nj::Error& e) {
    print_error(e.what());
    return kInputError;
  }
  return kInputError;
}
