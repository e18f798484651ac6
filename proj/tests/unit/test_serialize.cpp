#include <gtest/gtest.h>

#include <json.hpp>

#include "nijenhuis2d/classify.hpp"
#include "nijenhuis2d/parser.hpp"
#include "nijenhuis2d/serialize.hpp"

using namespace nijenhuis2d;
using nlohmann::json;

namespace {

BivariatePolynomial P(const char* text) { return parse_poly(text); }

OperatorField2 entries_of(const json& j) {
  const std::string a = j[0], b = j[1], c = j[2], d = j[3];
  return parse_operator({a, b, c, d});
}

}  // namespace

TEST(Serialize, TorsionText) {
  const auto op = parse_operator({"x", "2*y", "y/2", "0"});
  const std::string text = report(op, torsion(op), Format::Text);
  EXPECT_NE(text.find("n1 = 0, n2 = 0, NIJENHUIS"), std::string::npos);
  const auto bad = parse_operator({"y", "0", "0", "x"});
  EXPECT_NE(report(bad, torsion(bad), Format::Text).find("NOT NIJENHUIS"), std::string::npos);
}

TEST(Serialize, ClassificationJsonRoundTrips) {
  for (const char* text : {"y^2 + x^2/4", "x^2*y^3", "y^4 + x*y^5", "(y + x)^3 + x^2/4", "x^2/4", "y^2 + 2*x*y"}) {
    const auto g = P(text);
    const auto r = classify(g);
    const json j = json::parse(report(r, Format::Json));
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["kind"], "classification");
    EXPECT_EQ(j["outcome"], to_string(r.outcome));
    if (r.normal_form) EXPECT_EQ(P(j["normal_form"].get<std::string>().c_str()), *r.normal_form);
    if (r.canonical_operator) EXPECT_EQ(entries_of(j["canonical_operator"]), *r.canonical_operator);
    if (r.operator_xy) EXPECT_EQ(entries_of(j["operator_xy"]), *r.operator_xy);
    if (r.witness) EXPECT_EQ(P(j["witness"].get<std::string>().c_str()), *r.witness);
    EXPECT_EQ(report(r, Format::Json), report(classify(g), Format::Json));
  }
}

TEST(Serialize, Summaries) {
  EXPECT_EQ(json::parse(report(classify(P("y^2 + x^2/4")), Format::Json))["summary"], "Morse(+, with x^2/4)");
  EXPECT_EQ(json::parse(report(classify(P("x^2*y^3")), Format::Json))["summary"], "Homogeneous(m=2, k=3)");
  const std::string text = report(classify(P("y^4 + x*y^5")), Format::Text);
  EXPECT_NE(text.find("outcome: undecided"), std::string::npos);
  EXPECT_NE(text.find("divisibility verdict:"), std::string::npos);
}

TEST(Serialize, ReconstructionAndVerdict) {
  const auto g = P("y^3 + x^2/4");
  const auto rec = reconstruct_from_disc(g);
  const json j = json::parse(report(rec, "disc", g, Format::Json));
  EXPECT_EQ(j["kind"], "reconstruction");
  EXPECT_TRUE(j["polynomial"].get<bool>());
  EXPECT_EQ(entries_of(j["operator"]), rec.op);

  const json v = json::parse(report(admissible_check(P("y^2 + x^3")), Format::Json));
  EXPECT_EQ(v["status"], "NotAdmissible");
  EXPECT_EQ(P(v["witness"].get<std::string>().c_str()), P("9*x^4 - x^3"));
}

TEST(Serialize, InverseQuadraticChecks) {
  std::vector<InverseQuadraticCheck> checks = {verify_inverse_quadratic(1, Rational(1))};
  const json j = json::parse(report(checks, Format::Json));
  EXPECT_TRUE(j["all_hold"].get<bool>());
  EXPECT_EQ(j["checks"][0]["even_value"], "-2");
}
