#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "harmconv/canonical.hpp"
#include "harmconv/errors.hpp"
#include "harmconv/map_spec.hpp"
#include "harmconv/render.hpp"
#include "harmconv/scenarios.hpp"

using harmconv::Complex;
using harmconv::Json;

namespace {

// what(): substring check that stays portable across doctest versions.
template <class E>
std::string thrown_message(const std::string& text) {
  try {
    harmconv::build_map_from_string(text);
  } catch (const E& e) {
    return e.what();
  }
  return {};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(static_cast<bool>(in));
  std::ostringstream body;
  body << in.rdbuf();
  return body.str();
}

std::size_t count_occurrences(const std::string& text,
                              const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size()))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("map specs build every documented type") {
  using harmconv::build_map_from_string;

  const harmconv::HarmonicMap f0 =
      build_map_from_string(R"({"type": "right_halfplane_f0", "order": 8})");
  CHECK(f0.order() == 8);
  CHECK(std::abs(f0.h().coeff(2) - Complex(1.5, 0.0)) < 1e-15);
  CHECK(std::abs(f0.g().coeff(2) - Complex(-0.5, 0.0)) < 1e-15);

  const harmconv::AuxParams aux =
      harmconv::aux_params(Complex(0.2, 0.3));
  const double sigma = 0.45 + aux.gamma_a;
  const harmconv::HarmonicMap slant = build_map_from_string(
      R"({"type": "slanted_halfplane_canonical",
          "a": {"re": 0.2, "im": 0.3}, "gamma": 0.45, "order": 16})");
  CHECK(std::abs(slant.g().coeff(1) -
                 aux.a_prime * std::polar(1.0, 2.0 * sigma)) < 1e-14);

  std::ostringstream member_spec;
  member_spec.precision(17);
  member_spec << R"({"type": "halfplane_member",
      "a": {"re": 0.2, "im": 0.3}, "gamma": 0.45,
      "omega": {"kind": "moebius_of_rotation", "prefactor_angle": )"
              << 2.0 * sigma << R"(, "a_param": )" << aux.a_prime
              << R"(, "inner_angle": 0.2, "sign": -1}, "order": 32})";
  const harmconv::HarmonicMap member = build_map_from_string(member_spec.str());
  CHECK(member.class_tag() == harmconv::ClassTag::H);
  // first dilatation coefficient matches the requested origin value
  CHECK(std::abs(member.g().coeff(1) -
                 aux.a_prime * std::polar(1.0, 2.0 * sigma)) < 1e-12);

  const harmconv::AuxParams baux =
      harmconv::aux_params(Complex(0.15, -0.1));
  std::ostringstream strip_spec;
  strip_spec.precision(17);
  strip_spec << R"({"type": "strip_member",
      "b": {"re": 0.15, "im": -0.1}, "beta": 1.4137166941154069,
      "omega": {"kind": "moebius_of_rotation", "prefactor_angle": )"
             << 2.0 * baux.gamma_a
             << R"(, "a_param": )" << baux.a_prime
             << R"(, "inner_angle": 0.8, "sign": 1}, "order": 32})";
  const harmconv::HarmonicMap strip =
      build_map_from_string(strip_spec.str());
  CHECK(strip.class_tag() == harmconv::ClassTag::H);
  CHECK(std::abs(strip.g().coeff(1) -
                 baux.a_prime * std::polar(1.0, 2.0 * baux.gamma_a)) < 1e-12);

  const harmconv::AuxParams faux =
      harmconv::aux_params(Complex(0.3, 0.2));
  std::ostringstream fld_spec;
  fld_spec.precision(17);
  fld_spec << R"({"type": "f_lambda_delta",
      "a": {"re": 0.3, "im": 0.2}, "lambda": 2.2, "delta": 0.6,
      "omega": {"kind": "moebius_of_rotation", "prefactor_angle": )"
           << 2.0 * (0.6 + faux.gamma_a)
           << R"(, "a_param": )" << faux.a_prime
           << R"(, "inner_angle": 1.1, "sign": 1}, "order": 32})";
  const harmconv::HarmonicMap fld = build_map_from_string(fld_spec.str());
  CHECK(std::abs(fld.g().coeff(1) -
                 faux.a_prime *
                     std::polar(1.0, 2.0 * (0.6 + faux.gamma_a))) < 1e-12);

  const harmconv::HarmonicMap conv = build_map_from_string(
      R"({"type": "convolution",
          "operands": [{"type": "right_halfplane_f0", "order": 8},
                       {"type": "right_halfplane_f0", "order": 8}]})");
  CHECK(std::abs(conv.h().coeff(2) - Complex(2.25, 0.0)) < 1e-15);
  CHECK(std::abs(conv.g().coeff(2) - Complex(0.25, 0.0)) < 1e-15);

  // unimodular parameters accept either an angle or an {re, im} pair
  const harmconv::HarmonicMap rot = build_map_from_string(
      R"({"type": "rotation", "mu": 1.1,
          "operand": {"type": "right_halfplane_f0", "order": 8}})");
  CHECK(std::abs(rot.h().coeff(2) - 1.5 * std::polar(1.0, 1.1)) < 1e-14);
  const harmconv::HarmonicMap rot2 = build_map_from_string(
      R"({"type": "rotation", "mu": {"re": -1.0, "im": 0.0},
          "operand": {"type": "right_halfplane_f0", "order": 8}})");
  CHECK(std::abs(rot2.h().coeff(2) + 1.5) < 1e-14);

  const harmconv::HarmonicMap mix = build_map_from_string(
      R"({"type": "convex_combination",
          "operands": [{"type": "right_halfplane_f0", "order": 8},
                       {"type": "slanted_halfplane_canonical",
                        "a": {"re": 0.0, "im": 0.0}, "gamma": 0.0,
                        "order": 8}],
          "weights": [0.25, 0.75]})");
  // both operands have vanishing g'(0), so the stricter tag survives
  CHECK(mix.class_tag() == harmconv::ClassTag::H0);
  CHECK(std::abs(mix.h().coeff(1) - Complex(1.0, 0.0)) < 1e-15);

  const harmconv::HarmonicMap raw = build_map_from_string(
      R"({"type": "coefficients", "class": "H0",
          "h": [{"re": 0, "im": 0}, {"re": 1, "im": 0},
                {"re": 0.5, "im": 0.25}],
          "g": [{"re": 0, "im": 0}, {"re": 0, "im": 0},
                {"re": 0.1, "im": -0.2}]})");
  CHECK(raw.class_tag() == harmconv::ClassTag::H0);
  CHECK(std::abs(raw.g().coeff(2) - Complex(0.1, -0.2)) < 1e-15);
}

TEST_CASE("map spec schema errors name the offending field") {
  using harmconv::SchemaError;
  using harmconv::build_map_from_string;

  CHECK_THROWS_AS(build_map_from_string("not json at all"), SchemaError);
  CHECK_THROWS_AS(build_map_from_string(R"({"order": 4})"), SchemaError);
  CHECK_THROWS_AS(build_map_from_string(R"({"type": "mystery"})"),
                  SchemaError);

  const std::string missing = thrown_message<SchemaError>(
      R"({"type": "slanted_halfplane_canonical", "a": {"re": 0, "im": 0}})");
  CHECK(missing.find("gamma") != std::string::npos);

  const std::string outside = thrown_message<SchemaError>(
      R"({"type": "slanted_halfplane_canonical",
          "a": {"re": 1.2, "im": 0}, "gamma": 0})");
  CHECK(outside.find("|a| < 1") != std::string::npos);

  CHECK_THROWS_AS(
      build_map_from_string(R"({"type": "right_halfplane_f0", "order": 0})"),
      SchemaError);
  CHECK_THROWS_AS(build_map_from_string(
                      R"({"type": "right_halfplane_f0", "order": 16385})"),
                  SchemaError);
  CHECK_THROWS_AS(build_map_from_string(
                      R"({"type": "rotation", "mu": {"re": 0.5, "im": 0},
                          "operand": {"type": "right_halfplane_f0"}})"),
                  SchemaError);
  CHECK_THROWS_AS(build_map_from_string(
                      R"({"type": "coefficients", "class": "H",
                          "h": [{"re": 0, "im": 0}, {"re": 1, "im": 0}],
                          "g": [{"re": 0, "im": 0}]})"),
                  SchemaError);
  CHECK_THROWS_AS(build_map_from_string(
                      R"({"type": "coefficients", "class": "huge",
                          "h": [{"re": 0, "im": 0}],
                          "g": [{"re": 0, "im": 0}]})"),
                  SchemaError);

  // substance errors pass through untouched: a monomial dilatation cannot
  // match a nonzero origin value
  CHECK_THROWS_AS(build_map_from_string(
                      R"({"type": "halfplane_member",
                          "a": {"re": 0.2, "im": 0.3}, "gamma": 0.45,
                          "omega": {"kind": "monomial", "theta": 0.0, "n": 2},
                          "order": 16})"),
                  harmconv::InconsistentDilatationAtOrigin);
}

TEST_CASE("serialized maps rebuild to the same coefficients") {
  const harmconv::AuxParams aux = harmconv::aux_params(Complex(0.2, 0.3));
  std::ostringstream spec;
  spec.precision(17);
  spec << R"({"type": "halfplane_member",
      "a": {"re": 0.2, "im": 0.3}, "gamma": 0.45,
      "omega": {"kind": "moebius_of_rotation", "prefactor_angle": )"
       << 2.0 * (0.45 + aux.gamma_a) << R"(, "a_param": )" << aux.a_prime
       << R"(, "inner_angle": 0.2, "sign": -1}, "order": 24})";
  const harmconv::HarmonicMap member =
      harmconv::build_map_from_string(spec.str());
  const Json doc = harmconv::serialize_map(member);
  CHECK(doc["type"] == "coefficients");
  CHECK(doc["class"] == "H");
  const harmconv::HarmonicMap back =
      harmconv::build_map_from_string(doc.dump());
  REQUIRE(back.order() == member.order());
  double diff = 0.0;
  for (int k = 0; k <= member.order(); ++k) {
    diff = std::max(diff, std::abs(back.h().coeff(k) - member.h().coeff(k)));
    diff = std::max(diff, std::abs(back.g().coeff(k) - member.g().coeff(k)));
  }
  CHECK(diff == 0.0);  // shortest round-trip text keeps doubles exact
}

TEST_CASE("scenario registry lists the expected probes") {
  const std::vector<std::string> want = {"th2.1", "th2.2", "th3.2",
                                         "th3.4", "th4.1", "th4.2",
                                         "th4.3-case1", "th4.3-case2"};
  CHECK(harmconv::scenario_ids() == want);
  CHECK_THROWS_AS(
      harmconv::run_scenario("th9.9", harmconv::ScenarioOverrides{}),
      harmconv::UnknownScenario);
}

TEST_CASE("scenario preconditions skip instead of failing") {
  harmconv::ScenarioOverrides ov;
  ov.a = Complex(0.25, 0.1);
  const harmconv::ScenarioResult res = harmconv::run_scenario("th4.1", ov);
  CHECK(res.verdict == "skipped");
  CHECK_FALSE(res.skip_reason.empty());
  CHECK_FALSE(res.passed());
}

TEST_CASE("a scaled-down scenario run passes end to end") {
  harmconv::ScenarioOverrides ov;
  ov.order = 256;
  ov.grid_radii = std::vector<double>{0.3, 0.5};
  ov.grid_angles = 64;
  const harmconv::ScenarioResult res =
      harmconv::run_scenario("th4.3-case1", ov);
  CHECK(res.passed());
  CHECK(res.document["reports"]["cubic"]["zeros_on_boundary"] == 1);
  CHECK(res.document["reports"]["cubic"]["residual_at_one"].get<double>() <
        1e-12);
  CHECK(res.document["reports"]["direction_certificate"]["passes"] == true);
}

TEST_CASE("renders trace the requested curve family") {
  const harmconv::HarmonicMap f0 = harmconv::right_halfplane_f0(64);
  harmconv::RenderStyle style;
  style.rings = 3;
  style.rays = 4;
  style.samples = 16;
  style.max_radius = 0.9;

  const std::string svg_path = "harness_render_test.svg";
  harmconv::render_svg(f0, style, svg_path);
  const std::string svg = read_file(svg_path);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(count_occurrences(svg, "<polyline") == 7);
  CHECK(svg.find("</svg>") != std::string::npos);
  std::remove(svg_path.c_str());

  const std::string csv_path = "harness_render_test.csv";
  harmconv::render_csv(f0, style, csv_path);
  const std::string csv = read_file(csv_path);
  CHECK(csv.rfind("re_z,im_z,re_w,im_w,jacobian,abs_dilatation\n", 0) == 0);
  // rings close their loop with one repeated sample, rays do not
  const std::size_t want_lines =
      1 + 3 * (16 + 1) + static_cast<std::size_t>(4) * 16;
  CHECK(count_occurrences(csv, "\n") == want_lines);
  std::remove(csv_path.c_str());

  harmconv::RenderStyle bad = style;
  bad.samples = 1;
  CHECK_THROWS_AS(harmconv::render_svg(f0, bad, "unused.svg"),
                  harmconv::OutOfRange);
  CHECK_THROWS_AS(
      harmconv::render_csv(f0, style, "/nonexistent_dir_xyz/out.csv"),
      harmconv::IOError);
}
