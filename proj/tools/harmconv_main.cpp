// Command-line front-end: construct maps from JSON specs, run grid checks,
// reproduce registered scenarios, and render disk images to SVG/CSV.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "harmconv/canonical.hpp"
#include "harmconv/errors.hpp"
#include "harmconv/geometry.hpp"
#include "harmconv/map_spec.hpp"
#include "harmconv/render.hpp"
#include "harmconv/scenarios.hpp"

namespace {

using harmconv::Complex;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw harmconv::IOError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof())
    throw harmconv::IOError("cannot read " + path);
  return buf.str();
}

void atomic_write_text(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw harmconv::IOError("cannot open " + tmp);
    out << text;
    out.flush();
    if (!out.good()) throw harmconv::IOError("cannot write " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw harmconv::IOError("cannot rename " + tmp + " to " + path);
  }
}

void emit(const harmconv::Json& doc, const std::string& out_path) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    atomic_write_text(out_path, text);
}

double parse_double_token(const std::string& text, const std::string& what) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0' || !std::isfinite(v))
    throw harmconv::SchemaError(what + " is not a finite number: '" + text +
                                "'");
  return v;
}

// Accepts "re" or "re,im".
Complex parse_complex_token(const std::string& text, const std::string& what) {
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos)
    return Complex(parse_double_token(text, what), 0.0);
  return Complex(parse_double_token(text.substr(0, comma), what),
                 parse_double_token(text.substr(comma + 1), what));
}

std::vector<double> parse_radii_csv(const std::string& text) {
  std::vector<double> radii;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    radii.push_back(parse_double_token(item, "--grid-radii entry"));
  if (radii.empty())
    throw harmconv::SchemaError("--grid-radii needs at least one value");
  return radii;
}

struct GridFlags {
  std::string radii_csv;
  int angles = 0;

  harmconv::DiskGrid build() const {
    const harmconv::DiskGrid def;
    return harmconv::DiskGrid(
        radii_csv.empty() ? def.radii() : parse_radii_csv(radii_csv),
        angles > 0 ? angles : def.angles_per_ring());
  }
};

void add_grid_flags(CLI::App* cmd, GridFlags& flags) {
  cmd->add_option("--grid-radii", flags.radii_csv,
                  "Comma-separated grid radii in (0,1), ascending");
  cmd->add_option("--grid-angles", flags.angles,
                  "Sample angles per grid ring (>= 8)");
}

int run_construct(const std::string& spec_path, const std::string& out_path) {
  const harmconv::HarmonicMap map =
      harmconv::build_map_from_string(read_file(spec_path));
  emit(harmconv::serialize_map(map), out_path);
  return 0;
}

int run_check(const std::string& spec_path,
              const std::vector<std::string>& checks, const GridFlags& gridf,
              const std::string& a_token, double gamma,
              const std::string& b_token, double beta,
              const std::string& out_path) {
  const harmconv::HarmonicMap map =
      harmconv::build_map_from_string(read_file(spec_path));
  const harmconv::DiskGrid grid = gridf.build();

  harmconv::Json results = harmconv::Json::array();
  bool all_pass = true;
  for (const std::string& check : checks) {
    harmconv::Json entry{{"check", check}};
    bool passed = false;
    if (check == "univalence") {
      const harmconv::UnivalenceReport rep =
          harmconv::local_univalence(map, grid);
      passed = rep.locally_univalent;
      entry["report"] = harmconv::univalence_report_json(rep);
    } else if (check.rfind("convex_direction:", 0) == 0) {
      const double alpha = parse_double_token(
          check.substr(std::string("convex_direction:").size()),
          "convex_direction angle");
      try {
        const harmconv::ConvexityCertificate cert =
            harmconv::direction_convexity(map, alpha, grid);
        passed = cert.passes();
        entry["report"] = harmconv::certificate_json(cert, harmconv::kCertTol);
      } catch (const harmconv::NotLocallyUnivalent& e) {
        passed = false;
        entry["report"] =
            harmconv::Json{{"univalence",
                            harmconv::univalence_report_json(e.report)},
                           {"note", "local univalence precondition failed"}};
      }
    } else if (check == "membership:halfplane") {
      const Complex a = parse_complex_token(a_token, "--a");
      const double margin = harmconv::halfplane_membership(map, a, gamma, grid);
      passed = margin >= -harmconv::kCertTol;
      entry["report"] = harmconv::Json{
          {"a", harmconv::complex_json(a)}, {"gamma", gamma},
          {"margin", margin}};
    } else if (check == "membership:strip") {
      const Complex b = parse_complex_token(b_token, "--b");
      const harmconv::StripMargins m =
          harmconv::strip_membership(map, b, beta, grid);
      passed = std::min(m.lower, m.upper) >= -harmconv::kCertTol;
      entry["report"] = harmconv::Json{{"b", harmconv::complex_json(b)},
                                       {"beta", beta},
                                       {"lower_margin", m.lower},
                                       {"upper_margin", m.upper}};
    } else {
      throw harmconv::SchemaError(
          "unknown check '" + check +
          "' (use univalence, convex_direction:<alpha>, "
          "membership:halfplane, membership:strip)");
    }
    entry["passed"] = passed;
    all_pass = all_pass && passed;
    results.push_back(std::move(entry));
  }

  emit(harmconv::Json{{"spec_file", spec_path},
                      {"grid", harmconv::grid_json(grid)},
                      {"checks", std::move(results)},
                      {"verdict", all_pass ? "pass" : "fail"}},
       out_path);
  return all_pass ? 0 : 1;
}

int run_reproduce(const std::string& scenario_id,
                  const harmconv::ScenarioOverrides& overrides,
                  const std::string& out_path) {
  const harmconv::ScenarioResult result =
      harmconv::run_scenario(scenario_id, overrides);
  emit(result.document, out_path);
  return result.verdict == "fail" ? 1 : 0;
}

int run_render(const std::string& spec_path, const harmconv::RenderStyle& style,
               const std::string& out_path) {
  const harmconv::HarmonicMap map =
      harmconv::build_map_from_string(read_file(spec_path));
  harmconv::render_svg(map, style, out_path);
  const std::size_t dot = out_path.rfind('.');
  const std::string csv_path =
      (dot == std::string::npos ? out_path : out_path.substr(0, dot)) + ".csv";
  harmconv::render_csv(map, style, csv_path);
  std::cout << "wrote " << out_path << " and " << csv_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "harmconv: planar harmonic map construction, convolution, and "
      "direction-convexity checks on disk grids"};
  app.require_subcommand(1);
  int exit_code = 0;

  // construct
  std::string con_spec, con_out;
  CLI::App* con = app.add_subcommand(
      "construct", "Build a map from a JSON spec and print its coefficients");
  con->add_option("spec_file", con_spec, "JSON map spec")
      ->required()
      ->check(CLI::ExistingFile);
  con->add_option("--out", con_out, "Write the JSON here instead of stdout");
  con->callback([&] { exit_code = run_construct(con_spec, con_out); });

  // check
  std::string chk_spec, chk_out, chk_a = "0", chk_b = "0";
  double chk_gamma = 0.0, chk_beta = 1.5707963267948966;
  std::vector<std::string> chk_checks;
  GridFlags chk_grid;
  CLI::App* chk = app.add_subcommand(
      "check", "Run grid diagnostics against a map built from a JSON spec");
  chk->add_option("spec_file", chk_spec, "JSON map spec")
      ->required()
      ->check(CLI::ExistingFile);
  chk->add_option("--check", chk_checks,
                  "univalence | convex_direction:<alpha> | "
                  "membership:halfplane | membership:strip (repeatable)")
      ->required();
  add_grid_flags(chk, chk_grid);
  chk->add_option("--a", chk_a, "Half-plane family parameter, re or re,im");
  chk->add_option("--gamma", chk_gamma, "Half-plane family slant angle");
  chk->add_option("--b", chk_b, "Strip family parameter, re or re,im");
  chk->add_option("--beta", chk_beta, "Strip aperture angle in (0, pi]");
  chk->add_option("--out", chk_out, "Write the JSON here instead of stdout");
  chk->callback([&] {
    exit_code = run_check(chk_spec, chk_checks, chk_grid, chk_a, chk_gamma,
                          chk_b, chk_beta, chk_out);
  });

  // reproduce
  std::string rep_id, rep_out, rep_a;
  GridFlags rep_grid;
  harmconv::ScenarioOverrides overrides;
  double rep_gamma = 0.0, rep_beta = 0.0, rep_theta = 0.0;
  int rep_n = 0, rep_order = 0;
  CLI::App* rep = app.add_subcommand(
      "reproduce", "Run a registered scenario and print its report");
  std::string id_help = "Scenario id:";
  for (const std::string& id : harmconv::scenario_ids()) id_help += " " + id;
  rep->add_option("scenario_id", rep_id, id_help)->required();
  CLI::Option* oa =
      rep->add_option("--a", rep_a, "Override parameter a, re or re,im");
  CLI::Option* og = rep->add_option("--gamma", rep_gamma, "Override gamma");
  CLI::Option* ob = rep->add_option("--beta", rep_beta, "Override beta");
  CLI::Option* ot = rep->add_option("--theta", rep_theta, "Override theta");
  CLI::Option* on = rep->add_option("--n", rep_n, "Override n");
  CLI::Option* oo =
      rep->add_option("--order", rep_order, "Override truncation order");
  add_grid_flags(rep, rep_grid);
  rep->add_option("--seed", overrides.seed, "Seed for randomized scenarios");
  rep->add_option("--out", rep_out, "Write the JSON here instead of stdout");
  rep->callback([&] {
    if (*oa) overrides.a = parse_complex_token(rep_a, "--a");
    if (*og) overrides.gamma = rep_gamma;
    if (*ob) overrides.beta = rep_beta;
    if (*ot) overrides.theta = rep_theta;
    if (*on) overrides.n = rep_n;
    if (*oo) overrides.order = rep_order;
    if (!rep_grid.radii_csv.empty())
      overrides.grid_radii = parse_radii_csv(rep_grid.radii_csv);
    if (rep_grid.angles > 0) overrides.grid_angles = rep_grid.angles;
    exit_code = run_reproduce(rep_id, overrides, rep_out);
  });

  // render
  std::string ren_spec, ren_out;
  harmconv::RenderStyle style;
  CLI::App* ren = app.add_subcommand(
      "render", "Render the disk image of a map to SVG plus a CSV table");
  ren->add_option("spec_file", ren_spec, "JSON map spec")
      ->required()
      ->check(CLI::ExistingFile);
  ren->add_option("--out", ren_out, "Output SVG path")->required();
  ren->add_option("--rings", style.rings, "Concentric circles to trace");
  ren->add_option("--rays", style.rays, "Radial segments to trace");
  ren->add_option("--samples", style.samples, "Samples per traced curve");
  ren->add_option("--max-radius", style.max_radius,
                  "Outermost traced radius in (0,1)");
  ren->callback([&] { exit_code = run_render(ren_spec, style, ren_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const harmconv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
