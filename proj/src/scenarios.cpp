#include "harmconv/scenarios.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <utility>

#include "harmconv/canonical.hpp"
#include "harmconv/schur_cohn.hpp"

namespace harmconv {

namespace {

constexpr double kPi = 3.14159265358979323846;
// Pass bar for the grid supremum of a convolution dilatation.
constexpr double kDilatationSupMargin = 1e-4;
// Pass bar for coefficient-level family relation residuals.
constexpr double kRelationTol = 1e-10;
// Default truncation order for scenario maps. Derivatives of these maps have
// boundary poles with coefficient growth up to k^3; at the default grid's
// outermost radius 0.995 the truncation tail drops below certificate
// tolerances only around 12000 terms.
constexpr int kScenarioOrder = 12288;

Complex unit(double angle) { return std::polar(1.0, angle); }

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

DiskGrid bench_grid(const ScenarioOverrides& o) {
  const DiskGrid def;
  return DiskGrid(o.grid_radii.value_or(def.radii()),
                  o.grid_angles.value_or(def.angles_per_ring()));
}

int bench_order(const ScenarioOverrides& o) {
  const int order = o.order.value_or(kScenarioOrder);
  if (order < 1 || order > kMaxSpecOrder)
    throw OutOfRange("scenario order must lie in [1, 16384]");
  return order;
}

// The canonical slant map's own dilatation:
//   e^{2i sigma} (a' - z e^{i sigma}) / (1 - a' z e^{i sigma}).
DilatationSpec canonical_slant_dilatation(const SlantParams& p) {
  return DilatationSpec::moebius_of_rotation(2.0 * p.sigma(), p.a_prime,
                                             p.sigma(), -1);
}

// Partial result: verdict, optional skip reason, document body. run_scenario
// stamps the id and runtime.
struct Outcome {
  std::string verdict = "pass";
  std::string skip_reason;
  Json document = Json::object();
};

void require_pass(Outcome& out, bool ok) {
  if (!ok && out.verdict == "pass") out.verdict = "fail";
}

void mark_skipped(Outcome& out, const std::string& reason) {
  out.verdict = "skipped";
  out.skip_reason = reason;
}

// Eight sampled directions covering the half-circle of line slopes.
Json convexity_sweep(const HarmonicMap& f, const DiskGrid& grid,
                     Outcome& out) {
  Json sweep = Json::array();
  for (int k = 0; k < 8; ++k) {
    const double alpha = k * kPi / 8.0;
    const ConvexityCertificate cert = direction_convexity(f, alpha, grid);
    require_pass(out, cert.min_real_part >= -kScenarioCertTol);
    sweep.push_back(Json{{"alpha", alpha},
                         {"certificate",
                          certificate_json(cert, kScenarioCertTol)}});
  }
  return sweep;
}

Outcome scenario_th21(const ScenarioOverrides& o) {
  Outcome out;
  const Complex a = o.a.value_or(Complex(0.2, 0.1));
  const double gamma = o.gamma.value_or(0.3);
  const Complex b(0.1, -0.05);
  const double beta = o.beta.value_or(kPi / 2.0);
  const double inner1 = o.theta.value_or(0.7);
  const double inner2 = -0.4;
  const int order = bench_order(o);
  const DiskGrid grid = bench_grid(o);

  const SlantParams sp(a, gamma);
  const StripParams stp(b, beta);
  const DilatationSpec omega1 = DilatationSpec::moebius_of_rotation(
      2.0 * sp.sigma(), sp.a_prime, inner1, 1);
  const DilatationSpec omega2 = DilatationSpec::moebius_of_rotation(
      2.0 * stp.gamma_b, stp.b_prime, inner2, 1);
  const HarmonicMap f1 = halfplane_member(sp, omega1, order);
  const HarmonicMap f2 = strip_member(stp, omega2, order);
  const HarmonicMap conv = convolve(f1, f2);
  const double direction = -(gamma + sp.gamma_a + stp.gamma_b);

  out.document["inputs"] = Json{{"a", complex_json(a)},
                                {"gamma", gamma},
                                {"omega1", dilatation_spec_json(omega1)},
                                {"b", complex_json(b)},
                                {"beta", beta},
                                {"omega2", dilatation_spec_json(omega2)},
                                {"order", order},
                                {"direction", direction}};
  out.document["grid"] = grid_json(grid);

  const UnivalenceReport rep = local_univalence(conv, grid);
  out.document["reports"]["univalence"] = univalence_report_json(rep);
  if (!rep.locally_univalent) {
    mark_skipped(out, "convolution fails local univalence on the grid");
    return out;
  }
  const ConvexityCertificate cert = direction_convexity(conv, direction, grid);
  out.document["reports"]["direction_certificate"] =
      certificate_json(cert, kScenarioCertTol);
  require_pass(out, cert.min_real_part >= -kScenarioCertTol);
  return out;
}

Outcome scenario_th22(const ScenarioOverrides& o) {
  Outcome out;
  const Complex a1 = o.a.value_or(Complex(0.2, 0.3));
  const double gamma1 = o.gamma.value_or(0.2);
  const Complex a2(-0.1, 0.2);
  const double gamma2 = 0.5;
  const int order = bench_order(o);
  const DiskGrid grid = bench_grid(o);

  const SlantParams sp1(a1, gamma1);
  const SlantParams sp2(a2, gamma2);
  const DilatationSpec omega1 = canonical_slant_dilatation(sp1);
  const DilatationSpec omega2 = canonical_slant_dilatation(sp2);
  const HarmonicMap f1 = halfplane_member(sp1, omega1, order);
  const HarmonicMap f2 = halfplane_member(sp2, omega2, order);
  const HarmonicMap conv = convolve(f1, f2);
  const double direction = -(gamma1 + gamma2 + sp1.gamma_a + sp2.gamma_a);
  // Nonnegative value predicts a locally univalent convolution for this
  // canonical dilatation pair.
  const double condition_value = 1.0 + 3.0 * sp1.a_prime + 3.0 * sp2.a_prime +
                                 sp1.a_prime * sp2.a_prime;

  out.document["inputs"] = Json{{"a1", complex_json(a1)},
                                {"gamma1", gamma1},
                                {"a2", complex_json(a2)},
                                {"gamma2", gamma2},
                                {"order", order},
                                {"direction", direction},
                                {"condition_value", condition_value}};
  out.document["grid"] = grid_json(grid);

  const UnivalenceReport rep = local_univalence(conv, grid);
  out.document["reports"]["univalence"] = univalence_report_json(rep);
  if (!rep.locally_univalent) {
    mark_skipped(out, "convolution fails local univalence on the grid");
    return out;
  }
  const ConvexityCertificate cert = direction_convexity(conv, direction, grid);
  out.document["reports"]["direction_certificate"] =
      certificate_json(cert, kScenarioCertTol);
  require_pass(out, cert.min_real_part >= -kScenarioCertTol);
  return out;
}

Outcome scenario_th32(const ScenarioOverrides& o) {
  Outcome out;
  const Complex a = o.a.value_or(Complex(0.3, 0.2));
  const Complex lambda = unit(2.2);
  const Complex delta = unit(0.6);
  const double inner = o.theta.value_or(1.1);
  const int order = bench_order(o);
  const DiskGrid grid = bench_grid(o);

  const FLambdaDeltaParams p(a, lambda, delta);
  const DilatationSpec omega = DilatationSpec::moebius_of_rotation(
      2.0 * (std::arg(delta) + p.gamma_a), p.a_prime, inner, 1);
  const HarmonicMap F = f_lambda_delta_member(p, omega, order);

  out.document["inputs"] = Json{{"a", complex_json(a)},
                                {"lambda", complex_json(lambda)},
                                {"delta", complex_json(delta)},
                                {"omega", dilatation_spec_json(omega)},
                                {"order", order}};
  out.document["grid"] = grid_json(grid);

  const double residual = family_relation_residual(F, p);
  out.document["reports"]["relation_residual"] = residual;
  require_pass(out, residual <= kRelationTol);

  const UnivalenceReport rep = local_univalence(F, grid);
  out.document["reports"]["univalence"] = univalence_report_json(rep);
  require_pass(out, rep.locally_univalent);
  if (rep.locally_univalent)
    out.document["reports"]["direction_sweep"] = convexity_sweep(F, grid, out);
  out.document["tolerances"] = Json{{"relation_residual", kRelationTol},
                                    {"certificate_min", kScenarioCertTol}};
  return out;
}

Outcome scenario_th34(const ScenarioOverrides& o) {
  Outcome out;
  const Complex a = o.a.value_or(Complex(0.3, 0.2));
  const Complex lambda = unit(2.2);
  const Complex delta = unit(0.6);
  const int count = o.n.value_or(3);
  const int order = bench_order(o);
  const DiskGrid grid = bench_grid(o);
  if (count < 1) {
    mark_skipped(out, "combination needs at least one member");
    return out;
  }

  const FLambdaDeltaParams p(a, lambda, delta);
  std::mt19937_64 rng(o.seed);
  std::vector<HarmonicMap> members;
  std::vector<double> weights;
  Json member_inputs = Json::array();
  double total = 0.0;
  for (int j = 0; j < count; ++j) {
    const double inner = 2.0 * kPi * uniform01(rng);
    const int sign = rng() % 2 == 0 ? 1 : -1;
    const double raw_weight = 0.05 + uniform01(rng);
    const DilatationSpec omega = DilatationSpec::moebius_of_rotation(
        2.0 * (std::arg(delta) + p.gamma_a), p.a_prime, inner, sign);
    members.push_back(f_lambda_delta_member(p, omega, order));
    weights.push_back(raw_weight);
    total += raw_weight;
    member_inputs.push_back(Json{{"omega", dilatation_spec_json(omega)}});
  }
  for (std::size_t j = 0; j < weights.size(); ++j) {
    weights[j] /= total;
    member_inputs[j]["weight"] = weights[j];
  }
  const HarmonicMap combined = convex_combination(members, weights);

  out.document["inputs"] = Json{{"a", complex_json(a)},
                                {"lambda", complex_json(lambda)},
                                {"delta", complex_json(delta)},
                                {"members", std::move(member_inputs)},
                                {"order", order},
                                {"seed", o.seed}};
  out.document["grid"] = grid_json(grid);

  const double residual = family_relation_residual(combined, p);
  out.document["reports"]["relation_residual"] = residual;
  require_pass(out, residual <= kRelationTol);

  const UnivalenceReport rep = local_univalence(combined, grid);
  out.document["reports"]["univalence"] = univalence_report_json(rep);
  require_pass(out, rep.locally_univalent);
  if (rep.locally_univalent)
    out.document["reports"]["direction_sweep"] =
        convexity_sweep(combined, grid, out);
  out.document["tolerances"] = Json{{"relation_residual", kRelationTol},
                                    {"certificate_min", kScenarioCertTol}};
  return out;
}

Outcome scenario_th41(const ScenarioOverrides& o) {
  Outcome out;
  const Complex a_raw = o.a.value_or(Complex(0.25, 0.0));
  const double gamma = o.gamma.value_or(0.3);
  const double theta = o.theta.value_or(gamma + kPi);
  const int order = bench_order(o);
  const DiskGrid grid = bench_grid(o);

  if (std::abs(a_raw.imag()) > 1e-12) {
    mark_skipped(out, "this probe needs a real dilatation parameter a");
    return out;
  }
  const double a = a_raw.real();
  const double cosv = std::cos(theta - gamma);
  const bool cond1 = std::abs(cosv + 1.0) <= 1e-12 && a >= -1.0 / 3.0;
  const bool cond2 = cosv > -1.0 && a * a * (5.0 - 4.0 * cosv) < 1.0;
  out.document["inputs"] =
      Json{{"a", a},          {"gamma", gamma},
           {"theta", theta},  {"order", order},
           {"cond1", cond1},  {"cond2", cond2}};
  out.document["grid"] = grid_json(grid);
  if (!cond1 && !cond2) {
    mark_skipped(out, "parameters satisfy neither sufficient condition");
    return out;
  }

  const SlantParams sp(Complex(a, 0.0), gamma);
  const DilatationSpec omega =
      DilatationSpec::moebius_of_rotation(2.0 * gamma, a, theta, 1);
  const HarmonicMap f = halfplane_member(sp, omega, order);
  const HarmonicMap conv = convolve(right_halfplane_f0(order), f);

  const UnivalenceReport rep = local_univalence(conv, grid);
  out.document["reports"]["univalence"] = univalence_report_json(rep);
  require_pass(out, rep.max_dilatation_modulus < 1.0);
  require_pass(out, rep.locally_univalent);
  if (rep.locally_univalent) {
    const ConvexityCertificate cert = direction_convexity(conv, -gamma, grid);
    out.document["reports"]["direction_certificate"] =
        certificate_json(cert, kScenarioCertTol);
    require_pass(out, cert.min_real_part >= -kScenarioCertTol);
  }
  return out;
}

Outcome scenario_th42(const ScenarioOverrides& o) {
  Outcome out;
  const Complex a1 = o.a.value_or(Complex(0.2, 0.0));
  const double gamma1 = o.gamma.value_or(0.4);
  const double gamma2 = 0.7;
  const double theta = o.theta.value_or(0.9);
  const int n = o.n.value_or(1);
  const double beta = o.beta.value_or(kPi / 2.0);
  const int order = bench_order(o);
  const DiskGrid grid = bench_grid(o);
  if (n < 1) {
    mark_skipped(out, "monomial degree n must be >= 1");
    return out;
  }

  const SlantParams sp1(a1, gamma1);
  const double modulus = std::abs(a1 + 1.0);
  const double modulus_floor = 2.0 * n / (n + 2.0);
  out.document["inputs"] = Json{{"a1", complex_json(a1)},
                                {"gamma1", gamma1},
                                {"gamma2", gamma2},
                                {"theta", theta},
                                {"n", n},
                                {"beta", beta},
                                {"order", order},
                                {"modulus", modulus},
                                {"modulus_floor", modulus_floor}};
  out.document["grid"] = grid_json(grid);
  if (!(modulus >= modulus_floor && modulus < 2.0)) {
    mark_skipped(out, "|a1 + 1| lies outside [2n/(n+2), 2)");
    return out;
  }

  const HarmonicMap f1 =
      halfplane_member(sp1, canonical_slant_dilatation(sp1), order);
  const DilatationSpec mono = DilatationSpec::monomial(theta, n);

  // First conclusion: partner in a straight half-plane family.
  {
    const SlantParams sp2(Complex(0.0, 0.0), gamma2);
    const HarmonicMap conv =
        convolve(f1, halfplane_member(sp2, mono, order));
    const UnivalenceReport rep = local_univalence(conv, grid);
    Json block{{"univalence", univalence_report_json(rep)}};
    require_pass(out, rep.locally_univalent);
    if (rep.locally_univalent) {
      const ConvexityCertificate cert = direction_convexity(
          conv, -(gamma1 + sp1.gamma_a + gamma2), grid);
      block["direction_certificate"] =
          certificate_json(cert, kScenarioCertTol);
      require_pass(out, cert.min_real_part >= -kScenarioCertTol);
    }
    out.document["reports"]["halfplane_case"] = std::move(block);
  }

  // Second conclusion: partner in a straight strip family.
  {
    const StripParams sp2(Complex(0.0, 0.0), beta);
    const HarmonicMap conv = convolve(f1, strip_member(sp2, mono, order));
    const UnivalenceReport rep = local_univalence(conv, grid);
    Json block{{"univalence", univalence_report_json(rep)}};
    require_pass(out, rep.locally_univalent);
    if (rep.locally_univalent) {
      const ConvexityCertificate cert =
          direction_convexity(conv, -(gamma1 + sp1.gamma_a), grid);
      block["direction_certificate"] =
          certificate_json(cert, kScenarioCertTol);
      require_pass(out, cert.min_real_part >= -kScenarioCertTol);
    }
    out.document["reports"]["strip_case"] = std::move(block);
  }
  return out;
}

Outcome scenario_th43(const ScenarioOverrides& o, Case43 kase) {
  Outcome out;
  const Complex a1 = o.a.value_or(Complex(0.5, 0.0));
  const Complex a2(0.2, 0.0);
  const double gamma1 = o.gamma.value_or(0.0);
  const double gamma2 = 0.0;
  const int order = bench_order(o);
  const DiskGrid grid = bench_grid(o);

  const SlantParams sp1(a1, gamma1);
  const SlantParams sp2(a2, gamma2);
  const double A = sp1.a_prime;
  const double B = sp2.a_prime;
  const bool condition = theorem43_condition_check(A, B, kase);
  const double theta =
      kase == Case43::MinusOne ? sp2.sigma() + kPi : sp2.sigma();

  out.document["inputs"] = Json{
      {"a1", complex_json(a1)},   {"gamma1", gamma1},
      {"a2", complex_json(a2)},   {"gamma2", gamma2},
      {"a1_prime", A},            {"a2_prime", B},
      {"theta", theta},           {"order", order},
      {"case", kase == Case43::MinusOne ? "minus_one" : "plus_one"},
      {"condition_holds", condition}};
  out.document["grid"] = grid_json(grid);
  if (!condition) {
    mark_skipped(out, "case inequality fails for these a1', a2'");
    return out;
  }

  const Theorem43Cubic cubic = theorem43_cubic(A, B, kase);
  const SchurCohnReport zeros = count_zeros_in_disk(cubic.poly());
  const int want_inside = kase == Case43::MinusOne ? 2 : 3;
  const int want_boundary = kase == Case43::MinusOne ? 1 : 0;
  Json cubic_json{{"c2", cubic.c2},
                  {"c1", cubic.c1},
                  {"c0", cubic.c0},
                  {"zeros_inside", zeros.zeros_inside},
                  {"zeros_on_boundary", zeros.zeros_on_boundary},
                  {"zeros_outside", zeros.zeros_outside},
                  {"degenerate", zeros.degenerate}};
  if (kase == Case43::MinusOne)
    cubic_json["residual_at_one"] = std::abs(cubic.poly()(Complex(1.0, 0.0)));
  out.document["reports"]["cubic"] = std::move(cubic_json);
  require_pass(out, zeros.zeros_inside == want_inside &&
                        zeros.zeros_on_boundary == want_boundary &&
                        zeros.zeros_outside == 0);

  const HarmonicMap f1 =
      halfplane_member(sp1, canonical_slant_dilatation(sp1), order);
  const DilatationSpec omega2 = DilatationSpec::moebius_of_rotation(
      2.0 * sp2.sigma(), B, theta, 1);
  const HarmonicMap f2 = halfplane_member(sp2, omega2, order);
  const HarmonicMap conv = convolve(f1, f2);

  const UnivalenceReport rep = local_univalence(conv, grid);
  out.document["reports"]["univalence"] = univalence_report_json(rep);
  require_pass(out, rep.max_dilatation_modulus <= 1.0 - kDilatationSupMargin);
  require_pass(out, rep.locally_univalent);
  if (rep.locally_univalent) {
    const double direction =
        -(gamma1 + gamma2 + sp1.gamma_a + sp2.gamma_a);
    const ConvexityCertificate cert =
        direction_convexity(conv, direction, grid);
    out.document["reports"]["direction_certificate"] =
        certificate_json(cert, kScenarioCertTol);
    require_pass(out, cert.min_real_part >= -kScenarioCertTol);
  }
  out.document["tolerances"] =
      Json{{"dilatation_sup_margin", kDilatationSupMargin},
           {"certificate_min", kScenarioCertTol}};
  return out;
}

struct RegistryEntry {
  const char* id;
  Outcome (*fn)(const ScenarioOverrides&);
};

Outcome scenario_th43_case1(const ScenarioOverrides& o) {
  return scenario_th43(o, Case43::MinusOne);
}
Outcome scenario_th43_case2(const ScenarioOverrides& o) {
  return scenario_th43(o, Case43::PlusOne);
}

constexpr RegistryEntry kRegistry[] = {
    {"th2.1", scenario_th21},
    {"th2.2", scenario_th22},
    {"th3.2", scenario_th32},
    {"th3.4", scenario_th34},
    {"th4.1", scenario_th41},
    {"th4.2", scenario_th42},
    {"th4.3-case1", scenario_th43_case1},
    {"th4.3-case2", scenario_th43_case2},
};

}  // namespace

Json grid_json(const DiskGrid& grid) {
  return Json{{"radii", grid.radii()},
              {"angles_per_ring", grid.angles_per_ring()}};
}

Json univalence_report_json(const UnivalenceReport& r) {
  return Json{
      {"locally_univalent", r.locally_univalent},
      {"min_jacobian", r.min_jacobian},
      {"min_jacobian_witness", complex_json(r.min_jacobian_witness)},
      {"max_dilatation_modulus", r.max_dilatation_modulus},
      {"max_dilatation_witness", complex_json(r.max_dilatation_witness)}};
}

Json certificate_json(const ConvexityCertificate& c, double tol) {
  return Json{{"mu", c.mu},
              {"nu", c.nu},
              {"min_real_part", c.min_real_part},
              {"witness", complex_json(c.witness)},
              {"tolerance", tol},
              {"passes", c.min_real_part >= -tol}};
}

std::vector<std::string> scenario_ids() {
  std::vector<std::string> ids;
  for (const RegistryEntry& e : kRegistry) ids.emplace_back(e.id);
  return ids;
}

ScenarioResult run_scenario(const std::string& id,
                            const ScenarioOverrides& overrides) {
  for (const RegistryEntry& e : kRegistry) {
    if (id != e.id) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out = e.fn(overrides);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    ScenarioResult result;
    result.scenario_id = id;
    result.verdict = out.verdict;
    result.skip_reason = out.skip_reason;
    result.document = std::move(out.document);
    result.document["scenario_id"] = id;
    result.document["verdict"] = result.verdict;
    if (!result.skip_reason.empty())
      result.document["skip_reason"] = result.skip_reason;
    result.document["runtime_seconds"] = seconds;
    return result;
  }
  throw UnknownScenario("no scenario named '" + id + "'");
}

}  // namespace harmconv
