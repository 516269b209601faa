// Acceptance gate: one line per criterion, exit 0 only when every criterion
// passes. Each criterion draws its own seeded parameters, so reruns are
// bit-reproducible.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "harmconv/canonical.hpp"
#include "harmconv/errors.hpp"
#include "harmconv/geometry.hpp"
#include "harmconv/harmonic.hpp"
#include "harmconv/schur_cohn.hpp"
#include "harmconv/series.hpp"

#include "test_support.hpp"

using harmconv::Complex;
using harmconv::DilatationSpec;
using harmconv::DiskGrid;
using harmconv::HarmonicMap;
using harmconv::Polynomial;
using harmconv::TruncatedSeries;
using test_support::complex_in_square;
using test_support::uniform;
using test_support::uniform01;

namespace {

constexpr double kPi = 3.14159265358979323846;
// Truncation order that keeps boundary-pole tails below certificate
// tolerances at the default grid's outermost radius.
constexpr int kCertOrder = 12288;

struct Result {
  bool ok = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

double max_part_diff(const HarmonicMap& f, const HarmonicMap& g) {
  return std::max(test_support::max_coeff_diff(f.h(), g.h()),
                  test_support::max_coeff_diff(f.g(), g.g()));
}

// --- criterion 1: algebra identities ----------------------------------------

Result criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(101);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int order = 48;
    const HarmonicMap f1 = test_support::random_class_h(rng, order);
    const HarmonicMap f2 = test_support::random_class_h(rng, order);
    const Complex mu1 = test_support::unit(uniform(rng, -kPi, kPi));
    const Complex mu2 = test_support::unit(uniform(rng, -kPi, kPi));

    // dilatation of a rotated map: mu^2 omega(mu z)
    const TruncatedSeries om = dilatation(f1);
    const TruncatedSeries om_rot = dilatation(rotate(f1, mu1));
    for (int j = 0; j < 3; ++j) {
      const Complex z = std::polar(uniform(rng, 0.05, 0.5),
                                   uniform(rng, -kPi, kPi));
      const Complex want = mu1 * mu1 * evaluate(om, mu1 * z);
      worst = std::max(worst, std::abs(evaluate(om_rot, z) - want));
    }

    // rotations distribute over convolution with multiplied angles
    const HarmonicMap lhs = convolve(rotate(f1, mu1), rotate(f2, mu2));
    const HarmonicMap rhs = rotate(convolve(f1, f2), mu1 * mu2);
    worst = std::max(worst, max_part_diff(lhs, rhs));

    // z (h*H)' = h * (z H')
    const TruncatedSeries h = test_support::random_series(rng, order);
    const TruncatedSeries H = test_support::random_series(rng, order);
    const TruncatedSeries left =
        multiply_by_z(differentiate(hadamard(h, H)));
    const TruncatedSeries right = hadamard(h, multiply_by_z(differentiate(H)));
    worst = std::max(worst, test_support::max_coeff_diff(left, right));
  }
  const double dt = seconds_since(t0);
  Result r;
  r.ok = worst <= 1e-10 && dt < 10.0;
  r.detail = "100 pairs, max err " + fmt(worst) + ", " + fmt(dt) + "s";
  return r;
}

// --- criterion 2: canonical slant coefficients -------------------------------

Result criterion2() {
  std::mt19937_64 rng(202);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const Complex a = complex_in_square(rng, 0.6);
    const double gamma = uniform(rng, -kPi, kPi);
    const harmconv::SlantParams p(a, gamma);
    const int order = 64;
    const HarmonicMap f = slanted_halfplane_canonical(p, order);
    const double sigma = p.sigma();
    const Complex back = test_support::unit(-2.0 * sigma);
    for (int k = 1; k <= order; ++k) {
      const Complex want =
          (1.0 + p.a_prime) * test_support::unit((k - 1) * sigma);
      worst = std::max(worst, std::abs(f.h().coeff(k) + back * f.g().coeff(k) -
                                       want));
    }
    worst = std::max(
        worst, std::abs(f.g().coeff(1) -
                        p.a_prime * test_support::unit(2.0 * sigma)));
  }
  Result r;
  r.ok = worst <= 1e-12;
  r.detail = "50 draws, max err " + fmt(worst);
  return r;
}

// --- criterion 3: convolution dilatation, two routes --------------------------

Result criterion3() {
  std::mt19937_64 rng(303);
  const int order = 160;
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const double a = uniform(rng, -0.8, 0.8);
    HarmonicMap f = [&] {
      const double inner = uniform(rng, 0.0, 2.0 * kPi);
      const int sign = (rng() & 1) ? 1 : -1;
      if (trial % 2 == 0) {
        const harmconv::SlantParams p(complex_in_square(rng, 0.3),
                                      uniform(rng, -0.5, 0.5));
        return halfplane_member(
            p,
            DilatationSpec::moebius_of_rotation(2.0 * p.sigma(), p.a_prime,
                                                inner, sign),
            order);
      }
      const harmconv::StripParams p(complex_in_square(rng, 0.3),
                                    kPi / 2.0 + uniform(rng, -0.5, 0.5));
      return strip_member(
          p,
          DilatationSpec::moebius_of_rotation(2.0 * p.gamma_b, p.b_prime,
                                              inner, sign),
          order);
    }();

    const TruncatedSeries direct = convolution_dilatation_f_a0(a, f);
    const HarmonicMap fa0 = slanted_halfplane_canonical(
        harmconv::SlantParams(Complex(a, 0.0), 0.0), order);
    const TruncatedSeries via_conv = harmconv::dilatation(convolve(fa0, f));
    for (int i = 0; i < 8; ++i) {
      const double radius = 0.075 * (i + 1);
      for (int j = 0; j < 125; ++j) {
        const Complex z = std::polar(radius, 2.0 * kPi * j / 125.0);
        worst = std::max(worst,
                         std::abs(evaluate(direct, z) - evaluate(via_conv, z)));
      }
    }
  }

  // a = 0 against the closed form z(1+2z)/(2+z)
  const HarmonicMap f0 = harmconv::right_halfplane_f0(order);
  const TruncatedSeries q0 = convolution_dilatation_f_a0(0.0, f0);
  double worst0 = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double radius = 0.075 * (i + 1);
    for (int j = 0; j < 125; ++j) {
      const Complex z = std::polar(radius, 2.0 * kPi * j / 125.0);
      const Complex want = z * (1.0 + 2.0 * z) / (2.0 + z);
      worst0 = std::max(worst0, std::abs(evaluate(q0, z) - want));
    }
  }

  Result r;
  r.ok = worst <= 1e-8 && worst0 <= 1e-10;
  r.detail = "20 draws max err " + fmt(worst) + ", closed form err " +
             fmt(worst0);
  return r;
}

// --- criterion 4: zero counting against the root oracle ----------------------

Result criterion4() {
  std::mt19937_64 rng(404);
  int degenerate = 0;
  int mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int degree = 1 + static_cast<int>(rng() % 6);
    std::vector<Complex> c(degree + 1);
    for (auto& v : c) v = complex_in_square(rng, 1.0);
    if (std::abs(c[degree]) < 0.1) c[degree] += Complex(0.5, 0.5);
    const Polynomial p(c);

    const harmconv::SchurCohnReport report = count_zeros_in_disk(p);
    if (report.degenerate) ++degenerate;

    int inside = 0, boundary = 0, outside = 0;
    for (const Complex& root : roots_oracle(p)) {
      const double m = std::abs(root);
      if (m < 1.0 - harmconv::kBoundaryTol)
        ++inside;
      else if (m > 1.0 + harmconv::kBoundaryTol)
        ++outside;
      else
        ++boundary;
    }
    if (report.zeros_inside != inside ||
        report.zeros_on_boundary != boundary ||
        report.zeros_outside != outside)
      ++mismatches;
  }
  Result r;
  r.ok = mismatches == 0;
  r.detail = "1000 polynomials, " + std::to_string(mismatches) +
             " mismatches, " + std::to_string(degenerate) +
             " resolved degenerate steps";
  return r;
}

// --- criterion 5: the cubic dilatation family --------------------------------

Result criterion5() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(505);
  const DiskGrid grid;
  const double r_max = grid.radii().back();
  const double eps = (1.0 - r_max) / 50.0;

  // case 1: boundary root pinned at z = 1, everything else strictly inside
  double worst_t1 = 0.0;
  double worst_inner = 0.0;
  double worst_sup = 0.0;
  for (int found = 0; found < 100;) {
    const double a1 = uniform(rng, -0.95, 0.95);
    const double a2 = uniform(rng, -0.95, 0.95);
    if (1.0 + 3.0 * a1 + 3.0 * a2 + a1 * a2 < 1e-3) continue;
    ++found;
    const harmconv::Theorem43Cubic cubic =
        theorem43_cubic(a1, a2, harmconv::Case43::MinusOne);
    const Polynomial t = cubic.poly();
    worst_t1 = std::max(worst_t1, std::abs(t(Complex(1.0, 0.0))));

    std::vector<Complex> roots = roots_oracle(t);
    std::size_t nearest = 0;
    for (std::size_t j = 1; j < roots.size(); ++j)
      if (std::abs(roots[j] - 1.0) < std::abs(roots[nearest] - 1.0))
        nearest = j;
    for (std::size_t j = 0; j < roots.size(); ++j)
      if (j != nearest)
        worst_inner = std::max(worst_inner, std::abs(roots[j]));

    const Polynomial t_star(reciprocal(t));
    double sup = 0.0;
    for (const Complex& z : grid.points())
      sup = std::max(sup, std::abs(t(z)) / std::abs(t_star(z)));
    worst_sup = std::max(worst_sup, sup);
  }
  const bool case1_ok = worst_t1 <= 1e-12 &&
                        worst_inner < 1.0 - 1e-9 + 1e-6 &&
                        worst_sup <= 1.0 - eps;

  // case 2: one reduction step against the closed forms
  double worst_b = 0.0;
  double worst_z0 = 0.0;
  double worst_z0_mod = 0.0;
  bool signs_ok = true;
  for (int found = 0; found < 100;) {
    const double a1 = uniform(rng, -0.95, 0.95);
    const double a2 = uniform(rng, -0.95, 0.95);
    const double cond = 1.0 + 3.0 * a1 + 3.0 * a1 * a2 + a1 * a1 * a2;
    if (std::abs(cond) < 1e-3) continue;
    ++found;
    const harmconv::Theorem43Cubic cubic =
        theorem43_cubic(a1, a2, harmconv::Case43::PlusOne);
    const harmconv::CohnStep step = cohn_step(cubic.poly());
    const Polynomial& t1 = step.next;

    const double b2 = 1.0 - (a1 * a2) * (a1 * a2);
    const double b1 =
        (1.0 - a1) * (1.0 + 3.0 * a2 + 3.0 * a1 * a2 + a1 * a2 * a2) / 2.0;
    const double b0 =
        (1.0 + a2) * (1.0 - 3.0 * a1 + 3.0 * a1 * a2 - a1 * a1 * a2) / 2.0;
    worst_b = std::max({worst_b, std::abs(t1.coeffs()[2] - b2),
                        std::abs(t1.coeffs()[1] - b1),
                        std::abs(t1.coeffs()[0] - b0)});

    const double gap = b2 * b2 - b0 * b0;
    const double product = (1.0 - a1) * (1.0 - a2) / 4.0 *
                           (3.0 + a2 + a1 * a2 + 3.0 * a1 * a2 * a2) * cond;
    if ((gap > 0.0) != (product > 0.0)) signs_ok = false;

    const Complex z0 = -t1.coeffs()[1] / (t1.coeffs()[2] + t1.coeffs()[0]);
    const double z0_closed =
        -(1.0 + 3.0 * a2 + 3.0 * a1 * a2 + a1 * a2 * a2) /
        (3.0 + a2 + a1 * a2 + 3.0 * a1 * a2 * a2);
    worst_z0 = std::max(worst_z0, std::abs(z0 - z0_closed));
    worst_z0_mod = std::max(worst_z0_mod, std::abs(z0));
  }
  const bool case2_ok =
      worst_b <= 1e-12 && signs_ok && worst_z0 <= 1e-10 && worst_z0_mod < 1.0;

  const double dt = seconds_since(t0);
  Result r;
  r.ok = case1_ok && case2_ok && dt < 30.0;
  r.detail = "case1 |t(1)| " + fmt(worst_t1) + ", inner " + fmt(worst_inner) +
             ", grid sup " + fmt(worst_sup) + "; case2 coeff err " +
             fmt(worst_b) + ", z0 err " + fmt(worst_z0) + ", max |z0| " +
             fmt(worst_z0_mod) + ", " + fmt(dt) + "s";
  return r;
}

// --- criteria 6 and 7: certified convexity directions ------------------------

Result criterion6() {
  std::mt19937_64 rng(606);
  const DiskGrid grid;
  int skipped = 0;
  double worst = 1.0;

  // slanted half-plane against strip
  for (int found = 0, attempts = 0; found < 10; ++attempts) {
    if (attempts >= 30) {
      Result r;
      r.detail = "too few univalent half-plane/strip draws";
      return r;
    }
    const harmconv::SlantParams sp(complex_in_square(rng, 0.3),
                                   uniform(rng, -0.5, 0.5));
    const harmconv::StripParams stp(complex_in_square(rng, 0.3),
                                    kPi / 2.0 + uniform(rng, -0.5, 0.5));
    const DilatationSpec omega1 = DilatationSpec::moebius_of_rotation(
        2.0 * sp.sigma(), sp.a_prime, uniform(rng, 0.0, 2.0 * kPi),
        (rng() & 1) ? 1 : -1);
    const DilatationSpec omega2 = DilatationSpec::moebius_of_rotation(
        2.0 * stp.gamma_b, stp.b_prime, uniform(rng, 0.0, 2.0 * kPi),
        (rng() & 1) ? 1 : -1);
    const HarmonicMap conv =
        convolve(halfplane_member(sp, omega1, kCertOrder),
                 strip_member(stp, omega2, kCertOrder));
    if (!local_univalence(conv, grid).locally_univalent) {
      ++skipped;
      continue;
    }
    ++found;
    const harmconv::ConvexityCertificate cert =
        direction_convexity(conv, -(sp.sigma() + stp.gamma_b), grid);
    worst = std::min(worst, cert.min_real_part);
  }

  // two slanted half-planes with their canonical dilatations
  for (int found = 0, attempts = 0; found < 10; ++attempts) {
    if (attempts >= 30) {
      Result r;
      r.detail = "too few univalent half-plane pair draws";
      return r;
    }
    const harmconv::SlantParams sp1(complex_in_square(rng, 0.3),
                                    uniform(rng, -0.5, 0.5));
    const harmconv::SlantParams sp2(complex_in_square(rng, 0.3),
                                    uniform(rng, -0.5, 0.5));
    const DilatationSpec omega1 = DilatationSpec::moebius_of_rotation(
        2.0 * sp1.sigma(), sp1.a_prime, sp1.sigma(), -1);
    const DilatationSpec omega2 = DilatationSpec::moebius_of_rotation(
        2.0 * sp2.sigma(), sp2.a_prime, sp2.sigma(), -1);
    const HarmonicMap conv =
        convolve(halfplane_member(sp1, omega1, kCertOrder),
                 halfplane_member(sp2, omega2, kCertOrder));
    if (!local_univalence(conv, grid).locally_univalent) {
      ++skipped;
      continue;
    }
    ++found;
    const harmconv::ConvexityCertificate cert =
        direction_convexity(conv, -(sp1.sigma() + sp2.sigma()), grid);
    worst = std::min(worst, cert.min_real_part);
  }

  Result r;
  r.ok = worst >= -1e-6;
  r.detail = "20 certified draws, min " + fmt(worst) + ", " +
             std::to_string(skipped) + " skipped as non-univalent";
  return r;
}

Result criterion7() {
  std::mt19937_64 rng(707);
  const DiskGrid grid;
  double worst = 1.0;
  int skipped = 0;

  auto draw_params = [&] {
    return harmconv::FLambdaDeltaParams(
        complex_in_square(rng, 0.35),
        test_support::unit(uniform(rng, 0.0, 2.0 * kPi)),
        test_support::unit(uniform(rng, 0.0, 2.0 * kPi)));
  };
  auto draw_member = [&](const harmconv::FLambdaDeltaParams& p) {
    const DilatationSpec omega = DilatationSpec::moebius_of_rotation(
        2.0 * (std::arg(p.delta) + p.gamma_a), p.a_prime,
        uniform(rng, 0.0, 2.0 * kPi), (rng() & 1) ? 1 : -1);
    return f_lambda_delta_member(p, omega, kCertOrder);
  };
  auto sweep_min = [&](const HarmonicMap& f) {
    double lo = 1.0;
    for (int k = 0; k < 8; ++k)
      lo = std::min(lo,
                    direction_convexity(f, k * kPi / 8.0, grid).min_real_part);
    return lo;
  };

  for (int found = 0, attempts = 0; found < 10; ++attempts) {
    if (attempts >= 30) {
      Result r;
      r.detail = "too few univalent family members";
      return r;
    }
    const harmconv::FLambdaDeltaParams p = draw_params();
    const HarmonicMap f = draw_member(p);
    if (!local_univalence(f, grid).locally_univalent) {
      ++skipped;
      continue;
    }
    ++found;
    worst = std::min(worst, sweep_min(f));
  }

  // convex combination within one family
  const harmconv::FLambdaDeltaParams p = draw_params();
  std::vector<HarmonicMap> members;
  std::vector<double> weights;
  double total = 0.0;
  for (int j = 0; j < 3; ++j) {
    members.push_back(draw_member(p));
    weights.push_back(0.05 + uniform01(rng));
    total += weights.back();
  }
  for (double& w : weights) w /= total;
  const HarmonicMap combined = convex_combination(members, weights);
  const double residual = family_relation_residual(combined, p);
  double combo_min = 1.0;
  bool combo_univalent = local_univalence(combined, grid).locally_univalent;
  if (combo_univalent) combo_min = sweep_min(combined);

  Result r;
  r.ok = worst >= -1e-6 && combo_univalent && combo_min >= -1e-6 &&
         residual <= 1e-10;
  r.detail = "10 members min " + fmt(worst) + ", combination min " +
             fmt(combo_min) + ", relation residual " + fmt(residual) + ", " +
             std::to_string(skipped) + " skipped";
  return r;
}

// --- criterion 8: negative controls ------------------------------------------

Result criterion8() {
  const TruncatedSeries z_squared =
      TruncatedSeries::monomial(2, Complex(1.0, 0.0), 4);
  const harmconv::ConvexityCertificate best = rz_search(z_squared, DiskGrid());

  const HarmonicMap f0 = harmconv::right_halfplane_f0(2048);
  const HarmonicMap flipped(scale(Complex(-1.0, 0.0), f0.h()),
                            scale(Complex(-1.0, 0.0), f0.g()),
                            harmconv::ClassTag::Unconstrained);
  std::vector<double> radii;
  for (int i = 1; i <= 16; ++i) radii.push_back(0.9 * i / 16.0);
  const double margin =
      halfplane_membership(flipped, Complex(0.0, 0.0), 0.0,
                           DiskGrid(radii, 128));

  Result r;
  r.ok = best.min_real_part < -1e-3 && margin < 0.0;
  r.detail = "z^2 best certificate " + fmt(best.min_real_part) +
             ", flipped half-plane margin " + fmt(margin);
  return r;
}

// --- criterion 9: the real-part kernel inequality ----------------------------

Result criterion9() {
  std::mt19937_64 rng(909);
  const DiskGrid grid;
  double lowest = 1e300;
  auto draw_spec = [&] {
    if (rng() & 1)
      return DilatationSpec::monomial(uniform(rng, -kPi, kPi),
                                      1 + static_cast<int>(rng() % 4));
    return DilatationSpec::moebius_of_rotation(
        uniform(rng, -kPi, kPi), uniform(rng, -0.9, 0.9),
        uniform(rng, -kPi, kPi), (rng() & 1) ? 1 : -1);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const DilatationSpec w1 = draw_spec();
    const DilatationSpec w2 = draw_spec();
    const double theta = uniform(rng, -kPi, kPi);
    lowest = std::min(lowest, fhm_realpart_check(w1, w2, theta, grid));
  }
  Result r;
  r.ok = lowest > 0.0;
  r.detail = "200 triples, smallest real part " + fmt(lowest);
  return r;
}

}  // namespace

int main() {
  Result (*criteria[])() = {criterion1, criterion2, criterion3,
                            criterion4, criterion5, criterion6,
                            criterion7, criterion8, criterion9};
  bool all_ok = true;
  for (std::size_t i = 0; i < sizeof(criteria) / sizeof(criteria[0]); ++i) {
    Result r;
    try {
      r = criteria[i]();
    } catch (const std::exception& e) {
      r.ok = false;
      r.detail = std::string("exception: ") + e.what();
    }
    all_ok = all_ok && r.ok;
    std::printf("criterion %zu: %s (%s)\n", i + 1, r.ok ? "PASS" : "FAIL",
                r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%s\n", all_ok ? "acceptance: all criteria passed"
                             : "acceptance: FAILURES present");
  return all_ok ? 0 : 1;
}
