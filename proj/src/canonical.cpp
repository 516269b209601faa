#include "harmconv/canonical.hpp"

#include <cmath>
#include <numbers>

namespace harmconv {

namespace {

void require_in_disk(Complex a, const char* what) {
  if (!(std::abs(a) < 1.0)) throw NotInDisk(std::string(what) + " needs |.| < 1");
}

Complex unit(double angle) { return std::polar(1.0, angle); }

// Shared construction step: given the combined series relation
//   h' + e^{-2i phase} g' = rhs   with   g' = omega h',
// solve for h', g' and integrate. rhs has order N-1.
HarmonicMap integrate_member(const TruncatedSeries& rhs,
                             const DilatationSpec& omega, double phase,
                             Complex expected_origin, int order) {
  if (order < 1) throw OutOfRange("member construction needs order >= 1");
  const Complex w0 = omega.at_origin();
  if (std::abs(w0 - expected_origin) > kOriginConsistencyTol)
    throw InconsistentDilatationAtOrigin(
        "dilatation at 0 conflicts with family parameters");
  const TruncatedSeries omega_series = omega.to_series(order - 1);
  const TruncatedSeries one = TruncatedSeries::monomial(0, 1.0, order - 1);
  const TruncatedSeries den =
      linear_combine(1.0, one, unit(-2.0 * phase), omega_series);
  const TruncatedSeries hp = series_divide(rhs, den);
  const TruncatedSeries gp = cauchy_product(omega_series, hp);
  return HarmonicMap(antidifferentiate(hp), antidifferentiate(gp), ClassTag::H);
}

}  // namespace

AuxParams aux_params(Complex a) {
  require_in_disk(a, "aux_params");
  return AuxParams{std::abs(1.0 + a) - 1.0, std::arg(1.0 + std::conj(a))};
}

SlantParams::SlantParams(Complex a_, double gamma_) : a(a_) {
  require_in_disk(a, "slant parameter a");
  gamma = reduce_angle(gamma_);
  const AuxParams aux = aux_params(a);
  a_prime = aux.a_prime;
  gamma_a = aux.gamma_a;
}

StripParams::StripParams(Complex b_, double beta_) : b(b_), beta(beta_) {
  require_in_disk(b, "strip parameter b");
  if (!(beta > 0.0 && beta < std::numbers::pi))
    throw OutOfRange("strip aperture beta must lie in (0, pi)");
  const AuxParams aux = aux_params(b);
  b_prime = aux.a_prime;
  gamma_b = aux.gamma_a;
}

FLambdaDeltaParams::FLambdaDeltaParams(Complex a_, Complex lambda_,
                                       Complex delta_)
    : a(a_), lambda(lambda_), delta(delta_) {
  require_in_disk(a, "family parameter a");
  if (std::abs(std::abs(lambda) - 1.0) > kUnitModulusTol)
    throw NotUnimodular("lambda must be unimodular");
  if (std::abs(std::abs(delta) - 1.0) > kUnitModulusTol)
    throw NotUnimodular("delta must be unimodular");
  const AuxParams aux = aux_params(a);
  a_prime = aux.a_prime;
  gamma_a = aux.gamma_a;
}

HarmonicMap slanted_halfplane_canonical(const SlantParams& p, int order) {
  if (order < 1) throw OutOfRange("canonical map needs order >= 1");
  const double sigma = p.sigma();
  std::vector<Complex> h(order + 1, Complex(0.0));
  std::vector<Complex> g(order + 1, Complex(0.0));
  const Complex twist = unit(2.0 * sigma);
  for (int k = 1; k <= order; ++k) {
    const Complex base = unit((k - 1) * sigma);
    const double sum = 1.0 + p.a_prime;
    const double diff = (1.0 - p.a_prime) * k;
    h[k] = 0.5 * (sum + diff) * base;
    g[k] = 0.5 * (sum - diff) * twist * base;
  }
  const ClassTag tag =
      std::abs(g[1]) <= kClassTagTol ? ClassTag::H0 : ClassTag::H;
  return HarmonicMap(TruncatedSeries(std::move(h)), TruncatedSeries(std::move(g)),
                     tag);
}

HarmonicMap right_halfplane_f0(int order) {
  return slanted_halfplane_canonical(SlantParams(Complex(0.0), 0.0), order);
}

HarmonicMap halfplane_member(const SlantParams& p, const DilatationSpec& omega,
                             int order) {
  const double sigma = p.sigma();
  // d/dz of (1+a') z / (1 - e^{i sigma} z): (1+a') / (1 - e^{i sigma} z)^2.
  const TruncatedSeries geo = TruncatedSeries::geometric(unit(sigma), order - 1);
  const TruncatedSeries rhs = scale(1.0 + p.a_prime, cauchy_product(geo, geo));
  const Complex expected = p.a_prime * unit(2.0 * sigma);
  return integrate_member(rhs, omega, sigma, expected, order);
}

HarmonicMap strip_member(const StripParams& p, const DilatationSpec& omega,
                         int order) {
  // (1+b') / ((1 + z e^{i(beta+gamma_b)})(1 + z e^{-i(beta-gamma_b)})).
  const TruncatedSeries geo1 =
      TruncatedSeries::geometric(-unit(p.beta + p.gamma_b), order - 1);
  const TruncatedSeries geo2 =
      TruncatedSeries::geometric(-unit(-(p.beta - p.gamma_b)), order - 1);
  const TruncatedSeries rhs = scale(1.0 + p.b_prime, cauchy_product(geo1, geo2));
  const Complex expected = p.b_prime * unit(2.0 * p.gamma_b);
  return integrate_member(rhs, omega, p.gamma_b, expected, order);
}

HarmonicMap f_lambda_delta_member(const FLambdaDeltaParams& p,
                                  const DilatationSpec& omega, int order) {
  const Complex factor = p.delta * unit(p.gamma_a);
  const TruncatedSeries geo1 =
      TruncatedSeries::geometric(-p.lambda * factor, order - 1);
  const TruncatedSeries geo2 =
      TruncatedSeries::geometric(-std::conj(p.lambda) * factor, order - 1);
  const TruncatedSeries rhs = scale(1.0 + p.a_prime, cauchy_product(geo1, geo2));
  const Complex delta2 = p.delta * p.delta;
  const Complex expected = p.a_prime * delta2 * unit(2.0 * p.gamma_a);
  // The relation reads H' + conj(delta^2) e^{-2i gamma_a} G' = rhs.
  const double phase = std::arg(p.delta) + p.gamma_a;
  return integrate_member(rhs, omega, phase, expected, order);
}

double family_relation_residual(const HarmonicMap& F,
                                const FLambdaDeltaParams& p) {
  if (F.order() < 1) throw OutOfRange("relation residual needs order >= 1");
  const Complex factor = p.delta * unit(p.gamma_a);
  const int n = F.order() - 1;
  const TruncatedSeries rhs =
      scale(1.0 + p.a_prime,
            cauchy_product(TruncatedSeries::geometric(-p.lambda * factor, n),
                           TruncatedSeries::geometric(
                               -std::conj(p.lambda) * factor, n)));
  const Complex co = std::conj(p.delta * p.delta) * unit(-2.0 * p.gamma_a);
  const TruncatedSeries lhs =
      linear_combine(1.0, differentiate(F.h()), co, differentiate(F.g()));
  double worst = 0.0;
  for (int k = 0; k <= n; ++k)
    worst = std::max(worst, std::abs(lhs.coeff(k) - rhs.coeff(k)));
  return worst;
}

HarmonicMap convex_combination(const std::vector<HarmonicMap>& maps,
                               const std::vector<double>& weights) {
  if (maps.empty()) throw OutOfRange("convex combination of nothing");
  if (maps.size() != weights.size())
    throw BadWeights("one weight per map required");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw BadWeights("weights must be nonnegative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) throw BadWeights("weights must sum to 1");
  const int order = maps.front().order();
  ClassTag tag = maps.front().class_tag();
  for (const HarmonicMap& m : maps) {
    if (m.order() != order)
      throw OutOfRange("convex combination needs equal orders");
    if (m.class_tag() != tag) tag = ClassTag::H;
  }
  std::vector<Complex> h(order + 1, Complex(0.0));
  std::vector<Complex> g(order + 1, Complex(0.0));
  for (std::size_t j = 0; j < maps.size(); ++j) {
    for (int k = 0; k <= order; ++k) {
      h[k] += weights[j] * maps[j].h().coeffs()[k];
      g[k] += weights[j] * maps[j].g().coeffs()[k];
    }
  }
  return HarmonicMap(TruncatedSeries(std::move(h)), TruncatedSeries(std::move(g)),
                     tag);
}

}  // namespace harmconv
