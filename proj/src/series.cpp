#include "harmconv/series.hpp"

#include <algorithm>
#include <cmath>

namespace harmconv {

namespace {

void require_finite(const std::vector<Complex>& coeffs) {
  for (const Complex& c : coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw Error("series coefficients must be finite");
    }
  }
}

int common_order(const TruncatedSeries& s, const TruncatedSeries& t) {
  return std::min(s.order(), t.order());
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw OutOfRange("series needs at least one coefficient");
  require_finite(coeffs_);
}

TruncatedSeries TruncatedSeries::zero(int order) {
  if (order < 0) throw OutOfRange("series order must be >= 0");
  return TruncatedSeries(std::vector<Complex>(order + 1, Complex(0.0)));
}

TruncatedSeries TruncatedSeries::monomial(int k, Complex c, int order) {
  if (k < 0 || k > order) throw OutOfRange("monomial degree outside series order");
  std::vector<Complex> coeffs(order + 1, Complex(0.0));
  coeffs[k] = c;
  return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries TruncatedSeries::geometric(Complex ratio, int order) {
  if (order < 0) throw OutOfRange("series order must be >= 0");
  std::vector<Complex> coeffs(order + 1);
  coeffs[0] = 1.0;
  for (int k = 1; k <= order; ++k) coeffs[k] = coeffs[k - 1] * ratio;
  return TruncatedSeries(std::move(coeffs));
}

Complex TruncatedSeries::coeff(int k) const {
  if (k < 0 || k > order()) throw OutOfRange("coefficient index outside order");
  return coeffs_[k];
}

double TruncatedSeries::tail_bound(double r) const {
  if (r < 0.0 || r >= 1.0) throw OutOfRange("tail bound needs 0 <= r < 1");
  return std::pow(r, order() + 1) / (1.0 - r);
}

TruncatedSeries linear_combine(Complex alpha, const TruncatedSeries& s,
                               Complex beta, const TruncatedSeries& t) {
  const int n = common_order(s, t);
  std::vector<Complex> out(n + 1);
  for (int k = 0; k <= n; ++k)
    out[k] = alpha * s.coeffs()[k] + beta * t.coeffs()[k];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries scale(Complex alpha, const TruncatedSeries& s) {
  std::vector<Complex> out(s.coeffs());
  for (Complex& c : out) c *= alpha;
  return TruncatedSeries(std::move(out));
}

TruncatedSeries hadamard(const TruncatedSeries& s, const TruncatedSeries& t) {
  const int n = common_order(s, t);
  std::vector<Complex> out(n + 1);
  for (int k = 0; k <= n; ++k) out[k] = s.coeffs()[k] * t.coeffs()[k];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries cauchy_product(const TruncatedSeries& s,
                               const TruncatedSeries& t) {
  const int n = common_order(s, t);
  std::vector<Complex> out(n + 1, Complex(0.0));
  for (int j = 0; j <= n; ++j) {
    const Complex sj = s.coeffs()[j];
    if (sj == Complex(0.0)) continue;
    for (int k = j; k <= n; ++k) out[k] += sj * t.coeffs()[k - j];
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries series_divide(const TruncatedSeries& num,
                              const TruncatedSeries& den) {
  const Complex d0 = den.coeffs()[0];
  if (std::abs(d0) <= kDivideFloor)
    throw DivisorVanishesAtOrigin("series_divide: divisor vanishes at 0");
  const int n = common_order(num, den);
  std::vector<Complex> out(n + 1);
  for (int k = 0; k <= n; ++k) {
    Complex acc = num.coeffs()[k];
    for (int j = 0; j < k; ++j) acc -= out[j] * den.coeffs()[k - j];
    out[k] = acc / d0;
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries differentiate(const TruncatedSeries& s) {
  if (s.order() < 1) throw OutOfRange("differentiate needs order >= 1");
  std::vector<Complex> out(s.order());
  for (int k = 1; k <= s.order(); ++k)
    out[k - 1] = static_cast<double>(k) * s.coeffs()[k];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries antidifferentiate(const TruncatedSeries& s) {
  std::vector<Complex> out(s.order() + 2);
  out[0] = 0.0;
  for (int k = 0; k <= s.order(); ++k)
    out[k + 1] = s.coeffs()[k] / static_cast<double>(k + 1);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries multiply_by_z(const TruncatedSeries& s) {
  std::vector<Complex> out(s.order() + 2);
  out[0] = 0.0;
  std::copy(s.coeffs().begin(), s.coeffs().end(), out.begin() + 1);
  return TruncatedSeries(std::move(out));
}

Complex evaluate(const TruncatedSeries& s, Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw Error("evaluation point must be finite");
  if (std::abs(z) >= 1.0) throw OutsideDisk("evaluate needs |z| < 1");
  Complex acc = s.coeffs()[s.order()];
  for (int k = s.order() - 1; k >= 0; --k) acc = acc * z + s.coeffs()[k];
  return acc;
}

TruncatedSeries compose_rotation(const TruncatedSeries& s, Complex mu) {
  if (std::abs(std::abs(mu) - 1.0) > kUnitModulusTol)
    throw NotUnimodular("compose_rotation needs |mu| = 1");
  std::vector<Complex> out(s.order() + 1);
  Complex power = 1.0;
  for (int k = 0; k <= s.order(); ++k) {
    out[k] = power * s.coeffs()[k];
    power *= mu;
  }
  return TruncatedSeries(std::move(out));
}

}  // namespace harmconv
