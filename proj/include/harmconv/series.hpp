#pragma once

#include <complex>
#include <vector>

#include "harmconv/errors.hpp"

namespace harmconv {

using Complex = std::complex<double>;

// Truncation order used when a caller does not ask for a specific one.
inline constexpr int kDefaultOrder = 128;
// Constant terms at or below this modulus are treated as a vanishing divisor.
inline constexpr double kDivideFloor = 1e-12;
// |mu| must be within this distance of 1 to count as a rotation factor.
inline constexpr double kUnitModulusTol = 1e-12;
// Largest evaluation radius the disk-grid machinery will request.
inline constexpr double kMaxEvalRadius = 0.999;

// Polynomial truncation of a power series about 0: coefficients c_0..c_N.
// All coefficients are finite; the order N is coeffs().size() - 1.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<Complex> coeffs);

  static TruncatedSeries zero(int order);
  static TruncatedSeries monomial(int k, Complex c, int order);
  // 1/(1 - ratio z) truncated: coefficients ratio^k.
  static TruncatedSeries geometric(Complex ratio, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex coeff(int k) const;

  // Bound on |sum_{k>N} c_k z^k| at |z| = r assuming |c_k| <= 1: r^{N+1}/(1-r).
  double tail_bound(double r) const;

 private:
  std::vector<Complex> coeffs_;
};

// alpha*s + beta*t, truncated to the smaller order.
TruncatedSeries linear_combine(Complex alpha, const TruncatedSeries& s,
                               Complex beta, const TruncatedSeries& t);

// alpha*s.
TruncatedSeries scale(Complex alpha, const TruncatedSeries& s);

// Coefficientwise (Hadamard) product, truncated to the smaller order.
TruncatedSeries hadamard(const TruncatedSeries& s, const TruncatedSeries& t);

// Cauchy (multiplication) product, truncated to the smaller order.
TruncatedSeries cauchy_product(const TruncatedSeries& s,
                               const TruncatedSeries& t);

// num/den via the standard recurrence; requires |den_0| > kDivideFloor.
TruncatedSeries series_divide(const TruncatedSeries& num,
                              const TruncatedSeries& den);

// d/dz; order drops by one. Requires order >= 1.
TruncatedSeries differentiate(const TruncatedSeries& s);

// Antiderivative with value 0 at the origin; order grows by one.
TruncatedSeries antidifferentiate(const TruncatedSeries& s);

// z * s; order grows by one.
TruncatedSeries multiply_by_z(const TruncatedSeries& s);

// Horner evaluation. Requires |z| < 1.
Complex evaluate(const TruncatedSeries& s, Complex z);

// s(mu z) coefficientwise, i.e. c_k -> mu^k c_k; |mu| must be 1 within
// kUnitModulusTol.
TruncatedSeries compose_rotation(const TruncatedSeries& s, Complex mu);

}  // namespace harmconv
