#pragma once

#include <complex>
#include <vector>

#include "harmconv/errors.hpp"
#include "harmconv/series.hpp"

namespace harmconv {

// Trailing coefficients at or below this (relative) size are trimmed.
inline constexpr double kCoeffTrimTol = 1e-13;
// |constant| vs |leading| closer than this (relatively) makes a Cohn step
// degenerate.
inline constexpr double kDegeneracyTol = 1e-10;
// Oracle roots within this distance of the unit circle count as boundary.
inline constexpr double kBoundaryTol = 1e-7;

// Dense polynomial a_0 + a_1 z + ... + a_n z^n with a_n != 0 after trimming.
class Polynomial {
 public:
  explicit Polynomial(std::vector<Complex> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex leading() const { return coeffs_.back(); }
  Complex constant_term() const { return coeffs_.front(); }
  Complex operator()(Complex z) const;

 private:
  std::vector<Complex> coeffs_;
};

// t*(z) = z^n conj(t(1/conj z)): coefficient k is conj(a_{n-k}). The formal
// degree n is preserved even if conj(a_0) vanishes, so the result is returned
// as a raw coefficient vector.
std::vector<Complex> reciprocal(const Polynomial& t);

// One Cohn reduction step t_next = (conj(a_n) t - a_0 t*) / z.
// Writing I(.) for the number of zeros in the open unit disk,
//   I(t) = inside_offset + recursion_sign * I(t_next),
// with (1, +1) when |a_0| < |a_n| and (deg t - 1, -1) when |a_0| > |a_n|.
// Throws DegenerateStep when |a_0| and |a_n| are too close to compare.
struct CohnStep {
  Polynomial next;
  int inside_offset;
  int recursion_sign;
};
CohnStep cohn_step(const Polynomial& t);

enum class ReductionKind { CohnPreserve, CohnInvert, DeflateBoundary, OracleFallback };

struct ReductionStep {
  ReductionKind kind;
  std::vector<Complex> coeffs;  // polynomial the step consumed
  double constant_modulus;
  double leading_modulus;
};

struct SchurCohnReport {
  int zeros_inside = 0;
  int zeros_on_boundary = 0;
  int zeros_outside = 0;
  bool degenerate = false;  // oracle fallback was required
  std::vector<ReductionStep> trace;
};

// Count zeros of t in the open disk / on the circle / outside, by Cohn
// reduction. Degenerate steps deflate common unimodular factors of t and t*
// (located with roots_oracle) and retry; if that fails the report falls back
// to the oracle entirely and is flagged degenerate.
SchurCohnReport count_zeros_in_disk(const Polynomial& t);

// All complex roots by simultaneous (Durand-Kerner) iteration, residual
// checked against the coefficient scale. Requires degree >= 1.
std::vector<Complex> roots_oracle(const Polynomial& t);

// The cubic z^3 + c2 z^2 + c1 z + c0 controlling the dilatation of the
// convolution of two half-plane family maps, in the two aligned-phase cases
// cos(theta - gamma_2 - gamma_{a_2}) = -1 (MinusOne) or +1 (PlusOne).
enum class Case43 { MinusOne, PlusOne };

struct Theorem43Cubic {
  double a1_prime;
  double a2_prime;
  Case43 kase;
  double c2;
  double c1;
  double c0;
  Polynomial poly() const;
};

Theorem43Cubic theorem43_cubic(double a1_prime, double a2_prime, Case43 kase);

// The sufficient condition attached to each case:
//   MinusOne: 1 + 3a1' + 3a2' + a1'a2' >= 0
//   PlusOne:  1 + 3a1' + 3a1'a2' + a1'^2 a2' > 0
bool theorem43_condition_check(double a1_prime, double a2_prime, Case43 kase);

}  // namespace harmconv
