#pragma once

#include <variant>

#include "harmconv/series.hpp"

namespace harmconv {

// Normalization carried by a planar harmonic map f = h + conj(g) on the disk.
//   H:  h(0) = g(0) = 0, h'(0) = 1
//   H0: additionally g'(0) = 0
// Unconstrained maps skip the normalization checks entirely.
enum class ClassTag { H, H0, Unconstrained };

// Tolerance used when validating the normalization of computed series.
inline constexpr double kClassTagTol = 1e-9;

class HarmonicMap {
 public:
  HarmonicMap(TruncatedSeries h, TruncatedSeries g, ClassTag tag);

  const TruncatedSeries& h() const { return h_; }
  const TruncatedSeries& g() const { return g_; }
  ClassTag class_tag() const { return tag_; }
  int order() const { return h_.order(); }

 private:
  TruncatedSeries h_;
  TruncatedSeries g_;
  ClassTag tag_;
};

// f(z) = h(z) + conj(g(z)).
Complex evaluate_map(const HarmonicMap& f, Complex z);

// omega = g'/h' as a truncated series.
TruncatedSeries dilatation(const HarmonicMap& f);

// J_f(z) = |h'(z)|^2 - |g'(z)|^2.
double jacobian_at(const HarmonicMap& f, Complex z);

// f^mu(z) = conj(mu) f(mu z): h -> conj(mu) h(mu z), g -> mu g(mu z).
// Preserves the class tag; |mu| must be 1 within kUnitModulusTol.
HarmonicMap rotate(const HarmonicMap& f, Complex mu);

// Coefficientwise (harmonic Hadamard) convolution of the analytic parts.
HarmonicMap convolve(const HarmonicMap& f, const HarmonicMap& F);

// Dilatation of the convolution of the canonical right-half-plane map with
// real parameter a against f, computed directly from f's parts:
//   (2a g' - (1-a) z g'') / (2 h' + (1-a) z h'').
// Requires a in (-1,1) and f of class H.
TruncatedSeries convolution_dilatation_f_a0(double a, const HarmonicMap& f);

// --- closed-form dilatations -------------------------------------------------

// omega(z) = e^{i theta} z^n with n >= 1.
struct MonomialDilatation {
  double theta = 0.0;
  int n = 1;
};

// omega(z) = e^{i pre} (a + s z e^{i eta}) / (1 + s a z e^{i eta}),
// s = sign in {+1,-1}, a in (-1,1). Maps the disk to itself.
struct MoebiusOfRotation {
  double prefactor_angle = 0.0;
  double a_param = 0.0;
  double inner_angle = 0.0;
  int sign = 1;
};

class DilatationSpec {
 public:
  static DilatationSpec monomial(double theta, int n);
  static DilatationSpec moebius_of_rotation(double prefactor_angle,
                                            double a_param, double inner_angle,
                                            int sign);

  Complex value_at(Complex z) const;  // closed form; requires |z| < 1
  Complex at_origin() const;
  TruncatedSeries to_series(int order) const;

  bool is_monomial() const;
  const MonomialDilatation& as_monomial() const;
  const MoebiusOfRotation& as_moebius() const;

 private:
  explicit DilatationSpec(std::variant<MonomialDilatation, MoebiusOfRotation> v)
      : spec_(std::move(v)) {}
  std::variant<MonomialDilatation, MoebiusOfRotation> spec_;
};

// Angles are reduced to [0, 2pi) at every API boundary.
double reduce_angle(double angle);

}  // namespace harmconv
