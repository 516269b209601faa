#pragma once

#include "harmconv/harmonic.hpp"

namespace harmconv {

// Tolerance for the consistency of omega(0) with the family parameters.
inline constexpr double kOriginConsistencyTol = 1e-9;

// a' = |1+a| - 1 and gamma_a = arg(1 + conj(a)) for |a| < 1.
struct AuxParams {
  double a_prime;
  double gamma_a;
};
AuxParams aux_params(Complex a);

// Slanted half-plane target { Re(e^{i gamma} w / (1+a)) > -1/2 }.
struct SlantParams {
  SlantParams(Complex a, double gamma);
  Complex a;
  double gamma;
  double a_prime;
  double gamma_a;
  double sigma() const { return gamma + gamma_a; }
};

// Slanted strip target { (beta-pi)/(2 sin beta) < Re(w/(1+b)) < beta/(2 sin beta) },
// 0 < beta < pi.
struct StripParams {
  StripParams(Complex b, double beta);
  Complex b;
  double beta;
  double b_prime;
  double gamma_b;
};

// Family cut out by H' + conj(delta^2) e^{-2i gamma_a} G' =
// (1+a') / ((1 + lambda delta e^{i gamma_a} z)(1 + conj(lambda) delta e^{i gamma_a} z)),
// |lambda| = |delta| = 1.
struct FLambdaDeltaParams {
  FLambdaDeltaParams(Complex a, Complex lambda, Complex delta);
  Complex a;
  Complex lambda;
  Complex delta;
  double a_prime;
  double gamma_a;
};

// The distinguished slanted half-plane map: h and g in closed form, with
// h_k = ((1+a') + (1-a')k) e^{i(k-1)sigma} / 2 and
// g_k = e^{2i sigma}((1+a') - (1-a')k) e^{i(k-1)sigma} / 2 for k >= 1.
HarmonicMap slanted_halfplane_canonical(const SlantParams& p,
                                        int order = kDefaultOrder);

// Convenience: the right half-plane map f_0 (a = 0, gamma = 0).
HarmonicMap right_halfplane_f0(int order = kDefaultOrder);

// Member of the slanted half-plane family with prescribed dilatation.
// omega(0) must equal a' e^{2i sigma} within kOriginConsistencyTol.
HarmonicMap halfplane_member(const SlantParams& p, const DilatationSpec& omega,
                             int order = kDefaultOrder);

// Member of the slanted strip family with prescribed dilatation.
// omega(0) must equal b' e^{2i gamma_b} within kOriginConsistencyTol.
HarmonicMap strip_member(const StripParams& p, const DilatationSpec& omega,
                         int order = kDefaultOrder);

// Member of the lambda/delta family with prescribed dilatation.
// omega(0) must equal a' delta^2 e^{2i gamma_a} within kOriginConsistencyTol.
HarmonicMap f_lambda_delta_member(const FLambdaDeltaParams& p,
                                  const DilatationSpec& omega,
                                  int order = kDefaultOrder);

// sum_j w_j f_j with w_j >= 0, sum w_j = 1 within 1e-12; all maps must share
// one order.
HarmonicMap convex_combination(const std::vector<HarmonicMap>& maps,
                               const std::vector<double>& weights);

// Largest coefficient deviation of H' + conj(delta^2) e^{-2i gamma_a} G'
// from the rational right-hand side that cuts out the lambda/delta family.
double family_relation_residual(const HarmonicMap& F,
                                const FLambdaDeltaParams& p);

}  // namespace harmconv
