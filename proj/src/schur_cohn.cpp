#include "harmconv/schur_cohn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace harmconv {

namespace {

double max_modulus(const std::vector<Complex>& coeffs) {
  double m = 0.0;
  for (const Complex& c : coeffs) m = std::max(m, std::abs(c));
  return m;
}

std::vector<Complex> trim(std::vector<Complex> coeffs) {
  const double floor = kCoeffTrimTol * std::max(1.0, max_modulus(coeffs));
  while (coeffs.size() > 1 && std::abs(coeffs.back()) <= floor)
    coeffs.pop_back();
  return coeffs;
}

// Divide out a linear factor (z - root); the remainder is dropped.
std::vector<Complex> deflate_root(const std::vector<Complex>& coeffs,
                                  Complex root) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  std::vector<Complex> out(n);
  Complex carry = coeffs[n];
  for (int k = n - 1; k >= 0; --k) {
    out[k] = carry;
    carry = coeffs[k] + carry * root;
  }
  return out;
}

ReductionStep make_step(ReductionKind kind, const Polynomial& t) {
  return ReductionStep{kind, t.coeffs(), std::abs(t.constant_term()),
                       std::abs(t.leading())};
}

struct Counts {
  int inside = 0;
  int boundary = 0;
  int outside = 0;
  bool degenerate = false;
};

Counts classify_by_modulus(const std::vector<Complex>& roots) {
  Counts c;
  for (const Complex& r : roots) {
    const double m = std::abs(r);
    if (std::abs(m - 1.0) <= kBoundaryTol)
      ++c.boundary;
    else if (m < 1.0)
      ++c.inside;
    else
      ++c.outside;
  }
  return c;
}

Counts count_rec(const Polynomial& t, std::vector<ReductionStep>& trace) {
  if (t.degree() == 0) return Counts{};
  // Each reduction multiplies the coefficient scale by roughly |a_n|^2, so a
  // long chain can sink toward the trim floor. Zeros are scale invariant;
  // renormalise before reducing further.
  const double scale = max_modulus(t.coeffs());
  if (scale > 0.0 && (scale < 1e-6 || scale > 1e6)) {
    std::vector<Complex> rescaled = t.coeffs();
    for (Complex& c : rescaled) c /= scale;
    return count_rec(Polynomial(std::move(rescaled)), trace);
  }
  try {
    const CohnStep step = cohn_step(t);
    if (step.next.degree() != t.degree() - 1) {
      // A nondegenerate step lowers the degree by exactly one: the reduced
      // leading coefficient is |a_n|^2 - |a_0|^2 != 0. A larger drop means
      // rounding erased it and the recursion below would miscount, so this
      // tail goes to the oracle.
      trace.push_back(make_step(ReductionKind::OracleFallback, t));
      Counts c = classify_by_modulus(roots_oracle(t));
      c.degenerate = true;
      return c;
    }
    trace.push_back(make_step(step.recursion_sign > 0
                                  ? ReductionKind::CohnPreserve
                                  : ReductionKind::CohnInvert,
                              t));
    const Counts sub = count_rec(step.next, trace);
    Counts c;
    c.degenerate = sub.degenerate;
    c.boundary = sub.boundary;
    if (step.recursion_sign > 0) {
      c.inside = sub.inside + 1;
      c.outside = sub.outside;
    } else {
      c.inside = sub.outside;
      c.outside = sub.inside + 1;
    }
    return c;
  } catch (const DegenerateStep&) {
    // Shared unimodular factors of t and t* stall the reduction. Locate the
    // boundary roots with the oracle, peel them off and retry.
    const std::vector<Complex> roots = roots_oracle(t);
    std::vector<Complex> boundary_roots;
    std::vector<Complex> work = t.coeffs();
    for (const Complex& r : roots) {
      if (std::abs(std::abs(r) - 1.0) <= kBoundaryTol) {
        boundary_roots.push_back(r);
        work = deflate_root(work, r);
      }
    }
    if (boundary_roots.empty()) {
      // Nothing to cancel (e.g. zeros paired by reflection): fall back.
      trace.push_back(make_step(ReductionKind::OracleFallback, t));
      Counts c = classify_by_modulus(roots);
      c.degenerate = true;
      return c;
    }
    trace.push_back(make_step(ReductionKind::DeflateBoundary, t));
    const Counts sub = count_rec(Polynomial(trim(std::move(work))), trace);
    Counts c = sub;
    c.boundary += static_cast<int>(boundary_roots.size());
    return c;
  }
}

}  // namespace

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw OutOfRange("polynomial needs coefficients");
  for (const Complex& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw Error("polynomial coefficients must be finite");
  }
  coeffs_ = trim(std::move(coeffs_));
}

Complex Polynomial::operator()(Complex z) const {
  Complex acc = coeffs_.back();
  for (int k = degree() - 1; k >= 0; --k) acc = acc * z + coeffs_[k];
  return acc;
}

std::vector<Complex> reciprocal(const Polynomial& t) {
  std::vector<Complex> out(t.coeffs().size());
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = std::conj(t.coeffs()[t.coeffs().size() - 1 - k]);
  return out;
}

CohnStep cohn_step(const Polynomial& t) {
  const int n = t.degree();
  if (n < 1) throw OutOfRange("cohn_step needs degree >= 1");
  const Complex a0 = t.constant_term();
  const Complex an = t.leading();
  const double m0 = std::abs(a0);
  const double mn = std::abs(an);
  if (std::abs(m0 - mn) <= kDegeneracyTol * std::max(m0, mn))
    throw DegenerateStep("|a_0| and |a_n| too close to compare");
  const std::vector<Complex> rec = reciprocal(t);
  // (conj(a_n) t - a_0 t*) / z; the constant term cancels identically.
  std::vector<Complex> next(n);
  for (int k = 1; k <= n; ++k)
    next[k - 1] = std::conj(an) * t.coeffs()[k] - a0 * rec[k];
  Polynomial reduced{std::move(next)};
  if (m0 < mn) return CohnStep{std::move(reduced), 1, 1};
  return CohnStep{std::move(reduced), n - 1, -1};
}

SchurCohnReport count_zeros_in_disk(const Polynomial& t) {
  SchurCohnReport report;
  const Counts c = count_rec(t, report.trace);
  report.zeros_inside = c.inside;
  report.zeros_on_boundary = c.boundary;
  report.zeros_outside = c.outside;
  report.degenerate = c.degenerate;
  return report;
}

std::vector<Complex> roots_oracle(const Polynomial& t) {
  if (t.degree() < 1) throw OutOfRange("roots_oracle needs degree >= 1");
  std::vector<Complex> roots;
  std::vector<Complex> work = t.coeffs();
  // Exact zeros at the origin first; they only slow the iteration down.
  const double zero_floor = kCoeffTrimTol * std::max(1.0, max_modulus(work));
  while (work.size() > 1 && std::abs(work.front()) <= zero_floor) {
    roots.push_back(Complex(0.0));
    work.erase(work.begin());
  }
  const int n = static_cast<int>(work.size()) - 1;
  if (n == 0) return roots;
  // Monic normalization.
  const Complex lead = work.back();
  for (Complex& c : work) c /= lead;
  if (n == 1) {
    roots.push_back(-work[0]);
    return roots;
  }
  // Fujiwara-style radius for the initial guesses.
  double radius = 0.0;
  for (int k = 0; k < n; ++k) {
    const double bound = std::pow(std::abs(work[k]), 1.0 / (n - k));
    radius = std::max(radius, 2.0 * bound);
  }
  radius = std::max(0.5, radius);
  std::vector<Complex> z(n);
  for (int j = 0; j < n; ++j)
    z[j] = std::polar(radius, 2.0 * std::numbers::pi * j / n + 0.4);
  const auto eval = [&work, n](Complex x) {
    Complex acc = work[n];
    for (int k = n - 1; k >= 0; --k) acc = acc * x + work[k];
    return acc;
  };
  for (int iter = 0; iter < 500; ++iter) {
    double max_step = 0.0;
    for (int j = 0; j < n; ++j) {
      Complex denom = 1.0;
      for (int k = 0; k < n; ++k)
        if (k != j) denom *= z[j] - z[k];
      const Complex delta = eval(z[j]) / denom;
      z[j] -= delta;
      max_step = std::max(max_step, std::abs(delta));
    }
    if (max_step < 1e-14 * (1.0 + radius)) break;
  }
  // Residuals judged against the coefficient scale at each root's modulus.
  const double scale = max_modulus(t.coeffs());
  for (int j = 0; j < n; ++j) {
    const double allowance =
        1e-9 * scale * std::pow(std::max(1.0, std::abs(z[j])), n);
    if (!(std::abs(t(z[j])) <= allowance) || !std::isfinite(z[j].real()) ||
        !std::isfinite(z[j].imag()))
      throw NoConvergence("root iteration residual too large");
  }
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

Polynomial Theorem43Cubic::poly() const {
  return Polynomial({Complex(c0), Complex(c1), Complex(c2), Complex(1.0)});
}

Theorem43Cubic theorem43_cubic(double a1_prime, double a2_prime, Case43 kase) {
  if (!(a1_prime > -1.0 && a1_prime < 1.0) ||
      !(a2_prime > -1.0 && a2_prime < 1.0))
    throw OutOfRange("a1' and a2' must lie in (-1,1)");
  const double A = a1_prime;
  const double B = a2_prime;
  Theorem43Cubic cubic{A, B, kase, 0.0, 0.0, -A * B};
  if (kase == Case43::MinusOne) {
    cubic.c2 = -(3.0 * A + 3.0 * B - A * B + 1.0) / 2.0;
    cubic.c1 = (3.0 * A + 3.0 * B + A * B - 1.0) / 2.0;
  } else {
    cubic.c2 = (-A + 3.0 * B - A * B + 1.0) / 2.0;
    cubic.c1 = (-3.0 * A + B - A * B + 1.0) / 2.0;
  }
  return cubic;
}

bool theorem43_condition_check(double a1_prime, double a2_prime, Case43 kase) {
  const double A = a1_prime;
  const double B = a2_prime;
  if (kase == Case43::MinusOne)
    return 1.0 + 3.0 * A + 3.0 * B + A * B >= 0.0;
  return 1.0 + 3.0 * A + 3.0 * A * B + A * A * B > 0.0;
}

}  // namespace harmconv
