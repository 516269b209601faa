#include "harmconv/harmonic.hpp"

#include <cmath>
#include <numbers>

namespace harmconv {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double reduce_angle(double angle) {
  if (!std::isfinite(angle)) throw Error("angle must be finite");
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a;
}

HarmonicMap::HarmonicMap(TruncatedSeries h, TruncatedSeries g, ClassTag tag)
    : h_(std::move(h)), g_(std::move(g)), tag_(tag) {
  if (h_.order() != g_.order())
    throw OutOfRange("harmonic map parts must share one order");
  if (tag_ == ClassTag::Unconstrained) return;
  if (h_.order() < 1) throw OutOfRange("normalized maps need order >= 1");
  if (std::abs(h_.coeff(0)) > kClassTagTol || std::abs(g_.coeff(0)) > kClassTagTol)
    throw OutOfRange("class H maps vanish at the origin");
  if (std::abs(h_.coeff(1) - 1.0) > kClassTagTol)
    throw OutOfRange("class H maps have h'(0) = 1");
  if (tag_ == ClassTag::H0 && std::abs(g_.coeff(1)) > kClassTagTol)
    throw OutOfRange("class H0 maps have g'(0) = 0");
}

Complex evaluate_map(const HarmonicMap& f, Complex z) {
  return evaluate(f.h(), z) + std::conj(evaluate(f.g(), z));
}

TruncatedSeries dilatation(const HarmonicMap& f) {
  return series_divide(differentiate(f.g()), differentiate(f.h()));
}

double jacobian_at(const HarmonicMap& f, Complex z) {
  const Complex hp = evaluate(differentiate(f.h()), z);
  const Complex gp = evaluate(differentiate(f.g()), z);
  return std::norm(hp) - std::norm(gp);
}

HarmonicMap rotate(const HarmonicMap& f, Complex mu) {
  if (std::abs(std::abs(mu) - 1.0) > kUnitModulusTol)
    throw NotUnimodular("rotate needs |mu| = 1");
  const int n = f.order();
  std::vector<Complex> h(n + 1), g(n + 1);
  Complex power = 1.0;  // mu^k
  for (int k = 0; k <= n; ++k) {
    h[k] = std::conj(mu) * power * f.h().coeffs()[k];
    g[k] = mu * power * f.g().coeffs()[k];
    power *= mu;
  }
  return HarmonicMap(TruncatedSeries(std::move(h)), TruncatedSeries(std::move(g)),
                     f.class_tag());
}

namespace {

ClassTag weaker_tag(ClassTag a, ClassTag b) {
  if (a == ClassTag::Unconstrained || b == ClassTag::Unconstrained)
    return ClassTag::Unconstrained;
  if (a == ClassTag::H0 && b == ClassTag::H0) return ClassTag::H0;
  return ClassTag::H;
}

}  // namespace

HarmonicMap convolve(const HarmonicMap& f, const HarmonicMap& F) {
  return HarmonicMap(hadamard(f.h(), F.h()), hadamard(f.g(), F.g()),
                     weaker_tag(f.class_tag(), F.class_tag()));
}

TruncatedSeries convolution_dilatation_f_a0(double a, const HarmonicMap& f) {
  if (!(a > -1.0 && a < 1.0))
    throw NotInDisk("half-plane parameter must lie in (-1,1)");
  if (f.class_tag() == ClassTag::Unconstrained)
    throw OutOfRange("needs a normalized (class H) map");
  const TruncatedSeries hp = differentiate(f.h());
  const TruncatedSeries gp = differentiate(f.g());
  const TruncatedSeries zhpp = multiply_by_z(differentiate(hp));
  const TruncatedSeries zgpp = multiply_by_z(differentiate(gp));
  const TruncatedSeries num = linear_combine(2.0 * a, gp, -(1.0 - a), zgpp);
  const TruncatedSeries den = linear_combine(2.0, hp, 1.0 - a, zhpp);
  return series_divide(num, den);
}

DilatationSpec DilatationSpec::monomial(double theta, int n) {
  if (n < 1) throw OutOfRange("monomial dilatation needs n >= 1");
  return DilatationSpec(MonomialDilatation{reduce_angle(theta), n});
}

DilatationSpec DilatationSpec::moebius_of_rotation(double prefactor_angle,
                                                   double a_param,
                                                   double inner_angle,
                                                   int sign) {
  if (!(a_param > -1.0 && a_param < 1.0))
    throw NotInDisk("moebius dilatation needs a_param in (-1,1)");
  if (sign != 1 && sign != -1)
    throw OutOfRange("moebius dilatation sign must be +1 or -1");
  return DilatationSpec(MoebiusOfRotation{reduce_angle(prefactor_angle),
                                          a_param, reduce_angle(inner_angle),
                                          sign});
}

bool DilatationSpec::is_monomial() const {
  return std::holds_alternative<MonomialDilatation>(spec_);
}

const MonomialDilatation& DilatationSpec::as_monomial() const {
  return std::get<MonomialDilatation>(spec_);
}

const MoebiusOfRotation& DilatationSpec::as_moebius() const {
  return std::get<MoebiusOfRotation>(spec_);
}

Complex DilatationSpec::value_at(Complex z) const {
  if (std::abs(z) >= 1.0) throw OutsideDisk("dilatation evaluated at |z| >= 1");
  if (is_monomial()) {
    const auto& m = as_monomial();
    return std::polar(1.0, m.theta) * std::pow(z, m.n);
  }
  const auto& m = as_moebius();
  const double s = static_cast<double>(m.sign);
  const Complex u = s * z * std::polar(1.0, m.inner_angle);
  return std::polar(1.0, m.prefactor_angle) * (m.a_param + u) /
         (1.0 + m.a_param * u);
}

Complex DilatationSpec::at_origin() const {
  if (is_monomial()) return 0.0;
  const auto& m = as_moebius();
  return std::polar(1.0, m.prefactor_angle) * m.a_param;
}

TruncatedSeries DilatationSpec::to_series(int order) const {
  if (is_monomial()) {
    const auto& m = as_monomial();
    if (m.n > order) return TruncatedSeries::zero(order);
    return TruncatedSeries::monomial(m.n, std::polar(1.0, m.theta), order);
  }
  const auto& m = as_moebius();
  const double s = static_cast<double>(m.sign);
  const Complex pre = std::polar(1.0, m.prefactor_angle);
  const Complex rot = s * std::polar(1.0, m.inner_angle);
  // e^{i pre}(a + z rot) / (1 + a z rot)
  std::vector<Complex> num(order + 1, Complex(0.0));
  std::vector<Complex> den(order + 1, Complex(0.0));
  num[0] = pre * m.a_param;
  if (order >= 1) num[1] = pre * rot;
  den[0] = 1.0;
  if (order >= 1) den[1] = m.a_param * rot;
  return series_divide(TruncatedSeries(std::move(num)),
                       TruncatedSeries(std::move(den)));
}

}  // namespace harmconv
