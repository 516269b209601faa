#include "harmconv/geometry.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>
#include <utility>

namespace harmconv {

namespace {

constexpr double kPi = 3.14159265358979323846;

Complex unit(double angle) { return std::polar(1.0, angle); }

TruncatedSeries derivative_or_zero(const TruncatedSeries& s) {
  if (s.order() == 0) return TruncatedSeries::zero(0);
  return differentiate(s);
}

bool numerically_constant(const TruncatedSeries& derivative) {
  for (const Complex& c : derivative.coeffs())
    if (std::abs(c) > 1e-13) return false;
  return true;
}

}  // namespace

DiskGrid::DiskGrid() : DiskGrid(geometric(0.05, 0.995, 24, 256)) {}

DiskGrid::DiskGrid(std::vector<double> radii, int angles_per_ring)
    : radii_(std::move(radii)), angles_per_ring_(angles_per_ring) {
  if (radii_.empty()) throw OutOfRange("grid needs at least one radius");
  double prev = 0.0;
  for (double r : radii_) {
    if (!(r > prev && r < 1.0))
      throw OutOfRange("grid radii must increase strictly inside (0,1)");
    prev = r;
  }
  if (angles_per_ring_ < 8) throw OutOfRange("grid needs at least 8 angles");
}

DiskGrid DiskGrid::geometric(double r_min, double r_max, int levels,
                             int angles_per_ring) {
  if (!(r_min > 0.0 && r_min < r_max && r_max < 1.0) || levels < 1)
    throw OutOfRange("geometric grid wants 0 < r_min < r_max < 1");
  std::vector<double> radii(levels);
  if (levels == 1) {
    radii[0] = r_max;
  } else {
    const double ratio = std::pow(r_max / r_min, 1.0 / (levels - 1));
    double r = r_min;
    for (int k = 0; k < levels; ++k, r *= ratio) radii[k] = r;
    radii.back() = r_max;  // guard the accumulated product against drift
  }
  return DiskGrid(std::move(radii), angles_per_ring);
}

std::vector<Complex> DiskGrid::points() const {
  std::vector<Complex> pts;
  pts.reserve(point_count());
  for (double r : radii_)
    for (int j = 0; j < angles_per_ring_; ++j)
      pts.push_back(std::polar(r, 2.0 * kPi * j / angles_per_ring_));
  return pts;
}

UnivalenceReport local_univalence(const HarmonicMap& f, const DiskGrid& grid) {
  const TruncatedSeries hp = derivative_or_zero(f.h());
  const TruncatedSeries gp = derivative_or_zero(f.g());
  UnivalenceReport report;
  report.grid = grid;
  report.min_jacobian = std::numeric_limits<double>::infinity();
  report.max_dilatation_modulus = -1.0;
  for (const Complex& z : grid.points()) {
    const double ah = std::abs(evaluate(hp, z));
    const double ag = std::abs(evaluate(gp, z));
    const double jac = ah * ah - ag * ag;
    const double q =
        ah == 0.0 ? std::numeric_limits<double>::infinity() : ag / ah;
    if (jac < report.min_jacobian) {
      report.min_jacobian = jac;
      report.min_jacobian_witness = z;
    }
    if (q > report.max_dilatation_modulus) {
      report.max_dilatation_modulus = q;
      report.max_dilatation_witness = z;
    }
  }
  report.locally_univalent = report.min_jacobian > 0.0;
  return report;
}

double rz_value(const TruncatedSeries& phi, double mu, double nu, Complex z) {
  const TruncatedSeries d = derivative_or_zero(phi);
  const Complex w = evaluate(d, z);
  const Complex factor =
      unit(mu) * (1.0 - 2.0 * z * unit(-mu) * std::cos(nu) +
                  z * z * unit(-2.0 * mu));
  return (factor * w).real();
}

ConvexityCertificate rz_certificate(const TruncatedSeries& phi, double mu,
                                    double nu, const DiskGrid& grid) {
  const TruncatedSeries d = derivative_or_zero(phi);
  if (numerically_constant(d))
    throw ConstantFunction("directional certificate needs a non-constant map");
  ConvexityCertificate cert;
  cert.mu = reduce_angle(mu);
  cert.nu = nu;
  cert.grid = grid;
  cert.min_real_part = std::numeric_limits<double>::infinity();
  const Complex emu = unit(cert.mu);
  const Complex eminus = unit(-cert.mu);
  const double cn2 = 2.0 * std::cos(nu);
  for (const Complex& z : grid.points()) {
    const Complex w = evaluate(d, z);
    const Complex factor = emu * (1.0 - z * eminus * cn2 + z * z * eminus * eminus);
    const double v = (factor * w).real();
    if (v < cert.min_real_part) {
      cert.min_real_part = v;
      cert.witness = z;
    }
  }
  return cert;
}

namespace {

// Per-point pieces of the direction expression. With
//   P = Re(phi') + Re(z^2 phi'),  Q = Im(phi') - Im(z^2 phi'),
//   R = Re(z phi')
// the expression at the point equals cos(mu) P - sin(mu) Q - 2 cos(nu) R.
struct SweepPoint {
  double p;
  double q;
  double r;
};

// Points ordered outermost ring first; boundary rings decide most minima, so
// scanning them first lets losing pairs abandon early.
std::vector<SweepPoint> sweep_points(const TruncatedSeries& d,
                                     const DiskGrid& grid) {
  const std::vector<Complex> pts = grid.points();
  const int per_ring = grid.angles_per_ring();
  std::vector<SweepPoint> out;
  out.reserve(pts.size());
  for (std::size_t ring = grid.radii().size(); ring-- > 0;) {
    for (int j = 0; j < per_ring; ++j) {
      const Complex z = pts[ring * per_ring + j];
      const Complex w = evaluate(d, z);
      const Complex zw = z * w;
      const Complex zzw = z * zw;
      out.push_back({w.real() + zzw.real(), w.imag() - zzw.imag(), zw.real()});
    }
  }
  return out;
}

// Minimum of the expression over all points, abandoning as soon as the
// running minimum drops strictly below bound (such a pair cannot strictly
// beat the incumbent). Returns false when abandoned.
bool pruned_min(const std::vector<SweepPoint>& pts, double cmu, double smu,
                double cn2, double bound, double& out) {
  double m = std::numeric_limits<double>::infinity();
  for (const SweepPoint& p : pts) {
    const double v = cmu * p.p - smu * p.q - cn2 * p.r;
    if (v < m) {
      m = v;
      if (m < bound) return false;
    }
  }
  out = m;
  return true;
}

struct SweepBest {
  double value = -std::numeric_limits<double>::infinity();
  double mu = 0.0;
  double nu = 0.0;
  bool found = false;
};

// Polishes an estimated tail-mode angle t0. |sum_k b_k e^{-ikt}|^2 peaks
// exactly at the angle of a mode b_k ~ p(k) e^{ikt} no matter the polynomial
// factor, whereas linear-prediction roots pick up an O(deg p / window) bias
// and go ill-conditioned when two taps chase a single mode. Coarse scan wide
// enough to absorb that bias, then ternary descent on the bracket.
double refine_mode_angle(const std::vector<Complex>& b, int lo, double t0) {
  const int n = static_cast<int>(b.size()) - 1;
  auto coherence = [&](double t) {
    const Complex w = unit(-t);
    Complex e = unit(-t * static_cast<double>(lo));
    Complex s = 0.0;
    for (int k = lo; k <= n; ++k) {
      s += b[k] * e;
      e *= w;
    }
    return std::norm(s);
  };
  const double lobe = 2.0 * kPi / static_cast<double>(n - lo + 1);
  double best_t = t0;
  double best_c = coherence(t0);
  for (int i = -16; i <= 16; ++i) {
    if (i == 0) continue;
    const double t = t0 + 0.25 * lobe * static_cast<double>(i);
    const double c = coherence(t);
    if (c > best_c) {
      best_c = c;
      best_t = t;
    }
  }
  double a = best_t - 0.25 * lobe;
  double c = best_t + 0.25 * lobe;
  for (int it = 0; it < 48; ++it) {
    const double m1 = a + (c - a) / 3.0;
    const double m2 = c - (c - a) / 3.0;
    if (coherence(m1) < coherence(m2))
      a = m1;
    else
      c = m2;
  }
  return 0.5 * (a + c);
}

// Candidate (mu, nu) pairs read off the coefficient tail of phi'. When phi'
// has boundary singularities, a passing pair must put the quadratic's zeros
// e^{i(mu +- nu)} on them, and the lattice is usually too coarse to land
// there. A two-tap linear predictor seeds the dominant mode angles (one tap
// when the tail is a single mode and the two-tap system degenerates), each
// seed is polished by coherence, and both prefactor branches of the
// resulting pair are returned since they differ by a sign of the whole
// expression.
std::vector<std::pair<double, double>> predicted_pairs(
    const TruncatedSeries& d) {
  const std::vector<Complex>& b = d.coeffs();
  const int n = static_cast<int>(b.size()) - 1;
  const int lo = std::max(n / 2, n - 512);
  if (n - lo < 16) return {};

  Complex s_uu = 0.0, s_uv = 0.0, s_vv = 0.0, r_u = 0.0, r_v = 0.0;
  for (int k = lo; k <= n; ++k) {
    const Complex u = b[k - 1];
    const Complex v = b[k - 2];
    s_uu += std::conj(u) * u;
    s_uv += std::conj(u) * v;
    s_vv += std::conj(v) * v;
    r_u += std::conj(u) * b[k];
    r_v += std::conj(v) * b[k];
  }
  const double scale = std::abs(s_uu) * std::abs(s_vv);
  if (scale == 0.0) return {};

  std::vector<std::pair<double, double>> out;
  auto push_both = [&out](double mu, double nu) {
    nu = std::clamp(nu, 0.0, kPi);
    out.emplace_back(reduce_angle(mu), nu);
    out.emplace_back(reduce_angle(mu + kPi), kPi - nu);
  };

  bool single = false;
  double t1 = 0.0;
  double t2 = 0.0;
  const Complex det = s_uu * s_vv - s_uv * std::conj(s_uv);
  if (std::abs(det) > 1e-10 * scale) {
    const Complex x1 = (r_u * s_vv - r_v * s_uv) / det;
    const Complex x2 = (s_uu * r_v - std::conj(s_uv) * r_u) / det;
    // Roots of z^2 - x1 z - x2: the predictor's characteristic angles.
    const Complex root = std::sqrt(x1 * x1 + 4.0 * x2);
    const Complex z1 = 0.5 * (x1 + root);
    const Complex z2 = 0.5 * (x1 - root);
    if (std::abs(z1) == 0.0 && std::abs(z2) == 0.0) return out;
    if (std::abs(z2) < 1e-6 * std::abs(z1)) {
      single = true;
      t1 = std::arg(z1);
    } else if (std::abs(z1) < 1e-6 * std::abs(z2)) {
      single = true;
      t1 = std::arg(z2);
    } else {
      t1 = std::arg(z1);
      t2 = std::arg(z2);
    }
  } else {
    const Complex x1 = r_u / s_uu;
    if (std::abs(x1) == 0.0) return out;
    single = true;
    t1 = std::arg(x1);
  }
  t1 = refine_mode_angle(b, lo, t1);
  if (single) {
    // One dominant angle; aim a double zero at it.
    push_both(-t1, 0.0);
    return out;
  }
  t2 = refine_mode_angle(b, lo, t2);
  push_both(-0.5 * (t1 + t2), 0.5 * std::abs(t1 - t2));
  return out;
}

void raise_bound(std::atomic<double>& bound, double v) {
  double cur = bound.load(std::memory_order_relaxed);
  while (v > cur &&
         !bound.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
  }
}

unsigned thread_budget(int chunks) {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("HARMCONV_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1)
      n = std::min(n, static_cast<unsigned>(v));
  }
  return std::min(n, static_cast<unsigned>(std::max(chunks, 1)));
}

}  // namespace

ConvexityCertificate rz_search(const TruncatedSeries& phi, const DiskGrid& grid,
                               int mu_steps, int nu_steps) {
  if (mu_steps < 1 || nu_steps < 1)
    throw OutOfRange("direction search needs positive step counts");
  const TruncatedSeries d = derivative_or_zero(phi);
  if (numerically_constant(d))
    throw ConstantFunction("directional certificate needs a non-constant map");

  const std::vector<SweepPoint> pts = sweep_points(d, grid);
  const double mu_step = 2.0 * kPi / mu_steps;
  const double nu_step = nu_steps > 1 ? kPi / (nu_steps - 1) : kPi;

  std::vector<double> cn2(nu_steps);
  for (int j = 0; j < nu_steps; ++j) cn2[j] = 2.0 * std::cos(j * nu_step);

  // Shared pruning floor. Only fully evaluated pair values are published, so
  // abandoning against it never discards a strict winner and the outcome is
  // identical for any thread count.
  std::atomic<double> bound{-std::numeric_limits<double>::infinity()};
  const unsigned workers = thread_budget(mu_steps);
  std::vector<SweepBest> results(workers);

  auto run_chunk = [&](unsigned worker, int mu_lo, int mu_hi) {
    SweepBest local;
    for (int i = mu_lo; i < mu_hi; ++i) {
      const double mu = i * mu_step;
      const double cmu = std::cos(mu);
      const double smu = std::sin(mu);
      for (int j = 0; j < nu_steps; ++j) {
        const double floor_now =
            std::max(local.value, bound.load(std::memory_order_relaxed));
        double m;
        if (!pruned_min(pts, cmu, smu, cn2[j], floor_now, m)) continue;
        if (m > local.value) {
          local.value = m;
          local.mu = mu;
          local.nu = j * nu_step;
          local.found = true;
          raise_bound(bound, m);
        }
      }
    }
    results[worker] = local;
  };

  if (workers <= 1) {
    run_chunk(0, 0, mu_steps);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const int chunk = (mu_steps + static_cast<int>(workers) - 1) /
                      static_cast<int>(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const int lo = static_cast<int>(w) * chunk;
      const int hi = std::min(mu_steps, lo + chunk);
      pool.emplace_back(run_chunk, w, lo, hi);
    }
    for (std::thread& t : pool) t.join();
  }

  // Chunks are in increasing mu order, so a strict comparison keeps the
  // smallest mu (then smallest nu) among equal values.
  SweepBest best;
  for (const SweepBest& r : results)
    if (r.found && r.value > best.value) best = r;

  // Singularity-aligned candidates. Near a boundary pole of phi' the passing
  // region is narrower than the lattice step, so pairs predicted from the
  // coefficient tail are tried directly; the lattice winner stays on ties.
  for (const auto& [mu, nu] : predicted_pairs(d)) {
    double m;
    if (!pruned_min(pts, std::cos(mu), std::sin(mu), 2.0 * std::cos(nu),
                    best.value, m))
      continue;
    if (m > best.value) {
      best.value = m;
      best.mu = mu;
      best.nu = nu;
    }
  }

  // Local refinement: five rounds of step halving around the incumbent.
  for (int round = 1; round <= 5; ++round) {
    const double dm = mu_step / (1 << round);
    const double dn = nu_step / (1 << round);
    std::vector<std::pair<double, double>> candidates;
    for (int a = -1; a <= 1; ++a) {
      for (int b = -1; b <= 1; ++b) {
        const double mu = reduce_angle(best.mu + a * dm);
        const double nu = std::clamp(best.nu + b * dn, 0.0, kPi);
        candidates.emplace_back(mu, nu);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    for (const auto& [mu, nu] : candidates) {
      double m;
      if (!pruned_min(pts, std::cos(mu), std::sin(mu), 2.0 * std::cos(nu),
                      best.value, m))
        continue;
      if (m > best.value) {
        best.value = m;
        best.mu = mu;
        best.nu = nu;
      }
    }
  }

  return rz_certificate(phi, best.mu, best.nu, grid);
}

ConvexityCertificate direction_convexity(const HarmonicMap& f, double alpha,
                                         const DiskGrid& grid, int mu_steps,
                                         int nu_steps) {
  UnivalenceReport report = local_univalence(f, grid);
  if (!report.locally_univalent) throw NotLocallyUnivalent(std::move(report));
  const TruncatedSeries phi =
      linear_combine(unit(-alpha), f.h(), -unit(alpha), f.g());
  return rz_search(phi, grid, mu_steps, nu_steps);
}

double halfplane_membership(const HarmonicMap& f, Complex a, double gamma,
                            const DiskGrid& grid) {
  if (std::abs(a) >= 1.0) throw NotInDisk("half-plane parameter a");
  const Complex c = unit(gamma) / (1.0 + a);
  double min_re = std::numeric_limits<double>::infinity();
  for (const Complex& z : grid.points())
    min_re = std::min(min_re, (c * evaluate_map(f, z)).real());
  return min_re + 0.5;
}

StripMargins strip_membership(const HarmonicMap& f, Complex b, double beta,
                              const DiskGrid& grid) {
  if (std::abs(b) >= 1.0) throw NotInDisk("strip parameter b");
  if (!(beta > 0.0 && beta < kPi))
    throw OutOfRange("strip aperture must lie in (0,pi)");
  const double lower_wall = (beta - kPi) / (2.0 * std::sin(beta));
  const double upper_wall = beta / (2.0 * std::sin(beta));
  const Complex c = 1.0 / (1.0 + b);
  StripMargins margins;
  margins.lower = std::numeric_limits<double>::infinity();
  margins.upper = std::numeric_limits<double>::infinity();
  for (const Complex& z : grid.points()) {
    const double re = (c * evaluate_map(f, z)).real();
    margins.lower = std::min(margins.lower, re - lower_wall);
    margins.upper = std::min(margins.upper, upper_wall - re);
  }
  return margins;
}

double fhm_realpart_check(const DilatationSpec& omega1,
                          const DilatationSpec& omega2, double theta,
                          const DiskGrid& grid) {
  const Complex e = unit(-2.0 * theta);
  double min_re = std::numeric_limits<double>::infinity();
  for (const Complex& z : grid.points()) {
    const Complex w1 = omega1.value_at(z);
    const Complex w2c = std::conj(omega2.value_at(z));
    const Complex value =
        (1.0 - w1 * w2c) / ((1.0 + e * w1) * (1.0 + std::conj(e) * w2c));
    min_re = std::min(min_re, value.real());
  }
  return min_re;
}

}  // namespace harmconv
