#pragma once

#include <utility>
#include <vector>

#include "harmconv/errors.hpp"
#include "harmconv/harmonic.hpp"
#include "harmconv/series.hpp"

namespace harmconv {

// A certificate whose grid minimum clears -kCertTol counts as passing.
inline constexpr double kCertTol = 1e-9;

// Sample points of the open unit disk: concentric rings of equally spaced
// angles. Rings are listed with increasing radius; angles start at 0.
class DiskGrid {
 public:
  // Geometric radii, 24 levels from 0.05 to 0.995, 256 angles per ring.
  DiskGrid();
  // radii must be strictly increasing inside (0,1); at least 8 angles.
  DiskGrid(std::vector<double> radii, int angles_per_ring);

  static DiskGrid geometric(double r_min, double r_max, int levels,
                            int angles_per_ring);

  const std::vector<double>& radii() const { return radii_; }
  int angles_per_ring() const { return angles_per_ring_; }
  double max_radius() const { return radii_.back(); }
  std::size_t point_count() const {
    return radii_.size() * static_cast<std::size_t>(angles_per_ring_);
  }
  // Ring-major order: all angles of the innermost ring first.
  std::vector<Complex> points() const;

 private:
  std::vector<double> radii_;
  int angles_per_ring_;
};

// Grid extrema of the Jacobian and of |g'/h'| for one map. The two extrema
// agree in sign: min_jacobian > 0 exactly when max_dilatation_modulus < 1.
struct UnivalenceReport {
  bool locally_univalent = false;
  double min_jacobian = 0.0;
  Complex min_jacobian_witness{0.0, 0.0};
  double max_dilatation_modulus = 0.0;
  Complex max_dilatation_witness{0.0, 0.0};
  DiskGrid grid;
};

struct NotLocallyUnivalent : Error {
  explicit NotLocallyUnivalent(UnivalenceReport r)
      : Error("map is not locally univalent on the grid"),
        report(std::move(r)) {}
  UnivalenceReport report;
};

// Best direction pair found for one analytic function, with the exact grid
// minimum of the directional convexity expression and the point attaining it.
struct ConvexityCertificate {
  double mu = 0.0;
  double nu = 0.0;
  double min_real_part = 0.0;
  Complex witness{0.0, 0.0};
  DiskGrid grid;

  bool passes(double tol = kCertTol) const { return min_real_part >= -tol; }
};

// Margins of Re(f/(1+b)) against the two walls of a slanted strip.
struct StripMargins {
  double lower = 0.0;
  double upper = 0.0;
};

UnivalenceReport local_univalence(const HarmonicMap& f, const DiskGrid& grid);

// Re of e^{i mu} (1 - 2 z e^{-i mu} cos nu + z^2 e^{-2i mu}) phi'(z).
double rz_value(const TruncatedSeries& phi, double mu, double nu, Complex z);

// Grid minimum of rz_value at a fixed direction pair.
ConvexityCertificate rz_certificate(const TruncatedSeries& phi, double mu,
                                    double nu, const DiskGrid& grid);

// Max-min sweep over the (mu, nu) lattice followed by five step-halving
// refinement rounds; ties prefer smaller mu, then smaller nu. The returned
// value is re-derived through rz_certificate at the winning pair.
ConvexityCertificate rz_search(const TruncatedSeries& phi, const DiskGrid& grid,
                               int mu_steps = 360, int nu_steps = 181);

// Certificate for the sheared function e^{-i alpha} (h - e^{2i alpha} g).
// Requires local univalence on the same grid first.
ConvexityCertificate direction_convexity(const HarmonicMap& f, double alpha,
                                         const DiskGrid& grid,
                                         int mu_steps = 360,
                                         int nu_steps = 181);

// Grid minimum of Re(e^{i gamma} f(z) / (1+a)) + 1/2.
double halfplane_membership(const HarmonicMap& f, Complex a, double gamma,
                            const DiskGrid& grid);

// Distances of Re(f(z)/(1+b)) to the walls (beta-pi)/(2 sin beta) and
// beta/(2 sin beta), minimised over the grid.
StripMargins strip_membership(const HarmonicMap& f, Complex b, double beta,
                              const DiskGrid& grid);

// Grid minimum of Re{(1 - w1 conj(w2)) /
//                   ((1 + e^{-2i theta} w1)(1 + e^{2i theta} conj(w2)))}
// where w1, w2 are the two dilatation values at the grid point.
double fhm_realpart_check(const DilatationSpec& omega1,
                          const DilatationSpec& omega2, double theta,
                          const DiskGrid& grid);

}  // namespace harmconv
