#include "harmconv/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "harmconv/errors.hpp"

namespace harmconv {

namespace {

constexpr double kPi = 3.14159265358979323846;

void validate_style(const RenderStyle& style) {
  if (style.rings < 1 || style.rays < 1 || style.samples < 2)
    throw OutOfRange("render style needs rings, rays >= 1 and samples >= 2");
  if (!(style.max_radius > 0.0 && style.max_radius < 1.0))
    throw OutOfRange("render max_radius must lie in (0,1)");
}

// One traced curve in the source disk.
std::vector<Complex> ring_points(double r, int samples) {
  std::vector<Complex> pts;
  pts.reserve(samples + 1);
  for (int k = 0; k < samples; ++k)
    pts.push_back(std::polar(r, 2.0 * kPi * k / samples));
  pts.push_back(pts.front());  // close the loop
  return pts;
}

std::vector<Complex> ray_points(double angle, double r_max, int samples) {
  std::vector<Complex> pts;
  pts.reserve(samples);
  for (int k = 0; k < samples; ++k)
    pts.push_back(std::polar(r_max * k / (samples - 1.0), angle));
  return pts;
}

std::vector<std::vector<Complex>> traced_curves(const RenderStyle& style) {
  std::vector<std::vector<Complex>> curves;
  curves.reserve(style.rings + style.rays);
  for (int i = 1; i <= style.rings; ++i)
    curves.push_back(
        ring_points(style.max_radius * i / style.rings, style.samples));
  for (int j = 0; j < style.rays; ++j)
    curves.push_back(
        ray_points(2.0 * kPi * j / style.rays, style.max_radius, style.samples));
  return curves;
}

void atomic_write(const std::string& path, const std::string& body) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IOError("cannot open '" + tmp + "' for writing");
    out << body;
    out.flush();
    if (!out) throw IOError("short write to '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw IOError("cannot move '" + tmp + "' to '" + path + "'");
  }
}

}  // namespace

void render_svg(const HarmonicMap& f, const RenderStyle& style,
                const std::string& path) {
  validate_style(style);
  const std::vector<std::vector<Complex>> curves = traced_curves(style);
  const int ring_curves = style.rings;

  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  std::vector<std::vector<Complex>> images;
  images.reserve(curves.size());
  for (const auto& curve : curves) {
    std::vector<Complex> image;
    image.reserve(curve.size());
    for (const Complex& z : curve) {
      const Complex w = evaluate_map(f, z);
      image.push_back(w);
      xmin = std::min(xmin, w.real());
      xmax = std::max(xmax, w.real());
      ymin = std::min(ymin, w.imag());
      ymax = std::max(ymax, w.imag());
    }
    images.push_back(std::move(image));
  }

  const double span = std::max({xmax - xmin, ymax - ymin, 1e-12});
  const double pad = 0.05 * span;
  // SVG's y axis points down; plot (x, -y) so the figure keeps the usual
  // orientation of the plane.
  const double vx = xmin - pad;
  const double vy = -ymax - pad;
  const double vw = (xmax - xmin) + 2.0 * pad;
  const double vh = (ymax - ymin) + 2.0 * pad;
  const double stroke = 0.002 * std::max(vw, vh);

  std::ostringstream svg;
  svg.precision(8);
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      << "width=\"800\" height=\"800\" viewBox=\"" << vx << " " << vy << " "
      << vw << " " << vh << "\">\n";
  for (std::size_t c = 0; c < images.size(); ++c) {
    const char* color = c < static_cast<std::size_t>(ring_curves) ? "#1f77b4"
                                                                  : "#d62728";
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
        << stroke << "\" points=\"";
    for (const Complex& w : images[c])
      svg << w.real() << "," << -w.imag() << " ";
    svg << "\"/>\n";
  }
  svg << "</svg>\n";
  atomic_write(path, svg.str());
}

void render_csv(const HarmonicMap& f, const RenderStyle& style,
                const std::string& path) {
  validate_style(style);
  const TruncatedSeries hp = differentiate(f.h());
  const TruncatedSeries gp = differentiate(f.g());
  std::ostringstream csv;
  csv.precision(17);
  csv << "re_z,im_z,re_w,im_w,jacobian,abs_dilatation\n";
  for (const auto& curve : traced_curves(style)) {
    for (const Complex& z : curve) {
      const Complex w = evaluate_map(f, z);
      const double ah = std::abs(evaluate(hp, z));
      const double ag = std::abs(evaluate(gp, z));
      const double jac = ah * ah - ag * ag;
      const double q =
          ah == 0.0 ? std::numeric_limits<double>::infinity() : ag / ah;
      csv << z.real() << "," << z.imag() << "," << w.real() << "," << w.imag()
          << "," << jac << "," << q << "\n";
    }
  }
  atomic_write(path, csv.str());
}

}  // namespace harmconv
