#pragma once

#include <string>

#include "harmconv/harmonic.hpp"

namespace harmconv {

// Sampling plan for disk-image figures: images of concentric circles and of
// radial segments, each traced with `samples` points up to max_radius.
struct RenderStyle {
  int rings = 12;
  int rays = 24;
  int samples = 256;
  double max_radius = 0.95;
};

// SVG 1.1 document with one polyline per traced curve and an auto-fitted
// viewBox. The file is written to a temporary name and renamed into place.
void render_svg(const HarmonicMap& f, const RenderStyle& style,
                const std::string& path);

// CSV with header re_z,im_z,re_w,im_w,jacobian,abs_dilatation covering every
// sampled point, written atomically like render_svg.
void render_csv(const HarmonicMap& f, const RenderStyle& style,
                const std::string& path);

}  // namespace harmconv
