#pragma once

// Deterministic SVG figures: chord diagrams in the unit disk and rays over an
// escape-time picture of the filled Julia set.

#include "lamina/lamination.hpp"
#include "lamina/model.hpp"
#include "lamina/polynomial.hpp"
#include "lamina/ray_tracer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lamina {

struct RenderOptions {
  /// Side of one panel in pixels.
  int size = 480;
  /// Escape-time underlay for the dynamical-plane panel.
  std::optional<Polynomial> polynomial;
  int raster = 200;
  int max_iter = 120;
  /// Half-width of the dynamical-plane view around 0.
  double view_radius = 2.2;
  std::vector<RayTrace> rays;
};

/// Chord diagram of lam (class sides as hyperbolic geodesics, polygons
/// filled). A second panel with the dynamical plane is added when a
/// polynomial or rays are given. The model, if given, only annotates counts.
std::string render_svg(const Lamination& lam, const ModelGraph* model, const RenderOptions& opts = {});

/// Dynamical plane only.
std::string render_rays_svg(const RenderOptions& opts);

}  // namespace lamina
