#pragma once

// External rays of connected polynomial Julia sets.
//
// A ray is sampled at Green's-function levels G0 * d^(-k/S), k = 0..S*depth,
// with G0 = 4 log R (R the escape radius) and S sub-steps per level. The
// point of angle a at potential t is the Newton-solved preimage under P of
// the point of angle d*a at potential d*t, seeded from the previous sample of
// the same ray. All rays of the forward orbit of a are traced together, so
// every sample past the first level is one pullback of an already computed
// sample.

#include "lamina/angle.hpp"
#include "lamina/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lamina {

class DisconnectedJuliaSetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TraceOptions {
  int substeps = 8;
  double newton_tol = 1e-12;
  int newton_max_iter = 64;
  int connectivity_budget = 1000;
};

enum class TraceStatus { complete, truncated_numeric };

struct RayTrace {
  Angle angle;
  /// Ordered by decreasing potential.
  std::vector<Complex> points;
  std::vector<double> potentials;
  TraceStatus status = TraceStatus::complete;
  int substeps = 8;

  /// Number of whole levels sampled past the starting one.
  int levels() const {
    return points.empty() ? -1 : static_cast<int>((points.size() - 1) / static_cast<std::size_t>(substeps));
  }
  Complex level_point(int j) const { return points.at(static_cast<std::size_t>(j * substeps)); }
};

/// Starting potential 4 log R.
double initial_potential(const Polynomial& p);

/// Inverse Boettcher coordinate: the point z outside the escape disk with
/// phi(z) = w. Requires |w| > escape_radius.
Complex inverse_boettcher(const Polynomial& p, Complex w);

/// Boettcher coordinate phi(z) for |z| > escape_radius.
Complex boettcher(const Polynomial& p, Complex z);

/// Traces of every angle in forward_orbit(a, d), same order.
/// Throws DisconnectedJuliaSetError if a critical orbit escapes.
std::vector<RayTrace> trace_orbit(const Polynomial& p, const Angle& a, int depth,
                                  const TraceOptions& opts = {});

RayTrace trace_ray(const Polynomial& p, const Angle& a, int depth, const TraceOptions& opts = {});

enum class LandingStatus { landed, truncated_budget, truncated_numeric };

std::string to_string(LandingStatus s);
std::string to_string(TraceStatus s);

struct LandingOptions {
  TraceOptions trace;
  /// Trailing-cluster test: this many levels within landing_tol.
  double landing_tol = 1e-6;
  int cluster_levels = 5;
  /// Allowed relative mismatch between the observed tail contraction and the
  /// inverse multiplier of the refined cycle.
  double ratio_tol = 0.1;
  double certification_tol = 1e-9;
  double parabolic_tol = 1e-3;
  double colanding_tol = 1e-6;
};

struct PeriodicCertificate {
  std::size_t preperiod = 0;
  std::size_t period = 1;
  /// Periodic point where the ray of sigma^preperiod(a) lands.
  Complex refined;
  /// (P^period)'(refined)
  Complex multiplier;
  bool parabolic = false;
};

struct LandingResult {
  Angle angle;
  LandingStatus status = LandingStatus::truncated_budget;
  std::optional<Complex> landing_point;
  std::optional<PeriodicCertificate> certified_periodic;
  OrbitInfo orbit;
  int depth = 0;

  bool landed() const { return status == LandingStatus::landed; }
};

LandingResult land(const Polynomial& p, const Angle& a, int depth, const LandingOptions& opts = {});

/// Landing verdict from already computed orbit traces (as returned by
/// trace_orbit for a).
LandingResult land_from_traces(const Polynomial& p, const std::vector<RayTrace>& orbit_traces,
                               int depth, const LandingOptions& opts = {});

enum class CoLanding { yes, no, undetermined };

std::string to_string(CoLanding c);

/// Co-landing verdict for two landing results of the same polynomial.
CoLanding co_landing(const LandingResult& a, const LandingResult& b, double tol);

/// Throws std::invalid_argument when a == b.
CoLanding co_land(const Polynomial& p, const Angle& a, const Angle& b, int depth,
                  const LandingOptions& opts = {});

}  // namespace lamina
