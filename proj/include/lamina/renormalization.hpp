#pragma once

// Quadratic tuning combinatorics.
//
// A period-n renormalization of a degree-d polynomial is described by its
// characteristic ray pair (theta_minus, theta_plus). Their period-n digit
// blocks u and v turn a binary angle of the small Julia set into an angle of
// the big one by substituting 0 -> u, 1 -> v; decoding blocks back is the
// inverse map nu, defined exactly on angles whose expansion splits into u/v
// blocks.

#include "lamina/angle.hpp"
#include "lamina/lamination.hpp"
#include "lamina/polynomial.hpp"
#include "lamina/ray_tracer.hpp"

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lamina {

class TuningError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TuningData {
  Angle theta_minus;
  /// 0 here stands for the full turn, whose block is (d-1)^n.
  Angle theta_plus;
  std::size_t period = 1;
  Word word_u;
  Word word_v;
  unsigned degree = 2;
  unsigned inner_degree = 2;

  /// Derives the words from the angles. Both angles must have exact period n
  /// under sigma_d and distinct blocks; only inner degree 2 is supported.
  static TuningData from_angles(const Angle& theta_minus, const Angle& theta_plus, std::size_t n,
                                unsigned d = 2, unsigned k = 2);

  /// u = 0, v = d-1 with n = 1; p is the identity when d = 2.
  static TuningData identity(unsigned d = 2);
};

/// Substitutes each binary digit of a by the matching block.
Angle tuning_p(const TuningData& t, const Angle& a);

/// Decodes u/v blocks; nullopt when b is outside the image of p.
std::optional<Angle> tuning_nu(const TuningData& t, const Angle& b);

struct ExactCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

/// nu(sigma_d^n(b)) == sigma_k(nu(b)) for every sample.
ExactCheck verify_semiconjugacy(const TuningData& t, std::span<const Angle> samples);

struct OrderReport {
  bool ok = true;
  std::optional<std::array<Angle, 3>> witness;
  std::size_t triples_checked = 0;
};

/// Exhaustive triple test: in_ccw_order(a,b,c) <=> in_ccw_order(f(a),f(b),f(c)).
/// Also fails (with a witness) when f is not injective on the samples.
/// Samples must be pairwise distinct.
OrderReport verify_order_preserving(std::span<const Angle> samples, std::span<const Angle> images);
OrderReport verify_order_preserving(std::span<const Angle> samples,
                                    const std::function<Angle(const Angle&)>& f);
OrderReport verify_order_preserving(const TuningData& t, std::span<const Angle> samples);

/// The first `count` rational angles ordered by denominator, then numerator.
std::vector<Angle> anchor_sample(std::size_t count);

struct StrategicReport {
  std::vector<Angle> anchor_sample;
  bool order_preserved = false;
  double landing_agreement = 0.0;
  std::vector<std::string> failures;
  /// Disk that must contain the P^n-orbit of every accepted landing point.
  Complex window_center;
  double window_radius = 0.0;
};

struct StrategicOptions {
  LandingOptions landing;
  int threads = 1;
  double window_margin = 0.05;
};

/// Traces R(p(alpha)) for the anchor sample, certifies landing, and counts
/// landing points whose P^n-orbit stays in the renormalization window: the
/// disk around the point of P(crit), ..., P^n(crit) nearest the landing point
/// r of theta_minus, with radius (1 + margin) times their distance.
StrategicReport strategic_report(const Polynomial& p, const TuningData& t, std::size_t sample_size, int depth,
                                 const StrategicOptions& opts = {});

}  // namespace lamina
