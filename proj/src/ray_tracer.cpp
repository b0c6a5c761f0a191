#include "lamina/ray_tracer.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lamina {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Solves P(z) = target starting from seed.
std::optional<Complex> newton_preimage(const Polynomial& p, Complex target, Complex seed,
                                       const TraceOptions& opts) {
  Complex z = seed;
  for (int it = 0; it < opts.newton_max_iter; ++it) {
    auto [v, dv] = p.value_and_derivative(z);
    Complex step = (v - target) / dv;
    z -= step;
    if (!finite(z)) return std::nullopt;
    if (std::abs(step) <= opts.newton_tol * std::max(1.0, std::abs(z))) return z;
  }
  return std::nullopt;
}

// Solves P^n(z) = z starting from seed.
std::optional<Complex> newton_periodic(const Polynomial& p, std::size_t n, Complex seed, double tol,
                                       int max_iter) {
  Complex z = seed;
  for (int it = 0; it < max_iter; ++it) {
    auto [v, dv] = iterate_with_derivative(p, z, n);
    Complex step = (v - z) / (dv - 1.0);
    z -= step;
    if (!finite(z)) return std::nullopt;
    if (std::abs(step) <= tol * std::max(1.0, std::abs(z))) return z;
  }
  return std::nullopt;
}

// Solves P^n(z) = target starting from seed. Near critical points the root
// is multiple and convergence only linear, hence the generous cap.
std::optional<Complex> newton_lift(const Polynomial& p, std::size_t n, Complex target, Complex seed,
                                   double tol, int max_iter) {
  Complex z = seed;
  for (int it = 0; it < max_iter; ++it) {
    auto [v, dv] = iterate_with_derivative(p, z, n);
    if (v == target) return z;
    Complex step = (v - target) / dv;
    z -= step;
    if (!finite(z)) return std::nullopt;
    if (std::abs(step) <= tol * std::max(1.0, std::abs(z))) return z;
  }
  return std::nullopt;
}

bool near_root_of_unity(Complex lambda, double tol) {
  if (std::abs(std::abs(lambda) - 1.0) > tol) return false;
  for (int s = 1; s <= 24; ++s) {
    double turns = std::arg(lambda) / kTwoPi * s;
    if (std::abs(turns - std::round(turns)) * kTwoPi / s < tol) return true;
  }
  return false;
}

}  // namespace

double initial_potential(const Polynomial& p) { return 4.0 * std::log(escape_radius(p)); }

Complex boettcher(const Polynomial& p, Complex z) {
  const double d = p.degree();
  Complex log_sum = 0.0;
  double scale = 1.0;
  Complex x = z;
  for (int m = 0; m < 200; ++m) {
    Complex tail = p.relative_tail(x);
    scale /= d;
    Complex term = scale * std::log(1.0 + tail);
    log_sum += term;
    if (std::abs(term) < 1e-18) break;
    x = p(x);
    if (!finite(x) || std::abs(x) > 1e150) break;
  }
  return z * std::exp(log_sum);
}

Complex inverse_boettcher(const Polynomial& p, Complex w) {
  auto coeffs = p.coefficients();
  Complex z = w - coeffs[1] / static_cast<double>(p.degree());
  for (int it = 0; it < 200; ++it) {
    Complex next = z * (w / boettcher(p, z));
    bool done = std::abs(next - z) <= 1e-15 * std::abs(next);
    z = next;
    if (done) break;
  }
  return z;
}

std::vector<RayTrace> trace_orbit(const Polynomial& p, const Angle& a, int depth, const TraceOptions& opts) {
  if (depth < 1) throw std::invalid_argument("trace depth must be >= 1");
  if (opts.substeps < 1) throw std::invalid_argument("substeps must be >= 1");
  ConnectivityReport conn = connectivity(p, opts.connectivity_budget);
  if (conn.verdict == Verdict::disconnected)
    throw DisconnectedJuliaSetError("Julia set of " + p.str() +
                                    " is disconnected; external rays are not traced");

  const unsigned d = p.degree();
  const std::vector<Angle> orbit = forward_orbit(a, d);
  const std::size_t preperiod = orbit_info(a, d).preperiod;
  const std::size_t m = orbit.size();
  auto next = [&](std::size_t i) { return i + 1 < m ? i + 1 : preperiod; };

  const int S = opts.substeps;
  const std::size_t samples = static_cast<std::size_t>(S) * static_cast<std::size_t>(depth) + 1;
  const double g0 = initial_potential(p);
  const double log_d = std::log(static_cast<double>(d));

  std::vector<double> potentials(samples);
  for (std::size_t k = 0; k < samples; ++k)
    potentials[k] = g0 * std::exp(-static_cast<double>(k) * log_d / S);

  std::vector<double> turns(m);
  for (std::size_t i = 0; i < m; ++i) turns[i] = orbit[i].to_double();

  std::vector<std::vector<Complex>> rows(m);
  for (auto& r : rows) r.reserve(samples);

  const Complex shift = p.coefficients()[1] / static_cast<double>(d);
  std::size_t done = samples;
  for (std::size_t k = 0; k < samples && done == samples; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      Complex target, seed;
      if (k < static_cast<std::size_t>(S)) {
        // Image sample lies beyond the first level: take it from the
        // Boettcher coordinate directly.
        target = inverse_boettcher(p, std::polar(std::exp(d * potentials[k]), kTwoPi * turns[next(i)]));
        seed = k == 0 ? std::polar(std::exp(potentials[k]), kTwoPi * turns[i]) - shift : rows[i][k - 1];
      } else {
        target = rows[next(i)][k - static_cast<std::size_t>(S)];
        seed = rows[i][k - 1];
      }
      auto z = newton_preimage(p, target, seed, opts);
      if (!z) {
        done = k;
        break;
      }
      rows[i].push_back(*z);
    }
  }

  std::vector<RayTrace> traces(m);
  for (std::size_t i = 0; i < m; ++i) {
    RayTrace& t = traces[i];
    t.angle = orbit[i];
    t.substeps = S;
    t.status = done == samples ? TraceStatus::complete : TraceStatus::truncated_numeric;
    t.points.assign(rows[i].begin(), rows[i].begin() + static_cast<std::ptrdiff_t>(done));
    t.potentials.assign(potentials.begin(), potentials.begin() + static_cast<std::ptrdiff_t>(done));
  }
  return traces;
}

RayTrace trace_ray(const Polynomial& p, const Angle& a, int depth, const TraceOptions& opts) {
  return std::move(trace_orbit(p, a, depth, opts).front());
}

std::string to_string(LandingStatus s) {
  switch (s) {
    case LandingStatus::landed: return "landed";
    case LandingStatus::truncated_budget: return "truncated_budget";
    case LandingStatus::truncated_numeric: return "truncated_numeric";
  }
  return "truncated_budget";
}

std::string to_string(TraceStatus s) {
  return s == TraceStatus::complete ? "complete" : "truncated_numeric";
}

std::string to_string(CoLanding c) {
  switch (c) {
    case CoLanding::yes: return "yes";
    case CoLanding::no: return "no";
    case CoLanding::undetermined: return "undetermined";
  }
  return "undetermined";
}

LandingResult land_from_traces(const Polynomial& p, const std::vector<RayTrace>& orbit_traces, int depth,
                               const LandingOptions& opts) {
  const RayTrace& ray = orbit_traces.front();
  LandingResult result;
  result.angle = ray.angle;
  result.depth = depth;
  result.orbit = orbit_info(ray.angle, p.degree());
  if (ray.status == TraceStatus::truncated_numeric) {
    result.status = LandingStatus::truncated_numeric;
    return result;
  }

  const std::size_t l = result.orbit.preperiod;
  const std::size_t q = result.orbit.period;
  const int L = ray.levels();
  const int iq = static_cast<int>(q);
  const double tol = opts.trace.newton_tol;

  auto certify = [&]() -> bool {
    if (L < 2 * iq) return false;
    const RayTrace& cyc = orbit_traces.at(l);
    Complex y0 = cyc.level_point(L), y1 = cyc.level_point(L - iq), y2 = cyc.level_point(L - 2 * iq);
    auto w = newton_periodic(p, q, y0, tol, 100);
    if (!w) return false;
    auto [image, lambda] = iterate_with_derivative(p, *w, q);
    if (std::abs(image - *w) > opts.certification_tol * std::max(1.0, std::abs(*w))) return false;

    double d0 = std::abs(y0 - *w), d1 = std::abs(y1 - *w), d2 = std::abs(y2 - *w);
    // Tail already collapsed onto w (e.g. at a tip, where distance ~ t^2).
    bool on_point = d0 <= opts.landing_tol && d1 <= opts.landing_tol;

    bool parabolic = false;
    if (std::abs(lambda) > 1.0 + 1e-9) {
      if (!on_point) {
        if (!(d0 < d1 && d1 < d2)) return false;
        Complex r1 = (y0 - *w) / (y1 - *w) * lambda;
        Complex r2 = (y1 - *w) / (y2 - *w) * lambda;
        if (std::abs(r1 - 1.0) > opts.ratio_tol || std::abs(r2 - 1.0) > 2.0 * opts.ratio_tol) return false;
      }
    } else if (near_root_of_unity(lambda, opts.parabolic_tol)) {
      // No acceleration: the tail itself has to sit on the point.
      parabolic = true;
      for (int j = 0; j < opts.cluster_levels && j <= L; ++j)
        if (std::abs(cyc.level_point(L - j) - *w) > opts.landing_tol) return false;
    } else {
      return false;
    }

    Complex x = *w;
    if (l > 0) {
      Complex z0 = ray.level_point(L), z1 = ray.level_point(L - iq);
      auto lifted = newton_lift(p, l, *w, z0, tol, 400);
      if (!lifted) return false;
      x = *lifted;
      if (std::abs(iterate(p, x, l) - *w) > opts.certification_tol * std::max(1.0, std::abs(*w))) return false;
      if (std::abs(z0 - x) > std::max(std::abs(z1 - x), opts.landing_tol)) return false;
    }
    result.landing_point = x;
    result.certified_periodic = PeriodicCertificate{l, q, *w, lambda, parabolic};
    return true;
  };

  auto clustered = [&]() -> bool {
    if (L < opts.cluster_levels) return false;
    Complex last = ray.level_point(L);
    for (int j = 1; j <= opts.cluster_levels; ++j)
      if (std::abs(ray.level_point(L - j) - last) > opts.landing_tol) return false;
    result.landing_point = last;
    return true;
  };

  result.status = (certify() || clustered()) ? LandingStatus::landed : LandingStatus::truncated_budget;
  return result;
}

LandingResult land(const Polynomial& p, const Angle& a, int depth, const LandingOptions& opts) {
  return land_from_traces(p, trace_orbit(p, a, depth, opts.trace), depth, opts);
}

CoLanding co_landing(const LandingResult& a, const LandingResult& b, double tol) {
  if (!a.landed() || !b.landed()) return CoLanding::undetermined;
  if (!(a.orbit == b.orbit)) return CoLanding::no;
  return std::abs(*a.landing_point - *b.landing_point) < tol ? CoLanding::yes : CoLanding::no;
}

CoLanding co_land(const Polynomial& p, const Angle& a, const Angle& b, int depth, const LandingOptions& opts) {
  if (a == b) throw std::invalid_argument("co_land needs two distinct angles");
  return co_landing(land(p, a, depth, opts), land(p, b, depth, opts), opts.colanding_tol);
}

}  // namespace lamina
