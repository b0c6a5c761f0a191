#include "lamina/renormalization.hpp"

#include "lamina/parallel.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <numeric>

namespace lamina {

namespace {

Word substitute(const Word& w, const TuningData& t) {
  Word out;
  out.reserve(w.size() * t.period);
  for (unsigned digit : w) {
    const Word& block = digit == 0 ? t.word_u : t.word_v;
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

// Block-by-block decode of w; nullopt on a block outside {u, v}.
std::optional<Word> decode(const Word& w, const TuningData& t) {
  Word out;
  const std::size_t n = t.period;
  out.reserve(w.size() / n);
  for (std::size_t i = 0; i + n <= w.size(); i += n) {
    if (std::equal(t.word_u.begin(), t.word_u.end(), w.begin() + static_cast<std::ptrdiff_t>(i)))
      out.push_back(0);
    else if (std::equal(t.word_v.begin(), t.word_v.end(), w.begin() + static_cast<std::ptrdiff_t>(i)))
      out.push_back(1);
    else
      return std::nullopt;
  }
  return out;
}

}  // namespace

TuningData TuningData::from_angles(const Angle& theta_minus, const Angle& theta_plus, std::size_t n, unsigned d,
                                   unsigned k) {
  if (k != 2) throw TuningError("only inner degree 2 (quadratic tuning) is supported");
  if (d < 2) throw TuningError("ambient degree must be at least 2");
  if (n < 1) throw TuningError("tuning period must be at least 1");
  for (const Angle* a : {&theta_minus, &theta_plus}) {
    OrbitInfo info = orbit_info(*a, d);
    if (info.preperiod != 0 || info.period != n)
      throw TuningError(fmt::format("{} is not periodic of exact period {} under sigma_{}", a->str(), n, d));
  }
  TuningData t;
  t.theta_minus = theta_minus;
  t.theta_plus = theta_plus;
  t.period = n;
  t.degree = d;
  t.inner_degree = k;
  t.word_u = digits(theta_minus, d, n);
  t.word_v = theta_plus.is_zero() ? Word(n, d - 1) : digits(theta_plus, d, n);
  if (t.word_u == t.word_v) throw TuningError("tuning words coincide");
  return t;
}

TuningData TuningData::identity(unsigned d) { return from_angles(Angle(), Angle(), 1, d, 2); }

Angle tuning_p(const TuningData& t, const Angle& a) {
  if (t.inner_degree != 2) throw TuningError("only inner degree 2 (quadratic tuning) is supported");
  Expansion e = expansion(a, t.inner_degree);
  return from_periodic_digits(substitute(e.prefix, t), substitute(e.period, t), t.degree);
}

std::optional<Angle> tuning_nu(const TuningData& t, const Angle& b) {
  if (t.inner_degree != 2) throw TuningError("only inner degree 2 (quadratic tuning) is supported");
  Expansion e = expansion(b, t.degree);
  const std::size_t n = t.period;
  const std::size_t l = e.prefix.size();
  const std::size_t m = e.period.size();
  auto digit = [&](std::size_t i) { return i < l ? e.prefix[i] : e.period[(i - l) % m]; };

  // Blocks from a multiple of n past the prefix repeat with period lcm(m, n).
  const std::size_t head = (l + n - 1) / n * n;
  const std::size_t cycle = std::lcm(m, n);
  Word prefix_digits(head), cycle_digits(cycle);
  for (std::size_t i = 0; i < head; ++i) prefix_digits[i] = digit(i);
  for (std::size_t i = 0; i < cycle; ++i) cycle_digits[i] = digit(head + i);

  auto prefix = decode(prefix_digits, t);
  if (!prefix) return std::nullopt;
  auto rep = decode(cycle_digits, t);
  if (!rep) return std::nullopt;
  return from_periodic_digits(*prefix, *rep, t.inner_degree);
}

ExactCheck verify_semiconjugacy(const TuningData& t, std::span<const Angle> samples) {
  ExactCheck r;
  for (const Angle& b : samples) {
    auto nb = tuning_nu(t, b);
    if (!nb) {
      r.failures.push_back(b.str() + ": not in the domain of nu");
      continue;
    }
    Angle ret = sigma_n(b, t.degree, t.period);
    auto lhs = tuning_nu(t, ret);
    Angle rhs = sigma(*nb, t.inner_degree);
    if (!lhs)
      r.failures.push_back(fmt::format("{}: return image {} is not in the domain of nu", b.str(), ret.str()));
    else if (!(*lhs == rhs))
      r.failures.push_back(fmt::format("{}: nu(sigma^n) = {} but sigma(nu) = {}", b.str(), lhs->str(), rhs.str()));
  }
  r.ok = r.failures.empty();
  return r;
}

OrderReport verify_order_preserving(std::span<const Angle> samples, std::span<const Angle> images) {
  if (samples.size() != images.size()) throw std::invalid_argument("samples and images differ in length");
  const std::size_t n = samples.size();

  // Circular order of a triple only depends on the relative ranks, so rank
  // both sides once and compare triples on integers.
  auto ranks = [n](std::span<const Angle> v) {
    std::vector<std::size_t> idx(n), rank(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    for (std::size_t i = 0; i < n; ++i) rank[idx[i]] = i;
    for (std::size_t i = 1; i < n; ++i)
      if (v[idx[i]] == v[idx[i - 1]]) rank[idx[i]] = rank[idx[i - 1]];
    return rank;
  };
  const auto rs = ranks(samples);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (rs[i] == rs[j]) throw std::invalid_argument("order check needs pairwise distinct samples");
  const auto ri = ranks(images);

  auto ccw = [](std::size_t a, std::size_t b, std::size_t c) {
    return (a < b && b < c) || (b < c && c < a) || (c < a && a < b);
  };

  OrderReport r;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        ++r.triples_checked;
        bool distinct = ri[i] != ri[j] && ri[j] != ri[k] && ri[i] != ri[k];
        if (!distinct || ccw(rs[i], rs[j], rs[k]) != ccw(ri[i], ri[j], ri[k])) {
          r.ok = false;
          r.witness = std::array<Angle, 3>{samples[i], samples[j], samples[k]};
          return r;
        }
      }
    }
  }
  return r;
}

OrderReport verify_order_preserving(std::span<const Angle> samples, const std::function<Angle(const Angle&)>& f) {
  std::vector<Angle> images;
  images.reserve(samples.size());
  for (const Angle& a : samples) images.push_back(f(a));
  return verify_order_preserving(samples, images);
}

OrderReport verify_order_preserving(const TuningData& t, std::span<const Angle> samples) {
  return verify_order_preserving(samples, [&](const Angle& a) { return tuning_p(t, a); });
}

std::vector<Angle> anchor_sample(std::size_t count) {
  std::vector<Angle> out;
  for (long long q = 1; out.size() < count; ++q)
    for (long long p = 0; p < q && out.size() < count; ++p)
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
  return out;
}

StrategicReport strategic_report(const Polynomial& poly, const TuningData& t, std::size_t sample_size, int depth,
                                 const StrategicOptions& opts) {
  if (poly.degree() != t.degree) throw TuningError("tuning degree does not match the polynomial");
  ConnectivityReport conn = connectivity(poly, opts.landing.trace.connectivity_budget);
  if (conn.verdict == Verdict::disconnected)
    throw DisconnectedJuliaSetError("Julia set of " + poly.str() + " is disconnected");

  StrategicReport report;
  report.anchor_sample = anchor_sample(sample_size);
  report.order_preserved = report.anchor_sample.size() < 3 || verify_order_preserving(t, report.anchor_sample).ok;

  LandingResult root = land(poly, t.theta_minus, depth, opts.landing);
  if (!root.landed()) {
    report.failures.push_back("root ray " + t.theta_minus.str() + " did not land: " + to_string(root.status));
    return report;
  }
  const Complex r = *root.landing_point;
  // The small Julia set rooted at r holds one of the first n critical orbit
  // points; take the one closest to r.
  std::vector<Complex> orbit;
  for (Complex w : critical_points(poly)) {
    for (std::size_t j = 1; j <= t.period; ++j) {
      w = poly(w);
      orbit.push_back(w);
    }
  }
  report.window_center = *std::min_element(orbit.begin(), orbit.end(), [&](Complex a, Complex b) {
    return std::abs(a - r) < std::abs(b - r);
  });
  report.window_radius = (1.0 + opts.window_margin) * std::abs(r - report.window_center);

  const auto& anchors = report.anchor_sample;
  std::vector<LandingResult> landings(anchors.size());
  parallel_for(anchors.size(), opts.threads,
               [&](std::size_t i) { landings[i] = land(poly, tuning_p(t, anchors[i]), depth, opts.landing); });

  std::size_t agreed = 0;
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    const LandingResult& l = landings[i];
    const std::string label = anchors[i].str() + " -> " + l.angle.str();
    if (!l.landed()) {
      report.failures.push_back(label + ": " + to_string(l.status));
      continue;
    }
    // The landing point is (pre)periodic; walking preperiod + period * n
    // steps visits its whole P^n-orbit.
    Complex z = *l.landing_point;
    const std::size_t steps = l.orbit.preperiod + l.orbit.period * t.period;
    bool inside = true;
    for (std::size_t s = 0; s <= steps && inside; ++s) {
      if (s % t.period == 0 && std::abs(z - report.window_center) > report.window_radius) inside = false;
      z = poly(z);
    }
    if (inside)
      ++agreed;
    else
      report.failures.push_back(label + ": landing orbit leaves the renormalization window");
  }
  report.landing_agreement = anchors.empty() ? 1.0 : static_cast<double>(agreed) / static_cast<double>(anchors.size());
  return report;
}

}  // namespace lamina
