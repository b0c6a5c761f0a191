#include "lamina/polynomial.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>

namespace lamina {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Reads a leading real number; returns false if none is present.
bool read_real(std::string_view& s, double& out) {
  std::string buf(s);
  char* end = nullptr;
  out = std::strtod(buf.c_str(), &end);
  auto used = static_cast<std::size_t>(end - buf.c_str());
  if (used == 0) return false;
  s.remove_prefix(used);
  return true;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  std::string_view s = trim(text);
  auto fail = [&] { return PolynomialParseError("bad complex number '" + std::string(text) + "'"); };
  if (s.empty()) throw fail();

  // Pure imaginary unit forms: "i", "+i", "-i".
  if (s == "i" || s == "+i") return {0.0, 1.0};
  if (s == "-i") return {0.0, -1.0};

  std::string_view rest = s;
  double first = 0.0;
  if (!read_real(rest, first)) throw fail();
  rest = trim(rest);
  if (rest.empty()) return {first, 0.0};
  if (rest == "i") return {0.0, first};

  if (rest.front() != '+' && rest.front() != '-') throw fail();
  double sign = rest.front() == '-' ? -1.0 : 1.0;
  rest.remove_prefix(1);
  rest = trim(rest);
  if (rest == "i") return {first, sign};
  double second = 0.0;
  if (!read_real(rest, second)) throw fail();
  if (trim(rest) != "i") throw fail();
  return {first, sign * second};
}

Polynomial::Polynomial(std::vector<Complex> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.size() < 3) throw std::invalid_argument("polynomial degree must be at least 2");
  if (coeffs_.front() != Complex(1.0, 0.0)) throw std::invalid_argument("polynomial must be monic");
  for (const Complex& c : coeffs_)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw std::invalid_argument("polynomial coefficients must be finite");
}

Polynomial Polynomial::quadratic(Complex c) { return Polynomial({1.0, 0.0, c}); }

Polynomial Polynomial::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.starts_with("c=")) return quadratic(parse_complex(s.substr(2)));
  std::vector<Complex> coeffs;
  while (true) {
    auto comma = s.find(',');
    coeffs.push_back(parse_complex(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  try {
    return Polynomial(std::move(coeffs));
  } catch (const std::invalid_argument& e) {
    throw PolynomialParseError(std::string(e.what()) + " in '" + std::string(text) + "'");
  }
}

Complex Polynomial::operator()(Complex z) const noexcept {
  Complex acc = coeffs_.front();
  for (std::size_t i = 1; i < coeffs_.size(); ++i) acc = acc * z + coeffs_[i];
  return acc;
}

std::pair<Complex, Complex> Polynomial::value_and_derivative(Complex z) const noexcept {
  Complex value = coeffs_.front();
  Complex deriv = 0.0;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    deriv = deriv * z + value;
    value = value * z + coeffs_[i];
  }
  return {value, deriv};
}

Complex Polynomial::relative_tail(Complex z) const noexcept {
  // sum_{j=1..d} a_{d-j} u^j with u = 1/z
  Complex u = 1.0 / z;
  Complex acc = 0.0;
  for (std::size_t i = coeffs_.size() - 1; i >= 1; --i) acc = (acc + coeffs_[i]) * u;
  return acc;
}

std::string Polynomial::str() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    const Complex& c = coeffs_[i];
    if (c.imag() == 0.0)
      out += fmt::format("{}", c.real());
    else
      out += fmt::format("{}{:+}i", c.real(), c.imag());
  }
  return out;
}

Complex evaluate(const Polynomial& p, Complex z) { return p(z); }

Complex iterate(const Polynomial& p, Complex z, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) z = p(z);
  return z;
}

std::pair<Complex, Complex> iterate_with_derivative(const Polynomial& p, Complex z, std::size_t n) {
  Complex deriv = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    auto [v, dv] = p.value_and_derivative(z);
    deriv *= dv;
    z = v;
  }
  return {z, deriv};
}

double escape_radius(const Polynomial& p) {
  double sum = 0.0;
  for (const Complex& c : p.coefficients()) sum += std::abs(c);
  return std::max(2.0, sum);
}

std::vector<Complex> polynomial_roots(std::span<const Complex> coefficients, double tol, int max_iter) {
  std::size_t first = 0;
  while (first < coefficients.size() && coefficients[first] == Complex(0.0)) ++first;
  if (coefficients.size() - first < 2) return {};
  std::vector<Complex> c(coefficients.begin() + static_cast<std::ptrdiff_t>(first), coefficients.end());
  for (auto& x : c) x /= coefficients[first];
  const std::size_t n = c.size() - 1;
  if (n == 1) return {-c[1]};

  auto eval = [&](Complex z) {
    Complex v = c[0], dv = 0.0;
    for (std::size_t i = 1; i < c.size(); ++i) {
      dv = dv * z + v;
      v = v * z + c[i];
    }
    return std::pair{v, dv};
  };

  // Cauchy bound for the starting circle, offset so no start is real.
  double bound = 0.0;
  for (std::size_t i = 1; i < c.size(); ++i) bound = std::max(bound, std::abs(c[i]));
  const double radius = 0.5 * (1.0 + bound);
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k)
    z[k] = std::polar(radius, 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.25) / static_cast<double>(n) + 0.4);

  for (int it = 0; it < max_iter; ++it) {
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      auto [v, dv] = eval(z[k]);
      if (v == Complex(0.0)) continue;
      Complex ratio = v / dv;
      Complex repulsion = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      Complex step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) step = ratio;
      z[k] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[k])));
    }
    if (worst <= tol) return z;
  }
  throw RootFindingError(fmt::format("root finder did not converge in {} iterations", max_iter));
}

std::vector<Complex> critical_points(const Polynomial& p) {
  auto coeffs = p.coefficients();
  const std::size_t d = coeffs.size() - 1;
  std::vector<Complex> deriv;
  deriv.reserve(d);
  for (std::size_t i = 0; i < d; ++i) deriv.push_back(coeffs[i] * static_cast<double>(d - i));
  return polynomial_roots(deriv);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::connected: return "connected";
    case Verdict::disconnected: return "disconnected";
    case Verdict::undetermined: return "undetermined";
  }
  return "undetermined";
}

ConnectivityReport connectivity(const Polynomial& p, int budget) {
  if (budget < 1) throw std::invalid_argument("connectivity budget must be >= 1");
  const double radius = escape_radius(p);
  ConnectivityReport report;
  report.iteration_budget_used = budget;
  bool non_finite = false;
  for (const Complex& c : critical_points(p)) {
    Complex z = c;
    for (int i = 0; i < budget; ++i) {
      z = p(z);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        non_finite = true;
        break;
      }
      if (std::abs(z) > radius) {
        report.escaping_critical_points.push_back(c);
        break;
      }
    }
  }
  if (!report.escaping_critical_points.empty())
    report.verdict = Verdict::disconnected;
  else if (non_finite)
    report.verdict = Verdict::undetermined;
  else
    report.verdict = Verdict::connected;
  return report;
}

}  // namespace lamina
