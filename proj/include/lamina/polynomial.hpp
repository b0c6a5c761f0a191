#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lamina {

using Complex = std::complex<double>;

class PolynomialParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RootFindingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Monic complex polynomial of degree >= 2, coefficients highest degree first.
class Polynomial {
 public:
  explicit Polynomial(std::vector<Complex> coefficients);

  /// z^2 + c
  static Polynomial quadratic(Complex c);

  /// "1,0,-1" (coefficient list, highest first) or "c=<complex>" for z^2+c.
  /// Complex literals look like "-0.12+0.74i", "2", "i", "-3.5i".
  static Polynomial parse(std::string_view text);

  unsigned degree() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
  std::span<const Complex> coefficients() const noexcept { return coeffs_; }

  Complex operator()(Complex z) const noexcept;

  /// P(z) and P'(z) in one Horner pass.
  std::pair<Complex, Complex> value_and_derivative(Complex z) const noexcept;

  /// P(z)/z^d - 1, evaluated in powers of 1/z. Exactly zero for z^d.
  Complex relative_tail(Complex z) const noexcept;

  std::string str() const;

 private:
  std::vector<Complex> coeffs_;
};

Complex evaluate(const Polynomial& p, Complex z);

/// Iterate P n times.
Complex iterate(const Polynomial& p, Complex z, std::size_t n);

/// P^n(z) together with (P^n)'(z).
std::pair<Complex, Complex> iterate_with_derivative(const Polynomial& p, Complex z,
                                                    std::size_t n);

/// max(2, sum of coefficient moduli). Orbits leaving this disk escape.
double escape_radius(const Polynomial& p);

/// Simultaneous (Aberth) iteration on a monic-or-not coefficient list,
/// highest degree first. Throws RootFindingError when the iteration cap is
/// reached before every correction drops below tol.
std::vector<Complex> polynomial_roots(std::span<const Complex> coefficients,
                                      double tol = 1e-12, int max_iter = 200);

/// Roots of P'.
std::vector<Complex> critical_points(const Polynomial& p);

enum class Verdict { connected, disconnected, undetermined };

std::string to_string(Verdict v);

struct ConnectivityReport {
  Verdict verdict = Verdict::undetermined;
  std::vector<Complex> escaping_critical_points;
  int iteration_budget_used = 0;
  /// A connected verdict only says no critical orbit escaped within the budget.
  bool heuristic = true;
};

ConnectivityReport connectivity(const Polynomial& p, int budget);

/// Parse a complex literal as accepted by Polynomial::parse.
Complex parse_complex(std::string_view text);

}  // namespace lamina
