#pragma once

// Exact rational points of the circle R/Z and the angle map t -> d*t.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lamina {

using BigInt = boost::multiprecision::cpp_int;

/// A finite word of base-d digits, most significant first.
using Word = std::vector<unsigned>;

class AngleParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Reduced fraction num/den with 0 <= num < den.
///
/// Construction always reduces modulo 1 and by the gcd, so two Angles compare
/// equal iff they denote the same point of the circle.
class Angle {
 public:
  Angle() = default;
  Angle(BigInt num, BigInt den);
  Angle(long long num, long long den) : Angle(BigInt(num), BigInt(den)) {}

  /// Accepts "p/q" or a bare integer (which reduces to 0).
  static Angle parse(std::string_view text);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }

  double to_double() const;
  std::string str() const;

  friend bool operator==(const Angle& a, const Angle& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  /// Order by value in [0, 1).
  friend std::strong_ordering operator<=>(const Angle& a, const Angle& b);

 private:
  BigInt num_{0};
  BigInt den_{1};
};

struct OrbitInfo {
  std::size_t preperiod = 0;
  std::size_t period = 1;

  friend bool operator==(const OrbitInfo&, const OrbitInfo&) = default;
};

/// Eventually periodic digit expansion: prefix followed by period repeated.
struct Expansion {
  Word prefix;
  Word period;
};

/// d * a mod 1.
Angle sigma(const Angle& a, unsigned d);

/// sigma applied n times.
Angle sigma_n(const Angle& a, unsigned d, std::size_t n);

/// The d preimages (a + j) / d, j = 0..d-1, in increasing order.
std::vector<Angle> preimages(const Angle& a, unsigned d);

OrbitInfo orbit_info(const Angle& a, unsigned d);

/// Forward orbit a, sigma(a), ... listing each distinct angle once; the
/// entry following the last one is orbit[info.preperiod].
std::vector<Angle> forward_orbit(const Angle& a, unsigned d);

/// First n base-d digits. Terminating expansions use trailing zeros.
Word digits(const Angle& a, unsigned d, std::size_t n);

/// Canonical eventually periodic expansion; prefix length is the preperiod
/// and period length the period of a under sigma_d.
Expansion expansion(const Angle& a, unsigned d);

Angle from_periodic_digits(const Word& prefix, const Word& repeating,
                           unsigned d);

/// True iff going counterclockwise from a one meets b before c.
/// Throws std::invalid_argument unless a, b, c are pairwise distinct.
bool in_ccw_order(const Angle& a, const Angle& b, const Angle& c);

/// True iff x lies in the open counterclockwise arc from a to b.
bool in_open_arc(const Angle& x, const Angle& a, const Angle& b);

using Chord = std::pair<Angle, Angle>;

/// True iff the two chords meet in the open disk. Chords sharing an endpoint
/// never cross.
bool leaves_cross(const Chord& p, const Chord& q);

/// All reduced angles p/q with 1 <= q <= max_den, sorted by value.
std::vector<Angle> rationals_up_to(unsigned max_den);

std::string word_string(const Word& w);
Word parse_word(std::string_view text);

}  // namespace lamina
