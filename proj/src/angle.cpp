#include "lamina/angle.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

namespace lamina {

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw AngleParseError("empty integer in angle '" + std::string(whole) + "'");
  std::size_t i = 0;
  bool negative = false;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw AngleParseError("bad angle '" + std::string(whole) + "'");
  BigInt v = 0;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c < '0' || c > '9') throw AngleParseError("bad angle '" + std::string(whole) + "'");
    v = v * 10 + (c - '0');
  }
  return negative ? BigInt(-v) : v;
}

BigInt ipow(unsigned base, std::size_t e) {
  BigInt r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

BigInt word_value(const Word& w, unsigned d) {
  BigInt v = 0;
  for (unsigned digit : w) {
    if (digit >= d) throw std::invalid_argument("digit out of range for base");
    v = v * d + digit;
  }
  return v;
}

void require_degree(unsigned d) {
  if (d < 2) throw std::invalid_argument("degree must be at least 2");
}

}  // namespace

Angle::Angle(BigInt num, BigInt den) {
  if (den == 0) throw std::invalid_argument("angle denominator is zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num %= den;
  if (num < 0) num += den;
  BigInt g = boost::multiprecision::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  num_ = std::move(num);
  den_ = std::move(den);
}

Angle Angle::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Angle(parse_integer(text, text), BigInt(1));
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw AngleParseError("zero denominator in angle '" + std::string(text) + "'");
  return Angle(parse_integer(text.substr(0, slash), text), den);
}

double Angle::to_double() const {
  using boost::multiprecision::cpp_rational;
  return cpp_rational(num_, den_).convert_to<double>();
}

std::string Angle::str() const {
  if (num_ == 0) return "0";
  return num_.str() + "/" + den_.str();
}

std::strong_ordering operator<=>(const Angle& a, const Angle& b) {
  int c = a.den_ == b.den_ ? a.num_.compare(b.num_) : BigInt(a.num_ * b.den_).compare(b.num_ * a.den_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Angle sigma(const Angle& a, unsigned d) {
  require_degree(d);
  return Angle(a.num() * d, a.den());
}

Angle sigma_n(const Angle& a, unsigned d, std::size_t n) {
  require_degree(d);
  Angle r = a;
  for (std::size_t i = 0; i < n; ++i) r = sigma(r, d);
  return r;
}

std::vector<Angle> preimages(const Angle& a, unsigned d) {
  require_degree(d);
  std::vector<Angle> out;
  out.reserve(d);
  for (unsigned j = 0; j < d; ++j) out.emplace_back(a.num() + a.den() * j, a.den() * d);
  return out;
}

std::vector<Angle> forward_orbit(const Angle& a, unsigned d) {
  require_degree(d);
  std::map<Angle, std::size_t> seen;
  std::vector<Angle> orbit;
  Angle x = a;
  while (!seen.contains(x)) {
    seen.emplace(x, orbit.size());
    orbit.push_back(x);
    x = sigma(x, d);
  }
  return orbit;
}

OrbitInfo orbit_info(const Angle& a, unsigned d) {
  require_degree(d);
  std::map<Angle, std::size_t> seen;
  Angle x = a;
  std::size_t i = 0;
  for (;;) {
    auto [it, inserted] = seen.emplace(x, i);
    if (!inserted) return OrbitInfo{it->second, i - it->second};
    x = sigma(x, d);
    ++i;
  }
}

Word digits(const Angle& a, unsigned d, std::size_t n) {
  require_degree(d);
  Word w;
  w.reserve(n);
  BigInt r = a.num();
  for (std::size_t i = 0; i < n; ++i) {
    r *= d;
    BigInt q = r / a.den();
    r -= q * a.den();
    w.push_back(q.convert_to<unsigned>());
  }
  return w;
}

Expansion expansion(const Angle& a, unsigned d) {
  OrbitInfo info = orbit_info(a, d);
  Word all = digits(a, d, info.preperiod + info.period);
  Expansion e;
  e.prefix.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(info.preperiod));
  e.period.assign(all.begin() + static_cast<std::ptrdiff_t>(info.preperiod), all.end());
  return e;
}

Angle from_periodic_digits(const Word& prefix, const Word& repeating, unsigned d) {
  require_degree(d);
  if (repeating.empty()) throw std::invalid_argument("repeating word must be non-empty");
  // value = (P + R / (d^m - 1)) / d^l
  BigInt cycle = ipow(d, repeating.size()) - 1;
  BigInt num = word_value(prefix, d) * cycle + word_value(repeating, d);
  BigInt den = ipow(d, prefix.size()) * cycle;
  return Angle(std::move(num), std::move(den));
}

bool in_ccw_order(const Angle& a, const Angle& b, const Angle& c) {
  if (a == b || b == c || a == c)
    throw std::invalid_argument("in_ccw_order needs pairwise distinct angles");
  return (a < b && b < c) || (b < c && c < a) || (c < a && a < b);
}

bool in_open_arc(const Angle& x, const Angle& a, const Angle& b) {
  if (x == a || x == b || a == b) return false;
  return in_ccw_order(a, x, b);
}

bool leaves_cross(const Chord& p, const Chord& q) {
  const auto& [a, b] = p;
  const auto& [c, e] = q;
  if (a == b || c == e) return false;
  if (a == c || a == e || b == c || b == e) return false;
  return in_open_arc(c, a, b) != in_open_arc(e, a, b);
}

std::vector<Angle> rationals_up_to(unsigned max_den) {
  std::vector<Angle> out;
  for (unsigned q = 1; q <= max_den; ++q)
    for (unsigned p = 0; p < q; ++p)
      if (std::gcd(p, q) == 1) out.emplace_back(static_cast<long long>(p), static_cast<long long>(q));
  std::sort(out.begin(), out.end());
  return out;
}

std::string word_string(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (unsigned digit : w) s.push_back(static_cast<char>(digit < 10 ? '0' + digit : 'a' + (digit - 10)));
  return s;
}

Word parse_word(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    if (c >= '0' && c <= '9')
      w.push_back(static_cast<unsigned>(c - '0'));
    else if (c >= 'a' && c <= 'z')
      w.push_back(static_cast<unsigned>(c - 'a' + 10));
    else
      throw std::invalid_argument("bad digit word '" + std::string(text) + "'");
  }
  return w;
}

}  // namespace lamina
