#pragma once

// Rational laminations: finite classes of co-landing angles that are
// pairwise unlinked on the circle.

#include "lamina/angle.hpp"
#include "lamina/polynomial.hpp"
#include "lamina/ray_tracer.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lamina {

/// Finite set of angles, sorted by value.
class AngleClass {
 public:
  AngleClass() = default;
  explicit AngleClass(std::vector<Angle> angles);
  AngleClass(std::initializer_list<Angle> angles) : AngleClass(std::vector<Angle>(angles)) {}

  static AngleClass parse(const std::vector<std::string>& angles);

  const std::vector<Angle>& angles() const noexcept { return angles_; }
  std::size_t size() const noexcept { return angles_.size(); }
  const Angle& smallest() const { return angles_.front(); }
  bool contains(const Angle& a) const;

  /// Boundary chords of the convex hull in circular order: none for a
  /// singleton, one for a leaf, size() otherwise.
  std::vector<Chord> sides() const;

  std::string str() const;

  friend bool operator==(const AngleClass&, const AngleClass&) = default;
  friend auto operator<=>(const AngleClass& a, const AngleClass& b) {
    return a.angles_ <=> b.angles_;
  }

 private:
  std::vector<Angle> angles_;
};

/// True iff some side of a crosses some side of b.
bool classes_linked(const AngleClass& a, const AngleClass& b);

/// Elementwise image under sigma_d.
AngleClass image(const AngleClass& c, unsigned d);

struct Lamination {
  unsigned degree = 2;
  std::vector<AngleClass> classes;
  std::vector<std::string> warnings;

  /// Sort classes by smallest member.
  void normalize();

  /// Index of the class containing a, if any.
  std::optional<std::size_t> find(const Angle& a) const;
  bool contains_class(const AngleClass& c) const;
};

class LaminationConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PullbackError : public std::runtime_error {
 public:
  PullbackError(const std::string& what, int level) : std::runtime_error(what), level_(level) {}
  int level() const noexcept { return level_; }

 private:
  int level_;
};

struct BuildOptions {
  LandingOptions landing;
  int threads = 1;
  int connectivity_budget = 1000;
};

/// Lands every rational angle with denominator <= max_den and groups the
/// angles whose certified landing points agree. Singleton classes are
/// dropped; angles whose rays did not land become warnings.
///
/// Throws DisconnectedJuliaSetError for disconnected Julia sets and
/// LaminationConsistencyError when tolerance chaining would merge angles
/// whose landing points are farther apart than the co-landing tolerance.
Lamination build_rational_lamination(const Polynomial& p, unsigned max_den, int depth,
                                     const BuildOptions& opts = {});

/// Adds `levels` rounds of sigma_d-preimage classes of the generators to lam.
/// Each preimage grouping must be the unique one keeping the lamination
/// unlinked; otherwise PullbackError names the level.
Lamination pullback_closure(const Lamination& lam, const std::vector<AngleClass>& generators,
                            int levels);

struct Violation {
  std::size_t first = 0;
  /// Second class index; npos for single-class violations.
  std::size_t second = npos;
  std::string reason;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

struct CheckResult {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Brute force over all pairs of classes and all pairs of sides.
CheckResult check_unlinked(const Lamination& lam);

/// Every class maps into a single class, or onto a single angle.
CheckResult check_invariant(const Lamination& lam);

}  // namespace lamina
