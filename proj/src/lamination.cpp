#include "lamina/lamination.hpp"

#include "lamina/parallel.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <unordered_map>

namespace lamina {

namespace {

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // The smaller index becomes the root, so roots do not depend on merge order.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

struct CellHash {
  std::size_t operator()(const std::pair<long long, long long>& c) const noexcept {
    return std::hash<long long>()(c.first) * 1000003u ^ std::hash<long long>()(c.second);
  }
};

std::string point_string(Complex z) { return fmt::format("{:.9f}{:+.9f}i", z.real(), z.imag()); }

}  // namespace

AngleClass::AngleClass(std::vector<Angle> angles) : angles_(std::move(angles)) {
  std::sort(angles_.begin(), angles_.end());
  angles_.erase(std::unique(angles_.begin(), angles_.end()), angles_.end());
  if (angles_.empty()) throw std::invalid_argument("angle class must be non-empty");
}

AngleClass AngleClass::parse(const std::vector<std::string>& angles) {
  std::vector<Angle> v;
  v.reserve(angles.size());
  for (const auto& s : angles) v.push_back(Angle::parse(s));
  return AngleClass(std::move(v));
}

bool AngleClass::contains(const Angle& a) const { return std::binary_search(angles_.begin(), angles_.end(), a); }

std::vector<Chord> AngleClass::sides() const {
  std::vector<Chord> out;
  if (angles_.size() < 2) return out;
  if (angles_.size() == 2) return {{angles_[0], angles_[1]}};
  for (std::size_t i = 0; i < angles_.size(); ++i) out.emplace_back(angles_[i], angles_[(i + 1) % angles_.size()]);
  return out;
}

std::string AngleClass::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < angles_.size(); ++i) {
    if (i) s += ",";
    s += angles_[i].str();
  }
  return s + "}";
}

bool classes_linked(const AngleClass& a, const AngleClass& b) {
  for (const Chord& x : a.sides())
    for (const Chord& y : b.sides())
      if (leaves_cross(x, y)) return true;
  return false;
}

AngleClass image(const AngleClass& c, unsigned d) {
  std::vector<Angle> out;
  out.reserve(c.size());
  for (const Angle& a : c.angles()) out.push_back(sigma(a, d));
  return AngleClass(std::move(out));
}

void Lamination::normalize() {
  std::sort(classes.begin(), classes.end(),
            [](const AngleClass& a, const AngleClass& b) { return a.smallest() < b.smallest(); });
}

std::optional<std::size_t> Lamination::find(const Angle& a) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].contains(a)) return i;
  return std::nullopt;
}

bool Lamination::contains_class(const AngleClass& c) const {
  return std::find(classes.begin(), classes.end(), c) != classes.end();
}

Lamination build_rational_lamination(const Polynomial& p, unsigned max_den, int depth, const BuildOptions& opts) {
  if (max_den < 2) throw std::invalid_argument("max_den must be >= 2");
  ConnectivityReport conn = connectivity(p, opts.connectivity_budget);
  if (conn.verdict == Verdict::disconnected)
    throw DisconnectedJuliaSetError("Julia set of " + p.str() + " is disconnected");

  const std::vector<Angle> angles = rationals_up_to(max_den);
  std::vector<LandingResult> landings(angles.size());
  parallel_for(angles.size(), opts.threads,
               [&](std::size_t i) { landings[i] = land(p, angles[i], depth, opts.landing); });

  Lamination lam;
  lam.degree = p.degree();
  const double tol = opts.landing.colanding_tol;

  DisjointSet sets(angles.size());
  std::unordered_map<std::pair<long long, long long>, std::vector<std::size_t>, CellHash> grid;
  auto cell_of = [&](Complex z) {
    return std::pair{static_cast<long long>(std::floor(z.real() / tol)),
                     static_cast<long long>(std::floor(z.imag() / tol))};
  };

  for (std::size_t i = 0; i < angles.size(); ++i) {
    const LandingResult& li = landings[i];
    if (!li.landed()) {
      lam.warnings.push_back(fmt::format("{}: {} at depth {}", angles[i].str(), to_string(li.status), depth));
      continue;
    }
    auto [cx, cy] = cell_of(*li.landing_point);
    for (long long dx = -1; dx <= 1; ++dx) {
      for (long long dy = -1; dy <= 1; ++dy) {
        auto it = grid.find({cx + dx, cy + dy});
        if (it == grid.end()) continue;
        for (std::size_t j : it->second) {
          CoLanding c = co_landing(li, landings[j], tol);
          if (c == CoLanding::yes) {
            sets.unite(i, j);
          } else if (std::abs(*li.landing_point - *landings[j].landing_point) < tol) {
            lam.warnings.push_back(fmt::format("{} and {}: landing points agree but orbit types differ",
                                               angles[j].str(), angles[i].str()));
          }
        }
      }
    }
    grid[{cx, cy}].push_back(i);
  }

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < angles.size(); ++i)
    if (landings[i].landed()) groups[sets.find(i)].push_back(i);

  for (const auto& [root, members] : groups) {
    if (members.size() < 2) continue;
    for (std::size_t x = 0; x < members.size(); ++x) {
      for (std::size_t y = x + 1; y < members.size(); ++y) {
        Complex a = *landings[members[x]].landing_point, b = *landings[members[y]].landing_point;
        if (std::abs(a - b) >= tol)
          throw LaminationConsistencyError(fmt::format(
              "co-landing chain joins {} (at {}) and {} (at {}) whose landing points differ by {:.3g}",
              angles[members[x]].str(), point_string(a), angles[members[y]].str(), point_string(b),
              std::abs(a - b)));
      }
    }
    std::vector<Angle> cls;
    for (std::size_t i : members) cls.push_back(angles[i]);
    lam.classes.emplace_back(std::move(cls));
  }
  lam.normalize();
  return lam;
}

Lamination pullback_closure(const Lamination& lam, const std::vector<AngleClass>& generators, int levels) {
  if (levels < 0) throw std::invalid_argument("levels must be >= 0");
  const unsigned d = lam.degree;
  Lamination out = lam;

  auto overlaps_other = [&](const AngleClass& c) {
    for (const AngleClass& e : out.classes) {
      if (e == c) continue;
      for (const Angle& a : c.angles())
        if (e.contains(a)) return true;
    }
    return false;
  };

  std::vector<AngleClass> frontier;
  for (const AngleClass& g : generators) {
    if (out.contains_class(g)) {
      frontier.push_back(g);
      continue;
    }
    if (overlaps_other(g)) throw PullbackError("generator " + g.str() + " overlaps an existing class", 0);
    for (const AngleClass& e : out.classes)
      if (classes_linked(g, e)) throw PullbackError("generators are linked: " + g.str() + " and " + e.str(), 0);
    out.classes.push_back(g);
    frontier.push_back(g);
  }
  std::sort(frontier.begin(), frontier.end());

  for (int level = 1; level <= levels; ++level) {
    std::vector<AngleClass> next;
    for (const AngleClass& c : frontier) {
      const std::size_t m = c.size();
      std::vector<std::vector<Angle>> pre;
      pre.reserve(m);
      for (const Angle& a : c.angles()) pre.push_back(preimages(a, d));

      // A grouping picks, for each member beyond the first, a permutation
      // matching its preimages to those of the first member.
      std::vector<std::vector<unsigned>> perms(m, std::vector<unsigned>(d));
      for (auto& perm : perms) std::iota(perm.begin(), perm.end(), 0u);

      std::vector<std::vector<AngleClass>> valid;
      for (;;) {
        std::vector<AngleClass> groups;
        groups.reserve(d);
        for (unsigned g = 0; g < d; ++g) {
          std::vector<Angle> members;
          members.reserve(m);
          for (std::size_t i = 0; i < m; ++i) members.push_back(pre[i][perms[i][g]]);
          groups.emplace_back(std::move(members));
        }
        bool ok = true;
        for (std::size_t g = 0; g < groups.size() && ok; ++g) {
          if (out.contains_class(groups[g])) continue;
          if (overlaps_other(groups[g])) ok = false;
          for (std::size_t e = 0; e < out.classes.size() && ok; ++e)
            if (classes_linked(groups[g], out.classes[e])) ok = false;
          for (std::size_t h = g + 1; h < groups.size() && ok; ++h)
            if (classes_linked(groups[g], groups[h])) ok = false;
        }
        if (ok) valid.push_back(std::move(groups));

        // Odometer over perms[1..m-1].
        std::size_t i = 1;
        while (i < m && !std::next_permutation(perms[i].begin(), perms[i].end())) ++i;
        if (i >= m) break;
      }

      if (valid.empty())
        throw PullbackError(fmt::format("level {}: no unlinked preimage grouping for {}", level, c.str()), level);
      if (valid.size() > 1)
        throw PullbackError(
            fmt::format("level {}: {} unlinked preimage groupings for {}", level, valid.size(), c.str()), level);
      for (AngleClass& g : valid.front()) {
        if (out.contains_class(g)) continue;
        out.classes.push_back(g);
        next.push_back(std::move(g));
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  out.normalize();
  return out;
}

CheckResult check_unlinked(const Lamination& lam) {
  CheckResult r;
  for (std::size_t i = 0; i < lam.classes.size(); ++i) {
    for (std::size_t j = i + 1; j < lam.classes.size(); ++j) {
      const AngleClass& a = lam.classes[i];
      const AngleClass& b = lam.classes[j];
      bool shared = std::any_of(a.angles().begin(), a.angles().end(), [&](const Angle& x) { return b.contains(x); });
      if (shared)
        r.violations.push_back({i, j, a.str() + " and " + b.str() + " share an angle"});
      else if (classes_linked(a, b))
        r.violations.push_back({i, j, a.str() + " crosses " + b.str()});
    }
  }
  r.ok = r.violations.empty();
  return r;
}

CheckResult check_invariant(const Lamination& lam) {
  CheckResult r;
  std::map<Angle, std::size_t> owner;
  for (std::size_t i = 0; i < lam.classes.size(); ++i)
    for (const Angle& a : lam.classes[i].angles()) owner.emplace(a, i);

  for (std::size_t i = 0; i < lam.classes.size(); ++i) {
    AngleClass img = image(lam.classes[i], lam.degree);
    if (img.size() == 1) continue;
    auto it = owner.find(img.smallest());
    bool ok = it != owner.end() && std::all_of(img.angles().begin(), img.angles().end(), [&](const Angle& a) {
                return lam.classes[it->second].contains(a);
              });
    if (!ok) r.violations.push_back({i, Violation::npos, "image " + img.str() + " of " + lam.classes[i].str() +
                                                             " is not contained in a class"});
  }
  r.ok = r.violations.empty();
  return r;
}

}  // namespace lamina
