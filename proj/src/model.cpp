#include "lamina/model.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace lamina {

std::size_t ModelGraph::class_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes.begin(), nodes.end(), [](const ModelNode& n) { return n.kind == NodeKind::class_node; }));
}

std::size_t ModelGraph::gap_count() const { return nodes.size() - class_count(); }

std::vector<std::vector<std::size_t>> ModelGraph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(nodes.size());
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

std::size_t ModelGraph::components() const {
  auto adj = adjacency();
  std::vector<bool> seen(nodes.size(), false);
  std::size_t count = 0;
  for (std::size_t s = 0; s < nodes.size(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
  }
  return count;
}

ModelGraph quotient_model(const Lamination& lam) {
  CheckResult check = check_unlinked(lam);
  if (!check.ok) throw LinkedLaminationError("lamination is linked: " + check.violations.front().reason);

  Lamination l = lam;
  l.normalize();
  ModelGraph g;
  g.degree = l.degree;

  for (std::size_t i = 0; i < l.classes.size(); ++i) {
    ModelNode n;
    n.id = i;
    n.kind = NodeKind::class_node;
    n.angle_class = l.classes[i];
    g.nodes.push_back(std::move(n));
  }

  std::vector<std::pair<Angle, std::size_t>> ends;
  for (std::size_t i = 0; i < l.classes.size(); ++i)
    for (const Angle& a : l.classes[i].angles()) ends.emplace_back(a, i);
  std::sort(ends.begin(), ends.end());

  if (ends.empty()) {
    ModelNode whole;
    whole.id = 0;
    g.nodes.push_back(std::move(whole));
    return g;
  }

  const std::size_t n = ends.size();
  auto index_of = [&](const Angle& a) {
    auto it = std::lower_bound(ends.begin(), ends.end(), a,
                               [](const std::pair<Angle, std::size_t>& e, const Angle& x) { return e.first < x; });
    return static_cast<std::size_t>(it - ends.begin());
  };
  // Arc i runs from ends[i] to ends[i+1]. At its end the gap boundary follows
  // the class side back to the previous vertex of that class.
  auto next_arc = [&](std::size_t i) {
    const auto& [e, cls] = ends[(i + 1) % n];
    const auto& v = l.classes[cls].angles();
    std::size_t k = static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), e) - v.begin());
    return index_of(v[(k + v.size() - 1) % v.size()]);
  };

  std::vector<bool> used(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (used[start]) continue;
    ModelNode gap;
    gap.id = g.nodes.size();
    for (std::size_t i = start; !used[i]; i = next_arc(i)) {
      used[i] = true;
      gap.gap.arcs.emplace_back(ends[i].first, ends[(i + 1) % n].first);
      gap.gap.boundary.push_back(ends[(i + 1) % n].second);
    }
    for (std::size_t c : gap.gap.boundary) g.edges.emplace_back(c, gap.id);
    g.nodes.push_back(std::move(gap));
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

AngleClass fiber(const Lamination& lam, const Angle& a) {
  if (auto i = lam.find(a)) return lam.classes[*i];
  return AngleClass{a};
}

namespace {

// Merges classes that share an angle.
std::vector<AngleClass> merge_overlapping(std::vector<AngleClass> classes) {
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  std::vector<std::size_t> parent(classes.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::map<Angle, std::size_t> owner;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (const Angle& a : classes[i].angles()) {
      auto [it, fresh] = owner.emplace(a, i);
      if (!fresh) {
        std::size_t x = find(it->second), y = find(i);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
      }
    }
  }
  std::map<std::size_t, std::vector<Angle>> groups;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    auto& v = groups[find(i)];
    v.insert(v.end(), classes[i].angles().begin(), classes[i].angles().end());
  }
  std::vector<AngleClass> out;
  for (auto& [root, v] : groups) out.emplace_back(std::move(v));
  return out;
}

}  // namespace

Lamination extend_model(const Lamination& sub_lam, const TuningData& t, const Lamination& ambient) {
  if (!sub_lam.classes.empty() && sub_lam.degree != t.inner_degree)
    throw ExtensionError(fmt::format("sub-lamination has degree {} but the tuning has inner degree {}",
                                     sub_lam.degree, t.inner_degree));
  if (!ambient.classes.empty() && ambient.degree != t.degree)
    throw ExtensionError(
        fmt::format("ambient lamination has degree {} but the tuning has degree {}", ambient.degree, t.degree));
  if (CheckResult c = check_unlinked(sub_lam); !c.ok)
    throw ExtensionError("sub-lamination is linked: " + c.violations.front().reason);
  if (CheckResult c = check_unlinked(ambient); !c.ok)
    throw ExtensionError("ambient lamination is linked: " + c.violations.front().reason);

  std::set<AngleClass> transported;
  std::deque<AngleClass> queue;
  for (const AngleClass& c : sub_lam.classes) {
    std::vector<Angle> img;
    for (const Angle& a : c.angles()) img.push_back(tuning_p(t, a));
    AngleClass pc(std::move(img));
    if (pc.size() >= 2 && transported.insert(pc).second) queue.push_back(pc);
  }
  while (!queue.empty()) {
    AngleClass next = image(queue.front(), t.degree);
    queue.pop_front();
    if (next.size() >= 2 && transported.insert(next).second) queue.push_back(next);
  }

  for (const AngleClass& x : transported)
    for (const AngleClass& y : ambient.classes)
      if (classes_linked(x, y))
        throw ExtensionError("transported class " + x.str() + " crosses ambient class " + y.str());

  std::vector<AngleClass> all(ambient.classes.begin(), ambient.classes.end());
  all.insert(all.end(), transported.begin(), transported.end());

  Lamination out;
  out.degree = t.degree;
  out.classes = merge_overlapping(std::move(all));
  out.warnings = ambient.warnings;
  out.normalize();
  if (CheckResult c = check_unlinked(out); !c.ok) throw ExtensionError("extended lamination is linked: " + c.violations.front().reason);
  return out;
}

Lamination restrict_to_image(const Lamination& lam, const TuningData& t) {
  Lamination out;
  out.degree = lam.degree;
  for (const AngleClass& c : lam.classes) {
    std::set<Angle> decoded;
    bool in_domain = true;
    for (const Angle& a : c.angles()) {
      auto v = tuning_nu(t, a);
      if (!v) {
        in_domain = false;
        break;
      }
      decoded.insert(*v);
    }
    if (in_domain && decoded.size() >= 2) out.classes.push_back(c);
  }
  return out;
}

Lamination decode_lamination(const Lamination& lam, const TuningData& t) {
  Lamination out;
  out.degree = t.inner_degree;
  for (const AngleClass& c : lam.classes) {
    std::vector<Angle> v;
    for (const Angle& a : c.angles()) {
      auto d = tuning_nu(t, a);
      if (!d) throw TuningError(a.str() + " is not in the domain of nu");
      v.push_back(*d);
    }
    out.classes.emplace_back(std::move(v));
  }
  out.normalize();
  return out;
}

namespace {

std::string canonical_form(const std::vector<std::vector<std::size_t>>& adj, const std::vector<char>& label,
                           std::size_t root) {
  std::function<std::string(std::size_t, std::size_t)> encode = [&](std::size_t v, std::size_t parent) {
    std::vector<std::string> children;
    for (std::size_t w : adj[v])
      if (w != parent) children.push_back(encode(w, v));
    std::sort(children.begin(), children.end());
    std::string s(1, label[v]);
    s += '(';
    for (const auto& c : children) s += c;
    return s + ')';
  };
  return encode(root, root);
}

std::vector<std::size_t> tree_centers(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  if (n <= 2) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::vector<std::size_t> degree(n);
  std::vector<std::size_t> leaves;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = adj[v].size();
    if (degree[v] <= 1) leaves.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= leaves.size();
    std::vector<std::size_t> next;
    for (std::size_t v : leaves)
      for (std::size_t w : adj[v])
        if (--degree[w] == 1) next.push_back(w);
    leaves = std::move(next);
  }
  std::sort(leaves.begin(), leaves.end());
  return leaves;
}

std::string tree_signature(const ModelGraph& g) {
  auto adj = g.adjacency();
  std::vector<char> label(g.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) label[i] = g.nodes[i].kind == NodeKind::class_node ? 'c' : 'g';
  std::string best;
  for (std::size_t c : tree_centers(adj)) {
    std::string s = canonical_form(adj, label, c);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

bool is_tree(const ModelGraph& g) { return g.edges.size() + 1 == g.nodes.size() && g.components() == 1; }

}  // namespace

bool graph_isomorphic(const ModelGraph& a, const ModelGraph& b) {
  if (a.nodes.size() != b.nodes.size() || a.edges.size() != b.edges.size()) return false;
  if (a.class_count() != b.class_count()) return false;
  if (!is_tree(a) || !is_tree(b)) throw std::invalid_argument("graph_isomorphic expects quotient trees");
  return tree_signature(a) == tree_signature(b);
}

bool factors_through(const Lamination& extended, const Lamination& sub_lam, const TuningData& t) {
  return graph_isomorphic(quotient_model(restrict_to_image(extended, t)), quotient_model(sub_lam));
}

}  // namespace lamina
