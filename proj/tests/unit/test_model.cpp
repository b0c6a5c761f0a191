#include "lamina/model.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace lamina;

namespace {

Lamination make(std::vector<AngleClass> classes, unsigned d = 2) {
  Lamination l;
  l.degree = d;
  l.classes = std::move(classes);
  l.normalize();
  return l;
}

AngleClass cls(std::initializer_list<std::pair<int, int>> v) {
  std::vector<Angle> a;
  for (auto [p, q] : v) a.emplace_back(p, q);
  return AngleClass(a);
}

const AngleClass third = cls({{1, 3}, {2, 3}});
const Lamination basilica12 =
    make({third, cls({{1, 6}, {5, 6}}), cls({{1, 12}, {11, 12}}), cls({{5, 12}, {7, 12}})});

TuningData basilica_tuning() { return TuningData::from_angles(Angle(1, 3), Angle(2, 3), 2); }

// Random unlinked lamination: classes added greedily from random chords and triangles.
Lamination random_lamination(std::mt19937& rng, std::size_t target) {
  auto pool = rationals_up_to(30);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  Lamination l;
  std::set<Angle> used;
  for (int tries = 0; tries < 4000 && l.classes.size() < target; ++tries) {
    std::size_t k = 2 + tries % 3;
    std::vector<Angle> v;
    for (std::size_t i = 0; i < k; ++i) v.push_back(pool[pick(rng)]);
    AngleClass c(v);
    if (c.size() < 2) continue;
    bool ok = std::none_of(c.angles().begin(), c.angles().end(), [&](const Angle& a) { return used.count(a); });
    for (const AngleClass& e : l.classes) ok = ok && !classes_linked(c, e);
    if (!ok) continue;
    for (const Angle& a : c.angles()) used.insert(a);
    l.classes.push_back(c);
  }
  l.normalize();
  return l;
}

}  // namespace

TEST_CASE("empty lamination is one gap") {
  ModelGraph g = quotient_model(make({}));
  CHECK(g.nodes.size() == 1);
  CHECK(g.class_count() == 0);
  CHECK(g.nodes[0].kind == NodeKind::gap);
  CHECK(g.nodes[0].gap.arcs.empty());
  CHECK(g.edges.empty());
}

TEST_CASE("one leaf cuts the disk in two") {
  ModelGraph g = quotient_model(make({third}));
  CHECK(g.class_count() == 1);
  CHECK(g.gap_count() == 2);
  REQUIRE(g.edges.size() == 2);
  CHECK(g.edges[0] == std::pair<std::size_t, std::size_t>{0, 1});
  CHECK(g.edges[1] == std::pair<std::size_t, std::size_t>{0, 2});
  CHECK(g.nodes[1].gap.arcs == std::vector<Arc>{{Angle(1, 3), Angle(2, 3)}});
  CHECK(g.nodes[2].gap.arcs == std::vector<Arc>{{Angle(2, 3), Angle(1, 3)}});
}

TEST_CASE("basilica through denominator 12 is a chain of cut points") {
  ModelGraph g = quotient_model(basilica12);
  CHECK(g.class_count() == 4);
  CHECK(g.gap_count() == 5);
  auto adj = g.adjacency();
  std::size_t ends = 0;
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    if (g.nodes[v].kind == NodeKind::class_node) CHECK(adj[v].size() == 2);
    CHECK(adj[v].size() <= 2);
    ends += adj[v].size() == 1;
  }
  CHECK(ends == 2);
  CHECK(g.components() == 1);
}

TEST_CASE("rabbit triangle has three gaps") {
  ModelGraph g = quotient_model(make({cls({{1, 7}, {2, 7}, {4, 7}})}));
  CHECK(g.gap_count() == 3);
  CHECK(g.edges.size() == 3);
}

TEST_CASE("gap boundary data") {
  ModelGraph g = quotient_model(basilica12);
  std::size_t arcs = 0;
  for (const ModelNode& n : g.nodes) {
    if (n.kind != NodeKind::gap) continue;
    arcs += n.gap.arcs.size();
    CHECK(n.gap.arcs.size() == n.gap.boundary.size());
    for (std::size_t i = 0; i + 1 < n.gap.arcs.size(); ++i)
      CHECK(g.nodes[n.gap.boundary[i]].angle_class.contains(n.gap.arcs[i].second));
  }
  CHECK(arcs == 8);
}

TEST_CASE("gaps + classes - adjacencies = components") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Lamination l = random_lamination(rng, 1 + trial % 50);
    ModelGraph g = quotient_model(l);
    CHECK(g.class_count() == l.classes.size());
    CHECK(g.gap_count() + g.class_count() - g.edges.size() == g.components());
    CHECK(g.components() == 1);
  }
}

TEST_CASE("linked laminations are rejected") {
  CHECK_THROWS_AS(quotient_model(make({cls({{0, 1}, {1, 2}}), cls({{1, 4}, {3, 4}})})), LinkedLaminationError);
}

TEST_CASE("fiber examples") {
  CHECK(fiber(basilica12, Angle(1, 3)) == third);
  CHECK(fiber(basilica12, Angle(0, 1)) == cls({{0, 1}}));
  CHECK(fiber(make({}), Angle(1, 5)) == cls({{1, 5}}));
}

TEST_CASE("extend_model examples") {
  TuningData t = basilica_tuning();
  Lamination ambient = pullback_closure(make({}), {third}, 2);
  Lamination ext = extend_model(make({third}), t, ambient);
  CHECK(ext.contains_class(cls({{2, 5}, {3, 5}})));
  CHECK(check_unlinked(ext).ok);
  CHECK(check_invariant(ext).ok);
  for (const AngleClass& c : ambient.classes) CHECK(ext.contains_class(c));

  CHECK(extend_model(make({}), t, ambient).classes == ambient.classes);

  Lamination ident = extend_model(make({third}), TuningData::identity(), make({}));
  CHECK(ident.classes == std::vector<AngleClass>{third});
}

TEST_CASE("extension round-trips through nu and factors") {
  TuningData t = basilica_tuning();
  Lamination ambient = pullback_closure(make({}), {third}, 2);
  for (const Lamination& sub : {make({third}), basilica12, make({cls({{1, 7}, {2, 7}, {4, 7}})})}) {
    Lamination ext = extend_model(sub, t, ambient);
    CHECK(check_unlinked(ext).ok);
    CHECK(check_invariant(ext).ok == check_invariant(sub).ok);
    for (const AngleClass& c : sub.classes) {
      std::vector<Angle> img, back;
      for (const Angle& a : c.angles()) img.push_back(tuning_p(t, a));
      CHECK(ext.contains_class(AngleClass(img)));
      for (const Angle& b : img) back.push_back(*tuning_nu(t, b));
      CHECK(AngleClass(back) == c);
    }
    CHECK(decode_lamination(restrict_to_image(ext, t), t).classes == sub.classes);
    CHECK(factors_through(ext, sub, t));
    if (quotient_model(sub).nodes.size() >= 2) {
      std::set<AngleClass> fibers(ext.classes.begin(), ext.classes.end());
      CHECK(fibers.size() >= 2);
    }
  }
}

TEST_CASE("crossing transported classes are an error") {
  // Ambient leaf {1/4, 1/2} crosses the transported {2/5, 3/5}.
  TuningData t = basilica_tuning();
  try {
    extend_model(make({third}), t, make({cls({{1, 4}, {1, 2}})}));
    FAIL("expected an extension error");
  } catch (const ExtensionError& e) {
    std::string what = e.what();
    CHECK(what.find("{2/5,3/5}") != std::string::npos);
    CHECK(what.find("{1/4,1/2}") != std::string::npos);
  }
  CHECK_THROWS_AS(extend_model(make({third}, 3), t, make({})), ExtensionError);
}

TEST_CASE("tree isomorphism respects shape and kinds") {
  ModelGraph chain = quotient_model(basilica12);
  ModelGraph star = quotient_model(make({cls({{1, 7}, {2, 7}, {4, 7}}), cls({{1, 14}, {9, 14}, {11, 14}})}));
  ModelGraph rotated = quotient_model(make({cls({{1, 10}, {1, 5}}), cls({{3, 10}, {2, 5}}), cls({{1, 2}, {3, 5}}),
                                            cls({{7, 10}, {4, 5}})}));
  CHECK(graph_isomorphic(chain, chain));
  CHECK_FALSE(graph_isomorphic(chain, star));
  CHECK(chain.nodes.size() == rotated.nodes.size());
  // Four parallel leaves form a chain; this one branches.
  CHECK_FALSE(graph_isomorphic(chain, rotated));
  ModelGraph parallel = quotient_model(make({cls({{1, 10}, {9, 10}}), cls({{1, 5}, {4, 5}}), cls({{3, 10}, {7, 10}}),
                                             cls({{2, 5}, {3, 5}})}));
  CHECK(graph_isomorphic(chain, parallel));
}
