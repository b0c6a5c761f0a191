#include "lamina/json_io.hpp"

#include <fstream>
#include <sstream>

namespace lamina {

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const RayTrace& trace) {
  Json j;
  j["angle"] = trace.angle.str();
  Json pts = Json::array();
  for (Complex z : trace.points) pts.push_back(to_json(z));
  j["points"] = std::move(pts);
  j["potentials"] = trace.potentials;
  j["status"] = to_string(trace.status);
  return j;
}

Json to_json(const LandingResult& l) {
  Json j;
  j["angle"] = l.angle.str();
  j["status"] = to_string(l.status);
  j["depth"] = l.depth;
  j["orbit"] = {{"preperiod", l.orbit.preperiod}, {"period", l.orbit.period}};
  j["landing_point"] = l.landing_point ? to_json(*l.landing_point) : Json();
  if (l.certified_periodic) {
    const auto& c = *l.certified_periodic;
    j["certified_periodic"] = {{"preperiod", c.preperiod},
                               {"period", c.period},
                               {"refined", to_json(c.refined)},
                               {"multiplier", to_json(c.multiplier)},
                               {"parabolic", c.parabolic}};
  } else {
    j["certified_periodic"] = Json();
  }
  return j;
}

Json to_json(const AngleClass& c) {
  Json j = Json::array();
  for (const Angle& a : c.angles()) j.push_back(a.str());
  return j;
}

Json to_json(const Lamination& lam) {
  Lamination l = lam;
  l.normalize();
  Json j;
  j["degree"] = l.degree;
  Json cls = Json::array();
  for (const AngleClass& c : l.classes) cls.push_back(to_json(c));
  j["classes"] = std::move(cls);
  j["warnings"] = l.warnings;
  return j;
}

Json to_json(const ModelGraph& g) {
  Json nodes = Json::array();
  for (const ModelNode& n : g.nodes) {
    Json node;
    node["id"] = n.id;
    if (n.kind == NodeKind::class_node) {
      node["kind"] = "class";
      node["angles"] = to_json(n.angle_class);
    } else {
      node["kind"] = "gap";
      Json arcs = Json::array();
      for (const Arc& a : n.gap.arcs) arcs.push_back({a.first.str(), a.second.str()});
      node["arcs"] = std::move(arcs);
      node["boundary"] = n.gap.boundary;
    }
    nodes.push_back(std::move(node));
  }
  Json edges = Json::array();
  for (auto [a, b] : g.edges) edges.push_back({a, b});
  Json j;
  j["degree"] = g.degree;
  j["nodes"] = std::move(nodes);
  j["edges"] = std::move(edges);
  return j;
}

Json to_json(const TuningData& t) {
  return {{"theta_minus", t.theta_minus.str()},
          {"theta_plus", t.theta_plus.str()},
          {"n", t.period},
          {"d", t.degree},
          {"k", t.inner_degree}};
}

Json to_json(const CheckResult& r) {
  Json v = Json::array();
  for (const Violation& x : r.violations) v.push_back(x.reason);
  return {{"ok", r.ok}, {"violations", std::move(v)}};
}

Json to_json(const OrderReport& r) {
  Json j = {{"ok", r.ok}, {"triples_checked", r.triples_checked}};
  if (r.witness) {
    Json w = Json::array();
    for (const Angle& a : *r.witness) w.push_back(a.str());
    j["witness"] = std::move(w);
  } else {
    j["witness"] = Json();
  }
  return j;
}

Json to_json(const ExactCheck& r) { return {{"ok", r.ok}, {"failures", r.failures}}; }

Json to_json(const StrategicReport& r) {
  Json sample = Json::array();
  for (const Angle& a : r.anchor_sample) sample.push_back(a.str());
  return {{"anchor_sample", std::move(sample)},
          {"order_preserved", r.order_preserved},
          {"landing_agreement", r.landing_agreement},
          {"window_center", to_json(r.window_center)},
          {"window_radius", r.window_radius},
          {"failures", r.failures}};
}

Lamination lamination_from_json(const Json& j) {
  try {
    Lamination lam;
    lam.degree = j.value("degree", 2u);
    if (lam.degree < 2) throw JsonFormatError("lamination degree must be >= 2");
    for (const auto& c : j.at("classes")) {
      std::vector<std::string> angles;
      for (const auto& a : c) angles.push_back(a.get<std::string>());
      lam.classes.push_back(AngleClass::parse(angles));
    }
    if (j.contains("warnings"))
      for (const auto& w : j.at("warnings")) lam.warnings.push_back(w.get<std::string>());
    lam.normalize();
    return lam;
  } catch (const Json::exception& e) {
    throw JsonFormatError(std::string("malformed lamination: ") + e.what());
  } catch (const AngleParseError& e) {
    throw JsonFormatError(std::string("malformed lamination: ") + e.what());
  }
}

TuningData tuning_from_json(const Json& j) {
  Angle minus, plus;
  std::size_t n = 0;
  unsigned d = 2, k = 2;
  try {
    minus = Angle::parse(j.at("theta_minus").get<std::string>());
    plus = Angle::parse(j.at("theta_plus").get<std::string>());
    n = j.at("n").get<std::size_t>();
    d = j.value("d", 2u);
    k = j.value("k", 2u);
  } catch (const Json::exception& e) {
    throw JsonFormatError(std::string("malformed tuning data: ") + e.what());
  } catch (const AngleParseError& e) {
    throw JsonFormatError(std::string("malformed tuning data: ") + e.what());
  }
  return TuningData::from_angles(minus, plus, n, d, k);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JsonFormatError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw JsonFormatError(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace lamina
