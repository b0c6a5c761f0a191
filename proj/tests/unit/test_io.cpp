#include "lamina/json_io.hpp"
#include "lamina/svg.hpp"

#include <doctest.h>

#include <regex>

using namespace lamina;

namespace {

AngleClass cls(std::initializer_list<std::pair<int, int>> v) {
  std::vector<Angle> a;
  for (auto [p, q] : v) a.emplace_back(p, q);
  return AngleClass(a);
}

Lamination basilica() {
  Lamination l;
  l.classes = {cls({{5, 12}, {7, 12}}), cls({{1, 3}, {2, 3}}), cls({{1, 6}, {5, 6}}), cls({{1, 12}, {11, 12}})};
  return l;
}

}  // namespace

TEST_CASE("lamination JSON is sorted and round-trips") {
  Json j = to_json(basilica());
  CHECK(j.dump() ==
        R"({"degree":2,"classes":[["1/12","11/12"],["1/6","5/6"],["1/3","2/3"],["5/12","7/12"]],"warnings":[]})");
  Lamination back = lamination_from_json(j);
  Lamination expect = basilica();
  expect.normalize();
  CHECK(back.classes == expect.classes);
  CHECK_THROWS_AS(lamination_from_json(Json::parse(R"({"classes":[["x"]]})")), JsonFormatError);
  CHECK_THROWS_AS(lamination_from_json(Json::parse(R"({"degree":2})")), JsonFormatError);
}

TEST_CASE("tuning JSON") {
  TuningData t = tuning_from_json(Json::parse(R"({"theta_minus":"1/3","theta_plus":"2/3","n":2,"d":2,"k":2})"));
  CHECK(word_string(t.word_u) == "01");
  CHECK(to_json(t).dump() == R"({"theta_minus":"1/3","theta_plus":"2/3","n":2,"d":2,"k":2})");
  CHECK_THROWS_AS(tuning_from_json(Json::parse(R"({"theta_minus":"1/3"})")), JsonFormatError);
  CHECK_THROWS_AS(tuning_from_json(Json::parse(R"({"theta_minus":"1/3","theta_plus":"1/5","n":2})")), TuningError);
}

TEST_CASE("ray JSON layout") {
  RayTrace r = trace_ray(Polynomial::parse("1,0,0"), Angle(1, 4), 2);
  Json j = to_json(r);
  auto it = j.begin();
  CHECK(it.key() == "angle");
  CHECK((++it).key() == "points");
  CHECK((++it).key() == "potentials");
  CHECK(j["angle"] == "1/4");
  CHECK(j["points"].size() == r.points.size());
  CHECK(j["points"][0].size() == 2);
  CHECK(j["potentials"].size() == r.points.size());
}

TEST_CASE("model JSON ids") {
  Lamination l;
  l.classes = {cls({{1, 3}, {2, 3}})};
  Json j = to_json(quotient_model(l));
  CHECK(j["nodes"].size() == 3);
  CHECK(j["nodes"][0]["kind"] == "class");
  CHECK(j["nodes"][1]["arcs"][0][0] == "1/3");
  CHECK(j["edges"].dump() == "[[0,1],[0,2]]");
}

TEST_CASE("svg of the empty lamination is just the circle") {
  Lamination empty;
  std::string svg = render_svg(empty, nullptr);
  CHECK(svg.find("<!-- lamina ") != std::string::npos);
  CHECK(svg.find("<circle") != std::string::npos);
  CHECK(svg.find("<path") == std::string::npos);
  CHECK(render_svg(empty, nullptr) == svg);
}

TEST_CASE("basilica diagram is symmetric under conjugation") {
  Lamination l = basilica();
  std::string svg = render_svg(l, nullptr);
  std::regex leaf(R"re(d="M([0-9.]+) ([0-9.]+) A([0-9.]+) [0-9.]+ 0 0 [01] ([0-9.]+) ([0-9.]+)")re");
  std::size_t count = 0;
  // Each leaf {a, 1-a} is mirrored onto itself by the horizontal axis through the centre.
  for (std::sregex_iterator it(svg.begin(), svg.end(), leaf), end; it != end; ++it, ++count) {
    double x0 = std::stod((*it)[1]), y0 = std::stod((*it)[2]), x1 = std::stod((*it)[4]), y1 = std::stod((*it)[5]);
    CHECK(x0 == doctest::Approx(x1).epsilon(1e-6));
    CHECK(y0 + y1 == doctest::Approx(480).epsilon(1e-6));
  }
  CHECK(count == 4);
}

TEST_CASE("rabbit diagram draws the central triangle") {
  Lamination l;
  l.classes = {cls({{1, 7}, {2, 7}, {4, 7}})};
  std::string svg = render_svg(l, nullptr);
  CHECK(svg.find(R"(data-class="{1/7,2/7,4/7}")") != std::string::npos);
  CHECK(svg.find(" Z\"") != std::string::npos);
}

TEST_CASE("ray overlay") {
  RenderOptions o;
  o.polynomial = Polynomial::parse("c=-1");
  o.raster = 40;
  o.rays = {trace_ray(*o.polynomial, Angle(1, 3), 10)};
  std::string svg = render_rays_svg(o);
  CHECK(svg.find(R"(<polyline data-angle="1/3")") != std::string::npos);
  CHECK(svg == render_rays_svg(o));
}
