#include "lamina/ray_tracer.hpp"

#include <doctest.h>

#include <chrono>
#include <cmath>
#include <numbers>

using namespace lamina;

namespace {

const Complex rabbit_c(-0.122561, 0.744862);

// Fixed point of z^2 + c by Newton from a seed.
Complex newton_fixed(Complex c, Complex z) {
  for (int i = 0; i < 100; ++i) z -= (z * z + c - z) / (2.0 * z - 1.0);
  return z;
}

}  // namespace

TEST_CASE("z^2 rays are radial") {
  Polynomial p = Polynomial::parse("1,0,0");
  for (auto [a, expect] : {std::pair{Angle(1, 4), Complex(0, 1)}, std::pair{Angle(0, 1), Complex(1, 0)}}) {
    RayTrace r = trace_ray(p, a, 20);
    CHECK(r.status == TraceStatus::complete);
    REQUIRE(r.points.size() == r.potentials.size());
    for (std::size_t i = 0; i < r.points.size(); ++i) {
      Complex radial = std::exp(r.potentials[i]) * expect;
      CHECK(std::abs(r.points[i] - radial) < 1e-9 * std::max(1.0, std::abs(radial)));
    }
  }
}

TEST_CASE("traces start outside the escape radius with decreasing potentials") {
  for (const char* s : {"c=-1", "c=-2", "1,0,0,0.3"}) {
    Polynomial p = Polynomial::parse(s);
    RayTrace r = trace_ray(p, Angle(1, 5), 10);
    CHECK(std::abs(r.points.front()) > escape_radius(p));
    for (std::size_t i = 1; i < r.potentials.size(); ++i) CHECK(r.potentials[i] < r.potentials[i - 1]);
    CHECK(r.levels() == 10);
  }
}

TEST_CASE("Chebyshev ray 0 approaches the fixed point 2") {
  Polynomial p = Polynomial::parse("c=-2");
  RayTrace r = trace_ray(p, Angle(0, 1), 30);
  CHECK(std::abs(r.points.back() - 2.0) < 1e-6);
  Complex w = 3;
  for (int i = 0; i < 50; ++i) w -= (w * w - 2.0 - w) / (2.0 * w - 1.0);
  CHECK(std::abs(w - 2.0) < 1e-14);
  LandingResult l = land(p, Angle(0, 1), 30);
  REQUIRE(l.landed());
  CHECK(std::abs(*l.landing_point - w) < 1e-9);
}

TEST_CASE("equivariance: P maps the ray of a onto the ray of d*a") {
  for (const char* s : {"c=-1", "c=-2", "c=-0.122561+0.744862i", "1,0,0", "1,0,-0.5,0.1"}) {
    Polynomial p = Polynomial::parse(s);
    const unsigned d = p.degree();
    for (const Angle& a : {Angle(1, 3), Angle(1, 7), Angle(1, 6), Angle(3, 10)}) {
      RayTrace ra = trace_ray(p, a, 12);
      RayTrace rb = trace_ray(p, sigma(a, d), 12);
      const std::size_t S = static_cast<std::size_t>(ra.substeps);
      for (std::size_t k = 0; k + S < ra.points.size(); ++k) {
        CHECK(ra.potentials[k + S] * d == doctest::Approx(rb.potentials[k]).epsilon(1e-12));
        CHECK(std::abs(p(ra.points[k + S]) - rb.points[k]) < 1e-6);
      }
    }
  }
}

TEST_CASE("z^2 landing on the unit circle") {
  LandingResult l = land(Polynomial::parse("1,0,0"), Angle(1, 3), 20);
  REQUIRE(l.landed());
  CHECK(std::abs(*l.landing_point - std::polar(1.0, 2 * std::numbers::pi / 3)) < 1e-9);
}

TEST_CASE("basilica ray 1/3 lands at the alpha fixed point") {
  Polynomial p = Polynomial::parse("c=-1");
  LandingResult l = land(p, Angle(1, 3), 30);
  REQUIRE(l.landed());
  const Complex alpha = newton_fixed(-1, -0.5);
  CHECK(std::abs(alpha - (1 - std::sqrt(5.0)) / 2) < 1e-15);
  CHECK(std::abs(*l.landing_point - alpha) < 1e-9);
  REQUIRE(l.certified_periodic);
  CHECK(l.certified_periodic->period == 2);
  CHECK(std::abs(p(p(l.certified_periodic->refined)) - l.certified_periodic->refined) < 1e-9);
  CHECK(std::abs(l.certified_periodic->multiplier) > 1);
}

TEST_CASE("Chebyshev ray 1/2 lands at -2") {
  Polynomial p = Polynomial::parse("c=-2");
  LandingResult l = land(p, Angle(1, 2), 30);
  REQUIRE(l.landed());
  CHECK(std::abs(*l.landing_point + 2.0) < 1e-9);
  CHECK(std::abs(p(*l.landing_point) - 2.0) < 1e-9);
  REQUIRE(l.certified_periodic);
  CHECK(l.certified_periodic->preperiod == 1);
}

TEST_CASE("certified landing points are repelling or parabolic") {
  for (const char* s : {"c=-1", "c=-2", "c=-0.122561+0.744862i", "c=-1.3107"}) {
    Polynomial p = Polynomial::parse(s);
    for (const Angle& a : rationals_up_to(9)) {
      LandingResult l = land(p, a, 30);
      if (!l.certified_periodic) continue;
      const auto& c = *l.certified_periodic;
      CHECK(std::abs(iterate(p, c.refined, c.period) - c.refined) < 1e-9);
      CHECK((std::abs(c.multiplier) > 1 || c.parabolic));
    }
  }
}

TEST_CASE("co_land examples") {
  CHECK(co_land(Polynomial::parse("c=-1"), Angle(1, 3), Angle(2, 3), 30) == CoLanding::yes);
  CHECK(co_land(Polynomial::parse("1,0,0"), Angle(1, 3), Angle(2, 3), 20) == CoLanding::no);
  Polynomial rabbit = Polynomial::quadratic(rabbit_c);
  CHECK(co_land(rabbit, Angle(1, 7), Angle(2, 7), 30) == CoLanding::yes);
  LandingResult l = land(rabbit, Angle(4, 7), 30);
  REQUIRE(l.landed());
  Complex alpha = (1.0 - std::sqrt(1.0 - 4.0 * rabbit_c)) / 2.0;
  CHECK(std::abs(alpha * alpha + rabbit_c - alpha) < 1e-12);
  CHECK(std::abs(*l.landing_point - alpha) < 1e-9);
}

TEST_CASE("co_land is symmetric and rejects equal angles") {
  Polynomial p = Polynomial::parse("c=-1");
  auto angles = rationals_up_to(7);
  for (const Angle& a : angles)
    for (const Angle& b : angles)
      if (!(a == b)) CHECK(co_land(p, a, b, 20) == co_land(p, b, a, 20));
  CHECK_THROWS_AS(co_land(p, Angle(1, 3), Angle(1, 3), 20), std::invalid_argument);
}

TEST_CASE("co-landing requires matching orbit types") {
  // Rays 1/6 and 5/6 share orbit type; 1/3 lands elsewhere.
  Polynomial p = Polynomial::parse("c=-1");
  CHECK(co_land(p, Angle(1, 6), Angle(5, 6), 30) == CoLanding::yes);
  CHECK(co_land(p, Angle(1, 6), Angle(1, 3), 30) == CoLanding::no);
}

TEST_CASE("shallow budgets are truncated, never false landings") {
  Polynomial p = Polynomial::parse("c=-1");
  for (int depth : {1, 2, 3}) {
    LandingResult l = land(p, Angle(1, 3), depth);
    CHECK(l.status == LandingStatus::truncated_budget);
    CHECK_FALSE(l.landing_point);
  }
  CHECK(co_land(p, Angle(1, 3), Angle(2, 3), 3) == CoLanding::undetermined);
}

TEST_CASE("disconnected Julia sets are rejected") {
  CHECK_THROWS_AS(trace_ray(Polynomial::parse("c=-5"), Angle(1, 3), 10), DisconnectedJuliaSetError);
}

TEST_CASE("Boettcher coordinate inverts") {
  Polynomial p = Polynomial::parse("c=-0.122561+0.744862i");
  for (int k = 0; k < 12; ++k) {
    Complex w = std::polar(5.0, 0.5 * k);
    CHECK(std::abs(boettcher(p, inverse_boettcher(p, w)) - w) < 1e-10);
  }
}

TEST_CASE("tracing is quick") {
  Polynomial p = Polynomial::parse("c=-1");
  auto t0 = std::chrono::steady_clock::now();
  for (const Angle& a : rationals_up_to(12)) land(p, a, 30);
  auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  CHECK(ms < 2000);
}
