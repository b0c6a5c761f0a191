// lamina: rays, laminations, quotient models and tuning from the command line.
//
// Exit codes: 0 ok, 2 bad input, 3 truncated certification (output still
// written), 4 disconnected Julia set, 5 crossing / consistency / check failure.

#include "lamina/json_io.hpp"
#include "lamina/lamination.hpp"
#include "lamina/model.hpp"
#include "lamina/parallel.hpp"
#include "lamina/polynomial.hpp"
#include "lamina/ray_tracer.hpp"
#include "lamina/renormalization.hpp"
#include "lamina/svg.hpp"
#include "lamina/version.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace lamina;

namespace {

enum Exit { ok = 0, bad_input = 2, truncated = 3, disconnected = 4, inconsistent = 5 };

struct ExitError : std::runtime_error {
  ExitError(int c, const std::string& what) : std::runtime_error(what), code(c) {}
  int code;
};

struct Common {
  std::string poly;
  int depth = 30;
  int threads = 0;
  LandingOptions landing;
};

void add_landing_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--depth", c.depth, "Potential levels to trace")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--threads", c.threads, "Parallel width (default: LAMINA_THREADS, else 1)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--substeps", c.landing.trace.substeps, "Sub-steps per potential level")->capture_default_str();
  cmd->add_option("--newton-tol", c.landing.trace.newton_tol)->capture_default_str();
  cmd->add_option("--newton-max-iter", c.landing.trace.newton_max_iter)->capture_default_str();
  cmd->add_option("--connectivity-budget", c.landing.trace.connectivity_budget)->capture_default_str();
  cmd->add_option("--landing-tol", c.landing.landing_tol)->capture_default_str();
  cmd->add_option("--cluster-levels", c.landing.cluster_levels)->capture_default_str();
  cmd->add_option("--ratio-tol", c.landing.ratio_tol)->capture_default_str();
  cmd->add_option("--certification-tol", c.landing.certification_tol)->capture_default_str();
  cmd->add_option("--parabolic-tol", c.landing.parabolic_tol)->capture_default_str();
  cmd->add_option("--colanding-tol", c.landing.colanding_tol)->capture_default_str();
}

int width(const Common& c) { return c.threads > 0 ? c.threads : thread_count_from_env(1); }

Json metadata(const std::string& command, const Common& c) {
  const LandingOptions& l = c.landing;
  Json m;
  m["version"] = version;
  m["command"] = command;
  if (!c.poly.empty()) m["poly"] = c.poly;
  m["depth"] = c.depth;
  m["tolerances"] = {{"substeps", l.trace.substeps},
                     {"newton_tol", l.trace.newton_tol},
                     {"newton_max_iter", l.trace.newton_max_iter},
                     {"connectivity_budget", l.trace.connectivity_budget},
                     {"landing_tol", l.landing_tol},
                     {"cluster_levels", l.cluster_levels},
                     {"ratio_tol", l.ratio_tol},
                     {"certification_tol", l.certification_tol},
                     {"parabolic_tol", l.parabolic_tol},
                     {"colanding_tol", l.colanding_tol}};
  return m;
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ExitError(bad_input, "cannot write " + path.string());
  out << text;
}

std::string point(Complex z, int digits) {
  auto clean = [digits](double v) { return std::abs(v) < 0.5 * std::pow(10.0, -digits) ? 0.0 : v; };
  return fmt::format("{:.{}f}{:+.{}f}i", clean(z.real()), digits, clean(z.imag()), digits);
}

Polynomial connected_polynomial(const Common& c) {
  Polynomial p = Polynomial::parse(c.poly);
  ConnectivityReport r = connectivity(p, c.landing.trace.connectivity_budget);
  if (r.verdict == Verdict::disconnected) {
    std::string pts;
    for (Complex z : r.escaping_critical_points) pts += " " + point(z, 6);
    throw ExitError(disconnected,
                    fmt::format("Julia set of {} is disconnected (escaping critical point(s):{}). Models of "
                                "disconnected Julia sets, the finest finitely Suslinian model, are not implemented.",
                                p.str(), pts));
  }
  return p;
}

std::string describe(const LandingResult& l) {
  if (!l.landed()) {
    std::string s = fmt::format("{}: {} at depth {}", l.angle.str(), to_string(l.status), l.depth);
    if (l.status == LandingStatus::truncated_budget)
      s += " (no landing claimed; near parabolic or Cremer points the finest model may degenerate)";
    return s;
  }
  return fmt::format("{}: landed at {}", l.angle.str(), point(*l.landing_point, 12));
}

int run_trace(const Common& c, const std::string& angle_text, const std::string& out) {
  Angle a = Angle::parse(angle_text);
  Polynomial p = connected_polynomial(c);
  LandingResult l = land(p, a, c.depth, c.landing);
  RayTrace ray = trace_ray(p, a, c.depth, c.landing.trace);

  Json j = to_json(ray);
  j["landing"] = to_json(l);
  j["metadata"] = metadata("trace", c);
  const std::string text = j.dump() + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    fs::path path(out);
    write_file(path, text);
    RenderOptions opts;
    opts.polynomial = p;
    opts.rays = {ray};
    fs::path svg = path;
    svg.replace_extension(".svg");
    write_file(svg, render_rays_svg(opts));
    std::cout << describe(l) << "\n";
  }
  if (!l.landed()) {
    std::cerr << describe(l) << "\n";
    return truncated;
  }
  return ok;
}

int run_lam(const Common& c, unsigned max_den, const std::string& out_dir) {
  Polynomial p = connected_polynomial(c);
  BuildOptions opts;
  opts.landing = c.landing;
  opts.threads = width(c);
  opts.connectivity_budget = c.landing.trace.connectivity_budget;
  Lamination lam = build_rational_lamination(p, max_den, c.depth, opts);
  ModelGraph model = quotient_model(lam);

  Json lj = to_json(lam);
  lj["metadata"] = metadata("lam", c);
  lj["metadata"]["max_den"] = max_den;
  Json mj = to_json(model);
  mj["metadata"] = lj["metadata"];

  fs::path dir(out_dir);
  write_file(dir / "lamination.json", dump(lj));
  write_file(dir / "model.json", dump(mj));
  RenderOptions ropts;
  ropts.polynomial = p;
  write_file(dir / "lamination.svg", render_svg(lam, &model, ropts));

  std::cout << fmt::format("{} classes, {} gaps, {} warnings -> {}\n", model.class_count(), model.gap_count(),
                           lam.warnings.size(), dir.string());
  if (!lam.warnings.empty()) {
    for (const auto& w : lam.warnings) std::cerr << w << "\n";
    return truncated;
  }
  return ok;
}

struct TuneArgs {
  std::string data, sub_lam, ambient, out;
  int pullback = 0;
  bool check = false;
  std::size_t samples = 100;
};

int run_tune(const TuneArgs& a) {
  Json tj = read_json_file(a.data);
  TuningData t = tuning_from_json(tj);
  Lamination sub = lamination_from_json(read_json_file(a.sub_lam));
  Lamination ambient;
  ambient.degree = t.degree;
  if (!a.ambient.empty()) ambient = lamination_from_json(read_json_file(a.ambient));
  if (a.pullback > 0) {
    AngleClass characteristic{t.theta_minus, t.theta_plus};
    if (characteristic.size() >= 2) ambient = pullback_closure(ambient, {characteristic}, a.pullback);
  }

  Lamination ext = extend_model(sub, t, ambient);
  ModelGraph model = quotient_model(ext);

  Json j;
  Common meta;
  meta.depth = 0;
  j["metadata"] = metadata("tune", meta);
  j["metadata"].erase("depth");
  j["metadata"].erase("tolerances");
  j["metadata"]["pullback"] = a.pullback;
  j["tuning"] = to_json(t);
  j["lamination"] = to_json(ext);
  j["model"] = to_json(model);

  bool failed = false;
  if (a.check) {
    std::vector<Angle> anchors = anchor_sample(a.samples);
    std::vector<Angle> images;
    for (const Angle& x : anchors) images.push_back(tuning_p(t, x));
    for (const AngleClass& c : sub.classes)
      for (const Angle& x : c.angles()) images.push_back(tuning_p(t, x));
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());

    CheckResult unlinked = check_unlinked(ext);
    CheckResult invariant = check_invariant(ext);
    ExactCheck semi = verify_semiconjugacy(t, images);
    OrderReport order = verify_order_preserving(t, anchors);
    bool factors = factors_through(ext, sub, t);
    bool round_trip = true;
    for (const AngleClass& c : sub.classes) {
      std::vector<Angle> back;
      for (const Angle& x : c.angles()) back.push_back(*tuning_nu(t, tuning_p(t, x)));
      if (!(AngleClass(back) == c)) round_trip = false;
    }
    j["checks"] = {{"unlinked", to_json(unlinked)},
                   {"invariant", to_json(invariant)},
                   {"semiconjugacy", to_json(semi)},
                   {"order_preserving", to_json(order)},
                   {"factorization", factors},
                   {"round_trip", round_trip}};
    failed = !unlinked.ok || !invariant.ok || !semi.ok || !order.ok || !factors || !round_trip;
  }

  if (a.out.empty()) {
    std::cout << dump(j);
  } else {
    fs::path path(a.out);
    write_file(path, dump(j));
    fs::path svg = path;
    svg.replace_extension(".svg");
    write_file(svg, render_svg(ext, &model));
    std::cout << fmt::format("{} classes after extension -> {}\n", ext.classes.size(), path.string());
  }
  if (failed) {
    std::cerr << "exact checks failed\n";
    return inconsistent;
  }
  return ok;
}

int run_strategic(const Common& c, const std::string& data, std::size_t samples, const std::string& out) {
  TuningData t = tuning_from_json(read_json_file(data));
  Polynomial p = connected_polynomial(c);
  StrategicOptions opts;
  opts.landing = c.landing;
  opts.threads = width(c);
  StrategicReport r = strategic_report(p, t, samples, c.depth, opts);
  Json j;
  j["metadata"] = metadata("strategic", c);
  j["tuning"] = to_json(t);
  j["report"] = to_json(r);
  if (out.empty())
    std::cout << dump(j);
  else
    write_file(out, dump(j));
  std::cerr << fmt::format("order preserved: {}, landing agreement {:.3f}\n", r.order_preserved,
                           r.landing_agreement);
  return r.order_preserved ? ok : inconsistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational laminations and pinched-disk models of polynomial Julia sets"};
  app.set_version_flag("--version", std::string("lamina ") + version);
  app.require_subcommand(1);

  Common trace_c, lam_c, strat_c;
  std::string angle, trace_out, lam_dir = ".", strat_data, strat_out;
  unsigned max_den = 12;
  std::size_t strat_samples = 20;
  TuneArgs tune;

  auto* trace = app.add_subcommand("trace", "Trace one external ray and certify its landing");
  trace->add_option("--poly", trace_c.poly, "\"c=<complex>\" or coefficients \"1,0,-1\"")->required();
  trace->add_option("--angle", angle, "Rational angle p/q")->required();
  trace->add_option("--out", trace_out, "JSON output (an .svg is written next to it); stdout if omitted");
  add_landing_flags(trace, trace_c);

  auto* lam = app.add_subcommand("lam", "Rational lamination, quotient model and chord diagram");
  lam->add_option("--poly", lam_c.poly)->required();
  lam->add_option("--max-den", max_den, "Largest denominator")->capture_default_str()->check(CLI::Range(2u, 100000u));
  lam->add_option("--out-dir", lam_dir)->capture_default_str();
  add_landing_flags(lam, lam_c);

  auto* tn = app.add_subcommand("tune", "Transport a small lamination through tuning data");
  tn->add_option("--data", tune.data, "Tuning JSON")->required();
  tn->add_option("--sub-lam", tune.sub_lam, "Small lamination JSON")->required();
  tn->add_option("--ambient", tune.ambient, "Ambient lamination JSON");
  tn->add_option("--pullback", tune.pullback, "Add this many preimage levels of the characteristic class")
      ->check(CLI::NonNegativeNumber);
  tn->add_flag("--check", tune.check, "Run the exact checks; exit 5 on failure");
  tn->add_option("--samples", tune.samples, "Anchor angles for the checks")->capture_default_str();
  tn->add_option("--out", tune.out, "JSON output (an .svg is written next to it); stdout if omitted");

  auto* st = app.add_subcommand("strategic", "Order preservation and landing agreement of a tuning");
  st->add_option("--poly", strat_c.poly)->required();
  st->add_option("--data", strat_data, "Tuning JSON")->required();
  st->add_option("--samples", strat_samples)->capture_default_str();
  st->add_option("--out", strat_out);
  add_landing_flags(st, strat_c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return bad_input;
  }

  try {
    if (*trace) return run_trace(trace_c, angle, trace_out);
    if (*lam) return run_lam(lam_c, max_den, lam_dir);
    if (*tn) return run_tune(tune);
    if (*st) return run_strategic(strat_c, strat_data, strat_samples, strat_out);
  } catch (const ExitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code;
  } catch (const AngleParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_input;
  } catch (const PolynomialParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_input;
  } catch (const JsonFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_input;
  } catch (const DisconnectedJuliaSetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return disconnected;
  } catch (const LaminationConsistencyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return inconsistent;
  } catch (const LinkedLaminationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return inconsistent;
  } catch (const ExtensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return inconsistent;
  } catch (const TuningError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return inconsistent;
  } catch (const PullbackError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return inconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return ok;
}
