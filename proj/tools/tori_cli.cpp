#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "io/report_io.hpp"
#include "tori/error.hpp"

using namespace tori;
using io::json;

namespace {

struct Common {
  std::string format = "json";
  std::string out;
  long order = 30;
};

struct DiscArgs {
  std::string spec;
  std::string x = "0";
  std::string y = "0";
  std::size_t function = 1;
};

void emit(const Common& c, const json& j) {
  std::string text = c.format == "text" ? io::render_text(j) : j.dump(2) + "\n";
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw Error(Errc::InvalidInput, "cannot write " + c.out);
  f << text;
}

Series<RationalField> read_series(const std::string& path, long order) {
  const json j = io::read_json(path);
  const RationalField QQ;
  if (j.value("log1p", false)) {
    // log(1 + T)
    return formal_log(Series<RationalField>::linear(QQ, Rat(1)), order);
  }
  std::vector<Rat> cs;
  for (const auto& c : j.at("coefficients")) cs.push_back(io::parse_rat(c));
  if (j.value("exact", false)) return Series<RationalField>::polynomial(QQ, cs);
  long trunc = j.value("truncation", static_cast<long>(cs.size()) - 1);
  return Series<RationalField>(QQ, cs, trunc).truncate(std::min(trunc, order));
}

json run_np(const std::string& path, long order) {
  const json j = io::read_json(path);
  const Int p = io::parse_int(j.at("prime"));
  auto s = read_series(path, order);
  return {{"prime", io::int_json(p)}, {"polygon", io::newton_json(newton_polygon(s, p))}};
}

struct DiscSetup {
  TorusCurveSpec spec;
  PlaneCurve curve;
  RationalFunction f;
  DiscPoint z0;
};

DiscSetup disc_setup(const DiscArgs& a) {
  DiscSetup d;
  d.spec = io::read_spec(a.spec);
  d.curve = model_curve(d.spec);
  auto fs = model_functions(d.spec);
  if (a.function < 1 || a.function > fs.size()) throw Error(Errc::InvalidInput, "function index out of range");
  d.f = fs[a.function - 1];
  d.z0 = make_disc_point(d.curve, parse_rational(a.x), parse_rational(a.y));
  return d;
}

json run_log_disc(const DiscArgs& a, long order) {
  auto d = disc_setup(a);
  auto s = log_f_disc_series(d.curve, d.f, d.z0, order);
  return {{"point", {a.x, a.y}},
          {"function", a.function},
          {"parameter", d.z0.axis == Axis::X ? "x - x0" : "y - y0"},
          {"series", io::series_json(s)},
          {"polygon", io::newton_json(newton_polygon(s))}};
}

json run_verify_slopes(const DiscArgs& a, long order) {
  auto d = disc_setup(a);
  const SlopeReport r = verify_slopes(d.curve, d.f, d.z0, order);
  json j = io::slope_report_json(r);
  j["point"] = {a.x, a.y};
  j["function"] = a.function;
  j["ramified_slope"] = ramified_slope_flag(r);
  return j;
}

json run_bounds(long g, long d, const std::string& p_text, long n) {
  const Int p = io::parse_int(json(p_text));
  std::vector<StageError> errors;
  BoundTable b = evaluate_bounds(g, d, p, std::nullopt, &errors);
  Int classes = (ipow(p, static_cast<unsigned long>(n)) - 1) / (p - 1);
  json j = io::bounds_json(b, g, d, p);
  j["anomalous_bound"] = io::int_json(classes * (2 * g - 2 + d - 1));
  j["anomalous_divisor_bound"] = io::int_json(classes * (2 * g - 2 + d));
  j["exponent_classes"] = io::int_json(classes);
  json errs = json::array();
  for (const auto& e : errors) errs.push_back(io::error_json(e));
  j["errors"] = errs;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unlikely-intersection search and p-adic diagnostics for curves in G_m^3"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", common.out, "Write the report to this path");
  app.add_option("--order", common.order, "Series truncation order")->check(CLI::PositiveNumber);

  std::string series_path;
  auto* np = app.add_subcommand("np", "Newton polygon of a rational power series");
  np->add_option("series", series_path, "Series file")->required()->check(CLI::ExistingFile);

  DiscArgs disc;
  auto add_disc = [&](CLI::App* sub) {
    sub->add_option("spec", disc.spec, "Curve spec file")->required()->check(CLI::ExistingFile);
    sub->add_option("--x", disc.x, "x-coordinate of the disc centre");
    sub->add_option("--y", disc.y, "y-coordinate of the disc centre");
    sub->add_option("--function", disc.function, "Function index (1-3)");
  };
  auto* log_disc = app.add_subcommand("log-disc", "log f on a residue disc and its Newton polygon");
  add_disc(log_disc);
  auto* slopes = app.add_subcommand("verify-slopes", "Compare the log f polygon with the predicted slopes");
  add_disc(slopes);

  std::string spec_path;
  long B = 0, M = 0;
  auto* voloch = app.add_subcommand("voloch", "Mod p^2 finiteness verdicts per function pair");
  voloch->add_option("spec", spec_path)->required()->check(CLI::ExistingFile);
  auto* anomalous = app.add_subcommand("anomalous", "Anomalous residue discs");
  anomalous->add_option("spec", spec_path)->required()->check(CLI::ExistingFile);
  auto* hunt = app.add_subcommand("hunt", "Search for points with two independent relations");
  hunt->add_option("spec", spec_path)->required()->check(CLI::ExistingFile);
  hunt->add_option("--B", B, "Override the exponent bound");
  hunt->add_option("--M", M, "Override the torsion-order bound");
  auto* pipeline = app.add_subcommand("pipeline", "Run every stage and emit one report");
  pipeline->add_option("spec", spec_path)->required()->check(CLI::ExistingFile);

  long genus = 0, degree = 0, classes_n = 3;
  std::string prime;
  auto* bounds = app.add_subcommand("bounds", "Evaluate the bound formulas");
  bounds->add_option("--genus,-g", genus)->required();
  bounds->add_option("--degree,-d", degree, "Boundary degree")->required();
  bounds->add_option("--prime,-p", prime)->required();
  bounds->add_option("--n", classes_n, "Number of functions");

  CLI11_PARSE(app, argc, argv);

  try {
    json out;
    if (*np) {
      out = run_np(series_path, common.order);
    } else if (*log_disc) {
      out = run_log_disc(disc, common.order);
    } else if (*slopes) {
      out = run_verify_slopes(disc, common.order);
    } else if (*voloch) {
      auto spec = io::read_spec(spec_path);
      json pairs = json::array();
      for (const auto& pv : finiteness_pairs(spec)) pairs.push_back(io::pair_json(pv));
      out = {{"prime", io::int_json(spec.prime)}, {"pairs", pairs}};
    } else if (*anomalous) {
      auto spec = io::read_spec(spec_path);
      out = io::anomalous_json(anomalous_discs(model_curve(spec), model_functions(spec)), spec.prime);
    } else if (*hunt) {
      auto spec = io::read_spec(spec_path);
      if (spec.model != ModelKind::Rational) throw Error(Errc::InvalidInput, "hunt needs a rational model");
      out = io::hunt_json(relation_solve(spec.maps, B > 0 ? B : spec.B, M > 0 ? M : spec.M));
    } else if (*bounds) {
      out = run_bounds(genus, degree, prime, classes_n);
    } else if (*pipeline) {
      out = io::report_json(run_pipeline(io::read_spec(spec_path)));
    }
    emit(common, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
