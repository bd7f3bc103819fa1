#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "oblique/cone.hpp"
#include "oblique/cylinder.hpp"
#include "oblique/elliptic.hpp"
#include "oblique/errors.hpp"
#include "oblique/halfcone.hpp"
#include "oblique/oracle.hpp"

namespace oblique::cli {

namespace {

constexpr double kPi = std::numbers::pi;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_scientific(double x, int digits) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::scientific, digits);
  return std::string(buf, res.ptr);
}

std::string format_shortest(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string format_value(const Record& v, int digits) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return v.dump();
  if (v.is_number_float()) return format_number(v.get<double>(), digits);
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Rounds every float to the display precision so that JSON shows no more.
Record rounded(const Record& r, int digits) {
  if (r.is_number_float()) {
    const std::string s = format_number(r.get<double>(), digits);
    double x = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), x);
    return x;
  }
  if (r.is_structured()) {
    Record out = r;
    for (auto it = out.begin(); it != out.end(); ++it) *it = rounded(*it, digits);
    return out;
  }
  return r;
}

void flatten_into(const Record& r, const std::string& prefix,
                  std::vector<std::pair<std::string, Record>>& out) {
  for (auto it = r.begin(); it != r.end(); ++it) {
    const std::string& key = it.key();
    if (it->is_object()) {
      const std::string next = key == "measures" ? prefix : prefix + key + "_";
      flatten_into(*it, next, out);
    } else {
      out.emplace_back(prefix + key, *it);
    }
  }
}

Record body_measures_json(const BodyMeasures& m) {
  Record j;
  j["volume"] = m.volume;
  j["area_lateral"] = m.area_lateral;
  j["area_total"] = m.area_total;
  j["integrated_mean_curvature"] = m.integrated_mean_curvature;
  j["edge_term"] = m.edge_term;
  j["mean_width"] = m.mean_width;
  return j;
}

Record half_json(const HalfConeMeasures& m) {
  Record j;
  j["j"] = m.j;
  j["l"] = m.l;
  j["base_angle"] = m.base_angle;
  j["leg_angle"] = m.leg_angle;
  j["ar_lateral"] = m.ar_lateral;
  j["ar_with_base"] = m.ar_with_base;
  j["ar_with_base_and_triangle"] = m.ar_with_base_and_triangle;
  j["mean_width"] = m.mean_width;
  return j;
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  return Format::text;
}

}  // namespace

std::string format_number(double x, int digits) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general,
                                 std::clamp(digits, 1, 17));
  return std::string(buf, res.ptr);
}

std::vector<std::pair<std::string, Record>> flatten(const Record& r) {
  std::vector<std::pair<std::string, Record>> out;
  flatten_into(r, "", out);
  return out;
}

void write_records(std::ostream& out, const std::vector<Record>& records,
                   const OutputOptions& opt) {
  switch (opt.format) {
    case Format::json: {
      Record arr = Record::array();
      for (const auto& r : records) arr.push_back(rounded(r, opt.digits));
      out << (records.size() == 1 ? arr[0] : arr).dump(2) << '\n';
      break;
    }
    case Format::csv: {
      bool header = true;
      for (const auto& r : records) {
        const auto cols = flatten(r);
        std::string line;
        if (header) {
          for (std::size_t i = 0; i < cols.size(); ++i) line += (i ? "," : "") + cols[i].first;
          out << line << '\n';
          header = false;
          line.clear();
        }
        for (std::size_t i = 0; i < cols.size(); ++i) {
          line += (i ? "," : "") + format_value(cols[i].second, opt.digits);
        }
        out << line << '\n';
      }
      break;
    }
    case Format::text: {
      bool first = true;
      for (const auto& r : records) {
        if (!first) out << '\n';
        first = false;
        const auto cols = flatten(r);
        std::size_t width = 0;
        for (const auto& [k, v] : cols) width = std::max(width, k.size());
        for (const auto& [k, v] : cols) {
          const std::string value = format_value(v, opt.digits);
          out << k;
          if (!value.empty()) out << std::string(width - k.size() + 2, ' ') << value;
          out << '\n';
        }
      }
      break;
    }
  }
}

Record measures_record(std::string_view body, double a, double b) {
  Record r;
  r["body"] = std::string(body);
  r["a"] = a;
  r["b"] = b;
  if (body == "cylinder") {
    r["measures"] = body_measures_json(cyl_measures({a, b}));
  } else if (body == "cone") {
    r["measures"] = body_measures_json(cone_measures({a, b}));
  } else {
    throw DomainError("body must be cylinder or cone");
  }
  r["provenance"] = "closed_form";
  return r;
}

Record split_record(double a, double b) {
  const ConeGeom g(a, b);
  const auto s = half_measures(g, HalfSide::smaller);
  const auto l = half_measures(g, HalfSide::larger);
  Record r;
  r["body"] = "halfcone";
  r["a"] = a;
  r["b"] = b;
  Record m;
  m["smaller"] = half_json(s);
  m["larger"] = half_json(l);
  Record ratios;
  ratios["ar_lateral"] = s.ar_lateral / l.ar_lateral;
  ratios["ar_total"] = s.ar_with_base / l.ar_with_base;
  ratios["ar_addendum"] = s.ar_with_base_and_triangle / l.ar_with_base_and_triangle;
  ratios["mean_width"] = s.mean_width / l.mean_width;
  m["ratios"] = ratios;
  r["measures"] = m;
  r["near_singular"] = s.near_singular;
  r["provenance"] = "quadrature";
  return r;
}

Record solve_record(Problem p) {
  const Optimum opt = solve(p);
  Record r;
  r["problem"] = std::string(to_string(p));
  r["a_star"] = opt.a_star;
  r["infimum"] = opt.infimum;
  r["residual"] = opt.root.residual;
  r["iterations"] = opt.root.iterations;
  r["bracket_lo"] = opt.root.bracket.first;
  r["bracket_hi"] = opt.root.bracket.second;
  Record cross;
  if (opt.reduced_a_star) {
    cross["method"] = p == Problem::ar_total ? "-1/cos(eta(1/pi))" : "1/sin(xi(2/pi))";
    cross["a_star"] = *opt.reduced_a_star;
    cross["difference"] = std::abs(*opt.reduced_a_star - opt.a_star);
  } else {
    cross["method"] = "none";
    cross["a_star"] = nullptr;
    cross["difference"] = nullptr;
  }
  r["cross_check"] = cross;
  r["provenance"] = "closed_form";
  return r;
}

Record constants_record() {
  Record r;
  r["xi_1"] = xi(1.0);
  r["xi_2_over_pi"] = xi(2.0 / kPi);
  r["eta_1_over_pi"] = eta(1.0 / kPi);
  r["provenance"] = "closed_form";
  return r;
}

std::vector<Record> sweep_records(const SweepSpec& spec) {
  if (spec.body != "cylinder" && spec.body != "cone" && spec.body != "halfcone") {
    throw DomainError("sweep: body must be cylinder, cone or halfcone");
  }
  if (spec.steps < 1) throw DomainError("sweep: steps must be >= 1");
  if (!(spec.a_lo <= spec.a_hi) || !(spec.b_lo <= spec.b_hi)) {
    throw DomainError("sweep: ranges need lo <= hi");
  }
  if (spec.a_lo < 0.0) throw DomainError("sweep: a must be >= 0");
  if (!(spec.b_lo > 0.0)) throw DomainError("sweep: b must be > 0");
  auto at = [&spec](double lo, double hi, int i) {
    return spec.steps == 1 ? lo : lo + (hi - lo) * i / (spec.steps - 1);
  };
  std::vector<Record> out;
  for (int i = 0; i < spec.steps; ++i) {
    for (int j = 0; j < spec.steps; ++j) {
      const double a = at(spec.a_lo, spec.a_hi, i);
      const double b = at(spec.b_lo, spec.b_hi, j);
      out.push_back(spec.body == "halfcone" ? split_record(a, b)
                                            : measures_record(spec.body, a, b));
    }
  }
  return out;
}

// Verification.

namespace {

constexpr std::size_t kVerifySamples = 200'000;
const LatLongGrid kVerifyGrid{};
constexpr double kGridLimit = 1e-7;
constexpr double kLimitRatio = 1e-3;

class Verifier {
 public:
  Verifier(std::string suite, double rel_tol, std::uint64_t seed)
      : suite_(std::move(suite)), rel_tol_(rel_tol), seed_(seed) {}

  void relative(const std::string& name, double a, double b, double got, double want) {
    const double err = std::abs(got - want) / std::max(std::abs(want), 1e-300);
    add(name, a, b, err, rel_tol_);
  }

  void absolute(const std::string& name, double a, double b, double got, double want,
                double limit) {
    add(name, a, b, std::abs(got - want), limit);
  }

  void sigma(const std::string& name, double a, double b, const SphereEstimate& est,
             double want) {
    add(name, a, b, std::abs(est.value - want), 3.0 * est.error);
  }

  void agree(const std::string& name, double a, double b, const SphereEstimate& x,
             const SphereEstimate& y) {
    add(name, a, b, std::abs(x.value - y.value), 3.0 * std::hypot(x.error, y.error));
  }

  std::uint64_t next_seed() { return seed_ + counter_++; }

  std::vector<VerifyCheck> take() { return std::move(checks_); }

 private:
  void add(const std::string& name, double a, double b, double err, double limit) {
    checks_.push_back({suite_, name, a, b, err, limit, err <= limit});
  }

  std::string suite_;
  double rel_tol_;
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
  std::vector<VerifyCheck> checks_;
};

void verify_cylinder(Verifier& v) {
  for (auto [a, b] : {std::pair{0.0, 1.0}, {1.0, 1.0}, {3.0, 4.0}, {2.0, 0.3}, {0.5, 3.0}}) {
    const CylinderGeom g(a, b);
    v.relative("lateral_area", a, b, cyl_area(g).lateral, quadrature_cyl_lateral(g));
    v.relative("integrated_mean_curvature", a, b, cyl_imc(g), quadrature_cyl_imc(g));
    v.relative("edge_term", a, b, cyl_edge_term(g), quadrature_cyl_edge_term(g));
    const SupportBody body{HullKind::cylinder, a, b};
    v.absolute("mean_width_grid", a, b, mw_oracle(body, kVerifyGrid).value, cyl_mean_width(g),
               kGridLimit);
    v.sigma("mean_width_mc", a, b, mw_oracle(body, MonteCarlo{kVerifySamples, v.next_seed()}),
            cyl_mean_width(g));
    v.sigma("volume_mc", a, b, volume_mc(body, kVerifySamples, v.next_seed()), cyl_volume(g));
  }
  for (auto [a, b] : {std::pair{2.0, 1.0}, {0.5, 3.0}}) {
    const auto r = halfcylinder_symmetry_check({a, b}, kVerifySamples, v.next_seed());
    v.next_seed();
    v.agree("halfcylinder_volumes", a, b, r.volume[0], r.volume[1]);
    v.agree("halfcylinder_mean_widths", a, b, r.mean_width[0], r.mean_width[1]);
  }
}

void verify_cone(Verifier& v) {
  for (auto [a, b] : {std::pair{0.0, 1.0}, {1.0, 1.0}, {2.0, 0.5}, {3.0, 2.0}, {0.5, 0.05}}) {
    const ConeGeom g(a, b);
    v.relative("lateral_area", a, b, cone_area(g).lateral, quadrature_cone_lateral(g));
    v.relative("integrated_mean_curvature", a, b, cone_imc(g), quadrature_cone_imc(g));
    v.relative("edge_term", a, b, cone_edge_term(g), quadrature_cone_edge_term(g));
    const SupportBody body{HullKind::cone, a, b};
    v.absolute("mean_width_grid", a, b, mw_oracle(body, kVerifyGrid).value, cone_mean_width(g),
               kGridLimit);
    v.sigma("mean_width_mc", a, b, mw_oracle(body, MonteCarlo{kVerifySamples, v.next_seed()}),
            cone_mean_width(g));
    v.sigma("volume_mc", a, b, volume_mc(body, kVerifySamples, v.next_seed()), cone_volume(g));
  }
  for (double b : {0.5, 2.0}) {
    const ConeGeom g(0.0, b);
    v.relative("right_lateral_area", 0.0, b, cone_area(g).lateral, kPi * std::sqrt(1.0 + b * b));
    v.relative("right_mean_width", 0.0, b, cone_mean_width(g),
               (b + kPi) / 2.0 - 0.5 * std::atan(b));
  }
}

void verify_halfcone(Verifier& v) {
  for (auto [a, b] : {std::pair{0.5, 0.5}, {1.5, 0.8}, {2.0, 0.3}}) {
    const ConeGeom g(a, b);
    const auto s = half_measures(g, HalfSide::smaller);
    const auto l = half_measures(g, HalfSide::larger);
    v.relative("lateral_additivity", a, b, s.ar_lateral + l.ar_lateral, cone_area(g).lateral);
    v.relative("j_additivity", a, b, s.j + l.j, cone_imc(g));
    v.relative("l_additivity", a, b, s.l + l.l, cone_edge_term(g));
    for (const auto* m : {&s, &l}) {
      const std::string side(to_string(m->side));
      v.relative("j_quadrature_" + side, a, b, m->j, half_j_quadrature(g, m->side));
      const SupportBody body{HullKind::halfcone, a, b, m->side};
      v.absolute("mean_width_grid_" + side, a, b, mw_oracle(body, kVerifyGrid).value,
                 m->mean_width, kGridLimit);
      v.sigma("mean_width_mc_" + side, a, b,
              mw_oracle(body, MonteCarlo{kVerifySamples, v.next_seed()}), m->mean_width);
    }
    v.agree("volume_split", a, b,
            volume_mc({HullKind::halfcone, a, b, HalfSide::smaller}, kVerifySamples,
                      v.next_seed()),
            volume_mc({HullKind::halfcone, a, b, HalfSide::larger}, kVerifySamples,
                      v.next_seed()));
  }
  const double b = 1e-6;
  for (double a : {1.2, 1.5, 2.0, 3.0}) {
    const auto r = half_ratios({a, b});
    v.absolute("limit_ar_lateral", a, b, r.ar_lateral, ratio_ar_lateral_limit(a), kLimitRatio);
    v.absolute("limit_ar_total", a, b, r.ar_total, ratio_ar_total_limit(a), kLimitRatio);
    v.absolute("limit_ar_addendum", a, b, r.ar_addendum, ratio_ar_addendum_limit(a),
               kLimitRatio);
    v.absolute("limit_mean_width", a, b, r.mean_width, ratio_mw_limit(a), kLimitRatio);
  }
}

}  // namespace

std::vector<VerifyCheck> run_verify(std::string_view suite, std::optional<double> tol,
                                    std::uint64_t seed) {
  const double rel = tol.value_or(1e-10);
  if (!(rel >= 0.0)) throw DomainError("verify: tol must be >= 0");
  std::vector<VerifyCheck> all;
  auto run_one = [&](const std::string& name, void (*fn)(Verifier&)) {
    Verifier v(name, rel, seed);
    fn(v);
    auto checks = v.take();
    all.insert(all.end(), checks.begin(), checks.end());
  };
  const bool every = suite == "all";
  if (!every && suite != "cylinder" && suite != "cone" && suite != "halfcone") {
    throw DomainError("verify: suite must be cylinder, cone, halfcone or all");
  }
  if (every || suite == "cylinder") run_one("cylinder", verify_cylinder);
  if (every || suite == "cone") run_one("cone", verify_cone);
  if (every || suite == "halfcone") run_one("halfcone", verify_halfcone);
  return all;
}

void write_verify_report(std::ostream& out, std::string_view suite, std::uint64_t seed,
                         const std::vector<VerifyCheck>& checks, const OutputOptions& opt) {
  const auto failed = std::count_if(checks.begin(), checks.end(),
                                    [](const VerifyCheck& c) { return !c.pass; });
  if (opt.format == Format::text) {
    out << "verify " << suite << " seed=" << seed << '\n';
    for (const auto& c : checks) {
      out << (c.pass ? "PASS " : "FAIL ") << c.suite << ' ' << c.name
          << " a=" << format_shortest(c.a) << " b=" << format_shortest(c.b)
          << " error=" << format_scientific(c.error, 3)
          << " limit=" << format_scientific(c.limit, 3) << '\n';
    }
    out << checks.size() << " checks, " << failed << " failed\n";
    for (const auto& c : checks) {
      if (!c.pass) out << "offender: " << c.suite << ' ' << c.name << '\n';
    }
    return;
  }
  std::vector<Record> rows;
  for (const auto& c : checks) {
    Record r;
    r["suite"] = c.suite;
    r["check"] = c.name;
    r["a"] = c.a;
    r["b"] = c.b;
    r["error"] = c.error;
    r["limit"] = c.limit;
    r["pass"] = c.pass;
    rows.push_back(std::move(r));
  }
  if (opt.format == Format::csv) {
    write_records(out, rows, opt);
    return;
  }
  Record report;
  report["suite"] = std::string(suite);
  report["seed"] = seed;
  report["passed"] = failed == 0;
  report["failed"] = failed;
  report["checks"] = rows;
  out << rounded(report, opt.digits).dump(2) << '\n';
}

// Command-line front end.

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Measures of oblique circular cylinders, cones and half-cones", "oblique"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  int digits = 17;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--digits", digits, "Significant digits shown")->check(CLI::Range(1, 17));

  std::string body;
  double a = 0.0, b = 0.0;
  auto* measures = app.add_subcommand("measures", "Volume, areas, curvature integrals, MW");
  measures->add_option("body", body, "cylinder or cone")->required();
  measures->add_option("a", a, "Horizontal offset, a >= 0")->required();
  measures->add_option("b", b, "Height, b > 0")->required();

  auto* split = app.add_subcommand("split", "Half-cone measures and ratios");
  split->add_option("a", a, "Apex offset, a >= 0")->required();
  split->add_option("b", b, "Apex height, b > 0")->required();

  std::string problem;
  auto* solve_cmd = app.add_subcommand("solve", "Optimal a and infimum of a ratio problem");
  solve_cmd->add_option("problem", problem, "ar-lateral, ar-total, ar-addendum, mw or all")
      ->required();

  auto* constants = app.add_subcommand("constants", "xi(1), xi(2/pi), eta(1/pi)");

  SweepSpec spec;
  std::vector<double> a_range{0.0, 0.0}, b_range{1.0, 1.0};
  std::string out_path;
  auto* sweep = app.add_subcommand("sweep", "Measures over an (a, b) grid");
  sweep->add_option("body", spec.body, "cylinder, cone or halfcone")->required();
  sweep->add_option("--a-range", a_range, "lo hi")->expected(2)->required();
  sweep->add_option("--b-range", b_range, "lo hi")->expected(2)->required();
  sweep->add_option("--steps", spec.steps, "Points per axis")->required();
  sweep->add_option("--out", out_path, "Output file (default stdout)");

  std::string suite;
  std::optional<double> tol;
  std::uint64_t seed = 42;
  auto* verify = app.add_subcommand("verify", "Closed forms against independent oracles");
  verify->add_option("suite", suite, "cylinder, cone, halfcone or all")
      ->required()
      ->check(CLI::IsMember({"cylinder", "cone", "halfcone", "all"}));
  verify->add_option("--tol", tol, "Relative tolerance for quadrature comparisons");
  verify->add_option("--seed", seed, "Monte Carlo seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const OutputOptions opt{parse_format(format), digits};
  try {
    if (*measures) {
      if (body != "cylinder" && body != "cone") throw DomainError("body must be cylinder or cone");
      write_records(out, {measures_record(body, a, b)}, opt);
    } else if (*split) {
      write_records(out, {split_record(a, b)}, opt);
    } else if (*solve_cmd) {
      std::vector<Record> recs;
      if (problem == "all") {
        for (auto p : {Problem::ar_lateral, Problem::ar_total, Problem::ar_addendum, Problem::mw})
          recs.push_back(solve_record(p));
      } else {
        const auto p = parse_problem(problem);
        if (!p) throw DomainError("unknown problem '" + problem + "'");
        recs.push_back(solve_record(*p));
      }
      write_records(out, recs, opt);
    } else if (*constants) {
      write_records(out, {constants_record()}, opt);
    } else if (*sweep) {
      spec.a_lo = a_range[0];
      spec.a_hi = a_range[1];
      spec.b_lo = b_range[0];
      spec.b_hi = b_range[1];
      const auto recs = sweep_records(spec);
      if (out_path.empty()) {
        write_records(out, recs, opt);
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw IoError("cannot open '" + out_path + "' for writing");
        write_records(file, recs, opt);
        file.flush();
        if (!file) throw IoError("write to '" + out_path + "' failed");
      }
    } else if (*verify) {
      const auto checks = run_verify(suite, tol, seed);
      write_verify_report(out, suite, seed, checks, opt);
      const bool ok = std::all_of(checks.begin(), checks.end(),
                                  [](const VerifyCheck& c) { return c.pass; });
      return ok ? kOk : kVerifyFailed;
    }
  } catch (const DomainError& e) {
    err << "oblique: " << e.what() << '\n';
    return kUsage;
  } catch (const QuadratureError& e) {
    err << "oblique: " << e.what() << " (error estimate " << format_scientific(e.error_estimate(), 3)
        << ")\n";
    return kQuadrature;
  } catch (const SolverError& e) {
    err << "oblique: " << e.what() << '\n';
    return kSolver;
  } catch (const IoError& e) {
    err << "oblique: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    err << "oblique: internal error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kOk;
}

}  // namespace oblique::cli
