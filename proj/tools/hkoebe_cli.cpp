// hkoebe: construct sheared harmonic Koebe maps, estimate covering radii and
// areas, print the closed-form bounds, and run the verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "hkoebe/area.hpp"
#include "hkoebe/bounds.hpp"
#include "hkoebe/io.hpp"
#include "hkoebe/radius.hpp"
#include "hkoebe/shear.hpp"
#include "hkoebe/verify.hpp"

namespace {

using namespace hkoebe;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

struct SourceArgs {
  std::string map_file;
  std::string closed_form;

  void add_to(CLI::App* cmd) {
    cmd->add_option("map", map_file, "Map JSON file");
    cmd->add_option("--closed-form", closed_form, "Closed form: K, KH_1 .. KH_4");
  }

  MapSource load() const {
    if (!closed_form.empty() && !map_file.empty()) throw ParseError("give either a map file or --closed-form, not both");
    if (!closed_form.empty()) {
      try {
        return ClosedFormId::parse(closed_form);
      } catch (const InvalidSpec& e) {
        throw ParseError(e.what());
      }
    }
    if (map_file.empty()) throw ParseError("a map file or --closed-form is required");
    return map_from_json_text(read_file(map_file));
  }
};

struct ShearArgs {
  double k = 1.0;
  int m = 1;
  double alpha = 0.0;
  int order = static_cast<int>(kShearOrder);
  std::string out;
};

int run_shear(const ShearArgs& a) {
  const DilatationSpec spec(a.k, a.m, a.alpha);
  const HarmonicMap<double> map = sheared_koebe(spec, a.order);
  const Json meta{{"construction", "shear"}, {"k", spec.k}, {"m", a.m}, {"alpha", spec.alpha}, {"order", a.order}};
  write_output(a.out, dump_deterministic(map_to_json(map, meta)) + "\n");
  return kExitOk;
}

struct RadiusArgs {
  SourceArgs source;
  RadiusOptions options;
  std::string tail = "auto";
};

int run_radius(const RadiusArgs& a) {
  RadiusOptions opt = a.options;
  if (a.tail == "exact") opt.tail = SeriesTail::Exact;
  else if (a.tail == "truncated") opt.tail = SeriesTail::Truncated;
  const auto est = koebe_radius_estimate(a.source.load(), opt);
  std::cout << dump_deterministic(radius_to_json(est)) << "\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string only;
  bool json = false;
};

int run_verify(const VerifyArgs& a) {
  const auto results = run_verification(a.only);
  bool all = true;
  for (const auto& r : results) all = all && r.pass;
  if (a.json) {
    std::cout << dump_deterministic(verification_to_json(results)) << "\n";
  } else {
    int wn = 4, we = 8, wg = 3;
    for (const auto& r : results) {
      wn = std::max(wn, int(r.name.size()));
      we = std::max(we, int(r.expected.size()));
      wg = std::max(wg, int(r.got.size()));
    }
    std::printf("%-*s  %-*s  %-*s  %s\n", wn, "name", we, "expected", wg, "got", "pass");
    for (const auto& r : results)
      std::printf("%-*s  %-*s  %-*s  %s\n", wn, r.name.c_str(), we, r.expected.c_str(), wg, r.got.c_str(),
                  r.pass ? "PASS" : "FAIL");
  }
  return all ? kExitOk : kExitFail;
}

struct BoundsArgs {
  std::string formula;
  double r = 1.0, k = 1.0, m = 1.0, R = 1.0;
  int p = 2, q = 2;
};

int run_bounds(const BoundsArgs& a) {
  Json out;
  const auto& f = a.formula;
  auto report = [&](const std::string& name, std::map<std::string, double> inputs, double value) {
    BoundReport b;
    b.name = name;
    b.inputs = std::move(inputs);
    b.value = value;
    return report_to_json(b);
  };
  if (f == "koebe-lower") {
    out = report(f, {{"r", a.r}, {"k", a.k}, {"m", a.m}}, koebe_lower_bound(a.r, DilatationSpec(a.k, a.m)));
  } else if (f == "koebe-radius") {
    out = report(f, {{"k", a.k}, {"m", a.m}}, koebe_radius_lower(DilatationSpec(a.k, a.m)));
  } else if (f == "corollary1") {
    const auto c = corollary1_predicate(DilatationSpec(a.k, a.m));
    out = Json{{"name", f}, {"inputs", {{"k", a.k}, {"m", a.m}}}, {"stated", c.stated}, {"exact", c.exact}};
  } else if (f == "class-constants") {
    const auto c = class_constants(ClassIndex(a.p, a.q));
    out = Json{{"name", f}, {"inputs", {{"p", a.p}, {"q", a.q}}}, {"R", c.R}, {"d", c.d}};
  } else if (f == "coefficient") {
    out = report(f, {{"p", double(a.p)}, {"q", double(a.q)}}, coefficient_bound(ClassIndex(a.p, a.q)));
  } else if (f == "heinz") {
    out = report(f, {{"R", a.R}}, heinz_lower(a.R));
  } else if (f == "area-lower") {
    out = report(f, {{"k", a.k}, {"m", a.m}}, area_lower_bound(DilatationSpec(a.k, a.m)));
  } else if (f == "kh3-interval") {
    const auto iv = kh3_radius_interval();
    out = Json{{"name", f}, {"lower", iv.lower}, {"upper", iv.upper}};
  } else {
    throw ParseError("unknown formula '" + f + "'");
  }
  std::cout << dump_deterministic(out) << "\n";
  return kExitOk;
}

struct AreaArgs {
  SourceArgs source;
  bool extremal = false;
  double k = 1.0, alpha = 0.0;
  int m = 1;
  double r = 0.9;
  std::string method = "both";
  int n_rad = 64, n_ang = 256;
};

int run_area(const AreaArgs& a) {
  HarmonicMap<double> map;
  if (a.extremal) {
    map = extremal_map(DilatationSpec(a.k, a.m, a.alpha));
  } else {
    const auto src = a.source.load();
    if (std::holds_alternative<ClosedFormId>(src)) throw ParseError("area needs a series map, not a closed form");
    map = std::get<HarmonicMap<double>>(src);
  }
  Json out{{"r", a.r}};
  if (a.method == "series" || a.method == "both") out["series"] = area_to_json(area_series(map, a.r));
  if (a.method == "quadrature" || a.method == "both") out["quadrature"] = area_quadrature(map, a.r, a.n_rad, a.n_ang);
  std::cout << dump_deterministic(out) << "\n";
  return kExitOk;
}

struct ExportArgs {
  SourceArgs source;
  double r = 1.0 - 1.0 / 1024.0;
  int n = 1024;
  std::string out;
};

int run_export(const ExportArgs& a) {
  write_output(a.out, boundary_csv(boundary_profile(a.source.load(), a.r, a.n)));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harmonic Koebe maps: shear construction, covering radius, area and coefficient bounds"};
  app.require_subcommand(1);

  ShearArgs shear_args;
  auto* shear_cmd = app.add_subcommand("shear", "Write the map JSON of shear(K, k e^{i alpha} z^m)");
  shear_cmd->add_option("--k", shear_args.k, "Dilatation amplitude in [0, 1]")->check(CLI::Range(0.0, 1.0));
  shear_cmd->add_option("--m", shear_args.m, "Dilatation exponent (integer >= 1)")->check(CLI::PositiveNumber);
  shear_cmd->add_option("--alpha", shear_args.alpha, "Dilatation phase");
  shear_cmd->add_option("--order", shear_args.order, "Series truncation order")->check(CLI::Range(1, 1 << 16));
  shear_cmd->add_option("-o,--output", shear_args.out, "Output path (stdout if omitted)");

  RadiusArgs radius_args;
  auto* radius_cmd = app.add_subcommand("radius", "Estimate the minimum boundary modulus (Koebe radius)");
  radius_args.source.add_to(radius_cmd);
  radius_cmd->add_option("--j-min", radius_args.options.j_min, "First ladder rung, r = 1 - 2^-j");
  radius_cmd->add_option("--j-max", radius_args.options.j_max, "Last ladder rung");
  radius_cmd->add_option("--n", radius_args.options.n, "Angular samples per rung")->check(CLI::Range(4, 1 << 22));
  radius_cmd->add_option("--tail", radius_args.tail, "Series tail policy")
      ->check(CLI::IsMember({"auto", "exact", "truncated"}));

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suite");
  verify_cmd->add_option("--only", verify_args.only, "Run a single named check");
  verify_cmd->add_flag("--json", verify_args.json, "Machine-readable report");

  BoundsArgs bounds_args;
  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate a closed-form bound");
  bounds_cmd->add_option("formula", bounds_args.formula,
                         "koebe-lower | koebe-radius | corollary1 | class-constants | coefficient | heinz | "
                         "area-lower | kh3-interval")
      ->required();
  bounds_cmd->add_option("--r", bounds_args.r, "|z|");
  bounds_cmd->add_option("--k", bounds_args.k, "Dilatation amplitude");
  bounds_cmd->add_option("--m", bounds_args.m, "Dilatation exponent");
  bounds_cmd->add_option("--p", bounds_args.p, "Index of the first nonzero a_p");
  bounds_cmd->add_option("--q", bounds_args.q, "Index of the first nonzero b_q");
  bounds_cmd->add_option("--R", bounds_args.R, "Covering radius for the Heinz bound");

  AreaArgs area_args;
  auto* area_cmd = app.add_subcommand("area", "Image area by Parseval series and by Jacobian quadrature");
  area_args.source.add_to(area_cmd);
  area_cmd->add_flag("--extremal", area_args.extremal, "Use the extremal map z + k/(m+1) conj(z)^(m+1)");
  area_cmd->add_option("--k", area_args.k, "Extremal map amplitude");
  area_cmd->add_option("--m", area_args.m, "Extremal map exponent");
  area_cmd->add_option("--alpha", area_args.alpha, "Extremal map phase");
  area_cmd->add_option("--r", area_args.r, "Radius of the subdisk");
  area_cmd->add_option("--method", area_args.method, "series | quadrature | both")
      ->check(CLI::IsMember({"series", "quadrature", "both"}));
  area_cmd->add_option("--n-rad", area_args.n_rad, "Gauss-Legendre nodes");
  area_cmd->add_option("--n-ang", area_args.n_ang, "Trapezoid nodes");

  ExportArgs export_args;
  auto* export_cmd = app.add_subcommand("export-boundary", "Write f sampled on |z| = r as CSV");
  export_args.source.add_to(export_cmd);
  export_cmd->add_option("--r", export_args.r, "Circle radius");
  export_cmd->add_option("--n", export_args.n, "Number of samples");
  export_cmd->add_option("-o,--output", export_args.out, "Output path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*shear_cmd) return run_shear(shear_args);
    if (*radius_cmd) return run_radius(radius_args);
    if (*verify_cmd) return run_verify(verify_args);
    if (*bounds_cmd) return run_bounds(bounds_args);
    if (*area_cmd) return run_area(area_args);
    if (*export_cmd) return run_export(export_args);
  } catch (const hkoebe::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
