// isocheck: verification runs, matrix/profile dumps and geometry pipelines.
// Exit codes: 0 pass, 1 verification failure or geometric breakdown, 2 usage.

#include <isoparam/errors.hpp>
#include <isoparam/exact/serialize.hpp>
#include <isoparam/geometry/classify.hpp>
#include <isoparam/geometry/graph.hpp>
#include <isoparam/verify/dump.hpp>
#include <isoparam/verify/suite.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace isoparam;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

// "2..5" or "2,3,5"
std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  try {
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
      const int lo = std::stoi(text.substr(0, dots)), hi = std::stoi(text.substr(dots + 2));
      for (int v = lo; v <= hi; ++v) out.push_back(v);
      return out;
    }
    for (const auto& item : split(text, ',')) out.push_back(std::stoi(item));
  } catch (const std::exception&) {
    throw PreconditionError("cannot parse integer list: " + text);
  }
  return out;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    verify::write_atomic(out_path, text);
  }
}

struct VerifyArgs {
  std::string config_path, n_range, s_values, tau_samples, out;
  int k_max = -1;
  bool no_timings = false;
};

int cmd_verify(const VerifyArgs& a) {
  verify::RunConfig cfg;
  if (!a.config_path.empty()) {
    std::ifstream in(a.config_path);
    if (!in) throw PreconditionError("cannot read config " + a.config_path);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw PreconditionError(std::string("config is not valid JSON: ") + e.what());
    }
    cfg = verify::RunConfig::from_json(j);
  }
  if (!a.n_range.empty()) cfg.n_range = parse_int_list(a.n_range);
  if (a.k_max >= 0) cfg.k_max = a.k_max;
  if (!a.s_values.empty()) cfg.s_values = parse_int_list(a.s_values);
  if (!a.tau_samples.empty()) {
    cfg.tau_samples.clear();
    for (const auto& t : split(a.tau_samples, ',')) cfg.tau_samples.push_back(exact::parse_rational(t));
  }
  if (a.no_timings) cfg.timings = false;
  cfg.validate();

  const verify::Report rep = verify::run_verify(cfg);
  emit(a.out, rep.to_json(cfg.timings).dump(2) + "\n");
  std::cerr << "isocheck verify: " << rep.records.size() << " records, " << rep.count(Status::pass) << " pass, "
            << rep.count(Status::flagged) << " flagged, " << rep.count(Status::fail) << " fail\n";
  for (const auto& r : rep.records)
    if (!r.check.ok()) std::cerr << "  FAIL " << r.check.claim << "\n";
  return rep.ok() ? 0 : kExitFail;
}

verify::DumpFormat parse_format(const std::string& f) {
  if (f == "json") return verify::DumpFormat::json;
  if (f == "csv") return verify::DumpFormat::csv;
  throw PreconditionError("unknown format " + f);
}

std::optional<geometry::FamilyKind> parse_kind(const std::string& k) {
  using geometry::FamilyKind;
  if (k.empty()) return std::nullopt;
  for (auto kind : {FamilyKind::horosphere, FamilyKind::geodesic_sphere, FamilyKind::equidistant,
                    FamilyKind::totally_geodesic, FamilyKind::sphere_in_sn, FamilyKind::clifford, FamilyKind::custom})
    if (k == geometry::to_string(kind)) return kind;
  throw PreconditionError("unknown level family kind " + k);
}

struct GeometryArgs {
  std::string family = "horosphere", levels, spec = "cylinder-sphere", out, format = "json";
  int n = 3, eps = -1, samples = 21;
  double H = 1.0, y0 = 0.0, s0 = 0.0, s1 = 2.0, theta = 0.0, r = 0.5, base_s = 1.0;
  std::optional<double> rho, t0;
};

int cmd_ode(const GeometryArgs& a) {
  const geometry::ParallelFamily fam = geometry::family_by_id(a.n, a.family);
  const geometry::GraphProfile p = geometry::ode_solve(fam, a.H, a.y0, a.s0, a.s1);
  if (parse_format(a.format) == verify::DumpFormat::csv) {
    emit(a.out, geometry::profile_csv(p, a.samples));
  } else {
    nlohmann::json j{{"family", geometry::to_json(fam)}, {"H", a.H}, {"y0", a.y0}, {"rows", geometry::profile_table(p, a.samples)}};
    emit(a.out, j.dump(2) + "\n");
  }
  return 0;
}

int cmd_classify(const GeometryArgs& a) {
  geometry::LevelDescriptor d;
  d.level_kind = parse_kind(a.levels);
  d.family_id = a.levels;
  d.rho = a.rho;
  if (a.rho) d.H = a.H;
  d.t0 = a.t0;
  const geometry::HypersurfaceClass c = geometry::classify(a.n, a.eps, a.theta, d);
  emit(a.out, geometry::to_json(c).dump(2) + "\n");
  return 0;
}

int cmd_parallel(const GeometryArgs& a) {
  jacobi::ShapeSpec spec;
  std::optional<geometry::ParallelFamily> base;
  if (a.spec == "bowl") {
    spec = geometry::bowl_spec(a.n, a.H);
  } else {
    const std::string id = a.spec == "cylinder-sphere" ? "geodesic_sphere"
                           : a.spec.rfind("cylinder:", 0) == 0 ? a.spec.substr(9)
                                                               : throw PreconditionError("unknown spec " + a.spec);
    base = geometry::family_by_id(a.n, id);
    spec = geometry::cylinder_spec(*base, a.base_s);
  }
  std::vector<double> rs;
  const int count = std::max(2, a.samples);
  for (int i = 0; i < count; ++i) rs.push_back(a.r * i / (count - 1));
  nlohmann::json rows = jacobi::parallel_table(spec, rs);
  if (base) {
    for (std::size_t i = 0; i < rs.size(); ++i) {
      std::vector<double> k = base->principal_curvatures(a.base_s + rs[i]);
      k.push_back(0.0);
      std::sort(k.begin(), k.end());
      rows[i]["catalog"] = k;
    }
  }
  if (parse_format(a.format) == verify::DumpFormat::csv) {
    std::vector<std::string> header{"r", "D", "H"};
    for (int i = 1; i <= a.n; ++i) header.push_back("k" + std::to_string(i));
    std::string out = exact::csv_line(header) + "\n";
    for (const auto& row : rows) {
      if (row.contains("focal")) continue;
      std::vector<std::string> cells{row["r"].dump(), row["D"].dump(), row["H"].dump()};
      for (const auto& k : row["eigenvalues"]) cells.push_back(k.dump());
      out += exact::csv_line(cells) + "\n";
    }
    emit(a.out, out);
  } else {
    emit(a.out, nlohmann::json{{"spec", a.spec}, {"n", a.n}, {"rows", rows}}.dump(2) + "\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isocheck: exact and numeric checks for isoparametric hypersurfaces of Q^n x R"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "run the claim suite and write a JSON report");
  verify_cmd->add_option("--config", va.config_path, "JSON config file");
  verify_cmd->add_option("--n-range", va.n_range, "dimensions, e.g. 2..5 or 2,4");
  verify_cmd->add_option("--k-max", va.k_max, "recursion depth");
  verify_cmd->add_option("--s-values", va.s_values, "replaced-row levels, e.g. 6,8");
  verify_cmd->add_option("--tau-samples", va.tau_samples, "rationals, e.g. 1,4,9/4,-1");
  verify_cmd->add_option("--out", va.out, "report path (stdout when omitted)");
  verify_cmd->add_flag("--no-timings", va.no_timings, "write elapsed_ms as 0");

  std::vector<std::string> target;
  std::string dump_format = "json", dump_out;
  auto* dump_cmd = app.add_subcommand("dump", "serialize Z | kac | Q | system | bowl | profile");
  dump_cmd->add_option("target", target, "e.g. Z 4, Q 2 1, bowl 3 1, profile horosphere 3 1 0.5 0 2")->required();
  dump_cmd->add_option("--format", dump_format, "json or csv");
  dump_cmd->add_option("--out", dump_out, "output path (stdout when omitted)");

  GeometryArgs ga;
  auto* geo_cmd = app.add_subcommand("geometry", "graph ODE, classifier and parallel evolution");
  geo_cmd->require_subcommand(1);
  auto common = [&](CLI::App* c) {
    c->add_option("--n", ga.n, "ambient dimension");
    c->add_option("--out", ga.out, "output path (stdout when omitted)");
    c->add_option("--format", ga.format, "json or csv");
  };
  auto* ode_cmd = geo_cmd->add_subcommand("ode", "solve y' = H^s y + H over a catalog family");
  common(ode_cmd);
  ode_cmd->add_option("--family", ga.family, "catalog family id");
  ode_cmd->add_option("--H", ga.H, "mean curvature");
  ode_cmd->add_option("--y0", ga.y0, "initial rho");
  ode_cmd->add_option("--s0", ga.s0, "start of the interval");
  ode_cmd->add_option("--s1", ga.s1, "end of the interval");
  ode_cmd->add_option("--samples", ga.samples, "table rows");
  auto* cls_cmd = geo_cmd->add_subcommand("classify", "classify a constant-angle hypersurface");
  common(cls_cmd);
  cls_cmd->add_option("--eps", ga.eps, "ambient sign, +1 or -1");
  cls_cmd->add_option("--theta", ga.theta, "angle function value");
  cls_cmd->add_option("--levels", ga.levels, "level family kind");
  cls_cmd->add_option("--rho", ga.rho, "rho value");
  cls_cmd->add_option("--H", ga.H, "mean curvature (with --rho)");
  cls_cmd->add_option("--t0", ga.t0, "slice height");
  auto* par_cmd = geo_cmd->add_subcommand("parallel-evolve", "principal curvatures of parallels");
  common(par_cmd);
  par_cmd->add_option("--spec", ga.spec, "cylinder-sphere, cylinder:<family-id> or bowl");
  par_cmd->add_option("--r", ga.r, "largest parallel distance");
  par_cmd->add_option("--s0", ga.base_s, "base leaf parameter for cylinders");
  par_cmd->add_option("--H", ga.H, "bowl mean curvature");
  par_cmd->add_option("--samples", ga.samples, "table rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (verify_cmd->parsed()) return cmd_verify(va);
    if (dump_cmd->parsed()) {
      emit(dump_out, verify::dump(target, parse_format(dump_format)));
      return 0;
    }
    if (ode_cmd->parsed()) return cmd_ode(ga);
    if (cls_cmd->parsed()) return cmd_classify(ga);
    if (par_cmd->parsed()) return cmd_parallel(ga);
  } catch (const PreconditionError& e) {
    std::cerr << "isocheck: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DegenerationError& e) {
    std::cerr << "isocheck: " << e.what() << " (s = " << e.location() << ")\n";
    return kExitFail;
  } catch (const FocalPointError& e) {
    std::cerr << "isocheck: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "isocheck: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
