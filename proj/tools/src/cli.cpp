#include "arkimex/cli.hpp"

#include "arkimex/catalog.hpp"
#include "arkimex/certify.hpp"
#include "arkimex/coefficient_file.hpp"
#include "arkimex/convergence.hpp"
#include "arkimex/energy.hpp"
#include "arkimex/errors.hpp"
#include "arkimex/models.hpp"
#include "arkimex/report.hpp"
#include "arkimex/run_config.hpp"
#include "arkimex/stability.hpp"
#include "arkimex/stability_scan.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace arkimex {

namespace fs = std::filesystem;

namespace {

/// Raised for output failures; mapped to kExitIo.
struct IoError : Error {
  using Error::Error;
};

struct Flags {
  std::string config;
  std::string methods;
  std::string problem;
  std::string out;
  std::string ladder;
  std::vector<double> scale;
  std::optional<long> seed;
  std::optional<double> t_final;
  std::string coefficients;
  bool all = false;
  bool no_empirical = false;
  std::optional<int> samples;
  std::optional<int> substeps;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<double> parse_ladder(const std::string& s) {
  std::vector<double> out;
  for (const auto& item : split_list(s)) {
    try {
      out.push_back(parse_decimal(item));
    } catch (const std::exception&) {
      throw ConfigError("--ladder: '" + item + "' is not a number");
    }
    if (!(out.back() > 0.0)) throw ConfigError("--ladder entries must be positive");
  }
  if (out.empty()) throw ConfigError("--ladder is empty");
  return out;
}

/// Everything a subcommand needs, resolved before any output is written.
struct Job {
  RunConfig cfg;
  std::vector<ArkMethod> catalog;
  std::vector<const ArkMethod*> methods;
  fs::path out_dir;
};

Job resolve(const Flags& f, std::ostream& err, bool all_by_default) {
  Job job;
  if (!f.config.empty()) {
    if (!fs::exists(f.config)) throw ConfigError("config file not found: " + f.config);
    job.cfg = load_run_config(f.config);
  }
  RunConfig& cfg = job.cfg;
  if (!f.problem.empty()) {
    if (f.problem != cfg.problem.type) cfg.problem.params.clear();
    cfg.problem.type = f.problem;
  }
  if (f.seed && cfg.problem.type == "oscillator_ensemble") cfg.problem.params["seed"] = static_cast<double>(*f.seed);
  if (!f.ladder.empty()) cfg.ladder = parse_ladder(f.ladder);
  if (!f.scale.empty()) {
    cfg.scales = {1.0};
    for (double x : f.scale) {
      if (!(x > 0.0)) throw ConfigError("--scale must be positive");
      if (x != 1.0) cfg.scales.push_back(x);
    }
  }
  if (f.t_final) {
    if (!(*f.t_final > 0.0)) throw ConfigError("--t-final must be positive");
    cfg.t_final = *f.t_final;
  }
  if (f.samples) cfg.boundary_samples = *f.samples;
  if (f.substeps) cfg.substeps = *f.substeps;
  if (!f.out.empty()) cfg.output = f.out;
  job.out_dir = cfg.output;

  job.catalog = f.coefficients.empty() ? builtin_catalog() : load_coefficient_file(f.coefficients);

  std::vector<std::string> names;
  if (!f.methods.empty() && f.methods != "all") names = split_list(f.methods);
  else if (f.methods.empty() && !cfg.methods.empty()) names = cfg.methods;
  const bool everything = f.all || f.methods == "all" || (names.empty() && all_by_default);
  if (everything) {
    for (const auto& m : job.catalog) job.methods.push_back(&m);
  } else {
    for (const auto& n : names) {
      if (const ArkMethod* m = find_method(job.catalog, n)) job.methods.push_back(m);
      else err << "warning: method '" << n << "' is not in the catalog; skipped\n";
    }
  }
  if (job.methods.empty()) throw ConfigError("no methods selected");
  make_problem(cfg.problem);  // validates the problem parameters
  return job;
}

void write_file(const fs::path& path, const std::string& content) {
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  if (ec) throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot write " + path.string());
  os << content;
  if (!os) throw IoError("write failed: " + path.string());
}

template <class... Args>
std::string csv(const Args&... args) {
  std::ostringstream ss;
  write_csv(ss, args...);
  return ss.str();
}

int cmd_list_methods(const Flags& f, std::ostream& out, std::ostream& err) {
  const Job job = resolve(f, err, true);
  out << std::left << std::setw(10) << "method" << std::right << std::setw(7) << "order" << std::setw(6) << "f^I"
      << std::setw(6) << "f^E" << "\n";
  for (const ArkMethod* m : job.methods) {
    out << std::left << std::setw(10) << (m->name + (m->pure_explicit ? "*" : "")) << std::right << std::setw(7)
        << m->declared_order << std::setw(6) << m->declared_implicit_solves << std::setw(6)
        << m->declared_explicit_evals << "\n";
  }
  return kExitOk;
}

int cmd_certify(const Flags& f, std::ostream& out, std::ostream& err) {
  const Job job = resolve(f, err, true);
  CertifyOptions opt;
  opt.empirical = !f.no_empirical;
  std::vector<PropertyReport> reports;
  std::vector<Comparison> comparisons;
  bool mismatch = false;
  out << std::left << std::setw(10) << "method" << std::right << " order  stage  A L B  SA(I/E) b c  max_exp  status\n";
  for (const ArkMethod* m : job.methods) {
    reports.push_back(certify(*m, opt));
    const PropertyReport& r = reports.back();
    std::string status = "no declared row";
    Comparison cmp;
    if (m->declared_properties) {
      cmp = compare(r, *m->declared_properties);
      status = cmp.mismatches.empty() ? "match" : "MISMATCH";
      if (cmp.b_indeterminate) status += " (B indeterminate)";
      mismatch = mismatch || !cmp.mismatches.empty();
    }
    comparisons.push_back(cmp);
    auto b = [](bool v) { return v ? "y" : "n"; };
    out << std::left << std::setw(10) << r.name << std::right << "  " << r.order[0] << r.order[1] << r.order[2]
        << "    " << r.stage_order[0] << r.stage_order[1] << r.stage_order[2] << "   " << b(r.a_stable) << ' '
        << b(r.l_stable) << ' ' << b(r.b_stable) << "  " << b(r.stiffly_accurate_implicit) << '/'
        << b(r.stiffly_accurate_explicit) << "      " << b(r.shared_b) << ' ' << b(r.shared_c) << "  "
        << std::fixed << std::setprecision(4) << std::setw(7) << r.max_explicit_imag << std::defaultfloat << "  "
        << status << "\n";
    for (const auto& mm : cmp.mismatches)
      err << r.name << ": " << mm.field << " expected " << mm.expected << ", got " << mm.actual << "\n";
  }
  write_file(job.out_dir / "certification.csv", csv(reports));
  write_file(job.out_dir / "certification.json", to_json(reports, comparisons));
  return mismatch ? kExitMismatch : kExitOk;
}

int cmd_boundary(const Flags& f, std::ostream& out, std::ostream& err) {
  const Job job = resolve(f, err, true);
  std::ostringstream ss;
  bool first = true;
  for (const ArkMethod* m : job.methods) {
    const StabilityBoundary b = stability_boundary(m->explicit_tableau, job.cfg.boundary_samples);
    const auto implicit = m->pure_explicit ? std::vector<ImagAxisSample>{}
                                           : imag_axis_modulus(m->implicit_tableau, job.cfg.boundary_samples);
    write_csv(ss, m->name, b, implicit, first);
    first = false;
    if (!b.unconverged_angles.empty())
      err << m->name << ": " << b.unconverged_angles.size() << " boundary angles did not converge\n";
    out << m->name << ": " << b.points.size() << " boundary points\n";
  }
  write_file(job.out_dir / "boundary.csv", ss.str());
  return kExitOk;
}

int cmd_converge(const Flags& f, std::ostream& out, std::ostream& err) {
  const Job job = resolve(f, err, true);
  const RunConfig& cfg = job.cfg;
  if (cfg.ladder.empty()) throw ConfigError("converge needs a ladder (config 'ladder' or --ladder)");
  const auto problem = make_problem(cfg.problem);
  const Reference ref = compute_reference(*problem, cfg.reference, cfg.t_final, cfg.newton);
  ConvergenceOptions opt;
  opt.ladder = cfg.ladder;
  opt.t_final = cfg.t_final;
  opt.newton = cfg.newton;
  std::vector<ConvergenceReport> reports;
  bool failed = false;
  for (const ArkMethod* m : job.methods) {
    reports.push_back(run_convergence(*m, *problem, ref, opt));
    const auto& r = reports.back();
    for (const auto& p : r.points) failed = failed || p.status != RunStatus::completed;
    out << m->name << ": ";
    if (r.fit) out << "beta = " << r.fit->beta << ", alpha = " << r.fit->alpha << "\n";
    else out << "fit unavailable (fewer than two errors above the floor " << r.floor << ")\n";
  }
  write_file(job.out_dir / "convergence.csv", csv(reports));
  write_file(job.out_dir / "convergence.json", to_json(reports));
  return failed ? kExitNumerical : kExitOk;
}

std::vector<double> default_scan_ladder(const Job& job) {
  if (job.cfg.problem.type != "oscillator_ensemble")
    throw ConfigError("scan needs a ladder for problem '" + job.cfg.problem.type + "'");
  const auto p = make_problem(job.cfg.problem);
  const auto& ens = dynamic_cast<const OscillatorEnsemble&>(*p);
  double fastest = 0.0;
  for (std::size_t k = 0; k < ens.params().oscillators; ++k) fastest = std::max(fastest, ens.explicit_frequency(k));
  double best = 0.0;
  for (const ArkMethod* m : job.methods) best = std::max(best, max_imag_stable_step(m->explicit_tableau));
  if (fastest <= 0.0 || best <= 0.0) throw ConfigError("scan needs a ladder: no explicit stability limit to aim at");
  return rescale_ladder(default_ladder_shape(), 1.1 * best / fastest);
}

int cmd_scan(const Flags& f, std::ostream& out, std::ostream& err) {
  const Job job = resolve(f, err, true);
  const RunConfig& cfg = job.cfg;
  const std::vector<double> ladder = cfg.ladder.empty() ? default_scan_ladder(job) : cfg.ladder;
  const auto problem = make_problem(cfg.problem);
  ScanOptions opt;
  opt.t_final = cfg.t_final;
  opt.newton = cfg.newton;
  opt.accuracy_threshold = cfg.accuracy_threshold;
  if (opt.accuracy_threshold) {
    const Reference ref = compute_reference(*problem, cfg.reference, cfg.t_final, cfg.newton);
    opt.reference = ref.state;
  }
  const ProblemFamily family = cfg.scales.empty() ? ProblemFamily{} : make_family(cfg.problem);
  std::vector<ScanReport> reports;
  std::ostringstream scaling;
  bool first = true;
  for (const ArkMethod* m : job.methods) {
    reports.push_back(scan_max_dt(*m, *problem, ladder, opt));
    const auto& r = reports.back();
    out << m->name << ": dt_max = ";
    if (r.dt_max) out << *r.dt_max;
    else out << "none";
    out << "\n";
    if (family) {
      const auto rows = scan_scaling_sensitivity(*m, family, ladder, opt, cfg.scales, cfg.scale_time);
      write_csv(scaling, m->name, rows, first);
      first = false;
    }
  }
  write_file(job.out_dir / "scan.csv", csv(reports));
  write_file(job.out_dir / "scan.json", to_json(reports));
  if (family) write_file(job.out_dir / "scaling.csv", scaling.str());
  return kExitOk;
}

int cmd_energy(const Flags& f, std::ostream& out, std::ostream& err) {
  const Job job = resolve(f, err, true);
  const RunConfig& cfg = job.cfg;
  if (cfg.ladder.empty()) throw ConfigError("energy needs at least one dt (config 'ladder' or --ladder)");
  const auto problem = make_problem(cfg.problem);
  PostStep post;
  if (cfg.substeps > 0) {
    if (const auto* hv = dynamic_cast<const HyperviscousOscillator*>(problem.get())) post = hv->post_step(cfg.substeps);
  }
  std::vector<EnergyReport> reports;
  bool failed = false;
  for (const ArkMethod* m : job.methods) {
    for (double dt : cfg.ladder) {
      reports.push_back(run_energy(*m, *problem, dt, cfg.t_final, post, cfg.newton, cfg.observe_every));
      const auto& r = reports.back();
      failed = failed || r.status != RunStatus::completed;
      out << m->name << " dt=" << dt << ": max |drift| = " << r.max_abs_drift << " (" << to_string(r.status) << ")\n";
    }
  }
  write_file(job.out_dir / "energy.csv", csv(reports));
  write_file(job.out_dir / "energy.json", to_json(reports));
  return failed ? kExitNumerical : kExitOk;
}

int cmd_floor_study(const Flags& f, std::ostream& out, std::ostream& err) {
  Flags g = f;
  if (g.problem.empty()) g.problem = "hyperviscous_oscillator";
  const Job job = resolve(g, err, true);
  const RunConfig& cfg = job.cfg;
  if (cfg.problem.type != "hyperviscous_oscillator")
    throw ConfigError("floor-study runs on problem 'hyperviscous_oscillator'");
  if (cfg.ladder.empty()) throw ConfigError("floor-study needs a ladder (config 'ladder' or --ladder)");
  if (cfg.substeps < 1) throw ConfigError("floor-study needs substeps >= 1");
  const auto problem = make_problem(cfg.problem);
  const auto& hv = dynamic_cast<const HyperviscousOscillator&>(*problem);
  ConvergenceOptions opt;
  opt.ladder = cfg.ladder;
  opt.t_final = cfg.t_final;
  opt.newton = cfg.newton;
  std::vector<ConvergenceReport> reports;
  for (const ArkMethod* m : job.methods) {
    for (int k : {0, cfg.substeps}) {
      reports.push_back(run_split_floor_study(*m, hv, k, opt));
      const auto& r = reports.back();
      out << m->name << " K=" << k << ": ";
      if (r.fit) out << "beta = " << r.fit->beta << "\n";
      else out << "fit unavailable\n";
    }
  }
  write_file(job.out_dir / "floor_study.csv", csv(reports));
  write_file(job.out_dir / "floor_study.json", to_json(reports));
  return kExitOk;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certify and benchmark IMEX additive Runge-Kutta methods", "arkimex"};
  app.require_subcommand(1);
  Flags f;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", f.config, "JSON run configuration");
    sub->add_option("--methods", f.methods, "comma-separated method names, or 'all'");
    sub->add_option("--coefficients", f.coefficients, "coefficient file to use instead of the built-in catalog");
    sub->add_option("--problem", f.problem, "problem id");
    sub->add_option("--out", f.out, "output directory");
    sub->add_option("--ladder", f.ladder, "comma-separated dt values");
    sub->add_option("--t-final", f.t_final, "final time");
    sub->add_option("--scale", f.scale, "operator scale factor(s) for the scaling study")->delimiter(',');
    sub->add_option("--seed", f.seed, "seed for randomized problem data");
  };

  auto* list = app.add_subcommand("list-methods", "list catalog methods with order and evaluation counts");
  common(list);
  auto* cert = app.add_subcommand("certify", "compute method properties and compare with the declared rows");
  common(cert);
  cert->add_flag("--all", f.all, "certify every catalog method");
  cert->add_flag("--no-empirical", f.no_empirical, "skip the convergence runs for orders above 3");
  auto* bnd = app.add_subcommand("boundary", "sample stability boundaries");
  common(bnd);
  bnd->add_option("--samples", f.samples, "number of samples")->check(CLI::PositiveNumber);
  auto* conv = app.add_subcommand("converge", "convergence study with order fit");
  common(conv);
  auto* scan = app.add_subcommand("scan", "largest stable dt over a ladder");
  common(scan);
  auto* energy = app.add_subcommand("energy", "relative energy drift");
  common(energy);
  energy->add_option("--substeps", f.substeps, "hyperviscosity substeps K (0 disables)")->check(CLI::NonNegativeNumber);
  auto* floor = app.add_subcommand("floor-study", "split hyperviscosity convergence floor, K = 0 and K = substeps");
  common(floor);
  floor->add_option("--substeps", f.substeps, "hyperviscosity substeps K")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (list->parsed()) return cmd_list_methods(f, out, err);
    if (cert->parsed()) return cmd_certify(f, out, err);
    if (bnd->parsed()) return cmd_boundary(f, out, err);
    if (conv->parsed()) return cmd_converge(f, out, err);
    if (scan->parsed()) return cmd_scan(f, out, err);
    if (energy->parsed()) return cmd_energy(f, out, err);
    if (floor->parsed()) return cmd_floor_study(f, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ParseError& e) {
    err << "coefficient file error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InvariantError& e) {
    err << "coefficient file error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitUsage;
}

}  // namespace arkimex
