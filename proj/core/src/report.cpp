#include "arkimex/report.hpp"

#include <json.hpp>

#include <iomanip>

namespace arkimex {

using nlohmann::json;

namespace {

void header(std::ostream& os, const char* kind) {
  os << "# schema_version=" << kReportSchemaVersion << " kind=" << kind << "\n";
}

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string dump(const char* kind, json body) {
  json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["kind"] = kind;
  doc["results"] = std::move(body);
  return doc.dump(1) + "\n";
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<PropertyReport>& reports) {
  header(os, "certification");
  os << "method,stages,f_implicit,f_explicit,order_E,order_I,order_A,stage_order_E,stage_order_I,stage_order_A,"
        "A_stable,L_stable,B_stable,SA_implicit,SA_explicit,shared_b,shared_c,max_explicit_imag,"
        "max_order3_residual\n";
  os << std::setprecision(6);
  for (const auto& r : reports) {
    os << r.name << ',' << r.stages << ',' << r.implicit_solves << ',' << r.explicit_evals;
    for (int v : r.order) os << ',' << v;
    for (int v : r.stage_order) os << ',' << v;
    os << ',' << r.a_stable << ',' << r.l_stable << ',' << r.b_stable << ',' << r.stiffly_accurate_implicit << ','
       << r.stiffly_accurate_explicit << ',' << r.shared_b << ',' << r.shared_c << ',' << std::fixed
       << std::setprecision(4) << r.max_explicit_imag << std::defaultfloat << std::setprecision(6) << ','
       << r.max_order3_residual << "\n";
  }
}

void write_csv(std::ostream& os, const std::vector<ConvergenceReport>& reports) {
  header(os, "convergence");
  os << "method,problem,dt,steps,status,max_rel_error,floor,fit_alpha,fit_beta\n";
  os << std::setprecision(10);
  for (const auto& r : reports)
    for (const auto& p : r.points) {
      os << r.method << ',' << r.problem << ',' << p.dt << ',' << p.steps << ',' << to_string(p.status) << ','
         << p.error << ',' << r.floor << ',';
      if (r.fit) os << r.fit->alpha << ',' << r.fit->beta;
      else os << ',';
      os << "\n";
    }
}

void write_csv(std::ostream& os, const std::vector<ScanReport>& reports) {
  header(os, "scan");
  os << "method,problem,dt,status,passed,error,max_newton_iterations,dt_max,f_implicit,f_explicit,"
        "dt_per_implicit_solve,dt_per_explicit_eval\n";
  os << std::setprecision(10);
  for (const auto& r : reports)
    for (const auto& e : r.entries) {
      os << r.method << ',' << r.problem << ',' << e.dt << ',' << to_string(e.status) << ',' << e.passed << ',';
      if (e.error) os << *e.error;
      os << ',' << e.max_newton_iterations << ',';
      if (r.dt_max) os << *r.dt_max;
      os << ',' << r.implicit_solves << ',' << r.explicit_evals << ',';
      if (r.dt_per_implicit_solve) os << *r.dt_per_implicit_solve;
      os << ',';
      if (r.dt_per_explicit_eval) os << *r.dt_per_explicit_eval;
      os << "\n";
    }
}

void write_csv(std::ostream& os, const std::vector<EnergyReport>& reports) {
  header(os, "energy");
  os << "method,problem,dt,post_step,status,t,drift\n";
  os << std::setprecision(10);
  for (const auto& r : reports)
    for (const auto& s : r.samples)
      os << r.method << ',' << r.problem << ',' << r.dt << ',' << r.post_step << ',' << to_string(r.status) << ','
         << s.t << ',' << s.drift << "\n";
}

void write_csv(std::ostream& os, const std::string& method, const std::vector<ScalingRow>& rows,
               bool with_header) {
  if (with_header) {
    header(os, "scaling");
    os << "method,scale,dt_max,ratio\n";
  }
  os << std::setprecision(10);
  for (const auto& r : rows) {
    os << method << ',' << r.scale << ',';
    if (r.dt_max) os << *r.dt_max;
    os << ',';
    if (r.ratio) os << *r.ratio;
    os << "\n";
  }
}

void write_csv(std::ostream& os, const std::string& method, const StabilityBoundary& b,
               const std::vector<ImagAxisSample>& implicit_samples, bool with_header) {
  if (with_header) {
    header(os, "boundary");
    os << "method,tableau,theta,y,re,im,modulus\n";
  }
  os << std::setprecision(12);
  for (const auto& p : b.points)
    os << method << ",explicit," << p.theta << ",," << p.z.real() << ',' << p.z.imag() << ",\n";
  for (const auto& s : implicit_samples)
    os << method << ",implicit,," << s.y << ",0," << s.y << ',' << s.modulus << "\n";
}

std::string to_json(const std::vector<PropertyReport>& reports, const std::vector<Comparison>& comparisons) {
  json arr = json::array();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    json j = {{"method", r.name},
              {"stages", r.stages},
              {"pure_explicit", r.pure_explicit},
              {"implicit_solves", r.implicit_solves},
              {"explicit_evals", r.explicit_evals},
              {"order", r.order},
              {"algebraic_order", r.algebraic_order},
              {"empirical_slope", {opt(r.empirical_slope[0]), opt(r.empirical_slope[1]), opt(r.empirical_slope[2])}},
              {"max_order3_residual", r.max_order3_residual},
              {"stage_order", r.stage_order},
              {"a_stable", r.a_stable},
              {"l_stable", r.l_stable},
              {"b_stable", r.b_stable},
              {"max_modulus_imag_axis", r.max_modulus_imag_axis},
              {"algebraic_min_eigenvalue", r.algebraic_min_eigenvalue},
              {"stiffly_accurate_implicit", r.stiffly_accurate_implicit},
              {"stiffly_accurate_explicit", r.stiffly_accurate_explicit},
              {"shared_b", r.shared_b},
              {"shared_c", r.shared_c},
              {"max_explicit_imag", r.max_explicit_imag}};
    if (i < comparisons.size()) {
      json mm = json::array();
      for (const auto& m : comparisons[i].mismatches)
        mm.push_back({{"field", m.field}, {"expected", m.expected}, {"actual", m.actual}});
      j["mismatches"] = mm;
      j["b_indeterminate"] = comparisons[i].b_indeterminate;
    }
    arr.push_back(std::move(j));
  }
  return dump("certification", std::move(arr));
}

std::string to_json(const std::vector<ConvergenceReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) {
    json pts = json::array();
    for (const auto& p : r.points)
      pts.push_back({{"dt", p.dt}, {"steps", p.steps}, {"status", to_string(p.status)},
                     {"error", std::isfinite(p.error) ? json(p.error) : json(nullptr)}});
    json fit = nullptr;
    if (r.fit) fit = {{"alpha", r.fit->alpha}, {"beta", r.fit->beta}, {"points", {r.fit->first, r.fit->second}}};
    arr.push_back({{"method", r.method}, {"problem", r.problem}, {"floor", r.floor}, {"points", pts}, {"fit", fit}});
  }
  return dump("convergence", std::move(arr));
}

std::string to_json(const std::vector<ScanReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) {
    json entries = json::array();
    for (const auto& e : r.entries)
      entries.push_back({{"dt", e.dt}, {"status", to_string(e.status)}, {"passed", e.passed},
                         {"error", opt(e.error)}, {"cause", e.cause},
                         {"max_newton_iterations", e.max_newton_iterations}});
    arr.push_back({{"method", r.method}, {"problem", r.problem}, {"dt_max", opt(r.dt_max)},
                   {"implicit_solves", r.implicit_solves}, {"explicit_evals", r.explicit_evals},
                   {"dt_per_implicit_solve", opt(r.dt_per_implicit_solve)},
                   {"dt_per_explicit_eval", opt(r.dt_per_explicit_eval)}, {"entries", entries}});
  }
  return dump("scan", std::move(arr));
}

std::string to_json(const std::vector<EnergyReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) {
    json samples = json::array();
    for (const auto& s : r.samples) samples.push_back({s.t, s.drift});
    arr.push_back({{"method", r.method}, {"problem", r.problem}, {"dt", r.dt}, {"post_step", r.post_step},
                   {"status", to_string(r.status)}, {"max_abs_drift", r.max_abs_drift},
                   {"final_drift", r.final_drift}, {"samples", samples}});
  }
  return dump("energy", std::move(arr));
}

}  // namespace arkimex
