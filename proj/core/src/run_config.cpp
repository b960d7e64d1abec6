#include "arkimex/run_config.hpp"

#include "arkimex/errors.hpp"
#include "arkimex/models.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace arkimex {

using nlohmann::json;

namespace {

class Params {
 public:
  Params(const ProblemSpec& spec, std::set<std::string> allowed) : spec_(spec) {
    for (const auto& [k, _] : spec.params)
      if (!allowed.count(k)) throw ConfigError("problem " + spec.type + ": unknown parameter '" + k + "'");
  }
  double get(const std::string& key, double fallback) const {
    auto it = spec_.params.find(key);
    return it == spec_.params.end() ? fallback : it->second;
  }
  std::size_t count(const std::string& key, std::size_t fallback) const {
    const double v = get(key, static_cast<double>(fallback));
    if (v < 1 || v != static_cast<double>(static_cast<std::size_t>(v)))
      throw ConfigError("problem " + spec_.type + ": '" + key + "' must be a positive integer");
    return static_cast<std::size_t>(v);
  }

 private:
  const ProblemSpec& spec_;
};

}  // namespace

std::vector<std::string> problem_types() {
  return {"split_oscillator", "nonlinear_rotor", "oscillator_ensemble", "acoustic_column", "hyperviscous_oscillator"};
}

std::unique_ptr<SplitProblem> make_problem(const ProblemSpec& spec) {
  if (spec.type == "split_oscillator") {
    Params p(spec, {"omega_explicit", "omega_implicit", "x0", "y0"});
    return std::make_unique<SplitOscillator>(p.get("omega_explicit", 1.0), p.get("omega_implicit", 10.0),
                                             std::array<double, 2>{p.get("x0", 1.0), p.get("y0", 0.0)});
  }
  if (spec.type == "nonlinear_rotor") {
    Params p(spec, {"omega_explicit", "omega_implicit", "x0", "y0"});
    return std::make_unique<NonlinearRotor>(p.get("omega_explicit", 1.0), p.get("omega_implicit", 1.0),
                                            std::array<double, 2>{p.get("x0", 0.8), p.get("y0", 0.6)});
  }
  if (spec.type == "oscillator_ensemble") {
    Params p(spec, {"oscillators", "omega_max", "implicit_share", "explicit_scale", "seed"});
    OscillatorEnsemble::Params e;
    e.oscillators = p.count("oscillators", e.oscillators);
    e.omega_max = p.get("omega_max", e.omega_max);
    e.implicit_share = p.get("implicit_share", e.implicit_share);
    e.explicit_scale = p.get("explicit_scale", e.explicit_scale);
    e.seed = static_cast<std::uint64_t>(p.get("seed", 0.0));
    return std::make_unique<OscillatorEnsemble>(e);
  }
  if (spec.type == "acoustic_column") {
    Params p(spec, {"levels", "dz", "sound_speed", "gravity", "advection", "kappa", "mode", "amplitude"});
    AcousticColumn::Params c;
    c.levels = p.count("levels", c.levels);
    c.dz = p.get("dz", c.dz);
    c.sound_speed = p.get("sound_speed", c.sound_speed);
    c.gravity = p.get("gravity", c.gravity);
    c.advection = p.get("advection", c.advection);
    c.kappa = p.get("kappa", c.kappa);
    try {
      if (spec.params.count("mode")) {
        const AcousticColumn base(c);
        return std::make_unique<AcousticColumn>(
            c, base.eigenmode(static_cast<std::size_t>(p.get("mode", 1.0)), p.get("amplitude", 10.0)));
      }
      State q0 = AcousticColumn(c).initial_state();
      const double scale = p.get("amplitude", 10.0) / 10.0;
      for (std::size_t j = 0; j < q0.size(); j += 2) q0[j] *= scale;
      return std::make_unique<AcousticColumn>(c, std::move(q0));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("acoustic_column: ") + e.what());
    }
  }
  if (spec.type == "hyperviscous_oscillator") {
    Params p(spec, {"omega_explicit", "omega_implicit", "x0", "y0", "points", "dx", "nu"});
    HyperviscousOscillator::Params r;
    r.omega_explicit = p.get("omega_explicit", r.omega_explicit);
    r.omega_implicit = p.get("omega_implicit", r.omega_implicit);
    r.q0 = {p.get("x0", r.q0[0]), p.get("y0", r.q0[1])};
    r.points = p.count("points", r.points);
    r.dx = p.get("dx", r.dx);
    r.nu = p.get("nu", r.nu);
    try {
      return std::make_unique<HyperviscousOscillator>(r);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("hyperviscous_oscillator: ") + e.what());
    }
  }
  throw ConfigError("unknown problem type '" + spec.type + "'");
}

ProblemFamily make_family(const ProblemSpec& spec) {
  make_problem(spec);  // validate eagerly
  std::string key;
  if (spec.type == "oscillator_ensemble") key = "explicit_scale";
  else if (spec.type == "acoustic_column") key = "advection";
  else if (spec.type == "hyperviscous_oscillator" || spec.type == "split_oscillator" || spec.type == "nonlinear_rotor")
    key = "omega_explicit";
  const double base = [&] {
    auto it = spec.params.find(key);
    if (it != spec.params.end()) return it->second;
    if (key == "advection") return AcousticColumn::Params{}.advection;
    return 1.0;
  }();
  return [spec, key, base](double X) {
    ProblemSpec s = spec;
    s.params[key] = base * X;
    return make_problem(s);
  };
}

namespace {

std::vector<double> numbers(const json& v, const std::string& key) {
  if (!v.is_array()) throw ConfigError("config key '" + key + "' must be an array of numbers");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) throw ConfigError("config key '" + key + "' must be an array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

double number(const json& v, const std::string& key) {
  if (!v.is_number()) throw ConfigError("config key '" + key + "' must be a number");
  return v.get<double>();
}

std::string text(const json& v, const std::string& key) {
  if (!v.is_string()) throw ConfigError("config key '" + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

RunConfig parse_run_config(std::string_view source) {
  json doc;
  try {
    doc = json::parse(source.begin(), source.end());
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  RunConfig cfg;
  for (const auto& [key, v] : doc.items()) {
    if (key == "schema_version") {
      if (!v.is_number_integer() || v.get<int>() != kConfigSchemaVersion)
        throw ConfigError("unsupported config schema_version " + v.dump());
    } else if (key == "methods") {
      if (v.is_string() && v.get<std::string>() == "all") continue;
      if (!v.is_array()) throw ConfigError("config key 'methods' must be \"all\" or an array of names");
      for (const auto& m : v) cfg.methods.push_back(text(m, "methods[]"));
    } else if (key == "problem") {
      if (!v.is_object()) throw ConfigError("config key 'problem' must be an object");
      for (const auto& [pk, pv] : v.items()) {
        if (pk == "type") cfg.problem.type = text(pv, "problem.type");
        else cfg.problem.params[pk] = number(pv, "problem." + pk);
      }
    } else if (key == "t_final") {
      cfg.t_final = number(v, key);
      if (!(cfg.t_final > 0.0)) throw ConfigError("config key 't_final' must be positive");
    } else if (key == "ladder") {
      cfg.ladder = numbers(v, key);
      for (double dt : cfg.ladder)
        if (!(dt > 0.0)) throw ConfigError("config key 'ladder' entries must be positive");
    } else if (key == "reference") {
      if (!v.is_object()) throw ConfigError("config key 'reference' must be an object");
      for (const auto& [rk, rv] : v.items()) {
        if (rk == "type") {
          const std::string t = text(rv, "reference.type");
          if (t == "exact") cfg.reference.kind = ReferenceSpec::Kind::exact;
          else if (t == "fine") cfg.reference.kind = ReferenceSpec::Kind::fine;
          else throw ConfigError("config key 'reference.type' must be \"exact\" or \"fine\"");
        } else if (rk == "method") {
          cfg.reference.method = text(rv, "reference.method");
        } else if (rk == "dt") {
          cfg.reference.dt = number(rv, "reference.dt");
        } else {
          throw ConfigError("unknown config key 'reference." + rk + "'");
        }
      }
    } else if (key == "accuracy_threshold") {
      if (!v.is_null()) cfg.accuracy_threshold = number(v, key);
    } else if (key == "scales") {
      cfg.scales = numbers(v, key);
    } else if (key == "scale_time") {
      if (!v.is_boolean()) throw ConfigError("config key 'scale_time' must be true or false");
      cfg.scale_time = v.get<bool>();
    } else if (key == "substeps") {
      if (!v.is_number_integer() || v.get<int>() < 0)
        throw ConfigError("config key 'substeps' must be a non-negative integer");
      cfg.substeps = v.get<int>();
    } else if (key == "observe_every") {
      if (!v.is_number_integer() || v.get<int>() < 1)
        throw ConfigError("config key 'observe_every' must be a positive integer");
      cfg.observe_every = v.get<std::size_t>();
    } else if (key == "boundary_samples") {
      if (!v.is_number_integer() || v.get<int>() < 1)
        throw ConfigError("config key 'boundary_samples' must be a positive integer");
      cfg.boundary_samples = v.get<int>();
    } else if (key == "newton") {
      if (!v.is_object()) throw ConfigError("config key 'newton' must be an object");
      for (const auto& [nk, nv] : v.items()) {
        if (nk == "tolerance") cfg.newton.tolerance = number(nv, "newton.tolerance");
        else if (nk == "relative_tolerance") cfg.newton.relative_tolerance = number(nv, "newton.relative_tolerance");
        else if (nk == "max_iterations") {
          if (!nv.is_number_integer() || nv.get<int>() < 1)
            throw ConfigError("config key 'newton.max_iterations' must be a positive integer");
          cfg.newton.max_iterations = nv.get<int>();
        } else if (nk == "initial_guess") {
          const std::string g = text(nv, "newton.initial_guess");
          if (g == "previous_step") cfg.newton.initial_guess = InitialGuess::previous_step;
          else if (g == "predicted") cfg.newton.initial_guess = InitialGuess::predicted;
          else throw ConfigError("config key 'newton.initial_guess' must be \"previous_step\" or \"predicted\"");
        } else {
          throw ConfigError("unknown config key 'newton." + nk + "'");
        }
      }
    } else if (key == "output") {
      cfg.output = text(v, key);
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str());
}

}  // namespace arkimex
