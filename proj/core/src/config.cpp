#include "claws/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>
#include <toml.hpp>

#include "claws/csv.hpp"
#include "claws/errors.hpp"
#include "claws/flux.hpp"
#include "claws/symbol.hpp"

namespace claws {

namespace {

using json = nlohmann::json;

struct KindName {
  ExperimentKind kind;
  const char* name;
};

constexpr KindName kKinds[] = {
    {ExperimentKind::simulate, "simulate"},
    {ExperimentKind::linear_decay, "linear-decay"},
    {ExperimentKind::heat_gap, "heat-gap"},
    {ExperimentKind::shell_rate, "shell-rate"},
    {ExperimentKind::asymptotics, "asymptotics"},
    {ExperimentKind::indices, "indices"},
    {ExperimentKind::check_inequalities, "check-inequalities"},
};

json from_toml(const toml::node& node) {
  if (const auto* t = node.as_table()) {
    json out = json::object();
    for (const auto& [k, v] : *t) out[std::string(k.str())] = from_toml(v);
    return out;
  }
  if (const auto* a = node.as_array()) {
    json out = json::array();
    for (const auto& v : *a) out.push_back(from_toml(v));
    return out;
  }
  if (const auto* v = node.as_integer()) return v->get();
  if (const auto* v = node.as_floating_point()) return v->get();
  if (const auto* v = node.as_boolean()) return v->get();
  if (const auto* v = node.as_string()) return v->get();
  throw ConfigError("unsupported TOML value type (dates are not accepted)", {"<document>"});
}

// Reads typed values out of the JSON tree, remembering every offending key
// so that a single ConfigError can name all of them.
class Reader {
 public:
  explicit Reader(const json& root) : root_(root) {}

  void section(const char* name, const std::set<std::string>& keys) {
    if (!root_.contains(name)) return;
    const json& sec = root_.at(name);
    if (!sec.is_object()) {
      fail(name, "must be a table");
      return;
    }
    for (const auto& [k, v] : sec.items()) {
      if (!keys.count(k)) fail(std::string(name) + "." + k, "is not a known key");
    }
  }

  void top_level(const std::set<std::string>& keys) {
    for (const auto& [k, v] : root_.items()) {
      if (!keys.count(k)) fail(k, "is not a known key");
    }
  }

  const json* find(const std::string& sec, const std::string& key) const {
    const json* base = &root_;
    if (!sec.empty()) {
      if (!root_.contains(sec) || !root_.at(sec).is_object()) return nullptr;
      base = &root_.at(sec);
    }
    if (!base->contains(key)) return nullptr;
    return &base->at(key);
  }

  static std::string path(const std::string& sec, const std::string& key) {
    return sec.empty() ? key : sec + "." + key;
  }

  void read(const std::string& sec, const std::string& key, double& out) {
    const json* v = find(sec, key);
    if (!v) return;
    if (v->is_number()) out = v->get<double>();
    else fail(path(sec, key), "must be a number");
  }
  void read(const std::string& sec, const std::string& key, int& out) {
    const json* v = find(sec, key);
    if (!v) return;
    if (v->is_number_integer()) out = v->get<int>();
    else fail(path(sec, key), "must be an integer");
  }
  void read(const std::string& sec, const std::string& key, std::optional<int>& out) {
    if (!find(sec, key)) return;
    int value = 0;
    read(sec, key, value);
    out = value;
  }
  void read(const std::string& sec, const std::string& key, std::uint64_t& out) {
    const json* v = find(sec, key);
    if (!v) return;
    if (v->is_number_unsigned()) out = v->get<std::uint64_t>();
    else if (v->is_number_integer() && v->get<long long>() >= 0) out = static_cast<std::uint64_t>(v->get<long long>());
    else fail(path(sec, key), "must be a nonnegative integer");
  }
  void read(const std::string& sec, const std::string& key, bool& out) {
    const json* v = find(sec, key);
    if (!v) return;
    if (v->is_boolean()) out = v->get<bool>();
    else fail(path(sec, key), "must be a boolean");
  }
  void read(const std::string& sec, const std::string& key, std::string& out) {
    const json* v = find(sec, key);
    if (!v) return;
    if (v->is_string()) out = v->get<std::string>();
    else fail(path(sec, key), "must be a string");
  }
  void read(const std::string& sec, const std::string& key, std::vector<double>& out) {
    const json* v = find(sec, key);
    if (!v) return;
    if (!v->is_array()) {
      fail(path(sec, key), "must be an array of numbers");
      return;
    }
    out.clear();
    for (const auto& e : *v) {
      if (!e.is_number()) {
        fail(path(sec, key), "must be an array of numbers");
        return;
      }
      out.push_back(e.get<double>());
    }
  }
  void read(const std::string& sec, const std::string& key, std::vector<std::vector<double>>& out) {
    const json* v = find(sec, key);
    if (!v) return;
    out.clear();
    bool ok = v->is_array();
    if (ok) {
      for (const auto& row : *v) {
        if (!row.is_array()) {
          ok = false;
          break;
        }
        std::vector<double> r;
        for (const auto& e : row) {
          if (!e.is_number()) ok = false;
          else r.push_back(e.get<double>());
        }
        out.push_back(std::move(r));
      }
    }
    if (!ok) fail(path(sec, key), "must be an array of number arrays");
  }

  void fail(const std::string& field, const std::string& why) {
    fields_.push_back(field);
    messages_.push_back(field + " " + why);
  }

  bool failed() const { return !fields_.empty(); }

  // Appends validation failures for fields the reader has not already reported.
  void absorb(const ConfigError& e) {
    const std::string prefix = "invalid configuration: ";
    std::string text = e.what();
    if (text.rfind(prefix, 0) == 0) text.erase(0, prefix.size());
    bool fresh = false;
    for (const auto& f : e.fields()) {
      if (std::find(fields_.begin(), fields_.end(), f) == fields_.end()) {
        fields_.push_back(f);
        fresh = true;
      }
    }
    if (fresh) messages_.push_back(text);
  }

  void raise() const {
    if (fields_.empty()) return;
    std::string msg = "invalid configuration: ";
    for (std::size_t i = 0; i < messages_.size(); ++i) msg += (i ? "; " : "") + messages_[i];
    throw ConfigError(msg, fields_);
  }

 private:
  const json& root_;
  std::vector<std::string> fields_;
  std::vector<std::string> messages_;
};

class Validator {
 public:
  void require(bool ok, const std::string& field, const std::string& why) {
    if (!ok) {
      fields_.push_back(field);
      messages_.push_back(field + " " + why);
    }
  }
  void raise() const {
    if (fields_.empty()) return;
    std::string msg = "invalid configuration: ";
    for (std::size_t i = 0; i < messages_.size(); ++i) msg += (i ? "; " : "") + messages_[i];
    throw ConfigError(msg, fields_);
  }

 private:
  std::vector<std::string> fields_;
  std::vector<std::string> messages_;
};

bool one_of(const std::string& v, std::initializer_list<const char*> options) {
  for (const char* o : options) {
    if (v == o) return true;
  }
  return false;
}

bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

ExperimentConfig from_json(const json& root) {
  if (!root.is_object()) throw ConfigError("configuration root must be a table", {"<document>"});
  Reader r(root);
  r.top_level({"schema", "kind", "seed", "output_dir", "workers", "model", "grid", "solver", "initial",
               "time", "fit", "profile", "asymptotics", "indices", "checks", "sweep"});
  r.section("model", {"dim", "symbol", "symbol_param", "symbol_coeffs", "s", "flux", "flux_coeffs"});
  r.section("grid", {"length", "points"});
  r.section("solver", {"dt", "final_time", "output_every", "dealias", "k_max", "functional_order", "snapshots"});
  r.section("initial", {"preset", "amplitude", "width", "max_mode"});
  r.section("time", {"start", "stop", "count"});
  r.section("fit", {"lo", "hi", "log_correction"});
  r.section("profile", {"kind", "width", "r0", "thickness", "k", "mode"});
  r.section("asymptotics", {"source", "mean_zero", "k"});
  r.section("indices", {"n", "s", "N"});
  r.section("checks", {"suite", "corpus", "k1", "k2", "norms"});
  r.section("sweep", {"parameter", "values"});

  ExperimentConfig c;
  if (!root.contains("schema")) r.fail("schema", "is required");
  r.read("", "schema", c.schema);
  std::string kind;
  if (!root.contains("kind")) r.fail("kind", "is required");
  r.read("", "kind", kind);
  if (!kind.empty()) {
    try {
      c.kind = experiment_kind_from_string(kind);
    } catch (const ConfigError&) {
      r.fail("kind", "must name an experiment");
    }
  }
  r.read("", "seed", c.seed);
  std::string out = c.output_dir.string();
  r.read("", "output_dir", out);
  c.output_dir = out;
  r.read("", "workers", c.workers);

  auto& m = c.model;
  r.read("model", "dim", m.dim);
  r.read("model", "symbol", m.symbol);
  r.read("model", "symbol_param", m.symbol_param);
  r.read("model", "symbol_coeffs", m.symbol_coeffs);
  r.read("model", "s", m.s);
  r.read("model", "flux", m.flux);
  r.read("model", "flux_coeffs", m.flux_coeffs);

  r.read("grid", "length", c.grid.length);
  r.read("grid", "points", c.grid.points);

  auto& so = c.solver;
  r.read("solver", "dt", so.dt);
  r.read("solver", "final_time", so.final_time);
  r.read("solver", "output_every", so.output_every);
  r.read("solver", "dealias", so.dealias);
  r.read("solver", "k_max", so.k_max);
  r.read("solver", "functional_order", so.functional_order);
  r.read("solver", "snapshots", so.snapshots);

  r.read("initial", "preset", c.initial.preset);
  r.read("initial", "amplitude", c.initial.amplitude);
  r.read("initial", "width", c.initial.width);
  r.read("initial", "max_mode", c.initial.max_mode);

  r.read("time", "start", c.time.start);
  r.read("time", "stop", c.time.stop);
  r.read("time", "count", c.time.count);

  r.read("fit", "lo", c.fit.lo);
  r.read("fit", "hi", c.fit.hi);
  r.read("fit", "log_correction", c.fit.log_correction);

  auto& p = c.profile;
  r.read("profile", "kind", p.kind);
  r.read("profile", "width", p.width);
  r.read("profile", "r0", p.r0);
  r.read("profile", "thickness", p.thickness);
  r.read("profile", "k", p.k);
  r.read("profile", "mode", p.mode);

  r.read("asymptotics", "source", c.asymptotics.source);
  r.read("asymptotics", "mean_zero", c.asymptotics.mean_zero);
  r.read("asymptotics", "k", c.asymptotics.k);

  r.read("indices", "n", c.indices.n);
  r.read("indices", "s", c.indices.s);
  r.read("indices", "N", c.indices.N);

  r.read("checks", "suite", c.checks.suite);
  r.read("checks", "corpus", c.checks.corpus);
  r.read("checks", "k1", c.checks.k1);
  r.read("checks", "k2", c.checks.k2);
  r.read("checks", "norms", c.checks.norms);

  if (root.contains("sweep")) {
    SweepSection sw;
    r.read("sweep", "parameter", sw.parameter);
    r.read("sweep", "values", sw.values);
    c.sweep = sw;
  }
  if (r.failed()) {
    try {
      validate(c);
    } catch (const ConfigError& e) {
      r.absorb(e);
    }
  }
  r.raise();
  return c;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

// TOML floats need a decimal point or exponent.
std::string toml_float(double v) {
  std::string s = format_double(v);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

void write_float_array(std::ostringstream& os, const std::vector<double>& v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << toml_float(v[i]);
  os << ']';
}

}  // namespace

const char* to_string(ExperimentKind kind) {
  for (const auto& k : kKinds) {
    if (k.kind == kind) return k.name;
  }
  return "?";
}

ExperimentKind experiment_kind_from_string(const std::string& name) {
  for (const auto& k : kKinds) {
    if (name == k.name) return k.kind;
  }
  throw ConfigError("unknown experiment kind '" + name + "'", {"kind"});
}

void validate(const ExperimentConfig& c) {
  Validator v;
  v.require(c.schema == kConfigSchema, "schema", "must be " + std::to_string(kConfigSchema));
  v.require(c.workers >= 0, "workers", "must be >= 0");

  const auto& m = c.model;
  v.require(m.dim == 1 || m.dim == 2, "model.dim", "must be 1 or 2");
  v.require(std::isfinite(m.s), "model.s", "must be finite");
  try {
    (void)FrequencySymbol::from_name(m.symbol, m.symbol_param, m.symbol_coeffs);
  } catch (const Error& e) {
    v.require(false, "model.symbol", std::string("is invalid: ") + e.what());
  }
  v.require(m.symbol != "radiating_gas" || m.s == 1.0, "model.s", "must be 1 for the radiating_gas symbol");
  v.require(one_of(m.flux, {"burgers", "zero", "polynomial"}), "model.flux", "must be burgers, zero or polynomial");
  if (m.flux == "polynomial") {
    v.require(static_cast<int>(m.flux_coeffs.size()) == m.dim, "model.flux_coeffs", "needs one row per dimension");
    try {
      (void)FluxModel::normalize(m.flux_coeffs);
    } catch (const Error& e) {
      v.require(false, "model.flux_coeffs", std::string("is invalid: ") + e.what());
    }
  }

  v.require(c.grid.length > 0.0, "grid.length", "must be positive");
  v.require(is_power_of_two(c.grid.points) && c.grid.points >= 16, "grid.points", "must be a power of two >= 16");

  const auto& so = c.solver;
  v.require(so.dt > 0.0, "solver.dt", "must be positive");
  v.require(so.final_time >= 0.0, "solver.final_time", "must be >= 0");
  v.require(so.output_every > 0.0, "solver.output_every", "must be positive");
  v.require(so.k_max >= 0, "solver.k_max", "must be >= 0");
  v.require(!so.functional_order || *so.functional_order >= 0, "solver.functional_order", "must be >= 0");

  v.require(one_of(c.initial.preset, {"gaussian", "derivative_gaussian", "random"}), "initial.preset",
            "must be gaussian, derivative_gaussian or random");
  v.require(c.initial.amplitude >= 0.0, "initial.amplitude", "must be >= 0");
  v.require(c.initial.width > 0.0, "initial.width", "must be positive");
  v.require(c.initial.max_mode >= 1, "initial.max_mode", "must be >= 1");

  v.require(c.time.start > 0.0, "time.start", "must be positive");
  v.require(c.time.stop > c.time.start, "time.stop", "must exceed time.start");
  v.require(c.time.count >= 30, "time.count", "must be >= 30");
  v.require(c.fit.hi > c.fit.lo, "fit.hi", "must exceed fit.lo");
  v.require(!c.fit.log_correction || c.fit.lo >= 1.0, "fit.lo", "must be >= 1 with log_correction");

  const auto& p = c.profile;
  v.require(one_of(p.kind, {"gaussian", "mean_zero_gaussian", "shell"}), "profile.kind",
            "must be gaussian, mean_zero_gaussian or shell");
  v.require(one_of(p.mode, {"full", "heat", "gap"}), "profile.mode", "must be full, heat or gap");
  v.require(p.width > 0.0, "profile.width", "must be positive");
  v.require(p.r0 > 0.0, "profile.r0", "must be positive");
  v.require(p.thickness >= 0.0 && p.thickness < 2.0 * p.r0, "profile.thickness", "must lie in [0, 2 r0)");
  v.require(p.k >= 0, "profile.k", "must be >= 0");

  const auto& a = c.asymptotics;
  v.require(one_of(a.source, {"linear", "trajectory"}), "asymptotics.source", "must be linear or trajectory");
  v.require(a.k >= 0, "asymptotics.k", "must be >= 0");

  v.require(c.indices.n >= 1, "indices.n", "must be >= 1");
  v.require(c.indices.s > 1.0, "indices.s", "must exceed 1");
  v.require(c.indices.N >= 1, "indices.N", "must be >= 1");

  const auto& ch = c.checks;
  v.require(one_of(ch.suite, {"interpolation", "energy", "product"}), "checks.suite",
            "must be interpolation, energy or product");
  v.require(ch.corpus >= 1, "checks.corpus", "must be >= 1");
  v.require(ch.k1 >= 0 && ch.k2 >= 0 && ch.k1 + ch.k2 <= 4, "checks.k1", "and checks.k2 must be >= 0 with sum <= 4");
  v.require(one_of(ch.norms, {"2,inf,2", "1,2,2"}), "checks.norms", "must be \"2,inf,2\" or \"1,2,2\"");

  switch (c.kind) {
    case ExperimentKind::shell_rate:
      v.require(p.kind == "shell", "profile.kind", "must be shell for shell-rate");
      break;
    case ExperimentKind::heat_gap:
      v.require(p.mode == "gap", "profile.mode", "must be gap for heat-gap");
      v.require(p.kind != "shell", "profile.kind", "must be a smooth profile for heat-gap");
      break;
    case ExperimentKind::asymptotics:
      if (a.source == "linear") {
        v.require(p.kind != "shell", "profile.kind", "must be a smooth profile for asymptotics");
        v.require(p.mode != "gap", "profile.mode", "must be full or heat for asymptotics");
        v.require(!a.mean_zero || p.kind == "mean_zero_gaussian", "profile.kind",
                  "must be mean_zero_gaussian when asymptotics.mean_zero is set");
      } else {
        v.require(!a.mean_zero || c.initial.preset == "derivative_gaussian", "initial.preset",
                  "must be derivative_gaussian when asymptotics.mean_zero is set");
      }
      break;
    default:
      break;
  }

  if (c.sweep) {
    v.require(!c.sweep->values.empty(), "sweep.values", "must not be empty");
    ExperimentConfig probe = c;
    probe.sweep.reset();
    try {
      set_numeric(probe, c.sweep->parameter, 0.0);
    } catch (const ConfigError&) {
      v.require(false, "sweep.parameter", "must name a numeric key");
    }
  }
  v.raise();
}

ExperimentConfig parse_config(const std::string& text, bool is_json) {
  json root;
  if (is_json) {
    try {
      root = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ConfigError(std::string("malformed JSON: ") + e.what(), {"<document>"});
    }
  } else {
    try {
      root = from_toml(toml::parse(text));
    } catch (const toml::parse_error& e) {
      std::ostringstream os;
      os << "malformed TOML: " << e.description() << " at line " << e.source().begin.line;
      throw ConfigError(os.str(), {"<document>"});
    }
  }
  ExperimentConfig c = from_json(root);
  validate(c);
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read configuration file " + path.string(), {"<file>"});
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path.extension() == ".json");
}

std::string to_toml(const ExperimentConfig& c) {
  std::ostringstream os;
  os << "schema = " << c.schema << "\n";
  os << "kind = " << quoted(to_string(c.kind)) << "\n";
  os << "seed = " << c.seed << "\n";
  os << "output_dir = " << quoted(c.output_dir.generic_string()) << "\n";
  os << "workers = " << c.workers << "\n";

  os << "\n[model]\n";
  os << "dim = " << c.model.dim << "\n";
  os << "symbol = " << quoted(c.model.symbol) << "\n";
  os << "symbol_param = " << toml_float(c.model.symbol_param) << "\n";
  os << "symbol_coeffs = ";
  write_float_array(os, c.model.symbol_coeffs);
  os << "\ns = " << toml_float(c.model.s) << "\n";
  os << "flux = " << quoted(c.model.flux) << "\n";
  os << "flux_coeffs = [";
  for (std::size_t i = 0; i < c.model.flux_coeffs.size(); ++i) {
    if (i) os << ", ";
    write_float_array(os, c.model.flux_coeffs[i]);
  }
  os << "]\n";

  os << "\n[grid]\n";
  os << "length = " << toml_float(c.grid.length) << "\n";
  os << "points = " << c.grid.points << "\n";

  os << "\n[solver]\n";
  os << "dt = " << toml_float(c.solver.dt) << "\n";
  os << "final_time = " << toml_float(c.solver.final_time) << "\n";
  os << "output_every = " << toml_float(c.solver.output_every) << "\n";
  os << "dealias = " << (c.solver.dealias ? "true" : "false") << "\n";
  os << "k_max = " << c.solver.k_max << "\n";
  if (c.solver.functional_order) os << "functional_order = " << *c.solver.functional_order << "\n";
  os << "snapshots = " << (c.solver.snapshots ? "true" : "false") << "\n";

  os << "\n[initial]\n";
  os << "preset = " << quoted(c.initial.preset) << "\n";
  os << "amplitude = " << toml_float(c.initial.amplitude) << "\n";
  os << "width = " << toml_float(c.initial.width) << "\n";
  os << "max_mode = " << c.initial.max_mode << "\n";

  os << "\n[time]\n";
  os << "start = " << toml_float(c.time.start) << "\n";
  os << "stop = " << toml_float(c.time.stop) << "\n";
  os << "count = " << c.time.count << "\n";

  os << "\n[fit]\n";
  os << "lo = " << toml_float(c.fit.lo) << "\n";
  os << "hi = " << toml_float(c.fit.hi) << "\n";
  os << "log_correction = " << (c.fit.log_correction ? "true" : "false") << "\n";

  os << "\n[profile]\n";
  os << "kind = " << quoted(c.profile.kind) << "\n";
  os << "width = " << toml_float(c.profile.width) << "\n";
  os << "r0 = " << toml_float(c.profile.r0) << "\n";
  os << "thickness = " << toml_float(c.profile.thickness) << "\n";
  os << "k = " << c.profile.k << "\n";
  os << "mode = " << quoted(c.profile.mode) << "\n";

  os << "\n[asymptotics]\n";
  os << "source = " << quoted(c.asymptotics.source) << "\n";
  os << "mean_zero = " << (c.asymptotics.mean_zero ? "true" : "false") << "\n";
  os << "k = " << c.asymptotics.k << "\n";

  os << "\n[indices]\n";
  os << "n = " << c.indices.n << "\n";
  os << "s = " << toml_float(c.indices.s) << "\n";
  os << "N = " << c.indices.N << "\n";

  os << "\n[checks]\n";
  os << "suite = " << quoted(c.checks.suite) << "\n";
  os << "corpus = " << c.checks.corpus << "\n";
  os << "k1 = " << c.checks.k1 << "\n";
  os << "k2 = " << c.checks.k2 << "\n";
  os << "norms = " << quoted(c.checks.norms) << "\n";

  if (c.sweep) {
    os << "\n[sweep]\n";
    os << "parameter = " << quoted(c.sweep->parameter) << "\n";
    os << "values = ";
    write_float_array(os, c.sweep->values);
    os << "\n";
  }
  return os.str();
}

void set_numeric(ExperimentConfig& c, const std::string& key, double value) {
  auto as_int = [&](int& target) {
    if (value != std::floor(value)) throw ConfigError(key + " takes integer values", {key});
    target = static_cast<int>(value);
  };
  if (key == "seed") {
    if (value < 0 || value != std::floor(value)) throw ConfigError("seed takes nonnegative integers", {key});
    c.seed = static_cast<std::uint64_t>(value);
  } else if (key == "model.dim") as_int(c.model.dim);
  else if (key == "model.s") c.model.s = value;
  else if (key == "model.symbol_param") c.model.symbol_param = value;
  else if (key == "grid.length") c.grid.length = value;
  else if (key == "grid.points") as_int(c.grid.points);
  else if (key == "solver.dt") c.solver.dt = value;
  else if (key == "solver.final_time") c.solver.final_time = value;
  else if (key == "solver.output_every") c.solver.output_every = value;
  else if (key == "initial.amplitude") c.initial.amplitude = value;
  else if (key == "initial.width") c.initial.width = value;
  else if (key == "fit.lo") c.fit.lo = value;
  else if (key == "fit.hi") c.fit.hi = value;
  else if (key == "profile.width") c.profile.width = value;
  else if (key == "profile.r0") c.profile.r0 = value;
  else if (key == "profile.k") as_int(c.profile.k);
  else if (key == "asymptotics.k") as_int(c.asymptotics.k);
  else if (key == "indices.n") as_int(c.indices.n);
  else if (key == "indices.s") c.indices.s = value;
  else if (key == "indices.N") as_int(c.indices.N);
  else throw ConfigError("unknown sweep parameter '" + key + "'", {"sweep.parameter"});
}

}  // namespace claws
