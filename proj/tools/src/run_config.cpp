#include "hqlat_cli/run_config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hqlat/jc.hpp"

namespace hqlat_cli {

namespace {

std::string trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

double parse_double(std::string_view key, std::string_view value) {
  try {
    std::size_t used = 0;
    const std::string text(value);
    const double x = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(x)) throw std::invalid_argument("");
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config error: key '" + std::string(key) +
                      "' expects a finite number, got '" + std::string(value) + "'");
  }
}

long long parse_integer(std::string_view key, std::string_view value) {
  try {
    std::size_t used = 0;
    const std::string text(value);
    const long long x = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument("");
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config error: key '" + std::string(key) +
                      "' expects an integer, got '" + std::string(value) + "'");
  }
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("config error: key '" + std::string(key) +
                    "' expects true/false, got '" + std::string(value) + "'");
}

hqlat::InitialStateKind parse_initial(std::string_view value) {
  if (value == "activation_excited") return hqlat::InitialStateKind::activation_excited;
  if (value == "centered_polariton") return hqlat::InitialStateKind::centered_polariton;
  throw ConfigError(
      "config error: key 'initial_state' expects activation_excited or "
      "centered_polariton, got '" +
      std::string(value) + "'");
}

const char* initial_name(hqlat::InitialStateKind kind) {
  return kind == hqlat::InitialStateKind::activation_excited ? "activation_excited"
                                                             : "centered_polariton";
}

hqlat::Regime parse_regime(std::string_view value) {
  if (value == "resonant-polariton") return hqlat::Regime::resonant_polariton;
  if (value == "dispersive-photon") return hqlat::Regime::dispersive_photon;
  if (value == "dispersive-spinwave") return hqlat::Regime::dispersive_spinwave;
  throw ConfigError(
      "config error: key 'regime' expects resonant-polariton, dispersive-photon or "
      "dispersive-spinwave, got '" +
      std::string(value) + "'");
}

hqlat::ObservableSet parse_observables(std::string_view value) {
  hqlat::ObservableSet set;
  set.tls = set.photon = set.polariton = set.branches = false;
  std::string item;
  std::stringstream ss{std::string(value)};
  bool any = false;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    any = true;
    if (item == "tls") {
      set.tls = true;
    } else if (item == "photon") {
      set.photon = true;
    } else if (item == "polariton") {
      set.polariton = true;
    } else if (item == "branches") {
      set.branches = true;
    } else {
      throw ConfigError("config error: key 'observables' expects a comma list of tls, "
                        "photon, polariton, branches; got '" +
                        item + "'");
    }
  }
  if (!any) {
    throw ConfigError("config error: key 'observables' must name at least one family");
  }
  return set;
}

std::string observables_name(const hqlat::ObservableSet& set) {
  std::string out;
  const auto add = [&out](const char* name) {
    if (!out.empty()) out += ',';
    out += name;
  };
  if (set.tls) add("tls");
  if (set.photon) add("photon");
  if (set.polariton) add("polariton");
  if (set.branches) add("branches");
  return out;
}

// Default regime from the left-section detuning.
hqlat::Regime infer_regime(const hqlat::SectionParams& left) {
  const double delta = left.omega0 - left.omega;
  if (delta == 0.0) return hqlat::Regime::resonant_polariton;
  return delta < 0.0 ? hqlat::Regime::dispersive_photon
                     : hqlat::Regime::dispersive_spinwave;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void ConfigBuilder::set_scenario(std::string_view name) {
  scenario_ = std::string(name);
  // Resolve eagerly so typos fail before any file parsing.
  try {
    (void)hqlat::scenario_preset(*scenario_);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config error: ") + e.what());
  }
}

void ConfigBuilder::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config error: cannot open config file '" + path + "'");
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string text = trim(line);
    if (text.empty()) continue;
    if (text.front() == '[') {
      if (text.back() != ']') {
        throw ConfigError("config error: " + path + ":" + std::to_string(lineno) +
                          ": malformed section header '" + text + "'");
      }
      section = trim(text.substr(1, text.size() - 2));
      if (section != "left" && section != "right") {
        throw ConfigError("config error: " + path + ":" + std::to_string(lineno) +
                          ": unknown section '[" + section + "]'");
      }
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config error: " + path + ":" + std::to_string(lineno) +
                        ": expected 'key = value', got '" + text + "'");
    }
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("config error: " + path + ":" + std::to_string(lineno) +
                        ": empty key or value");
    }
    set(section.empty() ? key : section + "." + key, value);
  }
}

void ConfigBuilder::set_sectioned(Section& s, std::string_view key, std::string_view value,
                                  std::string_view prefix) {
  if (key == "omega") {
    s.omega = parse_double(key, value);
  } else if (key == "omega0") {
    s.omega0 = parse_double(key, value);
  } else if (key == "g") {
    s.g = parse_double(key, value);
  } else if (key == "v") {
    s.v = parse_double(key, value);
  } else {
    throw ConfigError("config error: unknown key '" + std::string(prefix) + "." +
                      std::string(key) + "'");
  }
}

void ConfigBuilder::set(std::string_view key, std::string_view value) {
  if (key.rfind("left.", 0) == 0) {
    set_sectioned(left_, key.substr(5), value, "left");
    return;
  }
  if (key.rfind("right.", 0) == 0) {
    right_present_ = true;
    set_sectioned(right_, key.substr(6), value, "right");
    return;
  }
  if (key == "scenario") {
    set_scenario(value);
  } else if (key == "label") {
    label_ = std::string(value);
  } else if (key == "L") {
    num_sites_ = static_cast<int>(parse_integer(key, value));
  } else if (key == "n_max") {
    n_max_ = static_cast<int>(parse_integer(key, value));
  } else if (key == "activation_qubit") {
    qubit_ = parse_bool(key, value);
  } else if (key == "omega_A") {
    omega_a_ = parse_double(key, value);
  } else if (key == "lambda") {
    lambda_ = parse_double(key, value);
  } else if (key == "lambda_C") {
    lambda_c_ = parse_double(key, value);
  } else if (key == "section_boundary") {
    boundary_ = static_cast<int>(parse_integer(key, value));
  } else if (key == "initial_state") {
    (void)parse_initial(value);
    initial_ = std::string(value);
  } else if (key == "regime") {
    (void)parse_regime(value);
    regime_ = std::string(value);
  } else if (key == "tau") {
    tau_ = parse_double(key, value);
  } else if (key == "t_final") {
    t_final_ = parse_double(key, value);
  } else if (key == "chi_max") {
    chi_max_ = static_cast<int>(parse_integer(key, value));
  } else if (key == "epsilon0") {
    epsilon0_ = parse_double(key, value);
  } else if (key == "measure_stride") {
    stride_ = parse_integer(key, value);
  } else if (key == "observables") {
    (void)parse_observables(value);
    observables_ = std::string(value);
  } else if (key == "time_unit") {
    time_unit_ = parse_double(key, value);
  } else if (key == "frame_shift") {
    if (value != "auto") (void)parse_double(key, value);
    frame_shift_ = std::string(value);
  } else {
    throw ConfigError("config error: unknown key '" + std::string(key) + "'");
  }
}

RunConfig ConfigBuilder::resolve() const {
  RunConfig config;
  hqlat::ScenarioSpec& spec = config.spec;

  if (scenario_) {
    spec = hqlat::scenario_preset(*scenario_);
  } else {
    // Explicit-parameter mode: the lattice and time grid must be complete.
    const auto require = [](bool ok, const char* key) {
      if (!ok) {
        throw ConfigError(std::string("config error: missing required key '") + key +
                          "' (no scenario preset selected)");
      }
    };
    require(num_sites_.has_value(), "L");
    require(left_.omega.has_value(), "left.omega");
    require(left_.omega0.has_value(), "left.omega0");
    require(left_.g.has_value(), "left.g");
    require(left_.v.has_value(), "left.v");
    require(tau_.has_value(), "tau");
    require(t_final_.has_value(), "t_final");
    if (qubit_.value_or(false)) {
      require(omega_a_.has_value(), "omega_A");
      require(lambda_.has_value(), "lambda");
    }
    if (right_present_) {
      require(right_.omega.has_value(), "right.omega");
      require(right_.omega0.has_value(), "right.omega0");
      require(right_.g.has_value(), "right.g");
      require(right_.v.has_value(), "right.v");
      require(lambda_c_.has_value(), "lambda_C");
      require(boundary_.has_value(), "section_boundary");
    }
    spec.label = "custom";
    spec.has_qubit = qubit_.value_or(false);
    spec.two_section = right_present_;
    spec.measure_stride = 1;
  }

  if (label_) spec.label = *label_;
  if (num_sites_) spec.num_sites = *num_sites_;
  if (n_max_) spec.n_max = *n_max_;
  if (qubit_) spec.has_qubit = *qubit_;
  if (omega_a_) spec.omega_A = *omega_a_;
  if (lambda_) spec.lambda = *lambda_;
  if (lambda_c_) spec.lambda_C = *lambda_c_;
  if (boundary_) spec.section_boundary = *boundary_;
  if (left_.omega) spec.left.omega = *left_.omega;
  if (left_.omega0) spec.left.omega0 = *left_.omega0;
  if (left_.g) spec.left.g = *left_.g;
  if (left_.v) spec.left.v = *left_.v;
  if (right_present_) spec.two_section = true;
  if (right_.omega) spec.right.omega = *right_.omega;
  if (right_.omega0) spec.right.omega0 = *right_.omega0;
  if (right_.g) spec.right.g = *right_.g;
  if (right_.v) spec.right.v = *right_.v;
  if (tau_) spec.tau = *tau_;
  if (t_final_) spec.t_final = *t_final_;
  if (chi_max_) spec.policy.chi_max = *chi_max_;
  if (epsilon0_) spec.policy.epsilon0 = *epsilon0_;
  if (stride_) spec.measure_stride = *stride_;

  // A single-section lattice's boundary is definitionally the last site
  // (keeps `L` overrides on single-section presets consistent).
  if (!spec.two_section && !boundary_) spec.section_boundary = spec.num_sites;
  if (omega_a_ && !spec.has_qubit) {
    throw ConfigError("config error: key 'omega_A' requires activation_qubit = true");
  }
  if (lambda_ && !spec.has_qubit) {
    throw ConfigError("config error: key 'lambda' requires activation_qubit = true");
  }

  spec.initial = initial_ ? parse_initial(*initial_)
               : spec.has_qubit ? hqlat::InitialStateKind::activation_excited
                                : (scenario_ ? spec.initial
                                             : hqlat::InitialStateKind::centered_polariton);
  spec.regime = regime_ ? parse_regime(*regime_)
                        : (scenario_ ? spec.regime : infer_regime(spec.left));
  if (time_unit_) {
    spec.time_unit = *time_unit_;
  } else if (!scenario_) {
    spec.time_unit = spec.left.v != 0.0 ? std::abs(spec.left.v) : 1.0;
  }

  if (observables_) config.observables = parse_observables(*observables_);
  if (frame_shift_ && *frame_shift_ != "auto") {
    config.frame_shift = parse_double("frame_shift", *frame_shift_);
  }

  try {
    spec.validate();
    if (!(spec.policy.epsilon0 >= 0.0)) {
      throw std::invalid_argument("epsilon0 must be >= 0");
    }
    if (spec.policy.chi_max < 1) {
      throw std::invalid_argument("chi_max must be >= 1");
    }
    if (!(spec.tau > 0.0)) {
      throw std::invalid_argument("tau must be > 0");
    }
    if (!(spec.t_final >= 0.0)) {
      throw std::invalid_argument("t_final must be >= 0");
    }
    if (spec.measure_stride < 1) {
      throw std::invalid_argument("measure_stride must be >= 1");
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config error: ") + e.what());
  }
  return config;
}

std::string manifest_body(const RunConfig& config) {
  const hqlat::ScenarioSpec& spec = config.spec;
  std::ostringstream out;
  out << "label = " << spec.label << '\n';
  out << "L = " << spec.num_sites << '\n';
  out << "n_max = " << spec.n_max << '\n';
  out << "activation_qubit = " << (spec.has_qubit ? "true" : "false") << '\n';
  if (spec.has_qubit) {
    out << "omega_A = " << format_double(spec.omega_A) << '\n';
    out << "lambda = " << format_double(spec.lambda) << '\n';
  }
  out << "section_boundary = " << spec.section_boundary << '\n';
  if (spec.two_section) {
    out << "lambda_C = " << format_double(spec.lambda_C) << '\n';
  }
  out << "initial_state = " << initial_name(spec.initial) << '\n';
  out << "regime = " << hqlat::regime_name(spec.regime) << '\n';
  out << "tau = " << format_double(spec.tau) << '\n';
  out << "t_final = " << format_double(spec.t_final) << '\n';
  out << "chi_max = " << spec.policy.chi_max << '\n';
  out << "epsilon0 = " << format_double(spec.policy.epsilon0) << '\n';
  out << "measure_stride = " << spec.measure_stride << '\n';
  out << "observables = " << observables_name(config.observables) << '\n';
  out << "time_unit = " << format_double(spec.time_unit) << '\n';
  const double shift = config.frame_shift
                           ? *config.frame_shift
                           : hqlat::suggested_frame_shift(hqlat::build_lattice(spec));
  out << "frame_shift = " << format_double(shift) << '\n';
  out << "[left]\n";
  out << "omega = " << format_double(spec.left.omega) << '\n';
  out << "omega0 = " << format_double(spec.left.omega0) << '\n';
  out << "g = " << format_double(spec.left.g) << '\n';
  out << "v = " << format_double(spec.left.v) << '\n';
  if (spec.two_section) {
    out << "[right]\n";
    out << "omega = " << format_double(spec.right.omega) << '\n';
    out << "omega0 = " << format_double(spec.right.omega0) << '\n';
    out << "g = " << format_double(spec.right.g) << '\n';
    out << "v = " << format_double(spec.right.v) << '\n';
  }
  return out.str();
}

SweepParam parse_sweep_param(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0 || eq + 1 >= text.size()) {
    throw ConfigError("config error: --param expects key=v1,v2,..., got '" +
                      std::string(text) + "'");
  }
  SweepParam param;
  param.key = trim(text.substr(0, eq));
  std::stringstream ss{std::string(text.substr(eq + 1))};
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) param.values.push_back(item);
  }
  if (param.values.empty()) {
    throw ConfigError("config error: --param '" + param.key + "' lists no values");
  }
  return param;
}

}  // namespace hqlat_cli
