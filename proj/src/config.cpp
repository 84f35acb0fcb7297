#include "vdspec/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace vdspec {

using nlohmann::json;

namespace {

const std::set<std::string>& top_level_keys() {
  static const std::set<std::string> keys = {
      "scenario",      "name",          "n_points",
      "dx",            "x_min",         "dt",
      "n_steps",       "x_detector",    "dx_sep",
      "potential",     "potential_value", "zero_pad_factor",
      "cvd_bin_width", "rho_floor",     "support_floor",
      "window_abort_fraction", "packets"};
  return keys;
}

const std::set<std::string>& packet_keys() {
  static const std::set<std::string> keys = {"x0",    "sigma_x",  "k0",
                                             "phase", "coeff_re", "coeff_im"};
  return keys;
}

template <typename T>
T get(const json& obj, const std::string& key, const std::string& where) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ValidationError("has the wrong type", where);
  }
}

template <typename T>
void maybe(const json& obj, const std::string& key, T& target,
           const std::string& prefix = {}) {
  if (obj.contains(key)) target = get<T>(obj, key, prefix + key);
}

std::size_t get_count(const json& obj, const std::string& key) {
  const auto& v = obj.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ValidationError("must be a non-negative integer", key);
  return v.get<std::size_t>();
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& prefix) {
  for (const auto& [key, _] : obj.items())
    if (!allowed.contains(key))
      throw ValidationError("unknown key", prefix + key);
}

PacketTerm parse_packet(const json& obj, std::size_t index) {
  const std::string prefix = "packets[" + std::to_string(index) + "].";
  if (!obj.is_object())
    throw ValidationError("must be an object",
                          "packets[" + std::to_string(index) + "]");
  reject_unknown(obj, packet_keys(), prefix);
  for (const char* required : {"x0", "sigma_x", "k0"})
    if (!obj.contains(required))
      throw ValidationError("is required", prefix + required);

  PacketTerm term;
  term.params.x0 = get<double>(obj, "x0", prefix + "x0");
  term.params.sigma_x = get<double>(obj, "sigma_x", prefix + "sigma_x");
  term.params.k0 = get<double>(obj, "k0", prefix + "k0");
  maybe(obj, "phase", term.params.global_phase, prefix);
  double re = 1.0, im = 0.0;
  maybe(obj, "coeff_re", re, prefix);
  maybe(obj, "coeff_im", im, prefix);
  term.coefficient = {re, im};
  return term;
}

}  // namespace

ScenarioConfig parse_run_config(std::string_view text) {
  json root;
  try {
    root = json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ValidationError("config must be a JSON object");
  reject_unknown(root, top_level_keys(), "");

  ScenarioConfig cfg;
  if (root.contains("scenario")) {
    cfg = build_scenario(get<std::string>(root, "scenario", "scenario"));
  } else {
    if (!root.contains("packets"))
      throw ValidationError("is required when no scenario base is given",
                            "packets");
    cfg = build_scenario("single_gaussian");
    cfg.name = "custom";
    cfg.packets.clear();
  }

  maybe(root, "name", cfg.name);
  const bool regrid = root.contains("n_points") || root.contains("dx");
  if (root.contains("n_points")) cfg.grid.n_points = get_count(root, "n_points");
  maybe(root, "dx", cfg.grid.dx);
  if (root.contains("x_min")) {
    maybe(root, "x_min", cfg.grid.x_min);
  } else if (regrid) {
    cfg.grid.x_min = -static_cast<double>(cfg.grid.n_points / 2) * cfg.grid.dx;
  }
  maybe(root, "dt", cfg.dt);
  if (root.contains("n_steps")) cfg.n_steps = get_count(root, "n_steps");
  maybe(root, "x_detector", cfg.tap.x_detector);
  maybe(root, "dx_sep", cfg.tap.dx_sep);

  if (root.contains("potential")) {
    const auto kind = get<std::string>(root, "potential", "potential");
    if (kind == "zero") {
      cfg.potential = PotentialSpec::zero();
    } else if (kind == "constant") {
      cfg.potential = PotentialSpec::constant(0.0);
    } else {
      throw ValidationError("must be \"zero\" or \"constant\"", "potential");
    }
  }
  if (root.contains("potential_value")) {
    if (cfg.potential.kind != PotentialSpec::Kind::constant)
      throw ValidationError("requires potential = \"constant\"",
                            "potential_value");
    cfg.potential.value = get<double>(root, "potential_value", "potential_value");
  }

  if (root.contains("zero_pad_factor"))
    cfg.zero_pad_factor = get_count(root, "zero_pad_factor");
  maybe(root, "cvd_bin_width", cfg.cvd_bin_width);
  maybe(root, "rho_floor", cfg.rho_floor);
  maybe(root, "support_floor", cfg.support_floor);
  maybe(root, "window_abort_fraction", cfg.window_abort_fraction);

  if (root.contains("packets")) {
    const auto& arr = root.at("packets");
    if (!arr.is_array()) throw ValidationError("must be an array", "packets");
    cfg.packets.clear();
    for (std::size_t i = 0; i < arr.size(); ++i)
      cfg.packets.push_back(parse_packet(arr[i], i));
  }

  cfg.validate();
  return cfg;
}

ScenarioConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str());
}

json config_to_json(const ScenarioConfig& cfg) {
  json j;
  j["name"] = cfg.name;
  j["n_points"] = cfg.grid.n_points;
  j["dx"] = cfg.grid.dx;
  j["x_min"] = cfg.grid.x_min;
  j["dt"] = cfg.dt;
  j["n_steps"] = cfg.n_steps;
  j["x_detector"] = cfg.tap.x_detector;
  j["dx_sep"] = cfg.tap.dx_sep;
  switch (cfg.potential.kind) {
    case PotentialSpec::Kind::zero:
      j["potential"] = "zero";
      break;
    case PotentialSpec::Kind::constant:
      j["potential"] = "constant";
      j["potential_value"] = cfg.potential.value;
      break;
    case PotentialSpec::Kind::time_dependent:
      j["potential"] = "time_dependent";
      break;
  }
  j["zero_pad_factor"] = cfg.zero_pad_factor;
  j["cvd_bin_width"] = cfg.cvd_bin_width;
  j["rho_floor"] = cfg.rho_floor;
  j["support_floor"] = cfg.support_floor;
  j["window_abort_fraction"] = cfg.window_abort_fraction;
  json packets = json::array();
  for (const auto& term : cfg.packets) {
    packets.push_back({{"x0", term.params.x0},
                       {"sigma_x", term.params.sigma_x},
                       {"k0", term.params.k0},
                       {"phase", term.params.global_phase},
                       {"coeff_re", term.coefficient.real()},
                       {"coeff_im", term.coefficient.imag()}});
  }
  j["packets"] = std::move(packets);
  return j;
}

}  // namespace vdspec
