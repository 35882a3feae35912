#include "saddlewalk/run_config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "saddlewalk/errors.hpp"

namespace saddlewalk {

namespace {

const std::set<std::string> kRequired = {"v_des", "n_steps", "body_height", "mass",
                                         "hs_angle_deg"};
const std::set<std::string> kKnown = {
    "v_des",       "n_steps",        "body_height",    "mass",
    "hs_angle_deg", "dt",            "d_h",            "swing_clearance",
    "w_budget",    "cop_left_x",     "cop_left_y",     "cop_right_x",
    "cop_right_y", "first_support",  "max_reach_coef", "ankle_strategies",
    "e_p",         "velocities",     "hs_angles_deg",  "out_dir"};

[[noreturn]] void fail(const std::string& name, int line, const std::string& what) {
  std::ostringstream msg;
  msg << name << ":" << line << ": " << what;
  throw IoError(msg.str());
}

double parse_double(const std::string& name, int line, const std::string& key,
                    const std::string& value) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    fail(name, line, "value of '" + key + "' is not a number: '" + value + "'");
  }
  if (used != value.size()) {
    fail(name, line, "trailing characters in value of '" + key + "': '" + value + "'");
  }
  return v;
}

std::vector<double> parse_list(const std::string& name, int line, const std::string& key,
                               const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(parse_double(name, line, key, item));
  }
  if (out.empty()) fail(name, line, "empty list for '" + key + "'");
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

RunConfig parse_config_text(const std::string& text, const std::string& name) {
  RunConfig cfg;
  GaitRequest& req = cfg.request;
  std::set<std::string> seen;
  bool w_budget_explicit = false;
  bool left_x = false, left_y = false, right_x = false, right_y = false;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string entry = trim(raw);
    if (entry.empty()) continue;
    const auto eq = entry.find('=');
    if (eq == std::string::npos) fail(name, line, "expected key=value, got '" + entry + "'");
    const std::string key = trim(entry.substr(0, eq));
    const std::string value = trim(entry.substr(eq + 1));
    if (!kKnown.count(key)) fail(name, line, "unknown key '" + key + "'");
    seen.insert(key);

    if (key == "v_des") {
      req.speed = parse_double(name, line, key, value);
      if (!(req.speed > 0.0)) fail(name, line, "v_des must be positive");
    } else if (key == "n_steps") {
      const double v = parse_double(name, line, key, value);
      if (v < 1.0 || v != std::floor(v)) fail(name, line, "n_steps must be a positive integer");
      req.steps = static_cast<int>(v);
    } else if (key == "body_height") {
      req.body_height = parse_double(name, line, key, value);
      if (!(req.body_height > 0.0)) fail(name, line, "body_height must be positive");
    } else if (key == "mass") {
      req.mass = parse_double(name, line, key, value);
      if (!(req.mass > 0.0)) fail(name, line, "mass must be positive");
    } else if (key == "hs_angle_deg") {
      const double deg = parse_double(name, line, key, value);
      if (!(deg > 0.0) || deg > 30.0) fail(name, line, "hs_angle_deg must lie in (0, 30]");
      req.heel_strike_angle = deg * kPi / 180.0;
    } else if (key == "dt") {
      req.dt = parse_double(name, line, key, value);
      if (!(req.dt > 0.0)) fail(name, line, "dt must be positive");
    } else if (key == "d_h") {
      req.pivot_distance = parse_double(name, line, key, value);
      if (!(req.pivot_distance > 0.0)) fail(name, line, "d_h must be positive");
    } else if (key == "swing_clearance") {
      req.swing_clearance = parse_double(name, line, key, value);
      if (req.swing_clearance < 0.0) fail(name, line, "swing_clearance must be >= 0");
    } else if (key == "w_budget") {
      req.work_budget = parse_double(name, line, key, value);
      if (req.work_budget < 0.0) fail(name, line, "w_budget must be >= 0");
      w_budget_explicit = true;
    } else if (key == "cop_left_x") {
      req.cop_left.x = parse_double(name, line, key, value);
      left_x = true;
    } else if (key == "cop_left_y") {
      req.cop_left.y = parse_double(name, line, key, value);
      left_y = true;
    } else if (key == "cop_right_x") {
      req.cop_right.x = parse_double(name, line, key, value);
      right_x = true;
    } else if (key == "cop_right_y") {
      req.cop_right.y = parse_double(name, line, key, value);
      right_y = true;
    } else if (key == "first_support") {
      if (value == "left") {
        req.first_support = Side::Left;
      } else if (value == "right") {
        req.first_support = Side::Right;
      } else {
        fail(name, line, "first_support must be 'left' or 'right'");
      }
    } else if (key == "max_reach_coef") {
      req.max_reach_coef = parse_double(name, line, key, value);
      if (!(req.max_reach_coef > 0.0)) fail(name, line, "max_reach_coef must be positive");
    } else if (key == "ankle_strategies") {
      if (value == "on") {
        req.ankle_strategies = true;
      } else if (value == "off") {
        req.ankle_strategies = false;
      } else {
        fail(name, line, "ankle_strategies must be 'on' or 'off'");
      }
    } else if (key == "e_p") {
      req.perturbation_energy = parse_double(name, line, key, value);
    } else if (key == "velocities") {
      cfg.grid_speeds = parse_list(name, line, key, value);
    } else if (key == "hs_angles_deg") {
      cfg.grid_hs_angles_deg = parse_list(name, line, key, value);
    } else if (key == "out_dir") {
      if (value.empty()) fail(name, line, "out_dir must not be empty");
      cfg.out_dir = value;
    }
  }

  std::string missing;
  for (const auto& key : kRequired) {
    if (!seen.count(key)) missing += missing.empty() ? key : ", " + key;
  }
  if (!missing.empty()) throw IoError(name + ": missing required keys: " + missing);

  cfg.feet_explicit = left_x || left_y || right_x || right_y;
  if (!cfg.feet_explicit) {
    // Default posture: feet abreast at the model step width for the speed.
    const double w = step_width(req.speed);
    req.cop_left = {0.0, +0.5 * w};
    req.cop_right = {0.0, -0.5 * w};
  }
  if (!w_budget_explicit) req.work_budget = 0.5 * req.mass;
  return cfg;
}

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

std::string write_config(const RunConfig& cfg) {
  const GaitRequest& r = cfg.request;
  char buf[64];
  std::ostringstream out;
  auto num = [&](const char* key, double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << key << "=" << buf << "\n";
  };
  num("v_des", r.speed);
  out << "n_steps=" << r.steps << "\n";
  num("body_height", r.body_height);
  num("mass", r.mass);
  num("hs_angle_deg", r.heel_strike_angle * 180.0 / kPi);
  num("dt", r.dt);
  num("d_h", r.pivot_distance);
  num("swing_clearance", r.swing_clearance);
  num("w_budget", r.work_budget);
  num("cop_left_x", r.cop_left.x);
  num("cop_left_y", r.cop_left.y);
  num("cop_right_x", r.cop_right.x);
  num("cop_right_y", r.cop_right.y);
  out << "first_support=" << (r.first_support == Side::Left ? "left" : "right") << "\n";
  num("max_reach_coef", r.max_reach_coef);
  out << "ankle_strategies=" << (r.ankle_strategies ? "on" : "off") << "\n";
  num("e_p", r.perturbation_energy);
  auto list = [&](const char* key, const std::vector<double>& values) {
    out << key << "=";
    for (std::size_t i = 0; i < values.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", values[i]);
      out << (i ? "," : "") << buf;
    }
    out << "\n";
  };
  list("velocities", cfg.grid_speeds);
  list("hs_angles_deg", cfg.grid_hs_angles_deg);
  out << "out_dir=" << cfg.out_dir << "\n";
  return out.str();
}

}  // namespace saddlewalk
