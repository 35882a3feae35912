#pragma once

#include <string>
#include <vector>

#include "saddlewalk/planner.hpp"

namespace saddlewalk {

/// A parsed run configuration: the request plus the grid lists. Lengths are
/// metres and angles degrees in the file; the request holds radians.
struct RunConfig {
  GaitRequest request;
  bool feet_explicit = false;  // initial CoPs came from the file
  std::vector<double> grid_speeds{0.7, 1.0, 1.2, 1.6};
  std::vector<double> grid_hs_angles_deg{5.0, 10.0, 15.0};
  std::string out_dir = "out";
};

/// Line-oriented key=value file, '#' starts a comment. Unknown keys,
/// unparsable values and missing required keys raise IoError with the line
/// number (or the full list of missing keys).
RunConfig parse_config(const std::string& path);
RunConfig parse_config_text(const std::string& text, const std::string& name = "<config>");

/// Echo the configuration in the same format; parsing it back reproduces the
/// request exactly (doubles are written with full precision).
std::string write_config(const RunConfig& config);

}  // namespace saddlewalk
