#pragma once

#include <stdexcept>
#include <string>

namespace saddlewalk {

/// Raised when a request cannot be turned into a stable walk
/// (degenerate postures, unreachable elongations, closed stability windows...).
class PlanningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the file-facing layer (config parsing, CSV/mocap ingestion).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace saddlewalk
