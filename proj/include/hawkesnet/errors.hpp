#pragma once

#include <stdexcept>
#include <string>

namespace hawkesnet {

// Events handed to a streaming update were not in time order.
struct OrderingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A model assigns zero intensity to an observed event (log of zero).
struct DegenerateModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Spectral radius of the influence matrix is >= 1; simulation would explode.
struct StabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InsufficientDataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Threshold calibration cannot reach the requested average run length.
struct CalibrationError : std::runtime_error {
  CalibrationError(const std::string& msg, double max_attainable)
      : std::runtime_error(msg), max_attainable_arl(max_attainable) {}
  double max_attainable_arl = 0.0;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, long line_number)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + msg),
        line(line_number) {}
  long line = 0;
};

// An event record names a location that is not in the topology.
struct LabelError : std::runtime_error {
  LabelError(const std::string& msg, long line_number)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + msg),
        line(line_number) {}
  long line = 0;
};

}  // namespace hawkesnet
