#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace hawkesnet {

// Dense row-major matrix; node counts are small so no sparse storage.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  bool operator==(const Mat& other) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

// One timestamped occurrence at one network node. Time is in days since the
// stream origin.
struct Event {
  double time = 0.0;
  int node = 0;
};

// Time-ordered event sequence over a fixed node set and observation horizon.
struct EventLog {
  std::vector<Event> events;  // nondecreasing in time; ties keep input order
  double horizon = 0.0;       // observation end time T, days
  int node_count = 0;

  void validate() const;
};

// Node registry plus a symmetric adjacency mask restricting which influence
// entries may be nonzero. The diagonal is always true: self-excitation is
// always permitted.
struct Topology {
  int node_count = 0;
  std::vector<std::string> node_labels;
  std::vector<std::uint8_t> adjacency;  // row-major node_count x node_count

  bool allows(int i, int j) const {
    return adjacency[static_cast<std::size_t>(i) * node_count + j] != 0;
  }
  void set(int i, int j, bool value) {
    adjacency[static_cast<std::size_t>(i) * node_count + j] = value ? 1 : 0;
  }

  // All-pairs adjacency with labels "n00", "n01", ...
  static Topology full(int node_count);

  void validate() const;

  bool operator==(const Topology& other) const = default;
};

// phi(t) = beta * exp(-beta * t); integrates to 1 over [0, inf).
struct ExponentialKernel {
  double beta = 1.0;  // decay rate, 1/days

  double value(double dt) const { return beta * std::exp(-beta * dt); }
  double integral(double dt) const { return -std::expm1(-beta * dt); }

  bool operator==(const ExponentialKernel& other) const = default;
};

// Age beyond which one event's excitation falls below eps and may be dropped
// by bounded-memory implementations.
double truncation_horizon(double beta, double eps = 1e-8);

// Full parameterization of the network Hawkes process. alpha(i, j) is the
// influence of events at node j on the intensity at node i (row = receiver).
struct HawkesModel {
  std::vector<double> mu;  // background rates, events/day
  Mat alpha;
  ExponentialKernel kernel;
  Topology topology;

  int node_count() const { return static_cast<int>(mu.size()); }
  void validate() const;

  bool operator==(const HawkesModel& other) const = default;
};

// Largest eigenvalue modulus of a nonnegative matrix, by power iteration.
double spectral_radius(const Mat& m, int iterations = 200, double tol = 1e-10);

// Expected stationary per-node event rates, the fixed point of r = mu + A r.
// Throws StabilityError when the series fails to converge.
std::vector<double> stationary_rates(const HawkesModel& model);

}  // namespace hawkesnet
