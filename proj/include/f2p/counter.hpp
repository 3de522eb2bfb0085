#pragma once

// Approximate counters under the on-arrival model.
//
// Every counter here is a strictly increasing estimator sequence
// A_0 = 0 < A_1 < ... < A_{K-1}. An increment in state i advances to i+1 with
// probability 1/(A_{i+1} - A_i) and otherwise stays, so the estimate A_state
// is unbiased until the counter saturates at the top state, where further
// increments are ignored. After each of S increments the estimate C_t is
// compared with the true count t; the reported metric is (1/S) sum (C_t - t)^2.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "f2p/format_spec.hpp"
#include "f2p/grid.hpp"
#include "f2p/rng.hpp"

namespace f2p {

class EstimatorSequence {
 public:
  /// Throws ContractError unless values start at 0 and strictly increase.
  EstimatorSequence(std::vector<double> values, std::string source);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double top() const noexcept { return values_.back(); }
  const std::string& source() const noexcept { return source_; }

  /// Smallest A_{i+1} - A_i; probabilistic increments need it to be >= 1.
  double min_gap() const;

 private:
  std::vector<double> values_;
  std::string source_;
};

/// Nonnegative grid values, ascending. Throws ContractError if 0 is missing.
EstimatorSequence sequence_from_grid(const Grid& grid);

/// A_c = a((1 + 1/a)^c - 1), c = 0..2^width-1. a = +inf gives A_c = c.
EstimatorSequence morris_sequence(double a, int width);

/// A_0 = 0, A_{i+1} = A_i + 1 + 2 delta^2 A_i, i = 0..2^width-2.
EstimatorSequence cedar_sequence(double delta, int width);

enum class Baseline { Morris, Cedar };

std::string_view baseline_name(Baseline b);

/// Range-controlling parameter of a baseline: 1/a for Morris, delta for CEDAR.
/// Both sequences grow strictly with it.
EstimatorSequence baseline_sequence(Baseline b, double parameter, int width);
double baseline_top(Baseline b, double parameter, int width);

/// Smallest parameter whose top estimate A_{K-1} reaches target_max, found by
/// bisection to 1e-9 relative tolerance. Returns 0 when plain integer counting
/// already reaches the target. Throws InfeasibleError when no admissible
/// parameter does.
double calibrate(Baseline b, int width, double target_max);

struct CounterState {
  std::size_t index = 0;
};

/// One on-arrival increment; saturates silently at the top state.
CounterState increment(CounterState state, const EstimatorSequence& seq, Rng& rng);

enum class MseMethod { MonteCarlo, Exact };

struct OnArrivalResult {
  std::uint64_t increments = 0;
  double mse = 0.0;
  double std_error = 0.0;  // Monte Carlo only
  std::uint64_t trials = 0;
  MseMethod method = MseMethod::MonteCarlo;
};

/// Monte Carlo estimate of the on-arrival MSE. Trial k draws from
/// Rng::for_stream(seed, k), so results do not depend on `threads`
/// (0 picks the hardware concurrency).
OnArrivalResult on_arrival_mse_mc(const EstimatorSequence& seq, std::uint64_t increments, std::uint64_t trials,
                                  std::uint64_t seed, unsigned threads = 0);

inline constexpr std::uint64_t kDefaultDpBudget = std::uint64_t{1} << 31;

/// Exact expected on-arrival MSE by propagating the state distribution.
/// Throws BudgetError when K * S exceeds `budget` state-steps.
OnArrivalResult on_arrival_mse_dp(const EstimatorSequence& seq, std::uint64_t increments,
                                  std::uint64_t budget = kDefaultDpBudget);

/// Per-step moments from the same propagation: element t-1 describes the
/// counter after t increments.
struct ExactTrajectory {
  std::vector<double> mean_estimate;       // E[A_state]
  std::vector<double> saturation_prob;     // P(state == K-1)
};
ExactTrajectory exact_trajectory(const EstimatorSequence& seq, std::uint64_t increments,
                                 std::uint64_t budget = kDefaultDpBudget);

enum class TargetFlavor { LI, LR };

struct CounterReportConfig {
  std::vector<int> widths;
  int hyper_bits = 2;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  TargetFlavor target = TargetFlavor::LI;
  MseMethod method = MseMethod::MonteCarlo;
  std::uint64_t dp_budget = kDefaultDpBudget;
  unsigned threads = 0;
};

struct CounterReportRow {
  int width = 0;
  std::string counter;    // "F2P-LI^H", "CEDAR", "Morris", "SEAD"
  double parameter = 0;   // delta for CEDAR, 1/a for Morris, 0 otherwise
  double target_max = 0;
  OnArrivalResult result;
  double normalized = 0;  // mse / row minimum
};

/// For each width: calibrate the baselines to the F2P top value, count to it
/// with all four counters and normalize each row by its smallest MSE.
std::vector<CounterReportRow> counter_report(const CounterReportConfig& config);

}  // namespace f2p
