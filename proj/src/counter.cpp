#include "f2p/counter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "f2p/errors.hpp"

namespace f2p {

EstimatorSequence::EstimatorSequence(std::vector<double> values, std::string source)
    : values_(std::move(values)), source_(std::move(source)) {
  if (values_.size() < 2) throw ContractError("estimator sequence needs at least two states");
  if (values_.front() != 0.0) throw ContractError("estimator sequence must start at 0");
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (!(values_[i] > values_[i - 1]) || !std::isfinite(values_[i])) {
      throw ContractError("estimator sequence must be finite and strictly increasing (index " +
                          std::to_string(i) + ")");
    }
  }
}

double EstimatorSequence::min_gap() const {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < values_.size(); ++i) gap = std::min(gap, values_[i] - values_[i - 1]);
  return gap;
}

EstimatorSequence sequence_from_grid(const Grid& grid) {
  const auto values = grid.values();
  const auto zero = std::lower_bound(values.begin(), values.end(), 0.0);
  if (zero == values.end() || *zero != 0.0) {
    throw ContractError("grid " + format_name(grid.spec()) + " does not contain 0");
  }
  return EstimatorSequence(std::vector<double>(zero, values.end()), format_name(grid.spec()));
}

namespace {

std::size_t states_for(int width) {
  if (width < 1 || width > 30) throw ContractError("counter width must be in 1..30");
  return std::size_t{1} << width;
}

double morris_value(double rate, double c) {
  if (rate == 0.0) return c;
  return std::expm1(c * std::log1p(rate)) / rate;
}

}  // namespace

EstimatorSequence morris_sequence(double a, int width) {
  if (!(a > 0)) throw ContractError("Morris parameter a must be positive");
  const double rate = 1.0 / a;
  std::vector<double> values(states_for(width));
  for (std::size_t c = 0; c < values.size(); ++c) values[c] = morris_value(rate, static_cast<double>(c));
  return EstimatorSequence(std::move(values), "Morris");
}

EstimatorSequence cedar_sequence(double delta, int width) {
  if (!(delta >= 0 && delta < 1)) throw ContractError("CEDAR delta must be in [0, 1)");
  const double growth = 2.0 * delta * delta;
  std::vector<double> values(states_for(width));
  for (std::size_t i = 1; i < values.size(); ++i) values[i] = values[i - 1] + 1.0 + growth * values[i - 1];
  return EstimatorSequence(std::move(values), "CEDAR");
}

std::string_view baseline_name(Baseline b) { return b == Baseline::Morris ? "Morris" : "CEDAR"; }

EstimatorSequence baseline_sequence(Baseline b, double parameter, int width) {
  if (b == Baseline::Morris) {
    return morris_sequence(parameter == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / parameter, width);
  }
  return cedar_sequence(parameter, width);
}

double baseline_top(Baseline b, double parameter, int width) {
  const double last = static_cast<double>(states_for(width) - 1);
  if (b == Baseline::Morris) return morris_value(parameter, last);
  const double growth = 2.0 * parameter * parameter;
  double a = 0.0;
  for (std::size_t i = 1; i < states_for(width); ++i) {
    a += 1.0 + growth * a;
    if (!std::isfinite(a)) break;
  }
  return a;
}

double calibrate(Baseline b, int width, double target_max) {
  if (!std::isfinite(target_max)) throw ContractError("calibration target must be finite");
  if (baseline_top(b, 0.0, width) >= target_max) return 0.0;

  // Admissible parameters: Morris 1/a in (0, 1e6], CEDAR delta in (0, 1).
  const double cap = b == Baseline::Morris ? 1e6 : std::nextafter(1.0, 0.0);
  double hi = 1e-6;
  while (baseline_top(b, hi, width) < target_max) {
    if (hi >= cap) {
      throw InfeasibleError(std::string(baseline_name(b)) + " cannot reach " + std::to_string(target_max) +
                            " with " + std::to_string(width) + " bits");
    }
    hi = std::min(hi * 2.0, cap);
  }
  double lo = 0.0;
  while (hi - lo > 1e-9 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (baseline_top(b, mid, width) >= target_max) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

CounterState increment(CounterState state, const EstimatorSequence& seq, Rng& rng) {
  if (state.index + 1 >= seq.size()) return state;
  const double gap = seq[state.index + 1] - seq[state.index];
  if (gap <= 1.0 || rng.bernoulli(1.0 / gap)) ++state.index;
  return state;
}

namespace {

void require_countable(const EstimatorSequence& seq) {
  if (seq.min_gap() < 1.0) {
    throw ContractError("sequence " + seq.source() + " has a gap below 1; probabilistic increments need gaps >= 1");
  }
}

// sum_{k=0}^{len-1} (c - k)^2
double squared_run(double c, double len) {
  return len * c * c - c * len * (len - 1.0) + (len - 1.0) * len * (2.0 * len - 1.0) / 6.0;
}

// One Monte Carlo trial. Instead of drawing each increment, draw how many
// increments the counter spends in its current state (geometric with success
// probability 1/gap) and add the squared errors of that run in closed form.
double one_trial(const EstimatorSequence& seq, std::uint64_t increments, Rng& rng) {
  const auto a = seq.values();
  const std::size_t top = a.size() - 1;
  const double total = static_cast<double>(increments);
  std::size_t state = 0;
  std::uint64_t done = 0;
  double sum = 0.0;
  while (done < increments) {
    const double t_next = static_cast<double>(done + 1);
    if (state == top) {
      sum += squared_run(a[top] - t_next, total - static_cast<double>(done));
      break;
    }
    const std::uint64_t run = rng.geometric(1.0 / (a[state + 1] - a[state]));
    // increments done+1 .. done+run-1 stay in `state`; increment done+run advances.
    const std::uint64_t stay = std::min<std::uint64_t>(run - 1, increments - done);
    sum += squared_run(a[state] - t_next, static_cast<double>(stay));
    done += stay;
    if (done == increments) break;
    ++state;
    ++done;
    const double err = a[state] - static_cast<double>(done);
    sum += err * err;
  }
  return sum / total;
}

}  // namespace

OnArrivalResult on_arrival_mse_mc(const EstimatorSequence& seq, std::uint64_t increments, std::uint64_t trials,
                                  std::uint64_t seed, unsigned threads) {
  if (increments < 1 || trials < 1) throw ContractError("on_arrival_mse_mc needs increments >= 1 and trials >= 1");
  require_countable(seq);

  std::vector<double> per_trial(trials);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, trials));
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t k = begin; k < end; ++k) {
      Rng rng = Rng::for_stream(seed, k);
      per_trial[k] = one_trial(seq, increments, rng);
    }
  };
  if (threads <= 1) {
    work(0, trials);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (trials + threads - 1) / threads;
    for (std::uint64_t begin = 0; begin < trials; begin += chunk) {
      pool.emplace_back(work, begin, std::min(trials, begin + chunk));
    }
  }

  // Reduce in trial order so the result is independent of scheduling.
  double mean = 0.0;
  for (double v : per_trial) mean += v;
  mean /= static_cast<double>(trials);
  double var = 0.0;
  for (double v : per_trial) var += (v - mean) * (v - mean);
  const double sd = trials > 1 ? std::sqrt(var / static_cast<double>(trials - 1)) : 0.0;

  OnArrivalResult r;
  r.increments = increments;
  r.mse = mean;
  r.std_error = sd / std::sqrt(static_cast<double>(trials));
  r.trials = trials;
  r.method = MseMethod::MonteCarlo;
  return r;
}

namespace {

// Propagates the state distribution through `increments` steps and calls
// visit(t, probabilities, reach) after each; only states 0..reach carry mass.
template <typename Visit>
void propagate(const EstimatorSequence& seq, std::uint64_t increments, std::uint64_t budget, Visit&& visit) {
  require_countable(seq);
  const std::size_t k = seq.size();
  if (increments < 1) throw ContractError("on-arrival DP needs increments >= 1");
  if (static_cast<double>(k) * static_cast<double>(increments) > static_cast<double>(budget)) {
    throw BudgetError("exact DP needs " + std::to_string(k) + " x " + std::to_string(increments) +
                      " state-steps, over the budget of " + std::to_string(budget) + "; use Monte Carlo");
  }
  const auto a = seq.values();
  std::vector<double> advance(k, 0.0);
  for (std::size_t i = 0; i + 1 < k; ++i) advance[i] = 1.0 / (a[i + 1] - a[i]);

  std::vector<double> prob(k, 0.0);
  prob[0] = 1.0;
  std::size_t reach = 0;
  for (std::uint64_t t = 1; t <= increments; ++t) {
    // Walk downward so prob[i+1] has already lost its own outflow.
    for (std::size_t i = std::min(reach, k - 2) + 1; i-- > 0;) {
      const double moved = prob[i] * advance[i];
      prob[i] -= moved;
      prob[i + 1] += moved;
    }
    reach = std::min(reach + 1, k - 1);
    visit(t, std::span<const double>(prob), reach);
  }
}

}  // namespace

OnArrivalResult on_arrival_mse_dp(const EstimatorSequence& seq, std::uint64_t increments, std::uint64_t budget) {
  const auto a = seq.values();
  double total = 0.0;
  propagate(seq, increments, budget, [&](std::uint64_t t, std::span<const double> prob, std::size_t reach) {
    const double truth = static_cast<double>(t);
    double step = 0.0;
    for (std::size_t i = 0; i <= reach; ++i) {
      const double err = a[i] - truth;
      step += prob[i] * err * err;
    }
    total += step;
  });
  OnArrivalResult r;
  r.increments = increments;
  r.mse = total / static_cast<double>(increments);
  r.method = MseMethod::Exact;
  return r;
}

ExactTrajectory exact_trajectory(const EstimatorSequence& seq, std::uint64_t increments, std::uint64_t budget) {
  const auto a = seq.values();
  ExactTrajectory out;
  out.mean_estimate.reserve(increments);
  out.saturation_prob.reserve(increments);
  propagate(seq, increments, budget, [&](std::uint64_t, std::span<const double> prob, std::size_t reach) {
    double mean = 0.0;
    for (std::size_t i = 0; i <= reach; ++i) mean += prob[i] * a[i];
    out.mean_estimate.push_back(mean);
    out.saturation_prob.push_back(prob.back());
  });
  return out;
}

std::vector<CounterReportRow> counter_report(const CounterReportConfig& config) {
  std::vector<CounterReportRow> rows;
  for (int width : config.widths) {
    if (width < 6 || width > 20) throw ContractError("counter widths must be in 6..20, got " + std::to_string(width));

    const Grid li(F2PSpec(width, config.hyper_bits, Flavor::LI));
    const double target = config.target == TargetFlavor::LI
                              ? li.max()
                              : Grid(F2PSpec(width, config.hyper_bits, Flavor::LR)).max();
    const auto increments = static_cast<std::uint64_t>(std::floor(target));

    struct Candidate {
      std::string name;
      double parameter;
      EstimatorSequence seq;
    };
    std::vector<Candidate> counters;
    counters.push_back({"F2P-LI^" + std::to_string(config.hyper_bits), 0.0, sequence_from_grid(li)});
    for (Baseline b : {Baseline::Cedar, Baseline::Morris}) {
      const double p = calibrate(b, width, target);
      counters.push_back({std::string(baseline_name(b)), p, baseline_sequence(b, p, width)});
    }
    counters.push_back({"SEAD", 0.0, sequence_from_grid(sead_grid(width))});

    const std::size_t first = rows.size();
    for (auto& c : counters) {
      CounterReportRow e;
      e.width = width;
      e.counter = c.name;
      e.parameter = c.parameter;
      e.target_max = target;
      e.result = config.method == MseMethod::Exact
                     ? on_arrival_mse_dp(c.seq, increments, config.dp_budget)
                     : on_arrival_mse_mc(c.seq, increments, config.trials, config.seed, config.threads);
      rows.push_back(std::move(e));
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = first; i < rows.size(); ++i) best = std::min(best, rows[i].result.mse);
    for (std::size_t i = first; i < rows.size(); ++i) {
      const double mse = rows[i].result.mse;
      rows[i].normalized = best > 0 ? mse / best : (mse == 0 ? 1.0 : std::numeric_limits<double>::infinity());
    }
  }
  return rows;
}

}  // namespace f2p
