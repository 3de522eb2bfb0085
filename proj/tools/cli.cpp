#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

#include "f2p/counter.hpp"
#include "f2p/errors.hpp"
#include "f2p/format_spec.hpp"
#include "f2p/grid.hpp"
#include "f2p/quant.hpp"
#include "f2p/report.hpp"

namespace f2p::cli {
namespace {

struct GridArgs {
  std::string format;
};

struct CounterArgs {
  std::vector<int> widths;
  int hyper_bits = 2;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::string target = "li";
  bool exact = false;
  unsigned threads = 0;
  std::uint64_t dp_budget = kDefaultDpBudget;
};

struct QuantizeArgs {
  std::string input;
  std::string infmt = "csv";
  std::string synth;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> formats;
};

Table grid_table(const FormatSpec& spec) {
  const Grid grid(spec);
  const auto* f2p_spec = std::get_if<F2PSpec>(&spec);
  const auto* classic = std::get_if<ClassicSpec>(&spec);
  const bool fp = classic && classic->kind() == ClassicKind::Fp;

  std::vector<std::string> columns = {"index", "pattern", "value"};
  if (is_signed(spec) && (f2p_spec || fp)) columns.push_back("sign");
  if (f2p_spec) columns.push_back("hyper");
  if (f2p_spec || fp) {
    columns.push_back("exp");
    columns.push_back("mant");
  }
  Table table("f2p.grid/1", columns);

  // One row per pattern, ordered by value; in signed formats both zeros appear.
  const int n = grid.width();
  std::vector<std::pair<std::size_t, std::uint64_t>> order;
  order.reserve(std::size_t{1} << n);
  for (std::uint64_t p = 0; p < (std::uint64_t{1} << n); ++p) order.emplace_back(grid.index_of(BitPattern(n, p)), p);
  std::sort(order.begin(), order.end());

  for (const auto& [index, bits] : order) {
    const BitPattern p(n, bits);
    std::vector<Cell> row = {static_cast<std::int64_t>(index), p.str(), RawNumber{decode_exact(p, spec).to_decimal()}};
    if (f2p_spec) {
      const int w = f2p_spec->magnitude_bits();
      if (f2p_spec->is_signed()) row.emplace_back(std::string(p.bit(w) ? "1" : "0"));
      const FieldSplit fields = split_fields(BitPattern(w, bits & low_mask(w)), *f2p_spec);
      row.emplace_back(fields.hyper.str());
      row.emplace_back(fields.exp.str());
      row.emplace_back(fields.mant.str());
    } else if (fp) {
      const int w = classic->magnitude_bits();
      const int m = classic->mant_bits();
      if (classic->is_signed()) row.emplace_back(std::string(p.bit(w) ? "1" : "0"));
      row.emplace_back(BitField{(bits & low_mask(w)) >> m, classic->exp_bits()}.str());
      row.emplace_back(BitField{bits & low_mask(m), m}.str());
    }
    table.add_row(std::move(row));
  }
  return table;
}

Table counter_table(const CounterArgs& a) {
  CounterReportConfig config;
  config.widths = a.widths;
  config.hyper_bits = a.hyper_bits;
  config.trials = a.trials;
  config.seed = a.seed;
  config.target = a.target == "lr" ? TargetFlavor::LR : TargetFlavor::LI;
  config.method = a.exact ? MseMethod::Exact : MseMethod::MonteCarlo;
  config.dp_budget = a.dp_budget;
  config.threads = a.threads;

  Table table("f2p.counter/1", {"width", "counter", "parameter", "target_max", "increments", "method", "trials",
                                "mse", "std_error", "normalized"});
  for (const auto& e : counter_report(config)) {
    table.add_row({static_cast<std::int64_t>(e.width), e.counter, e.parameter, e.target_max,
                   static_cast<std::int64_t>(e.result.increments),
                   std::string(e.result.method == MseMethod::Exact ? "dp" : "mc"),
                   static_cast<std::int64_t>(e.result.trials), e.result.mse, e.result.std_error, e.normalized});
  }
  return table;
}

Table quantize_table(const QuantizeArgs& a, bool from_file) {
  const WeightVector weights = from_file ? load_weights(a.input, parse_weight_format(a.infmt))
                                         : synth_weights(parse_distribution(a.synth), a.n, a.seed);
  std::vector<FormatSpec> formats;
  for (const auto& f : a.formats) formats.push_back(parse_format(f));

  Table table("f2p.quantize/1", {"input", "format", "scale", "mse", "normalized", "within_1pct"});
  for (const auto& e : quant_report(weights, formats)) {
    table.add_row({weights.label(), e.format, e.scale, e.mse, e.normalized, e.within_1pct});
  }
  return table;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Floating-floating-point grids, approximate counters and quantization error reports", "f2p"};
  app.require_subcommand(1);
  std::string out_format = "csv";

  GridArgs grid_args;
  auto* grid = app.add_subcommand("grid", "Dump every value of a number format");
  grid->add_option("--format", grid_args.format, "Format spec, e.g. f2p-li-2:6, 5m2e:8, int:8")->required();

  CounterArgs counter_args;
  auto* counter = app.add_subcommand("counter", "On-arrival MSE of F2P-LI against Morris, CEDAR and SEAD");
  counter->set_help_flag("--help", "Print this help message and exit");
  counter->add_option("--width", counter_args.widths, "Counter width(s) in bits, 6..20")
      ->required()
      ->delimiter(',');
  counter->add_option("--h", counter_args.hyper_bits, "Hyper-exp bits of the F2P counter")->capture_default_str();
  counter->add_option("--trials", counter_args.trials, "Monte Carlo trials")->capture_default_str();
  counter->add_option("--seed", counter_args.seed, "RNG seed")->required();
  counter->add_option("--target-flavor", counter_args.target, "Flavor whose top value sets the range")
      ->check(CLI::IsMember({"li", "lr"}))
      ->capture_default_str();
  counter->add_flag("--exact", counter_args.exact, "Use the exact dynamic-programming evaluation");
  counter->add_option("--threads", counter_args.threads, "Worker threads (0 = all cores)");
  counter->add_option("--dp-budget", counter_args.dp_budget, "State-step budget for --exact")->capture_default_str();

  QuantizeArgs quant_args;
  auto* quant = app.add_subcommand("quantize", "Min-max quantization MSE across formats");
  auto* input = quant->add_option("--input", quant_args.input, "Weight file");
  quant->add_option("--infmt", quant_args.infmt, "Weight file format")
      ->check(CLI::IsMember({"csv", "f32"}))
      ->capture_default_str();
  auto* synth = quant->add_option("--synth", quant_args.synth, "gaussian:MU,SIGMA | uniform:A,B | lognormal:MU,SIGMA");
  auto* synth_n = quant->add_option("--n", quant_args.n, "Synthetic vector length");
  auto* synth_seed = quant->add_option("--seed", quant_args.seed, "RNG seed for --synth");
  quant->add_option("--formats", quant_args.formats, "Comma-separated format specs of one width")
      ->required()
      ->delimiter(',');
  input->excludes(synth);
  synth->needs(synth_n);
  synth->needs(synth_seed);

  for (auto* sub : {grid, counter, quant}) {
    sub->add_option("--out", out_format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  }

  std::vector<const char*> argv = {"f2p"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    std::optional<Table> table;
    if (grid->parsed()) {
      table = grid_table(parse_format(grid_args.format));
    } else if (counter->parsed()) {
      table = counter_table(counter_args);
    } else {
      const bool from_file = input->count() > 0;
      if (from_file == (synth->count() > 0)) {
        err << "error: quantize needs exactly one of --input or --synth\n";
        return kUsage;
      }
      table = quantize_table(quant_args, from_file);
    }
    // Render fully before writing so a late failure leaves stdout empty.
    std::ostringstream buffer;
    if (out_format == "json") {
      table->write_json(buffer);
    } else {
      table->write_csv(buffer);
    }
    out << buffer.str();
    return kOk;
  } catch (const LookupError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return kInputData;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return kResource;
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << "\n";
    return kResource;
  }
}

}  // namespace f2p::cli
