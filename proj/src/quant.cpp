#include "f2p/quant.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

#include "f2p/errors.hpp"
#include "f2p/rng.hpp"

namespace f2p {

WeightVector::WeightVector(std::vector<double> values, std::string label)
    : values_(std::move(values)), label_(std::move(label)) {
  if (values_.empty()) throw DataError("weight vector is empty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) throw DataError("weight " + std::to_string(i) + " is not finite");
  }
}

WeightVector WeightVector::scaled(double c) const {
  std::vector<double> out(values_);
  for (auto& x : out) x *= c;
  return WeightVector(std::move(out), label_);
}

double scale_factor(const WeightVector& v, const Grid& grid) {
  if (grid.size() < 2) throw ContractError("grid needs at least two values");
  const auto [lo, hi] = std::minmax_element(v.values().begin(), v.values().end());
  if (*lo == *hi) return 1.0;
  return (*hi - *lo) / (grid.max() - grid.min());
}

QuantReport quantize_with_scale(const WeightVector& v, const Grid& grid, double scale) {
  if (!(scale > 0) || !std::isfinite(scale)) throw ContractError("quantization scale must be positive and finite");
  QuantReport r;
  r.format = format_name(grid.spec());
  r.scale = scale;
  r.quantized.reserve(v.size());
  r.errors.reserve(v.size());
  double sum = 0.0;
  for (double x : v.values()) {
    const double q = scale * grid.round(x / scale);
    const double err = std::abs(x - q);
    r.quantized.push_back(q);
    r.errors.push_back(err);
    sum += err * err;
  }
  r.mse = sum / static_cast<double>(v.size());
  return r;
}

QuantReport quantize(const WeightVector& v, const Grid& grid) {
  return quantize_with_scale(v, grid, scale_factor(v, grid));
}

WeightFormat parse_weight_format(std::string_view name) {
  if (name == "csv") return WeightFormat::Csv;
  if (name == "f32" || name == "raw-f32le") return WeightFormat::F32;
  throw DataError("unknown weight file format '" + std::string(name) + "' (expected csv|f32)");
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

WeightVector load_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string field = trim(line);
    if (field.empty() || field.front() == '#') continue;
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), x);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
      throw DataError(path.string() + ":" + std::to_string(lineno) + ": cannot parse '" + field + "' as a number");
    }
    if (!std::isfinite(x)) {
      throw DataError(path.string() + ":" + std::to_string(lineno) + ": non-finite value");
    }
    values.push_back(x);
  }
  if (values.empty()) throw DataError(path.string() + ": no values");
  return WeightVector(std::move(values), path.filename().string());
}

WeightVector load_f32(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::vector<char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (bytes.empty()) throw DataError(path.string() + ": no values");
  if (bytes.size() % 4 != 0) {
    throw DataError(path.string() + ": size " + std::to_string(bytes.size()) + " is not a multiple of 4");
  }
  std::vector<double> values(bytes.size() / 4);
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::uint32_t word = 0;
    for (int b = 3; b >= 0; --b) word = (word << 8) | static_cast<unsigned char>(bytes[4 * i + static_cast<std::size_t>(b)]);
    const float f = std::bit_cast<float>(word);
    if (!std::isfinite(f)) throw DataError(path.string() + ": value " + std::to_string(i) + " is not finite");
    values[i] = f;
  }
  return WeightVector(std::move(values), path.filename().string());
}

}  // namespace

WeightVector load_weights(const std::filesystem::path& path, WeightFormat fmt) {
  return fmt == WeightFormat::Csv ? load_csv(path) : load_f32(path);
}

void save_weights_f32(const std::filesystem::path& path, const WeightVector& v) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  for (double x : v.values()) {
    const auto word = std::bit_cast<std::uint32_t>(static_cast<float>(x));
    const char bytes[4] = {static_cast<char>(word & 0xff), static_cast<char>((word >> 8) & 0xff),
                           static_cast<char>((word >> 16) & 0xff), static_cast<char>(word >> 24)};
    out.write(bytes, 4);
  }
}

Distribution parse_distribution(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  Distribution d;
  if (kind == "gaussian" || kind == "normal") {
    d.kind = Distribution::Kind::Gaussian;
  } else if (kind == "uniform") {
    d.kind = Distribution::Kind::Uniform;
  } else if (kind == "lognormal") {
    d.kind = Distribution::Kind::LogNormal;
  } else {
    throw DataError("unknown distribution '" + std::string(text) + "' (expected gaussian:MU,SIGMA | uniform:A,B | lognormal:MU,SIGMA)");
  }
  if (colon == std::string_view::npos) {
    d.p1 = 0.0;
    d.p2 = 1.0;
  } else {
    const std::string_view args = text.substr(colon + 1);
    const auto comma = args.find(',');
    if (comma == std::string_view::npos) throw DataError("distribution '" + std::string(text) + "' needs two parameters");
    auto num = [&](std::string_view s) {
      double x = 0;
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
      if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        throw DataError("bad distribution parameter '" + std::string(s) + "'");
      }
      return x;
    };
    d.p1 = num(args.substr(0, comma));
    d.p2 = num(args.substr(comma + 1));
  }
  const bool ok = d.kind == Distribution::Kind::Uniform ? d.p1 < d.p2 : d.p2 > 0;
  if (!ok || !std::isfinite(d.p1) || !std::isfinite(d.p2)) {
    throw DataError("invalid parameters for distribution '" + std::string(text) + "'");
  }
  return d;
}

std::string distribution_name(const Distribution& d) {
  const char* kind = d.kind == Distribution::Kind::Gaussian ? "gaussian"
                     : d.kind == Distribution::Kind::Uniform ? "uniform"
                                                             : "lognormal";
  std::ostringstream os;
  os.precision(17);
  os << kind << ':' << d.p1 << ',' << d.p2;
  return os.str();
}

WeightVector synth_weights(const Distribution& dist, std::size_t n, std::uint64_t seed) {
  if (n < 1) throw DataError("synthetic vector length must be >= 1");
  Rng rng(seed);
  std::vector<double> values(n);
  for (auto& x : values) {
    switch (dist.kind) {
      case Distribution::Kind::Gaussian: x = dist.p1 + dist.p2 * rng.normal(); break;
      case Distribution::Kind::Uniform: x = dist.p1 + (dist.p2 - dist.p1) * rng.uniform(); break;
      case Distribution::Kind::LogNormal: x = std::exp(dist.p1 + dist.p2 * rng.normal()); break;
    }
  }
  return WeightVector(std::move(values), distribution_name(dist));
}

std::vector<QuantReportRow> quant_report(const WeightVector& v, const std::vector<FormatSpec>& formats) {
  if (formats.empty()) throw ContractError("quant_report needs at least one format");
  const int width = total_bits(formats.front());
  std::vector<QuantReportRow> rows;
  for (const auto& f : formats) {
    if (total_bits(f) != width) {
      throw ContractError("formats in one row must share a width: " + format_name(f) + " vs " +
                          std::to_string(width) + " bits");
    }
    const Grid grid(with_sign(f));
    const QuantReport q = quantize(v, grid);
    rows.push_back({format_name(f), q.scale, q.mse, 0.0, false});
  }
  double best = std::numeric_limits<double>::infinity();
  for (const auto& r : rows) best = std::min(best, r.mse);
  for (auto& r : rows) {
    r.normalized = best > 0 ? r.mse / best : (r.mse == 0 ? 1.0 : std::numeric_limits<double>::infinity());
    r.within_1pct = r.normalized <= 1.01;
  }
  return rows;
}

}  // namespace f2p
