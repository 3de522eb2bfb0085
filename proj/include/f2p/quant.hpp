#pragma once

// Min-max quantization onto an arbitrary grid:
//   s   = (max V - min V) / (F_max - F_min)
//   v^F = s * round_to_grid(v / s)
// with err_i = |v_i - v^F_i| and MSE the mean of err_i^2.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "f2p/format_spec.hpp"
#include "f2p/grid.hpp"

namespace f2p {

class WeightVector {
 public:
  /// Throws DataError when empty or when any entry is not finite.
  explicit WeightVector(std::vector<double> values, std::string label = {});

  const std::vector<double>& values() const noexcept { return values_; }
  const std::string& label() const noexcept { return label_; }
  std::size_t size() const noexcept { return values_.size(); }
  WeightVector scaled(double c) const;

 private:
  std::vector<double> values_;
  std::string label_;
};

struct QuantReport {
  std::string format;
  double scale = 1.0;
  std::vector<double> quantized;
  std::vector<double> errors;
  double mse = 0.0;
};

/// Returns 1 for a constant vector.
double scale_factor(const WeightVector& v, const Grid& grid);

QuantReport quantize(const WeightVector& v, const Grid& grid);
/// Same as quantize() with the scale supplied by the caller.
QuantReport quantize_with_scale(const WeightVector& v, const Grid& grid, double scale);

enum class WeightFormat { Csv, F32 };

WeightFormat parse_weight_format(std::string_view name);  // "csv" | "f32"

/// csv: one decimal number per line (blank lines skipped).
/// f32: packed little-endian IEEE binary32.
/// Throws DataError naming the file (and line for csv).
WeightVector load_weights(const std::filesystem::path& path, WeightFormat fmt);
void save_weights_f32(const std::filesystem::path& path, const WeightVector& v);

struct Distribution {
  enum class Kind { Gaussian, Uniform, LogNormal } kind = Kind::Gaussian;
  double p1 = 0.0;  // mu | a
  double p2 = 1.0;  // sigma | b
};

/// "gaussian:MU,SIGMA" | "uniform:A,B" | "lognormal:MU,SIGMA". Throws DataError.
Distribution parse_distribution(std::string_view text);
std::string distribution_name(const Distribution& d);

WeightVector synth_weights(const Distribution& dist, std::size_t n, std::uint64_t seed);

struct QuantReportRow {
  std::string format;
  double scale = 0.0;
  double mse = 0.0;
  double normalized = 0.0;
  bool within_1pct = false;
};

/// MSE per format normalized by the row minimum. Formats must share a total
/// width. Each format is quantized through its signed variant (with_sign).
std::vector<QuantReportRow> quant_report(const WeightVector& v, const std::vector<FormatSpec>& formats);

}  // namespace f2p
