#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "f2p/format_spec.hpp"

namespace f2p {

/// Every real value a format can represent, sorted ascending, with the
/// pattern <-> value maps. Values are distinct; in signed formats the -0
/// pattern maps onto the same grid point as +0.
class Grid {
 public:
  static constexpr int kMaxEnumerationBits = 24;

  /// Decodes all 2^N patterns. Throws BudgetError when N exceeds
  /// kMaxEnumerationBits and ContractError if two patterns collide on a
  /// nonzero value.
  explicit Grid(FormatSpec spec);

  const FormatSpec& spec() const noexcept { return spec_; }
  int width() const noexcept { return total_bits(spec_); }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double min() const noexcept { return values_.front(); }
  double max() const noexcept { return values_.back(); }

  double value_at(std::size_t index) const { return values_.at(index); }
  BitPattern pattern_at(std::size_t index) const;
  std::size_t index_of(const BitPattern& p) const;
  double value_of(const BitPattern& p) const { return values_[index_of(p)]; }

  /// Index of the grid value nearest to x after clamping to [min, max].
  /// An exact midpoint goes to whichever neighbour has the even index.
  /// Throws DomainError for NaN or infinite x.
  std::size_t nearest_index(double x) const;
  BitPattern encode_nearest(double x) const { return pattern_at(nearest_index(x)); }
  double round(double x) const { return values_[nearest_index(x)]; }

  /// Pattern of the next larger value, or nullopt at the maximum.
  std::optional<BitPattern> successor(const BitPattern& p) const;

 private:
  FormatSpec spec_;
  std::vector<double> values_;
  std::vector<std::uint32_t> patterns_;          // by grid index
  std::vector<std::uint32_t> index_of_pattern_;  // by raw pattern
};

inline Grid enumerate_grid(const F2PSpec& spec) { return Grid(spec); }
Grid int_grid(int bits, bool is_signed);
Grid sead_grid(int bits);

// One-shot conveniences; build a Grid once when encoding many values.
BitPattern encode_nearest(double x, const FormatSpec& spec);
std::optional<BitPattern> successor(const BitPattern& p, const FormatSpec& spec);

}  // namespace f2p
