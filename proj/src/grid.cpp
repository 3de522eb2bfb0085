#include "f2p/grid.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "f2p/errors.hpp"

namespace f2p {

Grid::Grid(FormatSpec spec) : spec_(std::move(spec)) {
  const int n = width();
  if (n > kMaxEnumerationBits) {
    throw BudgetError("refusing to enumerate a " + std::to_string(n) + "-bit format (limit " +
                      std::to_string(kMaxEnumerationBits) + " bits)");
  }
  const std::uint32_t count = std::uint32_t{1} << n;

  std::vector<std::pair<double, std::uint32_t>> decoded(count);
  for (std::uint32_t p = 0; p < count; ++p) {
    decoded[p] = {decode_exact(BitPattern(n, p), spec_).to_double(), p};
  }
  std::sort(decoded.begin(), decoded.end());

  values_.reserve(count);
  patterns_.reserve(count);
  index_of_pattern_.assign(count, 0);
  for (const auto& [value, pattern] : decoded) {
    if (!values_.empty() && values_.back() == value) {
      if (value != 0.0 || !is_signed(spec_)) {
        throw ContractError("format " + format_name(spec_) + " maps two patterns to value " +
                            std::to_string(value));
      }
      // -0 sorts after +0 (larger raw pattern); keep +0 as the canonical point.
      index_of_pattern_[pattern] = static_cast<std::uint32_t>(values_.size() - 1);
      continue;
    }
    index_of_pattern_[pattern] = static_cast<std::uint32_t>(values_.size());
    values_.push_back(value);
    patterns_.push_back(pattern);
  }
}

BitPattern Grid::pattern_at(std::size_t index) const { return BitPattern(width(), patterns_.at(index)); }

std::size_t Grid::index_of(const BitPattern& p) const {
  if (p.width() != width()) {
    throw ContractError("pattern width " + std::to_string(p.width()) + " != grid width " + std::to_string(width()));
  }
  return index_of_pattern_[p.bits()];
}

std::size_t Grid::nearest_index(double x) const {
  if (!std::isfinite(x)) throw DomainError("cannot encode a non-finite value");
  if (x <= values_.front()) return 0;
  if (x >= values_.back()) return values_.size() - 1;
  const auto it = std::lower_bound(values_.begin(), values_.end(), x);
  const auto hi = static_cast<std::size_t>(it - values_.begin());
  if (*it == x) return hi;
  const std::size_t lo = hi - 1;
  const double below = x - values_[lo];
  const double above = values_[hi] - x;
  if (below < above) return lo;
  if (above < below) return hi;
  return (lo % 2 == 0) ? lo : hi;
}

std::optional<BitPattern> Grid::successor(const BitPattern& p) const {
  const std::size_t i = index_of(p);
  if (i + 1 >= values_.size()) return std::nullopt;
  return pattern_at(i + 1);
}

Grid int_grid(int bits, bool is_signed) { return Grid(ClassicSpec::integer(bits, is_signed)); }

Grid sead_grid(int bits) { return Grid(ClassicSpec::sead(bits)); }

BitPattern encode_nearest(double x, const FormatSpec& spec) { return Grid(spec).encode_nearest(x); }

std::optional<BitPattern> successor(const BitPattern& p, const FormatSpec& spec) { return Grid(spec).successor(p); }

}  // namespace f2p
