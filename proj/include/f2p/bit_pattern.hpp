#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace f2p {

/// Raw N-bit stored form of a number. `bits` never exceeds 2^width - 1.
class BitPattern {
 public:
  static constexpr int kMaxWidth = 64;

  BitPattern(int width, std::uint64_t bits);

  /// Parses a string of '0'/'1' characters, MSB first. Spaces are ignored so
  /// that "01 0 001" style groupings are accepted.
  static BitPattern parse(std::string_view text);

  int width() const noexcept { return width_; }
  std::uint64_t bits() const noexcept { return bits_; }
  bool bit(int i) const noexcept { return (bits_ >> i) & 1u; }
  std::string str() const;

  friend bool operator==(const BitPattern&, const BitPattern&) = default;

 private:
  int width_;
  std::uint64_t bits_;
};

/// A (possibly empty) bit string, as carved out of a pattern.
struct BitField {
  std::uint64_t bits = 0;
  int length = 0;

  std::string str() const;
  friend bool operator==(const BitField&, const BitField&) = default;
};

BitField make_field(std::string_view text);

constexpr std::uint64_t low_mask(int n) noexcept {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

/// Exact binary rational (-1)^negative * mantissa * 2^exponent, kept normalized
/// (odd mantissa, or mantissa == 0 with exponent == 0 and negative == false).
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(std::uint64_t mantissa, int exponent, bool negative = false);

  std::uint64_t mantissa() const noexcept { return mantissa_; }
  int exponent() const noexcept { return exponent_; }
  bool negative() const noexcept { return negative_; }
  bool is_zero() const noexcept { return mantissa_ == 0; }

  Dyadic operator-() const { return Dyadic(mantissa_, exponent_, !negative_); }

  /// Nearest double; exact whenever mantissa fits in 53 bits and the
  /// exponent is inside the double range.
  double to_double() const;

  /// Full decimal expansion, no rounding ("0.00048828125", "-31744").
  std::string to_decimal() const;

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  std::uint64_t mantissa_ = 0;
  int exponent_ = 0;
  bool negative_ = false;
};

}  // namespace f2p
