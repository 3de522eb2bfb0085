#pragma once

// Floating-floating-point codec.
//
// An F2P magnitude of width N' is laid out MSB first as
//
//   [ hyper : H bits ][ exponent : l bits ][ mantissa : N' - H - l bits ]
//
// where l is the unsigned value of the hyper field (0 <= l <= 2^H - 1). The
// exponent vector uses prefix encoding: an l-bit vector e stands for
// (2^l - 1) + bin(e), so vectors of different lengths never collide. The
// flavor fixes the sign applied to that value and the bias. Signed formats
// prepend one sign bit to the magnitude.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "f2p/bit_pattern.hpp"

namespace f2p {

enum class Flavor { SR, LR, SI, LI };

std::string_view flavor_name(Flavor f);  // "sr", "lr", "si", "li"
Flavor parse_flavor(std::string_view name);

/// +1 for SR/SI, -1 for LR/LI.
constexpr int exponent_sign(Flavor f) noexcept {
  return (f == Flavor::SR || f == Flavor::SI) ? 1 : -1;
}

/// Number of distinct exponent codes over all lengths 0..2^H-1: 2^(2^H) - 1.
std::uint64_t val_max(int hyper_bits);

class F2PSpec {
 public:
  static constexpr int kMaxHyperBits = 3;

  /// `total_bits` includes the sign bit when `is_signed`.
  F2PSpec(int total_bits, int hyper_bits, Flavor flavor, bool is_signed = false);

  int total_bits() const noexcept { return total_bits_; }
  int hyper_bits() const noexcept { return hyper_bits_; }
  Flavor flavor() const noexcept { return flavor_; }
  bool is_signed() const noexcept { return signed_; }

  int magnitude_bits() const noexcept { return signed_ ? total_bits_ - 1 : total_bits_; }
  int max_exp_len() const noexcept { return (1 << hyper_bits_) - 1; }
  std::uint64_t val_max() const { return f2p::val_max(hyper_bits_); }
  /// Smallest signed exponent E: 0 for SR/SI, -(val_max-1) for LR/LI.
  std::int64_t min_exponent() const;

  friend bool operator==(const F2PSpec&, const F2PSpec&) = default;

 private:
  int total_bits_;
  int hyper_bits_;
  Flavor flavor_;
  bool signed_;
};

struct FieldSplit {
  BitField hyper;
  BitField exp;
  BitField mant;

  int exp_len() const noexcept { return exp.length; }
  friend bool operator==(const FieldSplit&, const FieldSplit&) = default;
};

/// Splits a magnitude pattern (sign already stripped) into its three fields.
/// Throws ContractError when the width is not the magnitude width.
FieldSplit split_fields(const BitPattern& magnitude, const F2PSpec& spec);

/// Prefix-encoded exponent value V = (2^l - 1) + bin(exp).
std::uint64_t exponent_value(const BitField& exp);

/// Inverse of exponent_value for exponents of an H-bit hyper field.
/// Throws RangeError when value >= val_max(hyper_bits).
BitField exponent_encode(std::uint64_t value, int hyper_bits);

std::int64_t bias(const F2PSpec& spec);

/// Exact value of a full pattern (sign bit included when the spec is signed).
Dyadic decode_exact(const BitPattern& p, const F2PSpec& spec);
double decode(const BitPattern& p, const F2PSpec& spec);

}  // namespace f2p
