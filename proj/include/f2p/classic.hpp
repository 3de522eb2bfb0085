#pragma once

// Reference formats the F2P grids are compared against: plain integers,
// xMyE minifloats with subnormals, and a dynamic-SEAD counter layout.
//
// All signed variants use sign-magnitude with the MSB as sign. Minifloats
// have no Inf/NaN: the all-ones exponent encodes ordinary values.

#include <string_view>

#include "f2p/bit_pattern.hpp"

namespace f2p {

enum class ClassicKind { Int, Fp, Sead };

class ClassicSpec {
 public:
  static ClassicSpec integer(int total_bits, bool is_signed);
  static ClassicSpec minifloat(int mant_bits, int exp_bits, bool is_signed);
  static ClassicSpec sead(int total_bits, bool is_signed = false);

  ClassicKind kind() const noexcept { return kind_; }
  int total_bits() const noexcept { return total_bits_; }
  int mant_bits() const noexcept { return mant_bits_; }
  int exp_bits() const noexcept { return exp_bits_; }
  bool is_signed() const noexcept { return signed_; }
  int magnitude_bits() const noexcept { return signed_ ? total_bits_ - 1 : total_bits_; }

  /// Minifloat bias, -2^(exp_bits-1).
  int fp_bias() const noexcept { return -(1 << (exp_bits_ - 1)); }

  friend bool operator==(const ClassicSpec&, const ClassicSpec&) = default;

 private:
  ClassicSpec(ClassicKind kind, int total, int mant, int exp, bool is_signed)
      : kind_(kind), total_bits_(total), mant_bits_(mant), exp_bits_(exp), signed_(is_signed) {}

  ClassicKind kind_;
  int total_bits_;
  int mant_bits_;
  int exp_bits_;
  bool signed_;
};

/// Named benchmark formats: 2M5E 3M4E 4M3E 5M2E FP16 BF16 TF32 INT8 INT16
/// INT19 (case-insensitive). All presets are signed. Throws LookupError.
ClassicSpec preset(std::string_view name);

Dyadic fp_decode_exact(const BitPattern& p, const ClassicSpec& spec);
double fp_decode(const BitPattern& p, const ClassicSpec& spec);

Dyadic int_decode_exact(const BitPattern& p, const ClassicSpec& spec);

/// SEAD layout on a w-bit magnitude: level l is l leading ones, a zero
/// terminator and a (w-l-1)-bit mantissa counted in steps of 2^l; the top
/// level w-1 drops the terminator and keeps a 1-bit mantissa. Every level
/// below the top starts where the previous one ended.
Dyadic sead_decode_exact(const BitPattern& p, const ClassicSpec& spec);

Dyadic decode_exact(const BitPattern& p, const ClassicSpec& spec);

}  // namespace f2p
