#pragma once

// Reference implementations used only by tests. They follow the textbook
// definitions literally (string fields, summed powers of two) and share no
// code with the library's bit-twiddling decoders.

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "f2p/f2p_codec.hpp"

namespace oracle {

inline std::string bits_of(unsigned long long value, int width) {
  std::string s;
  for (int i = width - 1; i >= 0; --i) s += ((value >> i) & 1ULL) ? '1' : '0';
  return s;
}

// Unsigned F2P magnitude given as an MSB-first string.
inline double f2p_value(const std::string& bits, int h, f2p::Flavor flavor) {
  const int n = static_cast<int>(bits.size());
  int len = 0;
  for (int i = 0; i < h; ++i) len = 2 * len + (bits[i] - '0');
  const std::string exp = bits.substr(h, len);
  const std::string mant = bits.substr(h + len);

  // V = sum_{i<len} (1 + e_i) 2^i, with e_0 the rightmost exponent bit.
  double v = 0;
  for (int i = 0; i < len; ++i) v += (1 + (exp[len - 1 - i] - '0')) * std::pow(2.0, i);
  double m = 0;
  for (std::size_t i = 0; i < mant.size(); ++i) m += (mant[i] - '0') * std::pow(2.0, -static_cast<double>(i + 1));

  const double val_max = std::pow(2.0, std::pow(2.0, h)) - 1;
  const bool up = flavor == f2p::Flavor::SR || flavor == f2p::Flavor::SI;
  const double e = up ? v : -v;
  const double e_min = up ? 0 : -(val_max - 1);
  double b = 0;
  switch (flavor) {
    case f2p::Flavor::SR: b = -0.5 * (val_max + 1); break;
    case f2p::Flavor::LR: b = 0.5 * (val_max - 1); break;
    case f2p::Flavor::SI: b = n - h - 1; break;
    case f2p::Flavor::LI: b = n - h - std::pow(2.0, h) + val_max - 1; break;
  }
  if (e == e_min) return std::pow(2.0, e + b + 1) * m;
  return std::pow(2.0, e + b) * (1 + m);
}

// IEEE-style minifloat with exponent offset 2^(e-1) and no special values.
inline double minifloat_value(unsigned long long pattern, int mant_bits, int exp_bits, bool is_signed) {
  const int mag_bits = mant_bits + exp_bits;
  const bool neg = is_signed && ((pattern >> mag_bits) & 1ULL);
  const double e = static_cast<double>((pattern >> mant_bits) & ((1ULL << exp_bits) - 1));
  const double frac = static_cast<double>(pattern & ((1ULL << mant_bits) - 1)) / std::pow(2.0, mant_bits);
  const double offset = std::pow(2.0, exp_bits - 1);
  const double mag = e == 0 ? std::pow(2.0, 1 - offset) * frac : std::pow(2.0, e - offset) * (1 + frac);
  return neg ? -mag : mag;
}

// Nearest by linear scan over sorted values; midpoint ties go to the even index.
inline std::size_t nearest_by_scan(const std::vector<double>& sorted, double x) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const double d = std::abs(sorted[i] - x);
    const double db = std::abs(sorted[best] - x);
    if (d < db || (d == db && i % 2 == 0)) best = i;
  }
  return best;
}

}  // namespace oracle
