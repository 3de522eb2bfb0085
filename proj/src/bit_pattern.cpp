#include "f2p/bit_pattern.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <vector>

#include "f2p/errors.hpp"

namespace f2p {

BitPattern::BitPattern(int width, std::uint64_t bits) : width_(width), bits_(bits) {
  if (width < 1 || width > kMaxWidth) {
    throw ContractError("bit pattern width must be in 1..64, got " + std::to_string(width));
  }
  if ((bits & ~low_mask(width)) != 0) {
    throw ContractError("bit pattern value does not fit in " + std::to_string(width) + " bits");
  }
}

BitPattern BitPattern::parse(std::string_view text) {
  BitField f = make_field(text);
  if (f.length == 0) throw ContractError("empty bit pattern");
  return BitPattern(f.length, f.bits);
}

std::string BitPattern::str() const { return BitField{bits_, width_}.str(); }

std::string BitField::str() const {
  std::string out(static_cast<std::size_t>(length), '0');
  for (int i = 0; i < length; ++i) {
    if ((bits >> i) & 1u) out[static_cast<std::size_t>(length - 1 - i)] = '1';
  }
  return out;
}

BitField make_field(std::string_view text) {
  BitField f;
  for (char c : text) {
    if (c == ' ' || c == '_') continue;
    if (c != '0' && c != '1') throw ContractError("bit string may only contain 0 and 1");
    if (f.length == 64) throw ContractError("bit string longer than 64 bits");
    f.bits = (f.bits << 1) | static_cast<std::uint64_t>(c - '0');
    ++f.length;
  }
  return f;
}

Dyadic::Dyadic(std::uint64_t mantissa, int exponent, bool negative)
    : mantissa_(mantissa), exponent_(exponent), negative_(negative) {
  if (mantissa_ == 0) {
    exponent_ = 0;
    negative_ = false;
    return;
  }
  int tz = std::countr_zero(mantissa_);
  mantissa_ >>= tz;
  exponent_ += tz;
}

double Dyadic::to_double() const {
  double v = std::ldexp(static_cast<double>(mantissa_), exponent_);
  return negative_ ? -v : v;
}

namespace {

// Little-endian base-1e9 limbs.
using BigDec = std::vector<std::uint32_t>;
constexpr std::uint32_t kLimb = 1000000000u;

void mul_small(BigDec& n, std::uint32_t k) {
  std::uint64_t carry = 0;
  for (auto& limb : n) {
    std::uint64_t cur = std::uint64_t{limb} * k + carry;
    limb = static_cast<std::uint32_t>(cur % kLimb);
    carry = cur / kLimb;
  }
  while (carry) {
    n.push_back(static_cast<std::uint32_t>(carry % kLimb));
    carry /= kLimb;
  }
}

std::string to_string(const BigDec& n) {
  std::string out = std::to_string(n.back());
  char buf[16];
  for (std::size_t i = n.size() - 1; i-- > 0;) {
    std::snprintf(buf, sizeof buf, "%09u", n[i]);
    out += buf;
  }
  return out;
}

}  // namespace

std::string Dyadic::to_decimal() const {
  BigDec n;
  std::uint64_t m = mantissa_;
  do {
    n.push_back(static_cast<std::uint32_t>(m % kLimb));
    m /= kLimb;
  } while (m);

  std::string digits;
  if (exponent_ >= 0) {
    for (int i = 0; i < exponent_; ++i) mul_small(n, 2);
    digits = to_string(n);
  } else {
    // m * 2^-k == m * 5^k / 10^k
    const int k = -exponent_;
    for (int i = 0; i < k; ++i) mul_small(n, 5);
    digits = to_string(n);
    if (static_cast<int>(digits.size()) <= k) {
      digits.insert(0, static_cast<std::size_t>(k) - digits.size() + 1, '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(k), ".");
  }
  return negative_ ? "-" + digits : digits;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  if (a.negative_ != b.negative_) {
    return a.negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  std::strong_ordering mag = std::strong_ordering::equal;
  if (a.is_zero() || b.is_zero()) {
    mag = a.is_zero() ? (b.is_zero() ? std::strong_ordering::equal : std::strong_ordering::less)
                      : std::strong_ordering::greater;
  } else {
    const int top_a = a.exponent_ + std::bit_width(a.mantissa_);
    const int top_b = b.exponent_ + std::bit_width(b.mantissa_);
    if (top_a != top_b) {
      mag = top_a <=> top_b;
    } else {
      // Same leading bit position: aligning to the smaller exponent cannot overflow.
      const int lo = std::min(a.exponent_, b.exponent_);
      const std::uint64_t ma = a.mantissa_ << (a.exponent_ - lo);
      const std::uint64_t mb = b.mantissa_ << (b.exponent_ - lo);
      mag = ma <=> mb;
    }
  }
  if (a.negative_ && mag != std::strong_ordering::equal) {
    return mag == std::strong_ordering::less ? std::strong_ordering::greater
                                             : std::strong_ordering::less;
  }
  return mag;
}

}  // namespace f2p
