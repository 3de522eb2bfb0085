#include "f2p/f2p_codec.hpp"

#include "f2p/errors.hpp"

namespace f2p {

std::string_view flavor_name(Flavor f) {
  switch (f) {
    case Flavor::SR: return "sr";
    case Flavor::LR: return "lr";
    case Flavor::SI: return "si";
    case Flavor::LI: return "li";
  }
  return "?";
}

Flavor parse_flavor(std::string_view name) {
  if (name == "sr") return Flavor::SR;
  if (name == "lr") return Flavor::LR;
  if (name == "si") return Flavor::SI;
  if (name == "li") return Flavor::LI;
  throw LookupError("unknown F2P flavor '" + std::string(name) + "' (expected sr|lr|si|li)");
}

std::uint64_t val_max(int hyper_bits) {
  if (hyper_bits < 1 || hyper_bits > 5) {
    throw ContractError("hyper-exp width must be in 1..5");
  }
  return low_mask(1 << hyper_bits);
}

F2PSpec::F2PSpec(int total_bits, int hyper_bits, Flavor flavor, bool is_signed)
    : total_bits_(total_bits), hyper_bits_(hyper_bits), flavor_(flavor), signed_(is_signed) {
  if (hyper_bits < 1 || hyper_bits > kMaxHyperBits) {
    throw ContractError("F2P hyper-exp width must be in 1.." + std::to_string(kMaxHyperBits) +
                        ", got " + std::to_string(hyper_bits));
  }
  if (total_bits < 1 || total_bits > BitPattern::kMaxWidth) {
    throw ContractError("F2P width must be in 1..64");
  }
  // The longest exponent field must still leave at least one mantissa bit.
  if (magnitude_bits() < hyper_bits + (1 << hyper_bits)) {
    throw ContractError("F2P magnitude width " + std::to_string(magnitude_bits()) +
                        " is too small for H=" + std::to_string(hyper_bits) + " (need >= " +
                        std::to_string(hyper_bits + (1 << hyper_bits)) + ")");
  }
}

std::int64_t F2PSpec::min_exponent() const {
  return exponent_sign(flavor_) > 0 ? 0 : -static_cast<std::int64_t>(val_max() - 1);
}

FieldSplit split_fields(const BitPattern& magnitude, const F2PSpec& spec) {
  const int width = spec.magnitude_bits();
  if (magnitude.width() != width) {
    throw ContractError("split_fields: pattern width " + std::to_string(magnitude.width()) +
                        " != magnitude width " + std::to_string(width));
  }
  const int h = spec.hyper_bits();
  const std::uint64_t bits = magnitude.bits();
  FieldSplit out;
  out.hyper = {bits >> (width - h), h};
  const int exp_len = static_cast<int>(out.hyper.bits);
  const int mant_len = width - h - exp_len;
  out.exp = {(bits >> mant_len) & low_mask(exp_len), exp_len};
  out.mant = {bits & low_mask(mant_len), mant_len};
  return out;
}

std::uint64_t exponent_value(const BitField& exp) {
  return low_mask(exp.length) + exp.bits;
}

BitField exponent_encode(std::uint64_t value, int hyper_bits) {
  const std::uint64_t limit = val_max(hyper_bits);
  if (value >= limit) {
    throw RangeError("exponent value " + std::to_string(value) + " out of range for H=" +
                     std::to_string(hyper_bits) + " (max " + std::to_string(limit - 1) + ")");
  }
  int len = 0;
  while (len < 63 && low_mask(len + 1) <= value) ++len;  // len = floor(log2(value + 1))
  return {value - low_mask(len), len};
}

std::int64_t bias(const F2PSpec& spec) {
  const auto vm = static_cast<std::int64_t>(spec.val_max());
  const std::int64_t n = spec.magnitude_bits();
  const std::int64_t h = spec.hyper_bits();
  switch (spec.flavor()) {
    case Flavor::SR: return -(vm + 1) / 2;
    case Flavor::LR: return (vm - 1) / 2;
    case Flavor::SI: return n - h - 1;
    case Flavor::LI: return n - h - (std::int64_t{1} << h) + vm - 1;
  }
  return 0;
}

Dyadic decode_exact(const BitPattern& p, const F2PSpec& spec) {
  if (p.width() != spec.total_bits()) {
    throw ContractError("decode: pattern width " + std::to_string(p.width()) +
                        " != format width " + std::to_string(spec.total_bits()));
  }
  const int width = spec.magnitude_bits();
  const bool negative = spec.is_signed() && p.bit(width);
  const FieldSplit f = split_fields(BitPattern(width, p.bits() & low_mask(width)), spec);

  const std::int64_t e = exponent_sign(spec.flavor()) * static_cast<std::int64_t>(exponent_value(f.exp));
  const std::int64_t b = bias(spec);
  const int m_len = f.mant.length;
  if (e == spec.min_exponent()) {
    // Subnormal: 2^(E+B+1) * 0.m
    return Dyadic(f.mant.bits, static_cast<int>(e + b + 1 - m_len), negative);
  }
  // Normal: 2^(E+B) * 1.m
  return Dyadic((std::uint64_t{1} << m_len) + f.mant.bits, static_cast<int>(e + b - m_len), negative);
}

double decode(const BitPattern& p, const F2PSpec& spec) { return decode_exact(p, spec).to_double(); }

}  // namespace f2p
