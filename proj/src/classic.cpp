#include "f2p/classic.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "f2p/errors.hpp"

namespace f2p {

ClassicSpec ClassicSpec::integer(int total_bits, bool is_signed) {
  if (total_bits < (is_signed ? 2 : 1) || total_bits > 64) {
    throw ContractError("integer width out of range: " + std::to_string(total_bits));
  }
  return ClassicSpec(ClassicKind::Int, total_bits, 0, 0, is_signed);
}

ClassicSpec ClassicSpec::minifloat(int mant_bits, int exp_bits, bool is_signed) {
  if (mant_bits < 1 || mant_bits > 52) throw ContractError("minifloat mantissa width must be in 1..52");
  if (exp_bits < 1 || exp_bits > 11) throw ContractError("minifloat exponent width must be in 1..11");
  const int total = mant_bits + exp_bits + (is_signed ? 1 : 0);
  if (total > 64) throw ContractError("minifloat wider than 64 bits");
  return ClassicSpec(ClassicKind::Fp, total, mant_bits, exp_bits, is_signed);
}

ClassicSpec ClassicSpec::sead(int total_bits, bool is_signed) {
  const int mag = is_signed ? total_bits - 1 : total_bits;
  if (mag < 2 || total_bits > 62) throw ContractError("SEAD width out of range: " + std::to_string(total_bits));
  return ClassicSpec(ClassicKind::Sead, total_bits, 0, 0, is_signed);
}

ClassicSpec preset(std::string_view name) {
  std::string key(name);
  std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
  if (key == "2m5e") return ClassicSpec::minifloat(2, 5, true);
  if (key == "3m4e") return ClassicSpec::minifloat(3, 4, true);
  if (key == "4m3e") return ClassicSpec::minifloat(4, 3, true);
  if (key == "5m2e") return ClassicSpec::minifloat(5, 2, true);
  if (key == "fp16") return ClassicSpec::minifloat(10, 5, true);
  if (key == "bf16") return ClassicSpec::minifloat(7, 8, true);
  if (key == "tf32") return ClassicSpec::minifloat(10, 8, true);
  if (key == "int8") return ClassicSpec::integer(8, true);
  if (key == "int16") return ClassicSpec::integer(16, true);
  if (key == "int19") return ClassicSpec::integer(19, true);
  throw LookupError("unknown preset '" + std::string(name) + "'");
}

namespace {

void check_width(const BitPattern& p, const ClassicSpec& spec) {
  if (p.width() != spec.total_bits()) {
    throw ContractError("pattern width " + std::to_string(p.width()) + " != format width " +
                        std::to_string(spec.total_bits()));
  }
}

struct SignMagnitude {
  bool negative;
  std::uint64_t magnitude;
};

SignMagnitude split_sign(const BitPattern& p, const ClassicSpec& spec) {
  const int w = spec.magnitude_bits();
  return {spec.is_signed() && p.bit(w), p.bits() & low_mask(w)};
}

}  // namespace

Dyadic fp_decode_exact(const BitPattern& p, const ClassicSpec& spec) {
  if (spec.kind() != ClassicKind::Fp) throw ContractError("fp_decode on a non-minifloat format");
  check_width(p, spec);
  const auto [negative, mag] = split_sign(p, spec);
  const int m = spec.mant_bits();
  const auto e = static_cast<int>(mag >> m);
  const std::uint64_t mant = mag & low_mask(m);
  const int b = spec.fp_bias();
  if (e == 0) return Dyadic(mant, b + 1 - m, negative);
  return Dyadic((std::uint64_t{1} << m) + mant, e + b - m, negative);
}

double fp_decode(const BitPattern& p, const ClassicSpec& spec) { return fp_decode_exact(p, spec).to_double(); }

Dyadic int_decode_exact(const BitPattern& p, const ClassicSpec& spec) {
  if (spec.kind() != ClassicKind::Int) throw ContractError("int_decode on a non-integer format");
  check_width(p, spec);
  const auto [negative, mag] = split_sign(p, spec);
  return Dyadic(mag, 0, negative);
}

Dyadic sead_decode_exact(const BitPattern& p, const ClassicSpec& spec) {
  if (spec.kind() != ClassicKind::Sead) throw ContractError("sead_decode on a non-SEAD format");
  check_width(p, spec);
  const auto [negative, mag] = split_sign(p, spec);
  const int w = spec.magnitude_bits();

  int level = 0;
  while (level < w && ((mag >> (w - 1 - level)) & 1u)) ++level;
  std::uint64_t mant = 0;
  if (level >= w - 1) {
    level = w - 1;
    mant = mag & 1u;
  } else {
    mant = mag & low_mask(w - level - 1);
  }
  // Each level below the top spans 2^(w-1).
  const std::uint64_t start = static_cast<std::uint64_t>(level) << (w - 1);
  return Dyadic(start + (mant << level), 0, negative);
}

Dyadic decode_exact(const BitPattern& p, const ClassicSpec& spec) {
  switch (spec.kind()) {
    case ClassicKind::Int: return int_decode_exact(p, spec);
    case ClassicKind::Fp: return fp_decode_exact(p, spec);
    case ClassicKind::Sead: return sead_decode_exact(p, spec);
  }
  throw ContractError("unknown classic format kind");
}

}  // namespace f2p
