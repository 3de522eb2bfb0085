#include <doctest.h>

#include "f2p/errors.hpp"
#include "f2p/f2p_codec.hpp"
#include "oracles.hpp"
#include "fixtures.hpp"

using namespace f2p;

TEST_CASE("split_fields carves hyper, exponent and mantissa MSB first") {
  const F2PSpec spec(6, 2, Flavor::SR);

  FieldSplit f = split_fields(BitPattern::parse("01 0 000"), spec);
  CHECK(f.hyper.str() == "01");
  CHECK(f.exp_len() == 1);
  CHECK(f.exp.str() == "0");
  CHECK(f.mant.str() == "000");

  f = split_fields(BitPattern::parse("00 0000"), spec);
  CHECK(f.hyper.str() == "00");
  CHECK(f.exp_len() == 0);
  CHECK(f.exp.str().empty());
  CHECK(f.mant.str() == "0000");

  f = split_fields(BitPattern::parse("11 110 0"), spec);
  CHECK(f.hyper.str() == "11");
  CHECK(f.exp_len() == 3);
  CHECK(f.exp.str() == "110");
  CHECK(f.mant.str() == "0");

  CHECK_THROWS_AS(split_fields(BitPattern::parse("0100000"), spec), ContractError);
}

TEST_CASE("field lengths always sum to the magnitude width") {
  for (int h = 1; h <= 3; ++h) {
    const int width = h + (1 << h) + 2;
    const F2PSpec spec(width, h, Flavor::LI);
    for (std::uint64_t p = 0; p < (1u << width); ++p) {
      const FieldSplit f = split_fields(BitPattern(width, p), spec);
      REQUIRE(f.hyper.length + f.exp.length + f.mant.length == width);
      REQUIRE(static_cast<std::uint64_t>(f.exp.length) == f.hyper.bits);
    }
  }
}

TEST_CASE("exponent_value uses prefix encoding") {
  CHECK(exponent_value(make_field("")) == 0);
  CHECK(exponent_value(make_field("11")) == 6);
  CHECK(exponent_value(make_field("110")) == 13);
  for (const auto& row : fixture::kExponentFields) {
    CHECK(static_cast<int>(exponent_value(make_field(row.vec))) == row.sr);
  }
}

TEST_CASE("exponent_encode inverts exponent_value") {
  CHECK(exponent_encode(0, 2) == BitField{0, 0});
  CHECK(exponent_encode(6, 2) == make_field("11"));
  CHECK(exponent_encode(14, 2) == make_field("111"));
  CHECK_THROWS_AS(exponent_encode(15, 2), RangeError);
  CHECK_THROWS_AS(exponent_encode(3, 1), RangeError);

  for (int h = 1; h <= 4; ++h) {
    const std::uint64_t limit = val_max(h);
    for (std::uint64_t v = 0; v < limit; ++v) {
      const BitField e = exponent_encode(v, h);
      REQUIRE(e.length <= (1 << h) - 1);
      REQUIRE(exponent_value(e) == v);
    }
    for (int len = 0; len < (1 << h); ++len) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
        const BitField e{bits, len};
        REQUIRE(exponent_encode(exponent_value(e), h) == e);
      }
    }
  }
}

TEST_CASE("val_max and bias per flavor") {
  CHECK(val_max(1) == 3);
  CHECK(val_max(2) == 15);
  CHECK(val_max(3) == 255);
  CHECK(bias(F2PSpec(6, 2, Flavor::SR)) == -8);
  CHECK(bias(F2PSpec(6, 2, Flavor::LR)) == 7);
  CHECK(bias(F2PSpec(6, 2, Flavor::SI)) == 3);
  CHECK(bias(F2PSpec(6, 2, Flavor::LI)) == 14);
  // Signed formats take the bias of their magnitude width.
  CHECK(bias(F2PSpec(7, 2, Flavor::LI, true)) == 14);
}

TEST_CASE("spec validation guards the minimum mantissa") {
  CHECK_NOTHROW(F2PSpec(6, 2, Flavor::SR));
  CHECK_THROWS_AS(F2PSpec(5, 2, Flavor::SR), ContractError);
  CHECK_THROWS_AS(F2PSpec(6, 2, Flavor::SR, true), ContractError);
  CHECK_NOTHROW(F2PSpec(3, 1, Flavor::LR));
  CHECK_THROWS_AS(F2PSpec(2, 1, Flavor::LR), ContractError);
  CHECK_THROWS_AS(F2PSpec(30, 4, Flavor::LR), ContractError);
  CHECK_THROWS_AS(F2PSpec(8, 0, Flavor::LR), ContractError);
}

TEST_CASE("decode reproduces the worked 6-bit examples") {
  for (const auto& cell : fixture::kWorkedValues) {
    const F2PSpec spec(6, 2, cell.flavor);
    CAPTURE(cell.pattern);
    CAPTURE(flavor_name(cell.flavor));
    CHECK(decode_exact(BitPattern::parse(cell.pattern), spec) == Dyadic(cell.num, cell.exp2));
  }
  CHECK(decode(BitPattern::parse("010001"), F2PSpec(6, 2, Flavor::SR)) == 18.0 / 2048);
}

TEST_CASE("decode agrees with the string-based oracle") {
  for (Flavor fl : {Flavor::SR, Flavor::LR, Flavor::SI, Flavor::LI}) {
    for (int h = 1; h <= 3; ++h) {
      const int lo = h + (1 << h);
      for (int n = lo; n <= std::min(lo + 3, 14); ++n) {
        const F2PSpec spec(n, h, fl);
        for (std::uint64_t p = 0; p < (std::uint64_t{1} << n); ++p) {
          const double expect = oracle::f2p_value(oracle::bits_of(p, n), h, fl);
          REQUIRE(decode(BitPattern(n, p), spec) == expect);
        }
      }
    }
  }
}

TEST_CASE("signed decode negates on the MSB") {
  const F2PSpec spec(7, 2, Flavor::SR, true);
  CHECK(decode(BitPattern::parse("0 01 0 001"), spec) == 18.0 / 2048);
  CHECK(decode(BitPattern::parse("1 01 0 001"), spec) == -18.0 / 2048);
  CHECK(decode(BitPattern::parse("1 00 0000"), spec) == 0.0);
  CHECK_FALSE(decode_exact(BitPattern::parse("1 00 0000"), spec).negative());
  CHECK_THROWS_AS(decode(BitPattern::parse("01 0 001"), spec), ContractError);
}

TEST_CASE("Dyadic ordering and decimal expansion") {
  CHECK(Dyadic(18, -11) == Dyadic(9, -10));
  CHECK(Dyadic(1, -11).to_decimal() == "0.00048828125");
  CHECK(Dyadic(31744, 0).to_decimal() == "31744");
  CHECK(Dyadic(3, -1, true).to_decimal() == "-1.5");
  CHECK(Dyadic(1, 70).to_decimal() == "1180591620717411303424");
  CHECK(Dyadic(0, 5).to_decimal() == "0");
  CHECK(Dyadic(1, -1) < Dyadic(1, 0));
  CHECK(Dyadic(3, -1) > Dyadic(1, 0));
  CHECK(Dyadic(5, 0, true) < Dyadic(1, 0, true));
  CHECK(Dyadic(5, 0, true) < Dyadic());
  CHECK(Dyadic(7, 2) > Dyadic(27, 0));
}
