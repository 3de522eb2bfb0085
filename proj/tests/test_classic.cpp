#include <doctest.h>

#include "f2p/classic.hpp"
#include "f2p/errors.hpp"
#include "f2p/grid.hpp"
#include "oracles.hpp"

using namespace f2p;

TEST_CASE("fp_decode matches the textbook minifloat table") {
  for (auto [m, e] : {std::pair{5, 2}, {4, 3}, {3, 4}, {2, 5}, {10, 5}, {7, 8}}) {
    for (bool s : {false, true}) {
      const ClassicSpec spec = ClassicSpec::minifloat(m, e, s);
      const int n = spec.total_bits();
      for (std::uint64_t p = 0; p < (std::uint64_t{1} << n); ++p) {
        REQUIRE(fp_decode(BitPattern(n, p), spec) == oracle::minifloat_value(p, m, e, s));
      }
    }
  }
}

TEST_CASE("fp_decode spot values") {
  const ClassicSpec e2 = preset("5M2E");
  CHECK(fp_decode(BitPattern::parse("0 11 00000"), e2) == 2.0);
  CHECK(fp_decode(BitPattern::parse("0 10 00000"), e2) == 1.0);
  CHECK(fp_decode(BitPattern(8, 0), e2) == 0.0);

  const ClassicSpec half = preset("fp16");
  CHECK(fp_decode(BitPattern::parse("0 10000 0000000000"), half) == 1.0);
  CHECK(fp_decode(BitPattern::parse("0 01111 0000000000"), half) == 0.5);
  CHECK(fp_decode(BitPattern::parse("0 11111 1111111111"), half) == 65504.0);
  CHECK(Grid(half).max() == 65504.0);
}

TEST_CASE("minifloat subnormal/normal boundary is gap-continuous") {
  for (auto [m, e] : {std::pair{5, 2}, {4, 3}, {3, 4}, {2, 5}}) {
    const ClassicSpec spec = ClassicSpec::minifloat(m, e, false);
    const Grid g(spec);
    const double boundary = std::ldexp(1.0, spec.fp_bias() + 1);
    const std::size_t i = g.nearest_index(boundary);
    REQUIRE(g.value_at(i) == boundary);
    CHECK(g.value_at(i) - g.value_at(i - 1) == g.value_at(i + 1) - g.value_at(i));
  }
}

TEST_CASE("integer grids") {
  const Grid u = int_grid(8, false);
  CHECK(u.size() == 256);
  CHECK(u.min() == 0);
  CHECK(u.max() == 255);
  const Grid s = int_grid(8, true);
  CHECK(s.max() == 127);
  CHECK(s.min() == -127);
  for (const Grid* g : {&u, &s}) {
    for (std::size_t i = 1; i < g->size(); ++i) REQUIRE(g->value_at(i) - g->value_at(i - 1) == 1.0);
  }
}

TEST_CASE("presets") {
  CHECK(preset("BF16") == ClassicSpec::minifloat(7, 8, true));
  CHECK(preset("TF32") == ClassicSpec::minifloat(10, 8, true));
  CHECK(preset("TF32").total_bits() == 19);
  CHECK(preset("5M2E").total_bits() == 8);
  CHECK(preset("int19") == ClassicSpec::integer(19, true));
  for (const char* name : {"2M5E", "3M4E", "4M3E", "5M2E", "FP16", "BF16", "TF32", "INT8", "INT16", "INT19"}) {
    CHECK(preset(name).is_signed());
  }
  CHECK_THROWS_AS(preset("fp8"), LookupError);
}

TEST_CASE("SEAD grid layout") {
  const Grid g = sead_grid(4);
  const std::vector<double> expect = {0, 1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 14, 16, 20, 24, 32};
  REQUIRE(g.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) CHECK(g.value_at(i) == expect[i]);
  CHECK(g.value_of(BitPattern::parse("1110")) == 24);
  CHECK(g.value_of(BitPattern::parse("1111")) == 32);
  CHECK(g.value_of(BitPattern::parse("10 11")) == 14);

  for (int n = 3; n <= 16; ++n) {
    const Grid s = sead_grid(n);
    REQUIRE(s.size() == (std::size_t{1} << n));
    REQUIRE(s.value_at(0) == 0);
    double gap = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      const double d = s.value_at(i) - s.value_at(i - 1);
      REQUIRE(d >= gap);
      gap = d;
    }
    // Levels below the top each span 2^(n-1); the top adds two more points.
    REQUIRE(s.max() == static_cast<double>(n) * std::ldexp(1.0, n - 1));
  }
  const Grid signed_sead(ClassicSpec::sead(8, true));
  CHECK(signed_sead.max() == sead_grid(7).max());
  CHECK(signed_sead.min() == -signed_sead.max());
}
