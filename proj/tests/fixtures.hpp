#pragma once

// Worked 6-bit F2P values with H = 2 (unsigned): every pattern listed with its
// value under each flavor, as num * 2^exp2.

#include <array>
#include <cstdint>

#include "f2p/f2p_codec.hpp"

namespace fixture {

struct Cell {
  const char* pattern;
  f2p::Flavor flavor;
  std::uint64_t num;
  int exp2;
};

using f2p::Flavor;

inline constexpr std::array<Cell, 40> kWorkedValues = {{
    {"00 0000", Flavor::SR, 0, 0},   {"00 0000", Flavor::LR, 128, 0},   {"00 0000", Flavor::SI, 0, 0},
    {"00 0000", Flavor::LI, 16384, 0},
    {"00 0001", Flavor::SR, 1, -11}, {"00 0001", Flavor::LR, 136, 0},   {"00 0001", Flavor::SI, 1, 0},
    {"00 0001", Flavor::LI, 17408, 0},
    {"00 1111", Flavor::SR, 15, -11}, {"00 1111", Flavor::LR, 248, 0},  {"00 1111", Flavor::SI, 15, 0},
    {"00 1111", Flavor::LI, 31744, 0},
    {"01 0 000", Flavor::SR, 16, -11}, {"01 0 000", Flavor::LR, 64, 0}, {"01 0 000", Flavor::SI, 16, 0},
    {"01 0 000", Flavor::LI, 8192, 0},
    {"01 0 001", Flavor::SR, 18, -11}, {"01 0 001", Flavor::LR, 72, 0}, {"01 0 001", Flavor::SI, 18, 0},
    {"01 0 001", Flavor::LI, 9216, 0},
    {"01 0 111", Flavor::SR, 30, -11}, {"01 0 111", Flavor::LR, 120, 0}, {"01 0 111", Flavor::SI, 30, 0},
    {"01 0 111", Flavor::LI, 15360, 0},
    {"01 1 000", Flavor::SR, 32, -11}, {"01 1 000", Flavor::LR, 32, 0}, {"01 1 000", Flavor::SI, 32, 0},
    {"01 1 000", Flavor::LI, 4096, 0},
    {"11 110 0", Flavor::SR, 32, 0},   {"11 110 0", Flavor::LR, 1, -6}, {"11 110 0", Flavor::SI, 65536, 0},
    {"11 110 0", Flavor::LI, 2, 0},
    {"11 111 0", Flavor::SR, 64, 0},   {"11 111 0", Flavor::LR, 0, 0},  {"11 111 0", Flavor::SI, 131072, 0},
    {"11 111 0", Flavor::LI, 0, 0},
    {"11 111 1", Flavor::SR, 96, 0},   {"11 111 1", Flavor::LR, 1, -7}, {"11 111 1", Flavor::SI, 196608, 0},
    {"11 111 1", Flavor::LI, 1, 0},
}};

// Exponent-vector interpretations for vectors of up to two bits:
// {vector, SR exponent, LR exponent}.
struct Table2Row {
  const char* vec;
  int sr;
  int lr;
};
inline constexpr std::array<Table2Row, 7> kExponentFields = {{
    {"", 0, 0}, {"0", 1, -1}, {"1", 2, -2}, {"00", 3, -3}, {"01", 4, -4}, {"10", 5, -5}, {"11", 6, -6},
}};

}  // namespace fixture
