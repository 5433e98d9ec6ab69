#pragma once

// Shared reference data for the test suite: published generator tables,
// codeword listings, and frozen numeric constants the tests pin against.

#include <string_view>
#include <utility>
#include <vector>

namespace fixtures {

// Five-qubit code generator rows, plus the fifth cyclic shift (dependent on
// the other four) and the two extra vectors that extend the stabilizer
// subspace to its orthogonal subspace.
inline const std::vector<std::string_view> kFiveQubitRows = {
    "11000|00101",
    "01100|10010",
    "00110|01001",
    "00011|10100",
};
inline constexpr std::string_view kFiveQubitFifthShift = "10001|01010";
inline constexpr std::string_view kFiveQubitDualExtraX = "11111|00000";
inline constexpr std::string_view kFiveQubitDualExtraZ = "00000|11111";
inline constexpr std::string_view kFiveQubitWeight3Dual = "00111|00101";

// The two published five-qubit codewords as (sign, basis label) terms; 16
// terms of magnitude 1 each, so the normalization factor is 1/4.
inline const std::vector<std::pair<int, std::string_view>> kCodeword0 = {
    {+1, "00000"}, {+1, "11000"}, {+1, "01100"}, {+1, "00110"},
    {+1, "00011"}, {+1, "10001"}, {-1, "10100"}, {-1, "01010"},
    {-1, "00101"}, {-1, "10010"}, {-1, "01001"}, {-1, "11110"},
    {-1, "01111"}, {-1, "10111"}, {-1, "11011"}, {-1, "11101"},
};
inline const std::vector<std::pair<int, std::string_view>> kCodeword1 = {
    {+1, "11111"}, {+1, "00111"}, {+1, "10011"}, {+1, "11001"},
    {+1, "11100"}, {+1, "01110"}, {-1, "01011"}, {-1, "10101"},
    {-1, "11010"}, {-1, "01101"}, {-1, "10110"}, {-1, "00001"},
    {-1, "10000"}, {-1, "01000"}, {-1, "00100"}, {-1, "00010"},
};

inline const std::vector<std::string_view> kEightQubitRows = {
    "01110100|00111010", "00111010|00011101", "00011101|01001110",
    "11111111|00000000", "00000000|11111111",
};

inline const std::vector<std::string_view> kTenQubitRows = {
    "0110011110|1001001100", "0011001111|0100100110", "0001110111|1010000011",
    "1000111011|0101010001", "1111111111|0000000000", "0000000000|1111111111",
};

// Generator matrix of the [7,4,3] Hamming code (dual-containing).
inline const std::vector<std::string_view> kHammingRows = {
    "1000110",
    "0100101",
    "0010011",
    "0001111",
};

inline constexpr std::string_view kQr13FirstRow = "0101100001101|0010011110010";
inline constexpr std::string_view kQr5FirstRow = "01001|00110";

// Frozen independently computed constants for the rate formula.
inline constexpr double kRateAt005 = 0.3725081563386031606;
inline constexpr double kRateZeroCrossing = 0.09464481245761588;

}  // namespace fixtures
