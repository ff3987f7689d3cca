#pragma once
// Stone coordinates of the stored optimal winning paths (n = 1..20),
// emitted in canonical (row, column) ascending order.

#include <cstdint>

namespace hexpath::detail {

inline constexpr std::int8_t kWitness1[] = {
    1,1,
};
inline constexpr std::int8_t kWitness2[] = {
    1,1,1,2,
};
inline constexpr std::int8_t kWitness3[] = {
    1,1,1,2,2,2,3,2,3,3,
};
inline constexpr std::int8_t kWitness4[] = {
    1,1,1,2,3,2,4,2,1,3,2,3,4,3,4,4,
};
inline constexpr std::int8_t kWitness5[] = {
    1,1,1,2,4,2,5,2,1,3,3,3,5,3,1,4,2,4,5,4,5,5,
};
inline constexpr std::int8_t kWitness6[] = {
    6,1,2,2,3,2,4,2,6,2,1,3,4,3,6,3,1,4,3,4,6,4,
    1,5,3,5,4,5,5,5,1,6,
};
inline constexpr std::int8_t kWitness7[] = {
    1,1,1,2,4,2,5,2,6,2,7,2,1,3,3,3,7,3,1,4,3,4,
    4,4,5,4,7,4,1,5,5,5,7,5,1,6,2,6,3,6,4,6,7,6,
    7,7,
};
inline constexpr std::int8_t kWitness8[] = {
    1,1,1,2,4,2,5,2,6,2,7,2,8,2,1,3,3,3,8,3,1,4,
    3,4,5,4,6,4,8,4,1,5,3,5,4,5,6,5,8,5,1,6,6,6,
    8,6,1,7,2,7,3,7,4,7,5,7,8,7,8,8,
};
inline constexpr std::int8_t kWitness9[] = {
    1,1,1,2,4,2,5,2,6,2,7,2,8,2,9,2,1,3,3,3,9,3,
    1,4,3,4,6,4,7,4,9,4,1,5,3,5,5,5,7,5,9,5,1,6,
    3,6,4,6,7,6,9,6,1,7,7,7,9,7,1,8,2,8,3,8,4,8,
    5,8,6,8,9,8,9,9,
};
inline constexpr std::int8_t kWitness10[] = {
    1,1,1,2,2,2,3,2,4,2,5,2,6,2,7,2,8,2,9,2,10,2,
    10,3,2,4,3,4,4,4,6,4,7,4,8,4,10,4,1,5,4,5,5,5,
    8,5,10,5,1,6,2,6,6,6,7,6,9,6,2,7,4,7,5,7,9,7,
    10,7,1,8,3,8,6,8,7,8,10,8,1,9,3,9,4,9,5,9,7,9,
    8,9,9,9,1,10,
};
inline constexpr std::int8_t kWitness11[] = {
    1,1,1,2,4,2,5,2,6,2,7,2,8,2,9,2,10,2,11,2,1,3,
    3,3,11,3,1,4,3,4,6,4,7,4,8,4,9,4,11,4,1,5,3,5,
    5,5,9,5,11,5,1,6,3,6,5,6,6,6,7,6,9,6,11,6,1,7,
    3,7,7,7,9,7,11,7,1,8,3,8,4,8,5,8,6,8,9,8,11,8,
    1,9,9,9,11,9,1,10,2,10,3,10,4,10,5,10,6,10,7,10,8,10,
    11,10,11,11,
};
inline constexpr std::int8_t kWitness12[] = {
    1,1,1,2,4,2,5,2,6,2,7,2,8,2,9,2,10,2,11,2,12,2,
    1,3,3,3,12,3,1,4,3,4,4,4,6,4,7,4,8,4,9,4,10,4,
    12,4,1,5,4,5,5,5,10,5,12,5,1,6,2,6,6,6,7,6,8,6,
    9,6,11,6,2,7,4,7,5,7,11,7,12,7,1,8,3,8,6,8,7,8,
    8,8,9,8,12,8,1,9,3,9,4,9,5,9,9,9,10,9,12,9,1,10,
    6,10,7,10,10,10,12,10,1,11,2,11,3,11,4,11,5,11,7,11,8,11,
    9,11,12,11,12,12,
};
inline constexpr std::int8_t kWitness13[] = {
    1,1,1,2,4,2,5,2,6,2,8,2,9,2,10,2,11,2,12,2,13,2,
    1,3,3,3,6,3,7,3,13,3,1,4,3,4,4,4,8,4,9,4,10,4,
    11,4,13,4,1,5,4,5,6,5,7,5,11,5,13,5,1,6,3,6,5,6,
    8,6,9,6,11,6,13,6,1,7,3,7,5,7,7,7,9,7,11,7,13,7,
    1,8,3,8,5,8,6,8,9,8,11,8,13,8,1,9,3,9,7,9,8,9,
    10,9,13,9,1,10,3,10,4,10,5,10,6,10,10,10,11,10,13,10,1,11,
    7,11,8,11,11,11,13,11,1,12,2,12,3,12,4,12,5,12,6,12,8,12,
    9,12,10,12,13,12,13,13,
};
inline constexpr std::int8_t kWitness14[] = {
    14,1,2,2,3,2,4,2,6,2,7,2,8,2,9,2,10,2,11,2,12,2,
    14,2,1,3,4,3,5,3,12,3,14,3,1,4,2,4,6,4,7,4,8,4,
    9,4,10,4,12,4,14,4,2,5,4,5,5,5,10,5,12,5,14,5,1,6,
    3,6,6,6,7,6,8,6,10,6,12,6,14,6,1,7,3,7,5,7,8,7,
    10,7,12,7,14,7,1,8,3,8,5,8,7,8,10,8,12,8,14,8,1,9,
    3,9,5,9,7,9,8,9,9,9,12,9,14,9,1,10,3,10,5,10,10,10,
    11,10,13,10,1,11,3,11,5,11,6,11,7,11,8,11,9,11,13,11,14,11,
    1,12,3,12,10,12,11,12,14,12,1,13,3,13,4,13,5,13,6,13,7,13,
    8,13,9,13,11,13,12,13,13,13,1,14,
};
inline constexpr std::int8_t kWitness15[] = {
    1,1,1,2,4,2,5,2,6,2,8,2,9,2,10,2,11,2,12,2,13,2,
    14,2,15,2,1,3,3,3,6,3,7,3,15,3,1,4,3,4,4,4,8,4,
    9,4,10,4,11,4,12,4,13,4,15,4,1,5,4,5,6,5,7,5,13,5,
    15,5,1,6,3,6,5,6,8,6,9,6,10,6,11,6,13,6,15,6,1,7,
    3,7,5,7,7,7,11,7,13,7,15,7,1,8,3,8,5,8,7,8,8,8,
    9,8,11,8,13,8,15,8,1,9,3,9,5,9,9,9,11,9,13,9,15,9,
    1,10,3,10,5,10,6,10,7,10,8,10,11,10,13,10,15,10,1,11,3,11,
    9,11,10,11,12,11,15,11,1,12,3,12,4,12,5,12,6,12,7,12,8,12,
    12,12,13,12,15,12,1,13,9,13,10,13,13,13,15,13,1,14,2,14,3,14,
    4,14,5,14,6,14,7,14,8,14,10,14,11,14,12,14,15,14,15,15,
};
inline constexpr std::int8_t kWitness16[] = {
    1,1,1,2,4,2,5,2,6,2,8,2,9,2,10,2,11,2,12,2,13,2,
    14,2,15,2,16,2,1,3,3,3,6,3,7,3,16,3,1,4,3,4,4,4,
    8,4,9,4,10,4,11,4,12,4,13,4,14,4,16,4,1,5,4,5,6,5,
    7,5,14,5,16,5,1,6,3,6,5,6,8,6,9,6,10,6,11,6,12,6,
    14,6,16,6,1,7,3,7,5,7,7,7,12,7,14,7,16,7,1,8,3,8,
    5,8,7,8,9,8,10,8,12,8,14,8,16,8,1,9,3,9,5,9,7,9,
    8,9,10,9,12,9,14,9,16,9,1,10,3,10,5,10,10,10,12,10,14,10,
    16,10,1,11,3,11,5,11,6,11,7,11,8,11,9,11,12,11,14,11,16,11,
    1,12,3,12,10,12,11,12,13,12,16,12,1,13,3,13,4,13,5,13,6,13,
    7,13,8,13,9,13,13,13,14,13,16,13,1,14,10,14,11,14,14,14,16,14,
    1,15,2,15,3,15,4,15,5,15,6,15,7,15,8,15,9,15,11,15,12,15,
    13,15,16,15,16,16,
};
inline constexpr std::int8_t kWitness17[] = {
    1,1,1,2,4,2,5,2,6,2,7,2,8,2,9,2,10,2,11,2,12,2,
    13,2,14,2,15,2,16,2,17,2,1,3,3,3,17,3,1,4,3,4,4,4,
    6,4,7,4,8,4,9,4,10,4,11,4,13,4,14,4,15,4,17,4,1,5,
    4,5,5,5,11,5,12,5,15,5,17,5,1,6,2,6,6,6,7,6,8,6,
    9,6,13,6,14,6,16,6,2,7,4,7,5,7,9,7,11,7,12,7,16,7,
    17,7,1,8,3,8,6,8,7,8,9,8,10,8,13,8,14,8,17,8,1,9,
    3,9,5,9,7,9,11,9,12,9,14,9,15,9,17,9,1,10,3,10,5,10,
    7,10,8,10,9,10,10,10,15,10,17,10,1,11,3,11,5,11,11,11,12,11,
    13,11,15,11,17,11,1,12,3,12,5,12,6,12,7,12,8,12,9,12,10,12,
    13,12,15,12,17,12,1,13,3,13,11,13,12,13,14,13,17,13,1,14,3,14,
    4,14,5,14,6,14,7,14,8,14,9,14,10,14,14,14,15,14,17,14,1,15,
    11,15,12,15,15,15,17,15,1,16,2,16,3,16,4,16,5,16,6,16,7,16,
    8,16,9,16,10,16,12,16,13,16,14,16,17,16,17,17,
};
inline constexpr std::int8_t kWitness18[] = {
    1,1,1,2,2,2,3,2,4,2,5,2,6,2,7,2,8,2,9,2,10,2,
    11,2,12,2,13,2,14,2,15,2,16,2,17,2,18,2,18,3,2,4,3,4,
    4,4,6,4,7,4,8,4,9,4,10,4,11,4,12,4,13,4,14,4,15,4,
    16,4,18,4,1,5,4,5,5,5,16,5,18,5,1,6,2,6,6,6,7,6,
    8,6,9,6,10,6,11,6,12,6,13,6,14,6,16,6,18,6,2,7,4,7,
    5,7,14,7,16,7,18,7,1,8,3,8,6,8,7,8,8,8,10,8,11,8,
    12,8,14,8,16,8,18,8,1,9,3,9,5,9,8,9,9,9,12,9,14,9,
    16,9,18,9,1,10,3,10,5,10,6,10,10,10,11,10,13,10,16,10,18,10,
    1,11,3,11,6,11,8,11,9,11,13,11,14,11,16,11,18,11,1,12,3,12,
    5,12,7,12,10,12,11,12,14,12,16,12,18,12,1,13,3,13,5,13,7,13,
    8,13,9,13,11,13,12,13,13,13,16,13,18,13,1,14,3,14,5,14,14,14,
    15,14,17,14,1,15,3,15,5,15,6,15,7,15,8,15,9,15,10,15,11,15,
    12,15,13,15,17,15,18,15,1,16,3,16,14,16,15,16,18,16,1,17,3,17,
    4,17,5,17,6,17,7,17,8,17,9,17,10,17,11,17,12,17,13,17,15,17,
    16,17,17,17,1,18,
};
inline constexpr std::int8_t kWitness19[] = {
    1,1,1,2,4,2,5,2,6,2,8,2,9,2,10,2,11,2,12,2,13,2,
    14,2,15,2,16,2,17,2,18,2,19,2,1,3,3,3,6,3,7,3,19,3,
    1,4,3,4,4,4,8,4,9,4,10,4,11,4,12,4,13,4,14,4,15,4,
    16,4,17,4,19,4,1,5,4,5,6,5,7,5,17,5,19,5,1,6,3,6,
    5,6,8,6,9,6,10,6,11,6,12,6,13,6,14,6,15,6,17,6,19,6,
    1,7,3,7,5,7,7,7,15,7,17,7,19,7,1,8,3,8,5,8,7,8,
    10,8,11,8,12,8,13,8,15,8,17,8,19,8,1,9,3,9,5,9,7,9,
    9,9,13,9,15,9,17,9,19,9,1,10,3,10,5,10,7,10,9,10,10,10,
    11,10,13,10,15,10,17,10,19,10,1,11,3,11,5,11,7,11,11,11,13,11,
    15,11,17,11,19,11,1,12,3,12,5,12,7,12,8,12,9,12,10,12,13,12,
    15,12,17,12,19,12,1,13,3,13,5,13,13,13,15,13,17,13,19,13,1,14,
    3,14,5,14,6,14,7,14,8,14,9,14,10,14,11,14,12,14,15,14,17,14,
    19,14,1,15,3,15,13,15,14,15,16,15,19,15,1,16,3,16,4,16,5,16,
    6,16,7,16,8,16,9,16,10,16,11,16,12,16,16,16,17,16,19,16,1,17,
    13,17,14,17,17,17,19,17,1,18,2,18,3,18,4,18,5,18,6,18,7,18,
    8,18,9,18,10,18,11,18,12,18,14,18,15,18,16,18,19,18,19,19,
};
inline constexpr std::int8_t kWitness20[] = {
    1,1,1,2,4,2,5,2,6,2,8,2,9,2,10,2,11,2,12,2,13,2,
    14,2,15,2,16,2,17,2,18,2,19,2,20,2,1,3,3,3,6,3,7,3,
    20,3,1,4,3,4,4,4,8,4,9,4,10,4,11,4,12,4,13,4,14,4,
    15,4,16,4,17,4,18,4,20,4,1,5,4,5,6,5,7,5,18,5,20,5,
    1,6,3,6,5,6,8,6,9,6,10,6,11,6,12,6,13,6,14,6,15,6,
    16,6,18,6,20,6,1,7,3,7,5,7,7,7,16,7,18,7,20,7,1,8,
    3,8,5,8,7,8,8,8,10,8,11,8,12,8,13,8,14,8,16,8,18,8,
    20,8,1,9,3,9,5,9,8,9,9,9,14,9,16,9,18,9,20,9,1,10,
    3,10,5,10,6,10,10,10,11,10,12,10,13,10,15,10,18,10,20,10,1,11,
    3,11,6,11,8,11,9,11,15,11,16,11,18,11,20,11,1,12,3,12,5,12,
    7,12,10,12,11,12,12,12,13,12,16,12,18,12,20,12,1,13,3,13,5,13,
    7,13,8,13,9,13,13,13,14,13,16,13,18,13,20,13,1,14,3,14,5,14,
    10,14,11,14,14,14,16,14,18,14,20,14,1,15,3,15,5,15,6,15,7,15,
    8,15,9,15,11,15,12,15,13,15,16,15,18,15,20,15,1,16,3,16,14,16,
    15,16,17,16,20,16,1,17,3,17,4,17,5,17,6,17,7,17,8,17,9,17,
    10,17,11,17,12,17,13,17,17,17,18,17,20,17,1,18,14,18,15,18,18,18,
    20,18,1,19,2,19,3,19,4,19,5,19,6,19,7,19,8,19,9,19,10,19,
    11,19,12,19,13,19,15,19,16,19,17,19,20,19,20,20,
};

inline constexpr struct { int n; int length; const std::int8_t* xy; } kWitnessTable[] = {
    {1, 1, kWitness1},
    {2, 2, kWitness2},
    {3, 5, kWitness3},
    {4, 8, kWitness4},
    {5, 11, kWitness5},
    {6, 16, kWitness6},
    {7, 23, kWitness7},
    {8, 30, kWitness8},
    {9, 37, kWitness9},
    {10, 47, kWitness10},
    {11, 57, kWitness11},
    {12, 69, kWitness12},
    {13, 81, kWitness13},
    {14, 94, kWitness14},
    {15, 109, kWitness15},
    {16, 124, kWitness16},
    {17, 140, kWitness17},
    {18, 157, kWitness18},
    {19, 175, kWitness19},
    {20, 195, kWitness20},
};

}  // namespace hexpath::detail
