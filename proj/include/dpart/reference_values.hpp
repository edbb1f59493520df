#pragma once

// Published reference values the verify suite compares against: the
// Delta_m / C_m table, the zeta(k) - 1 table, and the upper-left 6 x 17
// sections of the q_n(k) and r_n(k) fields.

#include <array>
#include <string_view>

namespace dpart::reference {

struct DeltaRow {
    int m;
    double delta;
    double c;
};

inline constexpr std::array<DeltaRow, 13> kDeltaTable{{
    {1, 0.0, 0.7357589},
    {2, 0.3224670, 0.5329542},
    {3, 0.2551147, 0.5700863},
    {4, 0.2756955, 0.5584734},
    {5, 0.2683100, 0.5626133},
    {6, 0.2712005, 0.5609894},
    {7, 0.2700078, 0.5616589},
    {8, 0.2705174, 0.5613727},
    {9, 0.2702943, 0.5614980},
    {10, 0.2703937, 0.5614421},
    {11, 0.2703488, 0.5614674},
    {12, 0.2703693, 0.5614559},
    {13, 0.2703599, 0.5614612},
}};

struct ZetaRow {
    int k;
    double value_minus_one;
};

inline constexpr std::array<ZetaRow, 10> kZetaTable{{
    {2, 0.644934},
    {3, 0.202057},
    {4, 0.082323},
    {5, 0.036928},
    {6, 0.017343},
    {7, 0.008349},
    {8, 0.004077},
    {9, 0.002008},
    {10, 0.000995},
    {11, 0.000494},
}};

inline constexpr int kFieldRows = 6;
inline constexpr int kFieldCols = 17;

inline constexpr std::array<std::array<int, kFieldCols>, kFieldRows> kQField{{
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 1, 2, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1, 0, 0, 0, 0, 0, 0},
    {1, 1, 1, 2, 2, 3, 3, 3, 3, 3, 3, 2, 2, 1, 1, 1, 0},
}};

inline constexpr std::array<std::array<std::string_view, kFieldCols>, kFieldRows> kRField{{
    {"1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"1", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"1", "1", "1/2", "1/2", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"1", "1", "1/2", "5/6", "1/3", "1/6", "1/6", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"1", "1", "1/2", "5/6", "7/12", "5/12", "7/24", "5/24", "1/12", "1/24", "1/24", "0", "0", "0", "0", "0", "0"},
    {"1", "1", "1/2", "5/6", "7/12", "37/60", "59/120", "37/120", "1/4", "19/120", "1/8", "7/120", "1/24", "1/60",
     "1/120", "1/120", "0"},
}};

/// Printed precision of the two tables, as the largest accepted deviation.
inline constexpr double kDeltaTableTolerance = 1e-7;
inline constexpr double kZetaTableTolerance = 1e-6;

}  // namespace dpart::reference
