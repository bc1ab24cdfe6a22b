#pragma once

#include "circnorm/catalog.hpp"

#include <array>
#include <cstddef>
#include <optional>

namespace circnorm {

/// Orders at which the source's summary grid prints a spectral norm for
/// every family. Stored verbatim, typos included; the audit in verify.hpp
/// reports where the grid and the exact oracle disagree.
inline constexpr std::array<int, 5> table3_orders{3, 5, 6, 7, 8};

inline constexpr int table3_cell_count = 70;

/// table3_printed[oi][fi]: printed value for order table3_orders[oi] and
/// family B(fi+1).
inline constexpr std::array<std::array<long long, 14>, 5> table3_printed{{
    {3, 3, 4, 8, 1, 7, 14, 12, 16, 17, 23, 4, 8, 3},
    {21, 24, 33, 55, 5, 47, 79, 77, 121, 122, 132, 33, 24, 15},
    {46, 64, 88, 144, 10, 102, 200, 200, 320, 320, 332, 88, 40, 30},
    {94, 168, 232, 377, 20, 210, 524, 522, 841, 842, 856, 232, 66, 56},
    {185, 441, 609, 987, 38, 413, 1365, 1365, 2205, 2205, 2221, 609, 108, 104},
}};

inline std::optional<long long> table3_printed_value(Family f, int n) {
    for (std::size_t oi = 0; oi < table3_orders.size(); ++oi)
        if (table3_orders[oi] == n)
            return table3_printed[oi][static_cast<std::size_t>(family_index(f) - 1)];
    return std::nullopt;
}

} // namespace circnorm
