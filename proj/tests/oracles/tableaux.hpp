#pragma once

// Brute-force tableau counts. Nothing here uses hook lengths or contents.

#include <cstdint>
#include <vector>

namespace oracle {

// Standard Young tableaux of shape `rows`: the largest entry sits in a corner,
// so remove each corner in turn.
inline std::uint64_t count_syt(std::vector<int> rows) {
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    if (rows.empty()) return 1;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const bool corner = i + 1 == rows.size() || rows[i + 1] < rows[i];
        if (!corner) continue;
        --rows[i];
        total += count_syt(rows);
        ++rows[i];
    }
    return total;
}

// Semistandard tableaux of shape `rows` with entries in 1..m, filled cell by
// cell in reading order: weakly increasing along rows, strictly down columns.
inline std::uint64_t count_ssyt(const std::vector<int>& rows, int m) {
    std::vector<std::vector<int>> t;
    for (int len : rows) t.emplace_back(static_cast<std::size_t>(len), 0);
    std::uint64_t total = 0;
    auto fill = [&](auto&& self, std::size_t r, std::size_t c) -> void {
        if (r == t.size()) {
            ++total;
            return;
        }
        if (c == t[r].size()) {
            self(self, r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);
        if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
        for (int v = lo; v <= m; ++v) {
            t[r][c] = v;
            self(self, r, c + 1);
        }
    };
    fill(fill, 0, 0);
    return total;
}

}  // namespace oracle
