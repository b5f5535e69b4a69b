#pragma once

// Internal: exact Gaussian elimination on Scalar matrices. Rows are reduced
// to RREF in place over the leftmost `cols` columns; any extra columns ride
// along as an augmented part. Pivots are chosen as the first row with a
// nonzero entry in the current column; exact arithmetic needs nothing fancier.

#include <utility>
#include <vector>

#include "levi/scalar.hpp"

namespace levi::detail {

inline std::vector<int> scalar_rref(std::vector<std::vector<Scalar>>& rows, int cols) {
    std::vector<int> pivots;
    int r = 0;
    const int nrows = static_cast<int>(rows.size());
    for (int c = 0; c < cols && r < nrows; ++c) {
        int pr = -1;
        for (int i = r; i < nrows; ++i)
            if (!rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(rows[static_cast<std::size_t>(r)], rows[static_cast<std::size_t>(pr)]);
        const Scalar piv_inv = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].inv();
        for (auto& x : rows[static_cast<std::size_t>(r)]) x *= piv_inv;
        for (int i = 0; i < nrows; ++i) {
            if (i == r) continue;
            const Scalar factor = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            if (factor.is_zero()) continue;
            for (std::size_t j = 0; j < rows[static_cast<std::size_t>(i)].size(); ++j)
                rows[static_cast<std::size_t>(i)][j] -=
                    factor * rows[static_cast<std::size_t>(r)][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace levi::detail
