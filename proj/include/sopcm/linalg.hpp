#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "sopcm/prime_field.hpp"

namespace sopcm {

/// Sparse row vector: (column, nonzero value) pairs with increasing columns.
using SparseRow = std::vector<std::pair<int, std::uint32_t>>;

/// Incremental row echelon form over GF(p). Rows are inserted one at a time;
/// rank() is the dimension of their span.
class RowEchelon {
public:
    RowEchelon(int ncols, const PrimeField& field)
        : ncols_(ncols), field_(field), pivot_row_(ncols, -1), buffer_(ncols, 0) {}

    int rank() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return ncols_; }
    bool full() const { return rank() == ncols_; }

    /// Returns true if the row was independent of the rows inserted so far.
    bool insert(const SparseRow& row) {
        if (row.empty() || full()) {
            return false;
        }
        int lo = ncols_;
        for (auto [c, v] : row) {
            buffer_[c] = field_.add(buffer_[c], v);
            lo = std::min(lo, c);
        }
        for (int c = lo; c < ncols_; ++c) {
            std::uint32_t v = buffer_[c];
            if (v == 0) continue;
            int r = pivot_row_[c];
            if (r < 0) {
                SparseRow fresh;
                std::uint32_t inv = field_.inv(v);
                for (int k = c; k < ncols_; ++k) {
                    if (buffer_[k] != 0) {
                        fresh.emplace_back(k, field_.mul(buffer_[k], inv));
                        buffer_[k] = 0;
                    }
                }
                pivot_row_[c] = static_cast<int>(rows_.size());
                rows_.push_back(std::move(fresh));
                return true;
            }
            for (auto [k, w] : rows_[r]) {
                buffer_[k] = field_.sub(buffer_[k], field_.mul(v, w));
            }
        }
        return false;
    }

private:
    int ncols_;
    PrimeField field_;
    std::vector<int> pivot_row_;
    std::vector<SparseRow> rows_;
    std::vector<std::uint32_t> buffer_;
};

inline int rank_mod_p(const std::vector<SparseRow>& rows, int ncols, const PrimeField& field) {
    RowEchelon ech(ncols, field);
    for (const auto& r : rows) {
        ech.insert(r);
        if (ech.full()) break;
    }
    return ech.rank();
}

}  // namespace sopcm
