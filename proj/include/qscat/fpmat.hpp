#pragma once

// Small dense linear algebra over a prime field Z_p, used for subspace
// computations (rank, membership, intersections) where vectors are
// prime-field coordinate tuples.

#include <vector>

#include "qscat/error.hpp"

namespace qscat::fp {

// Row echelon accumulator over Z_p.  Rows are reduced as they are added;
// membership queries reduce against the current row set.
class Echelon {
public:
    Echelon(long p, std::size_t width) : p_(p), width_(width) {}

    // Reduces r against the stored rows; if a nonzero remainder is left, the
    // row is inserted (keeping rows sorted by pivot column) and true is
    // returned, otherwise false.
    bool add_row(std::vector<int> r);

    // True iff r lies in the row span.
    bool contains(std::vector<int> r) const;

    int rank() const { return static_cast<int>(rows_.size()); }
    std::size_t width() const { return width_; }

private:
    // Reduces r in place; returns pivot column or -1 if reduced to zero.
    int reduce(std::vector<int>& r) const;

    long p_;
    std::size_t width_;
    std::vector<std::vector<int>> rows_; // each row normalized to pivot 1
    std::vector<int> pivots_;            // pivot column per row, ascending
};

int rank_of(long p, const std::vector<std::vector<int>>& rows);

// dim(U cap W) = dim U + dim W - dim(U + W)
int intersection_dim(long p, const std::vector<std::vector<int>>& ubasis,
                     const std::vector<std::vector<int>>& wbasis);

} // namespace qscat::fp
