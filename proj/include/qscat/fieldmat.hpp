#pragma once

// Dense matrices over a FieldCtx, sized for Dickson/Moore work (k <= ~20).

#include <vector>

#include "qscat/gf.hpp"

namespace qscat {

class FieldMat {
public:
    FieldMat(const FieldCtx* ctx, int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldCtx* ctx() const { return ctx_; }

    FElem& at(int r, int c) { return a_[static_cast<std::size_t>(r * cols_ + c)]; }
    const FElem& at(int r, int c) const { return a_[static_cast<std::size_t>(r * cols_ + c)]; }

    static FieldMat identity(const FieldCtx* ctx, int k);

    FElem det() const;
    int rank() const;
    // Inverse of a square matrix; throws NotInvertible when singular.
    FieldMat inverse() const;
    FieldMat mul(const FieldMat& other) const;

private:
    const FieldCtx* ctx_;
    int rows_;
    int cols_;
    std::vector<FElem> a_;
};

} // namespace qscat
