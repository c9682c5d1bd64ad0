#include "qscat/fieldmat.hpp"

#include <utility>

namespace qscat {

FieldMat::FieldMat(const FieldCtx* ctx, int rows, int cols)
    : ctx_(ctx), rows_(rows), cols_(cols),
      a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), ctx->zero()) {}

FieldMat FieldMat::identity(const FieldCtx* ctx, int k) {
    FieldMat m(ctx, k, k);
    for (int i = 0; i < k; ++i) m.at(i, i) = ctx->one();
    return m;
}

FElem FieldMat::det() const {
    if (rows_ != cols_) fail(Errc::Internal, "determinant of non-square matrix");
    FieldMat w = *this;
    FElem det = ctx_->one();
    for (int col = 0; col < cols_; ++col) {
        int piv = -1;
        for (int r = col; r < rows_; ++r)
            if (!w.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return ctx_->zero();
        if (piv != col) {
            for (int j = 0; j < cols_; ++j) std::swap(w.at(piv, j), w.at(col, j));
            det = ctx_->neg(det);
        }
        FElem pv = w.at(col, col);
        det = det * pv;
        for (int r = col + 1; r < rows_; ++r) {
            FElem f = w.at(r, col) / pv;
            if (f.is_zero()) continue;
            for (int j = col; j < cols_; ++j) w.at(r, j) = w.at(r, j) - f * w.at(col, j);
        }
    }
    return det;
}

int FieldMat::rank() const {
    FieldMat w = *this;
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int piv = -1;
        for (int r = rank; r < rows_; ++r)
            if (!w.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < cols_; ++j) std::swap(w.at(piv, j), w.at(rank, j));
        FElem pv = w.at(rank, col);
        for (int r = rank + 1; r < rows_; ++r) {
            FElem f = w.at(r, col) / pv;
            if (f.is_zero()) continue;
            for (int j = col; j < cols_; ++j) w.at(r, j) = w.at(r, j) - f * w.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

FieldMat FieldMat::inverse() const {
    if (rows_ != cols_) fail(Errc::Internal, "inverse of non-square matrix");
    int k = rows_;
    FieldMat w = *this;
    FieldMat inv = identity(ctx_, k);
    for (int col = 0; col < k; ++col) {
        int piv = -1;
        for (int r = col; r < k; ++r)
            if (!w.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) fail(Errc::NotInvertible, "singular matrix");
        if (piv != col)
            for (int j = 0; j < k; ++j) {
                std::swap(w.at(piv, j), w.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        FElem pv_inv = ctx_->inv(w.at(col, col));
        for (int j = 0; j < k; ++j) {
            w.at(col, j) = w.at(col, j) * pv_inv;
            inv.at(col, j) = inv.at(col, j) * pv_inv;
        }
        for (int r = 0; r < k; ++r) {
            if (r == col) continue;
            FElem f = w.at(r, col);
            if (f.is_zero()) continue;
            for (int j = 0; j < k; ++j) {
                w.at(r, j) = w.at(r, j) - f * w.at(col, j);
                inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

FieldMat FieldMat::mul(const FieldMat& other) const {
    if (cols_ != other.rows_) fail(Errc::Internal, "matrix dimension mismatch");
    FieldMat out(ctx_, rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            FElem v = at(i, k);
            if (v.is_zero()) continue;
            for (int j = 0; j < other.cols_; ++j)
                out.at(i, j) = out.at(i, j) + v * other.at(k, j);
        }
    return out;
}

} // namespace qscat
