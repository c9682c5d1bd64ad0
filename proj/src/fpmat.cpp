#include "qscat/fpmat.hpp"

#include <algorithm>

namespace qscat::fp {

namespace {

long inv_mod(long a, long p) {
    // p is a small prime, brute scan is fine
    a %= p;
    if (a < 0) a += p;
    for (long x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    fail(Errc::Internal, "no modular inverse");
}

} // namespace

int Echelon::reduce(std::vector<int>& r) const {
    if (r.size() != width_) fail(Errc::Internal, "echelon row width mismatch");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        int c = pivots_[k];
        long coef = r[c] % p_;
        if (coef == 0) continue;
        for (std::size_t j = 0; j < width_; ++j) {
            long v = (r[j] - coef * rows_[k][j]) % p_;
            if (v < 0) v += p_;
            r[j] = static_cast<int>(v);
        }
    }
    for (std::size_t j = 0; j < width_; ++j)
        if (r[j] % p_ != 0) return static_cast<int>(j);
    return -1;
}

bool Echelon::add_row(std::vector<int> r) {
    for (auto& x : r) {
        x %= static_cast<int>(p_);
        if (x < 0) x += static_cast<int>(p_);
    }
    int piv = reduce(r);
    if (piv < 0) return false;
    long scale = inv_mod(r[piv], p_);
    for (auto& x : r) x = static_cast<int>(x * scale % p_);
    // keep rows ordered by pivot column and re-reduce earlier rows
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(r));
    pivots_.insert(pivots_.begin() + static_cast<long>(pos), piv);
    // back-substitute so every stored row has zeros at all other pivots
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (static_cast<int>(k) == static_cast<int>(pos)) continue;
        long coef = rows_[k][piv] % p_;
        if (coef == 0) continue;
        for (std::size_t j = 0; j < width_; ++j) {
            long v = (rows_[k][j] - coef * rows_[pos][j]) % p_;
            if (v < 0) v += p_;
            rows_[k][j] = static_cast<int>(v);
        }
    }
    return true;
}

bool Echelon::contains(std::vector<int> r) const {
    for (auto& x : r) {
        x %= static_cast<int>(p_);
        if (x < 0) x += static_cast<int>(p_);
    }
    return reduce(r) < 0;
}

int rank_of(long p, const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) return 0;
    Echelon e(p, rows.front().size());
    for (const auto& r : rows) e.add_row(r);
    return e.rank();
}

int intersection_dim(long p, const std::vector<std::vector<int>>& ubasis,
                     const std::vector<std::vector<int>>& wbasis) {
    int du = rank_of(p, ubasis);
    int dw = rank_of(p, wbasis);
    std::vector<std::vector<int>> all = ubasis;
    all.insert(all.end(), wbasis.begin(), wbasis.end());
    int dsum = rank_of(p, all);
    return du + dw - dsum;
}

} // namespace qscat::fp
