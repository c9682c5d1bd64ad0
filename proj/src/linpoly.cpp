#include "qscat/linpoly.hpp"

#include <cstdint>

#include "qscat/intutil.hpp"

namespace qscat {

LinPoly::LinPoly(const FieldCtx* ctx, std::vector<FElem> coeffs, int base_exp)
    : ctx_(ctx), coeffs_(std::move(coeffs)), base_exp_(base_exp) {
    if (ctx_ == nullptr) fail(Errc::Internal, "linearized polynomial needs a context");
    int n = ctx_->n();
    if (static_cast<int>(coeffs_.size()) != n)
        fail(Errc::WrongLength, "coefficient vector must have length n");
    for (FElem c : coeffs_)
        if (c.ctx != ctx_) fail(Errc::CtxMismatch, "coefficient from a different context");
    if (base_exp_ < 1 || n % base_exp_ != 0)
        fail(Errc::BaseMismatch, "base exponent must divide n");
    if (base_exp_ > 1)
        for (int i = 0; i < n; ++i)
            if (i % base_exp_ != 0 && !coeffs_[static_cast<std::size_t>(i)].is_zero())
                fail(Errc::BaseMismatch, "nonzero coefficient off the declared base lattice");
}

LinPoly LinPoly::zero(const FieldCtx* ctx) {
    return LinPoly(ctx, std::vector<FElem>(static_cast<std::size_t>(ctx->n()), ctx->zero()));
}

LinPoly LinPoly::identity(const FieldCtx* ctx) { return monomial(ctx, 0, ctx->one()); }

LinPoly LinPoly::monomial(const FieldCtx* ctx, int i, FElem coeff) {
    int n = ctx->n();
    int ir = ((i % n) + n) % n;
    std::vector<FElem> cs(static_cast<std::size_t>(n), ctx->zero());
    cs[static_cast<std::size_t>(ir)] = coeff;
    return LinPoly(ctx, std::move(cs));
}

bool LinPoly::is_zero() const { return q_degree() < 0; }

int LinPoly::q_degree() const {
    for (int i = n() - 1; i >= 0; --i)
        if (!coeffs_[static_cast<std::size_t>(i)].is_zero()) return i;
    return -1;
}

int LinPoly::min_exp() const {
    for (int i = 0; i < n(); ++i)
        if (!coeffs_[static_cast<std::size_t>(i)].is_zero()) return i;
    return -1;
}

int LinPoly::term_count() const {
    int c = 0;
    for (FElem a : coeffs_)
        if (!a.is_zero()) ++c;
    return c;
}

FElem LinPoly::eval(FElem x) const {
    if (x.ctx != ctx_) fail(Errc::CtxMismatch, "evaluation point from a different context");
    FElem acc = ctx_->zero();
    long q = ctx_->q();
    for (int i = 0; i < n(); ++i) {
        FElem a = coeffs_[static_cast<std::size_t>(i)];
        if (a.is_zero()) continue;
        acc = acc + a * frobenius(x, i, q);
    }
    return acc;
}

bool operator==(const LinPoly& a, const LinPoly& b) {
    return a.ctx_ == b.ctx_ && a.coeffs_ == b.coeffs_;
}

LinPoly operator+(const LinPoly& f, const LinPoly& g) {
    if (f.ctx() != g.ctx()) fail(Errc::CtxMismatch, "polynomials from different contexts");
    std::vector<FElem> cs(static_cast<std::size_t>(f.n()));
    for (int i = 0; i < f.n(); ++i) cs[static_cast<std::size_t>(i)] = f.coeff(i) + g.coeff(i);
    int m = std::gcd(f.base_exp(), g.base_exp());
    return LinPoly(f.ctx(), std::move(cs), m);
}

LinPoly operator-(const LinPoly& f, const LinPoly& g) {
    if (f.ctx() != g.ctx()) fail(Errc::CtxMismatch, "polynomials from different contexts");
    std::vector<FElem> cs(static_cast<std::size_t>(f.n()));
    for (int i = 0; i < f.n(); ++i) cs[static_cast<std::size_t>(i)] = f.coeff(i) - g.coeff(i);
    int m = std::gcd(f.base_exp(), g.base_exp());
    return LinPoly(f.ctx(), std::move(cs), m);
}

LinPoly scale(FElem c, const LinPoly& f) {
    if (c.ctx != f.ctx()) fail(Errc::CtxMismatch, "scalar from a different context");
    std::vector<FElem> cs(static_cast<std::size_t>(f.n()));
    for (int i = 0; i < f.n(); ++i) cs[static_cast<std::size_t>(i)] = c * f.coeff(i);
    return LinPoly(f.ctx(), std::move(cs), f.base_exp());
}

LinPoly compose(const LinPoly& f, const LinPoly& h) {
    if (f.ctx() != h.ctx()) fail(Errc::CtxMismatch, "polynomials from different contexts");
    const FieldCtx* ctx = f.ctx();
    int n = f.n();
    long q = ctx->q();
    std::vector<FElem> cs(static_cast<std::size_t>(n), ctx->zero());
    for (int i = 0; i < n; ++i) {
        FElem a = f.coeff(i);
        if (a.is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            FElem b = h.coeff(j);
            if (b.is_zero()) continue;
            int k = (i + j) % n;
            cs[static_cast<std::size_t>(k)] =
                cs[static_cast<std::size_t>(k)] + a * frobenius(b, i, q);
        }
    }
    return LinPoly(ctx, std::move(cs));
}

LinPoly adjoint(const LinPoly& f) {
    const FieldCtx* ctx = f.ctx();
    int n = f.n();
    long q = ctx->q();
    std::vector<FElem> cs(static_cast<std::size_t>(n), ctx->zero());
    for (int i = 0; i < n; ++i) {
        FElem a = f.coeff(i);
        if (a.is_zero()) continue;
        cs[static_cast<std::size_t>((n - i) % n)] = frobenius(a, n - i, q);
    }
    return LinPoly(ctx, std::move(cs), f.base_exp());
}

LinPoly f_rho(const LinPoly& f, FElem rho) {
    if (rho.ctx != f.ctx()) fail(Errc::CtxMismatch, "rho from a different context");
    if (rho.is_zero()) fail(Errc::ZeroRho, "rho must be nonzero");
    const FieldCtx* ctx = f.ctx();
    long q = ctx->q();
    std::vector<FElem> cs(static_cast<std::size_t>(f.n()), ctx->zero());
    for (int i = 0; i < f.n(); ++i) {
        FElem a = f.coeff(i);
        if (a.is_zero()) continue;
        cs[static_cast<std::size_t>(i)] = a * (frobenius(rho, i, q) - rho);
    }
    return LinPoly(ctx, std::move(cs), f.base_exp());
}

FieldMat dickson_matrix(const LinPoly& f, int m) {
    const FieldCtx* ctx = f.ctx();
    int n = f.n();
    if (m < 1 || n % m != 0) fail(Errc::BaseMismatch, "base exponent must divide n");
    for (int i = 0; i < n; ++i)
        if (i % m != 0 && !f.coeff(i).is_zero())
            fail(Errc::BaseMismatch, "polynomial is not F_{q^m}-linearized");
    int k = n / m;
    long q = ctx->q();
    FieldMat D(ctx, k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            int idx = m * (((j - i) % k + k) % k);
            D.at(i, j) = frobenius(f.coeff(idx), static_cast<long>(m) * i, q);
        }
    return D;
}

bool is_invertible(const LinPoly& f) {
    if (f.is_zero()) return false;
    return !dickson_matrix(f, f.base_exp()).det().is_zero();
}

int kernel_dim(const LinPoly& f) {
    const FieldCtx* ctx = f.ctx();
    std::uint64_t count = 0;
    for (std::uint32_t o = 0; o < ctx->size(); ++o)
        if (f.eval(ctx->by_ord(o)).is_zero()) ++count;
    long q = ctx->q();
    int dim = 0;
    std::uint64_t v = count;
    while (v > 1) {
        if (v % static_cast<std::uint64_t>(q) != 0)
            fail(Errc::Internal, "kernel size is not a power of q");
        v /= static_cast<std::uint64_t>(q);
        ++dim;
    }
    return dim;
}

LinPoly inverse_poly(const LinPoly& f) {
    const FieldCtx* ctx = f.ctx();
    FieldMat D = dickson_matrix(f, f.base_exp());
    FieldMat Dinv = D.inverse(); // throws NotInvertible when singular
    // The Dickson map is multiplicative for composition, so the inverse
    // polynomial's coefficients sit in row 0 of the inverse matrix.
    int m = f.base_exp();
    int k = f.n() / m;
    std::vector<FElem> cs(static_cast<std::size_t>(f.n()), ctx->zero());
    for (int j = 0; j < k; ++j) cs[static_cast<std::size_t>(m * j)] = Dinv.at(0, j);
    LinPoly g(ctx, std::move(cs), m);
    return g;
}

std::pair<LinPoly, int> normalize(const LinPoly& f, int ell) {
    if (f.is_zero()) fail(Errc::ZeroPolynomial, "cannot normalize the zero polynomial");
    if (ell < 0 || ell >= f.n()) fail(Errc::ExponentRange, "index out of range");
    const FieldCtx* ctx = f.ctx();
    long q = ctx->q();
    int n = f.n();

    // drop the term at the index, then make monic (dropping the leading term
    // itself is possible, so the scale comes after)
    std::vector<FElem> cs = f.coeffs();
    cs[static_cast<std::size_t>(ell)] = ctx->zero();
    LinPoly g(ctx, std::move(cs));
    if (g.is_zero()) fail(Errc::ZeroPolynomial, "polynomial vanished during normalization");
    g = scale(ctx->inv(g.coeff(g.q_degree())), g);
    int new_ell = ell;
    if (ell > 0) {
        int v = g.min_exp();
        if (v > 0) {
            std::vector<FElem> shifted(static_cast<std::size_t>(n), ctx->zero());
            for (int i = 0; i < n; ++i) {
                FElem a = g.coeff(i);
                if (a.is_zero()) continue;
                shifted[static_cast<std::size_t>(i - v)] = frobenius(a, n - v, q);
            }
            g = LinPoly(ctx, std::move(shifted));
            new_ell = ((ell - v) % n + n) % n;
        }
    }
    return {g, new_ell};
}

} // namespace qscat
