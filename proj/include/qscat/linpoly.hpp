#pragma once

// F_q-linearized polynomials sum a_i x^{q^i} over F_{q^n}, stored densely
// (length-n coefficient vector).  base_exp = m marks a polynomial as
// F_{q^m}-linearized: coefficients vanish off the multiples of m.

#include <optional>
#include <utility>
#include <vector>

#include "qscat/fieldmat.hpp"
#include "qscat/gf.hpp"

namespace qscat {

class LinPoly {
public:
    LinPoly(const FieldCtx* ctx, std::vector<FElem> coeffs, int base_exp = 1);

    static LinPoly zero(const FieldCtx* ctx);
    static LinPoly identity(const FieldCtx* ctx);
    static LinPoly monomial(const FieldCtx* ctx, int i, FElem coeff);

    const FieldCtx* ctx() const { return ctx_; }
    const std::vector<FElem>& coeffs() const { return coeffs_; }
    FElem coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    int base_exp() const { return base_exp_; }
    int n() const { return static_cast<int>(coeffs_.size()); }

    bool is_zero() const;
    // Largest i with a_i != 0; -1 for the zero polynomial.
    int q_degree() const;
    // Smallest i with a_i != 0; -1 for the zero polynomial.
    int min_exp() const;
    int term_count() const;

    FElem eval(FElem x) const;

    friend bool operator==(const LinPoly& a, const LinPoly& b);

private:
    const FieldCtx* ctx_;
    std::vector<FElem> coeffs_;
    int base_exp_;
};

LinPoly operator+(const LinPoly& f, const LinPoly& g);
LinPoly operator-(const LinPoly& f, const LinPoly& g);
LinPoly scale(FElem c, const LinPoly& f);

// Coefficients of f(h(x)) reduced mod x^{q^n} - x: the coefficient of
// x^{q^{(i+j) mod n}} accumulates a_i * b_j^{q^i}.
LinPoly compose(const LinPoly& f, const LinPoly& h);

// Adjoint w.r.t. the trace form: coefficient (n-i) mod n becomes a_i^{q^{n-i}}.
LinPoly adjoint(const LinPoly& f);

// f_rho(x) = f(rho x) - rho f(x); coefficient i becomes a_i (rho^{q^i} - rho).
LinPoly f_rho(const LinPoly& f, FElem rho);

// k x k Dickson matrix of an F_{q^m}-linearized polynomial (k = n/m):
// D[i][j] = a_{m((j-i) mod k)}^{q^{mi}}.  Nonzero determinant iff f is
// invertible on F_{q^n}.
FieldMat dickson_matrix(const LinPoly& f, int m);

bool is_invertible(const LinPoly& f);

// dim_{F_q} ker f, by exhaustive evaluation; the kernel size is verified to
// be a power of q.
int kernel_dim(const LinPoly& f);

// Inverse map as a linearized polynomial, via Dickson matrix inversion.
LinPoly inverse_poly(const LinPoly& f);

// Index-ell normalization: make monic, zero the coefficient at x^{q^ell},
// and when ell > 0 shift out the minimal exponent v (coefficients are
// Frobenius-twisted, the index drops to (ell - v) mod n).  Returns the
// normalized polynomial and the new index.
std::pair<LinPoly, int> normalize(const LinPoly& f, int ell);

} // namespace qscat
