#pragma once

// Finite field towers F_q <= F_{q^t} <= F_{q^n} at desk scale (p^d <= ~2^20),
// with exact log/exp tables behind a coordinate-vector element model.
//
// Elements are encoded as base-p digit strings (digit i = coefficient of x^i
// in the polynomial basis, x the class of X mod the field modulus).  All
// arithmetic is table-driven; the canonical element order is 0, g^0, g^1, ...
// for g the cached primitive generator, and every deterministic scan in this
// library walks that order.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "qscat/error.hpp"

namespace qscat {

class FieldCtx;

// Declares the working tower F_q <= F_{q^t} <= F_{q^n} inside a context of
// degree d = e*n over the prime field, where q = p^e and n = t*tprime.
struct Tower {
    int e = 1;
    int t = 1;
    int tprime = 1;
    int n() const { return t * tprime; }
};

// Values reference their owning context, which must outlive them.
struct FElem {
    const FieldCtx* ctx = nullptr;
    std::uint32_t v = 0;

    bool is_zero() const { return v == 0; }
    friend bool operator==(const FElem& a, const FElem& b) = default;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

class FieldCtx {
public:
    long p() const { return p_; }
    int d() const { return d_; }
    std::uint32_t size() const { return size_; }
    const std::vector<int>& modulus() const { return modulus_; }
    const std::optional<Tower>& tower() const { return tower_; }

    // Tower accessors; q()/n() fall back to (p, d) when no tower is declared.
    long q() const { return q_; }
    int e() const { return tower_ ? tower_->e : 1; }
    int n() const { return n_; }
    int t() const;
    int tprime() const;

    FElem zero() const { return {this, 0}; }
    FElem one() const { return one_; }
    FElem generator() const { return gen_; }
    FElem element(std::uint32_t raw) const;
    FElem gen_pow(long long k) const;
    FElem from_coords(const std::vector<int>& coords) const;
    std::vector<int> coords(FElem x) const;

    // Canonical total order: ord(0) = 0, ord(g^k) = 1 + k.
    std::uint32_t ord(FElem x) const;
    FElem by_ord(std::uint32_t o) const;
    long dlog(FElem x) const;

    FElem add(FElem a, FElem b) const;
    FElem sub(FElem a, FElem b) const;
    FElem neg(FElem a) const;
    FElem mul(FElem a, FElem b) const;
    FElem inv(FElem a) const;
    FElem div(FElem a, FElem b) const;
    FElem pow(FElem x, long long e) const;
    FElem frob_p(FElem x, long j) const; // x^{p^j}

    // x in F_{q^m} (m | n), via the Frobenius fixed-point test x^{q^m} = x.
    bool in_subfield_q(FElem x, int m) const;
    // All q^m elements of F_{q^m}, canonical order.
    std::vector<FElem> subfield_elements(int m) const;

    ~FieldCtx() = default;
    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

private:
    FieldCtx() = default;
    friend FieldPtr make_field(long, int, std::optional<std::vector<int>>, std::optional<Tower>);

    void check_elem(FElem x) const;

    long p_ = 0;
    int d_ = 0;
    long q_ = 0;
    int n_ = 0;
    std::uint32_t size_ = 0;
    std::vector<int> modulus_;
    std::optional<Tower> tower_;
    FElem one_;
    FElem gen_;
    std::vector<std::uint32_t> exp_; // exp_[k] = raw encoding of g^k, k < size-1
    std::vector<std::uint32_t> log_; // log_[raw] for raw != 0
};

FieldPtr make_field(long p, int d, std::optional<std::vector<int>> modulus = std::nullopt,
                    std::optional<Tower> tower = std::nullopt);
FieldPtr make_tower_field(long p, int e, int t, int tprime,
                          std::optional<std::vector<int>> modulus = std::nullopt);

// Shared per-process cache keyed by (p, d, tower); only default-modulus
// fields are cached.
FieldPtr cached_field(long p, int d, std::optional<Tower> tower = std::nullopt);

void check_same_ctx(FElem a, FElem b);

inline FElem operator+(FElem a, FElem b) { return a.ctx->add(a, b); }
inline FElem operator-(FElem a, FElem b) { return a.ctx->sub(a, b); }
inline FElem operator-(FElem a) { return a.ctx->neg(a); }
inline FElem operator*(FElem a, FElem b) { return a.ctx->mul(a, b); }
inline FElem operator/(FElem a, FElem b) { return a.ctx->div(a, b); }

// x^{q^i} for q = p^{e'} a subfield order of the context.
FElem frobenius(FElem x, long i, long q);

// Relative norm/trace from F_{q^n} to F_{q^m}; n must be the tower degree.
FElem rel_norm(FElem x, int n, int m);
FElem rel_trace(FElem x, int n, int m);

bool in_subfield(FElem x, int m);

// True iff the n/m elements are F_{q^m}-linearly independent, decided by the
// Moore-style determinant det(elems_i^{q^{mj}}).
bool is_basis_over(const std::vector<FElem>& elems, int m);

FElem primitive_element(const FieldCtx& ctx);

// Ring embedding of a small context into a big one, sending the small
// context's polynomial-basis root to the first root (canonical order) of the
// small modulus in the big field.
class Embedding {
public:
    Embedding(const FieldCtx* small, const FieldCtx* big);
    FElem operator()(FElem x) const;
    FElem root() const { return root_; }
    const FieldCtx* small() const { return small_; }
    const FieldCtx* big() const { return big_; }

private:
    const FieldCtx* small_;
    const FieldCtx* big_;
    FElem root_;
    std::vector<FElem> root_pows_;
};

Embedding build_embedding(const FieldCtx* small, const FieldCtx* big);

// F_{q^m}-basis of F_{q^n} obtained by a greedy scan of the canonical element
// order; deterministic and cached by callers that need a frame.
std::vector<FElem> greedy_basis_over(const FieldCtx& ctx, int m);

// Prime-field basis of the subfield F_{q^m}, greedy in canonical order.
std::vector<FElem> subfield_prime_basis(const FieldCtx& ctx, int m);

} // namespace qscat
