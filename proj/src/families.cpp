#include "qscat/families.hpp"

#include <numeric>

#include "qscat/intutil.hpp"

namespace qscat {

MonomialStatus monomial_status(long u, long n, long t) {
    if (u < 1) fail(Errc::ExponentRange, "u must be >= 1");
    if (t < 1 || n % t != 0) fail(Errc::NotDivisor, "t must divide n");
    long gn = std::gcd(u, n);
    long gt = std::gcd(u, t);
    MonomialStatus st;
    st.l_partial = t % gn == 0;
    st.r_partial = gt == 1;
    st.scattered = gn == 1;
    st.exceptional_L_not_scattered = gn != 1 && st.l_partial;
    st.exceptional_R_not_scattered = gt == 1 && gt < gn;
    return st;
}

LinPoly lp_poly(FElem delta, int s, int n) {
    const FieldCtx* ctx = delta.ctx;
    if (ctx == nullptr) fail(Errc::Internal, "unbound element");
    if (n != ctx->n()) fail(Errc::WrongTower, "n must match the context tower");
    if (std::gcd(s, n) != 1) fail(Errc::GcdViolation, "lp polynomial requires gcd(s, n) = 1");
    std::vector<FElem> cs(static_cast<std::size_t>(n), ctx->zero());
    int hi = static_cast<int>((static_cast<long>(s) * (n - 1)) % n);
    int lo = s % n;
    cs[static_cast<std::size_t>(hi)] = cs[static_cast<std::size_t>(hi)] + ctx->one();
    cs[static_cast<std::size_t>(lo)] = cs[static_cast<std::size_t>(lo)] + delta;
    return LinPoly(ctx, std::move(cs));
}

LpOddStatus lp_status_odd_n(FElem delta, int s, int n, int t) {
    const FieldCtx* ctx = delta.ctx;
    if (ctx == nullptr) fail(Errc::Internal, "unbound element");
    if (n % 2 == 0) fail(Errc::EvenN, "only odd n is characterized");
    if (n != ctx->n()) fail(Errc::WrongTower, "n must match the context tower");
    if (t < 1 || n % t != 0) fail(Errc::NotDivisor, "t must divide n");
    if (std::gcd(s, n) != 1) fail(Errc::GcdViolation, "lp polynomial requires gcd(s, n) = 1");
    LpOddStatus st;
    if (!delta.is_zero() && rel_norm(delta, n, 1) == ctx->one()) {
        st.r_partial = false;
        // the L conclusion is vacuous at t = n, so the statement only bites
        // for proper divisors
        st.l_partial = t < n ? std::optional<bool>(false) : std::optional<bool>(true);
    }
    return st;
}

LinPoly g_a_poly(const std::vector<FElem>& a, int t) {
    if (a.empty()) fail(Errc::ZeroVector, "empty coefficient vector");
    const FieldCtx* ctx = a.front().ctx;
    if (ctx == nullptr) fail(Errc::Internal, "unbound element");
    int n = ctx->n();
    if (t < 1 || n % t != 0) fail(Errc::NotDivisor, "t must divide n");
    if (static_cast<int>(a.size()) != n / t)
        fail(Errc::WrongLength, "need tprime = n/t coefficients");
    std::vector<FElem> cs(static_cast<std::size_t>(n), ctx->zero());
    for (int i = 0; i < n / t; ++i) cs[static_cast<std::size_t>(i * t)] = a[static_cast<std::size_t>(i)];
    return LinPoly(ctx, std::move(cs), t);
}

LinPoly family11(const std::vector<FElem>& a, int s, int t) {
    if (a.empty()) fail(Errc::ZeroVector, "empty coefficient vector");
    const FieldCtx* ctx = a.front().ctx;
    if (ctx == nullptr) fail(Errc::Internal, "unbound element");
    int n = ctx->n();
    if (t < 1 || n % t != 0) fail(Errc::NotDivisor, "t must divide n");
    if (std::gcd(s, t) != 1) fail(Errc::GcdViolation, "family requires gcd(s, t) = 1");
    if (static_cast<int>(a.size()) != n / t)
        fail(Errc::WrongLength, "need tprime = n/t coefficients");
    bool all_zero = true;
    for (FElem c : a)
        if (!c.is_zero()) all_zero = false;
    if (all_zero) fail(Errc::ZeroVector, "coefficient vector must be nonzero");
    std::vector<FElem> cs(static_cast<std::size_t>(n), ctx->zero());
    for (int i = 0; i < n / t; ++i) {
        int e = (i * t + s) % n;
        if (e < 0) e += n;
        cs[static_cast<std::size_t>(e)] = cs[static_cast<std::size_t>(e)] + a[static_cast<std::size_t>(i)];
    }
    return LinPoly(ctx, std::move(cs));
}

bool family11_is_R_partial(const std::vector<FElem>& a, int s, int t) {
    family11(a, s, t); // parameter validation
    return is_invertible(g_a_poly(a, t));
}

std::optional<std::pair<int, std::vector<FElem>>> form11_shape(const LinPoly& f, int t) {
    const FieldCtx* ctx = f.ctx();
    int n = ctx->n();
    if (t < 1 || n % t != 0) fail(Errc::NotDivisor, "t must divide n");
    if (f.is_zero()) return std::nullopt;
    int s = -1;
    for (int i = 0; i < n; ++i) {
        if (f.coeff(i).is_zero()) continue;
        if (s < 0) s = i % t;
        else if (i % t != s) return std::nullopt;
    }
    if (std::gcd(s, t) != 1) return std::nullopt;
    std::vector<FElem> a(static_cast<std::size_t>(n / t), ctx->zero());
    for (int i = 0; i < n / t; ++i) a[static_cast<std::size_t>(i)] = f.coeff((i * t + s) % n);
    return std::make_pair(s, a);
}

std::pair<LinPoly, bool> compose_construct(const std::vector<FElem>& a, const LinPoly& phi,
                                           int t, bool verify_phi) {
    if (verify_phi) {
        ScatterReport rep = is_R_partial_criterion(phi, t);
        if (!rep.holds) fail(Errc::PhiNotRPartial, "phi failed the R-partial criterion");
    }
    LinPoly ga = g_a_poly(a, t);
    return {compose(ga, phi), is_invertible(ga)};
}

BinomialRStatus binomial_is_R_partial(FElem alpha, int k, int s, int t, int tprime) {
    const FieldCtx* ctx = alpha.ctx;
    if (ctx == nullptr) fail(Errc::Internal, "unbound element");
    int n = ctx->n();
    if (t * tprime != n) fail(Errc::WrongTower, "t * tprime must equal the tower degree");
    if (std::gcd(s, t) != 1) fail(Errc::GcdViolation, "binomial requires gcd(s, t) = 1");
    if (k <= 0 || k * t + s >= n) fail(Errc::ExponentRange, "need 0 < k and kt + s < n");
    if (alpha.is_zero()) fail(Errc::ZeroVector, "alpha must be nonzero for a binomial");
    int m = t * static_cast<int>(std::gcd(static_cast<long>(k), static_cast<long>(tprime)));
    BinomialRStatus st;
    st.holds = !(rel_norm(-alpha, n, m) == ctx->one());
    st.exceptional_evidence = st.holds;
    return st;
}

FElem trinomial_condition_value(FElem alpha, FElem beta, int t) {
    const FieldCtx* ctx = alpha.ctx;
    if (ctx == nullptr) fail(Errc::Internal, "unbound element");
    check_same_ctx(alpha, beta);
    int n = ctx->n();
    if (n != 3 * t) fail(Errc::WrongTower, "trinomial condition requires n = 3t");
    FElem na = rel_norm(alpha, n, t);
    FElem nb = rel_norm(beta, n, t);
    FElem tr = rel_trace(alpha * frobenius(beta, t, ctx->q()), n, t);
    return na + nb - tr + ctx->one();
}

bool trinomial_is_R_partial(FElem alpha, FElem beta, int s, int t) {
    if (std::gcd(s, t) != 1) fail(Errc::GcdViolation, "trinomial requires gcd(s, t) = 1");
    return !trinomial_condition_value(alpha, beta, t).is_zero();
}

std::vector<FElem> invertible_from_basis(FElem alpha, const std::vector<FElem>& basis, int s, int t) {
    const FieldCtx* ctx = alpha.ctx;
    if (ctx == nullptr) fail(Errc::Internal, "unbound element");
    int n = ctx->n();
    if (t < 1 || n % t != 0) fail(Errc::NotDivisor, "t must divide n");
    if (std::gcd(s, t) != 1) fail(Errc::GcdViolation, "gcd(s, t) = 1 required");
    int tprime = n / t;
    // primitive <=> multiplicative order is size - 1 <=> dlog coprime to size - 1
    if (alpha.is_zero() || std::gcd(static_cast<long long>(ctx->dlog(alpha)),
                                    static_cast<long long>(ctx->size() - 1)) != 1)
        fail(Errc::NotPrimitive, "alpha must be a primitive element");
    if (static_cast<int>(basis.size()) != tprime) fail(Errc::WrongLength, "basis must have tprime elements");
    if (!is_basis_over(basis, t)) fail(Errc::NotBasis, "elements are not an F_{q^t}-basis");
    std::vector<FElem> a(static_cast<std::size_t>(tprime), ctx->zero());
    long q = ctx->q();
    for (int i = 0; i < tprime; ++i) {
        FElem acc = ctx->zero();
        FElem apow = frobenius(alpha, static_cast<long>(i) * t, q); // alpha^{q^{it}}
        FElem cur = ctx->one();
        for (int j = 0; j < tprime; ++j) {
            acc = acc + cur * basis[static_cast<std::size_t>(j)];
            cur = cur * apow;
        }
        a[static_cast<std::size_t>(i)] = acc;
    }
    if (!is_invertible(g_a_poly(a, t))) fail(Errc::Internal, "constructed coefficients are not invertible");
    return a;
}

Form11Count count_R_partial_form11(long q, int t, int tprime, std::uint64_t budget) {
    auto pf = prime_factors(q);
    if (pf.empty()) fail(Errc::NonPrime, "q must be a prime power > 1");
    long p = pf.front();
    int e = power_exponent(p, q);
    if (e < 0) fail(Errc::NonPrime, "q must be a prime power");
    int n = t * tprime;

    Form11Count out;
    out.formula = 1;
    for (int i = 0; i < tprime; ++i) {
        BigInt qn = 1, qit = 1;
        for (int j = 0; j < n; ++j) qn *= q;
        for (int j = 0; j < i * t; ++j) qit *= q;
        out.formula *= qn - qit;
    }

    std::uint64_t qn_u = ipow(static_cast<std::uint64_t>(q), static_cast<unsigned>(n));
    bool over = false;
    std::uint64_t tuples = 1;
    for (int i = 0; i < tprime; ++i) {
        if (tuples > budget / qn_u) {
            over = true;
            break;
        }
        tuples *= qn_u;
    }
    if (over) return out; // formula only

    FieldPtr ctx = cached_field(p, e * n, Tower{e, t, tprime});
    std::vector<FElem> a(static_cast<std::size_t>(tprime), ctx->zero());
    std::uint64_t count = 0;
    std::vector<std::uint32_t> idx(static_cast<std::size_t>(tprime), 0);
    while (true) {
        for (int i = 0; i < tprime; ++i) a[static_cast<std::size_t>(i)] = ctx->by_ord(idx[static_cast<std::size_t>(i)]);
        bool all_zero = true;
        for (FElem c : a)
            if (!c.is_zero()) all_zero = false;
        if (!all_zero && is_invertible(g_a_poly(a, t))) ++count;
        int pos = 0;
        while (pos < tprime) {
            if (++idx[static_cast<std::size_t>(pos)] < ctx->size()) break;
            idx[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == tprime) break;
    }
    out.enumerated = count;
    return out;
}

BinomialRNotScattered binomial_R_not_scattered(FElem delta, int s, int t, std::uint64_t oracle_budget) {
    const FieldCtx* ctx = delta.ctx;
    if (ctx == nullptr) fail(Errc::Internal, "unbound element");
    int n = ctx->n();
    if (n != 2 * t) fail(Errc::WrongTower, "requires n = 2t");
    if (std::gcd(s, t) != 1) fail(Errc::GcdViolation, "requires gcd(s, t) = 1");
    long q = ctx->q();

    BinomialRNotScattered out;
    long bound = (q == 3 && s > 1) || (q == 2 && s > 2) ? 4L * s + 2 : 4L * s + 1;
    bool norm_ok = !delta.is_zero() && !(rel_norm(delta, n, t) == ctx->one());
    out.applies = n >= bound && norm_ok;
    if (!out.applies) return out;
    out.r_partial = true;
    out.scattered = false;

    if (ctx->size() <= oracle_budget) {
        std::vector<FElem> a = {delta, ctx->one()};
        LinPoly f = family11(a, s, t);
        ScatterReport rs = is_scattered_oracle(f, 0);
        ScatterReport rr = is_R_partial_oracle(f, t, 0);
        if (rs.holds || !rr.holds) fail(Errc::Internal, "oracle contradicts the stated statuses");
        out.oracle_checked = true;
        for (std::uint32_t o = 1; o < ctx->size(); ++o) {
            FElem m = ctx->by_ord(o);
            LinPoly shifted = f - scale(m, LinPoly::identity(ctx));
            if (kernel_dim(shifted) == 2) {
                out.witness_m = m;
                break;
            }
        }
    }
    return out;
}

LinPoly quadrinomial(const FieldCtx* ctx, int s, int k, int t) {
    if (ctx == nullptr) fail(Errc::Internal, "null context");
    int n = ctx->n();
    if (n != 2 * t) fail(Errc::WrongTower, "quadrinomial lives over F_{q^{2t}}");
    if (std::gcd(static_cast<long>(s), 2L * t) != 1 || std::gcd(static_cast<long>(k), 2L * t) != 1)
        fail(Errc::GcdViolation, "requires gcd(s, 2t) = gcd(k, 2t) = 1");
    std::vector<FElem> cs(static_cast<std::size_t>(n), ctx->zero());
    auto addc = [&](int e, FElem c) {
        int r = ((e % n) + n) % n;
        cs[static_cast<std::size_t>(r)] = cs[static_cast<std::size_t>(r)] + c;
    };
    addc(s, ctx->one());
    addc(t + s, ctx->one());
    addc(k, ctx->one());
    addc(t + k, ctx->neg(ctx->one())); // collapses to +1 in characteristic 2
    return LinPoly(ctx, std::move(cs));
}

} // namespace qscat
