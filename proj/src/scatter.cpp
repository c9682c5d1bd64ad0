#include "qscat/scatter.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

#include "qscat/intutil.hpp"

namespace qscat {

using BigInt = boost::multiprecision::cpp_int;

const char* property_name(Property p) {
    switch (p) {
        case Property::Scattered: return "scattered";
        case Property::LPartial: return "L";
        case Property::RPartial: return "R";
    }
    return "?";
}

const char* method_name(Method m) {
    switch (m) {
        case Method::Oracle: return "oracle";
        case Method::Criterion: return "criterion";
        case Method::Curve: return "curve";
    }
    return "?";
}

namespace {

void check_t(const FieldCtx* ctx, int t) {
    if (t < 1 || ctx->n() % t != 0) fail(Errc::NotDivisor, "t must divide n");
}

void check_ell(const FieldCtx* ctx, int ell) {
    if (ell < 0 || ell >= ctx->n()) fail(Errc::ExponentRange, "index out of range");
}

// ratio y/z lies in F_{q^m}
bool ratio_in(const FieldCtx* ctx, FElem y, FElem z, int m) {
    return ctx->in_subfield_q(y / z, m);
}

// Canonical-order fibers of r(x) = f(x)/x^{q^ell} over F_{q^n}^*; within a
// fiber the elements keep the scan order, and fibers are listed by first
// occurrence (so fiber minima ascend).
std::vector<std::vector<FElem>> fibers_of(const LinPoly& f, int ell) {
    const FieldCtx* ctx = f.ctx();
    std::vector<int> bucket_of(ctx->size(), -1);
    std::vector<std::vector<FElem>> fibers;
    for (std::uint32_t o = 1; o < ctx->size(); ++o) {
        FElem x = ctx->by_ord(o);
        FElem rx = f.eval(x) / frobenius(x, ell, ctx->q());
        int& b = bucket_of[rx.v];
        if (b < 0) {
            b = static_cast<int>(fibers.size());
            fibers.emplace_back();
        }
        fibers[static_cast<std::size_t>(b)].push_back(x);
    }
    return fibers;
}

// Conclusion predicate for a ratio, per property.
bool conclusion_ok(const FieldCtx* ctx, Property prop, int t, FElem y, FElem z) {
    switch (prop) {
        case Property::Scattered: return ratio_in(ctx, y, z, 1);
        case Property::LPartial: return ratio_in(ctx, y, z, t);
        case Property::RPartial: return !ratio_in(ctx, y, z, t) || ratio_in(ctx, y, z, 1);
    }
    return false;
}

ScatterReport oracle_generic(const LinPoly& f, Property prop, int t, int ell, bool naive) {
    const FieldCtx* ctx = f.ctx();
    check_t(ctx, t);
    check_ell(ctx, ell);
    ScatterReport rep{prop, t, ell, Method::Oracle, true, std::nullopt};

    if (naive) {
        for (std::uint32_t oy = 1; oy < ctx->size(); ++oy) {
            FElem y = ctx->by_ord(oy);
            FElem ry = f.eval(y) / frobenius(y, ell, ctx->q());
            for (std::uint32_t oz = 1; oz < ctx->size(); ++oz) {
                if (oz == oy) continue;
                FElem z = ctx->by_ord(oz);
                FElem rz = f.eval(z) / frobenius(z, ell, ctx->q());
                if (ry == rz && !conclusion_ok(ctx, prop, t, y, z)) {
                    rep.holds = false;
                    rep.witness = std::make_pair(y, z);
                    return rep;
                }
            }
        }
        return rep;
    }

    // Coset arithmetic on discrete logs: y/z in F_{q^m} iff the logs agree
    // mod step_m = (q^n - 1)/(q^m - 1).
    std::uint64_t group = ctx->size() - 1;
    std::uint64_t qt = ipow(static_cast<std::uint64_t>(ctx->q()), static_cast<unsigned>(t));
    std::uint64_t step_t = group / (qt - 1);
    std::uint64_t step_1 = group / (static_cast<std::uint64_t>(ctx->q()) - 1);

    std::optional<std::pair<FElem, FElem>> best;
    auto better = [&](const std::pair<FElem, FElem>& cand) {
        if (!best) return true;
        auto ko = std::make_pair(ctx->ord(cand.first), ctx->ord(cand.second));
        auto kb = std::make_pair(ctx->ord(best->first), ctx->ord(best->second));
        return ko < kb;
    };

    for (const auto& fiber : fibers_of(f, ell)) {
        if (fiber.size() < 2) continue;
        std::uint64_t log0 = static_cast<std::uint64_t>(ctx->dlog(fiber.front()));
        if (prop == Property::Scattered || prop == Property::LPartial) {
            std::uint64_t step = prop == Property::Scattered ? step_1 : step_t;
            // a violating fiber contains an element outside the lead coset
            for (const FElem& z : fiber) {
                std::uint64_t lz = static_cast<std::uint64_t>(ctx->dlog(z));
                if ((lz + group - log0) % group % step != 0) {
                    std::pair<FElem, FElem> cand{fiber.front(), z};
                    if (better(cand)) best = cand;
                    break;
                }
            }
        } else {
            // R: group the fiber by F_{q^t}-coset (first-seen order keeps the
            // coset minima ascending); a coset spanning two F_q-orbits is a
            // violation witnessed by its first two such elements
            std::vector<std::uint64_t> coset_key;
            std::vector<std::vector<const FElem*>> groups;
            for (const FElem& z : fiber) {
                std::uint64_t key = static_cast<std::uint64_t>(ctx->dlog(z)) % step_t;
                std::size_t gi = 0;
                for (; gi < coset_key.size(); ++gi)
                    if (coset_key[gi] == key) break;
                if (gi == coset_key.size()) {
                    coset_key.push_back(key);
                    groups.emplace_back();
                }
                groups[gi].push_back(&z);
            }
            for (const auto& g : groups) {
                if (g.size() < 2) continue;
                std::uint64_t lead = static_cast<std::uint64_t>(ctx->dlog(*g.front())) % step_1;
                const FElem* partner = nullptr;
                for (std::size_t i = 1; i < g.size(); ++i)
                    if (static_cast<std::uint64_t>(ctx->dlog(*g[i])) % step_1 != lead) {
                        partner = g[i];
                        break;
                    }
                if (partner != nullptr) {
                    std::pair<FElem, FElem> cand{*g.front(), *partner};
                    if (better(cand)) best = cand;
                    break; // later cosets in this fiber have larger minima
                }
            }
        }
    }
    if (best) {
        rep.holds = false;
        rep.witness = best;
    }
    return rep;
}

ScatterReport criterion_generic(const LinPoly& f, Property prop, int t) {
    const FieldCtx* ctx = f.ctx();
    check_t(ctx, t);
    ScatterReport rep{prop, t, 0, Method::Criterion, true, std::nullopt};
    auto in_range = [&](FElem rho) {
        switch (prop) {
            case Property::Scattered: return !ctx->in_subfield_q(rho, 1);
            case Property::LPartial: return !ctx->in_subfield_q(rho, t);
            case Property::RPartial:
                return ctx->in_subfield_q(rho, t) && !ctx->in_subfield_q(rho, 1);
        }
        return false;
    };
    for (std::uint32_t o = 1; o < ctx->size(); ++o) {
        FElem rho = ctx->by_ord(o);
        if (!in_range(rho)) continue;
        LinPoly frho = f_rho(f, rho);
        if (!is_invertible(frho)) {
            // kernel element w gives the violating pair (rho*w, w)
            FElem w = ctx->zero();
            for (std::uint32_t ow = 1; ow < ctx->size(); ++ow) {
                FElem cand = ctx->by_ord(ow);
                if (frho.eval(cand).is_zero()) {
                    w = cand;
                    break;
                }
            }
            if (w.is_zero()) fail(Errc::Internal, "singular map without kernel element");
            rep.holds = false;
            rep.witness = std::make_pair(rho * w, w);
            return rep;
        }
    }
    return rep;
}

} // namespace

bool witness_violates(const LinPoly& f, const ScatterReport& r) {
    if (!r.witness) return false;
    const FieldCtx* ctx = f.ctx();
    auto [y, z] = *r.witness;
    if (y.is_zero() || z.is_zero()) return false;
    FElem ry = f.eval(y) / frobenius(y, r.ell, ctx->q());
    FElem rz = f.eval(z) / frobenius(z, r.ell, ctx->q());
    if (!(ry == rz)) return false;
    return !conclusion_ok(ctx, r.property, r.t, y, z);
}

ScatterReport is_scattered_oracle(const LinPoly& f, int ell, bool naive) {
    return oracle_generic(f, Property::Scattered, 1, ell, naive);
}

ScatterReport is_L_partial_oracle(const LinPoly& f, int t, int ell, bool naive) {
    return oracle_generic(f, Property::LPartial, t, ell, naive);
}

ScatterReport is_R_partial_oracle(const LinPoly& f, int t, int ell, bool naive) {
    return oracle_generic(f, Property::RPartial, t, ell, naive);
}

ScatterReport is_R_partial_criterion(const LinPoly& f, int t) {
    return criterion_generic(f, Property::RPartial, t);
}

ScatterReport is_L_partial_criterion(const LinPoly& f, int t) {
    return criterion_generic(f, Property::LPartial, t);
}

ScatterReport is_scattered_criterion(const LinPoly& f) {
    return criterion_generic(f, Property::Scattered, 1);
}

FElem curve_numerator(const LinPoly& f, int ell, FElem x, FElem y) {
    const FieldCtx* ctx = f.ctx();
    check_ell(ctx, ell);
    if (x.ctx != ctx || y.ctx != ctx) fail(Errc::CtxMismatch, "points from a different context");
    return f.eval(x) * frobenius(y, ell, ctx->q()) - f.eval(y) * frobenius(x, ell, ctx->q());
}

ScatterReport l_partial_via_curve(const LinPoly& f, int t, int ell) {
    const FieldCtx* ctx = f.ctx();
    check_t(ctx, t);
    check_ell(ctx, ell);
    ScatterReport rep{Property::LPartial, t, ell, Method::Curve, true, std::nullopt};
    for (std::uint32_t ox = 1; ox < ctx->size(); ++ox) {
        FElem x = ctx->by_ord(ox);
        for (std::uint32_t oy = 1; oy < ctx->size(); ++oy) {
            FElem y = ctx->by_ord(oy);
            if (ratio_in(ctx, y, x, 1)) continue; // trivial lines Y = lambda X
            if (!curve_numerator(f, ell, x, y).is_zero()) continue;
            if (!ratio_in(ctx, y, x, t)) {
                rep.holds = false;
                rep.witness = std::make_pair(x, y);
                return rep;
            }
        }
    }
    return rep;
}

std::vector<std::pair<long, bool>> exceptionality_probe(const LinPoly& f, int t,
                                                        Property property,
                                                        const std::vector<long>& m_list,
                                                        std::uint64_t budget) {
    const FieldCtx* ctx = f.ctx();
    check_t(ctx, t);
    std::vector<std::pair<long, bool>> out;
    for (long m : m_list) {
        if (m < 1) fail(Errc::ExponentRange, "extension multiplier must be >= 1");
        std::uint64_t big_size = 1;
        bool over = false;
        for (int i = 0; i < ctx->d() * m && !over; ++i) {
            big_size *= static_cast<std::uint64_t>(ctx->p());
            if (big_size > budget) over = true;
        }
        if (over)
            fail(Errc::BudgetExceeded,
                 "probe field q^{nm} exceeds the configured budget at m=" + std::to_string(m));
        Tower tw{ctx->e(), t, (ctx->n() / t) * static_cast<int>(m)};
        FieldPtr big = cached_field(ctx->p(), ctx->d() * static_cast<int>(m), tw);
        Embedding emb(ctx, big.get());
        std::vector<FElem> cs(static_cast<std::size_t>(big->n()), big->zero());
        for (int i = 0; i < ctx->n(); ++i) cs[static_cast<std::size_t>(i)] = emb(f.coeff(i));
        LinPoly fbig(big.get(), std::move(cs));
        ScatterReport rep = property == Property::Scattered
                                ? is_scattered_criterion(fbig)
                                : criterion_generic(fbig, property, t);
        out.emplace_back(m, rep.holds);
    }
    return out;
}

namespace {

BigInt bpow(long b, long e) {
    BigInt r = 1;
    for (long i = 0; i < e; ++i) r *= b;
    return r;
}

} // namespace

bool check_L_inequality(long q, long n, long k, long t, long ell, long v, LShape shape) {
    if (q < 2 || n < 1 || k < 1 || k >= n || t < 1 || n % t != 0 || ell < 0 || ell >= n)
        fail(Errc::HypothesisNotMet, "parameters out of range");
    switch (shape) {
        case LShape::Index0:
            if (ell != 0) fail(Errc::HypothesisNotMet, "shape requires ell = 0");
            if (v < 1 || v > k) fail(Errc::HypothesisNotMet, "ell = 0 normalization requires 1 <= v <= k");
            if (v == k) fail(Errc::HypothesisNotMet, "monomials are excluded");
            break;
        case LShape::Index1:
            if (ell != 1) fail(Errc::HypothesisNotMet, "shape requires ell = 1");
            if (k < 3) fail(Errc::HypothesisNotMet, "ell = 1 requires k >= 3");
            if (v != 0) fail(Errc::HypothesisNotMet, "normalized positive index requires a separable polynomial");
            break;
        case LShape::IndexHighWithQ:
        case LShape::IndexHighNoQ:
            if (ell < 2) fail(Errc::HypothesisNotMet, "shape requires ell >= 2");
            if (k % ell == 0 ? k < 3 * ell : k < 2 * ell - 1)
                fail(Errc::HypothesisNotMet, "degree bound on k versus ell violated");
            if (shape == LShape::IndexHighWithQ && k < ell + 2)
                fail(Errc::HypothesisNotMet, "shape requires k >= ell + 2");
            if (v != 0) fail(Errc::HypothesisNotMet, "normalized positive index requires a separable polynomial");
            break;
    }
    BigInt A, B;
    if (ell == 0) {
        A = bpow(q, n) - bpow(q, t) * (bpow(q, k) - q) - 2 * (bpow(q, k - v) - 1);
        BigInt base = bpow(q, k) - q - 1;
        B = base * (base - 1);
    } else {
        BigInt s = bpow(q, k) + bpow(q, ell) - q;
        A = bpow(q, n) - bpow(q, t) * (s - 1);
        B = (s - 2) * (s - 3);
    }
    // inequality A <= B * sqrt(q^n), decided exactly
    if (A <= 0) return true;
    return A * A <= B * B * bpow(q, n);
}

bool check_L_degree_bound(long n, long k, long t, long ell) {
    long long lhs = static_cast<long long>(n);
    long long rhs = std::max({4LL * k, 4LL * ell, static_cast<long long>(k) + t,
                              static_cast<long long>(ell) + t});
    return lhs <= rhs;
}

} // namespace qscat
