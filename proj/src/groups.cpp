#include "qscat/groups.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "qscat/families.hpp"
#include "qscat/fpmat.hpp"
#include "qscat/intutil.hpp"

namespace qscat {

FElem det2(const Mat2& m) { return m.a * m.d - m.b * m.c; }

namespace {

// Common residue mod t of all nonzero exponents, if one exists.
std::optional<int> exponent_residue(const LinPoly& f, int t) {
    int s = -1;
    for (int i = 0; i < f.n(); ++i) {
        if (f.coeff(i).is_zero()) continue;
        if (s < 0) s = i % t;
        else if (i % t != s) return std::nullopt;
    }
    if (s < 0) return std::nullopt;
    return s;
}

std::vector<int> flatten_pair(const FieldCtx* ctx, const std::pair<FElem, FElem>& w) {
    auto cu = ctx->coords(w.first);
    auto cv = ctx->coords(w.second);
    cu.insert(cu.end(), cv.begin(), cv.end());
    return cu;
}

// Prime-field basis pairs of U_f = {(x, f(x))}.
std::vector<std::pair<FElem, FElem>> graph_prime_basis(const LinPoly& f) {
    const FieldCtx* ctx = f.ctx();
    std::vector<std::pair<FElem, FElem>> out;
    out.reserve(static_cast<std::size_t>(ctx->d()));
    for (int i = 0; i < ctx->d(); ++i) {
        std::vector<int> cs(static_cast<std::size_t>(ctx->d()), 0);
        cs[static_cast<std::size_t>(i)] = 1;
        FElem b = ctx->from_coords(cs);
        out.emplace_back(b, f.eval(b));
    }
    return out;
}

void check_gl_budget(const FieldCtx* ctx, std::uint64_t budget_qn) {
    if (ctx->size() > budget_qn)
        fail(Errc::BudgetExceeded, "GL(2, q^n) scan budget requires q^n <= " + std::to_string(budget_qn));
}

} // namespace

SemilinearMap make_full_map(const Mat2& A, int frob) {
    const FieldCtx* ctx = A.a.ctx;
    if (ctx == nullptr) fail(Errc::Internal, "unbound matrix entries");
    if (det2(A).is_zero()) fail(Errc::NotInvertible, "matrix is singular");
    SemilinearMap m;
    m.scope = SemilinearMap::Scope::FullField;
    m.A = A;
    m.frob = ((frob % ctx->d()) + ctx->d()) % ctx->d();
    return m;
}

SemilinearMap make_weak_map(std::array<LinPoly, 4> blocks) {
    const FieldCtx* ctx = blocks[0].ctx();
    for (const auto& b : blocks)
        if (b.ctx() != ctx) fail(Errc::CtxMismatch, "blocks from different contexts");
    int t = ctx->t();
    // all nonzero blocks must share one exponent residue mod t, the map's
    // companion twist
    std::optional<int> comp;
    for (const auto& b : blocks) {
        if (b.is_zero()) continue;
        auto r = exponent_residue(b, t);
        if (!r) fail(Errc::BaseMismatch, "block is not F_{q^t}-semilinear");
        if (comp && *comp != *r) fail(Errc::BaseMismatch, "blocks disagree on the companion twist");
        comp = r;
    }
    if (!comp) fail(Errc::ZeroVector, "all blocks are zero");

    SemilinearMap m;
    m.scope = SemilinearMap::Scope::SubfieldT;
    m.A = Mat2{ctx->zero(), ctx->zero(), ctx->zero(), ctx->zero()};
    m.blocks = std::move(blocks);
    m.companion = *comp;

    // invertibility: the prime-field matrix of the additive map has full rank
    fp::Echelon ech(ctx->p(), static_cast<std::size_t>(2 * ctx->d()));
    int rank = 0;
    for (int half = 0; half < 2; ++half)
        for (int i = 0; i < ctx->d(); ++i) {
            std::vector<int> cs(static_cast<std::size_t>(ctx->d()), 0);
            cs[static_cast<std::size_t>(i)] = 1;
            FElem b = ctx->from_coords(cs);
            std::pair<FElem, FElem> w =
                half == 0 ? std::make_pair(b, ctx->zero()) : std::make_pair(ctx->zero(), b);
            if (ech.add_row(flatten_pair(ctx, apply_map(m, w)))) ++rank;
        }
    if (rank != 2 * ctx->d()) fail(Errc::NotInvertible, "weak map is singular");
    return m;
}

std::pair<FElem, FElem> apply_map(const SemilinearMap& M, const std::pair<FElem, FElem>& w) {
    if (M.scope == SemilinearMap::Scope::FullField) {
        const FieldCtx* ctx = M.A.a.ctx;
        if (w.first.ctx != ctx) fail(Errc::CtxMismatch, "vector from a different context");
        FElem x = ctx->frob_p(w.first, M.frob);
        FElem y = ctx->frob_p(w.second, M.frob);
        return {M.A.a * x + M.A.b * y, M.A.c * x + M.A.d * y};
    }
    const auto& B = *M.blocks;
    return {B[0].eval(w.first) + B[1].eval(w.second), B[2].eval(w.first) + B[3].eval(w.second)};
}

std::vector<Mat2> aut_group_bruteforce(const LinPoly& f, std::uint64_t budget_qn) {
    const FieldCtx* ctx = f.ctx();
    check_gl_budget(ctx, budget_qn);
    auto basis = greedy_basis_over(*ctx, 1);
    std::vector<std::pair<FElem, FElem>> pairs;
    pairs.reserve(basis.size());
    for (FElem b : basis) pairs.emplace_back(b, f.eval(b));

    std::vector<Mat2> group;
    std::uint32_t size = ctx->size();
    for (std::uint32_t oa = 0; oa < size; ++oa) {
        FElem a = ctx->by_ord(oa);
        for (std::uint32_t ob = 0; ob < size; ++ob) {
            FElem b = ctx->by_ord(ob);
            for (std::uint32_t oc = 0; oc < size; ++oc) {
                FElem c = ctx->by_ord(oc);
                for (std::uint32_t od = 0; od < size; ++od) {
                    FElem d = ctx->by_ord(od);
                    if ((a * d - b * c).is_zero()) continue;
                    bool ok = true;
                    for (const auto& [x, fx] : pairs) {
                        FElem u = a * x + b * fx;
                        FElem v = c * x + d * fx;
                        if (!(v == f.eval(u))) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) group.push_back(Mat2{a, b, c, d});
                }
            }
        }
    }
    return group;
}

bool aut_group_contains(const LinPoly& f, const std::vector<SemilinearMap>& candidates) {
    auto pairs = graph_prime_basis(f);
    for (const auto& M : candidates)
        for (const auto& w : pairs) {
            auto img = apply_map(M, w);
            if (!(img.second == f.eval(img.first))) return false;
        }
    return true;
}

EquivResult are_equivalent_bruteforce(const LinPoly& f, const LinPoly& g,
                                      std::uint64_t budget_qn, bool use_group_filter) {
    const FieldCtx* ctx = f.ctx();
    if (g.ctx() != ctx) fail(Errc::CtxMismatch, "polynomials from different contexts");
    check_gl_budget(ctx, budget_qn);

    EquivResult res;
    if (use_group_filter) {
        auto gf = aut_group_bruteforce(f, budget_qn);
        auto gg = aut_group_bruteforce(g, budget_qn);
        if (gf.size() != gg.size()) {
            res.by_group_filter = true;
            return res;
        }
    }

    auto basis = greedy_basis_over(*ctx, 1);
    std::uint32_t size = ctx->size();
    for (int h = 0; h < ctx->d(); ++h) {
        std::vector<std::pair<FElem, FElem>> pairs;
        pairs.reserve(basis.size());
        for (FElem b : basis)
            pairs.emplace_back(ctx->frob_p(b, h), ctx->frob_p(f.eval(b), h));
        for (std::uint32_t oa = 0; oa < size; ++oa) {
            FElem a = ctx->by_ord(oa);
            for (std::uint32_t ob = 0; ob < size; ++ob) {
                FElem b = ctx->by_ord(ob);
                for (std::uint32_t oc = 0; oc < size; ++oc) {
                    FElem c = ctx->by_ord(oc);
                    for (std::uint32_t od = 0; od < size; ++od) {
                        FElem d = ctx->by_ord(od);
                        if ((a * d - b * c).is_zero()) continue;
                        bool ok = true;
                        for (const auto& [x, fx] : pairs) {
                            FElem u = a * x + b * fx;
                            FElem v = c * x + d * fx;
                            if (!(v == g.eval(u))) {
                                ok = false;
                                break;
                            }
                        }
                        if (ok) {
                            res.equivalent = true;
                            res.witness_matrix = Mat2{a, b, c, d};
                            res.witness_frob = h;
                            return res;
                        }
                    }
                }
            }
        }
    }
    return res;
}

WeakEquivResult weak_equiv_family11(const std::vector<FElem>& a_f, int s,
                                    const std::vector<FElem>& a_g, int s_prime, int t) {
    WeakEquivResult res;
    if (!family11_is_R_partial(a_f, s, t) || !family11_is_R_partial(a_g, s_prime, t))
        fail(Errc::NotInvertible, "both polynomials must be R-partially scattered family members");
    LinPoly f = family11(a_f, s, t);
    LinPoly g = family11(a_g, s_prime, t);
    const FieldCtx* ctx = f.ctx();

    int dplus = ((s - s_prime) % t + t) % t;
    int dminus = ((s + s_prime) % t + t) % t;
    if (dplus != 0 && dminus != 0) {
        res.by_theorem = true;
        return res;
    }

    LinPoly finv = inverse_poly(f);
    std::array<LinPoly, 4> blocks = {LinPoly::zero(ctx), LinPoly::zero(ctx), LinPoly::zero(ctx),
                                     LinPoly::zero(ctx)};
    if (dplus == 0) {
        blocks = {LinPoly::identity(ctx), LinPoly::zero(ctx), LinPoly::zero(ctx), compose(g, finv)};
    } else {
        blocks = {LinPoly::zero(ctx), finv, g, LinPoly::zero(ctx)};
    }
    SemilinearMap F = make_weak_map(std::move(blocks));

    // verify: images of a prime basis of U_f lie in U_g and have full rank
    auto pairs = graph_prime_basis(f);
    fp::Echelon ech(ctx->p(), static_cast<std::size_t>(2 * ctx->d()));
    int rank = 0;
    for (const auto& w : pairs) {
        auto img = apply_map(F, w);
        if (!(img.second == g.eval(img.first)))
            fail(Errc::Internal, "constructed witness leaves the target subspace");
        if (ech.add_row(flatten_pair(ctx, img))) ++rank;
    }
    if (rank != ctx->d()) fail(Errc::Internal, "constructed witness drops rank");

    res.equivalent = true;
    res.witness = std::move(F);
    return res;
}

long count_weak_classes(int t) {
    if (t <= 2) fail(Errc::SmallT, "the class count is stated for t >= 3");
    return euler_phi(t) / 2;
}

std::vector<SemilinearMap> diagonal_twist_maps(const FieldCtx* ctx, int s, int m) {
    std::vector<SemilinearMap> out;
    for (FElem a : ctx->subfield_elements(m)) {
        if (a.is_zero()) continue;
        Mat2 M{a, ctx->zero(), ctx->zero(), frobenius(a, s, ctx->q())};
        out.push_back(make_full_map(M, 0));
    }
    return out;
}

std::vector<Mat2> binomial_expected_group(const FieldCtx* ctx, int k, int s, int t, int tprime) {
    if (t * tprime != ctx->n()) fail(Errc::WrongTower, "t * tprime must equal n");
    int m = t * static_cast<int>(std::gcd(static_cast<long>(k), static_cast<long>(tprime)));
    std::vector<Mat2> out;
    for (FElem a : ctx->subfield_elements(m)) {
        if (a.is_zero()) continue;
        out.push_back(Mat2{a, ctx->zero(), ctx->zero(), frobenius(a, s, ctx->q())});
    }
    return out;
}

BinomialGroupCase binomial_group_case(int k, int s, int t, int tprime) {
    int n = t * tprime;
    BinomialGroupCase out;
    out.equality_stated = tprime != 2 * k;
    // the three boundary coincidences collapse exponents only at t = 2
    if (t == 2) {
        if ((2 * (t * k + s)) % n == 0) out.collision = BinomialCollision::TwoKPlusS;
        else if ((t * k + 2 * s) % n == 0) out.collision = BinomialCollision::KPlusS;
        else if ((2 * s) % n == 0) out.collision = BinomialCollision::S;
    }
    return out;
}

GroupDescription quadrinomial_aut_expected(const FieldCtx* ctx, int s, int k, int t) {
    int n = ctx->n();
    if (n != 2 * t || t < 2) fail(Errc::WrongTower, "requires n = 2t with t >= 2");
    if (std::gcd(static_cast<long>(s), 2L * t) != 1 || std::gcd(static_cast<long>(k), 2L * t) != 1)
        fail(Errc::GcdViolation, "requires gcd(s, 2t) = gcd(k, 2t) = 1");
    // the eleven exponents must stay distinct mod n
    std::vector<int> exps = {0,     s,     t + s,     k,         t + k,     2 * s,
                             t + 2 * s, k + s, t + k + s, 2 * k, t + 2 * k};
    std::vector<int> red;
    for (int e : exps) red.push_back(((e % n) + n) % n);
    std::sort(red.begin(), red.end());
    if (std::adjacent_find(red.begin(), red.end()) != red.end())
        fail(Errc::HypothesisNotMet, "the eleven exponents collide mod n");

    int g = static_cast<int>(std::gcd(static_cast<long>(t), static_cast<long>(std::abs(k - s))));
    bool even = ctx->p() == 2;
    GroupDescription out;
    out.kind = even ? QuadCase::GenericEven : QuadCase::GenericOdd;
    BigInt qg = 1, qt = 1;
    for (int i = 0; i < g; ++i) qg *= ctx->q();
    for (int i = 0; i < t; ++i) qt *= ctx->q();
    if (even) {
        out.order = qt * (qg - 1);
        out.generators = "upper triangular (a, b; 0, a^{q^s}), a in F_{q^gcd(t,|k-s|)}*, b in F_{q^t}";
        for (FElem a : ctx->subfield_elements(g)) {
            if (a.is_zero()) continue;
            for (FElem b : ctx->subfield_elements(t))
                out.elements.push_back(Mat2{a, b, ctx->zero(), frobenius(a, s, ctx->q())});
        }
    } else {
        out.order = qg - 1;
        out.generators = "diag(a, a^{q^s}), a in F_{q^gcd(t,|k-s|)}*";
        for (FElem a : ctx->subfield_elements(g)) {
            if (a.is_zero()) continue;
            out.elements.push_back(Mat2{a, ctx->zero(), ctx->zero(), frobenius(a, s, ctx->q())});
        }
    }
    return out;
}

LinPoly reversed_quadrinomial(const FieldCtx* ctx, int k, int t) {
    int n = ctx->n();
    if (n != 2 * t) fail(Errc::WrongTower, "requires n = 2t");
    std::vector<FElem> cs(static_cast<std::size_t>(n), ctx->zero());
    auto addc = [&](int e, FElem c) {
        int r = ((e % n) + n) % n;
        cs[static_cast<std::size_t>(r)] = cs[static_cast<std::size_t>(r)] + c;
    };
    addc(t - k, ctx->one());
    addc(2 * t - k, ctx->one());
    addc(k, ctx->one());
    addc(t + k, ctx->neg(ctx->one()));
    return LinPoly(ctx, std::move(cs));
}

GroupDescription reversed_quadrinomial_aut_expected(const FieldCtx* ctx, int k, int t) {
    int n = ctx->n();
    if (n != 2 * t) fail(Errc::WrongTower, "requires n = 2t");
    if (ctx->p() == 2) fail(Errc::HypothesisNotMet, "stated for odd q only");
    bool hyp = (k == 1 && t >= 5) ||
               (k > 1 && std::gcd(static_cast<long>(k), 2L * t) == 1 && t > 2 * k);
    if (!hyp) fail(Errc::HypothesisNotMet, "needs k = 1 with t >= 5, or k > 1 coprime to 2t with t > 2k");

    GroupDescription out;
    if (t % 2 == 0) {
        out.kind = QuadCase::LZ2Even;
        out.generators = "diag(a, a^q), a in F_{q^2}*";
        for (FElem a : ctx->subfield_elements(2)) {
            if (a.is_zero()) continue;
            out.elements.push_back(Mat2{a, ctx->zero(), ctx->zero(), frobenius(a, 1, ctx->q())});
        }
    } else {
        out.kind = QuadCase::LZ2Odd;
        out.generators = "(a, b; -4b, a), a in F_q, b^q + b = 0, a^2 + 4b^2 != 0";
        FElem four = ctx->zero();
        for (int i = 0; i < 4; ++i) four = four + ctx->one();
        // {b : b^q = -b} sits inside F_{q^2}
        for (FElem a : ctx->subfield_elements(1))
            for (FElem b : ctx->subfield_elements(2)) {
                if (!(frobenius(b, 1, ctx->q()) == ctx->neg(b))) continue;
                FElem disc = a * a + four * b * b;
                if (disc.is_zero()) continue;
                out.elements.push_back(Mat2{a, b, ctx->neg(four * b), a});
            }
    }
    out.order = static_cast<long>(out.elements.size());
    return out;
}

} // namespace qscat
