#include "doctest.h"

#include <set>

#include "qscat/detrng.hpp"
#include "qscat/families.hpp"
#include "qscat/geometry.hpp"
#include "qscat/intutil.hpp"
#include "qscat/scatter.hpp"

using namespace qscat;

namespace {

FieldPtr f16_ctx() { return cached_field(2, 4, Tower{1, 2, 2}); }

LinPoly binom(const FieldCtx* ctx, FElem a, FElem b) {
    std::vector<FElem> cs(static_cast<std::size_t>(ctx->n()), ctx->zero());
    cs[1] = a;
    cs[3] = b;
    return LinPoly(ctx, cs);
}

} // namespace

TEST_CASE("subfield frame coordinates") {
    auto ctx = f16_ctx();
    SubfieldFrame frame(ctx.get(), 2);
    REQUIRE(frame.dim() == 2);
    for (std::uint32_t o = 0; o < ctx->size(); ++o) {
        FElem x = ctx->by_ord(o);
        auto cs = frame.coords(x);
        for (const FElem& c : cs) CHECK(in_subfield(c, 2));
        CHECK(frame.from_coords(cs) == x);
    }
}

TEST_CASE("graph subspace membership") {
    auto ctx = f16_ctx();
    // f = 0: U = F x {0}
    SubspaceFq u0 = graph_subspace(LinPoly::zero(ctx.get()), 0);
    for (std::uint32_t o = 0; o < ctx->size(); ++o) {
        FElem x = ctx->by_ord(o);
        CHECK(u0.contains({x, ctx->zero()}));
        if (!x.is_zero()) CHECK_FALSE(u0.contains({ctx->zero(), x}));
    }
    // f = x: the diagonal
    SubspaceFq ud = graph_subspace(LinPoly::identity(ctx.get()), 0);
    for (std::uint32_t o = 0; o < ctx->size(); ++o) {
        FElem x = ctx->by_ord(o);
        CHECK(ud.contains({x, x}));
    }
    // membership against the closed form v = f(u^{q^{n-ell}})
    DetRng rng(41);
    for (int trial = 0; trial < 3; ++trial) {
        LinPoly f = rng.poly(ctx.get());
        for (int ell : {0, 1}) {
            SubspaceFq uf = graph_subspace(f, ell);
            for (std::uint32_t ou = 0; ou < ctx->size(); ++ou)
                for (std::uint32_t ov = 0; ov < ctx->size(); ++ov) {
                    FElem u = ctx->by_ord(ou), v = ctx->by_ord(ov);
                    bool expect = v == f.eval(frobenius(u, 4 - ell, 2));
                    CHECK(uf.contains({u, v}) == expect);
                }
        }
    }
}

TEST_CASE("scattered subspace test") {
    auto ctx = f16_ctx();
    // R-partial member: scattered over F_{q^t}
    LinPoly good = binom(ctx.get(), ctx->generator(), ctx->one());
    REQUIRE(is_R_partial_oracle(good, 2, 0).holds);
    auto [ok, wit] = is_scattered_subspace(graph_subspace(good, 0), 2);
    CHECK(ok);
    CHECK_FALSE(wit.has_value());

    // a full F_{q^t}-line inside the space: not scattered
    auto mu = subfield_prime_basis(*ctx, 2);
    std::vector<VecPair> pairs;
    for (FElem m : mu) pairs.emplace_back(m, m);
    SubspaceFq line(ctx.get(), pairs);
    auto [bad, wit2] = is_scattered_subspace(line, 2);
    CHECK_FALSE(bad);
    REQUIRE(wit2.has_value());

    // x + x^{q^2} is not R-partial, so a witness of weight >= 2 exists
    std::vector<FElem> cs(4, ctx->zero());
    cs[0] = ctx->one();
    cs[2] = ctx->one();
    LinPoly f(ctx.get(), cs);
    REQUIRE_FALSE(is_R_partial_oracle(f, 2, 0).holds);
    auto [flag, wit3] = is_scattered_subspace(graph_subspace(f, 0), 2);
    CHECK_FALSE(flag);
    REQUIRE(wit3.has_value());
    // the witness point has weight at least two in U_f
    SubspaceFq uf = graph_subspace(f, 0);
    CHECK(weight(uf, {*wit3}, 2) >= 2);
}

TEST_CASE("equivalence of the oracle and the subspace test, exhaustive binomials") {
    auto ctx = f16_ctx();
    for (std::uint32_t oa = 0; oa < ctx->size(); ++oa)
        for (std::uint32_t ob = 0; ob < ctx->size(); ++ob) {
            LinPoly f = binom(ctx.get(), ctx->by_ord(oa), ctx->by_ord(ob));
            CHECK(is_R_partial_oracle(f, 2, 0).holds ==
                  is_scattered_subspace(graph_subspace(f, 0), 2).first);
        }
}

TEST_CASE("linear set points") {
    auto ctx = f16_ctx();
    LinPoly good = binom(ctx.get(), ctx->generator(), ctx->one());
    SubspaceFq uf = graph_subspace(good, 0);
    auto pts = linear_set_points(uf, 2);
    CHECK(pts.size() == 15); // (q^n - 1)/(q - 1)

    // rank-1 subspace has a single point
    SubspaceFq tiny(ctx.get(), {{ctx->one(), ctx->generator()}});
    CHECK(linear_set_points(tiny, 2).size() == 1);

    // non-scattered subspaces give strictly fewer points
    std::vector<FElem> cs(4, ctx->zero());
    cs[0] = ctx->one();
    cs[2] = ctx->one();
    SubspaceFq un = graph_subspace(LinPoly(ctx.get(), cs), 0);
    CHECK(linear_set_points(un, 2).size() < 15);
}

TEST_CASE("weights and the weight-sum identity") {
    auto ctx = f16_ctx();
    DetRng rng(43);
    for (int trial = 0; trial < 6; ++trial) {
        LinPoly f = rng.poly(ctx.get());
        SubspaceFq uf = graph_subspace(f, 0);
        auto pts = linear_set_points(uf, 2);
        std::uint64_t total = 0;
        for (const auto& pt : pts) {
            int w = weight(uf, {pt}, 2);
            CHECK(w >= 1);
            total += ipow(2, static_cast<unsigned>(w)) - 1;
        }
        CHECK(total == ipow(2, static_cast<unsigned>(uf.rank())) - 1);
    }
    // a point away from the linear set has weight zero
    SubspaceFq u0 = graph_subspace(LinPoly::zero(ctx.get()), 0);
    SubfieldFrame frame(ctx.get(), 2);
    ProjPoint off = normalize_point(frame, {ctx->zero(), ctx->one()});
    CHECK(weight(u0, {off}, 2) == 0);
}

TEST_CASE("projective line enumeration matches the Gaussian binomial") {
    auto ctx = f16_ctx();
    SubfieldFrame frame(ctx.get(), 2);
    auto points = all_proj_points(frame);
    CHECK(points.size() == 85); // (4^4 - 1)/3
    auto lines = all_proj_lines(frame);
    CHECK(lines.size() == 357);
    for (const auto& line : lines) CHECK(line.points.size() == 5);
}

TEST_CASE("pseudoregulus detection") {
    auto ctx = f16_ctx();
    SubfieldFrame frame(ctx.get(), 2);
    auto lines = all_proj_lines(frame);

    LinPoly good = binom(ctx.get(), ctx->generator(), ctx->one());
    PseudoregulusReport rep = pseudoregulus_check(good, 2, kMaxLineEnumQt, &lines);
    CHECK(rep.positive);
    CHECK(rep.scattered);
    CHECK(rep.m_expected == 5);
    CHECK(rep.m_found == 5);
    CHECK(rep.disjoint);
    CHECK(rep.transversal_count == 2);
    CHECK(rep.point_count == 15);
    // every secant of the 15-point subgeometry carries weight 2, so the
    // family is a proper selection out of 35 candidates
    CHECK(rep.weight_t_line_total == 35);
    for (const auto& line : rep.family) CHECK(weight(graph_subspace(good, 0), {line.p0, line.p1}, 2) == 2);
    // the family partitions the linear set: 5 disjoint lines, 3 points each
    {
        SubspaceFq u = graph_subspace(good, 0);
        auto pts = linear_set_points(u, 2);
        std::set<std::pair<std::uint32_t, std::uint32_t>> lset;
        for (const auto& p : pts) lset.insert({p.rep.first.v, p.rep.second.v});
        std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
        long covered = 0;
        for (const auto& line : rep.family)
            for (const auto& pt : line.points) {
                std::pair<std::uint32_t, std::uint32_t> key{pt.rep.first.v, pt.rep.second.v};
                if (lset.count(key) && seen.insert(key).second) ++covered;
            }
        CHECK(covered == 15);
    }

    // the transversals are the two coordinate axes {(x,0)} and {(0,y)}
    int axis_hits = 0;
    for (const auto& tr : rep.transversals) {
        bool all_first_zero = true, all_second_zero = true;
        for (const auto& pt : tr.points) {
            if (!pt.rep.first.is_zero()) all_first_zero = false;
            if (!pt.rep.second.is_zero()) all_second_zero = false;
        }
        if (all_first_zero || all_second_zero) ++axis_hits;
    }
    CHECK(axis_hits == 2);

    // a singular family member fails
    LinPoly bad = binom(ctx.get(), ctx->one(), ctx->one());
    PseudoregulusReport repb = pseudoregulus_check(bad, 2, kMaxLineEnumQt, &lines);
    CHECK_FALSE(repb.positive);
    CHECK_FALSE(repb.scattered);

    // budget and tower guards
    auto f64 = cached_field(2, 6, Tower{1, 2, 3});
    CHECK_THROWS_AS(pseudoregulus_check(LinPoly::identity(f64.get()), 2), Error); // tprime = 3
    CHECK_THROWS_AS(pseudoregulus_check(LinPoly::identity(ctx.get()), 4), Error); // tprime = 1
}

TEST_CASE("pseudoregulus lines are stable under a permuted subspace basis") {
    auto ctx = f16_ctx();
    SubfieldFrame frame(ctx.get(), 2);
    auto lines = all_proj_lines(frame);
    LinPoly good = binom(ctx.get(), ctx->generator(), ctx->one());

    SubspaceFq uf = graph_subspace(good, 0);
    std::vector<VecPair> reversed(uf.basis().rbegin(), uf.basis().rend());
    SubspaceFq uf_rev(ctx.get(), reversed);

    auto collect = [&](const SubspaceFq& u) {
        std::set<std::vector<std::pair<std::uint32_t, std::uint32_t>>> keys;
        for (const auto& line : lines)
            if (weight(u, {line.p0, line.p1}, 2) == 2) {
                std::vector<std::pair<std::uint32_t, std::uint32_t>> key;
                for (const auto& pt : line.points) key.emplace_back(pt.rep.first.v, pt.rep.second.v);
                keys.insert(key);
            }
        return keys;
    };
    CHECK(collect(uf) == collect(uf_rev));
}

TEST_CASE("pseudoregulus detection in PG(3,8) at t = 3") {
    // second regime: secants carry weight 2 < t, so the weight-t lines are
    // scarce and the disjoint family has nine members
    auto ctx = cached_field(2, 6, Tower{1, 3, 2});
    FElem alpha = ctx->zero();
    for (std::uint32_t o = 1; o < ctx->size(); ++o) {
        FElem cand = ctx->by_ord(o);
        if (binomial_is_R_partial(cand, 1, 1, 3, 2).holds) {
            alpha = cand;
            break;
        }
    }
    REQUIRE_FALSE(alpha.is_zero());
    LinPoly f = family11({alpha, ctx->one()}, 1, 3);
    PseudoregulusReport rep = pseudoregulus_check(f, 3);
    CHECK(rep.positive);
    CHECK(rep.m_expected == 9);
    CHECK(rep.m_found == 9);
    CHECK(rep.transversal_count == 2);
    CHECK(rep.point_count == 63);
    // frozen from enumeration: at t = 3 the pseudoregulus members are the
    // only weight-t lines (no secant inflation as in the t = 2 case)
    CHECK(rep.weight_t_line_total == 9);
}

TEST_CASE("random graph subspaces at (2,6): oracle equivalence") {
    auto ctx = cached_field(2, 6, Tower{1, 2, 3});
    DetRng rng(47);
    for (int trial = 0; trial < 25; ++trial) {
        LinPoly f = rng.poly(ctx.get());
        for (int t : {2, 3})
            CHECK(is_R_partial_oracle(f, t, 0).holds ==
                  is_scattered_subspace(graph_subspace(f, 0), t).first);
    }
}
