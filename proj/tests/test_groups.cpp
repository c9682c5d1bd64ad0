#include "doctest.h"

#include "qscat/detrng.hpp"
#include "qscat/families.hpp"
#include "qscat/groups.hpp"
#include "qscat/textio.hpp"

using namespace qscat;

namespace {

FieldPtr f16_ctx() { return cached_field(2, 4, Tower{1, 2, 2}); }

} // namespace

TEST_CASE("semilinear map application") {
    auto ctx = f16_ctx();
    FElem g = ctx->generator();
    SemilinearMap id = make_full_map(Mat2{ctx->one(), ctx->zero(), ctx->zero(), ctx->one()}, 0);
    for (std::uint32_t o = 0; o < ctx->size(); ++o) {
        FElem x = ctx->by_ord(o);
        auto img = apply_map(id, {x, g * x});
        CHECK(img.first == x);
        CHECK(img.second == g * x);
    }
    // diag(a, a^{q^s}) moves a graph point to another graph point of the
    // same family polynomial
    std::vector<FElem> a = {g, ctx->one()};
    LinPoly f = family11(a, 1, 2);
    for (FElem scalar : ctx->subfield_elements(2)) {
        if (scalar.is_zero()) continue;
        SemilinearMap d = make_full_map(
            Mat2{scalar, ctx->zero(), ctx->zero(), frobenius(scalar, 1, 2)}, 0);
        for (std::uint32_t o = 0; o < ctx->size(); ++o) {
            FElem x = ctx->by_ord(o);
            auto img = apply_map(d, {x, f.eval(x)});
            CHECK(img.second == f.eval(img.first));
        }
    }
    // frobenius components compose additively
    SemilinearMap h1 = make_full_map(Mat2{ctx->one(), ctx->zero(), ctx->zero(), ctx->one()}, 1);
    auto once = apply_map(h1, {g, g});
    auto twice = apply_map(h1, once);
    CHECK(twice.first == ctx->frob_p(g, 2));
    CHECK(make_full_map(h1.A, 5).frob == 1); // reduced mod d

    CHECK_THROWS_AS(make_full_map(Mat2{ctx->one(), ctx->one(), ctx->one(), ctx->one()}, 0), Error);
}

TEST_CASE("brute-force automorphism group of a scattered monomial") {
    auto ctx = f16_ctx();
    LinPoly f = LinPoly::monomial(ctx.get(), 1, ctx->one());
    auto group = aut_group_bruteforce(f, 64);
    CHECK(group.size() == 15); // q^n - 1

    // group axioms on samples: identity, closure, inverses
    Mat2 id{ctx->one(), ctx->zero(), ctx->zero(), ctx->one()};
    bool has_id = false;
    for (const auto& m : group)
        if (m == id) has_id = true;
    CHECK(has_id);
    auto mul2 = [&](const Mat2& x, const Mat2& y) {
        return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
                    x.c * y.b + x.d * y.d};
    };
    DetRng rng(53);
    auto member = [&](const Mat2& m) {
        for (const auto& g : group)
            if (g == m) return true;
        return false;
    };
    for (int trial = 0; trial < 30; ++trial) {
        const Mat2& x = group[rng.below(group.size())];
        const Mat2& y = group[rng.below(group.size())];
        CHECK(member(mul2(x, y)));
        // inverse by the 2x2 adjugate
        FElem di = ctx->inv(det2(x));
        Mat2 xinv{di * x.d, ctx->neg(di * x.b), ctx->neg(di * x.c), di * x.a};
        CHECK(member(xinv));
        CHECK(mul2(x, xinv) == id);
    }
}

TEST_CASE("the identity polynomial stabilizer contains every diagonal") {
    auto f4 = cached_field(2, 2, Tower{1, 1, 2});
    LinPoly f = LinPoly::identity(f4.get());
    auto group = aut_group_bruteforce(f, 64);
    for (std::uint32_t o = 1; o < f4->size(); ++o) {
        FElem a = f4->by_ord(o);
        Mat2 d{a, f4->zero(), f4->zero(), a};
        bool found = false;
        for (const auto& m : group)
            if (m == d) found = true;
        CHECK(found);
    }
    CHECK(group.size() >= f4->size() - 1);
}

TEST_CASE("containment testing") {
    auto ctx = f16_ctx();
    std::vector<FElem> a = {ctx->generator(), ctx->one()};
    LinPoly f = family11(a, 1, 2);
    auto diag = diagonal_twist_maps(ctx.get(), 1, 2);
    CHECK(diag.size() == 3);
    CHECK(aut_group_contains(f, diag));

    // perturbing a stabilizer breaks containment
    SemilinearMap broken = make_full_map(
        Mat2{ctx->generator(), ctx->one(), ctx->zero(), frobenius(ctx->generator(), 1, 2)}, 0);
    CHECK_FALSE(aut_group_contains(f, {broken}));
}

TEST_CASE("budget guard on brute force") {
    auto big = cached_field(2, 9, Tower{1, 3, 3});
    CHECK_THROWS_AS(aut_group_bruteforce(LinPoly::identity(big.get()), 64), Error);
}

TEST_CASE("equivalence scan") {
    auto ctx = f16_ctx();
    std::vector<FElem> a = {ctx->generator(), ctx->one()};
    LinPoly f = family11(a, 1, 2);

    // reflexivity with the identity witness
    EquivResult self = are_equivalent_bruteforce(f, f, 64, false);
    CHECK(self.equivalent);
    REQUIRE(self.witness_matrix.has_value());
    REQUIRE(self.witness_frob.has_value());
    CHECK(*self.witness_frob == 0);

    // a Frobenius twist of the coefficients is equivalent
    std::vector<FElem> cs(4, ctx->zero());
    for (int i = 0; i < 4; ++i) cs[static_cast<std::size_t>(i)] = ctx->frob_p(f.coeff(i), 1);
    LinPoly ftw(ctx.get(), cs);
    EquivResult tw = are_equivalent_bruteforce(f, ftw, 64, false);
    CHECK(tw.equivalent);

    // equivalence transports the R-partial property
    if (tw.equivalent)
        CHECK(is_R_partial_oracle(f, 2, 0).holds == is_R_partial_oracle(ftw, 2, 0).holds);

    // polynomials with different stabilizer orders are inequivalent: the
    // filter and the full scan agree
    LinPoly mono = LinPoly::monomial(ctx.get(), 1, ctx->one());
    auto gf = aut_group_bruteforce(f, 64);
    auto gm = aut_group_bruteforce(mono, 64);
    REQUIRE(gf.size() != gm.size());
    EquivResult filtered = are_equivalent_bruteforce(f, mono, 64, true);
    CHECK_FALSE(filtered.equivalent);
    CHECK(filtered.by_group_filter);
    EquivResult scanned = are_equivalent_bruteforce(f, mono, 64, false);
    CHECK_FALSE(scanned.equivalent);
    CHECK_FALSE(scanned.by_group_filter);
}

TEST_CASE("group-order filter is sound across sampled pairs") {
    auto ctx = f16_ctx();
    DetRng rng(61);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<FElem> cs1(4, ctx->zero()), cs2(4, ctx->zero());
        cs1[1] = rng.elem(ctx.get());
        cs1[3] = rng.elem(ctx.get());
        cs2[1] = rng.elem(ctx.get());
        cs2[3] = rng.elem(ctx.get());
        LinPoly f(ctx.get(), cs1), g(ctx.get(), cs2);
        if (f.is_zero() || g.is_zero()) continue;
        auto grp_f = aut_group_bruteforce(f, 64);
        auto grp_g = aut_group_bruteforce(g, 64);
        EquivResult full = are_equivalent_bruteforce(f, g, 64, false);
        if (grp_f.size() != grp_g.size()) CHECK_FALSE(full.equivalent);
        // a found witness transports the R-partial status
        if (full.equivalent)
            CHECK(is_R_partial_oracle(f, 2, 0).holds == is_R_partial_oracle(g, 2, 0).holds);
    }
}

TEST_CASE("weak equivalence of family members") {
    auto ctx = cached_field(2, 6, Tower{1, 3, 2});
    DetRng rng(59);
    auto random_invertible = [&] {
        while (true) {
            std::vector<FElem> a = {rng.elem(ctx.get()), rng.elem(ctx.get())};
            if (a[0].is_zero() && a[1].is_zero()) continue;
            if (is_invertible(g_a_poly(a, 3))) return a;
        }
    };

    // same twist: F = (x, g(f^{-1}(y)))
    auto af = random_invertible();
    auto ag = random_invertible();
    WeakEquivResult same = weak_equiv_family11(af, 1, ag, 1, 3);
    CHECK(same.equivalent);
    REQUIRE(same.witness.has_value());
    CHECK(same.witness->companion == 0); // F_{q^t}-linear

    // opposite twist: s = 1, s' = 2 with 1 = -2 mod 3
    WeakEquivResult opp = weak_equiv_family11(af, 1, ag, 2, 3);
    CHECK(opp.equivalent);
    REQUIRE(opp.witness.has_value());

    // identity-style witness when g = f
    WeakEquivResult idw = weak_equiv_family11(af, 1, af, 1, 3);
    CHECK(idw.equivalent);

    // non-invertible inputs are rejected
    std::vector<FElem> sing = {ctx->one(), ctx->zero()};
    sing[0] = ctx->zero();
    sing[1] = ctx->zero();
    CHECK_THROWS_AS(weak_equiv_family11(af, 1, sing, 1, 3), Error);
}

TEST_CASE("weak inequivalence is decided by the twist residues") {
    auto ctx = cached_field(2, 10, Tower{1, 5, 2});
    std::vector<FElem> af = {ctx->one(), ctx->zero()};
    std::vector<FElem> ag = {ctx->one(), ctx->zero()};
    WeakEquivResult res = weak_equiv_family11(af, 1, ag, 2, 5); // 1 != +-2 mod 5
    CHECK_FALSE(res.equivalent);
    CHECK(res.by_theorem);
    CHECK_FALSE(res.witness.has_value());
}

TEST_CASE("weak class counts") {
    CHECK(count_weak_classes(3) == 1);
    CHECK(count_weak_classes(5) == 2);
    CHECK(count_weak_classes(12) == 2);
    CHECK_THROWS_AS(count_weak_classes(2), Error);
}

TEST_CASE("binomial stabilizer case classification") {
    // (2,2,3) with k=2, s=1: tprime = k + s collapses one exponent, equality
    // is still stated since tprime != 2k; this is the brute-forced case
    BinomialGroupCase c1 = binomial_group_case(2, 1, 2, 3);
    CHECK(c1.collision == BinomialCollision::KPlusS);
    CHECK(c1.equality_stated);
    // tprime = 2k drops the equality claim
    BinomialGroupCase c2 = binomial_group_case(1, 1, 2, 2);
    CHECK_FALSE(c2.equality_stated);
    // t > 2 never collides
    BinomialGroupCase c3 = binomial_group_case(1, 1, 3, 3);
    CHECK(c3.collision == BinomialCollision::None);
    CHECK(c3.equality_stated);
    // tprime = 2k also combines with a collision at t = 2
    BinomialGroupCase c4 = binomial_group_case(1, 1, 3, 2);
    CHECK(c4.collision == BinomialCollision::None);
    CHECK_FALSE(c4.equality_stated);
}

TEST_CASE("quadrinomial group hypotheses need 2t >= 11") {
    auto f81 = cached_field(3, 4, Tower{1, 2, 2});
    CHECK_THROWS_AS(quadrinomial_aut_expected(f81.get(), 1, 3, 2), Error);
}

TEST_CASE("even-characteristic quadrinomial group containment at t = 7") {
    auto ctx = cached_field(2, 14, Tower{1, 7, 2});
    GroupDescription desc = quadrinomial_aut_expected(ctx.get(), 1, 3, 7);
    CHECK(desc.kind == QuadCase::GenericEven);
    CHECK(desc.order == 128); // q^t (q^{gcd(t,|k-s|)} - 1) = 2^7 * 1
    CHECK(desc.elements.size() == 128);
    LinPoly f = quadrinomial(ctx.get(), 1, 3, 7);
    std::vector<SemilinearMap> maps;
    for (const auto& m : desc.elements) maps.push_back(make_full_map(m, 0));
    CHECK(aut_group_contains(f, maps));
}

TEST_CASE("reversed quadrinomial groups, odd characteristic") {
    // t odd: the antidiagonal group of order 4 at q = 3, t = 5, k = 1
    auto c10 = cached_field(3, 10, Tower{1, 5, 2});
    GroupDescription odd = reversed_quadrinomial_aut_expected(c10.get(), 1, 5);
    CHECK(odd.kind == QuadCase::LZ2Odd);
    CHECK(odd.order == 4);
    LinPoly f10 = reversed_quadrinomial(c10.get(), 1, 5);
    std::vector<SemilinearMap> maps10;
    for (const auto& m : odd.elements) maps10.push_back(make_full_map(m, 0));
    CHECK(aut_group_contains(f10, maps10));

    // t even: diag(a, a^q) over F_{q^2}, order q^2 - 1, at q = 3, t = 6
    auto c12 = cached_field(3, 12, Tower{1, 6, 2});
    GroupDescription even = reversed_quadrinomial_aut_expected(c12.get(), 1, 6);
    CHECK(even.kind == QuadCase::LZ2Even);
    CHECK(even.order == 8);
    LinPoly f12 = reversed_quadrinomial(c12.get(), 1, 6);
    std::vector<SemilinearMap> maps12;
    for (const auto& m : even.elements) maps12.push_back(make_full_map(m, 0));
    CHECK(aut_group_contains(f12, maps12));

    // hypothesis guards
    CHECK_THROWS_AS(reversed_quadrinomial_aut_expected(c10.get(), 2, 5), Error); // t <= 2k
    auto f16 = cached_field(2, 4, Tower{1, 2, 2});
    CHECK_THROWS_AS(reversed_quadrinomial_aut_expected(f16.get(), 1, 2), Error); // even q
}
