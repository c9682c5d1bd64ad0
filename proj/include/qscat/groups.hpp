#pragma once

// Linear automorphism groups of graph subspaces, GL(2, q^n)-equivalence by
// exhaustive scan, and the weak equivalence with constructive witnesses.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qscat/linpoly.hpp"

namespace qscat {

using BigInt = boost::multiprecision::cpp_int;

// Row-major 2x2 matrix over F_{q^n}.
struct Mat2 {
    FElem a, b, c, d;

    friend bool operator==(const Mat2&, const Mat2&) = default;
};

FElem det2(const Mat2& m);

// Invertible additive map of F_{q^n} x F_{q^n}; either a 2x2 matrix composed
// with a componentwise power of the prime Frobenius, or a 2x2 block of
// linearized polynomials (the weak, F_{q^t}-semilinear form).
struct SemilinearMap {
    enum class Scope { FullField, SubfieldT };
    Scope scope = Scope::FullField;
    Mat2 A;                                    // FullField
    int frob = 0;                              // x -> x^{p^frob} applied first
    std::optional<std::array<LinPoly, 4>> blocks; // SubfieldT, row-major
    int companion = 0;                         // weak maps: exponent s0 with
                                               // F(lambda w) = lambda^{q^{s0}} F(w)
};

SemilinearMap make_full_map(const Mat2& A, int frob);
SemilinearMap make_weak_map(std::array<LinPoly, 4> blocks);

std::pair<FElem, FElem> apply_map(const SemilinearMap& M, const std::pair<FElem, FElem>& w);

inline constexpr std::uint64_t kDefaultGlBudget = 64;

// All A in GL(2, q^n) with A U_f = U_f, in lexicographic entry order over the
// canonical element order.
std::vector<Mat2> aut_group_bruteforce(const LinPoly& f, std::uint64_t budget_qn = kDefaultGlBudget);

// True iff every candidate stabilizes U_f (prime-basis image membership).
bool aut_group_contains(const LinPoly& f, const std::vector<SemilinearMap>& candidates);

struct EquivResult {
    bool equivalent = false;
    std::optional<Mat2> witness_matrix;
    std::optional<int> witness_frob;
    // set when the negative verdict came from the group-order filter rather
    // than a full scan
    bool by_group_filter = false;
};

EquivResult are_equivalent_bruteforce(const LinPoly& f, const LinPoly& g,
                                      std::uint64_t budget_qn = kDefaultGlBudget,
                                      bool use_group_filter = true);

struct WeakEquivResult {
    bool equivalent = false;
    bool by_theorem = false; // negative verdicts are decided by the s = +-s' test
    std::optional<SemilinearMap> witness;
};

// Weak equivalence of two R-partial family members with twists s and s';
// positive cases carry a verified constructive witness.
WeakEquivResult weak_equiv_family11(const std::vector<FElem>& a_f, int s,
                                    const std::vector<FElem>& a_g, int s_prime, int t);

// phi(t)/2 for t >= 3; smaller t raises SmallT.
long count_weak_classes(int t);

// diag(a, a^{q^s}) for a in F_{q^m}^*, as full-field maps.
std::vector<SemilinearMap> diagonal_twist_maps(const FieldCtx* ctx, int s, int m);

// Expected stabilizer of the binomial x^{q^{kt+s}} + alpha x^{q^s}:
// diag(a, a^{q^s}) over F_{q^{t gcd(k, tprime)}}^*.
std::vector<Mat2> binomial_expected_group(const FieldCtx* ctx, int k, int s, int t, int tprime);

// Exponent-collision classification for the binomial stabilizer statement.
// At t = 2 one of three boundary coincidences can shrink the exponent set;
// the stated equality additionally assumes tprime != 2k.
enum class BinomialCollision { None, TwoKPlusS, KPlusS, S };
struct BinomialGroupCase {
    BinomialCollision collision = BinomialCollision::None;
    bool equality_stated = false; // tprime != 2k
};
BinomialGroupCase binomial_group_case(int k, int s, int t, int tprime);

enum class QuadCase { GenericOdd, GenericEven, LZ2Even, LZ2Odd };

struct GroupDescription {
    QuadCase kind;
    std::string generators; // summary of the generator set
    BigInt order;
    std::vector<Mat2> elements;
};

// Stated stabilizer of x^{q^s} + x^{q^{t+s}} + x^{q^k} - x^{q^{t+k}} under
// the eleven-exponent distinctness hypothesis.
GroupDescription quadrinomial_aut_expected(const FieldCtx* ctx, int s, int k, int t);

// x^{q^{t-k}} + x^{q^{2t-k}} + x^{q^k} - x^{q^{t+k}} and its stated
// stabilizer (q odd; k = 1 with t >= 5, or k > 1 coprime to 2t with t > 2k).
LinPoly reversed_quadrinomial(const FieldCtx* ctx, int k, int t);
GroupDescription reversed_quadrinomial_aut_expected(const FieldCtx* ctx, int k, int t);

} // namespace qscat
