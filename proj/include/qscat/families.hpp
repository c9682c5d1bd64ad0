#pragma once

// Constructors and characterizations for the explicit families: monomials,
// the two-term polynomials with reversed exponents (LP type), the family
// sum a_i x^{q^{it+s}}, its binomials and trinomials, quadrinomials, and the
// composition scheme g_a o phi.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qscat/linpoly.hpp"
#include "qscat/scatter.hpp"

namespace qscat {

using BigInt = boost::multiprecision::cpp_int;

struct MonomialStatus {
    bool l_partial = false;
    bool r_partial = false;
    bool scattered = false;
    // exceptional for the property but not scattered
    bool exceptional_L_not_scattered = false;
    bool exceptional_R_not_scattered = false;
};

// gcd conditions for x^{q^u} over F_{q^n} with respect to t | n.
MonomialStatus monomial_status(long u, long n, long t);

// x^{q^{s(n-1)}} + delta x^{q^s}, gcd(s, n) = 1.
LinPoly lp_poly(FElem delta, int s, int n);

// For odd n with N_{q^n/q}(delta) = 1 the polynomial is neither L- nor
// R-partially scattered; otherwise unknown and callers fall back to oracles.
struct LpOddStatus {
    std::optional<bool> l_partial;
    std::optional<bool> r_partial;
};
LpOddStatus lp_status_odd_n(FElem delta, int s, int n, int t);

// g_a(x) = sum a_i x^{q^{it}} for a coefficient vector of length tprime.
LinPoly g_a_poly(const std::vector<FElem>& a, int t);

// f(x) = sum a_i x^{q^{it+s}}, gcd(s, t) = 1, a not all zero.
LinPoly family11(const std::vector<FElem>& a, int s, int t);

bool family11_is_R_partial(const std::vector<FElem>& a, int s, int t);

// Recognize a polynomial of the family shape; returns the residue s in
// [0, t) and the coefficient vector indexed by (it + s) mod n.
std::optional<std::pair<int, std::vector<FElem>>> form11_shape(const LinPoly& f, int t);

// f = g_a o phi; the boolean is the invertibility of g_a, which decides the
// R-partial property when phi is R-partially scattered.  With verify_phi the
// criterion is run on phi and PhiNotRPartial thrown on failure.
std::pair<LinPoly, bool> compose_construct(const std::vector<FElem>& a, const LinPoly& phi,
                                           int t, bool verify_phi = false);

struct BinomialRStatus {
    bool holds = false;
    bool exceptional_evidence = false;
};

// x^{q^{kt+s}} + alpha x^{q^s} is R-partially scattered iff
// N_{q^n/q^{t gcd(k, tprime)}}(-alpha) != 1.
BinomialRStatus binomial_is_R_partial(FElem alpha, int k, int s, int t, int tprime);

// n = 3t trinomial x^{q^{2t+s}} + beta x^{q^{t+s}} + alpha x^{q^s}:
// R-partial iff N(alpha) + N(beta) - Tr(alpha beta^{q^t}) + 1 != 0.
bool trinomial_is_R_partial(FElem alpha, FElem beta, int s, int t);
FElem trinomial_condition_value(FElem alpha, FElem beta, int t);

// Coefficient vector a_i = sum_j alpha^{j q^{it}} basis_j built from a
// primitive element and an F_{q^t}-basis; the resulting g_a is invertible.
std::vector<FElem> invertible_from_basis(FElem alpha, const std::vector<FElem>& basis, int s, int t);

struct Form11Count {
    BigInt formula = 0;
    std::optional<std::uint64_t> enumerated;
};

inline constexpr std::uint64_t kDefaultEnumBudget = 1u << 22;

// formula = prod_{i<tprime} (q^n - q^{it}); enumerated counts the a-vectors
// with invertible g_a by Dickson determinant scan (omitted over budget).
Form11Count count_R_partial_form11(long q, int t, int tprime,
                                   std::uint64_t budget = kDefaultEnumBudget);

struct BinomialRNotScattered {
    bool applies = false;
    bool r_partial = false;
    bool scattered = false;
    bool oracle_checked = false;
    // element m with dim ker(f - m x) = 2, when found at desk scale
    std::optional<FElem> witness_m;
};

// delta x^{q^s} + x^{q^{t+s}} over F_{q^{2t}}: R-partial but not scattered
// under the stated n-bound and norm condition.
BinomialRNotScattered binomial_R_not_scattered(FElem delta, int s, int t,
                                               std::uint64_t oracle_budget = 1u << 16);

// x^{q^s} + x^{q^{t+s}} + x^{q^k} - x^{q^{t+k}} over F_{q^{2t}}; the minus
// sign collapses to plus in characteristic 2.  Exponents reduce mod n and
// coefficients accumulate.
LinPoly quadrinomial(const FieldCtx* ctx, int s, int k, int t);

} // namespace qscat
