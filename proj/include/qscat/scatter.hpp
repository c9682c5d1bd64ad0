#pragma once

// Scatteredness predicates: exhaustive fiber-scan oracles, the bijectivity
// criteria over rho ranges, the plane-curve check, extension-field probes,
// and the exact arithmetic necessary conditions.

#include <optional>
#include <utility>
#include <vector>

#include "qscat/linpoly.hpp"

namespace qscat {

enum class Property { Scattered, LPartial, RPartial };
enum class Method { Oracle, Criterion, Curve };

const char* property_name(Property p);
const char* method_name(Method m);

struct ScatterReport {
    Property property;
    int t = 1;
    int ell = 0;
    Method method = Method::Oracle;
    bool holds = false;
    // Present iff holds is false: a pair (y, z) with f(y)/y^{q^ell} =
    // f(z)/z^{q^ell} whose ratio violates the property's conclusion.
    std::optional<std::pair<FElem, FElem>> witness;
};

// Replays a witness pair against the defining condition; true when the pair
// indeed violates it.
bool witness_violates(const LinPoly& f, const ScatterReport& r);

// Fiber-scan oracles over all of F_{q^n}^*.  naive = true switches to the
// O(q^{2n}) pair loop kept as ground truth for tiny fields.
ScatterReport is_scattered_oracle(const LinPoly& f, int ell, bool naive = false);
ScatterReport is_L_partial_oracle(const LinPoly& f, int t, int ell, bool naive = false);
ScatterReport is_R_partial_oracle(const LinPoly& f, int t, int ell, bool naive = false);

// Bijectivity criteria (index 0): f_rho invertible for every rho in the
// property's range.
ScatterReport is_R_partial_criterion(const LinPoly& f, int t);
ScatterReport is_L_partial_criterion(const LinPoly& f, int t);
ScatterReport is_scattered_criterion(const LinPoly& f);

// f(x) y^{q^ell} - f(y) x^{q^ell}
FElem curve_numerator(const LinPoly& f, int ell, FElem x, FElem y);

// Scans affine point pairs off the trivial lines; agrees with the L oracle.
ScatterReport l_partial_via_curve(const LinPoly& f, int t, int ell);

inline constexpr std::uint64_t kDefaultProbeBudget = 1u << 16;

// Evaluates the index-0 criterion for the property over F_{q^{nm}} for each
// m, embedding f's coefficients.  A false verdict refutes exceptionality via
// that m; all-true is evidence only.
std::vector<std::pair<long, bool>> exceptionality_probe(
    const LinPoly& f, int t, Property property, const std::vector<long>& m_list,
    std::uint64_t budget = kDefaultProbeBudget);

// Hypothesis shapes of the parameter inequality for L-partial polynomials.
enum class LShape {
    Index0,          // ell = 0
    Index1,          // ell = 1, requires k >= 3
    IndexHighWithQ,  // ell >= 2, f = a_0 x + a_1 x^q + sum_{j>ell}, k >= ell+2
    IndexHighNoQ,    // ell >= 2, f = a_0 x + sum_{j>ell}
};

// Exact integer evaluation (radical isolated and squared) of the necessary
// condition; true when the inequality admits the parameters.
bool check_L_inequality(long q, long n, long k, long t, long ell, long v, LShape shape);

// n/2 <= max{2k, 2ell, (k+t)/2, (ell+t)/2}, exact rational comparison.
bool check_L_degree_bound(long n, long k, long t, long ell);

} // namespace qscat
