#pragma once

// Canonical text forms: elements as "g^k" or "0" (vector form "[c0,c1,...]"
// accepted on input), polynomials as comma-separated "i:elem" terms, field
// specs as "p^d" or "p^d/c0,c1,...,cd", and line-delimited key=value records.

#include <string>
#include <vector>

#include "qscat/geometry.hpp"
#include "qscat/gf.hpp"
#include "qscat/groups.hpp"
#include "qscat/linpoly.hpp"
#include "qscat/scatter.hpp"

namespace qscat {

std::string format_elem(FElem x);
FElem parse_elem(const FieldCtx* ctx, const std::string& text);

std::string format_poly(const LinPoly& f);
LinPoly parse_poly(const FieldCtx* ctx, const std::string& text);

struct FieldSpec {
    long p = 2;
    int d = 1;
    std::optional<std::vector<int>> modulus;
};
FieldSpec parse_field_spec(const std::string& text);

// "q,t,tprime"
Tower parse_tower_spec(const std::string& text, long p);

std::string format_report(const ScatterReport& r);
std::string format_mat2(const Mat2& m);
std::string format_map(const SemilinearMap& m);
std::string format_point(const ProjPoint& p);
std::string format_line(const ProjLine& l);
// multi-line record block: summary line, then one line per family line and
// per transversal
std::string format_pseudoregulus(const PseudoregulusReport& r);

Property parse_property(const std::string& text);
Method parse_method(const std::string& text);

// Family spec form "kind(param=value,...)", e.g. "binomial(k=1,s=1,alpha=g^3)"
// with kinds monomial, lp, form11, binomial, trinomial, quadrinomial; tower
// parameters t, tprime come from the context.
LinPoly parse_family_spec(const FieldCtx* ctx, const std::string& text);

} // namespace qscat
