#include "qscat/textio.hpp"

#include <map>
#include <sstream>

#include "qscat/families.hpp"
#include "qscat/intutil.hpp"

namespace qscat {

namespace {

long parse_long(const std::string& s) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) fail(Errc::ParseError, "trailing characters in number '" + s + "'");
        return v;
    } catch (const Error&) {
        throw;
    } catch (...) {
        fail(Errc::ParseError, "not a number: '" + s + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

} // namespace

std::string format_elem(FElem x) {
    if (x.is_zero()) return "0";
    return "g^" + std::to_string(x.ctx->dlog(x));
}

FElem parse_elem(const FieldCtx* ctx, const std::string& raw) {
    std::string s = strip(raw);
    if (s.empty()) fail(Errc::ParseError, "empty element");
    if (s == "0") return ctx->zero();
    if (s == "1") return ctx->one();
    if (s.rfind("g^", 0) == 0) return ctx->gen_pow(parse_long(s.substr(2)));
    if (s == "g") return ctx->generator();
    if (s.front() == '[' && s.back() == ']') {
        auto parts = split(s.substr(1, s.size() - 2), ',');
        std::vector<int> coords;
        coords.reserve(parts.size());
        for (const auto& p : parts) coords.push_back(static_cast<int>(parse_long(strip(p))));
        if (static_cast<int>(coords.size()) != ctx->d())
            fail(Errc::ParseError, "vector form needs d coordinates");
        return ctx->from_coords(coords);
    }
    fail(Errc::ParseError, "cannot parse element '" + s + "'");
}

std::string format_poly(const LinPoly& f) {
    std::string out;
    for (int i = 0; i < f.n(); ++i) {
        if (f.coeff(i).is_zero()) continue;
        if (!out.empty()) out += ",";
        out += std::to_string(i) + ":" + format_elem(f.coeff(i));
    }
    return out.empty() ? "zero" : out;
}

LinPoly parse_poly(const FieldCtx* ctx, const std::string& raw) {
    std::string s = strip(raw);
    std::vector<FElem> cs(static_cast<std::size_t>(ctx->n()), ctx->zero());
    if (s == "zero" || s.empty()) return LinPoly(ctx, std::move(cs));
    for (const auto& term : split(s, ',')) {
        auto parts = split(strip(term), ':');
        if (parts.size() != 2) fail(Errc::ParseError, "term must look like i:elem, got '" + term + "'");
        long i = parse_long(strip(parts[0]));
        if (i < 0 || i >= ctx->n()) fail(Errc::ParseError, "exponent out of range in '" + term + "'");
        FElem c = parse_elem(ctx, parts[1]);
        cs[static_cast<std::size_t>(i)] = cs[static_cast<std::size_t>(i)] + c;
    }
    return LinPoly(ctx, std::move(cs));
}

FieldSpec parse_field_spec(const std::string& raw) {
    std::string s = strip(raw);
    FieldSpec spec;
    std::string head = s;
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        head = s.substr(0, slash);
        auto parts = split(s.substr(slash + 1), ',');
        std::vector<int> mod;
        mod.reserve(parts.size());
        for (const auto& p : parts) mod.push_back(static_cast<int>(parse_long(strip(p))));
        spec.modulus = std::move(mod);
    }
    auto caret = head.find('^');
    if (caret == std::string::npos) fail(Errc::ParseError, "field spec must look like p^d");
    spec.p = parse_long(strip(head.substr(0, caret)));
    spec.d = static_cast<int>(parse_long(strip(head.substr(caret + 1))));
    return spec;
}

Tower parse_tower_spec(const std::string& raw, long p) {
    auto parts = split(strip(raw), ',');
    if (parts.size() != 3) fail(Errc::ParseError, "tower spec must look like q,t,tprime");
    long q = parse_long(strip(parts[0]));
    int e = power_exponent(p, q);
    if (e < 0) fail(Errc::ParseError, "tower q must be a power of the field characteristic");
    Tower tw;
    tw.e = e;
    tw.t = static_cast<int>(parse_long(strip(parts[1])));
    tw.tprime = static_cast<int>(parse_long(strip(parts[2])));
    return tw;
}

std::string format_report(const ScatterReport& r) {
    std::ostringstream os;
    os << "property=" << property_name(r.property) << " t=" << r.t << " ell=" << r.ell
       << " method=" << method_name(r.method) << " holds=" << (r.holds ? "true" : "false");
    if (r.witness) os << " witness=" << format_elem(r.witness->first) << "," << format_elem(r.witness->second);
    return os.str();
}

std::string format_mat2(const Mat2& m) {
    return "[" + format_elem(m.a) + "," + format_elem(m.b) + ";" + format_elem(m.c) + "," +
           format_elem(m.d) + "]";
}

std::string format_map(const SemilinearMap& m) {
    if (m.scope == SemilinearMap::Scope::FullField)
        return "matrix=" + format_mat2(m.A) + " frob=" + std::to_string(m.frob);
    const auto& B = *m.blocks;
    return "blocks=[" + format_poly(B[0]) + " | " + format_poly(B[1]) + " | " + format_poly(B[2]) +
           " | " + format_poly(B[3]) + "] companion=" + std::to_string(m.companion);
}

std::string format_point(const ProjPoint& p) {
    return "(" + format_elem(p.rep.first) + "," + format_elem(p.rep.second) + ")";
}

std::string format_line(const ProjLine& l) {
    std::string out = format_point(l.points.front());
    for (std::size_t i = 1; i < l.points.size(); ++i) out += " " + format_point(l.points[i]);
    return out;
}

std::string format_pseudoregulus(const PseudoregulusReport& r) {
    std::ostringstream os;
    os << "pseudoregulus positive=" << (r.positive ? "true" : "false")
       << " scattered=" << (r.scattered ? "true" : "false") << " m_expected=" << r.m_expected
       << " m_found=" << r.m_found << " disjoint=" << (r.disjoint ? "true" : "false")
       << " transversals=" << r.transversal_count << " points=" << r.point_count << "/"
       << r.point_count_expected << " weight_t_lines=" << r.weight_t_line_total << "\n";
    for (const auto& line : r.family) os << "line " << format_line(line) << "\n";
    for (const auto& line : r.transversals) os << "transversal " << format_line(line) << "\n";
    return os.str();
}

LinPoly parse_family_spec(const FieldCtx* ctx, const std::string& raw) {
    std::string s = strip(raw);
    auto open = s.find('(');
    if (open == std::string::npos || s.back() != ')')
        fail(Errc::ParseError, "family spec must look like kind(param=value,...)");
    std::string kind = strip(s.substr(0, open));
    std::map<std::string, std::string> params;
    std::string body = s.substr(open + 1, s.size() - open - 2);
    if (!strip(body).empty())
        for (const auto& item : split(body, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos) fail(Errc::ParseError, "parameter must look like key=value");
            params[strip(item.substr(0, eq))] = strip(item.substr(eq + 1));
        }
    auto want_int = [&](const std::string& key) {
        auto it = params.find(key);
        if (it == params.end()) fail(Errc::ParseError, "family spec misses parameter '" + key + "'");
        return static_cast<int>(parse_long(it->second));
    };
    auto want_elem = [&](const std::string& key) {
        auto it = params.find(key);
        if (it == params.end()) fail(Errc::ParseError, "family spec misses parameter '" + key + "'");
        return parse_elem(ctx, it->second);
    };
    int t = ctx->t();
    int tprime = ctx->tprime();
    if (kind == "monomial") return LinPoly::monomial(ctx, want_int("u"), ctx->one());
    if (kind == "lp") return lp_poly(want_elem("delta"), want_int("s"), ctx->n());
    if (kind == "form11") {
        std::vector<FElem> a;
        for (int i = 0; i < tprime; ++i) a.push_back(want_elem("a" + std::to_string(i)));
        return family11(a, want_int("s"), t);
    }
    if (kind == "binomial") {
        int k = want_int("k");
        if (k <= 0 || k >= tprime) fail(Errc::ExponentRange, "binomial needs 0 < k < tprime");
        std::vector<FElem> a(static_cast<std::size_t>(tprime), ctx->zero());
        a[0] = want_elem("alpha");
        a[static_cast<std::size_t>(k)] = ctx->one();
        return family11(a, want_int("s"), t);
    }
    if (kind == "trinomial") {
        if (tprime != 3) fail(Errc::WrongTower, "trinomial needs tprime = 3");
        std::vector<FElem> a = {want_elem("alpha"), want_elem("beta"), ctx->one()};
        return family11(a, want_int("s"), t);
    }
    if (kind == "quadrinomial") return quadrinomial(ctx, want_int("s"), want_int("k"), t);
    fail(Errc::ParseError, "unknown family kind '" + kind + "'");
}

Property parse_property(const std::string& raw) {
    std::string s = strip(raw);
    if (s == "scattered") return Property::Scattered;
    if (s == "L" || s == "l") return Property::LPartial;
    if (s == "R" || s == "r") return Property::RPartial;
    fail(Errc::ParseError, "property must be scattered, L, or R");
}

Method parse_method(const std::string& raw) {
    std::string s = strip(raw);
    if (s == "oracle") return Method::Oracle;
    if (s == "criterion") return Method::Criterion;
    if (s == "curve") return Method::Curve;
    fail(Errc::ParseError, "method must be oracle, criterion, or curve");
}

} // namespace qscat
