// qscat command line: test one polynomial, enumerate a family, or run a
// verification suite.  Output is line-delimited key=value records (or an
// aligned table with --format table); identical invocations print identical
// bytes.
//
// Exit codes: 0 holds / all pass, 1 property fails (witness printed),
// 2 usage or parse error, 3 budget exceeded.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qscat/acceptance.hpp"
#include "qscat/detrng.hpp"
#include "qscat/families.hpp"
#include "qscat/geometry.hpp"
#include "qscat/groups.hpp"
#include "qscat/textio.hpp"

using namespace qscat;

namespace {

struct CommonOpts {
    std::string field = "2^4";
    std::string tower;
    std::uint64_t budget_oracle = 1u << 16;
    std::uint64_t budget_probe = kDefaultProbeBudget;
    std::uint64_t budget_gl = kDefaultGlBudget;
    std::uint64_t budget_enum = kDefaultEnumBudget;
    long budget_lines = kMaxLineEnumQt;
    std::uint64_t seed = kDefaultSeed;
    std::string format = "records";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--field", o.field, "field spec p^d or p^d/c0,c1,...,cd")->envname("QSCAT_FIELD");
    cmd->add_option("--tower", o.tower, "tower spec q,t,tprime")->envname("QSCAT_TOWER");
    cmd->add_option("--budget-oracle", o.budget_oracle, "max field size for exhaustive scans")
        ->envname("QSCAT_BUDGET_ORACLE");
    cmd->add_option("--budget-probe", o.budget_probe, "max q^{nm} for exceptionality probes")
        ->envname("QSCAT_BUDGET_PROBE");
    cmd->add_option("--budget-gl", o.budget_gl, "max q^n for GL(2,q^n) scans")
        ->envname("QSCAT_BUDGET_GL");
    cmd->add_option("--budget-enum", o.budget_enum, "max tuple count for family enumeration")
        ->envname("QSCAT_BUDGET_ENUM");
    cmd->add_option("--budget-lines", o.budget_lines, "max q^t for line enumeration")
        ->envname("QSCAT_BUDGET_LINES");
    cmd->add_option("--seed", o.seed, "seed for any sampled suites")->envname("QSCAT_SEED");
    cmd->add_option("--format", o.format, "output format: records or table")
        ->check(CLI::IsMember({"records", "table"}))
        ->envname("QSCAT_FORMAT");
}

FieldPtr open_field(const CommonOpts& o) {
    FieldSpec spec = parse_field_spec(o.field);
    std::optional<Tower> tower;
    if (!o.tower.empty()) {
        Tower tw = parse_tower_spec(o.tower, spec.p);
        if (tw.e * tw.t * tw.tprime != spec.d)
            fail(Errc::TowerMismatch, "tower q,t,tprime must satisfy e*t*tprime = d");
        tower = tw;
    } else {
        // no tower given: treat the whole field as F_{q^n} with q = p, t = 1
        tower = Tower{1, 1, spec.d};
    }
    return make_field(spec.p, spec.d, spec.modulus, tower);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"toolkit for partially scattered linearized polynomials over finite fields"};
    app.require_subcommand(1);

    // --- test ---
    CommonOpts topt;
    std::string poly_text, property_text = "scattered", method_text = "oracle";
    int opt_t = -1, opt_ell = 0;
    std::vector<long> m_list;
    std::string family_spec_text;
    auto* cmd_test = app.add_subcommand("test", "evaluate one predicate for one polynomial");
    add_common(cmd_test, topt);
    auto* popt_poly =
        cmd_test->add_option("--poly", poly_text, "polynomial, comma-separated i:elem terms");
    cmd_test->add_option("--family-spec", family_spec_text, "family form kind(param=value,...)")
        ->excludes(popt_poly);
    cmd_test->add_option("--property", property_text, "scattered, L, or R");
    cmd_test->add_option("--t", opt_t, "subfield degree t (default: tower t)");
    cmd_test->add_option("--ell", opt_ell, "index ell (default 0)");
    cmd_test->add_option("--method", method_text, "oracle, criterion, or curve");
    cmd_test->add_option("--m-list", m_list, "probe extension multipliers; runs the exceptionality probe");

    // --- enumerate ---
    CommonOpts eopt;
    std::string family_kind;
    int fam_s = 1, fam_k = 1;
    std::string filter = "all";
    auto* cmd_enum = app.add_subcommand("enumerate", "stream one record per family member");
    add_common(cmd_enum, eopt);
    cmd_enum->add_option("--family", family_kind, "form11, binomial, trinomial, monomial, or lp")
        ->required();
    cmd_enum->add_option("--s", fam_s, "twist exponent s");
    cmd_enum->add_option("--k", fam_k, "binomial gap k");
    cmd_enum->add_option("--filter", filter, "all or r-partial")
        ->check(CLI::IsMember({"all", "r-partial"}));

    // --- verify ---
    CommonOpts vopt;
    std::string suite_name = "all";
    auto* cmd_verify = app.add_subcommand("verify", "run a named verification suite");
    add_common(cmd_verify, vopt);
    cmd_verify->add_option("suite", suite_name, "suite name or 'all'");
    bool list_suites = false;
    cmd_verify->add_flag("--list", list_suites, "list the suite names");

    // --- pseudoregulus ---
    CommonOpts popt;
    std::string ppoly;
    int popt_t = -1;
    auto* cmd_pseudo = app.add_subcommand("pseudoregulus", "linear-set structure report for one polynomial");
    add_common(cmd_pseudo, popt);
    cmd_pseudo->add_option("--poly", ppoly, "polynomial, comma-separated i:elem terms")->required();
    cmd_pseudo->add_option("--t", popt_t, "subfield degree t (default: tower t)");

    // --- autgroup ---
    CommonOpts gopt;
    std::string gpoly;
    bool gmatrices = false;
    auto* cmd_aut = app.add_subcommand("autgroup", "brute-force stabilizer of the graph subspace");
    add_common(cmd_aut, gopt);
    cmd_aut->add_option("--poly", gpoly, "polynomial, comma-separated i:elem terms")->required();
    cmd_aut->add_flag("--matrices", gmatrices, "print every matrix, not only the order");

    // --- equiv ---
    CommonOpts qopt;
    std::string qpoly1, qpoly2;
    bool no_filter = false;
    auto* cmd_equiv = app.add_subcommand("equiv", "search for a GL(2,q^n) x Frobenius equivalence witness");
    add_common(cmd_equiv, qopt);
    cmd_equiv->add_option("--poly", qpoly1, "first polynomial")->required();
    cmd_equiv->add_option("--poly2", qpoly2, "second polynomial")->required();
    cmd_equiv->add_flag("--no-group-filter", no_filter, "skip the stabilizer-order fast path");

    // --- weakequiv ---
    CommonOpts wopt;
    std::vector<std::string> wa_f, wa_g;
    int ws = 1, ws2 = 1;
    auto* cmd_weak = app.add_subcommand("weakequiv", "weak equivalence of two family members");
    add_common(cmd_weak, wopt);
    cmd_weak->add_option("--a", wa_f, "coefficients of the first member")->required();
    cmd_weak->add_option("--b", wa_g, "coefficients of the second member")->required();
    cmd_weak->add_option("--s", ws, "twist of the first member");
    cmd_weak->add_option("--s2", ws2, "twist of the second member");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_test->parsed()) {
            auto ctx = open_field(topt);
            if (poly_text.empty() && family_spec_text.empty())
                fail(Errc::ParseError, "give either --poly or --family-spec");
            LinPoly f = family_spec_text.empty() ? parse_poly(ctx.get(), poly_text)
                                                 : parse_family_spec(ctx.get(), family_spec_text);
            int t = opt_t > 0 ? opt_t : ctx->t();
            Property prop = parse_property(property_text);
            if (!m_list.empty()) {
                auto probes = exceptionality_probe(f, t, prop, m_list, topt.budget_probe);
                for (auto [m, holds] : probes)
                    std::cout << "property=" << property_name(prop) << " t=" << t << " m=" << m
                              << " holds=" << (holds ? "true" : "false") << " verdict=probe\n";
                return 0;
            }
            Method method = parse_method(method_text);
            ScatterReport rep{};
            switch (method) {
                case Method::Oracle:
                    if (ctx->size() > topt.budget_oracle)
                        fail(Errc::BudgetExceeded, "field too large for the oracle budget");
                    rep = prop == Property::Scattered ? is_scattered_oracle(f, opt_ell)
                          : prop == Property::LPartial ? is_L_partial_oracle(f, t, opt_ell)
                                                       : is_R_partial_oracle(f, t, opt_ell);
                    break;
                case Method::Criterion:
                    if (opt_ell != 0) fail(Errc::ExponentRange, "criterion form is stated for index 0");
                    rep = prop == Property::Scattered ? is_scattered_criterion(f)
                          : prop == Property::LPartial ? is_L_partial_criterion(f, t)
                                                       : is_R_partial_criterion(f, t);
                    break;
                case Method::Curve:
                    if (prop != Property::LPartial)
                        fail(Errc::ParseError, "the curve method applies to the L property");
                    rep = l_partial_via_curve(f, t, opt_ell);
                    break;
            }
            if (topt.format == "table") {
                std::printf("%-10s %-3s %-4s %-10s %-6s %s\n", "property", "t", "ell", "method",
                            "holds", "witness");
                std::printf("%-10s %-3d %-4d %-10s %-6s %s\n", property_name(rep.property), rep.t,
                            rep.ell, method_name(rep.method), rep.holds ? "true" : "false",
                            rep.witness ? (format_elem(rep.witness->first) + "," +
                                           format_elem(rep.witness->second))
                                              .c_str()
                                        : "-");
            } else {
                std::cout << format_report(rep) << "\n";
            }
            return rep.holds ? 0 : 1;
        }

        if (cmd_enum->parsed()) {
            auto ctx = open_field(eopt);
            int t = ctx->t();
            int tprime = ctx->tprime();
            bool only_r = filter == "r-partial";
            long total = 0, r_count = 0;
            auto emit = [&](const std::string& record) {
                if (eopt.format == "table") {
                    std::istringstream is(record);
                    std::string tok;
                    while (is >> tok) {
                        auto eq = tok.find('=');
                        std::printf("%-16s", (eq == std::string::npos ? tok : tok.substr(eq + 1)).c_str());
                    }
                    std::printf("\n");
                } else {
                    std::cout << record << "\n";
                }
            };
            if (family_kind == "form11") {
                std::uint64_t tuples = 1;
                for (int i = 0; i < tprime; ++i) {
                    if (tuples > eopt.budget_enum / ctx->size()) fail(Errc::BudgetExceeded, "tuple budget");
                    tuples *= ctx->size();
                }
                std::vector<std::uint32_t> idx(static_cast<std::size_t>(tprime), 0);
                std::vector<FElem> a(static_cast<std::size_t>(tprime), ctx->zero());
                while (true) {
                    for (int i = 0; i < tprime; ++i)
                        a[static_cast<std::size_t>(i)] = ctx->by_ord(idx[static_cast<std::size_t>(i)]);
                    bool all_zero = true;
                    for (FElem x : a)
                        if (!x.is_zero()) all_zero = false;
                    ++total;
                    bool rp = all_zero ? false : family11_is_R_partial(a, fam_s, t);
                    if (rp) ++r_count;
                    if (!only_r || rp) {
                        std::ostringstream rec;
                        rec << "kind=form11 s=" << fam_s;
                        for (int i = 0; i < tprime; ++i)
                            rec << " a" << i << "=" << format_elem(a[static_cast<std::size_t>(i)]);
                        rec << " r_partial=" << (rp ? "true" : "false");
                        emit(rec.str());
                    }
                    int pos = 0;
                    while (pos < tprime) {
                        if (++idx[static_cast<std::size_t>(pos)] < ctx->size()) break;
                        idx[static_cast<std::size_t>(pos)] = 0;
                        ++pos;
                    }
                    if (pos == tprime) break;
                }
            } else if (family_kind == "binomial") {
                for (std::uint32_t o = 1; o < ctx->size(); ++o) {
                    FElem alpha = ctx->by_ord(o);
                    ++total;
                    bool rp = binomial_is_R_partial(alpha, fam_k, fam_s, t, tprime).holds;
                    if (rp) ++r_count;
                    if (!only_r || rp) {
                        std::ostringstream rec;
                        rec << "kind=binomial k=" << fam_k << " s=" << fam_s
                            << " alpha=" << format_elem(alpha)
                            << " r_partial=" << (rp ? "true" : "false");
                        emit(rec.str());
                    }
                }
            } else if (family_kind == "trinomial") {
                if (tprime != 3) fail(Errc::WrongTower, "trinomial enumeration needs tprime = 3");
                for (std::uint32_t oa = 0; oa < ctx->size(); ++oa)
                    for (std::uint32_t ob = 0; ob < ctx->size(); ++ob) {
                        FElem alpha = ctx->by_ord(oa), beta = ctx->by_ord(ob);
                        ++total;
                        bool rp = trinomial_is_R_partial(alpha, beta, fam_s, t);
                        if (rp) ++r_count;
                        if (!only_r || rp) {
                            std::ostringstream rec;
                            rec << "kind=trinomial s=" << fam_s << " alpha=" << format_elem(alpha)
                                << " beta=" << format_elem(beta)
                                << " r_partial=" << (rp ? "true" : "false");
                            emit(rec.str());
                        }
                    }
            } else if (family_kind == "monomial") {
                for (int u = 1; u < ctx->n(); ++u) {
                    MonomialStatus st = monomial_status(u, ctx->n(), t);
                    ++total;
                    if (st.r_partial) ++r_count;
                    if (!only_r || st.r_partial) {
                        std::ostringstream rec;
                        rec << "kind=monomial u=" << u << " L=" << (st.l_partial ? "true" : "false")
                            << " R=" << (st.r_partial ? "true" : "false")
                            << " scattered=" << (st.scattered ? "true" : "false");
                        emit(rec.str());
                    }
                }
            } else if (family_kind == "lp") {
                for (std::uint32_t o = 1; o < ctx->size(); ++o) {
                    FElem delta = ctx->by_ord(o);
                    LinPoly f = lp_poly(delta, fam_s, ctx->n());
                    ++total;
                    bool sc = is_scattered_oracle(f, 0).holds;
                    if (sc) ++r_count;
                    if (!only_r || sc) {
                        std::ostringstream rec;
                        rec << "kind=lp s=" << fam_s << " delta=" << format_elem(delta)
                            << " scattered=" << (sc ? "true" : "false");
                        emit(rec.str());
                    }
                }
            } else {
                fail(Errc::ParseError, "unknown family '" + family_kind + "'");
            }
            std::cout << "summary kind=" << family_kind << " total=" << total
                      << " passing=" << r_count << "\n";
            return 0;
        }

        if (cmd_pseudo->parsed()) {
            auto ctx = open_field(popt);
            LinPoly f = parse_poly(ctx.get(), ppoly);
            int t = popt_t > 0 ? popt_t : ctx->t();
            PseudoregulusReport rep = pseudoregulus_check(f, t, popt.budget_lines);
            std::cout << format_pseudoregulus(rep);
            return rep.positive ? 0 : 1;
        }

        if (cmd_aut->parsed()) {
            auto ctx = open_field(gopt);
            LinPoly f = parse_poly(ctx.get(), gpoly);
            auto group = aut_group_bruteforce(f, gopt.budget_gl);
            std::cout << "autgroup order=" << group.size() << "\n";
            if (gmatrices)
                for (const auto& m : group) std::cout << "matrix " << format_mat2(m) << "\n";
            return 0;
        }

        if (cmd_equiv->parsed()) {
            auto ctx = open_field(qopt);
            LinPoly f = parse_poly(ctx.get(), qpoly1);
            LinPoly g = parse_poly(ctx.get(), qpoly2);
            EquivResult res = are_equivalent_bruteforce(f, g, qopt.budget_gl, !no_filter);
            if (res.equivalent)
                std::cout << "equivalent=true matrix=" << format_mat2(*res.witness_matrix)
                          << " frob=" << *res.witness_frob << "\n";
            else
                std::cout << "equivalent=false verdict="
                          << (res.by_group_filter ? "by-group-order" : "full-scan") << "\n";
            return res.equivalent ? 0 : 1;
        }

        if (cmd_weak->parsed()) {
            auto ctx = open_field(wopt);
            int t = ctx->t();
            std::vector<FElem> af, ag;
            for (const auto& s : wa_f) af.push_back(parse_elem(ctx.get(), s));
            for (const auto& s : wa_g) ag.push_back(parse_elem(ctx.get(), s));
            WeakEquivResult res = weak_equiv_family11(af, ws, ag, ws2, t);
            if (res.equivalent)
                std::cout << "weakly_equivalent=true witness " << format_map(*res.witness) << "\n";
            else
                std::cout << "weakly_equivalent=false verdict="
                          << (res.by_theorem ? "by-theorem" : "none") << "\n";
            return res.equivalent ? 0 : 1;
        }

        if (cmd_verify->parsed()) {
            set_suite_seed(vopt.seed);
            if (list_suites) {
                for (const auto& s : acceptance_suites())
                    std::cout << "suite=" << s.name << " summary=\"" << s.summary << "\"\n";
                return 0;
            }
            bool all_pass = true;
            if (suite_name == "all") {
                int i = 0, total = static_cast<int>(acceptance_suites().size());
                for (const auto& s : acceptance_suites()) {
                    SuiteResult r = s.run();
                    ++i;
                    std::cout << "[" << i << "/" << total << "] " << (r.pass ? "PASS" : "FAIL") << " "
                              << r.name << ": " << r.detail << "\n";
                    all_pass = all_pass && r.pass;
                }
            } else {
                SuiteResult r = run_suite(suite_name);
                std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << ": " << r.detail << "\n";
                all_pass = r.pass;
            }
            std::cout << "summary " << (all_pass ? "pass" : "fail") << "\n";
            return all_pass ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::BudgetExceeded ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
