#include "qscat/geometry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "qscat/fieldmat.hpp"
#include "qscat/intutil.hpp"

namespace qscat {

SubfieldFrame::SubfieldFrame(const FieldCtx* ctx, int m) : ctx_(ctx), m_(m) {
    if (ctx_ == nullptr) fail(Errc::Internal, "null context");
    if (m < 1 || ctx->n() % m != 0) fail(Errc::NotDivisor, "m must divide n");
    basis_ = greedy_basis_over(*ctx, m);
    int k = dim();
    int n = ctx->n();
    // trace-dual basis: solve C * T = I for T[i][j] = Tr(b_i b_j)
    FieldMat T(ctx, k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            T.at(i, j) = rel_trace(basis_[static_cast<std::size_t>(i)] * basis_[static_cast<std::size_t>(j)], n, m);
    FieldMat C = T.inverse();
    dual_.resize(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        FElem acc = ctx->zero();
        for (int i = 0; i < k; ++i) acc = acc + C.at(j, i) * basis_[static_cast<std::size_t>(i)];
        dual_[static_cast<std::size_t>(j)] = acc;
    }
}

std::vector<FElem> SubfieldFrame::coords(FElem x) const {
    int k = dim();
    std::vector<FElem> cs(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        cs[static_cast<std::size_t>(i)] = rel_trace(dual_[static_cast<std::size_t>(i)] * x, ctx_->n(), m_);
    return cs;
}

FElem SubfieldFrame::from_coords(const std::vector<FElem>& cs) const {
    if (static_cast<int>(cs.size()) != dim()) fail(Errc::WrongLength, "coordinate count mismatch");
    FElem acc = ctx_->zero();
    for (int i = 0; i < dim(); ++i) acc = acc + cs[static_cast<std::size_t>(i)] * basis_[static_cast<std::size_t>(i)];
    return acc;
}

std::vector<FElem> SubfieldFrame::pair_coords(const VecPair& w) const {
    auto cu = coords(w.first);
    auto cv = coords(w.second);
    cu.insert(cu.end(), cv.begin(), cv.end());
    return cu;
}

bool ProjPointLess::operator()(const ProjPoint& a, const ProjPoint& b) const {
    const FieldCtx* ctx = a.rep.first.ctx ? a.rep.first.ctx : a.rep.second.ctx;
    for (std::size_t i = 0; i < a.coords.size() && i < b.coords.size(); ++i) {
        auto oa = ctx->ord(a.coords[i]);
        auto ob = ctx->ord(b.coords[i]);
        if (oa != ob) return oa < ob;
    }
    return a.coords.size() < b.coords.size();
}

ProjPoint normalize_point(const SubfieldFrame& frame, const VecPair& w) {
    if (w.first.is_zero() && w.second.is_zero())
        fail(Errc::ZeroVector, "projective point needs a nonzero representative");
    auto cs = frame.pair_coords(w);
    FElem lead = frame.ctx()->zero();
    for (const FElem& c : cs)
        if (!c.is_zero()) {
            lead = c;
            break;
        }
    if (lead.is_zero()) fail(Errc::Internal, "nonzero pair with zero coordinates");
    FElem scalein = frame.ctx()->inv(lead);
    ProjPoint pt;
    pt.rep = {scalein * w.first, scalein * w.second};
    pt.coords.reserve(cs.size());
    for (const FElem& c : cs) pt.coords.push_back(scalein * c);
    return pt;
}

ProjLine make_line(const SubfieldFrame& frame, const ProjPoint& a, const ProjPoint& b) {
    if (a == b) fail(Errc::Internal, "a line needs two distinct points");
    const FieldCtx* ctx = frame.ctx();
    std::vector<ProjPoint> pts;
    pts.push_back(normalize_point(frame, b.rep));
    for (FElem mu : ctx->subfield_elements(frame.m())) {
        VecPair w{a.rep.first + mu * b.rep.first, a.rep.second + mu * b.rep.second};
        pts.push_back(normalize_point(frame, w));
    }
    std::sort(pts.begin(), pts.end(), ProjPointLess{});
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::uint64_t qm = ipow(static_cast<std::uint64_t>(ctx->q()), static_cast<unsigned>(frame.m()));
    if (pts.size() != qm + 1) fail(Errc::Internal, "line has the wrong point count");
    ProjLine line;
    line.p0 = a;
    line.p1 = b;
    line.points = std::move(pts);
    return line;
}

std::vector<ProjPoint> all_proj_points(const SubfieldFrame& frame) {
    const FieldCtx* ctx = frame.ctx();
    int k = 2 * frame.dim();
    auto sub = ctx->subfield_elements(frame.m());
    std::vector<ProjPoint> out;
    std::vector<FElem> cs(static_cast<std::size_t>(k), ctx->zero());
    for (int lead = 0; lead < k; ++lead) {
        for (auto& c : cs) c = ctx->zero();
        cs[static_cast<std::size_t>(lead)] = ctx->one();
        int tail = k - lead - 1;
        std::vector<std::size_t> idx(static_cast<std::size_t>(tail), 0);
        while (true) {
            for (int i = 0; i < tail; ++i)
                cs[static_cast<std::size_t>(lead + 1 + i)] = sub[idx[static_cast<std::size_t>(i)]];
            int half = frame.dim();
            std::vector<FElem> cu(cs.begin(), cs.begin() + half);
            std::vector<FElem> cv(cs.begin() + half, cs.end());
            ProjPoint pt;
            pt.rep = {frame.from_coords(cu), frame.from_coords(cv)};
            pt.coords = cs;
            out.push_back(std::move(pt));
            int pos = 0;
            while (pos < tail) {
                if (++idx[static_cast<std::size_t>(pos)] < sub.size()) break;
                idx[static_cast<std::size_t>(pos)] = 0;
                ++pos;
            }
            if (pos == tail) break;
        }
    }
    std::sort(out.begin(), out.end(), ProjPointLess{});
    return out;
}

std::vector<ProjLine> all_proj_lines(const SubfieldFrame& frame) {
    if (frame.dim() != 2)
        fail(Errc::BudgetExceeded, "line enumeration implemented for PG(3, q^t) only");
    const FieldCtx* ctx = frame.ctx();
    auto points = all_proj_points(frame);
    std::vector<ProjLine> lines;
    std::set<std::vector<std::pair<std::uint32_t, std::uint32_t>>> seen;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            ProjLine line = make_line(frame, points[i], points[j]);
            std::vector<std::pair<std::uint32_t, std::uint32_t>> key;
            key.reserve(line.points.size());
            for (const auto& pt : line.points) key.emplace_back(pt.rep.first.v, pt.rep.second.v);
            if (seen.insert(std::move(key)).second) lines.push_back(std::move(line));
        }
    // Gaussian binomial self-check for the number of lines of PG(3, Q)
    std::uint64_t Q = ipow(static_cast<std::uint64_t>(ctx->q()), static_cast<unsigned>(frame.m()));
    std::uint64_t Q2 = Q * Q, Q4 = Q2 * Q2;
    std::uint64_t expect = (Q4 - 1) / (Q2 - 1) * ((Q4 - Q) / (Q2 - Q));
    if (lines.size() != expect) fail(Errc::Internal, "line count disagrees with the Gaussian binomial");
    return lines;
}

SubspaceFq::SubspaceFq(const FieldCtx* ctx, std::vector<VecPair> basis)
    : ctx_(ctx), basis_(std::move(basis)), prime_span_(ctx->p(), static_cast<std::size_t>(2 * ctx->d())) {
    auto mu = subfield_prime_basis(*ctx_, 1); // F_p-basis of F_q
    for (const auto& w : basis_) {
        if (w.first.ctx != ctx_ || w.second.ctx != ctx_)
            fail(Errc::CtxMismatch, "basis pair from a different context");
        for (FElem s : mu) {
            VecPair sw{s * w.first, s * w.second};
            if (!prime_span_.add_row(flatten(sw)))
                fail(Errc::NotBasis, "basis pairs are not F_q-independent");
        }
    }
}

std::vector<int> SubspaceFq::flatten(const VecPair& w) const {
    auto cu = ctx_->coords(w.first);
    auto cv = ctx_->coords(w.second);
    cu.insert(cu.end(), cv.begin(), cv.end());
    return cu;
}

bool SubspaceFq::contains(const VecPair& w) const { return prime_span_.contains(flatten(w)); }

std::vector<VecPair> SubspaceFq::all_vectors() const {
    auto scalars = ctx_->subfield_elements(1);
    int r = rank();
    std::vector<VecPair> out;
    out.reserve(static_cast<std::size_t>(1) << r); // at least for q = 2
    std::vector<std::size_t> idx(static_cast<std::size_t>(r), 0);
    while (true) {
        VecPair acc{ctx_->zero(), ctx_->zero()};
        for (int i = 0; i < r; ++i) {
            FElem c = scalars[idx[static_cast<std::size_t>(i)]];
            if (c.is_zero()) continue;
            acc.first = acc.first + c * basis_[static_cast<std::size_t>(i)].first;
            acc.second = acc.second + c * basis_[static_cast<std::size_t>(i)].second;
        }
        out.push_back(acc);
        int pos = 0;
        while (pos < r) {
            if (++idx[static_cast<std::size_t>(pos)] < scalars.size()) break;
            idx[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == r) break;
    }
    return out;
}

SubspaceFq graph_subspace(const LinPoly& f, int ell) {
    const FieldCtx* ctx = f.ctx();
    if (ell < 0 || ell >= ctx->n()) fail(Errc::ExponentRange, "index out of range");
    auto basis = greedy_basis_over(*ctx, 1);
    std::vector<VecPair> pairs;
    pairs.reserve(basis.size());
    for (FElem b : basis) pairs.emplace_back(frobenius(b, ell, ctx->q()), f.eval(b));
    return SubspaceFq(ctx, std::move(pairs));
}

std::pair<bool, std::optional<ProjPoint>> is_scattered_subspace(const SubspaceFq& U, int m) {
    const FieldCtx* ctx = U.ctx();
    if (m < 1 || ctx->n() % m != 0) fail(Errc::NotDivisor, "m must divide n");
    auto lambdas = ctx->subfield_elements(m);
    for (const auto& w : U.all_vectors()) {
        if (w.first.is_zero() && w.second.is_zero()) continue;
        for (FElem lam : lambdas) {
            if (lam.is_zero() || ctx->in_subfield_q(lam, 1)) continue;
            VecPair lw{lam * w.first, lam * w.second};
            if (U.contains(lw)) {
                SubfieldFrame frame(ctx, m);
                return {false, normalize_point(frame, w)};
            }
        }
    }
    return {true, std::nullopt};
}

std::vector<ProjPoint> linear_set_points(const SubspaceFq& U, int t) {
    const FieldCtx* ctx = U.ctx();
    SubfieldFrame frame(ctx, t);
    std::set<ProjPoint, ProjPointLess> pts;
    for (const auto& w : U.all_vectors()) {
        if (w.first.is_zero() && w.second.is_zero()) continue;
        pts.insert(normalize_point(frame, w));
    }
    return {pts.begin(), pts.end()};
}

int weight(const SubspaceFq& U, const std::vector<ProjPoint>& span_points, int t) {
    const FieldCtx* ctx = U.ctx();
    if (t < 1 || ctx->n() % t != 0) fail(Errc::NotDivisor, "t must divide n");
    auto mu_q = subfield_prime_basis(*ctx, 1);
    auto mu_t = subfield_prime_basis(*ctx, t);
    std::vector<std::vector<int>> urows;
    for (const auto& w : U.basis())
        for (FElem s : mu_q) urows.push_back(U.flatten({s * w.first, s * w.second}));
    std::vector<std::vector<int>> zrows;
    for (const auto& pt : span_points)
        for (FElem s : mu_t) zrows.push_back(U.flatten({s * pt.rep.first, s * pt.rep.second}));
    int dim_p = fp::intersection_dim(ctx->p(), urows, zrows);
    if (dim_p % ctx->e() != 0) fail(Errc::Internal, "intersection dimension not divisible by e");
    return dim_p / ctx->e();
}

PseudoregulusReport pseudoregulus_check(const LinPoly& f, int t, long max_qt,
                                        const std::vector<ProjLine>* cached_lines) {
    const FieldCtx* ctx = f.ctx();
    int n = ctx->n();
    if (t < 2 || n % t != 0) fail(Errc::TowerMismatch, "need t >= 2 dividing n");
    int tprime = n / t;
    if (tprime < 2) fail(Errc::TowerMismatch, "need tprime >= 2");
    if (tprime != 2)
        fail(Errc::BudgetExceeded, "transversal search is enumerable only for tprime = 2");
    std::uint64_t qt = ipow(static_cast<std::uint64_t>(ctx->q()), static_cast<unsigned>(t));
    if (qt > static_cast<std::uint64_t>(max_qt))
        fail(Errc::BudgetExceeded, "q^t exceeds the line enumeration budget");

    PseudoregulusReport rep;
    SubspaceFq U = graph_subspace(f, 0);
    rep.scattered = is_scattered_subspace(U, t).first;

    SubfieldFrame frame(ctx, t);
    std::vector<ProjLine> local_lines;
    const std::vector<ProjLine>* lines = cached_lines;
    if (lines == nullptr) {
        local_lines = all_proj_lines(frame);
        lines = &local_lines;
    }

    auto points = linear_set_points(U, t);
    std::map<std::pair<std::uint32_t, std::uint32_t>, int> point_index;
    for (std::size_t i = 0; i < points.size(); ++i)
        point_index[{points[i].rep.first.v, points[i].rep.second.v}] = static_cast<int>(i);
    rep.point_count = static_cast<long>(points.size());
    std::uint64_t qn = ipow(static_cast<std::uint64_t>(ctx->q()), static_cast<unsigned>(n));
    rep.point_count_expected = static_cast<long>((qn - 1) / (static_cast<std::uint64_t>(ctx->q()) - 1));
    rep.m_expected = static_cast<long>((qn - 1) / (qt - 1));

    // Weight-t lines with the indices of their linear-set points.  Plenty of
    // lines carry weight t (at t = 2 every secant does); the pseudoregulus is
    // a pairwise disjoint subfamily that partitions the point set.
    struct WLine {
        const ProjLine* line;
        std::vector<int> covered;
    };
    std::vector<WLine> wlines;
    long points_per_line = static_cast<long>((qt - 1) / (static_cast<std::uint64_t>(ctx->q()) - 1));
    for (const auto& line : *lines) {
        if (weight(U, {line.p0, line.p1}, t) != t) continue;
        WLine wl{&line, {}};
        for (const auto& pt : line.points) {
            auto it = point_index.find({pt.rep.first.v, pt.rep.second.v});
            if (it != point_index.end()) wl.covered.push_back(it->second);
        }
        wlines.push_back(std::move(wl));
    }
    rep.weight_t_line_total = static_cast<long>(wlines.size());

    bool counts_ok = rep.scattered && rep.point_count == rep.point_count_expected;
    if (counts_ok)
        for (const auto& wl : wlines)
            if (static_cast<long>(wl.covered.size()) != points_per_line) counts_ok = false;

    // external lines: disjoint from the linear set, candidates for transversals
    std::vector<const ProjLine*> external;
    for (const auto& line : *lines) {
        bool touches = false;
        for (const auto& pt : line.points)
            if (point_index.count({pt.rep.first.v, pt.rep.second.v})) {
                touches = true;
                break;
            }
        if (!touches) external.push_back(&line);
    }

    auto lines_meet = [](const ProjLine& a, const ProjLine& b) {
        for (const auto& pt : a.points)
            if (std::binary_search(b.points.begin(), b.points.end(), pt, ProjPointLess{}))
                return true;
        return false;
    };

    // exact-cover backtracking over the canonical line order: cover the
    // lowest uncovered point with a weight-t line disjoint (in PG) from the
    // chosen ones; on a full cover, demand exactly two external lines meeting
    // every family member
    std::vector<const WLine*> chosen;
    std::vector<bool> covered(points.size(), false);
    std::vector<const ProjLine*> found_transversals;
    bool done = false;

    auto transversal_scan = [&]() {
        found_transversals.clear();
        for (const ProjLine* cand : external) {
            bool meets_all = true;
            for (const WLine* wl : chosen)
                if (!lines_meet(*cand, *wl->line)) {
                    meets_all = false;
                    break;
                }
            if (meets_all) found_transversals.push_back(cand);
        }
        return found_transversals.size() == 2;
    };

    std::function<void()> search = [&]() {
        if (done) return;
        int next = -1;
        for (std::size_t i = 0; i < covered.size(); ++i)
            if (!covered[i]) {
                next = static_cast<int>(i);
                break;
            }
        if (next < 0) {
            if (transversal_scan()) done = true;
            return;
        }
        for (const auto& wl : wlines) {
            bool has = false;
            for (int p : wl.covered)
                if (p == next) has = true;
            if (!has) continue;
            bool clash = false;
            for (int p : wl.covered)
                if (covered[static_cast<std::size_t>(p)]) clash = true;
            for (const WLine* c : chosen)
                if (clash || lines_meet(*wl.line, *c->line)) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            chosen.push_back(&wl);
            for (int p : wl.covered) covered[static_cast<std::size_t>(p)] = true;
            search();
            if (done) return;
            chosen.pop_back();
            for (int p : wl.covered) covered[static_cast<std::size_t>(p)] = false;
        }
    };
    if (counts_ok) search();

    if (done) {
        for (const WLine* wl : chosen) rep.family.push_back(*wl->line);
        for (const ProjLine* tr : found_transversals) rep.transversals.push_back(*tr);
        rep.m_found = static_cast<long>(rep.family.size());
        rep.disjoint = true;
        rep.transversal_count = static_cast<long>(rep.transversals.size());
        rep.positive = rep.m_found == rep.m_expected && rep.transversal_count == 2;
    }
    return rep;
}

} // namespace qscat
