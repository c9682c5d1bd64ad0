#pragma once

// F_q-subspaces of F_{q^n} x F_{q^n}, linear sets over F_{q^t} in
// PG(2t'-1, q^t), weights, the scattered-subspace test, and pseudoregulus
// detection.

#include <optional>
#include <utility>
#include <vector>

#include "qscat/fpmat.hpp"
#include "qscat/linpoly.hpp"

namespace qscat {

using VecPair = std::pair<FElem, FElem>;

// Coordinate frame of F_{q^n} x F_{q^n} as an F_{q^m}-space of dimension
// 2 n/m: a greedy F_{q^m}-basis of F_{q^n} plus its trace-dual, so pairs get
// canonical F_{q^m}-coordinate vectors.
class SubfieldFrame {
public:
    SubfieldFrame(const FieldCtx* ctx, int m);

    const FieldCtx* ctx() const { return ctx_; }
    int m() const { return m_; }
    int dim() const { return static_cast<int>(basis_.size()); } // n/m
    const std::vector<FElem>& basis() const { return basis_; }

    // F_{q^m}-coordinates of x w.r.t. the basis, via the trace-dual.
    std::vector<FElem> coords(FElem x) const;
    FElem from_coords(const std::vector<FElem>& cs) const;
    std::vector<FElem> pair_coords(const VecPair& w) const; // length 2 dim

private:
    const FieldCtx* ctx_;
    int m_;
    std::vector<FElem> basis_;
    std::vector<FElem> dual_;
};

// Projective point of PG(2 n/m - 1, q^m): an F_{q^m}-line of pairs,
// canonically scaled so the first nonzero frame coordinate is one.
struct ProjPoint {
    VecPair rep;                 // scaled representative
    std::vector<FElem> coords;   // normalized frame coordinates, length 2 n/m

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.rep == b.rep; }
};

// Deterministic total order on points by coordinate ord sequence.
struct ProjPointLess {
    bool operator()(const ProjPoint& a, const ProjPoint& b) const;
};

ProjPoint normalize_point(const SubfieldFrame& frame, const VecPair& w);

struct ProjLine {
    ProjPoint p0, p1;              // spanning points
    std::vector<ProjPoint> points; // all q^m + 1 points, sorted

    friend bool operator==(const ProjLine& a, const ProjLine& b) { return a.points == b.points; }
};

ProjLine make_line(const SubfieldFrame& frame, const ProjPoint& a, const ProjPoint& b);

// All points / lines of PG(2 n/m - 1, q^m); line enumeration is implemented
// for n/m = 2 (lines of PG(3, q^m)) and checked against the Gaussian
// binomial count.
std::vector<ProjPoint> all_proj_points(const SubfieldFrame& frame);
std::vector<ProjLine> all_proj_lines(const SubfieldFrame& frame);

class SubspaceFq {
public:
    SubspaceFq(const FieldCtx* ctx, std::vector<VecPair> basis);

    const FieldCtx* ctx() const { return ctx_; }
    const std::vector<VecPair>& basis() const { return basis_; }
    int rank() const { return static_cast<int>(basis_.size()); }

    bool contains(const VecPair& w) const;
    // All q^rank vectors (zero included), F_q-combinations in deterministic
    // scalar order.
    std::vector<VecPair> all_vectors() const;
    std::vector<int> flatten(const VecPair& w) const;

private:
    const FieldCtx* ctx_;
    std::vector<VecPair> basis_;
    fp::Echelon prime_span_;
};

// U_f = {(x^{q^ell}, f(x))}, spanned by an F_q-basis of F_{q^n}.
SubspaceFq graph_subspace(const LinPoly& f, int ell);

// True iff every nonzero w in U spans an F_{q^m}-line meeting U in dimension
// at most one; otherwise the witness point has weight >= 2.
std::pair<bool, std::optional<ProjPoint>> is_scattered_subspace(const SubspaceFq& U, int m);

std::vector<ProjPoint> linear_set_points(const SubspaceFq& U, int t);

// dim_{F_q}(U cap Z) for Z the F_{q^t}-span of the given points.
int weight(const SubspaceFq& U, const std::vector<ProjPoint>& span_points, int t);

struct PseudoregulusReport {
    bool positive = false;
    bool scattered = false;
    long m_expected = 0;
    long m_found = 0; // size of the found disjoint family, 0 when none
    bool disjoint = false;
    long transversal_count = 0;
    long point_count = 0;
    long point_count_expected = 0;
    long weight_t_line_total = 0; // all weight-t lines, the family included
    std::vector<ProjLine> family;
    std::vector<ProjLine> transversals;
};

inline constexpr long kMaxLineEnumQt = 8;

// Full line enumeration of PG(3, q^t) (t' = 2 only, q^t <= budget).  Searches
// the weight-t lines for a pairwise disjoint family of size
// (q^{tt'}-1)/(q^t-1) admitting exactly two lines disjoint from L_f that
// meet every family member; positive reports carry the family and the two
// transversals.
PseudoregulusReport pseudoregulus_check(const LinPoly& f, int t,
                                        long max_qt = kMaxLineEnumQt,
                                        const std::vector<ProjLine>* cached_lines = nullptr);

} // namespace qscat
