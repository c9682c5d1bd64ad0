#include "qscat/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "qscat/fpmat.hpp"
#include "qscat/intutil.hpp"

namespace qscat {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NonPrime: return "NonPrime";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::NoGeneratorFound: return "NoGeneratorFound";
        case Errc::CtxMismatch: return "CtxMismatch";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::NotDivisor: return "NotDivisor";
        case Errc::WrongLength: return "WrongLength";
        case Errc::NotSubfield: return "NotSubfield";
        case Errc::NoRootFound: return "NoRootFound";
        case Errc::ZeroRho: return "ZeroRho";
        case Errc::BaseMismatch: return "BaseMismatch";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::GcdViolation: return "GcdViolation";
        case Errc::ZeroVector: return "ZeroVector";
        case Errc::ExponentRange: return "ExponentRange";
        case Errc::WrongTower: return "WrongTower";
        case Errc::NotPrimitive: return "NotPrimitive";
        case Errc::NotBasis: return "NotBasis";
        case Errc::EvenN: return "EvenN";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::TowerMismatch: return "TowerMismatch";
        case Errc::HypothesisNotMet: return "HypothesisNotMet";
        case Errc::SmallT: return "SmallT";
        case Errc::NotInvertible: return "NotInvertible";
        case Errc::PhiNotRPartial: return "PhiNotRPartial";
        case Errc::ParseError: return "ParseError";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

namespace {

constexpr std::uint64_t kMaxFieldSize = 1u << 21;

// --- dense polynomial arithmetic over Z_p, used only during construction ---

using Poly = std::vector<int>; // coefficient i at index i, not normalized in length

int pdeg(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& mod, long p) {
    int dm = pdeg(mod);
    std::vector<long> acc(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            acc[i + j] = (acc[i + j] + static_cast<long>(a[i]) * b[j]) % p;
    }
    // reduce by the monic modulus
    for (int i = static_cast<int>(acc.size()) - 1; i >= dm; --i) {
        long c = acc[static_cast<std::size_t>(i)] % p;
        if (c == 0) continue;
        acc[static_cast<std::size_t>(i)] = 0;
        for (int j = 0; j < dm; ++j) {
            auto& slot = acc[static_cast<std::size_t>(i - dm + j)];
            slot = (slot - c * mod[static_cast<std::size_t>(j)]) % p;
        }
    }
    Poly r(static_cast<std::size_t>(dm), 0);
    for (int i = 0; i < dm; ++i) {
        long c = acc[static_cast<std::size_t>(i)] % p;
        if (c < 0) c += p;
        r[static_cast<std::size_t>(i)] = static_cast<int>(c);
    }
    return r;
}

Poly ppowmod(Poly base, std::uint64_t e, const Poly& mod, long p) {
    Poly r(static_cast<std::size_t>(pdeg(mod)), 0);
    r[0] = 1;
    while (e) {
        if (e & 1) r = pmulmod(r, base, mod, p);
        base = pmulmod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

Poly pgcd(Poly a, Poly b, long p) {
    auto inv_mod = [p](long x) {
        x %= p;
        if (x < 0) x += p;
        for (long y = 1; y < p; ++y)
            if (x * y % p == 1) return y;
        fail(Errc::Internal, "gcd inverse");
    };
    while (pdeg(b) >= 0) {
        // a mod b
        int db = pdeg(b);
        long lead_inv = inv_mod(b[static_cast<std::size_t>(db)]);
        Poly r = a;
        for (int i = pdeg(r); i >= db; i = pdeg(r)) {
            long c = r[static_cast<std::size_t>(i)] % p * lead_inv % p;
            for (int j = 0; j <= db; ++j) {
                auto& slot = r[static_cast<std::size_t>(i - db + j)];
                slot = static_cast<int>(((slot - c * b[static_cast<std::size_t>(j)]) % p + p) % p);
            }
        }
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool poly_is_irreducible(const Poly& f, long p) {
    int d = pdeg(f);
    if (d < 1) return false;
    Poly x(static_cast<std::size_t>(d), 0);
    if (d == 1) return true;
    x[1] = 1;
    // X^{p^d} == X mod f
    Poly xp = ppowmod(x, ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(d)), f, p);
    if (xp != x) return false;
    for (long r : prime_factors(d)) {
        Poly xr = ppowmod(x, ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(d / r)), f, p);
        // gcd(X^{p^{d/r}} - X, f) must be constant
        Poly diff = xr;
        diff.resize(std::max(diff.size(), x.size()), 0);
        diff[1] = static_cast<int>(((diff[1] - 1) % p + p) % p);
        if (pdeg(pgcd(f, diff, p)) > 0) return false;
    }
    return true;
}

std::uint32_t encode(const Poly& digits, long p, int d) {
    std::uint32_t v = 0;
    for (int i = d - 1; i >= 0; --i)
        v = static_cast<std::uint32_t>(v * static_cast<std::uint32_t>(p) +
                                       static_cast<std::uint32_t>(digits[static_cast<std::size_t>(i)]));
    return v;
}

Poly decode(std::uint32_t v, long p, int d) {
    Poly digits(static_cast<std::size_t>(d), 0);
    for (int i = 0; i < d; ++i) {
        digits[static_cast<std::size_t>(i)] = static_cast<int>(v % static_cast<std::uint32_t>(p));
        v /= static_cast<std::uint32_t>(p);
    }
    return digits;
}

} // namespace

int FieldCtx::t() const {
    if (!tower_) fail(Errc::TowerMismatch, "context has no tower");
    return tower_->t;
}

int FieldCtx::tprime() const {
    if (!tower_) fail(Errc::TowerMismatch, "context has no tower");
    return tower_->tprime;
}

void FieldCtx::check_elem(FElem x) const {
    if (x.ctx != this) fail(Errc::CtxMismatch, "element bound to a different field context");
}

FElem FieldCtx::element(std::uint32_t raw) const {
    if (raw >= size_) fail(Errc::Internal, "raw element encoding out of range");
    return {this, raw};
}

FElem FieldCtx::gen_pow(long long k) const {
    long long m = static_cast<long long>(size_) - 1;
    long long r = k % m;
    if (r < 0) r += m;
    return {this, exp_[static_cast<std::size_t>(r)]};
}

FElem FieldCtx::from_coords(const std::vector<int>& coords) const {
    if (static_cast<int>(coords.size()) != d_)
        fail(Errc::WrongLength, "coordinate vector length must equal the extension degree");
    Poly digits(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        long c = coords[i] % p_;
        if (c < 0) c += p_;
        digits[i] = static_cast<int>(c);
    }
    return {this, encode(digits, p_, d_)};
}

std::vector<int> FieldCtx::coords(FElem x) const {
    check_elem(x);
    return decode(x.v, p_, d_);
}

std::uint32_t FieldCtx::ord(FElem x) const {
    check_elem(x);
    if (x.v == 0) return 0;
    return 1 + log_[x.v];
}

FElem FieldCtx::by_ord(std::uint32_t o) const {
    if (o >= size_) fail(Errc::Internal, "ord out of range");
    if (o == 0) return zero();
    return {this, exp_[o - 1]};
}

long FieldCtx::dlog(FElem x) const {
    check_elem(x);
    if (x.v == 0) fail(Errc::DivisionByZero, "discrete log of zero");
    return static_cast<long>(log_[x.v]);
}

FElem FieldCtx::add(FElem a, FElem b) const {
    check_elem(a);
    check_same_ctx(a, b);
    if (p_ == 2) return {this, a.v ^ b.v};
    std::uint32_t r = 0, mult = 1, av = a.v, bv = b.v;
    auto up = static_cast<std::uint32_t>(p_);
    for (int i = 0; i < d_; ++i) {
        std::uint32_t s = av % up + bv % up;
        if (s >= up) s -= up;
        r += s * mult;
        av /= up;
        bv /= up;
        mult *= up;
    }
    return {this, r};
}

FElem FieldCtx::neg(FElem a) const {
    check_elem(a);
    if (p_ == 2) return a;
    std::uint32_t r = 0, mult = 1, av = a.v;
    auto up = static_cast<std::uint32_t>(p_);
    for (int i = 0; i < d_; ++i) {
        std::uint32_t c = av % up;
        r += (c ? up - c : 0) * mult;
        av /= up;
        mult *= up;
    }
    return {this, r};
}

FElem FieldCtx::sub(FElem a, FElem b) const { return add(a, neg(b)); }

FElem FieldCtx::mul(FElem a, FElem b) const {
    check_elem(a);
    check_same_ctx(a, b);
    if (a.v == 0 || b.v == 0) return zero();
    std::uint64_t k = static_cast<std::uint64_t>(log_[a.v]) + log_[b.v];
    std::uint64_t m = size_ - 1;
    if (k >= m) k -= m;
    return {this, exp_[k]};
}

FElem FieldCtx::inv(FElem a) const {
    check_elem(a);
    if (a.v == 0) fail(Errc::DivisionByZero, "inverse of zero");
    std::uint64_t m = size_ - 1;
    std::uint64_t k = (m - log_[a.v]) % m;
    return {this, exp_[k]};
}

FElem FieldCtx::div(FElem a, FElem b) const { return mul(a, inv(b)); }

FElem FieldCtx::pow(FElem x, long long e) const {
    check_elem(x);
    if (x.v == 0) {
        if (e < 0) fail(Errc::DivisionByZero, "negative power of zero");
        return e == 0 ? one_ : zero();
    }
    long long m = static_cast<long long>(size_) - 1;
    long long k = (static_cast<long long>(log_[x.v]) % m) * (e % m) % m;
    if (k < 0) k += m;
    return {this, exp_[static_cast<std::size_t>(k)]};
}

FElem FieldCtx::frob_p(FElem x, long j) const {
    check_elem(x);
    if (x.v == 0) return x;
    long jr = j % d_;
    if (jr < 0) jr += d_;
    std::uint64_t pe = ipow(static_cast<std::uint64_t>(p_), static_cast<unsigned>(jr));
    std::uint64_t m = size_ - 1;
    std::uint64_t k = (log_[x.v] % m) * (pe % m) % m;
    return {this, exp_[k]};
}

bool FieldCtx::in_subfield_q(FElem x, int m) const {
    check_elem(x);
    if (m <= 0 || n_ % m != 0) fail(Errc::NotDivisor, "subfield degree must divide the tower degree");
    if (x.v == 0) return true;
    std::uint64_t sub = ipow(static_cast<std::uint64_t>(q_), static_cast<unsigned>(m)) - 1;
    std::uint64_t step = (size_ - 1) / sub;
    return log_[x.v] % step == 0;
}

std::vector<FElem> FieldCtx::subfield_elements(int m) const {
    if (m <= 0 || n_ % m != 0) fail(Errc::NotDivisor, "subfield degree must divide the tower degree");
    std::uint64_t sub = ipow(static_cast<std::uint64_t>(q_), static_cast<unsigned>(m)) - 1;
    std::uint64_t step = (size_ - 1) / sub;
    std::vector<FElem> out;
    out.reserve(sub + 1);
    out.push_back(zero());
    for (std::uint64_t j = 0; j < sub; ++j) out.push_back(FElem{this, exp_[j * step]});
    return out;
}

void check_same_ctx(FElem a, FElem b) {
    if (a.ctx == nullptr || b.ctx == nullptr) fail(Errc::Internal, "unbound element");
    if (a.ctx != b.ctx) fail(Errc::CtxMismatch, "operands from different field contexts");
}

FieldPtr make_field(long p, int d, std::optional<std::vector<int>> modulus,
                    std::optional<Tower> tower) {
    if (!is_prime(p)) fail(Errc::NonPrime, "characteristic must be prime, got " + std::to_string(p));
    if (d < 1) fail(Errc::WrongLength, "extension degree must be positive");
    std::uint64_t size = 1;
    for (int i = 0; i < d; ++i) {
        size *= static_cast<std::uint64_t>(p);
        if (size > kMaxFieldSize)
            fail(Errc::BudgetExceeded, "field size p^d exceeds the desk-scale cap");
    }

    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = p;
    ctx->d_ = d;
    ctx->size_ = static_cast<std::uint32_t>(size);

    if (tower) {
        if (tower->e < 1 || tower->t < 1 || tower->tprime < 1)
            fail(Errc::TowerMismatch, "tower parameters must be positive");
        if (tower->e * tower->n() != d)
            fail(Errc::TowerMismatch, "tower requires e*t*tprime == d");
        ctx->tower_ = tower;
        ctx->q_ = static_cast<long>(ipow(static_cast<std::uint64_t>(p), static_cast<unsigned>(tower->e)));
        ctx->n_ = tower->n();
    } else {
        ctx->q_ = p;
        ctx->n_ = d;
    }

    // modulus: validate the supplied one, otherwise take the first monic
    // irreducible in the deterministic enumeration (coefficient vectors of
    // X^d + sum c_i X^i ordered by ascending value sum c_i p^i).
    Poly mod;
    if (modulus) {
        if (static_cast<int>(modulus->size()) != d + 1)
            fail(Errc::WrongLength, "modulus must have degree-d coefficient vector of length d+1");
        mod.resize(modulus->size());
        for (std::size_t i = 0; i < modulus->size(); ++i) {
            long c = (*modulus)[i] % p;
            if (c < 0) c += p;
            mod[i] = static_cast<int>(c);
        }
        if (mod[static_cast<std::size_t>(d)] != 1)
            fail(Errc::ReducibleModulus, "modulus must be monic");
        if (!poly_is_irreducible(mod, p))
            fail(Errc::ReducibleModulus, "supplied modulus is reducible");
    } else {
        bool found = false;
        for (std::uint64_t j = 0; j < size && !found; ++j) {
            Poly cand = decode(static_cast<std::uint32_t>(j), p, d);
            cand.push_back(1);
            if (poly_is_irreducible(cand, p)) {
                mod = cand;
                found = true;
            }
        }
        if (!found) fail(Errc::Internal, "no irreducible modulus found");
    }
    ctx->modulus_ = mod;

    // generator search: element encodings tried in ascending order, starting
    // at X for d > 1 (constants cannot generate) and at 1 for prime fields.
    std::uint64_t group = size - 1;
    auto factors = prime_factors(static_cast<long>(group));
    auto elem_order_ok = [&](std::uint32_t cand) {
        Poly cp = decode(cand, p, d);
        for (long r : factors) {
            Poly powed = ppowmod(cp, group / static_cast<std::uint64_t>(r), mod, p);
            if (pdeg(powed) == 0 && powed[0] == 1) return false;
            if (pdeg(powed) < 0) return false; // not a unit: impossible for nonzero cand
        }
        return true;
    };
    std::uint32_t gen_raw = 0;
    std::uint32_t start = d == 1 ? 1u : static_cast<std::uint32_t>(p);
    for (std::uint32_t cand = start; cand < size; ++cand) {
        if (elem_order_ok(cand)) {
            gen_raw = cand;
            break;
        }
    }
    if (gen_raw == 0) fail(Errc::NoGeneratorFound, "no primitive element located");

    // exp/log tables by repeated multiplication with the generator
    ctx->exp_.assign(group, 0);
    ctx->log_.assign(size, 0);
    Poly genp = decode(gen_raw, p, d);
    Poly cur(static_cast<std::size_t>(d), 0);
    cur[0] = 1;
    for (std::uint64_t k = 0; k < group; ++k) {
        std::uint32_t raw = encode(cur, p, d);
        ctx->exp_[k] = raw;
        ctx->log_[raw] = static_cast<std::uint32_t>(k);
        cur = pmulmod(cur, genp, mod, p);
    }
    if (encode(cur, p, d) != ctx->exp_[0])
        fail(Errc::NoGeneratorFound, "generator order check failed");

    ctx->one_ = FElem{ctx.get(), ctx->exp_[0]};
    ctx->gen_ = FElem{ctx.get(), gen_raw};
    return ctx;
}

FieldPtr make_tower_field(long p, int e, int t, int tprime, std::optional<std::vector<int>> modulus) {
    return make_field(p, e * t * tprime, std::move(modulus), Tower{e, t, tprime});
}

FieldPtr cached_field(long p, int d, std::optional<Tower> tower) {
    using Key = std::tuple<long, int, int, int, int>;
    static std::map<Key, FieldPtr> cache;
    static std::mutex mu;
    Key key{p, d, tower ? tower->e : 0, tower ? tower->t : 0, tower ? tower->tprime : 0};
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto ctx = make_field(p, d, std::nullopt, tower);
    cache.emplace(key, ctx);
    return ctx;
}

FElem frobenius(FElem x, long i, long q) {
    const FieldCtx* c = x.ctx;
    if (c == nullptr) fail(Errc::Internal, "unbound element");
    int e = power_exponent(c->p(), q);
    if (e < 0 || c->d() % e != 0)
        fail(Errc::NotSubfield, "q must be a subfield order p^e with e dividing d");
    if (i < 0) fail(Errc::ExponentRange, "frobenius exponent must be nonnegative");
    return c->frob_p(x, (static_cast<long>(e) * (i % (c->d() / e))) % c->d());
}

FElem rel_norm(FElem x, int n, int m) {
    const FieldCtx* c = x.ctx;
    if (c == nullptr) fail(Errc::Internal, "unbound element");
    if (n <= 0 || c->n() % n != 0) fail(Errc::NotDivisor, "n must be a tower level");
    if (m <= 0 || n % m != 0) fail(Errc::NotDivisor, "m must divide n");
    if (!c->in_subfield_q(x, n)) fail(Errc::NotSubfield, "element does not lie in F_{q^n}");
    std::uint64_t qn = ipow(static_cast<std::uint64_t>(c->q()), static_cast<unsigned>(n)) - 1;
    std::uint64_t qm = ipow(static_cast<std::uint64_t>(c->q()), static_cast<unsigned>(m)) - 1;
    FElem r = c->pow(x, static_cast<long long>(qn / qm));
    if (!c->in_subfield_q(r, m)) fail(Errc::Internal, "norm image escaped the target subfield");
    return r;
}

FElem rel_trace(FElem x, int n, int m) {
    const FieldCtx* c = x.ctx;
    if (c == nullptr) fail(Errc::Internal, "unbound element");
    if (n <= 0 || c->n() % n != 0) fail(Errc::NotDivisor, "n must be a tower level");
    if (m <= 0 || n % m != 0) fail(Errc::NotDivisor, "m must divide n");
    if (!c->in_subfield_q(x, n)) fail(Errc::NotSubfield, "element does not lie in F_{q^n}");
    FElem acc = c->zero();
    for (int i = 0; i < n / m; ++i) acc = acc + frobenius(x, static_cast<long>(m) * i, c->q());
    if (!c->in_subfield_q(acc, m)) fail(Errc::Internal, "trace image escaped the target subfield");
    return acc;
}

bool in_subfield(FElem x, int m) {
    if (x.ctx == nullptr) fail(Errc::Internal, "unbound element");
    return x.ctx->in_subfield_q(x, m);
}

bool is_basis_over(const std::vector<FElem>& elems, int m) {
    if (elems.empty()) fail(Errc::WrongLength, "empty element list");
    const FieldCtx* c = elems.front().ctx;
    for (FElem e : elems) check_same_ctx(elems.front(), e);
    int k = c->n() / m;
    if (m <= 0 || c->n() % m != 0) fail(Errc::NotDivisor, "m must divide n");
    if (static_cast<int>(elems.size()) != k)
        fail(Errc::WrongLength, "need exactly n/m elements");
    // Moore-style matrix M[i][j] = elems_i^{q^{mj}}; nonzero determinant iff
    // the elements are F_{q^m}-independent.
    std::vector<std::vector<FElem>> mat(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        mat[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j)
            mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                frobenius(elems[static_cast<std::size_t>(i)], static_cast<long>(m) * j, c->q());
    }
    // in-place elimination
    FElem det = c->one();
    for (int col = 0; col < k; ++col) {
        int piv = -1;
        for (int r = col; r < k; ++r)
            if (!mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return false;
        if (piv != col) std::swap(mat[static_cast<std::size_t>(piv)], mat[static_cast<std::size_t>(col)]);
        FElem pv = mat[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        det = det * pv;
        for (int r = col + 1; r < k; ++r) {
            FElem f = mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / pv;
            if (f.is_zero()) continue;
            for (int j = col; j < k; ++j)
                mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
                    mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -
                    f * mat[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
        }
    }
    return !det.is_zero();
}

FElem primitive_element(const FieldCtx& ctx) { return ctx.generator(); }

Embedding::Embedding(const FieldCtx* small, const FieldCtx* big) : small_(small), big_(big) {
    if (small_->p() != big_->p() || big_->d() % small_->d() != 0)
        fail(Errc::NotSubfield, "small field degree must divide big field degree over the same prime");
    const auto& mod = small_->modulus();
    const FieldCtx& B = *big_;
    bool found = false;
    for (std::uint32_t o = 0; o < B.size() && !found; ++o) {
        FElem cand = B.by_ord(o);
        FElem acc = B.zero();
        FElem powv = B.one();
        for (std::size_t i = 0; i < mod.size(); ++i) {
            if (mod[i] != 0) {
                FElem term = powv;
                FElem scaled = B.zero();
                for (int rep = 0; rep < mod[i]; ++rep) scaled = scaled + term;
                acc = acc + scaled;
            }
            powv = powv * cand;
        }
        if (acc.is_zero()) {
            root_ = cand;
            found = true;
        }
    }
    if (!found) fail(Errc::NoRootFound, "small modulus has no root in the big field");
    root_pows_.resize(static_cast<std::size_t>(small_->d()));
    FElem powv = big_->one();
    for (int i = 0; i < small_->d(); ++i) {
        root_pows_[static_cast<std::size_t>(i)] = powv;
        powv = powv * root_;
    }
    // homomorphism sanity on the generator
    FElem g = small_->generator();
    FElem img_g = (*this)(g);
    FElem img_g2 = (*this)(small_->mul(g, g));
    if (!(img_g * img_g == img_g2)) fail(Errc::NoRootFound, "embedding is not multiplicative");
    FElem gp1 = small_->add(g, small_->one());
    if (!((*this)(gp1) == img_g + big_->one())) fail(Errc::NoRootFound, "embedding is not additive");
}

FElem Embedding::operator()(FElem x) const {
    if (x.ctx != small_) fail(Errc::CtxMismatch, "element not from the embedding's source field");
    auto digits = small_->coords(x);
    FElem acc = big_->zero();
    for (std::size_t i = 0; i < digits.size(); ++i) {
        FElem term = big_->zero();
        for (int rep = 0; rep < digits[i]; ++rep) term = term + root_pows_[i];
        acc = acc + term;
    }
    return acc;
}

Embedding build_embedding(const FieldCtx* small, const FieldCtx* big) { return Embedding(small, big); }

std::vector<FElem> subfield_prime_basis(const FieldCtx& ctx, int m) {
    auto elems = ctx.subfield_elements(m);
    fp::Echelon ech(ctx.p(), static_cast<std::size_t>(ctx.d()));
    std::vector<FElem> basis;
    int want = m * ctx.e();
    for (FElem x : elems) {
        if (x.is_zero()) continue;
        if (ech.add_row(ctx.coords(x))) {
            basis.push_back(x);
            if (static_cast<int>(basis.size()) == want) break;
        }
    }
    if (static_cast<int>(basis.size()) != want) fail(Errc::Internal, "subfield basis extraction failed");
    return basis;
}

std::vector<FElem> greedy_basis_over(const FieldCtx& ctx, int m) {
    if (m <= 0 || ctx.n() % m != 0) fail(Errc::NotDivisor, "m must divide n");
    int k = ctx.n() / m;
    auto mu = subfield_prime_basis(ctx, m);
    fp::Echelon ech(ctx.p(), static_cast<std::size_t>(ctx.d()));
    std::vector<FElem> basis;
    for (std::uint32_t o = 1; o < ctx.size() && static_cast<int>(basis.size()) < k; ++o) {
        FElem cand = ctx.by_ord(o);
        // candidate joins iff all its F_{q^m}-multiples extend the span
        fp::Echelon trial = ech;
        bool independent = true;
        for (FElem s : mu)
            if (!trial.add_row(ctx.coords(s * cand))) {
                independent = false;
                break;
            }
        if (independent) {
            ech = trial;
            basis.push_back(cand);
        }
    }
    if (static_cast<int>(basis.size()) != k) fail(Errc::Internal, "basis extraction failed");
    return basis;
}

} // namespace qscat
