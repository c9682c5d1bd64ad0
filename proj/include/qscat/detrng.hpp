#pragma once

// Deterministic sampling for property suites: mt19937_64 has a fully
// specified output sequence, and draws avoid distribution classes so runs
// are byte-identical across platforms.

#include <cstdint>
#include <random>
#include <vector>

#include "qscat/linpoly.hpp"

namespace qscat {

class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t below(std::uint64_t bound) { return eng_() % bound; }

    FElem elem(const FieldCtx* ctx) {
        return ctx->by_ord(static_cast<std::uint32_t>(below(ctx->size())));
    }

    FElem nonzero_elem(const FieldCtx* ctx) {
        return ctx->by_ord(1 + static_cast<std::uint32_t>(below(ctx->size() - 1)));
    }

    LinPoly poly(const FieldCtx* ctx) {
        std::vector<FElem> cs(static_cast<std::size_t>(ctx->n()));
        for (auto& c : cs) c = elem(ctx);
        return LinPoly(ctx, std::move(cs));
    }

private:
    std::mt19937_64 eng_;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed0001;

} // namespace qscat
