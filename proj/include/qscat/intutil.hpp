#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace qscat {

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

inline std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    for (long f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline long euler_phi(long n) {
    long r = n;
    for (long f : prime_factors(n)) r -= r / f;
    return r;
}

// p^e as u64; caller guarantees no overflow at desk scale.
inline std::uint64_t ipow(std::uint64_t p, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= p;
    return r;
}

// Returns e with p^e == q, or -1 if q is not a power of p.
inline int power_exponent(long p, long q) {
    int e = 0;
    long v = 1;
    while (v < q) {
        v *= p;
        ++e;
    }
    return v == q ? e : -1;
}

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

} // namespace qscat
