#pragma once

#include <cstdint>
#include <optional>

#include "errors.hpp"

namespace agc {

/// Deterministic primality test by trial division; inputs are desk-scale.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Floor of sqrt(n), exact in integers.
inline std::uint64_t isqrt(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t r = static_cast<std::uint64_t>(__builtin_sqrtl(static_cast<long double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_perfect_square(std::uint64_t n) {
    std::uint64_t r = isqrt(n);
    return r * r == n;
}

/// base^exp, or nullopt as soon as the value exceeds `cap`.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base) return std::nullopt;
        r *= base;
        if (r > cap) return std::nullopt;
    }
    return r;
}

/// Writes q = p^m with p prime; rejects anything else.
inline void factor_prime_power(std::uint64_t q, std::uint32_t& p, std::uint32_t& m) {
    require(q >= 2, errc::domain, "q must be at least 2");
    std::uint64_t base = q;
    for (std::uint64_t cand = 2; cand * cand <= q; ++cand) {
        if (q % cand == 0) {
            base = cand;
            break;
        }
    }
    std::uint32_t exp = 0;
    std::uint64_t v = q;
    while (v % base == 0) {
        v /= base;
        ++exp;
    }
    require(v == 1, errc::domain, "q = " + std::to_string(q) + " is not a prime power");
    p = static_cast<std::uint32_t>(base);
    m = exp;
}

}  // namespace agc
