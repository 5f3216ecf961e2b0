#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace ksl {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Distinct prime divisors in increasing order.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Product of the distinct primes dividing n.
inline std::uint64_t radical(std::uint64_t n) {
    std::uint64_t r = 1;
    for (auto p : prime_divisors(n)) r *= p;
    return r;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (auto p : prime_divisors(n)) r = r / p * (p - 1);
    return r;
}

/// Returns (p, k) with q = p^k, or nullopt if q is not a prime power.
inline std::optional<std::pair<std::uint64_t, std::uint32_t>> prime_power(std::uint64_t q) {
    auto ps = prime_divisors(q);
    if (ps.size() != 1) return std::nullopt;
    std::uint32_t k = 0;
    for (std::uint64_t t = q; t > 1; t /= ps[0]) ++k;
    return std::pair{ps[0], k};
}

/// Checked integer power; nullopt on overflow past `limit`.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp,
                                                std::uint64_t limit = UINT64_MAX) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > limit / base) return std::nullopt;
        r *= base;
    }
    return r;
}

/// Modular inverse of a mod n, nullopt when gcd(a, n) != 1.
inline std::optional<std::uint64_t> mod_inverse(std::uint64_t a, std::uint64_t n) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(n), new_r = static_cast<std::int64_t>(a % n);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
        std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
    }
    if (r != 1) return std::nullopt;
    if (t < 0) t += static_cast<std::int64_t>(n);
    return static_cast<std::uint64_t>(t);
}

/// phi(n, q) = prod_{j=1..n} (1 - q^{-j}), the density of GL_n(F_q) inside M_n(F_q).
inline double gl_density(unsigned n, double q) {
    double r = 1.0, qj = 1.0;
    for (unsigned j = 1; j <= n; ++j) {
        qj *= q;
        r *= 1.0 - 1.0 / qj;
    }
    return r;
}

/// |GL_n(F_q)| = prod_{j=0..n-1} (q^n - q^j), exact.
inline std::uint64_t gl_order(unsigned n, std::uint64_t q) {
    std::uint64_t qn = *checked_pow(q, n);
    std::uint64_t r = 1, qj = 1;
    for (unsigned j = 0; j < n; ++j) {
        r *= qn - qj;
        qj *= q;
    }
    return r;
}

}  // namespace ksl
