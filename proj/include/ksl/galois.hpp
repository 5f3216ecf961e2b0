#pragma once

/**
 * @file galois.hpp
 * @brief Finite fields GF(p^k) in a polynomial basis.
 *
 * An element a_0 + a_1 u + ... + a_{k-1} u^{k-1} (u a root of the defining
 * polynomial) is stored as the integer index a_0 + a_1 p + ... + a_{k-1} p^{k-1}.
 * Index 0 is zero and index 1 is one.
 *
 * Multiplication goes through discrete log / antilog tables built from a
 * primitive element found by search; addition is digit-wise mod p. The
 * absolute trace Tr(a) = a + a^p + ... + a^{p^{k-1}} is tabulated.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "ksl/error.hpp"
#include "ksl/number_theory.hpp"

namespace ksl {

/// Dense polynomial over F_p, coefficients constant term first.
using Poly = std::vector<std::uint32_t>;

namespace poly {

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Remainder of a modulo the monic polynomial m over F_p.
inline Poly mod(Poly a, const Poly& m, std::uint32_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        std::uint32_t lead = a.back();
        std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = static_cast<std::uint32_t>(
                (a[shift + i] + static_cast<std::uint64_t>(p - lead) * m[i]) % p);
        }
        trim(a);
    }
    return a;
}

inline Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    trim(r);
    return r;
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-p digits of `code`.
inline Poly monic_from_code(std::uint64_t code, std::uint32_t deg, std::uint32_t p) {
    Poly f(deg + 1, 0);
    for (std::uint32_t i = 0; i < deg; ++i) {
        f[i] = static_cast<std::uint32_t>(code % p);
        code /= p;
    }
    f[deg] = 1;
    return f;
}

/// Irreducibility by exhaustive search for a monic factor of degree <= deg/2.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
    if (deg == 0 || f.back() != 1) return false;
    for (std::uint32_t d = 1; d <= deg / 2; ++d) {
        const std::uint64_t count = *checked_pow(p, d);
        for (std::uint64_t code = 0; code < count; ++code) {
            if (mod(f, monic_from_code(code, d, p), p).empty()) return false;
        }
    }
    return true;
}

/// Least monic irreducible of degree k, ordering by the lower coefficients
/// read from the highest degree down (i.e. by their base-p value).
inline Poly least_irreducible(std::uint32_t p, std::uint32_t k) {
    const std::uint64_t count = *checked_pow(p, k);
    for (std::uint64_t code = 0; code < count; ++code) {
        Poly f = monic_from_code(code, k, p);
        if (is_irreducible(f, p)) return f;
    }
    throw InvariantFailure("no irreducible polynomial of degree " + std::to_string(k));
}

inline std::string to_string(const Poly& f) {
    std::string s;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(f[i]);
    }
    return s;
}

}  // namespace poly

class GaloisField {
public:
    using Elem = std::uint32_t;

    /// `modulus` must be monic irreducible of degree k over F_p; checked.
    GaloisField(std::uint32_t p, std::uint32_t k, Poly modulus)
        : p_(p), k_(k), modulus_(std::move(modulus)) {
        if (!is_prime(p)) throw InvalidParameter("GF: p = " + std::to_string(p) + " is not prime");
        if (k < 1) throw InvalidParameter("GF: degree must be >= 1");
        if (modulus_.size() != k + 1 || modulus_.back() != 1)
            throw InvalidParameter("GF: polynomial must be monic of degree " + std::to_string(k));
        for (auto c : modulus_)
            if (c >= p) throw InvalidParameter("GF: coefficient out of range for p = " + std::to_string(p));
        if (!poly::is_irreducible(modulus_, p))
            throw InvalidParameter("GF: polynomial {" + poly::to_string(modulus_) + "} is reducible over F_" +
                                   std::to_string(p));
        auto q = checked_pow(p, k, UINT32_MAX / 2);
        if (!q) throw GuardExceeded("GF: field too large");
        q_ = static_cast<std::uint32_t>(*q);
        build_tables();
    }

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return k_; }
    std::uint32_t order() const noexcept { return q_; }
    const Poly& modulus() const noexcept { return modulus_; }

    Elem add(Elem a, Elem b) const noexcept {
        if (k_ == 1) return (a + b) % p_;
        if (p_ == 2) return a ^ b;
        Elem r = 0, place = 1;
        for (std::uint32_t i = 0; i < k_; ++i) {
            r += ((a % p_ + b % p_) % p_) * place;
            a /= p_;
            b /= p_;
            place *= p_;
        }
        return r;
    }

    Elem neg(Elem a) const noexcept {
        if (k_ == 1) return (p_ - a) % p_;
        if (p_ == 2) return a;
        Elem r = 0, place = 1;
        for (std::uint32_t i = 0; i < k_; ++i) {
            r += ((p_ - a % p_) % p_) * place;
            a /= p_;
            place *= p_;
        }
        return r;
    }

    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const noexcept {
        if (a == 0 || b == 0) return 0;
        std::uint32_t e = log_[a] + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }

    /// Inverse of a nonzero element. Precondition: a != 0.
    Elem inv(Elem a) const noexcept { return exp_[(q_ - 1 - log_[a]) % (q_ - 1)]; }

    /// Absolute trace to F_p, returned as an integer in [0, p).
    std::uint32_t trace(Elem a) const noexcept { return trace_[a]; }

    Elem primitive_element() const noexcept { return exp_[q_ > 2 ? 1 : 0]; }

    /// Coefficients a_0..a_{k-1}.
    Poly coefficients(Elem a) const {
        Poly c(k_);
        for (std::uint32_t i = 0; i < k_; ++i) {
            c[i] = a % p_;
            a /= p_;
        }
        return c;
    }

    Elem from_coefficients(const Poly& c) const {
        Elem r = 0, place = 1;
        for (std::uint32_t i = 0; i < k_ && i < c.size(); ++i) {
            r += (c[i] % p_) * place;
            place *= p_;
        }
        return r;
    }

    bool operator==(const GaloisField& o) const noexcept {
        return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
    }

private:
    Elem slow_mul(Elem a, Elem b) const {
        Poly pa = coefficients(a), pb = coefficients(b);
        poly::trim(pa);
        poly::trim(pb);
        return from_coefficients(poly::mod(poly::mul(pa, pb, p_), modulus_, p_));
    }

    void build_tables() {
        exp_.assign(q_ - 1, 0);
        log_.assign(q_, 0);
        const std::uint32_t group = q_ - 1;
        bool found = false;
        for (Elem g = 1; g < q_ && !found; ++g) {
            Elem x = 1;
            std::uint32_t i = 0;
            for (; i < group; ++i) {
                exp_[i] = x;
                x = slow_mul(x, g);
                if (x == 1) {
                    ++i;
                    break;
                }
            }
            found = (i == group && x == 1);
        }
        if (!found) throw InvariantFailure("GF: no primitive element found");
        for (std::uint32_t i = 0; i < group; ++i) log_[exp_[i]] = i;

        trace_.assign(q_, 0);
        for (Elem a = 0; a < q_; ++a) {
            Elem t = 0, frob = a;
            for (std::uint32_t i = 0; i < k_; ++i) {
                t = add(t, frob);
                Elem f = 1;
                for (std::uint32_t j = 0; j < p_; ++j) f = mul(f, frob);
                frob = f;
            }
            if (t >= p_) throw InvariantFailure("GF: trace left the prime field");
            trace_[a] = t;
        }
    }

    std::uint32_t p_, k_, q_ = 0;
    Poly modulus_;
    std::vector<Elem> exp_, log_;
    std::vector<std::uint32_t> trace_;
};

}  // namespace ksl
