#pragma once

/**
 * @file extremal.hpp
 * @brief Exact extremality test via additive generation.
 *
 * R is extremal (C_R = sqrt|R*|) exactly when the shifted hyperbola
 * {(u - 1, u^-1 - 1) : u in R*} fails to generate R^2 additively. The
 * closure is computed by breadth-first search over R^2, so the decision
 * is exact and never depends on floating comparisons.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ksl/char_sums.hpp"
#include "ksl/error.hpp"
#include "ksl/ring.hpp"

namespace ksl {

using PairElem = std::pair<Elem, Elem>;

inline constexpr std::uint64_t kClosureGuard = std::uint64_t{1} << 24;

/// Subgroup of R^2 reached from 0 by adding generators, with BFS parents.
class PairClosure {
public:
    static constexpr std::uint32_t kUnreached = UINT32_MAX;

    PairClosure(const Ring& ring, std::vector<PairElem> generators, std::uint64_t guard = kClosureGuard)
        : q_(ring.size()), generators_(std::move(generators)) {
        const std::uint64_t ambient = static_cast<std::uint64_t>(q_) * q_;
        if (ambient > guard) throw GuardExceeded("closure over R^2 for " + ring.name() + " exceeds guard");
        parent_.assign(ambient, kUnreached);
        via_.assign(ambient, kUnreached);
        std::vector<std::uint32_t> frontier{0}, next;
        parent_[0] = 0;
        count_ = 1;
        while (!frontier.empty()) {
            next.clear();
            for (auto z : frontier) {
                const Elem a = z / q_, b = z % q_;
                for (std::uint32_t g = 0; g < generators_.size(); ++g) {
                    const std::uint32_t w =
                        ring.add(a, generators_[g].first) * q_ + ring.add(b, generators_[g].second);
                    if (parent_[w] != kUnreached) continue;
                    parent_[w] = z;
                    via_[w] = g;
                    ++count_;
                    next.push_back(w);
                }
            }
            frontier.swap(next);
        }
    }

    std::uint64_t size() const noexcept { return count_; }
    std::uint64_t ambient_size() const noexcept { return static_cast<std::uint64_t>(q_) * q_; }
    bool is_everything() const noexcept { return count_ == ambient_size(); }
    const std::vector<PairElem>& generators() const noexcept { return generators_; }

    bool contains(Elem a, Elem b) const { return parent_[static_cast<std::size_t>(a) * q_ + b] != kUnreached; }

    /// Members as (a, b) pairs in index order.
    std::vector<PairElem> members() const {
        std::vector<PairElem> out;
        for (std::uint32_t z = 0; z < parent_.size(); ++z)
            if (parent_[z] != kUnreached) out.emplace_back(z / q_, z % q_);
        return out;
    }

    /// Generator indices along the BFS path from 0 to (a, b); nullopt if unreached.
    /// Path length is minimal for this generator set.
    std::optional<std::vector<std::uint32_t>> path_to(Elem a, Elem b) const {
        std::uint32_t z = a * q_ + b;
        if (parent_[z] == kUnreached) return std::nullopt;
        std::vector<std::uint32_t> path;
        while (z != 0) {
            path.push_back(via_[z]);
            z = parent_[z];
        }
        std::reverse(path.begin(), path.end());
        return path;
    }

private:
    std::uint32_t q_;
    std::vector<PairElem> generators_;
    std::vector<std::uint32_t> parent_, via_;
    std::uint64_t count_ = 0;
};

/// Closure of arbitrary points of R^2.
inline PairClosure additive_closure(const Ring& ring, std::vector<PairElem> points, std::uint64_t guard = kClosureGuard) {
    return PairClosure(ring, std::move(points), guard);
}

/// {(u - 1, u^-1 - 1) : u in R*} in unit order.
inline std::vector<PairElem> shifted_hyperbola(const Ring& ring) {
    std::vector<PairElem> out;
    const auto& us = ring.units();
    for (std::size_t i = 0; i < us.size(); ++i)
        out.emplace_back(ring.sub(us.units[i], ring.one()), ring.sub(us.inverse[i], ring.one()));
    return out;
}

struct BasisExpression {
    PairElem target;
    std::vector<Elem> units;  // u_1..u_n with sum(u_i - 1) = a, sum(u_i^-1 - 1) = b
};

struct GenerationCertificate {
    std::string ring;
    bool extremal = false;
    std::uint64_t closure_size = 0;
    std::uint64_t ambient_size = 0;
    /// Nontrivial (m, n) with chi_m(x) chi_n(x^-1) constant on R*; extremal rings only.
    std::optional<DualPair> witness;
    /// Sums of shifted hyperbola points hitting an additive basis of R^2; non-extremal rings only.
    std::vector<BasisExpression> basis_expressions;
};

/// True iff <m, x> + <n, x^-1> is the same residue for every unit x.
inline bool character_constant_on_hyperbola(const Ring& ring, Elem m, Elem n) {
    const auto& us = ring.units();
    const std::uint32_t L = ring.character_modulus();
    std::optional<std::uint32_t> value;
    for (std::size_t i = 0; i < us.size(); ++i) {
        const std::uint32_t v = (ring.pairing(m, us.units[i]) + ring.pairing(n, us.inverse[i])) % L;
        if (value && *value != v) return false;
        value = v;
    }
    return true;
}

inline GenerationCertificate is_extremal(const Ring& ring, std::uint64_t guard = kClosureGuard) {
    GenerationCertificate cert;
    cert.ring = ring.name();
    const PairClosure closure(ring, shifted_hyperbola(ring), guard);
    cert.closure_size = closure.size();
    cert.ambient_size = closure.ambient_size();
    cert.extremal = !closure.is_everything();

    if (cert.extremal) {
        // A character of R^2 trivial on every generator is trivial on the
        // closure; it descends to a nontrivial character of R^2 / closure.
        const auto& gens = closure.generators();
        const std::uint32_t L = ring.character_modulus();
        for (Elem m = 0; m < ring.size() && !cert.witness; ++m)
            for (Elem n = 0; n < ring.size(); ++n) {
                if (m == 0 && n == 0) continue;
                const bool kills = std::all_of(gens.begin(), gens.end(), [&](const PairElem& g) {
                    return (ring.pairing(m, g.first) + ring.pairing(n, g.second)) % L == 0;
                });
                if (kills) {
                    cert.witness = DualPair{m, n};
                    break;
                }
            }
        if (!cert.witness || !character_constant_on_hyperbola(ring, cert.witness->first, cert.witness->second))
            throw InvariantFailure("extremal ring " + ring.name() + " without a valid witness character");
    } else {
        std::vector<PairElem> basis;
        for (Elem g : ring.additive_generators()) {
            basis.emplace_back(g, 0);
            basis.emplace_back(0, g);
        }
        const auto& us = ring.units();
        for (const auto& t : basis) {
            auto path = closure.path_to(t.first, t.second);
            if (!path) throw InvariantFailure("basis element unreachable in a generating closure");
            BasisExpression e{t, {}};
            for (auto g : *path) e.units.push_back(us.units[g]);
            cert.basis_expressions.push_back(std::move(e));
        }
    }
    return cert;
}

enum class UnitSumForm {
    Shifted,  // sum u_i - n = A, sum u_i^-1 - n = B
    Plain,    // sum u_i = A,     sum u_i^-1 = B
};

/// n * x for an integer n >= 0.
inline Elem ring_multiple(const Ring& ring, Elem x, std::size_t n) {
    Elem r = 0;
    for (std::size_t i = 0; i < n; ++i) r = ring.add(r, x);
    return r;
}

/// True iff `units` (n >= 1 units) solves the requested system for (A, B).
inline bool validate_unit_sum(const Ring& ring, const std::vector<Elem>& units, Elem A, Elem B, UnitSumForm form) {
    if (units.empty()) return false;
    Elem sa = 0, sb = 0;
    for (Elem u : units) {
        auto inv = ring.inverse(u);
        if (!inv) return false;
        sa = ring.add(sa, u);
        sb = ring.add(sb, *inv);
    }
    if (form == UnitSumForm::Shifted) {
        const Elem n1 = ring_multiple(ring, ring.one(), units.size());
        sa = ring.sub(sa, n1);
        sb = ring.sub(sb, n1);
    }
    return sa == A && sb == B;
}

/// Units u_1..u_n solving the system, found along BFS paths (short, not
/// necessarily shortest overall). nullopt when (A, B) is not reachable,
/// which can only happen for extremal rings (or, in Plain form, when the
/// hyperbola graph is disconnected).
inline std::optional<std::vector<Elem>> sum_of_units_solver(const Ring& ring, Elem A, Elem B, UnitSumForm form,
                                                            std::uint64_t guard = kClosureGuard) {
    std::vector<PairElem> gens;
    if (form == UnitSumForm::Shifted) {
        gens = shifted_hyperbola(ring);
    } else {
        for (const auto& p : hyperbola(ring).points) gens.push_back(p);
    }
    const PairClosure closure(ring, std::move(gens), guard);
    auto path = closure.path_to(A, B);
    if (!path) return std::nullopt;
    std::vector<Elem> units;
    for (auto g : *path) units.push_back(ring.units().units[g]);
    if (units.empty()) {
        // (A, B) = (0, 0); the empty sum is not allowed.
        if (form == UnitSumForm::Shifted) units.push_back(ring.one());
        else units.assign(ring.character_modulus(), ring.one());  // L * (1, 1) = (0, 0)
    }
    if (!validate_unit_sum(ring, units, A, B, form))
        throw InvariantFailure("unit-sum certificate failed validation on " + ring.name());
    return units;
}

struct ExtremalRow {
    std::string ring;
    bool extremal = false;
    double C = 0.0;
    double sqrt_units = 0.0;
    bool analytic_agrees = false;  // extremal <=> |C - sqrt|R*|| < tol
    bool is_field = false;
    bool is_boolean = false;
    std::uint64_t size = 0;
    std::uint64_t units = 0;
};

struct LawCheck {
    std::string law;
    std::string ring;
    bool pass = false;
    std::string detail;
};

struct ExtremalScan {
    std::vector<ExtremalRow> rows;
    std::vector<LawCheck> laws;

    bool all_pass() const {
        return std::all_of(rows.begin(), rows.end(), [](const ExtremalRow& r) { return r.analytic_agrees; }) &&
               std::all_of(laws.begin(), laws.end(), [](const LawCheck& l) { return l.pass; });
    }
};

inline std::vector<RingSpec> flatten_factors(const RingSpec& spec) {
    std::vector<RingSpec> out;
    if (auto p = std::get_if<ProductSpec>(&spec.node)) {
        for (const auto& f : p->factors) {
            auto sub = flatten_factors(f);
            out.insert(out.end(), sub.begin(), sub.end());
        }
    } else {
        out.push_back(spec);
    }
    return out;
}

/// Classifies each ring exactly, cross-checks against C_R, and checks the
/// product law (extremal iff some factor is) and the radical law
/// (R/J extremal implies R extremal) wherever they apply.
inline ExtremalScan extremal_scan(const std::vector<RingSpec>& family, const KSOptions& options = {},
                                  const RingOptions& ring_options = {}) {
    ExtremalScan scan;
    for (const auto& spec : family) {
        const Ring ring(spec, ring_options);
        const auto cert = is_extremal(ring);
        const auto ks = kloosterman_salem(ring, options);
        ExtremalRow row;
        row.ring = ring.name();
        row.extremal = cert.extremal;
        row.C = ks.C;
        row.sqrt_units = ks.sqrt_units();
        row.analytic_agrees = cert.extremal == (std::abs(ks.C - ks.sqrt_units()) < options.tolerance);
        row.is_field = ring.is_field();
        row.is_boolean = ring.is_boolean();
        row.size = ring.size();
        row.units = ring.unit_count();
        scan.rows.push_back(row);

        const auto factors = flatten_factors(spec);
        if (factors.size() >= 2) {
            bool any = false;
            std::string detail;
            for (const auto& f : factors) {
                const Ring fr(f, ring_options);
                const bool e = is_extremal(fr).extremal;
                any = any || e;
                detail += fr.name() + (e ? ":extremal " : ":non-extremal ");
            }
            scan.laws.push_back({"product", ring.name(), any == cert.extremal, detail});
        }
        const auto quotient = semisimple_quotient_spec(spec);
        if (!(quotient == spec)) {
            const Ring qr(quotient, ring_options);
            const bool qe = is_extremal(qr).extremal;
            scan.laws.push_back({"radical", ring.name(), !qe || cert.extremal,
                                 qr.name() + (qe ? " extremal" : " non-extremal")});
        }
    }
    return scan;
}

}  // namespace ksl
