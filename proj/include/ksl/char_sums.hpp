#pragma once

/**
 * @file char_sums.hpp
 * @brief Hyperbola Fourier coefficients (generalized Kloosterman sums) and
 *        the Kloosterman-Salem number of a finite ring.
 *
 * For dual elements (m, n) the hyperbola coefficient is
 *
 *     H^(m, n) = |R|^-2 * sum_{x in R*} chi_m(-x) chi_n(-x^-1),
 *
 * and K(m, n) = |R|^2 H^(m, n) is the generalized Kloosterman sum. The
 * Kloosterman-Salem number is
 *
 *     C_R = max_{(m, n) != (0, 0)} |K(m, n)| / sqrt(|R*|).
 *
 * Sums are evaluated from their exact exponent histogram: every term is an
 * L-th root of unity, so we first count how many terms land on each
 * residue mod L (integers, order-independent), then add the complex roots
 * in increasing residue order. The floating result therefore does not
 * depend on thread partitioning.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ksl/error.hpp"
#include "ksl/number_theory.hpp"
#include "ksl/parallel.hpp"
#include "ksl/ring.hpp"

namespace ksl {

using DualPair = std::pair<Elem, Elem>;

/// {(u, u^-1) : u in R*}, sorted by u.
struct Hyperbola {
    std::vector<std::pair<Elem, Elem>> points;

    std::size_t size() const noexcept { return points.size(); }
};

inline Hyperbola hyperbola(const Ring& ring) {
    Hyperbola h;
    const auto& us = ring.units();
    for (std::size_t i = 0; i < us.size(); ++i) h.points.emplace_back(us.units[i], us.inverse[i]);
    return h;
}

/// H^(m, n) by direct summation in increasing unit order. Reference path,
/// independent of the histogram engine below.
inline Complex fourier_coefficient(const Ring& ring, Elem m, Elem n) {
    Complex s{0.0, 0.0};
    const auto& us = ring.units();
    for (std::size_t i = 0; i < us.size(); ++i)
        s += ring.character(m, ring.neg(us.units[i])) * ring.character(n, ring.neg(us.inverse[i]));
    const double q = ring.size();
    return s / (q * q);
}

/// Exact multiset of exponents r with K = sum_r count(r) * w^r, w = exp(2 pi i / L).
struct ExponentHistogram {
    std::uint32_t modulus = 1;
    std::vector<std::pair<std::uint32_t, std::uint64_t>> bins;  // (residue, count), residue ascending

    /// The sum as an exact integer when it is one and L is prime.
    std::optional<std::int64_t> exact_integer() const {
        if (!is_prime(modulus)) return std::nullopt;
        std::uint64_t c0 = 0;
        std::vector<std::uint64_t> rest(modulus - 1, 0);
        for (auto [r, c] : bins) {
            if (r == 0) c0 = c;
            else rest[r - 1] = c;
        }
        for (auto c : rest)
            if (c != rest.front()) return std::nullopt;
        return static_cast<std::int64_t>(c0) - static_cast<std::int64_t>(rest.front());
    }

    /// True iff every term has the same phase (no cancellation).
    bool single_phase() const noexcept { return bins.size() == 1; }
};

struct KSOptions {
    double tolerance = 1e-9;
    bool record_table = false;
    unsigned jobs = 1;
    std::uint64_t pair_guard = std::uint64_t{1} << 24;
    std::uint64_t table_guard = std::uint64_t{1} << 22;
};

struct KSReport {
    std::string ring;
    std::uint64_t size = 0;
    std::uint64_t units = 0;
    double C = 0.0;
    double max_abs_sum = 0.0;  // max |K(m, n)| over nontrivial (m, n)
    std::vector<DualPair> argmax;
    std::vector<Complex> table;  // K(m, n) at m * |R| + n when recorded
    double tolerance = 0.0;

    double sqrt_units() const { return std::sqrt(static_cast<double>(units)); }
    /// H^(m, n) from the recorded table.
    Complex coefficient(Elem m, Elem n) const {
        const double q = static_cast<double>(size);
        return table.at(static_cast<std::size_t>(m) * size + n) / (q * q);
    }
};

/// Precomputes <m, u> for every m in R and every unit u; evaluates K(m, n).
class KloostermanEngine {
public:
    explicit KloostermanEngine(const Ring& ring, std::uint64_t table_guard = std::uint64_t{1} << 26)
        : ring_(ring), units_(ring.unit_count()), modulus_(ring.character_modulus()) {
        const std::uint64_t cells = static_cast<std::uint64_t>(ring.size()) * units_;
        if (cells > table_guard) throw GuardExceeded("pairing table for " + ring.name() + " exceeds guard");
        const auto& us = ring.units();
        inverse_position_.resize(units_);
        for (std::size_t i = 0; i < units_; ++i) {
            auto it = std::lower_bound(us.units.begin(), us.units.end(), us.inverse[i]);
            inverse_position_[i] = static_cast<std::uint32_t>(it - us.units.begin());
        }
        pairing_.resize(cells);
        for (Elem m = 0; m < ring.size(); ++m)
            for (std::size_t i = 0; i < units_; ++i)
                pairing_[static_cast<std::size_t>(m) * units_ + i] = ring.pairing(m, us.units[i]);
        roots_.resize(modulus_);
        for (std::uint32_t k = 0; k < modulus_; ++k) roots_[k] = ring.root_of_unity(k);
    }

    const Ring& ring() const noexcept { return ring_; }

    /// Histogram of -( <m, u> + <n, u^-1> ) mod L over units u.
    ExponentHistogram histogram(Elem m, Elem n) const {
        std::vector<std::uint64_t> counts(modulus_, 0);
        accumulate(m, n, counts);
        ExponentHistogram h;
        h.modulus = modulus_;
        for (std::uint32_t r = 0; r < modulus_; ++r)
            if (counts[r]) h.bins.emplace_back(r, counts[r]);
        return h;
    }

    /// K(m, n) = |R|^2 H^(m, n).
    Complex sum(Elem m, Elem n) const {
        Scratch s(modulus_);
        return sum(m, n, s);
    }

    struct Scratch {
        explicit Scratch(std::uint32_t modulus) : counts(modulus, 0) {}
        std::vector<std::uint64_t> counts;
        std::vector<std::uint32_t> touched;
    };

    Complex sum(Elem m, Elem n, Scratch& s) const {
        const std::uint32_t* pm = &pairing_[static_cast<std::size_t>(m) * units_];
        const std::uint32_t* pn = &pairing_[static_cast<std::size_t>(n) * units_];
        s.touched.clear();
        for (std::size_t i = 0; i < units_; ++i) {
            std::uint32_t e = pm[i] + pn[inverse_position_[i]];
            if (e >= modulus_) e -= modulus_;
            if (s.counts[e]++ == 0) s.touched.push_back(e);
        }
        std::sort(s.touched.begin(), s.touched.end());
        Complex acc{0.0, 0.0};
        for (auto e : s.touched) {
            // term value is w^{-e}
            acc += static_cast<double>(s.counts[e]) * roots_[(modulus_ - e) % modulus_];
            s.counts[e] = 0;
        }
        return acc;
    }

private:
    void accumulate(Elem m, Elem n, std::vector<std::uint64_t>& counts) const {
        for (std::size_t i = 0; i < units_; ++i) {
            std::uint32_t e = pairing_[static_cast<std::size_t>(m) * units_ + i] +
                              pairing_[static_cast<std::size_t>(n) * units_ + inverse_position_[i]];
            e %= modulus_;
            ++counts[(modulus_ - e) % modulus_];
        }
    }

    const Ring& ring_;
    std::size_t units_;
    std::uint32_t modulus_;
    std::vector<std::uint32_t> inverse_position_;
    std::vector<std::uint32_t> pairing_;
    std::vector<Complex> roots_;
};

/// Exhaustive Kloosterman-Salem number with all maximizers within tolerance.
inline KSReport kloosterman_salem(const Ring& ring, const KSOptions& options = {}) {
    const std::uint64_t q = ring.size();
    if (q * q > options.pair_guard)
        throw GuardExceeded("dual-pair scan of " + ring.name() + " (" + std::to_string(q * q) +
                            " pairs) exceeds guard " + std::to_string(options.pair_guard));
    if (options.record_table && q * q > options.table_guard)
        throw GuardExceeded("coefficient table of " + ring.name() + " exceeds guard");

    KloostermanEngine engine(ring);
    KSReport report;
    report.ring = ring.name();
    report.size = q;
    report.units = ring.unit_count();
    report.tolerance = options.tolerance;
    if (options.record_table) report.table.assign(q * q, Complex{});

    const double slack = options.tolerance * std::sqrt(static_cast<double>(report.units));
    struct Local {
        double best = -1.0;
        std::vector<std::pair<DualPair, double>> candidates;
    };
    std::vector<Local> locals(std::max(1u, options.jobs));

    parallel_chunks(q, options.jobs, [&](unsigned w, std::size_t begin, std::size_t end) {
        Local& local = locals[w];
        KloostermanEngine::Scratch scratch(ring.character_modulus());
        for (std::size_t m = begin; m < end; ++m) {
            for (Elem n = 0; n < q; ++n) {
                const Complex k = engine.sum(static_cast<Elem>(m), n, scratch);
                if (options.record_table) report.table[m * q + n] = k;
                if (m == 0 && n == 0) continue;
                const double a = std::abs(k);
                if (a > local.best) {
                    local.best = a;
                    std::erase_if(local.candidates, [&](const auto& c) { return c.second < local.best - slack; });
                }
                if (a >= local.best - slack) local.candidates.push_back({{static_cast<Elem>(m), n}, a});
            }
        }
    });

    double best = 0.0;
    for (const auto& l : locals) best = std::max(best, l.best);
    for (const auto& l : locals)
        for (const auto& [pair, a] : l.candidates)
            if (a >= best - slack) report.argmax.push_back(pair);
    std::sort(report.argmax.begin(), report.argmax.end());
    report.max_abs_sum = best;
    report.C = best / report.sqrt_units();
    return report;
}

inline KSReport kloosterman_salem(const RingSpec& spec, const KSOptions& options = {},
                                  const RingOptions& ring_options = {}) {
    Ring ring(spec, ring_options);
    return kloosterman_salem(ring, options);
}

/// C of R1 x R2 from its factors: max(C1 sqrt|R2*|, C2 sqrt|R1*|).
inline double product_formula(double c1, std::uint64_t units1, double c2, std::uint64_t units2) {
    return std::max(c1 * std::sqrt(static_cast<double>(units2)), c2 * std::sqrt(static_cast<double>(units1)));
}

inline double product_formula(double c1, const Ring& r1, double c2, const Ring& r2) {
    return product_formula(c1, r1.unit_count(), c2, r2.unit_count());
}

struct PullbackResult {
    std::string ring;
    std::string quotient;
    std::uint64_t radical_size = 1;
    double quotient_C = 0.0;
    double lhs = 0.0;  // C_{R/J} sqrt|J|
    double rhs = 0.0;  // C_R
    bool pass = false;
};

/// Checks C_R >= C_{R/J} sqrt|J|. `c_ring` may pass a precomputed C_R.
inline PullbackResult pullback_bound(const Ring& ring, const KSOptions& options = {},
                                     std::optional<double> c_ring = std::nullopt) {
    PullbackResult r;
    r.ring = ring.name();
    const Ideal J = jacobson_radical(ring);
    r.radical_size = J.size();
    const Ring quotient(semisimple_quotient_spec(ring.spec()));
    r.quotient = quotient.name();
    if (quotient.size() * J.size() != ring.size())
        throw InvariantFailure("|R/J| * |J| != |R| for " + ring.name());
    r.quotient_C = kloosterman_salem(quotient, options).C;
    r.rhs = c_ring ? *c_ring : kloosterman_salem(ring, options).C;
    r.lhs = r.quotient_C * std::sqrt(static_cast<double>(J.size()));
    r.pass = r.rhs >= r.lhs - options.tolerance;
    return r;
}

struct DegenerateCoefficient {
    std::uint64_t q = 0;
    std::int64_t closed_form = 0;   // (q-1) q (q+1) - (q-2) q
    double implied_bound = 0.0;     // (q - 1 + 1/q) / sqrt((1 - 1/q)(1 - 1/q^2))
    std::optional<std::int64_t> brute_force;  // exact value from the GL_2 sum, when enumerated
    Complex brute_force_value{};
    bool agrees = false;
};

/// Kloosterman sum of M_2(F_q) at A = diag(1, 0), B = diag(0, -1).
inline DegenerateCoefficient matrix_degenerate_coefficient(std::uint64_t q, std::uint64_t size_guard = 256) {
    if (!prime_power(q)) throw InvalidParameter("q = " + std::to_string(q) + " is not a prime power");
    DegenerateCoefficient d;
    d.q = q;
    const auto qi = static_cast<std::int64_t>(q);
    d.closed_form = (qi - 1) * qi * (qi + 1) - (qi - 2) * qi;
    const double qd = static_cast<double>(q);
    d.implied_bound = (qd - 1.0 + 1.0 / qd) / std::sqrt(gl_density(2, qd));
    auto size = checked_pow(q, 4, size_guard);
    if (!size) return d;

    const Ring ring(matrix(2, q), RingOptions{size_guard});
    const Leaf& leaf = ring.leaves().front();
    const GaloisField& f = leaf.base_field();
    const Elem a = leaf.encode_matrix({1, 0, 0, 0});
    const Elem b = leaf.encode_matrix({0, 0, 0, f.neg(1)});
    KloostermanEngine engine(ring);
    d.brute_force_value = engine.sum(a, b);
    d.brute_force = engine.histogram(a, b).exact_integer();
    d.agrees = d.brute_force && *d.brute_force == d.closed_form;
    return d;
}

struct FieldTrendRow {
    std::uint64_t q = 0;
    double C = 0.0;
    std::optional<double> lower;  // sqrt of the Kloosterman lower bound, q > 3
    double upper = 0.0;           // Weil: 2 / sqrt(1 - 1/q)
};

/// C^2 >= (2q^3 - 3q^2 - 3q - 1) / ((q - 1)(q^2 - q - 1)) for fields with q > 3.
inline double kloosterman_lower_bound_squared(double q) {
    return (2 * q * q * q - 3 * q * q - 3 * q - 1) / ((q - 1) * (q * q - q - 1));
}

inline double weil_upper_bound(double q) { return 2.0 / std::sqrt(1.0 - 1.0 / q); }

inline std::vector<FieldTrendRow> field_trend_scan(const std::vector<std::uint64_t>& qs, const KSOptions& options = {}) {
    std::vector<FieldTrendRow> rows;
    for (auto q : qs) {
        FieldTrendRow row;
        row.q = q;
        row.C = kloosterman_salem(galois(q), options).C;
        if (q > 3) row.lower = std::sqrt(kloosterman_lower_bound_squared(static_cast<double>(q)));
        row.upper = weil_upper_bound(static_cast<double>(q));
        rows.push_back(row);
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Bound ledger
// ---------------------------------------------------------------------------

struct BoundRecord {
    std::string name;
    std::string source;      // which result the inequality comes from
    std::string inequality;  // "lhs <= rhs" in words
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = false;
};

struct BoundLedger {
    std::string ring;
    std::vector<BoundRecord> records;

    bool all_pass() const {
        return std::all_of(records.begin(), records.end(), [](const BoundRecord& r) { return r.pass; });
    }
    const BoundRecord* find(std::string_view name) const {
        for (const auto& r : records)
            if (r.name == name) return &r;
        return nullptr;
    }
};

struct LedgerOptions {
    KSOptions ks;
    bool include_pullback = true;
    bool include_product = true;
    double product_tolerance = 1e-8;
};

/// Evaluates every applicable inequality on the computed C_R. Each record
/// is stated as lhs <= rhs (within tolerance) unless noted.
inline BoundLedger bound_ledger(const Ring& ring, const KSReport& report, const LedgerOptions& options = {}) {
    BoundLedger ledger;
    ledger.ring = ring.name();
    const double tol = options.ks.tolerance;
    const double C = report.C;
    const double units = static_cast<double>(ring.unit_count());
    const double q = static_cast<double>(ring.size());
    auto le = [&](std::string name, std::string source, std::string text, double lhs, double rhs) {
        ledger.records.push_back({std::move(name), std::move(source), std::move(text), lhs, rhs, lhs <= rhs + tol});
    };

    le("trivial-upper", "sum of |R*| unimodular terms", "C <= sqrt|R*|", C, std::sqrt(units));
    le("plancherel-lower", "Plancherel identity", "sqrt(1 - |R*|/|R|^2) <= C", std::sqrt(1.0 - units / (q * q)), C);
    le("unit-lower", "Boolean lower bound", "1 <= C", 1.0, C);
    if (ring.is_boolean()) {
        ledger.records.push_back(
            {"boolean-equality", "Boolean rings have C = 1", "|C - 1| <= tol", std::abs(C - 1.0), tol,
             std::abs(C - 1.0) <= tol});
    } else {
        le("non-boolean-lower", "non-Boolean rings", "sqrt(2) <= C", std::sqrt(2.0), C);
    }

    if (ring.is_field()) {
        le("weil-upper", "Weil bound for fields", "C <= 2 / sqrt(1 - 1/q)", C, weil_upper_bound(q));
        if (q > 3)
            le("kloosterman-lower", "classical Kloosterman lower bound, q > 3",
               "(2q^3-3q^2-3q-1)/((q-1)(q^2-q-1)) <= C^2", kloosterman_lower_bound_squared(q), C * C);
    }

    if (ring.leaves().size() == 1 && ring.leaves()[0].kind() == LeafKind::Matrix && ring.leaves()[0].dimension() >= 2) {
        const auto& leaf = ring.leaves()[0];
        const double f = leaf.base_field().order();
        const unsigned n = leaf.dimension();
        if (n == 2) {
            le("matrix-degenerate", "degenerate M_2 coefficient",
               "(|F| - 1 + 1/|F|) / sqrt((1 - 1/|F|)(1 - 1/|F|^2)) <= C",
               (f - 1.0 + 1.0 / f) / std::sqrt(gl_density(2, f)), C);
            le("matrix-n2", "explicit bound, n = 2", "|F| - 1 + 1/|F| <= C", f - 1.0 + 1.0 / f, C);
        } else {
            le("matrix-n3", "explicit bound, n >= 3", "|F|^{n(n-2)/2} / 2 <= C",
               0.5 * std::pow(f, n * (n - 2) / 2.0), C);
        }
        le("matrix-dimension", "explicit bound on n", "n <= sqrt(2 log2 C) + 2", n,
           std::sqrt(2.0 * std::log2(C)) + 2.0);
    }

    if (options.include_pullback) {
        const Ideal J = jacobson_radical(ring);
        if (J.size() > 1) {
            auto pb = pullback_bound(ring, options.ks, C);
            le("pullback", "radical pullback", "C_{R/J} sqrt|J| <= C", pb.lhs, pb.rhs);
        }
    }

    if (options.include_product && ring.leaves().size() >= 2) {
        // first leaf versus the product of the rest
        const auto& spec = ring.spec();
        std::vector<RingSpec> flat;
        std::function<void(const RingSpec&)> collect = [&](const RingSpec& s) {
            if (auto p = std::get_if<ProductSpec>(&s.node))
                for (const auto& f : p->factors) collect(f);
            else
                flat.push_back(s);
        };
        collect(spec);
        if (flat.size() == ring.leaves().size()) {
            const Ring r1(flat.front());
            const Ring r2(product(std::vector<RingSpec>(flat.begin() + 1, flat.end())));
            const double c1 = kloosterman_salem(r1, options.ks).C;
            const double c2 = kloosterman_salem(r2, options.ks).C;
            const double predicted = product_formula(c1, r1, c2, r2);
            ledger.records.push_back({"product-formula", "direct product formula",
                                      "|C - max(C1 sqrt|R2*|, C2 sqrt|R1*|)| <= tol", std::abs(C - predicted),
                                      options.product_tolerance,
                                      std::abs(C - predicted) <= options.product_tolerance});
        }
    }
    return ledger;
}

}  // namespace ksl
