#pragma once

/**
 * @file sgraph.hpp
 * @brief S-graphs on R^d: vertices R^d, v ~ w when v - w lies in a
 *        symmetric set S. Spectra come from characters of R^d; graph
 *        invariants are cross-checked by traversal on small instances.
 *
 * Vertex indexing is mixed radix with the first coordinate most
 * significant: (x_1, ..., x_d) -> sum x_i |R|^(d - i). Dual elements use
 * the same indexing.
 */

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ksl/char_sums.hpp"
#include "ksl/extremal.hpp"
#include "ksl/error.hpp"
#include "ksl/parallel.hpp"
#include "ksl/ring.hpp"

namespace ksl {

using Vertex = std::uint32_t;

inline constexpr std::uint64_t kVertexGuard = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kEdgeGuard = std::uint64_t{1} << 24;

class SGraph {
public:
    /// `ring` must outlive the graph. S is given as encoded vertices and is
    /// stored sorted without duplicates.
    SGraph(const Ring& ring, unsigned d, std::vector<Vertex> S, std::uint64_t vertex_guard = kVertexGuard)
        : ring_(ring), d_(d), q_(ring.size()) {
        if (d < 1) throw InvalidParameter("S-graph dimension must be >= 1");
        auto n = checked_pow(q_, d, vertex_guard);
        if (!n) throw GuardExceeded("|R|^d exceeds the vertex guard for " + ring.name());
        n_ = static_cast<std::uint32_t>(*n);
        std::sort(S.begin(), S.end());
        S.erase(std::unique(S.begin(), S.end()), S.end());
        for (auto s : S)
            if (s >= n_) throw InvalidParameter("connection set element out of range");
        S_ = std::move(S);
        for (auto s : S_)
            if (!std::binary_search(S_.begin(), S_.end(), negate(s)))
                throw InvalidParameter("connection set is not symmetric: -" + format(s) + " missing");
        loops_ = !S_.empty() && S_.front() == 0;
        if (static_cast<std::uint64_t>(n_) * S_.size() <= kEdgeGuard) {
            table_.resize(static_cast<std::size_t>(n_) * S_.size());
            for (Vertex v = 0; v < n_; ++v)
                for (std::size_t j = 0; j < S_.size(); ++j) table_[v * S_.size() + j] = add(v, S_[j]);
        }
    }

    const Ring& ring() const noexcept { return ring_; }
    unsigned dimension() const noexcept { return d_; }
    std::uint32_t vertex_count() const noexcept { return n_; }
    std::uint32_t degree() const noexcept { return static_cast<std::uint32_t>(S_.size()); }
    const std::vector<Vertex>& connection_set() const noexcept { return S_; }
    bool has_loops() const noexcept { return loops_; }
    bool edges_materialized() const noexcept { return !table_.empty() || S_.empty(); }

    std::vector<Elem> decode(Vertex v) const {
        std::vector<Elem> x(d_);
        for (unsigned i = d_; i-- > 0;) {
            x[i] = v % q_;
            v /= q_;
        }
        return x;
    }

    Vertex encode(const std::vector<Elem>& x) const {
        Vertex v = 0;
        for (auto c : x) v = v * q_ + c;
        return v;
    }

    Vertex add(Vertex a, Vertex b) const {
        Vertex r = 0, scale = 1;
        for (unsigned i = 0; i < d_; ++i) {
            r += ring_.add(a % q_, b % q_) * scale;
            a /= q_;
            b /= q_;
            scale *= q_;
        }
        return r;
    }

    Vertex negate(Vertex a) const {
        Vertex r = 0, scale = 1;
        for (unsigned i = 0; i < d_; ++i) {
            r += ring_.neg(a % q_) * scale;
            a /= q_;
            scale *= q_;
        }
        return r;
    }

    /// Pairing of dual element m with vertex v in Z/L.
    std::uint32_t pairing(Vertex m, Vertex v) const {
        const std::uint32_t L = ring_.character_modulus();
        std::uint32_t r = 0;
        for (unsigned i = 0; i < d_; ++i) {
            r = (r + ring_.pairing(m % q_, v % q_)) % L;
            m /= q_;
            v /= q_;
        }
        return r;
    }

    Complex character(Vertex m, Vertex v) const { return ring_.root_of_unity(pairing(m, v)); }

    /// Neighbors v + s in connection-set order.
    std::vector<Vertex> neighbors(Vertex v) const {
        std::vector<Vertex> out(S_.size());
        if (!table_.empty()) {
            std::copy_n(table_.begin() + static_cast<std::ptrdiff_t>(v * S_.size()), S_.size(), out.begin());
        } else {
            for (std::size_t j = 0; j < S_.size(); ++j) out[j] = add(v, S_[j]);
        }
        return out;
    }

    std::string format(Vertex v) const {
        std::string s = "(";
        auto x = decode(v);
        for (unsigned i = 0; i < d_; ++i) s += (i ? ", " : "") + ring_.format(x[i]);
        return s + ")";
    }

private:
    const Ring& ring_;
    unsigned d_;
    std::uint32_t q_;
    std::uint32_t n_ = 0;
    std::vector<Vertex> S_;
    bool loops_ = false;
    std::vector<Vertex> table_;
};

/// {(u, u^-1)} as encoded vertices of R^2.
inline std::vector<Vertex> hyperbola_connection_set(const Ring& ring) {
    std::vector<Vertex> S;
    for (const auto& [u, v] : hyperbola(ring).points) S.push_back(u * ring.size() + v);
    return S;
}

inline SGraph hyperbola_graph(const Ring& ring, std::uint64_t vertex_guard = kVertexGuard) {
    return SGraph(ring, 2, hyperbola_connection_set(ring), vertex_guard);
}

/// {x in R^d : x_1^2 + ... + x_d^2 = t}.
inline std::vector<Vertex> sphere_connection_set(const Ring& ring, unsigned d, Elem t,
                                                 std::uint64_t vertex_guard = kVertexGuard) {
    const std::uint32_t q = ring.size();
    auto n = checked_pow(q, d, vertex_guard);
    if (!n) throw GuardExceeded("|R|^d exceeds the vertex guard for " + ring.name());
    if (t >= q) throw InvalidParameter("sphere radius out of range");
    std::vector<Vertex> S;
    for (Vertex v = 0; v < *n; ++v) {
        Elem acc = 0;
        Vertex w = v;
        for (unsigned i = 0; i < d; ++i) {
            const Elem x = w % q;
            acc = ring.add(acc, ring.mul(x, x));
            w /= q;
        }
        if (acc == t) S.push_back(v);
    }
    return S;
}

struct SpectralReport {
    std::string ring;
    std::uint32_t vertices = 0;
    std::uint32_t degree = 0;
    std::vector<double> eigenvalues;  // indexed by dual element
    double max_imaginary = 0.0;
    double lambda2 = 0.0;            // max |lambda_m| over m != 0
    double second_eigenvalue = 0.0;  // second entry of the sorted multiset
    double gap = 0.0;                // degree - lambda2
    double epsilon = 0.0;            // (1 - lambda2 / degree) / 2
    bool ramanujan = false;          // lambda2 <= 2 sqrt(degree - 1)
    std::uint32_t components = 0;    // multiplicity of the degree
    bool connected = false;
    bool bipartite = false;  // -degree occurs
    double tolerance = 0.0;

    std::vector<double> sorted_descending() const {
        auto v = eigenvalues;
        std::sort(v.begin(), v.end(), std::greater<>());
        return v;
    }
};

/// Eigenvalue attached to dual element m: sum_{s in S} chi_m(s).
inline Complex sgraph_eigenvalue(const SGraph& g, Vertex m) {
    const std::uint32_t L = g.ring().character_modulus();
    std::vector<std::uint32_t> counts(L, 0);
    for (auto s : g.connection_set()) ++counts[g.pairing(m, s)];
    Complex acc{0.0, 0.0};
    for (std::uint32_t r = 0; r < L; ++r)
        if (counts[r]) acc += static_cast<double>(counts[r]) * g.ring().root_of_unity(r);
    return acc;
}

inline SpectralReport spectrum(const SGraph& g, unsigned jobs = 1, double tolerance = 1e-9) {
    SpectralReport rep;
    rep.ring = g.ring().name();
    rep.vertices = g.vertex_count();
    rep.degree = g.degree();
    const double d = g.degree();
    rep.tolerance = tolerance * std::max(d, 1.0);
    rep.eigenvalues.assign(g.vertex_count(), 0.0);
    std::vector<double> imag(std::max(1u, jobs), 0.0);
    parallel_chunks(g.vertex_count(), jobs, [&](unsigned w, std::size_t begin, std::size_t end) {
        for (std::size_t m = begin; m < end; ++m) {
            const Complex l = sgraph_eigenvalue(g, static_cast<Vertex>(m));
            rep.eigenvalues[m] = l.real();
            imag[w] = std::max(imag[w], std::abs(l.imag()));
        }
    });
    rep.max_imaginary = *std::max_element(imag.begin(), imag.end());
    if (rep.max_imaginary > rep.tolerance) throw InvariantFailure("non-real eigenvalue for " + rep.ring);

    for (std::size_t m = 0; m < rep.eigenvalues.size(); ++m) {
        const double l = rep.eigenvalues[m];
        if (std::abs(l) > d + rep.tolerance) throw InvariantFailure("eigenvalue outside [-d, d] for " + rep.ring);
        if (std::abs(l - d) <= rep.tolerance) ++rep.components;
        if (std::abs(l + d) <= rep.tolerance) rep.bipartite = true;
        if (m != 0) rep.lambda2 = std::max(rep.lambda2, std::abs(l));
    }
    const auto sorted = rep.sorted_descending();
    rep.second_eigenvalue = sorted.size() > 1 ? sorted[1] : sorted.front();
    rep.connected = rep.components == 1;
    rep.gap = d - rep.lambda2;
    rep.epsilon = d > 0 ? 0.5 * (1.0 - rep.lambda2 / d) : 0.0;
    rep.ramanujan = d >= 1 && rep.lambda2 <= 2.0 * std::sqrt(d - 1.0) + rep.tolerance;
    return rep;
}

/// || A chi_m - lambda chi_m ||_inf with A applied through neighbor iteration.
inline double eigen_residual(const SGraph& g, Vertex m, double lambda) {
    double worst = 0.0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        Complex av{0.0, 0.0};
        for (auto w : g.neighbors(v)) av += g.character(m, w);
        worst = std::max(worst, std::abs(av - lambda * g.character(m, v)));
    }
    return worst;
}

struct TraversalResult {
    std::uint32_t components = 0;
    bool bipartite = true;  // every component 2-colorable
};

inline TraversalResult traverse(const SGraph& g) {
    TraversalResult t;
    std::vector<std::int8_t> color(g.vertex_count(), -1);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (color[s] >= 0) continue;
        ++t.components;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (auto w : g.neighbors(v)) {
                if (color[w] < 0) {
                    color[w] = static_cast<std::int8_t>(1 - color[v]);
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    t.bipartite = false;
                }
            }
        }
    }
    return t;
}

struct ConnectivityReport {
    bool connected = false;
    bool bipartite = false;
    std::uint32_t components = 0;
    std::optional<TraversalResult> traversal;  // present when edges are materialized
    bool consistent = true;
};

inline ConnectivityReport connectivity_report(const SGraph& g, const SpectralReport& rep) {
    ConnectivityReport c;
    c.connected = rep.connected;
    c.bipartite = rep.bipartite;
    c.components = rep.components;
    if (g.edges_materialized()) {
        c.traversal = traverse(g);
        c.consistent = c.traversal->components == rep.components && c.traversal->bipartite == rep.bipartite;
    }
    return c;
}

inline ConnectivityReport connectivity_report(const SGraph& g) { return connectivity_report(g, spectrum(g)); }

struct GapResult {
    bool extremal = false;  // formula inapplicable; gap reported as 0
    double formula = 0.0;   // |R*| - C sqrt|R*|
    double spectral = 0.0;  // d - lambda2
    bool agrees = false;
};

inline GapResult spectral_gap(const SGraph& g, const SpectralReport& rep, double C, bool extremal,
                              double tolerance = 1e-8) {
    GapResult r;
    r.spectral = rep.gap;
    r.extremal = extremal;
    if (extremal) {
        r.agrees = std::abs(r.spectral) <= tolerance * std::max(1.0, double(rep.degree));
        return r;
    }
    const double units = static_cast<double>(g.ring().unit_count());
    r.formula = units - C * std::sqrt(units);
    r.agrees = std::abs(r.formula - r.spectral) <= tolerance * std::max(1.0, units);
    return r;
}

struct WalkRow {
    unsigned t = 0;
    double deviation = 0.0;  // max over starts and targets of |p^t - 1/N|
    double bound = 0.0;      // (C / sqrt|R*|)^t
    bool pass = false;
};

/// Non-lazy uniform walk from each start vertex (default: vertex 0). By
/// vertex transitivity every start gives a translate of the same row.
inline std::vector<WalkRow> random_walk_check(const SGraph& g, unsigned t_max, double C, bool extremal,
                                              std::vector<Vertex> starts = {0}, double tolerance = 1e-12) {
    if (extremal) throw NotApplicable("walk bound requires a non-extremal ring (" + g.ring().name() + ")");
    if (!g.edges_materialized()) throw GuardExceeded("walk simulation needs materialized edges");
    if (g.degree() == 0) throw NotApplicable("walk on an empty connection set");
    const std::uint32_t N = g.vertex_count();
    const double uniform = 1.0 / N, ratio = C / std::sqrt(static_cast<double>(g.ring().unit_count()));
    const double step = 1.0 / g.degree();
    std::vector<WalkRow> rows(t_max + 1);
    for (unsigned t = 0; t <= t_max; ++t) {
        rows[t].t = t;
        rows[t].bound = std::pow(ratio, t);
    }
    std::vector<double> p(N), next(N);
    for (auto s : starts) {
        std::fill(p.begin(), p.end(), 0.0);
        p[s] = 1.0;
        for (unsigned t = 0;; ++t) {
            double dev = 0.0;
            for (auto x : p) dev = std::max(dev, std::abs(x - uniform));
            rows[t].deviation = std::max(rows[t].deviation, dev);
            if (t == t_max) break;
            std::fill(next.begin(), next.end(), 0.0);
            for (Vertex v = 0; v < N; ++v) {
                if (p[v] == 0.0) continue;
                const double share = p[v] * step;
                for (auto w : g.neighbors(v)) next[w] += share;
            }
            p.swap(next);
        }
    }
    for (auto& r : rows) r.pass = r.deviation <= r.bound + tolerance;
    return rows;
}

struct ExpanderReport {
    double epsilon = 0.0;            // (1 - C / sqrt|R*|) / 2
    bool ramanujan = false;          // C <= 2 sqrt(1 - 1/|R*|)
    bool spectral_ramanujan = false; // lambda2 <= 2 sqrt(d - 1) from the spectrum
};

inline ExpanderReport expander_and_ramanujan(const SGraph& g, double C, bool extremal,
                                             const SpectralReport* rep = nullptr, double tolerance = 1e-9) {
    if (extremal) throw NotApplicable("expander ratio requires a non-extremal ring (" + g.ring().name() + ")");
    const double units = static_cast<double>(g.ring().unit_count());
    ExpanderReport e;
    e.epsilon = 0.5 * (1.0 - C / std::sqrt(units));
    e.ramanujan = C <= 2.0 * std::sqrt(1.0 - 1.0 / units) + tolerance;
    e.spectral_ramanujan = rep ? rep->ramanujan : e.ramanujan;
    return e;
}

// ---------------------------------------------------------------------------
// Counting: n(E) and the discrepancy D(E).
// ---------------------------------------------------------------------------

struct CountReport {
    std::size_t set_size = 0;
    std::uint64_t n = 0;      // ordered pairs (x, y) in E^2 with x - y in H
    double D = 0.0;           // sum over (m, n) != 0 of K(m, n) |sum_{x in E} chi(m x_1 + n x_2)|^2 / |R|^2
    double main_term = 0.0;   // |E|^2 |R*| / |R|^2
    double residual = 0.0;    // |n - D - main_term|
};

/// Exact count by double loop, discrepancy by summing over the dual of R^2.
inline CountReport count_pairs(const KloostermanEngine& engine, const std::vector<PairElem>& E,
                               std::uint64_t guard = std::uint64_t{1} << 26) {
    const Ring& ring = engine.ring();
    const std::uint64_t q = ring.size();
    if (static_cast<std::uint64_t>(E.size()) * E.size() > guard || q * q * E.size() > guard)
        throw GuardExceeded("pair count exceeds guard");
    CountReport r;
    r.set_size = E.size();
    for (const auto& x : E)
        for (const auto& y : E) {
            const Elem a = ring.sub(x.first, y.first), b = ring.sub(x.second, y.second);
            if (ring.is_unit(a) && *ring.inverse(a) == b) ++r.n;
        }
    const std::uint32_t L = ring.character_modulus();
    std::vector<std::uint32_t> counts(L);
    double D = 0.0;
    for (Elem m = 0; m < q; ++m)
        for (Elem n = 0; n < q; ++n) {
            if (m == 0 && n == 0) continue;
            std::fill(counts.begin(), counts.end(), 0u);
            for (const auto& x : E) ++counts[(ring.pairing(m, x.first) + ring.pairing(n, x.second)) % L];
            Complex e{0.0, 0.0};
            for (std::uint32_t k = 0; k < L; ++k)
                if (counts[k]) e += static_cast<double>(counts[k]) * ring.root_of_unity(k);
            D += engine.sum(m, n).real() * std::norm(e);
        }
    const double qq = static_cast<double>(q * q);
    r.D = D / qq;
    r.main_term = static_cast<double>(E.size()) * E.size() * ring.unit_count() / qq;
    r.residual = std::abs(static_cast<double>(r.n) - r.D - r.main_term);
    return r;
}

inline CountReport count_pairs(const Ring& ring, const std::vector<PairElem>& E) {
    return count_pairs(KloostermanEngine(ring), E);
}

/// R x I as points of R^2.
inline std::vector<PairElem> strip_set(const Ring& ring, const Ideal& I) {
    std::vector<PairElem> E;
    for (Elem a = 0; a < ring.size(); ++a)
        for (Elem b : I.elements) E.emplace_back(a, b);
    return E;
}

struct IdealBoundRow {
    std::string label;  // "Ra" with the least generator, or "J"
    std::size_t size = 0;
    double bound = 0.0;  // C |R| / sqrt|R*|
    bool pass = false;
};

/// Every proper principal left ideal and the Jacobson radical against |I| <= C |R| / sqrt|R*|.
inline std::vector<IdealBoundRow> ideal_bound_check(const Ring& ring, double C, double tolerance = 1e-8) {
    const double bound = C * ring.size() / std::sqrt(static_cast<double>(ring.unit_count()));
    std::vector<IdealBoundRow> rows;
    auto push = [&](std::string label, const Ideal& I) {
        rows.push_back({std::move(label), I.size(), bound, I.size() <= bound + tolerance});
    };
    for (const auto& I : principal_left_ideals(ring)) {
        if (!I.proper) continue;
        Elem gen = 0;
        for (Elem a = 0; a < ring.size(); ++a)
            if (principal_left_ideal(ring, a).elements == I.elements) {
                gen = a;
                break;
            }
        push("R" + ring.format(gen), I);
    }
    push("J", jacobson_radical(ring));
    return rows;
}

// ---------------------------------------------------------------------------
// Exact independence and chromatic numbers (at most 64 vertices).
// ---------------------------------------------------------------------------

namespace detail {

using Mask = std::uint64_t;

inline std::vector<Mask> adjacency_masks(const SGraph& g) {
    std::vector<Mask> adj(g.vertex_count(), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (auto w : g.neighbors(v))
            if (w != v) adj[v] |= Mask{1} << w;
    return adj;
}

inline void max_independent(const std::vector<Mask>& adj, Mask P, int size, int& best) {
    if (P == 0) {
        best = std::max(best, size);
        return;
    }
    if (size + std::popcount(P) <= best) return;
    // Branch on a vertex of minimum degree inside P; with degree <= 1 taking it is safe.
    int v = -1, vd = 65;
    for (Mask rest = P; rest; rest &= rest - 1) {
        const int u = std::countr_zero(rest);
        const int du = std::popcount(adj[u] & P);
        if (du < vd) {
            v = u;
            vd = du;
        }
    }
    const Mask vbit = Mask{1} << v;
    max_independent(adj, P & ~vbit & ~adj[v], size + 1, best);
    if (vd <= 1) return;
    for (Mask rest = adj[v] & P; rest; rest &= rest - 1) {
        const int u = std::countr_zero(rest);
        // Some neighbor of v must be taken if v is not; branch on each in turn.
        Mask Q = P & ~vbit;
        for (Mask done = (adj[v] & P) & ((Mask{1} << u) - 1); done; done &= done - 1)
            Q &= ~(Mask{1} << std::countr_zero(done));
        max_independent(adj, Q & ~(Mask{1} << u) & ~adj[u], size + 1, best);
    }
}

inline bool colorable(const std::vector<Mask>& adj, std::vector<int>& color, int k, std::size_t colored) {
    const std::size_t n = adj.size();
    if (colored == n) return true;
    // DSATUR choice: uncolored vertex with most distinct neighbor colors.
    int pick = -1, sat_best = -1, deg_best = -1;
    for (std::size_t v = 0; v < n; ++v) {
        if (color[v] >= 0) continue;
        std::uint64_t seen = 0;
        int deg = 0;
        for (Mask rest = adj[v]; rest; rest &= rest - 1) {
            const int w = std::countr_zero(rest);
            if (color[w] >= 0) seen |= std::uint64_t{1} << color[w];
            else ++deg;
        }
        const int sat = std::popcount(seen);
        if (sat > sat_best || (sat == sat_best && deg > deg_best)) {
            pick = static_cast<int>(v);
            sat_best = sat;
            deg_best = deg;
        }
    }
    std::uint64_t used = 0;
    int max_used = -1;
    for (std::size_t v = 0; v < n; ++v) max_used = std::max(max_used, color[v]);
    for (Mask rest = adj[pick]; rest; rest &= rest - 1) {
        const int w = std::countr_zero(rest);
        if (color[w] >= 0) used |= std::uint64_t{1} << color[w];
    }
    // Colors beyond max_used + 1 are symmetric; try only one fresh color.
    for (int c = 0; c < k && c <= max_used + 1; ++c) {
        if (used & (std::uint64_t{1} << c)) continue;
        color[pick] = c;
        if (colorable(adj, color, k, colored + 1)) return true;
        color[pick] = -1;
    }
    return false;
}

}  // namespace detail

struct IndependenceChromatic {
    double indep_upper = 0.0;  // C |R|^2 / sqrt|R*|
    double chrom_lower = 0.0;  // sqrt|R*| / C
    std::optional<int> exact_indep;
    std::optional<int> exact_chrom;
    bool indep_ok = true;
    bool chrom_ok = true;
    std::optional<bool> field_chrom_ok;  // chrom_lower >= sqrt(q - 1) / 2.14 for fields
};

inline int independence_number(const SGraph& g) {
    if (g.vertex_count() > 64) throw GuardExceeded("exact independence limited to 64 vertices");
    if (g.has_loops()) throw NotApplicable("independence number of a graph with loops");
    const auto adj = detail::adjacency_masks(g);
    const detail::Mask all = g.vertex_count() == 64 ? ~detail::Mask{0} : (detail::Mask{1} << g.vertex_count()) - 1;
    int best = 0;
    detail::max_independent(adj, all, 0, best);
    return best;
}

inline int chromatic_number(const SGraph& g) {
    if (g.vertex_count() > 64) throw GuardExceeded("exact chromatic number limited to 64 vertices");
    if (g.has_loops()) throw NotApplicable("chromatic number of a graph with loops");
    const auto adj = detail::adjacency_masks(g);
    bool any_edge = std::any_of(adj.begin(), adj.end(), [](detail::Mask m) { return m != 0; });
    for (int k = any_edge ? 2 : 1;; ++k) {
        std::vector<int> color(adj.size(), -1);
        if (detail::colorable(adj, color, k, 0)) return k;
    }
}

/// Bounds for the hyperbola graph on R^2 with exact values when N <= 64.
inline IndependenceChromatic independence_and_chromatic(const SGraph& g, double C, double tolerance = 1e-9) {
    IndependenceChromatic r;
    const Ring& ring = g.ring();
    const double units = static_cast<double>(ring.unit_count());
    r.indep_upper = C * g.vertex_count() / std::sqrt(units);
    r.chrom_lower = std::sqrt(units) / C;
    if (g.vertex_count() <= 64 && !g.has_loops()) {
        r.exact_indep = independence_number(g);
        r.exact_chrom = chromatic_number(g);
        r.indep_ok = *r.exact_indep <= r.indep_upper + tolerance;
        r.chrom_ok = *r.exact_chrom >= r.chrom_lower - tolerance;
    }
    if (ring.is_field()) r.field_chrom_ok = r.chrom_lower >= std::sqrt(units) / 2.14 - tolerance;
    return r;
}

/// "# vertices=N degree=d ring=<spec>" then "u v" with u < v; loops as "u u".
inline void write_edge_list(const SGraph& g, std::ostream& out) {
    out << "# vertices=" << g.vertex_count() << " degree=" << g.degree() << " ring=" << g.ring().name() << "\n";
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        auto nb = g.neighbors(u);
        std::sort(nb.begin(), nb.end());
        for (auto v : nb)
            if (u <= v) out << u << " " << v << "\n";
    }
}

inline std::uint64_t edge_count(const SGraph& g) {
    std::uint64_t e = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (auto v : g.neighbors(u)) e += u <= v;
    return e;
}

}  // namespace ksl
