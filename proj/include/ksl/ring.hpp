#pragma once

/**
 * @file ring.hpp
 * @brief Concrete finite rings built from a RingSpec.
 *
 * A ring is flattened into a list of leaves (Z/n, GF(q), M_k(GF(q))); the
 * ring is their direct product. Elements are integers in [0, |R|) using a
 * mixed-radix encoding over the leaves, first leaf most significant. Inside
 * a leaf:
 *   - Z/n       residue
 *   - GF(p^k)   a_0 + a_1 p + ... (see galois.hpp)
 *   - M_k(F)    row-major entries, first entry most significant, each entry a GF index
 * Zero is index 0 in every case.
 *
 * Additive characters use a fixed self-dual pairing <m, x> in Z/L, where L
 * is the least common multiple of the leaf exponents:
 *   - Z/n       m x mod n
 *   - GF(q)     Tr(m x)
 *   - M_k(F)    Tr_F(tr(M X))
 * and chi_m(x) = exp(2 pi i <m, x> / L). Dual elements reuse element indices.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <memory>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ksl/error.hpp"
#include "ksl/galois.hpp"
#include "ksl/number_theory.hpp"
#include "ksl/ring_spec.hpp"

namespace ksl {

using Elem = std::uint32_t;
using Complex = std::complex<double>;

inline constexpr std::uint64_t kDefaultSizeGuard = 4096;

struct RingOptions {
    std::uint64_t size_guard = kDefaultSizeGuard;
};

enum class LeafKind { Zmod, Field, Matrix };

/// One direct factor of a ring: Z/n, GF(q) or M_k(GF(q)).
class Leaf {
public:
    static Leaf zmod(std::uint32_t n) {
        Leaf l;
        l.kind_ = LeafKind::Zmod;
        l.n_ = n;
        l.size_ = n;
        l.exponent_ = n;
        return l;
    }

    static Leaf field(std::shared_ptr<const GaloisField> f) {
        Leaf l;
        l.kind_ = LeafKind::Field;
        l.size_ = f->order();
        l.exponent_ = f->characteristic();
        l.field_ = std::move(f);
        return l;
    }

    static Leaf matrix(std::uint32_t k, std::shared_ptr<const GaloisField> f) {
        Leaf l;
        l.kind_ = LeafKind::Matrix;
        l.k_ = k;
        l.size_ = static_cast<std::uint32_t>(*checked_pow(f->order(), k * k));
        l.exponent_ = f->characteristic();
        l.field_ = std::move(f);
        return l;
    }

    LeafKind kind() const noexcept { return kind_; }
    std::uint32_t size() const noexcept { return size_; }
    /// Additive exponent: n for Z/n, the characteristic otherwise.
    std::uint32_t exponent() const noexcept { return exponent_; }
    std::uint32_t modulus() const noexcept { return n_; }
    std::uint32_t dimension() const noexcept { return k_; }
    const GaloisField& base_field() const noexcept { return *field_; }

    Elem one() const {
        switch (kind_) {
            case LeafKind::Zmod:
            case LeafKind::Field: return 1;
            case LeafKind::Matrix: {
                std::vector<Elem> e(k_ * k_, 0);
                for (std::uint32_t i = 0; i < k_; ++i) e[i * k_ + i] = 1;
                return encode_matrix(e);
            }
        }
        return 0;
    }

    Elem add(Elem a, Elem b) const {
        switch (kind_) {
            case LeafKind::Zmod: return static_cast<Elem>((static_cast<std::uint64_t>(a) + b) % n_);
            case LeafKind::Field: return field_->add(a, b);
            case LeafKind::Matrix: {
                auto x = decode_matrix(a), y = decode_matrix(b);
                for (std::size_t i = 0; i < x.size(); ++i) x[i] = field_->add(x[i], y[i]);
                return encode_matrix(x);
            }
        }
        return 0;
    }

    Elem neg(Elem a) const {
        switch (kind_) {
            case LeafKind::Zmod: return (n_ - a) % n_;
            case LeafKind::Field: return field_->neg(a);
            case LeafKind::Matrix: {
                auto x = decode_matrix(a);
                for (auto& v : x) v = field_->neg(v);
                return encode_matrix(x);
            }
        }
        return 0;
    }

    Elem mul(Elem a, Elem b) const {
        switch (kind_) {
            case LeafKind::Zmod: return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % n_);
            case LeafKind::Field: return field_->mul(a, b);
            case LeafKind::Matrix: {
                auto x = decode_matrix(a), y = decode_matrix(b);
                std::vector<Elem> z(k_ * k_, 0);
                for (std::uint32_t i = 0; i < k_; ++i)
                    for (std::uint32_t j = 0; j < k_; ++j) {
                        Elem s = 0;
                        for (std::uint32_t t = 0; t < k_; ++t)
                            s = field_->add(s, field_->mul(x[i * k_ + t], y[t * k_ + j]));
                        z[i * k_ + j] = s;
                    }
                return encode_matrix(z);
            }
        }
        return 0;
    }

    /// Two-sided inverse, if any.
    std::optional<Elem> inverse(Elem a) const {
        switch (kind_) {
            case LeafKind::Zmod: {
                auto r = mod_inverse(a, n_);
                if (!r) return std::nullopt;
                return static_cast<Elem>(*r);
            }
            case LeafKind::Field:
                if (a == 0) return std::nullopt;
                return field_->inv(a);
            case LeafKind::Matrix: return matrix_inverse(a);
        }
        return std::nullopt;
    }

    /// <m, x> as an integer mod exponent().
    std::uint32_t pairing(Elem m, Elem x) const {
        switch (kind_) {
            case LeafKind::Zmod: return static_cast<std::uint32_t>((static_cast<std::uint64_t>(m) * x) % n_);
            case LeafKind::Field: return field_->trace(field_->mul(m, x));
            case LeafKind::Matrix: {
                auto a = decode_matrix(m), b = decode_matrix(x);
                Elem t = 0;
                for (std::uint32_t i = 0; i < k_; ++i)
                    for (std::uint32_t j = 0; j < k_; ++j) t = field_->add(t, field_->mul(a[i * k_ + j], b[j * k_ + i]));
                return field_->trace(t);
            }
        }
        return 0;
    }

    std::vector<Elem> decode_matrix(Elem a) const {
        const std::uint32_t q = field_->order();
        std::vector<Elem> e(k_ * k_);
        for (std::size_t i = e.size(); i-- > 0;) {
            e[i] = a % q;
            a /= q;
        }
        return e;
    }

    Elem encode_matrix(const std::vector<Elem>& e) const {
        const std::uint32_t q = field_->order();
        Elem a = 0;
        for (auto v : e) a = a * q + v;
        return a;
    }

    /// Elements whose additive span is the whole leaf (one per base-p / base-n digit).
    std::vector<Elem> additive_generators() const {
        std::vector<Elem> out;
        switch (kind_) {
            case LeafKind::Zmod: out.push_back(1); break;
            case LeafKind::Field:
                for (Elem place = 1; place < size_; place *= exponent_) out.push_back(place);
                break;
            case LeafKind::Matrix: {
                const std::uint32_t q = field_->order();
                for (std::uint32_t pos = 0; pos < k_ * k_; ++pos)
                    for (Elem place = 1; place < q; place *= exponent_) {
                        std::vector<Elem> e(k_ * k_, 0);
                        e[pos] = place;
                        out.push_back(encode_matrix(e));
                    }
                break;
            }
        }
        return out;
    }

    std::string format(Elem a) const {
        switch (kind_) {
            case LeafKind::Zmod: return std::to_string(a);
            case LeafKind::Field: return format_field(a);
            case LeafKind::Matrix: {
                auto e = decode_matrix(a);
                std::string s = "[";
                for (std::uint32_t i = 0; i < k_; ++i) {
                    if (i) s += ";";
                    for (std::uint32_t j = 0; j < k_; ++j) {
                        if (j) s += ",";
                        s += format_field(e[i * k_ + j]);
                    }
                }
                return s + "]";
            }
        }
        return {};
    }

private:
    std::string format_field(Elem a) const {
        if (field_->degree() == 1) return std::to_string(a);
        auto c = field_->coefficients(a);
        std::string s = "(";
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) s += " ";
            s += std::to_string(c[i]);
        }
        return s + ")";
    }

    std::optional<Elem> matrix_inverse(Elem a) const {
        const GaloisField& f = *field_;
        const std::uint32_t k = k_;
        auto m = decode_matrix(a);
        std::vector<Elem> inv(k * k, 0);
        for (std::uint32_t i = 0; i < k; ++i) inv[i * k + i] = 1;
        for (std::uint32_t col = 0; col < k; ++col) {
            std::uint32_t pivot = col;
            while (pivot < k && m[pivot * k + col] == 0) ++pivot;
            if (pivot == k) return std::nullopt;
            if (pivot != col)
                for (std::uint32_t j = 0; j < k; ++j) {
                    std::swap(m[pivot * k + j], m[col * k + j]);
                    std::swap(inv[pivot * k + j], inv[col * k + j]);
                }
            const Elem s = f.inv(m[col * k + col]);
            for (std::uint32_t j = 0; j < k; ++j) {
                m[col * k + j] = f.mul(m[col * k + j], s);
                inv[col * k + j] = f.mul(inv[col * k + j], s);
            }
            for (std::uint32_t r = 0; r < k; ++r) {
                if (r == col || m[r * k + col] == 0) continue;
                const Elem factor = f.neg(m[r * k + col]);
                for (std::uint32_t j = 0; j < k; ++j) {
                    m[r * k + j] = f.add(m[r * k + j], f.mul(factor, m[col * k + j]));
                    inv[r * k + j] = f.add(inv[r * k + j], f.mul(factor, inv[col * k + j]));
                }
            }
        }
        return encode_matrix(inv);
    }

    LeafKind kind_ = LeafKind::Zmod;
    std::uint32_t n_ = 0, k_ = 1, size_ = 0, exponent_ = 0;
    std::shared_ptr<const GaloisField> field_;
};

/// Units of a ring with their inverses; `inverse[i]` is the inverse of `units[i]`.
struct UnitSet {
    std::vector<Elem> units;
    std::vector<Elem> inverse;

    std::size_t size() const noexcept { return units.size(); }
};

/// Immutable finite ring with exact arithmetic on element indices.
class Ring {
public:
    explicit Ring(RingSpec spec, RingOptions options = {}) : spec_(std::move(spec)) {
        auto sz = ring_size(spec_, options.size_guard);
        if (!sz)
            throw GuardExceeded("ring " + to_string(spec_) + " exceeds size guard " +
                                std::to_string(options.size_guard));
        size_ = static_cast<std::uint32_t>(*sz);
        flatten(spec_);
        strides_.assign(leaves_.size(), 1);
        for (std::size_t i = leaves_.size(); i-- > 1;) strides_[i - 1] = strides_[i] * leaves_[i].size();
        modulus_ = 1;
        for (const auto& l : leaves_) modulus_ = std::lcm(modulus_, l.exponent());
        std::vector<Elem> ones;
        for (const auto& l : leaves_) ones.push_back(l.one());
        one_ = encode(ones);
        build_tables();
        build_units();
    }

    explicit Ring(std::string_view text, RingOptions options = {}) : Ring(parse_ring_spec(text), options) {}

    const RingSpec& spec() const noexcept { return spec_; }
    std::string name() const { return to_string(spec_); }
    std::uint32_t size() const noexcept { return size_; }
    const std::vector<Leaf>& leaves() const noexcept { return leaves_; }
    /// L such that every character value is an L-th root of unity.
    std::uint32_t character_modulus() const noexcept { return modulus_; }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return one_; }

    Elem add(Elem a, Elem b) const {
        if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * size_ + b];
        return combine(a, b, [](const Leaf& l, Elem x, Elem y) { return l.add(x, y); });
    }
    Elem neg(Elem a) const { return neg_table_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(a) * size_ + b];
        return combine(a, b, [](const Leaf& l, Elem x, Elem y) { return l.mul(x, y); });
    }

    bool is_unit(Elem a) const noexcept { return inverse_[a] != kNoInverse; }
    std::optional<Elem> inverse(Elem a) const {
        if (!is_unit(a)) return std::nullopt;
        return inverse_[a];
    }
    const UnitSet& units() const noexcept { return units_; }
    std::size_t unit_count() const noexcept { return units_.size(); }

    /// <m, x> in Z/L.
    std::uint32_t pairing(Elem m, Elem x) const {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < leaves_.size(); ++i) {
            const Leaf& l = leaves_[i];
            const Elem mi = (m / strides_[i]) % l.size(), xi = (x / strides_[i]) % l.size();
            s += static_cast<std::uint64_t>(l.pairing(mi, xi)) * (modulus_ / l.exponent());
        }
        return static_cast<std::uint32_t>(s % modulus_);
    }

    Complex root_of_unity(std::uint64_t k) const {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k % modulus_) / modulus_;
        return {std::cos(angle), std::sin(angle)};
    }

    /// chi_m(x).
    Complex character(Elem m, Elem x) const { return root_of_unity(pairing(m, x)); }

    std::vector<Elem> decode(Elem a) const {
        std::vector<Elem> out(leaves_.size());
        for (std::size_t i = 0; i < leaves_.size(); ++i) out[i] = (a / strides_[i]) % leaves_[i].size();
        return out;
    }

    Elem encode(const std::vector<Elem>& parts) const {
        Elem a = 0;
        for (std::size_t i = 0; i < leaves_.size(); ++i) a += parts[i] * strides_[i];
        return a;
    }

    /// Human-readable components, e.g. "(3, [1,1;0,1])".
    std::string format(Elem a) const {
        auto parts = decode(a);
        if (parts.size() == 1) return leaves_[0].format(parts[0]);
        std::string s = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ", ";
            s += leaves_[i].format(parts[i]);
        }
        return s + ")";
    }

    /// Elements whose additive span is R.
    std::vector<Elem> additive_generators() const {
        std::vector<Elem> out;
        for (std::size_t i = 0; i < leaves_.size(); ++i)
            for (Elem g : leaves_[i].additive_generators()) out.push_back(g * strides_[i]);
        return out;
    }

    bool is_field() const {
        return leaves_.size() == 1 && (leaves_[0].kind() == LeafKind::Field ||
                                       (leaves_[0].kind() == LeafKind::Zmod && is_prime(leaves_[0].modulus())) ||
                                       (leaves_[0].kind() == LeafKind::Matrix && leaves_[0].dimension() == 1));
    }

    /// True iff every leaf is a copy of the two-element field.
    bool is_boolean() const {
        return std::all_of(leaves_.begin(), leaves_.end(), [](const Leaf& l) { return l.size() == 2; });
    }

    bool is_commutative() const {
        return std::none_of(leaves_.begin(), leaves_.end(),
                            [](const Leaf& l) { return l.kind() == LeafKind::Matrix && l.dimension() > 1; });
    }

private:
    static constexpr Elem kNoInverse = UINT32_MAX;
    static constexpr std::uint64_t kTableLimit = 1024;

    template <class Op>
    Elem combine(Elem a, Elem b, Op op) const {
        Elem r = 0;
        for (std::size_t i = 0; i < leaves_.size(); ++i) {
            const Leaf& l = leaves_[i];
            r += op(l, (a / strides_[i]) % l.size(), (b / strides_[i]) % l.size()) * strides_[i];
        }
        return r;
    }

    void flatten(const RingSpec& s) {
        struct Visitor {
            Ring& self;
            void operator()(const ZmodSpec& z) const { self.leaves_.push_back(Leaf::zmod(static_cast<std::uint32_t>(z.n))); }
            void operator()(const GaloisSpec& g) const { self.leaves_.push_back(Leaf::field(self.field_for(g))); }
            void operator()(const MatrixSpec& m) const {
                self.leaves_.push_back(Leaf::matrix(m.k, self.field_for(m.base)));
            }
            void operator()(const ProductSpec& p) const {
                for (const auto& f : p.factors) self.flatten(f);
            }
        };
        std::visit(Visitor{*this}, s.node);
    }

    std::shared_ptr<const GaloisField> field_for(const GaloisSpec& g) {
        for (const auto& f : fields_)
            if (f->characteristic() == g.p && f->degree() == g.k && f->modulus() == g.poly) return f;
        fields_.push_back(std::make_shared<const GaloisField>(g.p, g.k, g.poly));
        return fields_.back();
    }

    void build_tables() {
        neg_table_.resize(size_);
        for (Elem a = 0; a < size_; ++a) {
            Elem r = 0;
            for (std::size_t i = 0; i < leaves_.size(); ++i)
                r += leaves_[i].neg((a / strides_[i]) % leaves_[i].size()) * strides_[i];
            neg_table_[a] = r;
        }
        if (size_ > kTableLimit) return;
        const std::size_t n = static_cast<std::size_t>(size_) * size_;
        std::vector<Elem> add(n), mul(n);
        for (Elem a = 0; a < size_; ++a)
            for (Elem b = 0; b < size_; ++b) {
                add[static_cast<std::size_t>(a) * size_ + b] =
                    combine(a, b, [](const Leaf& l, Elem x, Elem y) { return l.add(x, y); });
                mul[static_cast<std::size_t>(a) * size_ + b] =
                    combine(a, b, [](const Leaf& l, Elem x, Elem y) { return l.mul(x, y); });
            }
        add_table_ = std::move(add);
        mul_table_ = std::move(mul);
    }

    void build_units() {
        inverse_.assign(size_, kNoInverse);
        for (Elem a = 0; a < size_; ++a) {
            std::vector<Elem> inv(leaves_.size());
            bool ok = true;
            for (std::size_t i = 0; i < leaves_.size() && ok; ++i) {
                auto r = leaves_[i].inverse((a / strides_[i]) % leaves_[i].size());
                if (r) inv[i] = *r;
                else ok = false;
            }
            if (!ok) continue;
            inverse_[a] = encode(inv);
            units_.units.push_back(a);
            units_.inverse.push_back(inverse_[a]);
        }
    }

    RingSpec spec_;
    std::uint32_t size_ = 0;
    std::uint32_t modulus_ = 1;
    Elem one_ = 0;
    std::vector<std::shared_ptr<const GaloisField>> fields_;
    std::vector<Leaf> leaves_;
    std::vector<std::uint32_t> strides_;
    std::vector<Elem> add_table_, mul_table_, neg_table_;
    std::vector<Elem> inverse_;
    UnitSet units_;
};

// ---------------------------------------------------------------------------
// Structure: radical, quotient, unit counts, ideals.
// ---------------------------------------------------------------------------

/// An ideal given by its sorted element list.
struct Ideal {
    std::vector<Elem> elements;
    bool proper = true;

    std::size_t size() const noexcept { return elements.size(); }
    bool contains(Elem x) const { return std::binary_search(elements.begin(), elements.end(), x); }
};

/// Jacobson radical, computed structurally: multiples of rad(n) in each Z/n
/// leaf, zero in field and matrix leaves.
inline Ideal jacobson_radical(const Ring& ring) {
    const auto& leaves = ring.leaves();
    std::vector<Elem> step(leaves.size(), 0);
    for (std::size_t i = 0; i < leaves.size(); ++i)
        if (leaves[i].kind() == LeafKind::Zmod) step[i] = static_cast<Elem>(radical(leaves[i].modulus()));
    Ideal out;
    for (Elem a = 0; a < ring.size(); ++a) {
        auto parts = ring.decode(a);
        bool in = true;
        for (std::size_t i = 0; i < parts.size() && in; ++i)
            in = step[i] == 0 ? parts[i] == 0 : parts[i] % step[i] == 0;
        if (in) out.elements.push_back(a);
    }
    out.proper = out.elements.size() < ring.size();
    return out;
}

/// R/J as a spec. Z/n maps to Z/rad(n); fields and matrix rings are unchanged.
inline RingSpec semisimple_quotient_spec(const RingSpec& spec) {
    struct Visitor {
        RingSpec operator()(const ZmodSpec& z) const { return RingSpec{ZmodSpec{radical(z.n)}}; }
        RingSpec operator()(const GaloisSpec& g) const { return RingSpec{g}; }
        RingSpec operator()(const MatrixSpec& m) const { return RingSpec{m}; }
        RingSpec operator()(const ProductSpec& p) const {
            ProductSpec out;
            for (const auto& f : p.factors) out.factors.push_back(semisimple_quotient_spec(f));
            return RingSpec{std::move(out)};
        }
    };
    return std::visit(Visitor{}, spec.node);
}

/// |R*| from |R*| = |J| * |(R/J)*| with R/J a product of prime fields,
/// finite fields and matrix rings.
inline std::uint64_t structural_unit_count(const Ring& ring) {
    std::uint64_t count = 1;
    for (const auto& l : ring.leaves()) {
        switch (l.kind()) {
            case LeafKind::Zmod: {
                const std::uint64_t n = l.modulus(), rad = radical(n);
                std::uint64_t semisimple_units = 1;
                for (auto p : prime_divisors(n)) semisimple_units *= p - 1;
                count *= (n / rad) * semisimple_units;
                break;
            }
            case LeafKind::Field: count *= l.size() - 1; break;
            case LeafKind::Matrix: count *= gl_order(l.dimension(), l.base_field().order()); break;
        }
    }
    return count;
}

/// R a for a given a. The set is closed under addition since r a + s a = (r + s) a.
inline Ideal principal_left_ideal(const Ring& ring, Elem a) {
    std::vector<char> seen(ring.size(), 0);
    Ideal out;
    for (Elem r = 0; r < ring.size(); ++r) {
        const Elem v = ring.mul(r, a);
        if (!seen[v]) {
            seen[v] = 1;
            out.elements.push_back(v);
        }
    }
    std::sort(out.elements.begin(), out.elements.end());
    out.proper = out.elements.size() < ring.size();
    return out;
}

/// All distinct principal left ideals, sorted by (size, elements).
inline std::vector<Ideal> principal_left_ideals(const Ring& ring, std::uint64_t work_guard = 1u << 24) {
    if (static_cast<std::uint64_t>(ring.size()) * ring.size() > work_guard)
        throw GuardExceeded("principal ideal enumeration exceeds work guard");
    std::vector<Ideal> out;
    for (Elem a = 0; a < ring.size(); ++a) {
        Ideal I = principal_left_ideal(ring, a);
        if (std::none_of(out.begin(), out.end(), [&](const Ideal& J) { return J.elements == I.elements; }))
            out.push_back(std::move(I));
    }
    std::sort(out.begin(), out.end(), [](const Ideal& x, const Ideal& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x.elements < y.elements;
    });
    return out;
}

}  // namespace ksl
