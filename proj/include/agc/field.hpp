#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace agc {

/// Enumeration budget for any single field: p^m <= 2^20.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t(1) << 20;

namespace detail {

/// Immutable description of GF(p^m): modulus and precomputed reduction rows.
/// Shared (and kept alive) by the Field handle and every element.
struct FieldData {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint64_t q = 0;
    std::array<std::int64_t, 5> mod{};                 // c0..cm, monic (cm = 1)
    std::array<std::array<std::int64_t, 4>, 3> red{};  // x^(m+k) mod f, k = 0..m-2

    bool same(const FieldData& o) const {
        if (this == &o) return true;
        if (p != o.p || m != o.m) return false;
        for (std::uint32_t i = 0; i <= m; ++i)
            if (mod[i] != o.mod[i]) return false;
        return true;
    }
};

// Evaluates a monic polynomial (coeffs low-to-high, length m+1) at a, mod p.
inline std::int64_t eval_poly(const std::array<std::int64_t, 5>& f, std::uint32_t m, std::int64_t a,
                              std::int64_t p) {
    std::int64_t v = 0;
    for (std::int32_t i = static_cast<std::int32_t>(m); i >= 0; --i) v = (v * a + f[i]) % p;
    return v;
}

// Irreducibility over F_p by exhaustive root/factor search, valid for m <= 4:
// degrees 2 and 3 are reducible iff they have a root; degree 4 additionally
// needs a quadratic-divisor check.
inline bool is_irreducible(const std::array<std::int64_t, 5>& f, std::uint32_t m, std::int64_t p) {
    if (m == 1) return true;
    for (std::int64_t a = 0; a < p; ++a)
        if (eval_poly(f, m, a, p) == 0) return false;
    if (m <= 3) return true;
    // m == 4: divide by every monic irreducible quadratic x^2 + bx + c.
    for (std::int64_t b = 0; b < p; ++b) {
        for (std::int64_t c = 0; c < p; ++c) {
            bool quad_has_root = false;
            for (std::int64_t a = 0; a < p && !quad_has_root; ++a)
                quad_has_root = ((a * a + b * a + c) % p == 0);
            if (quad_has_root) continue;
            // Remainder of f mod (x^2 + bx + c); f is monic of degree 4.
            std::array<std::int64_t, 5> r = f;
            for (std::int32_t d = 4; d >= 2; --d) {
                std::int64_t t = r[d] % p;
                if (t == 0) continue;
                r[d] = 0;
                r[d - 1] = ((r[d - 1] - t * b) % p + p * p) % p;
                r[d - 2] = ((r[d - 2] - t * c) % p + p * p) % p;
            }
            if (r[0] % p == 0 && r[1] % p == 0) return false;
        }
    }
    return true;
}

}  // namespace detail

class Field;
class FieldElement;
inline Field field_of(const FieldElement& a);

/// Element of GF(p^m), stored as the canonical coefficient vector of a
/// residue polynomial (low-to-high, each coefficient in [0, p)). Elements
/// share ownership of their field data, so they stay valid on their own.
class FieldElement {
  public:
    const detail::FieldData* data() const { return d_.get(); }
    std::uint32_t degree() const { return d_->m; }

    bool is_zero() const {
        for (std::uint32_t i = 0; i < d_->m; ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    std::int64_t coeff(std::uint32_t i) const { return c_[i]; }

    /// Index in the canonical enumeration: sum of c_i * p^i.
    std::uint64_t index() const {
        std::uint64_t idx = 0, w = 1;
        for (std::uint32_t i = 0; i < d_->m; ++i, w *= d_->p) idx += static_cast<std::uint64_t>(c_[i]) * w;
        return idx;
    }

    FieldElement operator+(const FieldElement& o) const {
        check_same(o);
        std::array<std::int64_t, 4> r{};
        for (std::uint32_t i = 0; i < d_->m; ++i) r[i] = (c_[i] + o.c_[i]) % d_->p;
        return {d_, r};
    }

    FieldElement operator-(const FieldElement& o) const {
        check_same(o);
        std::array<std::int64_t, 4> r{};
        for (std::uint32_t i = 0; i < d_->m; ++i) r[i] = (c_[i] - o.c_[i] + d_->p) % d_->p;
        return {d_, r};
    }

    FieldElement operator-() const {
        std::array<std::int64_t, 4> r{};
        for (std::uint32_t i = 0; i < d_->m; ++i) r[i] = (d_->p - c_[i]) % d_->p;
        return {d_, r};
    }

    FieldElement operator*(const FieldElement& o) const {
        check_same(o);
        const std::uint32_t m = d_->m;
        const std::int64_t p = d_->p;
        std::array<std::int64_t, 7> acc{};
        for (std::uint32_t i = 0; i < m; ++i) {
            if (c_[i] == 0) continue;
            for (std::uint32_t j = 0; j < m; ++j) acc[i + j] += c_[i] * o.c_[j];
        }
        // Fold degrees 2m-2 .. m down with the precomputed rows x^(m+k) mod f.
        for (std::int32_t deg = 2 * static_cast<std::int32_t>(m) - 2; deg >= static_cast<std::int32_t>(m);
             --deg) {
            std::int64_t t = acc[deg] % p;
            if (t == 0) continue;
            const auto& row = d_->red[deg - m];
            for (std::uint32_t i = 0; i < m; ++i) acc[i] += t * row[i];
        }
        std::array<std::int64_t, 4> r{};
        for (std::uint32_t i = 0; i < m; ++i) r[i] = acc[i] % p;
        return {d_, r};
    }

    FieldElement pow(std::int64_t e) const {
        if (e < 0) return inv().pow(-e);
        FieldElement base = *this;
        FieldElement r = one_of(d_);
        std::uint64_t n = static_cast<std::uint64_t>(e);
        while (n > 0) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    /// Multiplicative inverse, via a^(q-2).
    FieldElement inv() const {
        require(!is_zero(), errc::division_by_zero, "inv(0) is undefined");
        return pow(static_cast<std::int64_t>(d_->q - 2));
    }

    FieldElement operator/(const FieldElement& o) const { return *this * o.inv(); }

    bool operator==(const FieldElement& o) const {
        if (!d_->same(*o.d_)) return false;
        for (std::uint32_t i = 0; i < d_->m; ++i)
            if (c_[i] != o.c_[i]) return false;
        return true;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// Serialized form `c0,c1,...,c(m-1)`.
    std::string str() const {
        std::string s;
        for (std::uint32_t i = 0; i < d_->m; ++i) {
            if (i) s += ',';
            s += std::to_string(c_[i]);
        }
        return s;
    }

  private:
    friend class Field;
    friend Field field_of(const FieldElement&);

    FieldElement(std::shared_ptr<const detail::FieldData> d, const std::array<std::int64_t, 4>& c)
        : d_(std::move(d)), c_(c) {}

    static FieldElement one_of(const std::shared_ptr<const detail::FieldData>& d) {
        std::array<std::int64_t, 4> c{};
        c[0] = d->p > 1 ? 1 : 0;
        return {d, c};
    }

    void check_same(const FieldElement& o) const {
        require(d_->same(*o.d_), errc::spec_mismatch, "operands belong to different fields");
    }

    std::shared_ptr<const detail::FieldData> d_;
    std::array<std::int64_t, 4> c_;
};

/// GF(p^m) for small p^m: a cheap copyable handle over immutable shared data.
///
/// The modulus is the lexicographically smallest monic irreducible polynomial
/// (coefficients compared low-to-high) unless one is given explicitly, so a
/// field is fully determined by `q = p^m` and serialized data stays portable.
class Field {
  public:
    /// Builds GF(p^m) with the canonical modulus. Deterministic.
    Field(std::uint32_t p, std::uint32_t m) {
        validate_shape(p, m);
        auto d = std::make_shared<detail::FieldData>();
        d->p = p;
        d->m = m;
        d->q = *checked_pow(p, m, kMaxFieldOrder);
        find_modulus(*d);
        init_reduction(*d);
        d_ = std::move(d);
    }

    /// Builds GF(p^m) with an explicit monic modulus (coefficients low-to-high,
    /// length m+1). The modulus must be irreducible over F_p.
    Field(std::uint32_t p, std::uint32_t m, const std::vector<std::int64_t>& modulus) {
        validate_shape(p, m);
        require(modulus.size() == m + 1, errc::domain, "modulus must have degree m");
        auto d = std::make_shared<detail::FieldData>();
        d->p = p;
        d->m = m;
        d->q = *checked_pow(p, m, kMaxFieldOrder);
        for (std::uint32_t i = 0; i <= m; ++i) d->mod[i] = ((modulus[i] % p) + p) % p;
        require(d->mod[m] == 1, errc::domain, "modulus must be monic");
        require(detail::is_irreducible(d->mod, m, p), errc::domain, "modulus is not irreducible over F_p");
        init_reduction(*d);
        d_ = std::move(d);
    }

    std::uint32_t p() const { return d_->p; }
    std::uint32_t extension_degree() const { return d_->m; }
    std::uint64_t order() const { return d_->q; }

    /// Modulus coefficients c0..cm, low-to-high.
    std::vector<std::int64_t> modulus() const { return {d_->mod.begin(), d_->mod.begin() + d_->m + 1}; }

    bool operator==(const Field& o) const { return d_->same(*o.d_); }
    bool operator!=(const Field& o) const { return !(*this == o); }

    FieldElement zero() const { return {d_, {}}; }
    FieldElement one() const { return from_int(1); }

    /// Embeds an integer residue into the prime subfield.
    FieldElement from_int(std::int64_t v) const {
        std::array<std::int64_t, 4> c{};
        c[0] = ((v % d_->p) + d_->p) % d_->p;
        return {d_, c};
    }

    /// Element from raw coefficients (low-to-high); reduced mod p.
    FieldElement element(const std::vector<std::int64_t>& coeffs) const {
        require(coeffs.size() <= d_->m, errc::domain, "too many coefficients for this field");
        std::array<std::int64_t, 4> c{};
        for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = ((coeffs[i] % d_->p) + d_->p) % d_->p;
        return {d_, c};
    }

    /// Element at position idx in the canonical order: base-p digits of idx,
    /// counted low-to-high. Index 0 is zero, index 1 is one.
    FieldElement element_at(std::uint64_t idx) const {
        require(idx < d_->q, errc::domain, "element index out of range");
        std::array<std::int64_t, 4> c{};
        for (std::uint32_t i = 0; i < d_->m; ++i) {
            c[i] = static_cast<std::int64_t>(idx % d_->p);
            idx /= d_->p;
        }
        return {d_, c};
    }

    std::uint64_t index_of(const FieldElement& a) const {
        require(d_->same(*a.data()), errc::spec_mismatch, "element from a different field");
        return a.index();
    }

    /// True iff the element belongs to this field (same p, m, modulus).
    bool owns(const FieldElement& a) const { return d_->same(*a.data()); }

    /// All p^m elements in canonical order.
    std::vector<FieldElement> enumerate() const {
        require(d_->q <= kMaxFieldOrder, errc::budget_exceeded, "field too large to enumerate");
        std::vector<FieldElement> all;
        all.reserve(d_->q);
        for (std::uint64_t i = 0; i < d_->q; ++i) all.push_back(element_at(i));
        return all;
    }

    /// Serialized spec: `q=p^m;mod=c0,c1,...,cm`.
    std::string spec_string() const {
        std::string s = "q=" + std::to_string(d_->p) + "^" + std::to_string(d_->m) + ";mod=";
        for (std::uint32_t i = 0; i <= d_->m; ++i) {
            if (i) s += ',';
            s += std::to_string(d_->mod[i]);
        }
        return s;
    }

    static Field parse(const std::string& spec) {
        auto semi = spec.find(';');
        require(spec.rfind("q=", 0) == 0 && semi != std::string::npos, errc::parse,
                "field spec must look like q=p^m;mod=c0,...,cm");
        std::string qpart = spec.substr(2, semi - 2);
        std::string modpart = spec.substr(semi + 1);
        require(modpart.rfind("mod=", 0) == 0, errc::parse, "missing mod= part in field spec");
        auto caret = qpart.find('^');
        require(caret != std::string::npos, errc::parse, "q must be written p^m");
        std::uint32_t p = parse_u32(qpart.substr(0, caret));
        std::uint32_t m = parse_u32(qpart.substr(caret + 1));
        std::vector<std::int64_t> mod;
        std::string coeffs = modpart.substr(4);
        std::size_t pos = 0;
        while (pos <= coeffs.size()) {
            auto comma = coeffs.find(',', pos);
            std::string tok = coeffs.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            mod.push_back(static_cast<std::int64_t>(parse_u32(tok)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return Field(p, m, mod);
    }

    /// Parses `c0,c1,...` into an element of this field.
    FieldElement parse_element(const std::string& s) const {
        std::vector<std::int64_t> coeffs;
        std::size_t pos = 0;
        while (pos <= s.size()) {
            auto comma = s.find(',', pos);
            std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            coeffs.push_back(static_cast<std::int64_t>(parse_u32(tok)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        require(coeffs.size() == d_->m, errc::parse, "element needs exactly m coefficients");
        return element(coeffs);
    }

  private:
    friend Field field_of(const FieldElement&);

    explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}

    static void validate_shape(std::uint32_t p, std::uint32_t m) {
        require(is_prime(p), errc::non_prime, "characteristic " + std::to_string(p) + " is not prime");
        require(m >= 1 && m <= 4, errc::domain, "extension degree must be in 1..4");
        require(checked_pow(p, m, kMaxFieldOrder).has_value(), errc::budget_exceeded,
                "p^m exceeds the enumeration budget 2^20");
    }

    static std::uint32_t parse_u32(const std::string& tok) {
        require(!tok.empty(), errc::parse, "empty numeric token");
        std::uint64_t v = 0;
        for (char ch : tok) {
            require(ch >= '0' && ch <= '9', errc::parse, "bad numeric token '" + tok + "'");
            v = v * 10 + static_cast<std::uint64_t>(ch - '0');
            require(v <= kMaxFieldOrder, errc::parse, "numeric token out of range");
        }
        return static_cast<std::uint32_t>(v);
    }

    // Lexicographically smallest monic irreducible: scan coefficient tuples
    // (c0,...,c(m-1)) in lex order, c0 compared first. The counter j holds
    // c0 in its most significant base-p digit.
    static void find_modulus(detail::FieldData& d) {
        const std::uint64_t total = d.q;
        for (std::uint64_t j = 0; j < total; ++j) {
            std::array<std::int64_t, 5> f{};
            f[d.m] = 1;
            std::uint64_t rest = j;
            for (std::int32_t i = static_cast<std::int32_t>(d.m) - 1; i >= 0; --i) {
                f[i] = static_cast<std::int64_t>(rest % d.p);
                rest /= d.p;
            }
            if (detail::is_irreducible(f, d.m, d.p)) {
                d.mod = f;
                return;
            }
        }
        raise(errc::no_irreducible_found, "no irreducible modulus found (cannot happen for valid inputs)");
    }

    static void init_reduction(detail::FieldData& d) {
        if (d.m < 2) return;
        const std::int64_t p = d.p;
        // x^m = -(c0 + ... + c(m-1) x^(m-1))
        std::array<std::int64_t, 4> r{};
        for (std::uint32_t i = 0; i < d.m; ++i) r[i] = (p - d.mod[i]) % p;
        d.red[0] = r;
        for (std::uint32_t k = 1; k + 1 < d.m; ++k) {
            std::array<std::int64_t, 4> s{};
            std::int64_t top = r[d.m - 1];
            for (std::uint32_t i = d.m - 1; i >= 1; --i) s[i] = r[i - 1];
            s[0] = 0;
            for (std::uint32_t i = 0; i < d.m; ++i) s[i] = (s[i] + top * d.red[0][i]) % p;
            d.red[k] = s;
            r = s;
        }
    }

    std::shared_ptr<const detail::FieldData> d_;
};

/// The field an element belongs to.
inline Field field_of(const FieldElement& a) { return Field(a.d_); }

/// Spec-level alias: builds the canonical GF(p^m).
inline Field field_build(std::uint32_t p, std::uint32_t m) { return Field(p, m); }

inline std::vector<FieldElement> enumerate_field(const Field& f) { return f.enumerate(); }

/// True iff a is zero or a^((q-1)/2) = 1. Odd characteristic only.
inline bool is_square(const FieldElement& a) {
    const auto* d = a.data();
    require(d->p != 2, errc::even_char_unsupported, "quadratic character needs odd characteristic");
    if (a.is_zero()) return true;
    FieldElement chi = a.pow(static_cast<std::int64_t>((d->q - 1) / 2));
    return chi == a.pow(0);
}

/// A square root of a, if one exists. Exhaustive scan for q <= 2^12, else the
/// Tonelli-Shanks exponent trick. Deterministic.
inline std::optional<FieldElement> sqrt(const FieldElement& a) {
    const auto* d = a.data();
    require(d->p != 2, errc::even_char_unsupported, "sqrt needs odd characteristic");
    const Field f = field_of(a);
    if (a.is_zero()) return f.zero();
    if (!is_square(a)) return std::nullopt;
    if (d->q <= 4096) {
        for (std::uint64_t i = 0; i < d->q; ++i) {
            FieldElement r = f.element_at(i);
            if (r * r == a) return r;
        }
        return std::nullopt;  // unreachable: a passed the character test
    }
    if (d->q % 4 == 3) return a.pow(static_cast<std::int64_t>((d->q + 1) / 4));
    // Tonelli-Shanks: q - 1 = s * 2^e with s odd.
    std::uint64_t s = d->q - 1;
    std::uint32_t e = 0;
    while (s % 2 == 0) {
        s /= 2;
        ++e;
    }
    FieldElement z = f.one();
    for (std::uint64_t i = 2; i < d->q; ++i) {
        z = f.element_at(i);
        if (!is_square(z)) break;
    }
    FieldElement x = a.pow(static_cast<std::int64_t>((s + 1) / 2));
    FieldElement b = a.pow(static_cast<std::int64_t>(s));
    FieldElement g = z.pow(static_cast<std::int64_t>(s));
    std::uint32_t r = e;
    while (true) {
        FieldElement t = b;
        std::uint32_t m0 = 0;
        while (!(t == f.one()) && m0 < r) {
            t = t * t;
            ++m0;
        }
        if (m0 == 0) return x;
        FieldElement gs = g;
        for (std::uint32_t i = 0; i + m0 + 1 < r; ++i) gs = gs * gs;
        x = x * gs;
        g = gs * gs;
        b = b * g;
        r = m0;
    }
}

}  // namespace agc
