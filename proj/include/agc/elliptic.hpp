#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace agc {

/// Point-enumeration budget: q <= 2^16.
inline constexpr std::uint64_t kMaxCurveFieldOrder = std::uint64_t(1) << 16;

/// Projective point of a short Weierstrass curve: affine (x, y) or the
/// neutral point at infinity O_E.
struct ECPoint {
    bool at_infinity;
    FieldElement x;
    FieldElement y;

    static ECPoint infinity(const Field& f) { return {true, f.zero(), f.zero()}; }
    static ECPoint affine(FieldElement px, FieldElement py) { return {false, std::move(px), std::move(py)}; }

    bool operator==(const ECPoint& o) const {
        if (at_infinity || o.at_infinity) return at_infinity == o.at_infinity;
        return x == o.x && y == o.y;
    }
    bool operator!=(const ECPoint& o) const { return !(*this == o); }

    std::string str() const { return at_infinity ? "O" : "(" + x.str() + "," + y.str() + ")"; }
};

/// y^2 = x^3 + Ax + B over GF(q), characteristic >= 5. Smoothness
/// (4A^3 + 27B^2 != 0) is enforced at construction.
class WeierstrassCurve {
  public:
    WeierstrassCurve(Field field, FieldElement A, FieldElement B)
        : field_(std::move(field)), A_(std::move(A)), B_(std::move(B)) {
        require(field_.p() != 2 && field_.p() != 3, errc::bad_characteristic,
                "curves require characteristic >= 5");
        require(field_.owns(A_) && field_.owns(B_), errc::spec_mismatch,
                "curve coefficients must live in the curve's field");
        FieldElement disc = field_.from_int(4) * A_ * A_ * A_ + field_.from_int(27) * B_ * B_;
        require(!disc.is_zero(), errc::singular_curve, "4A^3 + 27B^2 = 0: the curve is singular");
    }

    const Field& field() const { return field_; }
    const FieldElement& A() const { return A_; }
    const FieldElement& B() const { return B_; }

    /// j = 1728 * 4A^3 / (4A^3 + 27B^2); the denominator is nonzero by the
    /// smoothness invariant.
    FieldElement j_invariant() const {
        FieldElement fourA3 = field_.from_int(4) * A_ * A_ * A_;
        FieldElement denom = fourA3 + field_.from_int(27) * B_ * B_;
        return field_.from_int(1728) * fourA3 / denom;
    }

    FieldElement rhs(const FieldElement& x) const { return x * x * x + A_ * x + B_; }

    bool contains(const ECPoint& P) const {
        if (P.at_infinity) return true;
        if (!field_.owns(P.x) || !field_.owns(P.y)) return false;
        return P.y * P.y == rhs(P.x);
    }

    ECPoint neg(const ECPoint& P) const {
        check_on_curve(P);
        if (P.at_infinity) return P;
        return ECPoint::affine(P.x, -P.y);
    }

    /// Chord-and-tangent addition. Vertical chords (x equal, y opposite)
    /// return O_E; doubling uses the tangent slope (3x^2 + A) / 2y.
    ECPoint add(const ECPoint& P, const ECPoint& Q) const {
        check_on_curve(P);
        check_on_curve(Q);
        if (P.at_infinity) return Q;
        if (Q.at_infinity) return P;
        FieldElement lambda = field_.zero();
        if (P.x == Q.x) {
            if (P.y == -Q.y) return ECPoint::infinity(field_);
            lambda = (field_.from_int(3) * P.x * P.x + A_) / (field_.from_int(2) * P.y);
        } else {
            lambda = (Q.y - P.y) / (Q.x - P.x);
        }
        FieldElement x3 = lambda * lambda - P.x - Q.x;
        FieldElement y3 = lambda * (P.x - x3) - P.y;
        return ECPoint::affine(x3, y3);
    }

    ECPoint scalar_mul(std::int64_t n, const ECPoint& P) const {
        check_on_curve(P);
        if (n < 0) return scalar_mul(-n, neg(P));
        ECPoint acc = ECPoint::infinity(field_);
        ECPoint base = P;
        std::uint64_t e = static_cast<std::uint64_t>(n);
        while (e > 0) {
            if (e & 1) acc = add(acc, base);
            if (e >>= 1) base = add(base, base);
        }
        return acc;
    }

    /// `E[q=...;A=...;B=...]` with field-element syntax for A and B.
    std::string str() const {
        std::string qs = field_.extension_degree() == 1
                             ? std::to_string(field_.p())
                             : std::to_string(field_.p()) + "^" + std::to_string(field_.extension_degree());
        return "E[q=" + qs + ";A=" + A_.str() + ";B=" + B_.str() + "]";
    }

  private:
    void check_on_curve(const ECPoint& P) const {
        require(contains(P), errc::point_not_on_curve, "point does not satisfy the curve equation");
    }

    Field field_;
    FieldElement A_;
    FieldElement B_;
};

inline WeierstrassCurve curve_new(const Field& field, const FieldElement& A, const FieldElement& B) {
    return WeierstrassCurve(field, A, B);
}

namespace detail {

// counts[i] = #{ y in F_q : y^2 = element_at(i) }; one pass over the field.
inline std::vector<std::uint8_t> square_root_counts(const Field& f) {
    std::vector<std::uint8_t> counts(f.order(), 0);
    for (std::uint64_t i = 0; i < f.order(); ++i) {
        FieldElement y = f.element_at(i);
        ++counts[(y * y).index()];
    }
    return counts;
}

}  // namespace detail

/// #E(F_q) without materializing points.
inline std::uint64_t point_count(const WeierstrassCurve& E) {
    const Field& f = E.field();
    require(f.order() <= kMaxCurveFieldOrder, errc::budget_exceeded, "point counting needs q <= 2^16");
    auto counts = detail::square_root_counts(f);
    std::uint64_t n = 1;  // O_E
    for (std::uint64_t i = 0; i < f.order(); ++i) n += counts[E.rhs(f.element_at(i)).index()];
    return n;
}

/// All rational points: affine points ordered by (x, y) enumeration index,
/// then O_E. The count obeys the Weil bound |N - q - 1| <= 2 sqrt(q).
inline std::vector<ECPoint> enumerate_points(const WeierstrassCurve& E) {
    const Field& f = E.field();
    require(f.order() <= kMaxCurveFieldOrder, errc::budget_exceeded, "point enumeration needs q <= 2^16");
    std::vector<std::vector<std::uint32_t>> roots(f.order());
    for (std::uint64_t i = 0; i < f.order(); ++i) {
        FieldElement y = f.element_at(i);
        roots[(y * y).index()].push_back(static_cast<std::uint32_t>(i));
    }
    std::vector<ECPoint> pts;
    for (std::uint64_t i = 0; i < f.order(); ++i) {
        FieldElement x = f.element_at(i);
        for (std::uint32_t yi : roots[E.rhs(x).index()]) pts.push_back(ECPoint::affine(x, f.element_at(yi)));
    }
    pts.push_back(ECPoint::infinity(f));
    return pts;
}

/// E(F_q) as Z/n1 x Z/n2 with n1 | n2 and n1 * n2 = N.
struct GroupStructure {
    std::uint64_t n1;
    std::uint64_t n2;
    std::uint64_t N;
};

inline GroupStructure group_structure(const WeierstrassCurve& E) {
    require(E.field().order() <= (std::uint64_t(1) << 12), errc::budget_exceeded,
            "group structure needs q <= 2^12");
    auto pts = enumerate_points(E);
    const std::uint64_t N = pts.size();
    std::vector<std::uint64_t> divisors;
    for (std::uint64_t d = 1; d <= N; ++d)
        if (N % d == 0) divisors.push_back(d);
    // The group is abelian of rank <= 2, so its exponent is the largest
    // element order; element order = least divisor d of N with dP = O.
    std::uint64_t exponent = 1;
    for (const auto& P : pts) {
        if (P.at_infinity) continue;
        for (std::uint64_t d : divisors) {
            if (E.scalar_mul(static_cast<std::int64_t>(d), P).at_infinity) {
                if (d > exponent) exponent = d;
                break;
            }
        }
    }
    GroupStructure g{N / exponent, exponent, N};
    require(g.n1 * g.n2 == N && g.n2 % g.n1 == 0, errc::internal, "group structure inconsistency");
    return g;
}

/// #{ P in E(F_q) : mP = O }. Divides m^2, with equality iff the full
/// m-torsion is rational.
inline std::uint64_t m_torsion_count(const WeierstrassCurve& E, std::uint64_t m) {
    require(m >= 1, errc::domain, "torsion order must be >= 1");
    auto pts = enumerate_points(E);
    std::uint64_t c = 0;
    for (const auto& P : pts)
        if (E.scalar_mul(static_cast<std::int64_t>(m), P).at_infinity) ++c;
    return c;
}

/// Supersingular iff p divides the Frobenius trace t = q + 1 - N
/// (the standard criterion for p >= 5).
inline bool is_supersingular(const WeierstrassCurve& E) {
    const std::uint64_t q = E.field().order();
    std::int64_t t = static_cast<std::int64_t>(q) + 1 - static_cast<std::int64_t>(point_count(E));
    return t % static_cast<std::int64_t>(E.field().p()) == 0;
}

/// The degree-2 isogeny between y^2 = x^3 + ax^2 + bx and
/// y^2 = x^3 - 2ax^2 + (a^2 - 4b)x given by
/// (x, y) -> (y^2/x^2, y(b - x^2)/x^2), with kernel { O, (0,0) }.
class TwoIsogeny {
  public:
    TwoIsogeny(Field field, FieldElement a, FieldElement b)
        : field_(std::move(field)), a_(std::move(a)), b_(std::move(b)) {
        require(field_.p() != 2 && field_.p() != 3, errc::bad_characteristic,
                "curves require characteristic >= 5");
        require(!b_.is_zero() && a_ * a_ != field_.from_int(4) * b_, errc::singular_input,
                "need b != 0 and a^2 - 4b != 0");
    }

    const Field& field() const { return field_; }
    const FieldElement& a() const { return a_; }
    const FieldElement& b() const { return b_; }
    FieldElement target_a() const { return -(field_.from_int(2) * a_); }
    FieldElement target_b() const { return a_ * a_ - field_.from_int(4) * b_; }

    FieldElement source_rhs(const FieldElement& x) const { return x * (x * x + a_ * x + b_); }
    FieldElement target_rhs(const FieldElement& x) const {
        return x * (x * x + target_a() * x + target_b());
    }

    bool on_source(const ECPoint& P) const { return P.at_infinity || P.y * P.y == source_rhs(P.x); }
    bool on_target(const ECPoint& P) const { return P.at_infinity || P.y * P.y == target_rhs(P.x); }

    ECPoint apply(const ECPoint& P) const {
        require(on_source(P), errc::point_not_on_curve, "point is not on the isogeny's source curve");
        if (P.at_infinity || P.x.is_zero()) return ECPoint::infinity(field_);
        FieldElement x2 = P.x * P.x;
        FieldElement inv_x2 = x2.inv();
        return ECPoint::affine(P.y * P.y * inv_x2, P.y * (b_ - x2) * inv_x2);
    }

    /// All rational points of the source curve (affine by (x, y) order, then O).
    std::vector<ECPoint> source_points() const {
        require(field_.order() <= kMaxCurveFieldOrder, errc::budget_exceeded,
                "point enumeration needs q <= 2^16");
        std::vector<std::vector<std::uint32_t>> roots(field_.order());
        for (std::uint64_t i = 0; i < field_.order(); ++i) {
            FieldElement y = field_.element_at(i);
            roots[(y * y).index()].push_back(static_cast<std::uint32_t>(i));
        }
        std::vector<ECPoint> pts;
        for (std::uint64_t i = 0; i < field_.order(); ++i) {
            FieldElement x = field_.element_at(i);
            for (std::uint32_t yi : roots[source_rhs(x).index()])
                pts.push_back(ECPoint::affine(x, field_.element_at(yi)));
        }
        pts.push_back(ECPoint::infinity(field_));
        return pts;
    }

  private:
    Field field_;
    FieldElement a_;
    FieldElement b_;
};

inline TwoIsogeny two_isogeny(const Field& field, const FieldElement& a, const FieldElement& b) {
    return TwoIsogeny(field, a, b);
}

/// E^{(p)}: coefficients raised to the p-th power.
inline WeierstrassCurve frobenius_curve(const WeierstrassCurve& E) {
    std::int64_t p = E.field().p();
    return WeierstrassCurve(E.field(), E.A().pow(p), E.B().pow(p));
}

/// (x, y) -> (x^p, y^p), landing on E^{(p)}; the identity map on E(F_p).
inline ECPoint frobenius_point(const WeierstrassCurve& E, const ECPoint& P) {
    require(E.contains(P), errc::point_not_on_curve, "point does not satisfy the curve equation");
    if (P.at_infinity) return P;
    std::int64_t p = E.field().p();
    return ECPoint::affine(P.x.pow(p), P.y.pow(p));
}

/// A short Weierstrass curve with the requested j-invariant: y^2 = x^3 + 1
/// for j = 0, y^2 = x^3 + x for j = 1728, and otherwise
/// A = 3j(1728 - j), B = 2j(1728 - j)^2.
inline WeierstrassCurve curve_from_j(const Field& field, const FieldElement& j0) {
    require(field.owns(j0), errc::spec_mismatch, "j-invariant must live in the given field");
    FieldElement j1728 = field.from_int(1728);
    if (j0.is_zero()) return WeierstrassCurve(field, field.zero(), field.one());
    if (j0 == j1728) return WeierstrassCurve(field, field.one(), field.zero());
    FieldElement t = j1728 - j0;
    FieldElement A = field.from_int(3) * j0 * t;
    FieldElement B = field.from_int(2) * j0 * t * t;
    return WeierstrassCurve(field, A, B);
}

/// Parses `E[q=...;A=...;B=...]`. The field is the canonical GF(p^m); q may
/// be written `p^m` or as a plain prime power. Elements may omit trailing
/// zero coefficients.
inline WeierstrassCurve parse_curve(const std::string& s) {
    require(s.size() >= 4 && s.rfind("E[", 0) == 0 && s.back() == ']', errc::parse,
            "curve spec must look like E[q=...;A=...;B=...]");
    std::string body = s.substr(2, s.size() - 3);
    std::string qs, as, bs;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        auto semi = body.find(';', pos);
        std::string seg = body.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        auto eq = seg.find('=');
        require(eq != std::string::npos, errc::parse, "curve spec segments must be key=value");
        std::string key = seg.substr(0, eq), val = seg.substr(eq + 1);
        if (key == "q")
            qs = val;
        else if (key == "A")
            as = val;
        else if (key == "B")
            bs = val;
        else
            raise(errc::parse, "unknown curve spec key '" + key + "'");
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    require(!qs.empty() && !as.empty() && !bs.empty(), errc::parse, "curve spec needs q, A and B");

    std::uint32_t p = 0, m = 0;
    auto caret = qs.find('^');
    auto to_u32 = [](const std::string& tok) {
        require(!tok.empty(), errc::parse, "empty numeric token");
        std::uint64_t v = 0;
        for (char ch : tok) {
            require(ch >= '0' && ch <= '9', errc::parse, "bad numeric token '" + tok + "'");
            v = v * 10 + static_cast<std::uint64_t>(ch - '0');
            require(v <= kMaxFieldOrder, errc::parse, "numeric token out of range");
        }
        return static_cast<std::uint32_t>(v);
    };
    if (caret != std::string::npos) {
        p = to_u32(qs.substr(0, caret));
        m = to_u32(qs.substr(caret + 1));
    } else {
        factor_prime_power(to_u32(qs), p, m);
    }
    Field field(p, m);
    auto parse_elem = [&](const std::string& val) {
        std::vector<std::int64_t> coeffs;
        std::size_t cpos = 0;
        while (cpos <= val.size()) {
            auto comma = val.find(',', cpos);
            std::string tok = val.substr(cpos, comma == std::string::npos ? std::string::npos : comma - cpos);
            coeffs.push_back(static_cast<std::int64_t>(to_u32(tok)));
            if (comma == std::string::npos) break;
            cpos = comma + 1;
        }
        require(coeffs.size() <= field.extension_degree(), errc::parse,
                "element has more coefficients than the extension degree");
        return field.element(coeffs);
    };
    return WeierstrassCurve(field, parse_elem(as), parse_elem(bs));
}

}  // namespace agc
