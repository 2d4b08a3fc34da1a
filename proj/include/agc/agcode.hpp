#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "code.hpp"
#include "elliptic.hpp"
#include "errors.hpp"
#include "numeric.hpp"

namespace agc {

/// Divisor m * P on the two carriers with explicit one-point Riemann-Roch
/// bases: m * P_inf on the projective line, m * O_E on an elliptic curve.
class OnePointDivisor {
  public:
    enum class Carrier { projective_line, elliptic };

    static OnePointDivisor projective_line(Field field, long long m) {
        require(m >= 0, errc::domain, "divisor multiplicity must be >= 0");
        return OnePointDivisor(Carrier::projective_line, std::move(field), std::nullopt, m);
    }

    static OnePointDivisor elliptic(WeierstrassCurve curve, long long m) {
        require(m >= 0, errc::domain, "divisor multiplicity must be >= 0");
        Field f = curve.field();
        return OnePointDivisor(Carrier::elliptic, std::move(f), std::move(curve), m);
    }

    Carrier carrier() const { return carrier_; }
    const Field& field() const { return field_; }
    const WeierstrassCurve& curve() const {
        require(curve_.has_value(), errc::internal, "no curve on a projective-line divisor");
        return *curve_;
    }
    long long multiplicity() const { return m_; }
    long long degree() const { return m_; }
    long long genus() const { return carrier_ == Carrier::projective_line ? 0 : 1; }

  private:
    OnePointDivisor(Carrier c, Field f, std::optional<WeierstrassCurve> e, long long m)
        : carrier_(c), field_(std::move(f)), curve_(std::move(e)), m_(m) {}

    Carrier carrier_;
    Field field_;
    std::optional<WeierstrassCurve> curve_;
    long long m_;
};

/// Monomial basis of L(m * P): exponent pairs (i, j) meaning x^i y^j, with
/// j = 0 throughout on the projective line. On an elliptic curve x has pole
/// order 2 and y pole order 3 at O_E, so the basis is ordered by pole order
/// 2i + 3j with j <= 1.
struct RRBasis {
    std::vector<std::pair<int, int>> monomials;
    std::size_t dim;
};

inline RRBasis rr_basis(const OnePointDivisor& divisor) {
    RRBasis basis;
    const long long m = divisor.multiplicity();
    if (divisor.carrier() == OnePointDivisor::Carrier::projective_line) {
        for (long long i = 0; i <= m; ++i) basis.monomials.emplace_back(static_cast<int>(i), 0);
    } else {
        basis.monomials.emplace_back(0, 0);
        for (long long w = 2; w <= m; ++w) {
            if (w % 2 == 0)
                basis.monomials.emplace_back(static_cast<int>(w / 2), 0);
            else
                basis.monomials.emplace_back(static_cast<int>((w - 3) / 2), 1);
        }
    }
    basis.dim = basis.monomials.size();
    return basis;
}

namespace detail {

inline FieldElement eval_monomial(const Field& f, std::pair<int, int> mono, const FieldElement& x,
                                  const FieldElement& y) {
    FieldElement v = f.one();
    for (int i = 0; i < mono.first; ++i) v = v * x;
    for (int j = 0; j < mono.second; ++j) v = v * y;
    return v;
}

}  // namespace detail

/// Evaluation code on the projective line: rows evaluate the basis of
/// L(m * P_inf) at the given affine points. Coincides with the
/// Reed-Solomon construction for m = k - 1.
inline LinearCode ag_code(const OnePointDivisor& divisor, const std::vector<FieldElement>& alphas) {
    require(divisor.carrier() == OnePointDivisor::Carrier::projective_line, errc::domain,
            "this overload takes a projective-line divisor");
    const Field& f = divisor.field();
    const std::size_t n = alphas.size();
    require(divisor.degree() < static_cast<long long>(n), errc::degree_too_large,
            "AG codes require deg G < n");
    for (std::size_t i = 0; i < n; ++i) {
        require(f.owns(alphas[i]), errc::spec_mismatch, "evaluation point from a different field");
        for (std::size_t j = i + 1; j < n; ++j)
            require(alphas[i] != alphas[j], errc::duplicate_point, "evaluation points must be distinct");
    }
    RRBasis basis = rr_basis(divisor);
    Matrix gen;
    gen.reserve(basis.dim);
    for (auto mono : basis.monomials) {
        Word row;
        row.reserve(n);
        for (const auto& a : alphas) row.push_back(detail::eval_monomial(f, mono, a, f.zero()));
        gen.push_back(std::move(row));
    }
    return LinearCode(f, std::move(gen));
}

/// Evaluation code on an elliptic curve: rows evaluate the basis of
/// L(m * O_E) at affine rational points (support avoidance is structural:
/// the basis functions' only pole is O_E).
inline LinearCode ag_code(const OnePointDivisor& divisor, const std::vector<ECPoint>& points) {
    require(divisor.carrier() == OnePointDivisor::Carrier::elliptic, errc::domain,
            "this overload takes an elliptic divisor");
    const Field& f = divisor.field();
    const WeierstrassCurve& E = divisor.curve();
    const std::size_t n = points.size();
    require(divisor.degree() < static_cast<long long>(n), errc::degree_too_large,
            "AG codes require deg G < n");
    for (std::size_t i = 0; i < n; ++i) {
        require(!points[i].at_infinity, errc::point_at_infinity_in_eval_set,
                "evaluation points must avoid O_E");
        require(E.contains(points[i]), errc::point_not_on_curve, "evaluation point is not on the curve");
        for (std::size_t j = i + 1; j < n; ++j)
            require(points[i] != points[j], errc::duplicate_point, "evaluation points must be distinct");
    }
    RRBasis basis = rr_basis(divisor);
    Matrix gen;
    gen.reserve(basis.dim);
    for (auto mono : basis.monomials) {
        Word row;
        row.reserve(n);
        for (const auto& P : points) row.push_back(detail::eval_monomial(f, mono, P.x, P.y));
        gen.push_back(std::move(row));
    }
    return LinearCode(f, std::move(gen));
}

/// The full evaluation set in canonical order: every field element for the
/// projective line, every affine rational point for an elliptic curve.
inline LinearCode ag_code_all_points(const OnePointDivisor& divisor) {
    if (divisor.carrier() == OnePointDivisor::Carrier::projective_line)
        return ag_code(divisor, divisor.field().enumerate());
    std::vector<ECPoint> pts;
    for (auto& P : enumerate_points(divisor.curve()))
        if (!P.at_infinity) pts.push_back(std::move(P));
    return ag_code(divisor, pts);
}

/// Parameters with guarantee flags: k is exact (the evaluation map is
/// injective for deg G < n); d is exact when the message space fits the
/// brute-force budget and otherwise the guaranteed bound n - deg G.
struct AgParams {
    std::size_t n;
    std::size_t k;
    long long d;
    bool d_exact;
    long long genus;
    long long deg_g;

    CodeParams to_code_params(std::uint64_t q) const { return CodeParams(n, k, d, d_exact, q); }
};

inline AgParams ag_params_of(const OnePointDivisor& divisor, const LinearCode& code) {
    AgParams p{};
    p.n = code.n;
    p.k = code.k;
    p.genus = divisor.genus();
    p.deg_g = divisor.degree();
    auto budget = checked_pow(code.field.order(), static_cast<std::uint32_t>(code.k), std::uint64_t(1) << 24);
    if (budget.has_value()) {
        p.d = min_distance_bruteforce(code);
        p.d_exact = true;
    } else {
        p.d = static_cast<long long>(code.n) - divisor.degree();
        p.d_exact = false;
    }
    return p;
}

inline AgParams ag_params(const OnePointDivisor& divisor, const std::vector<FieldElement>& alphas) {
    return ag_params_of(divisor, ag_code(divisor, alphas));
}

inline AgParams ag_params(const OnePointDivisor& divisor, const std::vector<ECPoint>& points) {
    return ag_params_of(divisor, ag_code(divisor, points));
}

inline AgParams ag_params_all_points(const OnePointDivisor& divisor) {
    return ag_params_of(divisor, ag_code_all_points(divisor));
}

/// g = (d-1)(d-2)/2 for a smooth plane curve of degree d.
inline long long genus_smooth_plane(long long d) {
    require(d >= 1, errc::domain, "degree must be >= 1");
    return (d - 1) * (d - 2) / 2;
}

/// floor(q + 1 + 2g sqrt(q)), computed exactly in integers.
inline std::uint64_t weil_bound(std::uint64_t q, std::uint64_t g) {
    require(q >= 2, errc::domain, "field order must be >= 2");
    return q + 1 + isqrt(4 * g * g * q);
}

/// Solves (2 g_X - 2) = degree * (2 g_base - 2) + sum (e - 1) for g_X.
/// Ramification data is trusted input; inconsistent data (odd right-hand
/// side, negative genus) is rejected.
inline long long riemann_hurwitz_genus(long long degree, long long g_base,
                                       const std::vector<long long>& ramification_indices) {
    require(degree >= 1, errc::domain, "map degree must be >= 1");
    require(g_base >= 0, errc::domain, "base genus must be >= 0");
    long long rhs = degree * (2 * g_base - 2);
    for (long long e : ramification_indices) {
        require(e >= 2, errc::domain, "ramification indices must be >= 2");
        rhs += e - 1;
    }
    require(rhs % 2 == 0, errc::inconsistent_ramification,
            "ramification contribution has the wrong parity");
    long long g = rhs / 2 + 1;
    require(g >= 0, errc::inconsistent_ramification, "data implies a negative genus");
    return g;
}

}  // namespace agc
