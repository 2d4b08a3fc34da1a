#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "agcode.hpp"
#include "elliptic.hpp"
#include "errors.hpp"
#include "numeric.hpp"
#include "rational.hpp"

namespace agc {

/// Numeric profile of the covering X_0(ell) -> X_0(1): degree ell + 1,
/// `nu2` points of ramification index 2 (over j = 1728), `nu3` points of
/// index 3 (over j = 0), two cusps with indices summing to ell + 1.
struct X0Data {
    long long ell;
    long long genus;
    long long degree;
    long long nu2;
    long long nu3;
    std::pair<long long, long long> cusp_indices;
};

namespace detail {
inline void check_ell(long long ell) {
    require(ell > 0 && is_prime(static_cast<std::uint64_t>(ell)), errc::non_prime,
            "ell must be a prime number");
    require(ell > 3, errc::ell_too_small, "the genus formula requires ell > 3");
}
}  // namespace detail

/// Genus of X_0(ell) for prime ell > 3, by the four-case closed formula
/// indexed by ell mod 12.
inline long long genus_x0(long long ell) {
    detail::check_ell(ell);
    switch (ell % 12) {
        case 1: return (ell - 1) / 12 - 1;
        case 5: return (ell - 5) / 12;
        case 7: return (ell - 7) / 12;
        default: return (ell + 1) / 12;  // ell = 11 mod 12
    }
}

/// Ramification profile of X_0(ell) -> X_0(1), with the genus recomputed
/// through Riemann-Hurwitz as a consistency check. The two cusps carry
/// indices (ell, 1): only their sum ell + 1 and total contribution ell - 1
/// are pinned, and this is the standard width assignment.
inline X0Data x0_ramification(long long ell) {
    detail::check_ell(ell);
    X0Data d{};
    d.ell = ell;
    d.degree = ell + 1;
    d.nu2 = ell % 4 == 1 ? (ell - 1) / 2 : (ell + 1) / 2;
    d.nu3 = ell % 3 == 1 ? (ell - 1) / 3 : (ell + 1) / 3;
    d.cusp_indices = {ell, 1};
    std::vector<long long> ram(static_cast<std::size_t>(d.nu2), 2);
    ram.insert(ram.end(), static_cast<std::size_t>(d.nu3), 3);
    ram.push_back(ell);  // the index-1 cusp contributes nothing
    d.genus = riemann_hurwitz_genus(d.degree, 0, ram);
    require(d.genus == genus_x0(ell), errc::internal,
            "Riemann-Hurwitz reconstruction disagrees with the genus formula");
    return d;
}

/// Supersingular j-invariants in F_{p^2}, in field-enumeration order: for
/// every j build a curve with that j-invariant and test p | q + 1 - N by
/// counting points. Counts F_p-bar isomorphism classes directly.
inline std::vector<FieldElement> supersingular_j_list(std::uint32_t p) {
    require(is_prime(p), errc::non_prime, "p must be prime");
    require(p >= 5, errc::bad_characteristic, "supersingular scan requires p >= 5");
    require(p <= 100, errc::budget_exceeded, "supersingular scan is budgeted to p <= 100");
    Field f(p, 2);
    const std::uint64_t q = f.order();
    auto counts = detail::square_root_counts(f);
    std::vector<FieldElement> xs, x3s;
    xs.reserve(q);
    x3s.reserve(q);
    for (std::uint64_t i = 0; i < q; ++i) {
        FieldElement x = f.element_at(i);
        xs.push_back(x);
        x3s.push_back(x * x * x);
    }
    std::vector<FieldElement> js;
    for (std::uint64_t ji = 0; ji < q; ++ji) {
        FieldElement j = f.element_at(ji);
        WeierstrassCurve E = curve_from_j(f, j);
        std::uint64_t n = 1;
        for (std::uint64_t i = 0; i < q; ++i) n += counts[(x3s[i] + E.A() * xs[i] + E.B()).index()];
        std::int64_t t = static_cast<std::int64_t>(q) + 1 - static_cast<std::int64_t>(n);
        if (t % static_cast<std::int64_t>(p) == 0) js.push_back(j);
    }
    return js;
}

/// Number of supersingular classes over F_p-bar; equals
/// floor(p/12) + {0,1,1,2} according to p mod 12.
inline std::size_t count_supersingular_classes(std::uint32_t p) { return supersingular_j_list(p).size(); }

/// The closed form the brute-force count must reproduce.
inline std::size_t supersingular_count_formula(std::uint32_t p) {
    std::size_t base = p / 12;
    switch (p % 12) {
        case 1: return base;
        case 5:
        case 7: return base + 1;
        default: return base + 2;  // p = 11 mod 12
    }
}

/// Exact lower bound (ell + 1)(p - 1)/12 on #X_0(ell)(F_{p^2}).
inline Rational ss_lower_bound(std::uint32_t p, long long ell) {
    require(is_prime(p), errc::non_prime, "p must be prime");
    require(p >= 5, errc::bad_characteristic, "the bound requires p >= 5");
    detail::check_ell(ell);
    require(static_cast<long long>(p) != ell, errc::equal_primes, "p and ell must be distinct primes");
    return Rational((ell + 1) * (static_cast<long long>(p) - 1), 12);
}

/// One row of the ratio table converging to sqrt(q) - 1.
struct IharaRow {
    long long ell;
    long long genus;
    Rational lower_bound;
    Rational ratio;
};

/// For primes ell = 11 mod 12 the genus is (ell + 1)/12, so the ratio
/// lower_bound / genus collapses to exactly p - 1 = sqrt(p^2) - 1 per row.
inline std::vector<IharaRow> ihara_table(std::uint32_t p, const std::vector<long long>& ells) {
    std::vector<IharaRow> rows;
    rows.reserve(ells.size());
    for (long long ell : ells) {
        Rational bound = ss_lower_bound(p, ell);
        require(ell % 12 == 11, errc::congruence_violation, "table rows require ell = 11 mod 12");
        IharaRow row{ell, genus_x0(ell), bound, bound / Rational(genus_x0(ell))};
        rows.push_back(row);
    }
    return rows;
}

inline std::string ihara_csv(const std::vector<IharaRow>& rows) {
    std::string out = "ell,genus,lower_bound,ratio\n";
    for (const auto& r : rows)
        out += std::to_string(r.ell) + "," + std::to_string(r.genus) + "," + r.lower_bound.str() + "," +
               r.ratio.str() + "\n";
    return out;
}

}  // namespace agc
