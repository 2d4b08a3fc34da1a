#include <catch_amalgamated.hpp>

#include <utility>
#include <vector>

#include <agc/agcode.hpp>

#include "helpers.hpp"

using agc::ECPoint;
using agc::Field;
using agc::FieldElement;
using agc::OnePointDivisor;
using agc::WeierstrassCurve;

namespace {

std::vector<ECPoint> affine_points(const WeierstrassCurve& E) {
    std::vector<ECPoint> pts;
    for (auto& P : agc::enumerate_points(E))
        if (!P.at_infinity) pts.push_back(std::move(P));
    return pts;
}

}  // namespace

TEST_CASE("one-point Riemann-Roch bases") {
    Field f7(7, 1);
    WeierstrassCurve E(f7, f7.one(), f7.one());
    SECTION("projective line: 1, x, ..., x^m") {
        for (long long m = 0; m <= 30; ++m) {
            auto b = agc::rr_basis(OnePointDivisor::projective_line(f7, m));
            REQUIRE(b.dim == static_cast<std::size_t>(m + 1));
            REQUIRE(b.monomials.front() == std::make_pair(0, 0));
            REQUIRE(b.monomials.back() == std::make_pair(static_cast<int>(m), 0));
        }
    }
    SECTION("elliptic: dim = m for m >= 1, dim = 1 at m = 0") {
        REQUIRE(agc::rr_basis(OnePointDivisor::elliptic(E, 0)).monomials ==
                std::vector<std::pair<int, int>>{{0, 0}});
        for (long long m = 1; m <= 30; ++m)
            REQUIRE(agc::rr_basis(OnePointDivisor::elliptic(E, m)).dim == static_cast<std::size_t>(m));
    }
    SECTION("stated monomial lists") {
        REQUIRE(agc::rr_basis(OnePointDivisor::elliptic(E, 3)).monomials ==
                std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}});
        REQUIRE(agc::rr_basis(OnePointDivisor::elliptic(E, 5)).monomials ==
                std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}});
    }
    SECTION("pole orders 2i + 3j never exceed m and are pairwise distinct") {
        for (long long m = 1; m <= 30; ++m) {
            auto b = agc::rr_basis(OnePointDivisor::elliptic(E, m));
            std::vector<int> orders;
            for (auto [i, j] : b.monomials) {
                REQUIRE(j <= 1);
                REQUIRE(2 * i + 3 * j <= m);
                orders.push_back(2 * i + 3 * j);
            }
            for (std::size_t a = 1; a < orders.size(); ++a) REQUIRE(orders[a] > orders[a - 1]);
        }
    }
}

TEST_CASE("projective-line codes coincide with Reed-Solomon") {
    Field f7(7, 1);
    auto alphas = f7.enumerate();
    for (std::size_t k = 1; k <= 7; ++k) {
        auto rs = agc::rs_generator(f7, alphas, k);
        auto ag = agc::ag_code(OnePointDivisor::projective_line(f7, static_cast<long long>(k) - 1), alphas);
        REQUIRE(ag.gen == rs.gen);  // same monomials, same evaluation order
        // row-space equality, checked by mutual rank as well
        agc::Matrix stacked = rs.gen;
        stacked.insert(stacked.end(), ag.gen.begin(), ag.gen.end());
        REQUIRE(agc::matrix_rank(stacked) == k);
    }
    SECTION("genus-0 parameters: k = m + 1 and the MDS distance") {
        for (long long m = 0; m <= 5; ++m) {
            auto params = agc::ag_params(OnePointDivisor::projective_line(f7, m), alphas);
            REQUIRE(params.k == static_cast<std::size_t>(m + 1));
            REQUIRE(params.d_exact);
            REQUIRE(params.d == 7 - m);  // meets Singleton with equality
        }
    }
}

TEST_CASE("elliptic evaluation codes") {
    Field f7(7, 1);
    WeierstrassCurve E(f7, f7.one(), f7.one());  // y^2 = x^3 + x + 1, N = 5
    auto pts = affine_points(E);
    REQUIRE(pts.size() == 4);

    SECTION("m = 3: k = 3 and exhaustive d meets the bound") {
        auto divisor = OnePointDivisor::elliptic(E, 3);
        auto code = agc::ag_code(divisor, pts);
        REQUIRE(code.k == 3);
        REQUIRE(code.n == 4);
        auto params = agc::ag_params(divisor, pts);
        REQUIRE(params.d_exact);
        REQUIRE(params.d == 2);
        REQUIRE(params.d >= static_cast<long long>(code.n) - 3);
        long long defect =
            static_cast<long long>(code.n) + 1 - static_cast<long long>(code.k) - params.d;
        REQUIRE(defect >= 0);
        REQUIRE(defect <= 1);
    }
    SECTION("m = 0 is the repetition code") {
        auto params = agc::ag_params(OnePointDivisor::elliptic(E, 0), pts);
        REQUIRE(params.k == 1);
        REQUIRE(params.d == 4);
        REQUIRE(params.d_exact);
    }
    SECTION("input validation") {
        expect_error(agc::errc::degree_too_large,
                     [&] { agc::ag_code(OnePointDivisor::elliptic(E, 4), pts); });
        auto with_o = pts;
        with_o.push_back(ECPoint::infinity(f7));
        expect_error(agc::errc::point_at_infinity_in_eval_set,
                     [&] { agc::ag_code(OnePointDivisor::elliptic(E, 3), with_o); });
        auto dup = pts;
        dup.push_back(pts.front());
        expect_error(agc::errc::duplicate_point,
                     [&] { agc::ag_code(OnePointDivisor::elliptic(E, 3), dup); });
        auto off = pts;
        off.push_back(ECPoint::affine(f7.from_int(1), f7.from_int(0)));
        expect_error(agc::errc::point_not_on_curve,
                     [&] { agc::ag_code(OnePointDivisor::elliptic(E, 3), off); });
    }
}

TEST_CASE("parameter guarantees over all small elliptic codes") {
    // d >= n - m and Singleton defect in [0, g], exhaustively over every
    // smooth curve over F_5 and F_7 and every m <= 6.
    for (std::uint32_t p : {5u, 7u}) {
        Field f(p, 1);
        for (const auto& A : f.enumerate()) {
            for (const auto& B : f.enumerate()) {
                FieldElement disc = f.from_int(4) * A * A * A + f.from_int(27) * B * B;
                if (disc.is_zero()) continue;
                WeierstrassCurve E(f, A, B);
                auto pts = affine_points(E);
                const long long n = static_cast<long long>(pts.size());
                for (long long m = 1; m <= std::min<long long>(6, n - 1); ++m) {
                    auto divisor = OnePointDivisor::elliptic(E, m);
                    auto params = agc::ag_params(divisor, pts);
                    REQUIRE(params.k == static_cast<std::size_t>(m));  // equality case of Riemann-Roch
                    REQUIRE(params.d_exact);
                    REQUIRE(params.d >= n - m);
                    long long defect = n + 1 - m - params.d;
                    REQUIRE(defect >= 0);
                    REQUIRE(defect <= 1);
                }
            }
        }
    }
}

TEST_CASE("distance falls back to the guaranteed bound over budget") {
    Field f13(13, 1);
    // first curve with enough points to push q^k past 2^24
    for (const auto& A : f13.enumerate()) {
        FieldElement B = f13.one();
        FieldElement disc = f13.from_int(4) * A * A * A + f13.from_int(27) * B * B;
        if (disc.is_zero()) continue;
        WeierstrassCurve E(f13, A, B);
        auto pts = affine_points(E);
        if (pts.size() < 12) continue;
        auto divisor = OnePointDivisor::elliptic(E, 8);
        auto params = agc::ag_params(divisor, pts);  // 13^8 > 2^24
        REQUIRE_FALSE(params.d_exact);
        REQUIRE(params.d == static_cast<long long>(pts.size()) - 8);
        return;
    }
    FAIL("no suitable curve found over F_13");
}

TEST_CASE("genus of smooth plane curves") {
    REQUIRE(agc::genus_smooth_plane(1) == 0);
    REQUIRE(agc::genus_smooth_plane(2) == 0);
    REQUIRE(agc::genus_smooth_plane(3) == 1);
    REQUIRE(agc::genus_smooth_plane(4) == 3);
    REQUIRE(agc::genus_smooth_plane(5) == 6);
    expect_error(agc::errc::domain, [] { agc::genus_smooth_plane(0); });
}

TEST_CASE("Weil bound values") {
    REQUIRE(agc::weil_bound(7, 0) == 8);
    REQUIRE(agc::weil_bound(25, 1) == 36);
    REQUIRE(agc::weil_bound(5, 1) == 10);   // floor(6 + 2 sqrt 5)
    REQUIRE(agc::weil_bound(49, 1) == 64);  // exact: 2 sqrt(49) = 14
    SECTION("holds on every curve over F_5 and F_7") {
        for (std::uint32_t p : {5u, 7u}) {
            Field f(p, 1);
            for (const auto& A : f.enumerate())
                for (const auto& B : f.enumerate()) {
                    FieldElement disc = f.from_int(4) * A * A * A + f.from_int(27) * B * B;
                    if (disc.is_zero()) continue;
                    REQUIRE(agc::point_count(WeierstrassCurve(f, A, B)) <= agc::weil_bound(p, 1));
                }
        }
    }
}

TEST_CASE("Riemann-Hurwitz genus calculator") {
    SECTION("degree-2 cover of the line with two simple branch points") {
        REQUIRE(agc::riemann_hurwitz_genus(2, 0, {2, 2}) == 0);
    }
    SECTION("isomorphisms preserve the genus") {
        REQUIRE(agc::riemann_hurwitz_genus(1, 0, {}) == 0);
        REQUIRE(agc::riemann_hurwitz_genus(1, 3, {}) == 3);
    }
    SECTION("the X_0(11) profile gives genus 1") {
        std::vector<long long> ram(6, 2);
        ram.insert(ram.end(), 4, 3);
        ram.push_back(11);
        REQUIRE(agc::riemann_hurwitz_genus(12, 0, ram) == 1);
    }
    SECTION("inconsistent data is rejected") {
        expect_error(agc::errc::inconsistent_ramification,
                     [] { agc::riemann_hurwitz_genus(2, 0, {2}); });  // odd contribution
        expect_error(agc::errc::inconsistent_ramification,
                     [] { agc::riemann_hurwitz_genus(2, 0, {}); });  // genus -1
        expect_error(agc::errc::domain, [] { agc::riemann_hurwitz_genus(2, 0, {1}); });
        expect_error(agc::errc::domain, [] { agc::riemann_hurwitz_genus(0, 0, {}); });
    }
}
