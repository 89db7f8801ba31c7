#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include <random>
#include "eis/eisenstein.hpp"
#include "eis/special_values.hpp"
#include "eis/errors.hpp"

using namespace eis;

namespace {
long sigma(long n, long k) {
    long s = 0;
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        long p = 1;
        for (long i = 0; i < k; ++i) p *= d;
        s += p;
    }
    return s;
}
} // namespace

TEST_CASE("level-one unnormalized series") {
    LatticePoint o = LatticePoint::make(1, 0, 0);
    QExpansion g4 = g_series(o, 4, 12);
    CHECK(g4.constant_term() == CycNum::from_rational(1, Rational(1, 720)));
    CHECK(g4.coeffs[1] == CycNum::from_rational(1, Rational(1, 3)));
    for (long j = 1; j <= 12; ++j)
        CHECK(g4.coeffs[j] ==
              CycNum::from_rational(1, Rational(240 * sigma(j, 3)) / 720));
    // weight 2: the scaled series carries a 1/(4 N^2) non-holomorphic part
    QExpansion g2 = g_series(o, 2, 6);
    CHECK(g2.nonhol == CycNum::from_rational(1, Rational(1, 4)));
    CHECK(g2.constant_term() == CycNum::from_rational(1, Rational(-1, 12)));
}

TEST_CASE("unnormalized series support and symmetry") {
    // first coordinate nonzero kills the constant term
    CHECK(g_series(LatticePoint::make(3, 1, 0), 3, 9).constant_term().is_zero());
    // G(-lambda) = (-1)^k G(lambda)
    for (long N : {3L, 4L, 5L})
        for (long k = 2; k <= 5; ++k)
            for (const auto& p : lambda_points(N)) {
                QExpansion a = g_series(p.negate(), k, 3 * N);
                QExpansion b = g_series(p, k, 3 * N).scaled(Rational(k % 2 == 0 ? 1 : -1));
                CHECK(qexp_equal(a, b));
            }
}

TEST_CASE("normalized series") {
    LatticePoint o = LatticePoint::make(1, 0, 0);
    QExpansion e4 = e_series(o, 4, 10);
    CHECK(e4.constant_term() == CycNum::from_rational(1, 1));
    for (long j = 1; j <= 10; ++j)
        CHECK(e4.coeffs[j] == CycNum::from_rational(1, 240 * sigma(j, 3)));
    QExpansion e2 = e_series(o, 2, 10);
    CHECK(e2.nonhol == CycNum::from_rational(1, -3));
    for (long j = 1; j <= 10; ++j)
        CHECK(e2.coeffs[j] == CycNum::from_rational(1, -24 * sigma(j, 1)));
    // constant terms are exact indicators
    for (long N : {3L, 4L, 5L, 7L})
        for (long k = 2; k <= 4; ++k)
            for (const auto& p : lambda_points(N)) {
                CycNum ct = e_series(p, k, N).constant_term();
                CycNum want(std::max(N, 2L));
                if (p.l1 == 0 && p.l2 == 1) want += CycNum::from_rational(want.conductor, 1);
                if (p.l1 == 0 && p.l2 == N - 1)
                    want += CycNum::from_rational(want.conductor, k % 2 == 0 ? 1 : -1);
                CHECK(cyc_equal(ct, want));
            }
    // E(-lambda) = (-1)^k E(lambda)
    for (long N : {4L, 5L})
        for (long k = 2; k <= 5; ++k)
            for (const auto& p : lambda_points(N)) {
                QExpansion a = e_series(p.negate(), k, 2 * N);
                QExpansion b = e_series(p, k, 2 * N).scaled(Rational(k % 2 == 0 ? 1 : -1));
                CHECK(qexp_equal(a, b));
            }
}

TEST_CASE("scaling systems invert") {
    for (long N : {3L, 4L, 5L, 8L, 12L})
        for (long k = 2; k <= 4; ++k)
            for (const auto& sys : scaling_systems(N, k)) {
                size_t n = sys.index.size();
                REQUIRE(sys.mat.size() == n);
                REQUIRE(sys.inv.size() == n);
                for (size_t i = 0; i < n; ++i)
                    for (size_t j = 0; j < n; ++j) {
                        CycNum acc(sys.mat[i][0].conductor);
                        for (size_t l = 0; l < n; ++l)
                            acc += sys.mat[i][l] * sys.inv[l][j];
                        if (i == j)
                            CHECK(cyc_equal(acc, CycNum::from_rational(1, 1)));
                        else
                            CHECK(acc.is_zero());
                    }
            }
}

TEST_CASE("orbital sums") {
    // odd weight on an irregular orbit vanishes identically
    auto os = orbits(subgroup_gamma1(4));
    for (const auto& O : os)
        if (!O.regular) {
            CHECK(orbital_sum('E', O, 3, 16).is_zero());
            CHECK(orbital_sum('G', O, 3, 16).is_zero());
        }
    // closed form matches the orbit-by-orbit sum
    for (long N = 1; N <= 8; ++N)
        for (long t = 1; t <= N; ++t) {
            if (N % t != 0) continue;
            auto list = closed_form_orbits_gammaNt(N, t);
            for (long k = 2; k <= 4; ++k)
                for (const auto& O : list)
                    CHECK(qexp_equal(closed_form_series_gammaNt(O.rep(), N, t, k, 6 * N),
                                     orbital_sum('G', O, k, 6 * N)));
        }
}

TEST_CASE("Gamma_0 orbit size formula") {
    for (long N : {5L, 8L, 12L}) {
        CHECK(orbit_size_formula_gamma0(LatticePoint::make(N, 0, 1), N) == euler_phi(N));
        auto fast = closed_form_orbits_gamma0(N);
        for (const auto& O : fast)
            CHECK(orbit_size_formula_gamma0(O.rep(), N) == (long)O.points.size());
    }
    CHECK(orbit_size_formula_gamma0(LatticePoint::make(12, 2, 1), 12) == 12);
}

TEST_CASE("slash action permutes labels") {
    std::mt19937 rng(5);
    for (long N : {3L, 4L, 8L})
        for (long k = 2; k <= 4; ++k)
            for (long trial = 0; trial < 6; ++trial) {
                // random word in T^a and S gives a genuine SL2(Z) element
                std::array<long, 4> g{1, 0, 0, 1};
                for (long step = 0; step < 4; ++step) {
                    long a = (long)(rng() % 5) - 2;
                    // right-multiply by T^a = (1 a; 0 1)
                    g = {g[0], g[0] * a + g[1], g[2], g[2] * a + g[3]};
                    // right-multiply by S = (0 -1; 1 0)
                    g = {g[1], -g[0], g[3], -g[2]};
                }
                for (char kind : {'E', 'G'}) {
                    auto pts = lambda_points(N);
                    const auto& p = pts[rng() % pts.size()];
                    SeriesCombination f{{CycNum::from_rational(N, 1), kind, p}};
                    SeriesCombination h = slash(f, g);
                    REQUIRE(h.size() == 1);
                    CHECK(h[0].point == p.act(ResidueMatrix::make(N, g[0], g[1], g[2], g[3])));
                    CHECK(cyc_equal(h[0].coeff, f[0].coeff));
                }
            }
}

TEST_CASE("constant terms of combinations") {
    // pi_inf at the identity equals the plain constant term
    SeriesCombination f{
        {CycNum::zeta_pow(5, 2), 'E', LatticePoint::make(5, 0, 1)},
        {CycNum::from_rational(1, Rational(3, 2)), 'G', LatticePoint::make(5, 0, 2)}};
    CycNum direct = combination_constant_term(f, 4);
    CycNum at_inf = constant_term_at_cusp(f, 4, {1, 0, 0, 1});
    CHECK(cyc_equal(direct, at_inf));
    CycNum want = CycNum::zeta_pow(5, 2).embed(5) +
                  partial_zeta_scaled(2, 5, 4) * Rational(3, 2);
    CHECK(cyc_equal(direct, want));
}

TEST_CASE("bases") {
    // Gamma_0(11), weight 2: two cusps, dimension 1, holomorphic element
    auto B = spectral_basis(subgroup_gamma0(11), 2, 22);
    REQUIRE(B.elements.size() == 1);
    CHECK(B.elements[0].series.is_holomorphic());
    CHECK_FALSE(B.elements[0].series.is_zero());
    // dimensions match the cusp-count case split
    for (long N : {1L, 3L, 4L, 6L, 8L})
        for (long k = 2; k <= 5; ++k)
            for (auto G : {subgroup_gamma1(N), subgroup_gamma0(N)}) {
                auto S = spectral_basis(G, k, 2 * N);
                CHECK((long)S.elements.size() == dimension_from_cusps(G, k));
                for (const auto& el : S.elements)
                    if (k != 2) CHECK(el.series.is_holomorphic());
            }
    // the unnormalized basis spans with the same element count
    auto U = unnormalized_basis(subgroup_gamma1(5), 3, 15);
    auto S = spectral_basis(subgroup_gamma1(5), 3, 15);
    CHECK(U.elements.size() == S.elements.size());
}

TEST_CASE("level inclusion of unnormalized series") {
    for (long N : {4L, 6L, 9L})
        for (long d = 1; d <= N; ++d) {
            if (N % d == 0 && d < N) {
                for (long k = 2; k <= 3; ++k)
                    for (const auto& mu : lambda_points(d)) {
                        auto combo = express_in_level(mu, N, k);
                        QExpansion acc(k, N, 8 * N, 1);
                        for (const auto& [pt, c] : combo)
                            acc += g_series(pt, k, 8 * N).scaled(c);
                        CHECK(qexp_equal(acc, g_series(mu, k, 8 * d)));
                    }
            }
        }
}
