#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include <algorithm>
#include "eis/characters.hpp"
#include "eis/eisenstein.hpp"
#include "eis/errors.hpp"

using namespace eis;

TEST_CASE("enumeration basics") {
    for (long N : {1L, 2L, 3L, 5L, 8L, 12L, 16L, 15L}) {
        auto chars = enumerate_characters(N);
        CHECK((long)chars.size() == euler_phi(N));
        CHECK(chars[0].is_trivial());
        for (const auto& chi : chars) {
            CHECK(chi.modulus == N);
            CHECK(chi(1) == CycNum::from_rational(chi.value_conductor, 1));
            if (N > 1) CHECK(chi(0).is_zero());
            if (N % 2 == 0) CHECK(chi(2).is_zero());
        }
    }
}

TEST_CASE("multiplicativity and inverse values") {
    for (long N : {5L, 8L, 9L, 12L}) {
        for (const auto& chi : enumerate_characters(N)) {
            for (long a = 1; a < N; ++a) {
                if (std::gcd(a, N) != 1) continue;
                for (long b = 1; b < N; ++b) {
                    if (std::gcd(b, N) != 1) continue;
                    CHECK(chi(a * b % N) == chi(a) * chi(b));
                }
                CHECK(chi(a) * chi.inv_value(a) ==
                      CycNum::from_rational(chi.value_conductor, 1));
            }
            CHECK(chi(N + 1) == chi(1));   // periodicity
        }
    }
}

TEST_CASE("modulus five") {
    auto chars = enumerate_characters(5);
    REQUIRE(chars.size() == 4);
    std::vector<long> orders;
    for (const auto& chi : chars) {
        orders.push_back(chi.order());
        // values live in Q(zeta_4)
        CHECK(4 % chi.value_conductor == 0);
    }
    std::sort(orders.begin(), orders.end());
    CHECK(orders == std::vector<long>{1, 2, 4, 4});
    // parities: trivial and the quadratic one are even, the quartic pair is odd
    long even = 0, odd = 0;
    for (const auto& chi : chars) (chi.parity() == 1 ? even : odd)++;
    CHECK(even == 2);
    CHECK(odd == 2);
}

TEST_CASE("modulus eight is all real") {
    auto chars = enumerate_characters(8);
    REQUIRE(chars.size() == 4);
    for (const auto& chi : chars) {
        CHECK(chi.order() <= 2);
        for (long a : {1L, 3L, 5L, 7L}) {
            CycNum v = chi(a);
            CHECK(v.is_rational());
            CHECK((v.rational_part() == 1 || v.rational_part() == -1));
        }
    }
}

TEST_CASE("orthogonality") {
    for (long N : {5L, 7L, 12L}) {
        auto chars = enumerate_characters(N);
        for (const auto& chi : chars)
            for (const auto& psi : chars) {
                CycNum s(chi.value_conductor);
                long L = lcm_ll(chi.value_conductor, psi.value_conductor);
                CycNum acc(L);
                for (long a = 1; a < std::max(N, 2L); ++a) {
                    if (std::gcd(a, N) != 1) continue;
                    acc += chi(a).embed(L) * psi.inv_value(a).embed(L);
                }
                if (chi.index == psi.index)
                    CHECK(cyc_equal(acc, CycNum::from_rational(1, euler_phi(N))));
                else
                    CHECK(acc.is_zero());
            }
    }
}

TEST_CASE("divisor admissibility") {
    // N = 12, delta = 2: lcm(2, 6) = 6, so chi qualifies iff chi(7) = 1
    for (const auto& chi : enumerate_characters(12)) {
        bool expect = chi(7) == CycNum::from_rational(chi.value_conductor, 1);
        CHECK(is_delta_good(chi, 2) == expect);
        // delta = 1 and delta = N are always fine
        CHECK(is_delta_good(chi, 1));
        CHECK(is_delta_good(chi, 12));
    }
}

TEST_CASE("factorization") {
    for (long N : {12L, 15L, 16L})
        for (const auto& chi : enumerate_characters(N))
            for (long delta = 1; delta <= N; ++delta) {
                if (N % delta != 0) continue;
                if (!is_delta_good(chi, delta)) continue;
                long m1 = N / delta, m2 = delta;
                if (lcm_ll(m1, m2) != N) continue;   // only split over a genuine cover
                auto [c1, c2] = factorize(chi, delta);
                CHECK(c1.modulus == m1);
                CHECK(c2.modulus == m2);
                for (long a = 1; a < N; ++a) {
                    if (std::gcd(a, N) != 1) continue;
                    long L = lcm_ll(lcm_ll(c1.value_conductor, c2.value_conductor),
                                    chi.value_conductor);
                    CHECK(cyc_equal(chi(a).embed(L),
                                    c1(a % std::max(m1, 1L)).embed(L) *
                                        c2(a % std::max(m2, 1L)).embed(L)));
                }
            }
}

TEST_CASE("label lists") {
    // trivial character admits every divisor class
    auto chars12 = enumerate_characters(12);
    auto full = nebentypus_labels(12, chars12[0], 'E');
    // divisor classes of level 12: (0,1), (6,1) and (delta,*) for delta = 1,2,3,4
    CHECK(full.size() == 6);
    // a character that is not 2-good loses the delta = 2 class
    for (const auto& chi : chars12) {
        auto lbs = nebentypus_labels(12, chi, 'E');
        bool has2 = std::any_of(lbs.begin(), lbs.end(),
                                [](const HeckeLabel& l) { return l.l1 == 2; });
        CHECK(has2 == is_delta_good(chi, 2));
    }
}

TEST_CASE("twisted series") {
    // N = 5, odd quartic character, weight 3: full basis of size 2
    auto chars = enumerate_characters(5);
    for (const auto& chi : chars) {
        if (chi.parity() != -1) continue;
        auto B = nebentypus_basis(5, chi, 3, 20);
        CHECK(B.elements.size() == 2);
        for (const auto& el : B.elements) {
            CHECK_FALSE(el.series.is_zero());
            CHECK(el.series.is_holomorphic());
        }
    }
    // parity mismatch gives the zero space (quadratic character is even)
    for (const auto& chi : chars)
        if (chi.order() == 2) CHECK(nebentypus_basis(5, chi, 3, 10).elements.empty());
    // weight 2 with the trivial character routes to the untwisted story
    CHECK_THROWS_AS(nebentypus_basis(5, chars[0], 2, 10), domain_error);
}

TEST_CASE("twisted series transform correctly") {
    // f |_gamma = chi(d) f for gamma in Gamma_0(N), checked on the labels
    long N = 7, k = 3;
    for (const auto& chi : enumerate_characters(N)) {
        if (chi.parity() != (k % 2 == 0 ? 1 : -1)) continue;
        auto B = nebentypus_basis(N, chi, k, 2 * N);
        for (const auto& el : B.elements)
            for (long d : {2L, 3L}) {
                long a = mod_inverse(d, N);
                std::array<long, 4> gamma{a, (a * d - 1) / N, N, d};
                auto moved = slash(el.terms, gamma);
                // compare as point -> coefficient maps
                std::map<LatticePoint, CycNum> lhs, rhs;
                long L = 1;
                for (const auto& t : moved) L = lcm_ll(L, t.coeff.conductor);
                for (const auto& t : el.terms) L = lcm_ll(L, t.coeff.conductor);
                L = lcm_ll(L, chi.value_conductor);
                for (const auto& t : moved) {
                    auto [it, fresh] = lhs.try_emplace(t.point, t.coeff.embed(L));
                    if (!fresh) it->second += t.coeff.embed(L);
                }
                for (const auto& t : el.terms) {
                    CycNum v = t.coeff.embed(L) * chi(d).embed(L);
                    auto [it, fresh] = rhs.try_emplace(t.point, v);
                    if (!fresh) it->second += v;
                }
                for (const auto& [p, v] : rhs) {
                    auto it = lhs.find(p);
                    if (it == lhs.end()) CHECK(v.is_zero());
                    else CHECK(it->second == v);
                }
                for (const auto& [p, v] : lhs)
                    if (rhs.find(p) == rhs.end()) CHECK(v.is_zero());
            }
    }
}
