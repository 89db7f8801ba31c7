#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "eis/hecke.hpp"
#include "eis/eisenstein.hpp"
#include "eis/errors.hpp"

using namespace eis;

TEST_CASE("label canonicalization") {
    // second coordinate lives modulo gcd(l1, N)
    CHECK(HeckeLabel::gamma1(12, 'E', 2, 13) == HeckeLabel::gamma1(12, 'E', 2, 1));
    CHECK(HeckeLabel::gamma1(12, 'E', 14, 1) == HeckeLabel::gamma1(12, 'E', 2, 1));
    CHECK(HeckeLabel::gamma0(12, 'E', 2, 3) == HeckeLabel::gamma0(12, 'E', 2, 1));
    CHECK(HeckeLabel::gamma0(12, 'E', 6, 5) == HeckeLabel::gamma0(12, 'E', 6, 1));
    CHECK_THROWS_AS(HeckeLabel::gamma1(4, 'E', 2, 2), parse_error);
    CHECK_THROWS_AS(HeckeLabel::gamma0(12, 'E', 5, 1), parse_error);
}

TEST_CASE("combination bookkeeping") {
    auto lb = HeckeLabel::gamma1(5, 'E', 0, 1);
    LabelCombination c{4, 5, {}};
    c.add(lb, CycNum::from_rational(1, 2));
    c.add(lb, CycNum::from_rational(1, -2));
    CHECK(c.terms.empty());
    c.add(lb, CycNum::from_rational(1, 3));
    CHECK(c.integer_coefficients());
    c.add(HeckeLabel::gamma1(5, 'E', 1, 0), CycNum::from_rational(1, Rational(1, 2)));
    CHECK_FALSE(c.integer_coefficients());
}

TEST_CASE("diamond operators") {
    auto c = single_label(HeckeLabel::gamma1(5, 'E', 0, 1), 4);
    // <1> is the identity
    CHECK(diamond(1, c).terms == c.terms);
    // <2> on (0,1) gives (0,2)
    auto d2 = diamond(2, c);
    REQUIRE(d2.terms.size() == 1);
    CHECK(d2.terms.begin()->first == HeckeLabel::gamma1(5, 'E', 0, 2));
    // <d^-1> inverts <d>
    for (long N : {5L, 8L, 12L})
        for (long d = 1; d < N; ++d) {
            if (std::gcd(d, N) != 1) continue;
            for (const auto& p : lambda_points(N)) {
                auto one = single_label(HeckeLabel::gamma1(N, 'E', p.l1, p.l2), 3);
                auto back = diamond(mod_inverse(d, N), diamond(d, one));
                CHECK(back.terms == one.terms);
            }
        }
    // trivial on the coarser class labels
    auto c0 = single_label(HeckeLabel::gamma0(12, 'E', 2, 1), 4);
    CHECK(diamond(7, c0).terms == c0.terms);
}

TEST_CASE("T_p on labels") {
    // level-one: T_p is multiplication by p^{k-1} + 1
    auto one = single_label(HeckeLabel::gamma1(1, 'E', 0, 0), 4);
    auto t2 = tp_label(2, one);
    REQUIRE(t2.terms.size() == 1);
    CHECK(t2.terms.begin()->second == CycNum::from_rational(1, 9));
    // the two coarse eigen-classes
    for (long N : {5L, 12L})
        for (long p : {7L, 11L, 13L}) {
            if (N % p == 0) continue;
            auto c = single_label(HeckeLabel::gamma0(N, 'E', 0, 1), 3);
            auto t = tp_label(p, c);
            REQUIRE(t.terms.size() == 1);
            CHECK(t.terms.begin()->second ==
                  CycNum::from_rational(1, p * p + 1));
        }
    // N = 12, delta = 2: gcd(2, 6) = 2 forces lambda0 = 1, again an eigenvector
    auto c = single_label(HeckeLabel::gamma0(12, 'E', 2, 1), 4);
    auto t5 = tp_label(5, c);
    REQUIRE(t5.terms.size() == 1);
    CHECK(t5.terms.begin()->first == HeckeLabel::gamma0(12, 'E', 2, 1));
    CHECK(t5.terms.begin()->second == CycNum::from_rational(1, 126));
    // p must avoid the level
    CHECK_THROWS_AS(tp_label(3, c), parse_error);
    CHECK_THROWS_AS(tp_label(4, single_label(HeckeLabel::gamma1(5, 'E', 0, 1), 3)),
                    parse_error);
}

TEST_CASE("label points") {
    // the coarse class (delta, lambda0) has the predicted size
    for (long N : {8L, 12L})
        for (long delta = 1; delta < N; ++delta) {
            if (N % delta != 0 || delta == 1) continue;
            if (N % 2 == 0 && delta == N / 2) continue;
            long g = std::gcd(delta, N / delta);
            for (long l0 = 0; l0 < g; ++l0) {
                if (std::gcd(l0, g) != 1) continue;
                auto pts = label_points(HeckeLabel::gamma0(N, 'E', delta, l0));
                CHECK((long)pts.size() ==
                      orbit_size_formula_gamma0(LatticePoint::make(N, delta, l0 == 0 ? 1 : l0), N));
            }
        }
    CHECK(label_points(HeckeLabel::gamma0(5, 'E', 0, 1)).size() == 4);
    CHECK(label_points(HeckeLabel::gamma1(12, 'E', 2, 1)).size() == 6);
}

TEST_CASE("T_p on expansions") {
    // level-one weight-4: eigenvalue p^3 + 1
    auto f = e_series(LatticePoint::make(1, 0, 0), 4, 30).to_integer_exponents();
    auto t2 = tp_qexp(f, 2, 4);
    CHECK(qexp_equal(t2, f.scaled(Rational(9))));
    auto t3 = tp_qexp(f, 3, 4);
    CHECK(qexp_equal(t3, f.scaled(Rational(28))));
    // weight-2: the non-holomorphic part scales by p^{k-1} + 1
    auto f2 = e_series(LatticePoint::make(1, 0, 0), 2, 30).to_integer_exponents();
    auto t5 = tp_qexp(f2, 5, 2);
    CHECK(qexp_equal(t5, f2.scaled(Rational(6))));
    CHECK(t5.nonhol == CycNum::from_rational(1, -18));
    // zero maps to zero
    QExpansion z(4, 1, 20, 1);
    CHECK(tp_qexp(z, 7, 4).is_zero());
}

TEST_CASE("label action matches the expansion action") {
    long J = 24;
    for (long N : {4L, 5L})
        for (long k = 3; k <= 4; ++k)
            for (long p : {3L, 7L}) {
                if (N % p == 0) continue;
                for (const auto& pt : lambda_points(N)) {
                    auto lb = HeckeLabel::gamma1(N, 'E', pt.l1, pt.l2);
                    auto c = single_label(lb, k);
                    auto lhs = combination_qexp(tp_label(p, c), J * N).to_integer_exponents();
                    auto fd = combination_qexp(diamond(p, c), J * N);
                    auto rhs = tp_qexp(combination_qexp(c, J * N), fd, p, k);
                    CHECK(qexp_equal(lhs, rhs));
                }
            }
}

TEST_CASE("Hecke operators commute") {
    auto c = single_label(HeckeLabel::gamma1(8, 'E', 1, 3), 3);
    auto a = tp_label(3, tp_label(5, c));
    auto b = tp_label(5, tp_label(3, c));
    CHECK(a.terms == b.terms);
    auto d1 = diamond(3, tp_label(7, c));
    auto d2 = tp_label(7, diamond(3, c));
    CHECK(d1.terms == d2.terms);
}
