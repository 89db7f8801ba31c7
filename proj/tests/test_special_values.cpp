#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "eis/special_values.hpp"
#include "eis/errors.hpp"

using namespace eis;

TEST_CASE("Bernoulli numbers") {
    CHECK(bernoulli_number(0) == Rational(1));
    CHECK(bernoulli_number(1) == Rational(-1, 2));
    CHECK(bernoulli_number(2) == Rational(1, 6));
    CHECK(bernoulli_number(3) == Rational(0));
    CHECK(bernoulli_number(4) == Rational(-1, 30));
    CHECK(bernoulli_number(12) == Rational(-691, 2730));
    for (long k = 3; k <= 31; k += 2) CHECK(bernoulli_number(k) == Rational(0));
}

TEST_CASE("Bernoulli polynomials") {
    BernoulliPoly b1 = bernoulli_polynomial(1);
    CHECK(b1.coeffs == std::vector<Rational>{Rational(-1, 2), Rational(1)});
    BernoulliPoly b2 = bernoulli_polynomial(2);
    CHECK(b2.coeffs == std::vector<Rational>{Rational(1, 6), Rational(-1), Rational(1)});
    BernoulliPoly b4 = bernoulli_polynomial(4);
    CHECK(b4.coeffs == std::vector<Rational>{Rational(-1, 30), Rational(0), Rational(1),
                                             Rational(-2), Rational(1)});
    // B_k(0) = B_k, B_k(1) = B_k for k != 1
    for (long k = 0; k <= 12; ++k) {
        BernoulliPoly b = bernoulli_polynomial(k);
        CHECK(b.eval(Rational(0)) == bernoulli_number(k));
        if (k != 1) CHECK(b.eval(Rational(1)) == bernoulli_number(k));
    }
    // reflection B_k(1 - t) = (-1)^k B_k(t) at sample points
    for (long k = 1; k <= 10; ++k) {
        BernoulliPoly b = bernoulli_polynomial(k);
        for (long num = 0; num <= 5; ++num) {
            Rational t = Rational(num) / 7;
            Rational lhs = b.eval(Rational(1) - t);
            Rational rhs = b.eval(t);
            if (k % 2 == 1) rhs = -rhs;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("scaled partial zeta pinned values") {
    // (2 pi i)^{-2} * 2 zeta(2) = 2 * (pi^2/6) / (-4 pi^2) = -1/12
    CHECK(partial_zeta_scaled(0, 1, 2) == CycNum::from_rational(1, Rational(-1, 12)));
    // (2 pi i)^{-4} * 2 zeta(4) = 1/720
    CHECK(partial_zeta_scaled(0, 1, 4) == CycNum::from_rational(1, Rational(1, 720)));
    // odd n <-> -n symmetry kills the odd-k value on a symmetric progression
    CHECK(partial_zeta_scaled(1, 2, 3).is_zero());
    CHECK(partial_zeta_scaled(0, 1, 6) ==
          CycNum::from_rational(1, Rational(-1, 30240)));
}

TEST_CASE("scaled partial zeta parity") {
    for (long N = 1; N <= 8; ++N)
        for (long k = 2; k <= 5; ++k)
            for (long m = 0; m < N; ++m) {
                CycNum a = partial_zeta_scaled(m, N, k);
                CycNum b = partial_zeta_scaled(((N - m) % N), N, k);
                if (k % 2 == 0) CHECK(a == b);
                else CHECK(a == -b);
            }
}

TEST_CASE("scaled partial zeta aggregation over refinements") {
    // classes mod d refine into classes mod N when d | N
    for (long N : {4L, 6L, 12L})
        for (long d = 1; d <= N; ++d) {
            if (N % d != 0) continue;
            for (long k = 2; k <= 4; ++k)
                for (long m = 0; m < d; ++m) {
                    CycNum total(std::max(N, 2L));
                    for (long r = m; r < N; r += d)
                        total += partial_zeta_scaled(r, N, k).embed(std::max(N, 2L));
                    CHECK(cyc_equal(total, partial_zeta_scaled(m, d, k)));
                }
        }
}

TEST_CASE("scaled partial zeta conductor") {
    for (long N = 1; N <= 10; ++N)
        for (long m = 0; m < N; ++m) {
            CycNum v = partial_zeta_scaled(m, N, 3);
            CHECK(std::max(N, 1L) % v.conductor == 0);
        }
}
