#pragma once
#include <complex>
#include <vector>
#include "eis/rational.hpp"

namespace eis {

// Phi_L, monic with integer coefficients; coeff of x^i at index i. Memoized.
const std::vector<Integer>& cyclotomic_polynomial(long L);

// Element of Q(zeta_L) in the power basis mod Phi_L.
// Arithmetic never changes the conductor; use embed() to move up.
struct CycNum {
    long conductor = 1;
    std::vector<Rational> coeffs;   // length phi(conductor)

    CycNum() : coeffs(1) {}
    explicit CycNum(long L) : conductor(L), coeffs(euler_phi(L)) {}

    static CycNum from_rational(long L, const Rational& r);
    static CycNum zeta_pow(long L, long j);

    bool is_zero() const;
    bool is_rational() const;       // all non-constant coords vanish
    Rational rational_part() const; // coeffs[0]

    CycNum embed(long L2) const;    // conductor must divide L2
    CycNum inverse() const;
    std::complex<double> approx() const;

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    friend CycNum operator+(CycNum a, const CycNum& b) { a += b; return a; }
    friend CycNum operator-(CycNum a, const CycNum& b) { a -= b; return a; }
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    CycNum operator*(const Rational& r) const;
    friend bool operator==(const CycNum& a, const CycNum& b) = default;
};

// equality after embedding both into lcm of conductors
bool cyc_equal(const CycNum& a, const CycNum& b);

} // namespace eis
