#pragma once
#include "eis/cyclotomic.hpp"

namespace eis {

struct BernoulliPoly {
    long degree = 0;
    std::vector<Rational> coeffs;   // coefficient of t^i at index i

    Rational eval(const Rational& t) const;   // exact Horner
};

Rational bernoulli_number(long k);
BernoulliPoly bernoulli_polynomial(long k);

// (2*pi*i)^{-k} * sum over n == m (mod N), n != 0, of n^{-k}.
// Exact via Bernoulli-polynomial evaluation; an element of Q(zeta_N).
CycNum partial_zeta_scaled(long m, long N, long k);

} // namespace eis
