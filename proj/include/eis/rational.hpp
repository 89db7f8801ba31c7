#pragma once
#include <gmpxx.h>
#include <numeric>
#include <string>
#include <cstdint>

namespace eis {

// Exact rational scalar. mpq_class canonicalizes to lowest terms with a
// positive denominator, which is exactly the invariant we need.
using Rational = mpq_class;
using Integer  = mpz_class;

Rational rat_parse(const std::string& s);      // "p/q" or "p"
std::string rat_str(const Rational& r);        // always "p/q", q > 0

Integer int_pow(const Integer& b, unsigned long e);
Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);
Rational rat_pow(const Rational& b, long e);

long euler_phi(long n);
long gcd_ll(long a, long b);
long lcm_ll(long a, long b);
long mod_inverse(long a, long n);   // a coprime to n
double to_double(const Rational& r);

} // namespace eis
