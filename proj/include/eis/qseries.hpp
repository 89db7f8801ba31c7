#pragma once
#include "eis/cyclotomic.hpp"

namespace eis {

// Truncated expansion in q_N = e(tau/N) with CycNum coefficients, plus the
// single weight-2 non-holomorphic datum: nonhol is the coefficient of
// 1/(pi * Im tau).
struct QExpansion {
    long weight = 2;
    long qden = 1;          // exponents are j / qden
    long trunc = 0;         // coefficients a_0 .. a_trunc are known
    long conductor = 1;
    std::vector<CycNum> coeffs;
    CycNum nonhol;

    QExpansion() = default;
    QExpansion(long k, long qden_, long trunc_, long conductor_);

    bool is_holomorphic() const { return nonhol.is_zero(); }
    CycNum constant_term() const { return coeffs.at(0); }
    bool is_zero() const;

    QExpansion embed_conductor(long L) const;
    // rewrite in q_M units, M a multiple of qden; truncation re-scaled
    QExpansion reindex(long M) const;
    // project to q_1 units; every surviving exponent must be a multiple of qden
    QExpansion to_integer_exponents() const;

    QExpansion& operator+=(const QExpansion& o);
    friend QExpansion operator+(QExpansion a, const QExpansion& b) { a += b; return a; }
    QExpansion scaled(const CycNum& c) const;
    QExpansion scaled(const Rational& r) const;
};

// equality up to the min of the two truncations (after re-indexing)
bool qexp_equal(const QExpansion& f, const QExpansion& g);

} // namespace eis
