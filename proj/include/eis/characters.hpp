#pragma once
#include "eis/hecke.hpp"

namespace eis {

// Dirichlet character mod N with values stored exactly in Q(zeta_e),
// e = exponent of (Z/N)^x.
struct DirichletCharacter {
    long modulus = 1;
    long value_conductor = 1;           // e above
    long index = 0;                     // position in the enumeration order
    std::map<long, CycNum> values;      // unit residue -> value

    CycNum operator()(long a) const;    // zero off the unit group
    CycNum inv_value(long a) const;     // chi(a)^{-1} = chi(a^{-1}), exact
    bool is_trivial() const;
    int parity() const;                 // chi(-1) as +1 / -1
    long order() const;
};

// all phi(N) characters mod N from fixed CRT generators; deterministic order,
// index 0 is the trivial character
std::vector<DirichletCharacter> enumerate_characters(long N);

// true iff chi factors through U_{lcm(delta, N/delta)}
bool is_delta_good(const DirichletCharacter& chi, long delta);

// first factorization chi = chi1 * chi2 with chi1 mod N/delta, chi2 mod delta
// in the enumeration order
std::pair<DirichletCharacter, DirichletCharacter> factorize(const DirichletCharacter& chi,
                                                            long delta);

// the Gamma_0(N) class labels whose gcd-divisor admits chi
std::vector<HeckeLabel> nebentypus_labels(long N, const DirichletCharacter& chi, char kind);

struct NebentypusElement {
    HeckeLabel label;
    QExpansion series;
    SeriesCombination terms;    // chi-weighted single-point combination
};

struct NebentypusBasis {
    long level = 1;
    long weight = 2;
    DirichletCharacter chi;
    std::vector<NebentypusElement> elements;
};

// the chi-twisted half-sum attached to one class label
NebentypusElement nebentypus_series(long N, const DirichletCharacter& chi, const HeckeLabel& label,
                                    long k, long J);
// empty when the parity of chi disagrees with k
NebentypusBasis nebentypus_basis(long N, const DirichletCharacter& chi, long k, long J);

} // namespace eis
