#pragma once
#include "eis/eisenstein.hpp"

namespace eis {

// Orbital-sum label: either a Gamma_1(N) orbit through (l1, l2) or a
// Gamma_0(N) orbit class (delta, lambda0); the 'kind' picks the normalized
// ('E') or unnormalized ('G') series family.
struct HeckeLabel {
    long n = 1;
    char group = '1';   // '1' = Gamma_1 orbital sum, '0' = Gamma_0 orbital sum
    char kind = 'E';
    long l1 = 0, l2 = 1;

    auto operator<=>(const HeckeLabel&) const = default;

    // canonicalize a Gamma_1(N) orbit label: l2 is reduced mod gcd(l1, N)
    static HeckeLabel gamma1(long N, char kind, long l1, long l2);
    // canonicalize a Gamma_0(N) class label to the representative list
    // {(0,1), (N/2,1), (delta, lambda0 mod gcd(delta, N/delta))}
    static HeckeLabel gamma0(long N, char kind, long delta, long lambda0);
};

struct LabelCombination {
    long weight = 2;
    long level = 1;
    std::map<HeckeLabel, CycNum> terms;

    void add(const HeckeLabel& lb, const CycNum& c);
    bool integer_coefficients() const;
};

// diamond operator <d>, gcd(d, N) = 1
LabelCombination diamond(long d, const LabelCombination& c);
// Hecke operator T_p, p prime not dividing N
LabelCombination tp_label(long p, const LabelCombination& c);

// the lattice points summed by a label (each with coefficient one)
std::vector<LatticePoint> label_points(const HeckeLabel& lb);
// exact q-expansion of a label / combination, truncated at q_N^J
QExpansion label_qexp(const HeckeLabel& lb, long k, long J);
QExpansion combination_qexp(const LabelCombination& c, long J);

// independent T_p on integer-exponent q-expansions:
// b_j = a_{jp} + p^{k-1} * (f_diamond)_{j/p}, nonhol scaled by p^{k-1} + 1.
// f_diamond is the expansion of <p^{-1}> f; pass f itself when <p> acts
// trivially (level 1 and all Gamma_0 orbital sums).
QExpansion tp_qexp(const QExpansion& f, const QExpansion& f_diamond, long p, long k);
QExpansion tp_qexp(const QExpansion& f, long p, long k);

// lift a single-label combination, convenience for the CLI and tests
LabelCombination single_label(const HeckeLabel& lb, long k);

} // namespace eis
