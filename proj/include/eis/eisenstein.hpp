#pragma once
#include <map>
#include "eis/modgroup.hpp"
#include "eis/qseries.hpp"

namespace eis {

// single-point series label; the exact representation used for slash-action
// and constant terms at arbitrary cusps
struct SeriesTerm {
    CycNum coeff;
    char kind = 'E';        // 'E' normalized, 'G' scaled unnormalized
    LatticePoint point;
};
using SeriesCombination = std::vector<SeriesTerm>;

SeriesCombination slash(const SeriesCombination& f, const std::array<long, 4>& gamma);
CycNum combination_constant_term(const SeriesCombination& f, long k);
// pi_inf(f |_gamma), gamma an integer matrix in SL2(Z)
CycNum constant_term_at_cusp(const SeriesCombination& f, long k, const std::array<long, 4>& gamma);

// scaled unnormalized series (2 pi i)^{-k} G_k(., lambda, N) to order J in q_N
QExpansion g_series(const LatticePoint& lambda, long k, long J);
// normalized series E_k(., lambda, N), recovered by the exact finite solve
QExpansion e_series(const LatticePoint& lambda, long k, long J);

// per scaling-class linear system data, exposed for the roundtrip check
struct ScalingSystem {
    std::vector<LatticePoint> index;                // class members inside A_N
    std::vector<std::vector<CycNum>> mat;           // S-tilde matrix
    std::vector<std::vector<CycNum>> inv;
};
std::vector<ScalingSystem> scaling_systems(long N, long k);

QExpansion orbital_sum(char kind, const LatticeOrbit& O, long k, long J);

struct BasisElement {
    Cusp cusp;
    LatticeOrbit orbit;
    QExpansion series;
    SeriesCombination labels;
};

struct EisensteinBasis {
    std::string group_tag;
    long weight = 0;
    std::string kind;       // "spectral" | "unnormalized" | "nebentypus"
    std::vector<BasisElement> elements;
};

// E_{k,x} (or its G-analog) as the orbital sum over the orbit attached to x
// inside A, halved exactly for irregular orbits at even k, N >= 3
QExpansion spectral_series(const CongruenceSubgroup& G, const Cusp& x, const AdmissibleReps& A,
                           long k, long J);
EisensteinBasis spectral_basis(const CongruenceSubgroup& G, long k, long J);
QExpansion unnormalized_series(const CongruenceSubgroup& G, const Cusp& x, const AdmissibleReps& A,
                               long k, long J);
EisensteinBasis unnormalized_basis(const CongruenceSubgroup& G, long k, long J);

// expected |spectral_basis| from the cusp data (the dimension case split)
long dimension_from_cusps(const CongruenceSubgroup& G, long k);

// closed-form expansion of the Gamma(N,t) orbital G-sum through lambda
QExpansion closed_form_series_gammaNt(const LatticePoint& lambda, long N, long t, long k, long J);
long orbit_size_formula_gamma0(const LatticePoint& lambda, long N);

// express the level-d scaled G-series at mu (d | N) as a Q(zeta_N)-combination
// of level-N scaled G-series; exact, by residue-class decomposition
std::map<LatticePoint, CycNum> express_in_level(const LatticePoint& mu, long N, long k);

// sign epsilon_A(delta) of the unit-scaling action on the cusp x (with orbit O_x in A)
int epsilon_A(const CongruenceSubgroup& G, const AdmissibleReps& A, long delta, const Cusp& x,
              long k);

// internal helpers shared with other modules
QExpansion orbital_sum_points(char kind, const std::vector<LatticePoint>& pts, long k, long J);
const LatticeOrbit& orbit_attached_to_cusp(const std::vector<LatticeOrbit>& os,
                                           const AdmissibleReps& A, const Cusp& x);

} // namespace eis
