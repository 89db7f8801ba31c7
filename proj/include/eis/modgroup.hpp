#pragma once
#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>
#include "eis/rational.hpp"

namespace eis {

// element of SL2(Z/N); entries stored in [0, N)
struct ResidueMatrix {
    long n = 1;
    long a = 0, b = 0, c = 0, d = 0;

    static ResidueMatrix make(long n, long a, long b, long c, long d);
    static ResidueMatrix identity(long n) { return make(n, 1, 0, 0, 1); }
    ResidueMatrix mul(const ResidueMatrix& o) const;
    ResidueMatrix inverse() const { return make(n, d, -b, -c, a); }
    ResidueMatrix negate() const { return make(n, -a, -b, -c, -d); }
    auto operator<=>(const ResidueMatrix&) const = default;
};

std::vector<ResidueMatrix> sl2_mod(long N);

struct CongruenceSubgroup {
    long level = 1;
    std::set<ResidueMatrix> elements;   // image in SL2(Z/level)
    bool contains_minus_id = false;
    std::string tag;                    // family descriptor / spec string

    bool contains(const ResidueMatrix& m) const { return elements.count(m) > 0; }
};

CongruenceSubgroup subgroup_gamma(long N);
CongruenceSubgroup subgroup_gamma1(long N);
CongruenceSubgroup subgroup_gamma0(long N);
CongruenceSubgroup subgroup_gammaNt(long N, long t);
CongruenceSubgroup subgroup_larcher(long p, long q, long r, long chi, long tau);
CongruenceSubgroup subgroup_generated(long N, const std::vector<std::array<long, 4>>& gens);
CongruenceSubgroup parse_group_spec(const std::string& spec);

// point of Lambda_N: (l1, l2) in (Z/N)^2 with gcd(l1, l2, N) = 1
struct LatticePoint {
    long n = 1;
    long l1 = 0, l2 = 0;

    static LatticePoint make(long n, long l1, long l2);   // reduces mod n, checks order
    LatticePoint negate() const { return make(n, -l1, -l2); }
    LatticePoint act(const ResidueMatrix& g) const {      // right action, row vector * matrix
        return make(n, l1 * g.a + l2 * g.c, l1 * g.b + l2 * g.d);
    }
    auto operator<=>(const LatticePoint&) const = default;
};

std::vector<LatticePoint> lambda_points(long N);

struct LatticeOrbit {
    std::vector<LatticePoint> points;   // sorted
    bool regular = false;               // points disjoint from their negatives

    const LatticePoint& rep() const { return points.front(); }
    bool contains(const LatticePoint& p) const;
    auto operator<=>(const LatticeOrbit&) const = default;
};

std::vector<LatticeOrbit> orbits(const CongruenceSubgroup& G);

struct Cusp {
    long alpha = 1, beta = 0;           // reduced fraction alpha/beta; infinity = (1, 0)
    long amplitude = 1;
    bool regular = true;
    long orbit_size = 1;                // orbit size in C(Gamma(N))
    LatticePoint point;                 // lex-least Lambda_N point of the merged orbit

    bool is_infinity() const { return beta == 0; }
    std::string str() const;
    // ordering: infinity first, then lexicographic on (alpha, beta)
    bool operator<(const Cusp& o) const;
    bool same_fraction(const Cusp& o) const { return alpha == o.alpha && beta == o.beta; }
};

std::vector<Cusp> cusps(const CongruenceSubgroup& G);
// lift x = alpha/beta to gamma in SL2(Z) with gamma(inf) = x (first column alpha, beta)
std::array<long, 4> cusp_scaling_matrix(long alpha, long beta);
// least h with +-(gamma T^h gamma^-1) in G; .second true iff only the minus case holds
std::pair<long, bool> amplitude(const CongruenceSubgroup& G, long alpha, long beta);
long orbit_size_in_cusps(const CongruenceSubgroup& G, long alpha, long beta);
Cusp min_amplitude_cusp(const CongruenceSubgroup& G);
// cusp representative of the Lambda_N point's class, via the inverse of phi_N
std::pair<long, long> cusp_fraction_of_point(const LatticePoint& p);

struct AdmissibleReps {
    long n = 1;
    std::set<LatticePoint> chosen;      // one point per {+-lambda} class

    bool contains(const LatticePoint& p) const { return chosen.count(p) > 0; }
    // resolve any point to (representative, in_A); for p not in A, -p is
    LatticePoint rep_of(const LatticePoint& p, bool& flipped) const;
};

AdmissibleReps default_transversal(long N);                 // the appendix A_N (types I/II/III)
AdmissibleReps admissible_reps(const CongruenceSubgroup& G);
bool is_admissible(const CongruenceSubgroup& G, const AdmissibleReps& A);

std::vector<LatticeOrbit> closed_form_orbits_gammaNt(long N, long t);
std::vector<LatticeOrbit> closed_form_orbits_gamma0(long N);

} // namespace eis
