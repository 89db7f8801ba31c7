#include "eis/modgroup.hpp"
#include "eis/errors.hpp"
#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace eis {

namespace {
long mod(long a, long n) { return ((a % n) + n) % n; }

// alpha*x + beta*y = gcd
void egcd(long a, long b, long& g, long& x, long& y) {
    if (b == 0) { g = std::abs(a); x = (a < 0 ? -1 : 1); y = 0; return; }
    long x1, y1;
    egcd(b, a % b, g, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
}
} // namespace

ResidueMatrix ResidueMatrix::make(long n, long a, long b, long c, long d) {
    ResidueMatrix m{n, mod(a, n), mod(b, n), mod(c, n), mod(d, n)};
    if (mod(m.a * m.d - m.b * m.c, n) != mod(1, n))
        throw domain_error("ResidueMatrix: determinant not 1 mod N");
    return m;
}

ResidueMatrix ResidueMatrix::mul(const ResidueMatrix& o) const {
    if (n != o.n) throw domain_error("ResidueMatrix: modulus mismatch");
    return make(n, a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d);
}

std::vector<ResidueMatrix> sl2_mod(long N) {
    if (N < 1) throw domain_error("sl2_mod: N >= 1 required");
    ResidueMatrix S = ResidueMatrix::make(N, 0, -1, 1, 0);
    ResidueMatrix T = ResidueMatrix::make(N, 1, 1, 0, 1);
    std::set<ResidueMatrix> seen{ResidueMatrix::identity(N)};
    std::deque<ResidueMatrix> todo(seen.begin(), seen.end());
    while (!todo.empty()) {
        ResidueMatrix m = todo.front();
        todo.pop_front();
        for (const auto& g : {S, T}) {
            ResidueMatrix x = m.mul(g);
            if (seen.insert(x).second) todo.push_back(x);
        }
    }
    return {seen.begin(), seen.end()};
}

namespace {
CongruenceSubgroup finish(long level, std::set<ResidueMatrix> els, std::string tag) {
    CongruenceSubgroup G;
    G.level = level;
    G.elements = std::move(els);
    G.contains_minus_id = G.elements.count(ResidueMatrix::make(level, -1, 0, 0, -1)) > 0;
    G.tag = std::move(tag);
    return G;
}
} // namespace

CongruenceSubgroup subgroup_gamma(long N) {
    return finish(N, {ResidueMatrix::identity(N)}, "gamma:" + std::to_string(N));
}

CongruenceSubgroup subgroup_gammaNt(long N, long t) {
    if (t < 1 || N % t != 0) throw parse_error("gammaNt: t must divide N");
    std::set<ResidueMatrix> els;
    for (long b = 0; b < N; b += t) els.insert(ResidueMatrix::make(N, 1, b, 0, 1));
    return finish(N, std::move(els), "gammaNt:" + std::to_string(N) + "," + std::to_string(t));
}

CongruenceSubgroup subgroup_gamma1(long N) {
    auto G = subgroup_gammaNt(N, 1);
    G.tag = "gamma1:" + std::to_string(N);
    return G;
}

CongruenceSubgroup subgroup_gamma0(long N) {
    std::set<ResidueMatrix> els;
    for (long a = 0; a < N; ++a) {
        if (std::gcd(a, N) != 1) continue;
        long d = mod_inverse(a, N);
        for (long b = 0; b < N; ++b) els.insert(ResidueMatrix::make(N, a, b, 0, d));
    }
    return finish(N, std::move(els), "gamma0:" + std::to_string(N));
}

CongruenceSubgroup subgroup_larcher(long p, long q, long r, long chi, long tau) {
    if (p < 1 || q < 1 || r < 1 || chi < 1) throw parse_error("larcher: positive parameters required");
    if ((q * r) % p != 0) throw parse_error("larcher: p | qr required");
    if (std::gcd(p, (q * r) / p) % chi != 0) throw parse_error("larcher: chi | gcd(p, qr/p) required");
    long N = std::lcm(std::lcm(p * chi, q), r * chi);
    std::set<ResidueMatrix> els;
    for (const auto& m : sl2_mod(N)) {
        if (mod(m.a - 1, p) != 0 || mod(m.d - 1, p) != 0) continue;
        if (m.b % q != 0 || m.c % r != 0) continue;
        // entries determine (a-1)/p mod chi and c/r mod chi since p*chi | N and r*chi | N
        long ap = ((m.a - 1) / p) % chi;
        long cr = (m.c / r) % chi;
        if (mod(cr - tau * ap, chi) != 0) continue;
        els.insert(m);
    }
    std::ostringstream tag;
    tag << "larcher:" << p << "," << q << "," << r << "," << chi << "," << tau;
    return finish(N, std::move(els), tag.str());
}

CongruenceSubgroup subgroup_generated(long N, const std::vector<std::array<long, 4>>& gens) {
    std::set<ResidueMatrix> seen{ResidueMatrix::identity(N)};
    std::vector<ResidueMatrix> gs;
    for (const auto& g : gens) gs.push_back(ResidueMatrix::make(N, g[0], g[1], g[2], g[3]));
    std::deque<ResidueMatrix> todo(seen.begin(), seen.end());
    while (!todo.empty()) {
        ResidueMatrix m = todo.front();
        todo.pop_front();
        for (const auto& g : gs) {
            ResidueMatrix x = m.mul(g);
            if (seen.insert(x).second) todo.push_back(x);
        }
    }
    std::ostringstream tag;
    tag << "gens:" << N << ":";
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i) tag << ";";
        tag << gens[i][0] << "," << gens[i][1] << "," << gens[i][2] << "," << gens[i][3];
    }
    return finish(N, std::move(seen), tag.str());
}

CongruenceSubgroup parse_group_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw parse_error("group spec: missing ':' in '" + spec + "'");
    std::string family = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    auto nums = [&](const std::string& s, char sep) {
        std::vector<long> out;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, sep)) {
            try {
                size_t pos = 0;
                out.push_back(std::stol(tok, &pos));
                if (pos != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw parse_error("group spec: bad integer '" + tok + "'");
            }
        }
        return out;
    };
    if (family == "gamma" || family == "gamma1" || family == "gamma0") {
        auto v = nums(rest, ',');
        if (v.size() != 1 || v[0] < 1) throw parse_error("group spec: " + family + ":N");
        if (family == "gamma") return subgroup_gamma(v[0]);
        if (family == "gamma1") return subgroup_gamma1(v[0]);
        return subgroup_gamma0(v[0]);
    }
    if (family == "gammaNt") {
        auto v = nums(rest, ',');
        if (v.size() != 2) throw parse_error("group spec: gammaNt:N,t");
        return subgroup_gammaNt(v[0], v[1]);
    }
    if (family == "larcher") {
        auto v = nums(rest, ',');
        if (v.size() != 5) throw parse_error("group spec: larcher:p,q,r,chi,tau");
        return subgroup_larcher(v[0], v[1], v[2], v[3], v[4]);
    }
    if (family == "gens") {
        auto colon2 = rest.find(':');
        if (colon2 == std::string::npos) throw parse_error("group spec: gens:N:a,b,c,d;...");
        long N = nums(rest.substr(0, colon2), ',').at(0);
        std::vector<std::array<long, 4>> gens;
        std::stringstream ss(rest.substr(colon2 + 1));
        std::string tok;
        while (std::getline(ss, tok, ';')) {
            auto v = nums(tok, ',');
            if (v.size() != 4) throw parse_error("group spec: generator needs 4 entries");
            gens.push_back({v[0], v[1], v[2], v[3]});
        }
        return subgroup_generated(N, gens);
    }
    throw parse_error("group spec: unknown family '" + family + "'");
}

// ---- Lambda_N and orbits ------------------------------------------------

LatticePoint LatticePoint::make(long n, long l1, long l2) {
    LatticePoint p{n, mod(l1, n), mod(l2, n)};
    if (std::gcd(std::gcd(p.l1, p.l2), n) != 1)
        throw domain_error("LatticePoint: order not exactly N");
    return p;
}

std::vector<LatticePoint> lambda_points(long N) {
    std::vector<LatticePoint> out;
    for (long a = 0; a < N; ++a)
        for (long b = 0; b < N; ++b)
            if (std::gcd(std::gcd(a, b), N) == 1) out.push_back(LatticePoint{N, a, b});
    return out;
}

bool LatticeOrbit::contains(const LatticePoint& p) const {
    return std::binary_search(points.begin(), points.end(), p);
}

namespace {
LatticeOrbit orbit_of(const CongruenceSubgroup& G, const LatticePoint& start) {
    std::set<LatticePoint> seen{start};
    std::deque<LatticePoint> todo{start};
    while (!todo.empty()) {
        LatticePoint p = todo.front();
        todo.pop_front();
        for (const auto& g : G.elements) {
            LatticePoint q = p.act(g);
            if (seen.insert(q).second) todo.push_back(q);
        }
    }
    LatticeOrbit O;
    O.points.assign(seen.begin(), seen.end());
    O.regular = true;
    for (const auto& p : O.points)
        if (seen.count(p.negate())) { O.regular = false; break; }
    return O;
}
} // namespace

std::vector<LatticeOrbit> orbits(const CongruenceSubgroup& G) {
    std::vector<LatticeOrbit> out;
    std::set<LatticePoint> done;
    for (const auto& p : lambda_points(G.level)) {
        if (done.count(p)) continue;
        LatticeOrbit O = orbit_of(G, p);
        done.insert(O.points.begin(), O.points.end());
        out.push_back(std::move(O));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---- cusps --------------------------------------------------------------

std::string Cusp::str() const {
    if (is_infinity()) return "inf";
    if (beta == 1) return std::to_string(alpha);
    return std::to_string(alpha) + "/" + std::to_string(beta);
}

bool Cusp::operator<(const Cusp& o) const {
    if (is_infinity() != o.is_infinity()) return is_infinity();
    return std::pair{alpha, beta} < std::pair{o.alpha, o.beta};
}

std::pair<long, long> cusp_fraction_of_point(const LatticePoint& p) {
    long N = p.n;
    if (N == 1) return {1, 0};
    long a = p.l1, b = p.l2;   // lift of (l1, l2) to [0, N)
    if (a == 0) {
        if (b == 1 || b == N - 1) return {1, 0};   // phi_N(inf) = +-(0, 1)
        a = N;                                     // gcd(N, b) = 1 since gcd(b, N) = 1
    }
    long j = 0;
    while (std::gcd(a, b + j * N) != 1) ++j;       // exists since gcd(l1, l2, N) = 1
    b += j * N;
    // x = -l2'/l1'
    long alpha = -b, beta = a;
    if (beta < 0) { alpha = -alpha; beta = -beta; }
    if (beta == 0) alpha = 1;
    return {alpha, beta};
}

std::array<long, 4> cusp_scaling_matrix(long alpha, long beta) {
    long g, x, y;
    egcd(alpha, beta, g, x, y);
    if (g != 1) throw domain_error("cusp_scaling_matrix: representative not reduced");
    // gamma = (alpha, -y; beta, x), det = alpha*x + beta*y = 1
    return {alpha, -y, beta, x};
}

std::pair<long, bool> amplitude(const CongruenceSubgroup& G, long alpha, long beta) {
    long N = G.level;
    auto gm = cusp_scaling_matrix(alpha, beta);
    // gamma T^h gamma^{-1} = (1 - h*alpha*beta, h*alpha^2; -h*beta^2, 1 + h*alpha*beta)
    for (long h = 1; h <= N; ++h) {
        ResidueMatrix M = ResidueMatrix::make(
            N, 1 - h * gm[0] * gm[2], h * gm[0] * gm[0], -h * gm[2] * gm[2], 1 + h * gm[0] * gm[2]);
        if (G.contains(M)) return {h, false};
        if (G.contains(M.negate())) return {h, true};
    }
    throw internal_error("amplitude: no h <= N found (group does not contain Gamma(N)?)");
}

namespace {
// full +-closed G-orbit through p (the merged orbit O union -O)
std::set<LatticePoint> merged_orbit(const CongruenceSubgroup& G, const LatticePoint& p) {
    std::set<LatticePoint> seen{p, p.negate()};
    std::deque<LatticePoint> todo(seen.begin(), seen.end());
    while (!todo.empty()) {
        LatticePoint q = todo.front();
        todo.pop_front();
        for (const auto& g : G.elements) {
            LatticePoint r = q.act(g);
            if (seen.insert(r).second) todo.push_back(r);
        }
    }
    return seen;
}

long class_count(long N, size_t npoints) {
    return N <= 2 ? (long)npoints : (long)npoints / 2;
}
} // namespace

long orbit_size_in_cusps(const CongruenceSubgroup& G, long alpha, long beta) {
    // phi_N(alpha/beta) = class of (beta, -alpha)
    LatticePoint p = LatticePoint::make(G.level, beta, -alpha);
    auto m = merged_orbit(G, p);
    return class_count(G.level, m.size());
}

std::vector<Cusp> cusps(const CongruenceSubgroup& G) {
    std::vector<Cusp> out;
    std::set<LatticePoint> done;
    for (const auto& p : lambda_points(G.level)) {
        if (done.count(p)) continue;
        auto m = merged_orbit(G, p);
        done.insert(m.begin(), m.end());
        Cusp c;
        c.point = *m.begin();
        auto [alpha, beta] = cusp_fraction_of_point(c.point);
        c.alpha = alpha;
        c.beta = beta;
        auto [h, minus_only] = amplitude(G, alpha, beta);
        c.amplitude = h;
        c.regular = G.contains_minus_id || !minus_only;
        c.orbit_size = class_count(G.level, m.size());
        out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Cusp min_amplitude_cusp(const CongruenceSubgroup& G) {
    auto cs = cusps(G);
    const Cusp* best = &cs.front();
    for (const auto& c : cs)
        if (c.amplitude < best->amplitude || (c.amplitude == best->amplitude && c < *best))
            best = &c;
    return *best;
}

// ---- admissible representatives ----------------------------------------

LatticePoint AdmissibleReps::rep_of(const LatticePoint& p, bool& flipped) const {
    if (chosen.count(p)) { flipped = false; return p; }
    LatticePoint q = p.negate();
    if (!chosen.count(q)) throw internal_error("AdmissibleReps: point class not covered");
    flipped = true;
    return q;
}

AdmissibleReps default_transversal(long N) {
    AdmissibleReps A;
    A.n = N;
    if (N <= 2) {
        for (const auto& p : lambda_points(N)) A.chosen.insert(p);
        return A;
    }
    // type I: (0, l2), 1 <= l2 < N/2 coprime to N
    for (long l2 = 1; 2 * l2 < N; ++l2)
        if (std::gcd(l2, N) == 1) A.chosen.insert(LatticePoint::make(N, 0, l2));
    // type II: (l1, l2), 1 <= l1 < N/2
    for (long l1 = 1; 2 * l1 < N; ++l1)
        for (long l2 = 0; l2 < N; ++l2)
            if (std::gcd(std::gcd(l1, l2), N) == 1) A.chosen.insert(LatticePoint::make(N, l1, l2));
    // type III: N even
    if (N % 2 == 0) {
        if (N == 4) {
            A.chosen.insert(LatticePoint::make(4, 2, 1));
        } else {
            for (long l2 = 1; 4 * l2 < N; ++l2)
                if (std::gcd(l2, N / 2) == 1) {
                    A.chosen.insert(LatticePoint::make(N, N / 2, l2));
                    A.chosen.insert(LatticePoint::make(N, N / 2, N / 2 + l2));
                }
        }
    }
    // transversal sanity
    for (const auto& p : lambda_points(N)) {
        bool in_p = A.chosen.count(p) > 0, in_n = A.chosen.count(p.negate()) > 0;
        if (in_p == in_n && !(p == p.negate()))
            throw internal_error("default_transversal: not a transversal at " +
                                 std::to_string(p.l1) + "," + std::to_string(p.l2));
    }
    return A;
}

bool is_admissible(const CongruenceSubgroup& G, const AdmissibleReps& A) {
    if (A.n != G.level) return false;
    for (const auto& O : orbits(G)) {
        if (!O.regular) continue;
        size_t hits = 0;
        for (const auto& p : O.points) hits += A.chosen.count(p);
        if (hits != 0 && hits != O.points.size()) return false;
    }
    return true;
}

AdmissibleReps admissible_reps(const CongruenceSubgroup& G) {
    AdmissibleReps A = default_transversal(G.level);
    if (is_admissible(G, A)) return A;
    A.chosen.clear();
    std::set<LatticePoint> visited;
    for (const auto& O : orbits(G)) {
        if (visited.count(O.points.front())) continue;
        if (!O.regular) {
            // pick the lex-smaller member of each {+-lambda} pair inside the orbit
            for (const auto& p : O.points)
                if (p <= p.negate()) A.chosen.insert(p);
            visited.insert(O.points.begin(), O.points.end());
        } else {
            // choose between O and -O: the one holding the overall lex-least point
            std::set<LatticePoint> neg;
            for (const auto& p : O.points) neg.insert(p.negate());
            if (O.points.front() < *neg.begin())
                A.chosen.insert(O.points.begin(), O.points.end());
            else
                A.chosen.insert(neg.begin(), neg.end());
            visited.insert(O.points.begin(), O.points.end());
            visited.insert(neg.begin(), neg.end());
        }
    }
    return A;
}

// ---- appendix closed forms ---------------------------------------------

std::vector<LatticeOrbit> closed_form_orbits_gammaNt(long N, long t) {
    if (t < 1 || N % t != 0) throw parse_error("closed_form_orbits_gammaNt: t must divide N");
    // orbit of (l1, l0) is {(l1, l0 + j*gcd(t*l1, N))}; type I (l1 = 0) gives singletons,
    // type III (l1 = N/2) pairs up exactly when t is odd
    std::vector<LatticeOrbit> out;
    std::set<LatticePoint> done;
    for (const auto& p : lambda_points(N)) {
        if (done.count(p)) continue;
        long dt = std::gcd(t * p.l1, N);
        if (dt == 0) dt = N;
        LatticeOrbit O;
        std::set<LatticePoint> pts;
        for (long j = 0; j * dt < N; ++j) pts.insert(LatticePoint::make(N, p.l1, p.l2 + j * dt));
        O.points.assign(pts.begin(), pts.end());
        O.regular = true;
        for (const auto& q : O.points)
            if (pts.count(q.negate())) { O.regular = false; break; }
        done.insert(pts.begin(), pts.end());
        out.push_back(std::move(O));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LatticeOrbit> closed_form_orbits_gamma0(long N) {
    if (N < 3) throw parse_error("closed_form_orbits_gamma0: N >= 3 required");
    std::vector<LatticeOrbit> out;
    auto push = [&](std::set<LatticePoint> pts) {
        LatticeOrbit O;
        O.points.assign(pts.begin(), pts.end());
        O.regular = false;   // -Id in Gamma0(N): every orbit is self-negative
        out.push_back(std::move(O));
    };
    // type I: all (0, l2) in a single orbit
    {
        std::set<LatticePoint> pts;
        for (long l2 = 0; l2 < N; ++l2)
            if (std::gcd(l2, N) == 1) pts.insert(LatticePoint::make(N, 0, l2));
        push(std::move(pts));
    }
    // type III: all (N/2, l2), gcd(l2, N/2) = 1, single orbit
    if (N % 2 == 0) {
        std::set<LatticePoint> pts;
        for (long l2 = 0; l2 < N; ++l2)
            if (std::gcd(l2, N / 2) == 1) pts.insert(LatticePoint::make(N, N / 2, l2));
        push(std::move(pts));
    }
    // type II: one orbit per (delta | N, delta < N/2; l0 coprime to g = gcd(delta, N/delta))
    for (long delta = 1; 2 * delta < N; ++delta) {
        if (N % delta != 0) continue;
        long g = std::gcd(delta, N / delta);
        for (long l0 = 0; l0 < g; ++l0) {
            if (std::gcd(l0, g) != 1) continue;   // g = 1 admits only l0 = 0 (gcd(0,1) = 1)
            std::set<LatticePoint> pts;
            for (long a = 1; a < N / delta; ++a) {
                if (std::gcd(a, N / delta) != 1) continue;
                for (long l2 = 0; l2 < delta; ++l2) {
                    if (std::gcd(l2, delta) != 1) continue;
                    if (mod(a * l2 - l0, g) != 0) continue;
                    for (long j = 0; j * delta < N; ++j)
                        pts.insert(LatticePoint::make(N, a * delta, l2 + j * delta));
                }
            }
            push(std::move(pts));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace eis
