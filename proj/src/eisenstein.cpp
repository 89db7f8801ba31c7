#include "eis/eisenstein.hpp"
#include "eis/errors.hpp"
#include "eis/special_values.hpp"
#include <algorithm>
#include <mutex>
#include <optional>

namespace eis {

namespace {

long mod(long a, long n) { return ((a % n) + n) % n; }

// memoized powers of zeta_N in the power basis
const std::vector<CycNum>& zeta_table(long N) {
    static std::map<long, std::vector<CycNum>> memo;
    static std::mutex mx;
    std::lock_guard<std::mutex> lk(mx);
    auto it = memo.find(N);
    if (it != memo.end()) return it->second;
    std::vector<CycNum> t;
    t.reserve(N);
    for (long i = 0; i < N; ++i) t.push_back(CycNum::zeta_pow(N, i));
    return memo.emplace(N, std::move(t)).first->second;
}

Rational sign_pow(long k) { return Rational(k % 2 == 0 ? 1 : -1); }

} // namespace

// ---- scaled unnormalized expansion (the Fourier formula at s = 0) -------

QExpansion g_series(const LatticePoint& lambda, long k, long J) {
    if (k < 2) throw domain_error("g_series: k >= 2 required");
    long N = lambda.n;
    const auto& zeta = zeta_table(N);
    QExpansion f(k, N, J, N);
    if (lambda.l1 % N == 0) f.coeffs[0] = partial_zeta_scaled(lambda.l2, N, k);
    Rational pref = Rational(k % 2 == 0 ? 1 : -1) /
                    (Rational(factorial(k - 1)) * Rational(int_pow(Integer(N), k)));
    for (long j = 1; j <= J; ++j) {
        CycNum acc(N);
        bool hit = false;
        for (long r = 1; r <= j; ++r) {
            if (j % r != 0) continue;
            Rational rk(int_pow(Integer(r), k - 1));
            if (mod(j / r - lambda.l1, N) == 0) {           // positive r
                acc += zeta[mod(r * lambda.l2, N)] * rk;
                hit = true;
            }
            if (mod(j / r + lambda.l1, N) == 0) {           // negative r
                acc += zeta[mod(-r * lambda.l2, N)] * (rk * sign_pow(k));
                hit = true;
            }
        }
        if (hit) f.coeffs[j] = acc * pref;
    }
    if (k == 2) f.nonhol = CycNum::from_rational(N, Rational(1, 4 * N * N));
    return f;
}

// ---- the finite S-tilde systems per unit-scaling class ------------------

namespace {

std::vector<std::vector<CycNum>> invert_cyc_matrix(std::vector<std::vector<CycNum>> m, long N) {
    size_t n = m.size();
    std::vector<std::vector<CycNum>> inv(n, std::vector<CycNum>(n, CycNum(N)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = CycNum::from_rational(N, 1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) throw internal_error("invert_cyc_matrix: singular system");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        CycNum d = m[col][col].inverse();
        for (size_t j = 0; j < n; ++j) {
            m[col][j] = m[col][j] * d;
            inv[col][j] = inv[col][j] * d;
        }
        for (size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            CycNum c = m[row][col];
            for (size_t j = 0; j < n; ++j) {
                m[row][j] -= c * m[col][j];
                inv[row][j] -= c * inv[col][j];
            }
        }
    }
    return inv;
}

struct Resolver {
    AdmissibleReps A;
    // resolve a point to its A-representative and the odd-weight sign
    std::pair<LatticePoint, bool> operator()(const LatticePoint& p) const {
        bool fl = false;
        LatticePoint r = A.rep_of(p, fl);
        return {r, fl};
    }
};

} // namespace

std::vector<ScalingSystem> scaling_systems(long N, long k) {
    if (k < 2) throw domain_error("scaling_systems: k >= 2 required");
    std::vector<ScalingSystem> out;
    if (N <= 2) {
        if (k % 2 != 0) return out;   // the normalized space is zero
        for (const auto& p : lambda_points(N)) {
            ScalingSystem s;
            s.index = {p};
            s.mat = {{partial_zeta_scaled(1, N, k)}};
            s.inv = {{s.mat[0][0].inverse()}};
            out.push_back(std::move(s));
        }
        return out;
    }
    Resolver res{default_transversal(N)};
    std::vector<LatticePoint> A(res.A.chosen.begin(), res.A.chosen.end());
    std::map<LatticePoint, size_t> idx;
    for (size_t i = 0; i < A.size(); ++i) idx[A[i]] = i;
    // union-find over A under the unit-scaling action
    std::vector<size_t> parent(A.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t i = 0; i < A.size(); ++i)
        for (long d = 2; d < N; ++d) {
            if (std::gcd(d, N) != 1) continue;
            auto [r, fl] = res(LatticePoint::make(N, d * A[i].l1, d * A[i].l2));
            size_t a = find(i), b = find(idx.at(r));
            if (a != b) parent[a] = b;
        }
    std::map<size_t, std::vector<LatticePoint>> classes;
    for (size_t i = 0; i < A.size(); ++i) classes[find(i)].push_back(A[i]);

    std::vector<long> D;
    for (long d = 1; 2 * d < N; ++d)
        if (std::gcd(d, N) == 1) D.push_back(d);
    std::vector<CycNum> S;
    for (long d : D) S.push_back(partial_zeta_scaled(d, N, k));

    for (auto& [root, pts] : classes) {
        std::sort(pts.begin(), pts.end());
        std::map<LatticePoint, size_t> col;
        for (size_t i = 0; i < pts.size(); ++i) col[pts[i]] = i;
        ScalingSystem sys;
        sys.index = pts;
        sys.mat.assign(pts.size(), std::vector<CycNum>(pts.size(), CycNum(N)));
        for (size_t i = 0; i < pts.size(); ++i)
            for (size_t t = 0; t < D.size(); ++t) {
                long dinv = mod_inverse(D[t], N);
                auto [r, fl] = res(LatticePoint::make(N, dinv * pts[i].l1, dinv * pts[i].l2));
                CycNum term = (fl && k % 2 != 0) ? -S[t] : S[t];
                sys.mat[i][col.at(r)] += term;
            }
        sys.inv = invert_cyc_matrix(sys.mat, N);
        out.push_back(std::move(sys));
    }
    return out;
}

// ---- normalized series via the exact solve, cached per (N, k) -----------

namespace {

struct EFamily {
    long J = -1;
    std::map<LatticePoint, QExpansion> series;
};

std::map<std::pair<long, long>, EFamily> efam_cache;
std::mutex efam_mutex;

const EFamily& e_family(long N, long k, long J) {
    std::lock_guard<std::mutex> lk(efam_mutex);
    auto key = std::make_pair(N, k);
    auto it = efam_cache.find(key);
    if (it != efam_cache.end() && it->second.J >= J) return it->second;

    EFamily fam;
    fam.J = J;
    if (N <= 2 && k % 2 != 0) {
        for (const auto& p : lambda_points(N)) fam.series.emplace(p, QExpansion(k, N, J, N));
    } else if (N <= 2) {
        CycNum Sinv = partial_zeta_scaled(1, N, k).inverse();
        for (const auto& p : lambda_points(N))
            fam.series.emplace(p, g_series(p, k, J).scaled(Sinv));
    } else {
        Resolver res{default_transversal(N)};
        for (const auto& sys : scaling_systems(N, k)) {
            std::vector<QExpansion> rhs;
            for (const auto& p : sys.index) rhs.push_back(g_series(p, k, J));
            for (size_t i = 0; i < sys.index.size(); ++i) {
                QExpansion e(k, N, J, N);
                for (size_t j = 0; j < rhs.size(); ++j) e += rhs[j].scaled(sys.inv[i][j]);
                fam.series.emplace(sys.index[i], std::move(e));
            }
        }
        for (const auto& p : lambda_points(N)) {
            if (fam.series.count(p)) continue;
            auto [r, fl] = res(p);
            QExpansion e = fam.series.at(r);
            if (k % 2 != 0) e = e.scaled(Rational(-1));
            fam.series.emplace(p, std::move(e));
        }
    }
    return efam_cache.insert_or_assign(key, std::move(fam)).first->second;
}

QExpansion truncate_to(QExpansion f, long J) {
    if (f.trunc > J) {
        f.trunc = J;
        f.coeffs.resize(J + 1);
    }
    return f;
}

} // namespace

QExpansion e_series(const LatticePoint& lambda, long k, long J) {
    if (k < 2) throw domain_error("e_series: k >= 2 required");
    return truncate_to(e_family(lambda.n, k, J).series.at(lambda), J);
}

QExpansion orbital_sum_points(char kind, const std::vector<LatticePoint>& pts, long k, long J) {
    if (pts.empty()) throw domain_error("orbital_sum: empty point list");
    QExpansion acc(k, pts.front().n, J, pts.front().n);
    for (const auto& p : pts) acc += (kind == 'G') ? g_series(p, k, J) : e_series(p, k, J);
    return acc;
}

QExpansion orbital_sum(char kind, const LatticeOrbit& O, long k, long J) {
    return orbital_sum_points(kind, O.points, k, J);
}

// ---- constant terms via exact labels ------------------------------------

SeriesCombination slash(const SeriesCombination& f, const std::array<long, 4>& gamma) {
    SeriesCombination out;
    out.reserve(f.size());
    for (const auto& t : f) {
        long N = t.point.n;
        ResidueMatrix g = ResidueMatrix::make(N, gamma[0], gamma[1], gamma[2], gamma[3]);
        out.push_back({t.coeff, t.kind, t.point.act(g)});
    }
    return out;
}

namespace {
CycNum label_constant_term(char kind, const LatticePoint& p, long k) {
    long N = p.n;
    if (kind == 'G')
        return (p.l1 % N == 0) ? partial_zeta_scaled(p.l2, N, k) : CycNum(N);
    // normalized: the indicator formula with the epsilon_N convention
    Rational eps = (N >= 3) ? Rational(1) : Rational(1, 2);
    Rational v(0);
    if (p.l1 % N == 0) {
        if (mod(p.l2 - 1, N) == 0) v += 1;
        if (mod(p.l2 + 1, N) == 0) v += sign_pow(k);
    }
    return CycNum::from_rational(N, eps * v);
}
} // namespace

CycNum combination_constant_term(const SeriesCombination& f, long k) {
    long L = 1;
    for (const auto& t : f) L = lcm_ll(L, lcm_ll(t.coeff.conductor, t.point.n));
    CycNum acc(L);
    for (const auto& t : f)
        acc += t.coeff.embed(L) * label_constant_term(t.kind, t.point, k).embed(L);
    return acc;
}

CycNum constant_term_at_cusp(const SeriesCombination& f, long k, const std::array<long, 4>& gamma) {
    return combination_constant_term(slash(f, gamma), k);
}

// ---- spectral / unnormalized bases --------------------------------------

const LatticeOrbit& orbit_attached_to_cusp(const std::vector<LatticeOrbit>& os,
                                           const AdmissibleReps& A, const Cusp& x) {
    bool fl = false;
    LatticePoint rep = A.rep_of(x.point, fl);
    for (const auto& O : os)
        if (O.contains(rep)) return O;
    throw internal_error("orbit_attached_to_cusp: point not covered by the orbit partition");
}

namespace {

struct SpectralPiece {
    QExpansion series;
    SeriesCombination labels;
    LatticeOrbit orbit;
};

SpectralPiece make_piece(const CongruenceSubgroup& G, const std::vector<LatticeOrbit>& os,
                         const AdmissibleReps& A, const Cusp& x, char kind, long k, long J) {
    long N = G.level;
    if (k % 2 != 0) {
        if (G.contains_minus_id)
            throw domain_error("spectral_series: odd weight with -Id in G (space is zero)");
        if (!x.regular) throw domain_error("spectral_series: odd weight at an irregular cusp");
    }
    const LatticeOrbit& O = orbit_attached_to_cusp(os, A, x);
    Rational factor = (!O.regular && k % 2 == 0 && N >= 3) ? Rational(1, 2) : Rational(1);
    SpectralPiece out;
    out.orbit = O;
    out.series = orbital_sum(kind, O, k, J).scaled(factor);
    CycNum c = CycNum::from_rational(N, factor);
    for (const auto& p : O.points) out.labels.push_back({c, kind, p});
    return out;
}

EisensteinBasis build_basis(const CongruenceSubgroup& G, long k, long J, char kind) {
    if (k < 2) throw domain_error("basis: k >= 2 required");
    EisensteinBasis B;
    B.group_tag = G.tag;
    B.weight = k;
    B.kind = (kind == 'G') ? "unnormalized" : "spectral";
    if (k % 2 != 0 && G.contains_minus_id) return B;
    auto cs = cusps(G);
    auto os = orbits(G);
    AdmissibleReps A = admissible_reps(G);
    if (k == 2) {
        // combinations against the minimal-amplitude cusp kill the 1/Im(tau) term
        const Cusp* x0 = &cs.front();
        for (const auto& c : cs)
            if (c.amplitude < x0->amplitude || (c.amplitude == x0->amplitude && c < *x0)) x0 = &c;
        SpectralPiece base = make_piece(G, os, A, *x0, kind, k, J);
        for (const auto& x : cs) {
            if (x.same_fraction(*x0)) continue;
            SpectralPiece px = make_piece(G, os, A, x, kind, k, J);
            Rational ratio = -Rational(x.orbit_size) / Rational(x0->orbit_size);
            BasisElement el;
            el.cusp = x;
            el.orbit = px.orbit;
            el.series = px.series + base.series.scaled(ratio);
            el.labels = px.labels;
            CycNum rc = CycNum::from_rational(G.level, ratio);
            for (const auto& t : base.labels) el.labels.push_back({t.coeff * rc, t.kind, t.point});
            B.elements.push_back(std::move(el));
        }
        return B;
    }
    for (const auto& x : cs) {
        if (k % 2 != 0 && !x.regular) continue;
        SpectralPiece p = make_piece(G, os, A, x, kind, k, J);
        B.elements.push_back({x, std::move(p.orbit), std::move(p.series), std::move(p.labels)});
    }
    return B;
}

} // namespace

QExpansion spectral_series(const CongruenceSubgroup& G, const Cusp& x, const AdmissibleReps& A,
                           long k, long J) {
    if (k < 2) throw domain_error("spectral_series: k >= 2 required");
    auto os = orbits(G);
    return make_piece(G, os, A, x, 'E', k, J).series;
}

QExpansion unnormalized_series(const CongruenceSubgroup& G, const Cusp& x, const AdmissibleReps& A,
                               long k, long J) {
    if (k < 2) throw domain_error("unnormalized_series: k >= 2 required");
    auto os = orbits(G);
    return make_piece(G, os, A, x, 'G', k, J).series;
}

EisensteinBasis spectral_basis(const CongruenceSubgroup& G, long k, long J) {
    return build_basis(G, k, J, 'E');
}

EisensteinBasis unnormalized_basis(const CongruenceSubgroup& G, long k, long J) {
    return build_basis(G, k, J, 'G');
}

long dimension_from_cusps(const CongruenceSubgroup& G, long k) {
    auto cs = cusps(G);
    if (k % 2 != 0) {
        if (G.contains_minus_id) return 0;
        long n = 0;
        for (const auto& c : cs) n += c.regular;
        return n;
    }
    if (k == 2) return (long)cs.size() - 1;
    return (long)cs.size();
}

// ---- appendix closed forms ----------------------------------------------

QExpansion closed_form_series_gammaNt(const LatticePoint& lambda, long N, long t, long k, long J) {
    if (t < 1 || N % t != 0) throw parse_error("closed_form_series_gammaNt: t must divide N");
    if (k < 2) throw domain_error("closed_form_series_gammaNt: k >= 2 required");
    long l1 = lambda.l1, l2 = lambda.l2;
    long d1 = (l1 == 0) ? N : std::gcd(l1, N);
    long dt = (l1 == 0) ? N : std::gcd(t * l1, N);
    const auto& zeta = zeta_table(N);
    long m = N / dt;   // zeta_{dt} = zeta_N^m
    QExpansion f(k, N, J, N);
    if (l1 % N == 0) f.coeffs[0] = partial_zeta_scaled(l2, dt, k).embed(N);
    Rational pref = sign_pow(k) / (Rational(factorial(k - 1)) * Rational(int_pow(Integer(dt), k)));
    long step = N * d1 / dt;   // e(j*d1*tau/dt) = q_N^(j*step)
    for (long j = 1; j * step <= J; ++j) {
        CycNum acc(N);
        bool hit = false;
        for (long r = 1; r <= j; ++r) {
            if (j % r != 0) continue;
            Rational rk(int_pow(Integer(r), k - 1));
            if (mod(j / r - l1 / d1, N / d1) == 0) {
                acc += zeta[mod(m * r * l2, N)] * rk;
                hit = true;
            }
            if (mod(j / r + l1 / d1, N / d1) == 0) {
                acc += zeta[mod(-m * r * l2, N)] * (rk * sign_pow(k));
                hit = true;
            }
        }
        if (hit) f.coeffs[j * step] = acc * pref;
    }
    if (k == 2) f.nonhol = CycNum::from_rational(N, Rational(1, 4 * dt * N));
    return f;
}

long orbit_size_formula_gamma0(const LatticePoint& lambda, long N) {
    if (N < 3) throw domain_error("orbit_size_formula_gamma0: N >= 3 required");
    long d1 = (lambda.l1 == 0) ? N : std::gcd(lambda.l1, N);
    return (N / d1) * euler_phi(std::lcm(d1, N / d1));
}

// ---- level inclusion (the scaled G-span across levels) ------------------

namespace {

// E(lambda', N) as a combination of level-N scaled G-series
std::vector<std::pair<LatticePoint, CycNum>> e_in_g_basis(
    const std::vector<ScalingSystem>& systems, const Resolver* res, long N, long k,
    const LatticePoint& lp) {
    if (N <= 2) {
        // even k only here
        return {{lp, partial_zeta_scaled(1, N, k).inverse()}};
    }
    auto [rep, fl] = (*res)(lp);
    Rational s = (fl && k % 2 != 0) ? Rational(-1) : Rational(1);
    for (const auto& sys : systems) {
        auto it = std::find(sys.index.begin(), sys.index.end(), rep);
        if (it == sys.index.end()) continue;
        size_t row = it - sys.index.begin();
        std::vector<std::pair<LatticePoint, CycNum>> out;
        for (size_t j = 0; j < sys.index.size(); ++j)
            if (!sys.inv[row][j].is_zero()) out.push_back({sys.index[j], sys.inv[row][j] * s});
        return out;
    }
    throw internal_error("e_in_g_basis: representative not in any scaling class");
}

} // namespace

std::map<LatticePoint, CycNum> express_in_level(const LatticePoint& mu, long N, long k) {
    long d = mu.n;
    if (N % d != 0) throw domain_error("express_in_level: level must divide N");
    std::map<LatticePoint, CycNum> out;
    if (d == N) {
        out.emplace(mu, CycNum::from_rational(N, 1));
        return out;
    }
    if (d <= 2 && k % 2 != 0) return out;   // the level-d series vanishes identically
    auto systems = scaling_systems(N, k);
    std::optional<Resolver> res;
    if (N >= 3) res.emplace(Resolver{default_transversal(N)});
    const Resolver* rp = res ? &*res : nullptr;
    // G(mu, d) = sum_delta S_d(delta) E(delta^{-1} mu, d), and each level-d
    // normalized series is the sum of the level-N ones in its residue class
    Rational eps_ratio = (d >= 3 ? Rational(1) : Rational(1, 2)) /
                         (N >= 3 ? Rational(1) : Rational(1, 2));
    std::vector<long> D;
    if (d <= 2)
        D.push_back(1);
    else
        for (long x = 1; 2 * x < d; ++x)
            if (std::gcd(x, d) == 1) D.push_back(x);
    auto lamN = lambda_points(N);
    for (long delta : D) {
        CycNum Sdelta = partial_zeta_scaled(delta, d, k).embed(N);
        long dinv = (d == 1) ? 0 : mod_inverse(delta, d);
        long t1 = (d == 1) ? 0 : mod(dinv * mu.l1, d);
        long t2 = (d == 1) ? 0 : mod(dinv * mu.l2, d);
        for (const auto& lp : lamN) {
            if (d != 1 && (mod(lp.l1 - t1, d) != 0 || mod(lp.l2 - t2, d) != 0)) continue;
            for (auto& [pt, c] : e_in_g_basis(systems, rp, N, k, lp)) {
                CycNum add = Sdelta * c * eps_ratio;
                auto [it, fresh] = out.try_emplace(pt, add);
                if (!fresh) it->second += add;
            }
        }
    }
    return out;
}

// ---- scaling sign on orbital sums ---------------------------------------

int epsilon_A(const CongruenceSubgroup& G, const AdmissibleReps& A, long delta, const Cusp& x,
              long k) {
    if (std::gcd(delta, G.level) != 1) throw domain_error("epsilon_A: delta must be a unit");
    auto os = orbits(G);
    const LatticeOrbit& O = orbit_attached_to_cusp(os, A, x);
    if (!O.regular) return 1;   // sign immaterial (even weight only)
    bool any_flip = false, any_keep = false;
    for (const auto& p : O.points) {
        bool fl = false;
        A.rep_of(LatticePoint::make(G.level, delta * p.l1, delta * p.l2), fl);
        (fl ? any_flip : any_keep) = true;
    }
    if (any_flip && any_keep)
        throw internal_error("epsilon_A: scaled orbit straddles the transversal");
    return any_flip ? -1 : 1;
}

} // namespace eis
