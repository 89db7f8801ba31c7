#include "eis/characters.hpp"
#include "eis/errors.hpp"
#include <algorithm>

namespace eis {

namespace {

long mod(long a, long n) { return n == 1 ? 0 : ((a % n) + n) % n; }

std::vector<long> unit_residues(long N) {
    if (N == 1) return {0};
    std::vector<long> u;
    for (long a = 1; a < N; ++a)
        if (std::gcd(a, N) == 1) u.push_back(a);
    return u;
}

long unit_inverse(long a, long N) { return N == 1 ? 0 : mod_inverse(mod(a, N), N); }

struct CrtGenerator {
    long lifted;    // generator of one cyclic factor, lifted to a unit mod N
    long order;
    long q;         // the prime power it lives in
    long local;     // the generator mod q
};

long multiplicative_order(long a, long q) {
    long o = 1, x = mod(a, q);
    while (x != 1 % q) {
        x = (x * a) % q;
        ++o;
    }
    return o;
}

std::vector<CrtGenerator> crt_generators(long N) {
    std::vector<CrtGenerator> gens;
    long rem = N;
    for (long p = 2; p <= rem; ++p) {
        if (rem % p != 0) continue;
        long q = 1;
        while (rem % p == 0) {
            rem /= p;
            q *= p;
        }
        long cof = N / q;
        auto lift = [&](long g) {
            // x = g mod q, x = 1 mod N/q
            for (long x = 1; x < N; ++x)
                if (mod(x, q) == mod(g, q) && (cof == 1 || mod(x, cof) == 1)) return x;
            throw internal_error("crt_generators: lift not found");
        };
        if (p == 2) {
            if (q == 2) continue;                       // trivial factor
            if (q == 4) {
                gens.push_back({lift(3), 2, q, 3});
            } else {
                gens.push_back({lift(q - 1), 2, q, q - 1});
                gens.push_back({lift(5), q / 4, q, 5});
            }
        } else {
            long phi = q / p * (p - 1);
            long g = 2;
            while (multiplicative_order(g, q) != phi) ++g;
            gens.push_back({lift(g), phi, q, g});
        }
    }
    return gens;
}

// discrete log of the unit a against one cyclic factor
long factor_dlog(long a, const CrtGenerator& gen) {
    long t = mod(a, gen.q), x = 1 % gen.q;
    for (long e = 0; e < gen.order; ++e) {
        if (x == t) return e;
        x = (x * gen.local) % gen.q;
    }
    throw internal_error("factor_dlog: not in the cyclic factor");
}

} // namespace

CycNum DirichletCharacter::operator()(long a) const {
    a = mod(a, modulus);
    auto it = values.find(a);
    return it != values.end() ? it->second : CycNum(value_conductor);
}

CycNum DirichletCharacter::inv_value(long a) const {
    return values.at(unit_inverse(a, modulus));
}

bool DirichletCharacter::is_trivial() const {
    CycNum one = CycNum::from_rational(value_conductor, 1);
    for (const auto& [a, v] : values)
        if (!(v == one)) return false;
    return true;
}

int DirichletCharacter::parity() const {
    CycNum v = (*this)(modulus - 1 + (modulus == 1));
    if (!v.is_rational()) throw internal_error("DirichletCharacter: chi(-1) not rational");
    return v.rational_part() == Rational(1) ? 1 : -1;
}

long DirichletCharacter::order() const {
    long e = value_conductor;
    long ord = 1;
    for (const auto& [a, v] : values) {
        long y = 0;
        while (y < e && !(v == CycNum::zeta_pow(e, y))) ++y;
        if (y == e) throw internal_error("DirichletCharacter: value is not a root of unity");
        if (y != 0) ord = std::lcm(ord, e / std::gcd(e, y));
    }
    return ord;
}

std::vector<DirichletCharacter> enumerate_characters(long N) {
    if (N < 1) throw parse_error("enumerate_characters: N >= 1 required");
    auto gens = crt_generators(N);
    long e = 1;
    for (const auto& g : gens) e = std::lcm(e, g.order);
    auto units = unit_residues(N);
    // per-unit exponent vector against the fixed generators
    std::vector<std::vector<long>> dlogs(units.size(), std::vector<long>(gens.size()));
    // q = 8 and larger needs the sign factor stripped before the 5-power log
    for (size_t ui = 0; ui < units.size(); ++ui) {
        long a = units[ui];
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            const auto& g = gens[gi];
            if (g.q >= 8 && g.local == 5) {
                long t = mod(a, g.q);
                long x = 1;
                long found = -1;
                for (long eexp = 0; eexp < g.order && found < 0; ++eexp) {
                    if (x == t || mod(-x, g.q) == t) found = eexp;
                    x = (x * 5) % g.q;
                }
                if (found < 0) throw internal_error("enumerate_characters: bad 2-adic log");
                dlogs[ui][gi] = found;
            } else if (g.q >= 8 && g.local == g.q - 1) {
                long t = mod(a, g.q);
                long x = 1;
                bool neg = true;
                for (long eexp = 0; eexp < g.q / 4 && neg; ++eexp) {
                    if (x == t) neg = false;
                    x = (x * 5) % g.q;
                }
                dlogs[ui][gi] = neg ? 1 : 0;
            } else {
                dlogs[ui][gi] = factor_dlog(a, g);
            }
        }
    }
    std::vector<DirichletCharacter> out;
    std::vector<long> tuple(gens.size(), 0);
    long total = 1;
    for (const auto& g : gens) total *= g.order;
    for (long idx = 0; idx < total; ++idx) {
        DirichletCharacter chi;
        chi.modulus = N;
        chi.value_conductor = e;
        chi.index = idx;
        for (size_t ui = 0; ui < units.size(); ++ui) {
            long exp = 0;
            for (size_t gi = 0; gi < gens.size(); ++gi)
                exp = mod(exp + tuple[gi] * (e / gens[gi].order) * dlogs[ui][gi], e);
            chi.values.emplace(units[ui], CycNum::zeta_pow(e, exp));
        }
        out.push_back(std::move(chi));
        // odometer: last generator moves fastest
        for (size_t gi = gens.size(); gi-- > 0;) {
            if (++tuple[gi] < gens[gi].order) break;
            tuple[gi] = 0;
        }
    }
    return out;
}

bool is_delta_good(const DirichletCharacter& chi, long delta) {
    long N = chi.modulus;
    if (delta < 1 || N % delta != 0) throw parse_error("is_delta_good: delta must divide N");
    long M = std::lcm(delta, N / delta);
    CycNum one = CycNum::from_rational(chi.value_conductor, 1);
    for (const auto& [a, v] : chi.values)
        if (mod(a - 1, M) == 0 && !cyc_equal(v, one)) return false;
    return true;
}

std::pair<DirichletCharacter, DirichletCharacter> factorize(const DirichletCharacter& chi,
                                                            long delta) {
    long N = chi.modulus;
    if (delta < 1 || N % delta != 0) throw parse_error("factorize: delta must divide N");
    auto c1s = enumerate_characters(N / delta);
    auto c2s = enumerate_characters(delta);
    for (const auto& c1 : c1s)
        for (const auto& c2 : c2s) {
            bool ok = true;
            for (const auto& [a, v] : chi.values) {
                long L = std::lcm(chi.value_conductor,
                                  std::lcm(c1.value_conductor, c2.value_conductor));
                if (!cyc_equal(v.embed(L), c1(a).embed(L) * c2(a).embed(L))) {
                    ok = false;
                    break;
                }
            }
            if (ok) return {c1, c2};
        }
    throw domain_error("factorize: character is not delta-good");
}

std::vector<HeckeLabel> nebentypus_labels(long N, const DirichletCharacter& chi, char kind) {
    if (N < 3) throw domain_error("nebentypus_labels: N >= 3 required");
    if (chi.modulus != N) throw parse_error("nebentypus_labels: modulus mismatch");
    std::vector<HeckeLabel> out;
    out.push_back(HeckeLabel::gamma0(N, kind, 0, 1));
    for (long delta = 1; 2 * delta < N; ++delta) {
        if (N % delta != 0 || !is_delta_good(chi, delta)) continue;
        long g = std::gcd(delta, N / delta);
        for (long l0 = 0; l0 < g; ++l0)
            if (std::gcd(l0, g) == 1) out.push_back(HeckeLabel::gamma0(N, kind, delta, l0));
    }
    if (N % 2 == 0 && is_delta_good(chi, N / 2))
        out.push_back(HeckeLabel::gamma0(N, kind, N / 2, 1));
    std::sort(out.begin(), out.end());
    return out;
}

NebentypusElement nebentypus_series(long N, const DirichletCharacter& chi, const HeckeLabel& label,
                                    long k, long J) {
    if (N < 3) throw domain_error("nebentypus_series: N >= 3 required");
    if (label.group != '0' || label.n != N)
        throw parse_error("nebentypus_series: expected a level-N class label");
    NebentypusElement el;
    el.label = label;
    Rational half(1, 2);
    // (coefficient, gamma1-orbit seed) pairs of the twisted half-sum
    std::vector<std::pair<CycNum, HeckeLabel>> parts;
    if (label.l1 == 0) {
        for (long l2 : unit_residues(N))
            parts.push_back({chi.inv_value(l2) * half, HeckeLabel::gamma1(N, label.kind, 0, l2)});
    } else if (N % 2 == 0 && label.l1 == N / 2) {
        if (!is_delta_good(chi, N / 2))
            throw domain_error("nebentypus_series: character is not N/2-good");
        const auto c2 = factorize(chi, N / 2).second;
        for (long l2 = 0; l2 < N / 2; ++l2) {
            if (std::gcd(l2, N / 2) != 1) continue;
            parts.push_back(
                {c2.inv_value(l2) * half, HeckeLabel::gamma1(N, label.kind, N / 2, l2)});
        }
    } else {
        long delta = label.l1;
        if (!is_delta_good(chi, delta))
            throw domain_error("nebentypus_series: character is not delta-good");
        auto [c1, c2] = factorize(chi, delta);
        long g = std::gcd(delta, N / delta);
        for (long a = 0; a < N / delta; ++a) {
            if (std::gcd(a, N / delta) != 1) continue;
            for (long l2 = 0; l2 < delta; ++l2) {
                if (std::gcd(l2, delta) != 1) continue;
                if (mod(a * l2 - label.l2, g) != 0) continue;
                CycNum c = c1(a).embed(std::lcm(c1.value_conductor, c2.value_conductor)) *
                           c2.inv_value(l2).embed(std::lcm(c1.value_conductor, c2.value_conductor));
                parts.push_back({c * half, HeckeLabel::gamma1(N, label.kind, a * delta, l2)});
            }
        }
    }
    el.series = QExpansion(k, N, J, N);
    for (const auto& [c, seed] : parts) {
        auto pts = label_points(seed);
        el.series += orbital_sum_points(label.kind, pts, k, J).scaled(c);
        for (const auto& p : pts) el.terms.push_back({c, label.kind, p});
    }
    return el;
}

NebentypusBasis nebentypus_basis(long N, const DirichletCharacter& chi, long k, long J) {
    if (k == 2 && chi.is_trivial())
        throw domain_error(
            "nebentypus_basis: weight 2 with trivial character; use the weight-2 basis of "
            "gamma0");
    NebentypusBasis B;
    B.level = N;
    B.weight = k;
    B.chi = chi;
    if (chi.parity() != (k % 2 == 0 ? 1 : -1)) return B;   // empty space
    for (const auto& lb : nebentypus_labels(N, chi, 'E'))
        B.elements.push_back(nebentypus_series(N, chi, lb, k, J));
    return B;
}

} // namespace eis
