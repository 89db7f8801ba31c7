#include "eis/hecke.hpp"
#include "eis/errors.hpp"

namespace eis {

namespace {
long mod(long a, long n) { return ((a % n) + n) % n; }

void check_prime(long p, long N) {
    if (p < 2) throw parse_error("T_p: p must be a prime");
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw parse_error("T_p: p must be a prime");
    if (N % p == 0) throw parse_error("T_p: p must not divide the level");
}
} // namespace

HeckeLabel HeckeLabel::gamma1(long N, char kind, long l1, long l2) {
    if (N < 1) throw parse_error("HeckeLabel: level must be positive");
    l1 = mod(l1, N);
    long d1 = (l1 == 0) ? N : std::gcd(l1, N);
    l2 = mod(l2, d1);
    if (std::gcd(std::gcd(l1, l2), N) != 1)
        throw parse_error("HeckeLabel: point must have additive order N");
    return HeckeLabel{N, '1', kind, l1, l2};
}

HeckeLabel HeckeLabel::gamma0(long N, char kind, long delta, long lambda0) {
    if (N < 3) throw parse_error("HeckeLabel: Gamma_0 labels need level >= 3");
    delta = mod(delta, N);
    if (delta == 0) return HeckeLabel{N, '0', kind, 0, 1};
    if (N % delta != 0) throw parse_error("HeckeLabel: delta must divide the level");
    if (N % 2 == 0 && delta == N / 2) return HeckeLabel{N, '0', kind, N / 2, 1};
    long g = std::gcd(delta, N / delta);
    lambda0 = mod(lambda0, g);
    if (std::gcd(lambda0, g) != 1)
        throw parse_error("HeckeLabel: lambda0 must be coprime to gcd(delta, N/delta)");
    return HeckeLabel{N, '0', kind, delta, lambda0};
}

void LabelCombination::add(const HeckeLabel& lb, const CycNum& c) {
    if (lb.n != level) throw parse_error("LabelCombination: level mismatch");
    auto [it, fresh] = terms.try_emplace(lb, c);
    if (!fresh) it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

bool LabelCombination::integer_coefficients() const {
    for (const auto& [lb, c] : terms) {
        if (!c.is_rational()) return false;
        Rational r = c.rational_part();
        if (r.get_den() != 1) return false;
    }
    return true;
}

LabelCombination diamond(long d, const LabelCombination& c) {
    long N = c.level;
    if (std::gcd(d, N) != 1) throw parse_error("diamond: d must be coprime to the level");
    long dinv = (N == 1) ? 0 : mod_inverse(d, N);
    LabelCombination out{c.weight, N, {}};
    for (const auto& [lb, coeff] : c.terms) {
        if (lb.group == '0') {
            out.add(lb, coeff);   // <d> is trivial on Gamma_0 classes
            continue;
        }
        out.add(HeckeLabel::gamma1(N, lb.kind, dinv * lb.l1, d * lb.l2), coeff);
    }
    return out;
}

LabelCombination tp_label(long p, const LabelCombination& c) {
    long N = c.level;
    long k = c.weight;
    check_prime(p, N);
    long pinv = (N == 1) ? 0 : mod_inverse(p, N);
    Rational pk(int_pow(Integer(p), k - 1));
    LabelCombination out{k, N, {}};
    for (const auto& [lb, coeff] : c.terms) {
        CycNum cp = coeff * pk;
        if (lb.group == '1') {
            out.add(HeckeLabel::gamma1(N, lb.kind, lb.l1, p * lb.l2), cp);
            out.add(HeckeLabel::gamma1(N, lb.kind, pinv * lb.l1, lb.l2), coeff);
            continue;
        }
        // Gamma_0 classes
        if (lb.l1 == 0 || (N % 2 == 0 && lb.l1 == N / 2)) {
            out.add(lb, cp + coeff);
            continue;
        }
        out.add(HeckeLabel::gamma0(N, lb.kind, lb.l1, p * lb.l2), cp);
        long g = std::gcd(lb.l1, N / lb.l1);
        long pg = (g == 1) ? 0 : mod_inverse(mod(p, g), g);
        out.add(HeckeLabel::gamma0(N, lb.kind, lb.l1, pg * lb.l2), coeff);
    }
    return out;
}

std::vector<LatticePoint> label_points(const HeckeLabel& lb) {
    long N = lb.n;
    std::vector<LatticePoint> pts;
    auto push_gamma1_orbit = [&](long l1, long l2) {
        long d1 = (mod(l1, N) == 0) ? N : std::gcd(mod(l1, N), N);
        for (long j = 0; j < N / d1; ++j)
            pts.push_back(LatticePoint::make(N, l1, l2 + j * d1));
    };
    if (lb.group == '1') {
        push_gamma1_orbit(lb.l1, lb.l2);
        return pts;
    }
    if (lb.l1 == 0) {
        for (long l2 = 0; l2 < N; ++l2)
            if (std::gcd(l2, N) == 1) push_gamma1_orbit(0, l2);
        return pts;
    }
    if (N % 2 == 0 && lb.l1 == N / 2) {
        for (long l2 = 0; l2 < N / 2; ++l2)
            if (std::gcd(l2, N / 2) == 1) push_gamma1_orbit(N / 2, l2);
        return pts;
    }
    long delta = lb.l1;
    long g = std::gcd(delta, N / delta);
    for (long a = 0; a < N / delta; ++a) {
        if (std::gcd(a, N / delta) != 1) continue;
        for (long l2 = 0; l2 < delta; ++l2) {
            if (std::gcd(l2, delta) != 1) continue;
            if (mod(a * l2 - lb.l2, g) != 0) continue;
            push_gamma1_orbit(a * delta, l2);
        }
    }
    return pts;
}

QExpansion label_qexp(const HeckeLabel& lb, long k, long J) {
    return orbital_sum_points(lb.kind, label_points(lb), k, J);
}

QExpansion combination_qexp(const LabelCombination& c, long J) {
    QExpansion acc(c.weight, c.level, J, c.level);
    for (const auto& [lb, coeff] : c.terms) acc += label_qexp(lb, c.weight, J).scaled(coeff);
    return acc;
}

QExpansion tp_qexp(const QExpansion& f, const QExpansion& fd, long p, long k) {
    check_prime(p, 1);
    QExpansion a = f.to_integer_exponents();
    QExpansion b = fd.to_integer_exponents();
    if (a.weight != k || b.weight != k) throw domain_error("tp_qexp: weight mismatch");
    Rational pk(int_pow(Integer(p), k - 1));
    long L = lcm_ll(a.conductor, b.conductor);
    long J = std::min(a.trunc / p, b.trunc);
    QExpansion out(k, 1, J, L);
    for (long j = 0; j <= J; ++j) {
        CycNum v = a.coeffs[j * p].embed(L);
        if (j % p == 0) v += b.coeffs[j / p].embed(L) * pk;
        out.coeffs[j] = v;
    }
    out.nonhol = a.nonhol.embed(L) * (pk + 1);
    return out;
}

QExpansion tp_qexp(const QExpansion& f, long p, long k) { return tp_qexp(f, f, p, k); }

LabelCombination single_label(const HeckeLabel& lb, long k) {
    LabelCombination c{k, lb.n, {}};
    c.add(lb, CycNum::from_rational(1, 1));
    return c;
}

} // namespace eis
