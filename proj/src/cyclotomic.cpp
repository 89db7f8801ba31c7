#include "eis/cyclotomic.hpp"
#include "eis/errors.hpp"
#include <map>
#include <mutex>
#include <numeric>
#include <cmath>

namespace eis {

Rational rat_parse(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw parse_error("bad rational: " + s);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Integer int_pow(const Integer& b, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
    return out;
}

Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Rational rat_pow(const Rational& b, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) return rat_pow(Rational(1) / b, -e);
    Rational out(int_pow(b.get_num(), e), int_pow(b.get_den(), e));
    out.canonicalize();
    return out;
}

long euler_phi(long n) {
    long out = n;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            out -= out / p;
            while (n % p == 0) n /= p;
        }
    if (n > 1) out -= out / n;
    return out;
}

long gcd_ll(long a, long b) { return std::gcd(a, b); }
long lcm_ll(long a, long b) { return std::lcm(a, b); }

long mod_inverse(long a, long n) {
    if (n == 1) return 0;
    long t = 0, nt = 1, r = n, nr = ((a % n) + n) % n;
    while (nr != 0) {
        long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw domain_error("mod_inverse: not coprime");
    return ((t % n) + n) % n;
}

double to_double(const Rational& r) { return r.get_d(); }

// ---- cyclotomic polynomials --------------------------------------------

namespace {

// exact division of integer polys, quotient known integral
std::vector<Integer> poly_div_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
    std::vector<Integer> q(num.size() - den.size() + 1);
    for (long i = (long)q.size() - 1; i >= 0; --i) {
        Integer c = num[i + den.size() - 1] / den.back();
        q[i] = c;
        if (c != 0)
            for (size_t j = 0; j < den.size(); ++j)
                num[i + j] -= c * den[j];
    }
    for (auto& c : num)
        if (c != 0) throw internal_error("poly_div_exact: nonzero remainder");
    return q;
}

std::map<long, std::vector<Integer>> phi_memo;
std::mutex phi_mutex;

std::vector<Integer> compute_phi(long L) {
    // x^L - 1 divided by Phi_d for all proper divisors d | L
    std::vector<Integer> num(L + 1);
    num[0] = -1;
    num[L] = 1;
    for (long d = 1; d < L; ++d)
        if (L % d == 0) num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
    return num;
}

} // namespace

const std::vector<Integer>& cyclotomic_polynomial(long L) {
    if (L < 1) throw domain_error("cyclotomic_polynomial: L >= 1 required");
    {
        std::lock_guard<std::mutex> lk(phi_mutex);
        auto it = phi_memo.find(L);
        if (it != phi_memo.end()) return it->second;
    }
    auto phi = compute_phi(L);  // recursion outside the lock
    std::lock_guard<std::mutex> lk(phi_mutex);
    return phi_memo.emplace(L, std::move(phi)).first->second;
}

// ---- CycNum -------------------------------------------------------------

namespace {

// reduce a rational poly mod the monic Phi_L; returns phi(L) coords
std::vector<Rational> reduce_mod_phi(std::vector<Rational> p, long L) {
    const auto& phi = cyclotomic_polynomial(L);
    long deg = (long)phi.size() - 1;
    for (long i = (long)p.size() - 1; i >= deg; --i) {
        Rational c = p[i];
        if (c != 0)
            for (long j = 0; j <= deg; ++j)
                p[i - deg + j] -= c * Rational(phi[j]);
    }
    p.resize(deg);
    return p;
}

} // namespace

CycNum CycNum::from_rational(long L, const Rational& r) {
    CycNum out(L);
    out.coeffs[0] = r;
    return out;
}

CycNum CycNum::zeta_pow(long L, long j) {
    j = ((j % L) + L) % L;
    std::vector<Rational> p(j + 1);
    p[j] = 1;
    CycNum out(L);
    out.coeffs = reduce_mod_phi(std::move(p), L);
    return out;
}

bool CycNum::is_zero() const {
    for (const auto& c : coeffs)
        if (c != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (size_t i = 1; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) return false;
    return true;
}

Rational CycNum::rational_part() const { return coeffs[0]; }

CycNum CycNum::embed(long L2) const {
    if (L2 % conductor != 0) throw domain_error("embed: conductor must divide target");
    if (L2 == conductor) return *this;
    long m = L2 / conductor;
    std::vector<Rational> p(coeffs.size() ? (coeffs.size() - 1) * m + 1 : 1);
    for (size_t i = 0; i < coeffs.size(); ++i) p[i * m] = coeffs[i];
    CycNum out(L2);
    out.coeffs = reduce_mod_phi(std::move(p), L2);
    return out;
}

CycNum CycNum::operator-() const {
    CycNum out = *this;
    for (auto& c : out.coeffs) c = -c;
    return out;
}

CycNum& CycNum::operator+=(const CycNum& o) {
    if (conductor != o.conductor) throw domain_error("CycNum: conductor mismatch (embed first)");
    for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
    if (conductor != o.conductor) throw domain_error("CycNum: conductor mismatch (embed first)");
    for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
    return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    if (a.conductor != b.conductor) throw domain_error("CycNum: conductor mismatch (embed first)");
    size_t n = a.coeffs.size();
    std::vector<Rational> p(2 * n - 1);
    for (size_t i = 0; i < n; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (size_t j = 0; j < n; ++j)
            if (b.coeffs[j] != 0) p[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    CycNum out(a.conductor);
    out.coeffs = reduce_mod_phi(std::move(p), a.conductor);
    return out;
}

CycNum CycNum::operator*(const Rational& r) const {
    CycNum out = *this;
    for (auto& c : out.coeffs) c *= r;
    return out;
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw domain_error("CycNum: inverse of zero");
    if (is_rational()) return from_rational(conductor, Rational(1) / coeffs[0]);
    // extended Euclid for gcd(a, Phi_L) over Q[x]; gcd is a nonzero constant
    std::vector<Rational> r0(cyclotomic_polynomial(conductor).size());
    for (size_t i = 0; i < r0.size(); ++i) r0[i] = Rational(cyclotomic_polynomial(conductor)[i]);
    std::vector<Rational> r1(coeffs.begin(), coeffs.end());
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};  // coeffs of `a` in the combos

    auto degree = [](const std::vector<Rational>& p) { return (long)p.size() - 1; };
    while (degree(r1) > 0) {
        // r0 = q*r1 + r
        std::vector<Rational> q(degree(r0) - degree(r1) + 1);
        std::vector<Rational> rem = r0;
        for (long i = (long)q.size() - 1; i >= 0; --i) {
            Rational c = rem[i + degree(r1)] / r1.back();
            q[i] = c;
            if (c != 0)
                for (long j = 0; j <= degree(r1); ++j)
                    rem[i + j] -= c * r1[j];
        }
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        // s_next = s0 - q*s1
        std::vector<Rational> sn(std::max(s0.size(), q.size() + s1.size() - 1));
        for (size_t i = 0; i < s0.size(); ++i) sn[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i)
            if (q[i] != 0)
                for (size_t j = 0; j < s1.size(); ++j) sn[i + j] -= q[i] * s1[j];
        while (!sn.empty() && sn.back() == 0) sn.pop_back();
        r0 = std::move(r1); r1 = std::move(rem);
        s0 = std::move(s1); s1 = std::move(sn);
    }
    if (r1.empty()) throw internal_error("CycNum: gcd with Phi_L not constant");
    Rational g = r1[0];
    for (auto& c : s1) c /= g;
    CycNum out(conductor);
    out.coeffs = reduce_mod_phi(std::move(s1), conductor);
    return out;
}

std::complex<double> CycNum::approx() const {
    std::complex<double> z = std::polar(1.0, 2.0 * M_PI / (double)conductor);
    std::complex<double> acc(0.0, 0.0);
    for (size_t i = coeffs.size(); i-- > 0;)
        acc = acc * z + std::complex<double>(to_double(coeffs[i]), 0.0);
    return acc;
}

bool cyc_equal(const CycNum& a, const CycNum& b) {
    long L = lcm_ll(a.conductor, b.conductor);
    return a.embed(L) == b.embed(L);
}

} // namespace eis
