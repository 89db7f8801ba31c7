#include "eis/special_values.hpp"
#include "eis/errors.hpp"
#include <map>
#include <mutex>

namespace eis {

namespace {
std::map<long, Rational> bern_memo;
std::mutex bern_mutex;
}

// b_0 = 1, b_1 = -1/2 convention (B_1(t) = t - 1/2)
Rational bernoulli_number(long k) {
    std::lock_guard<std::mutex> lk(bern_mutex);
    auto it = bern_memo.find(k);
    if (it != bern_memo.end()) return it->second;
    for (long n = 0; n <= k; ++n) {
        if (bern_memo.count(n)) continue;
        if (n == 0) { bern_memo[0] = 1; continue; }
        // sum_{j=0}^{n} C(n+1, j) b_j = 0
        Rational acc(0);
        for (long j = 0; j < n; ++j) acc += Rational(binomial(n + 1, j)) * bern_memo[j];
        bern_memo[n] = -acc / Rational(n + 1);
    }
    return bern_memo[k];
}

Rational BernoulliPoly::eval(const Rational& t) const {
    Rational acc(0);
    for (long i = (long)coeffs.size() - 1; i >= 0; --i) acc = acc * t + coeffs[i];
    return acc;
}

BernoulliPoly bernoulli_polynomial(long k) {
    if (k < 0) throw domain_error("bernoulli_polynomial: k >= 0 required");
    BernoulliPoly B;
    B.degree = k;
    B.coeffs.resize(k + 1);
    // B_k(t) = sum_i C(k,i) b_i t^{k-i}
    for (long i = 0; i <= k; ++i)
        B.coeffs[k - i] = Rational(binomial(k, i)) * bernoulli_number(i);
    return B;
}

CycNum partial_zeta_scaled(long m, long N, long k) {
    if (k < 2) throw domain_error("partial_zeta_scaled: k >= 2 required (series diverges)");
    BernoulliPoly B = bernoulli_polynomial(k);
    Rational pref = Rational(-1) / (Rational(factorial(k)) * Rational(N));
    CycNum acc(N);
    for (long j = 0; j < N; ++j) {
        Rational v = pref * B.eval(Rational(j) / Rational(N));
        if (v != 0) acc += CycNum::zeta_pow(N, -j * (m % N)) * v;
    }
    return acc;
}

} // namespace eis
