#include "eis/qseries.hpp"
#include "eis/errors.hpp"

namespace eis {

QExpansion::QExpansion(long k, long qden_, long trunc_, long conductor_)
    : weight(k), qden(qden_), trunc(trunc_), conductor(conductor_),
      coeffs(trunc_ + 1, CycNum(conductor_)), nonhol(conductor_) {}

bool QExpansion::is_zero() const {
    if (!nonhol.is_zero()) return false;
    for (const auto& c : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

QExpansion QExpansion::embed_conductor(long L) const {
    QExpansion out(weight, qden, trunc, L);
    for (long j = 0; j <= trunc; ++j) out.coeffs[j] = coeffs[j].embed(L);
    out.nonhol = nonhol.embed(L);
    return out;
}

QExpansion QExpansion::reindex(long M) const {
    if (M % qden != 0) throw domain_error("QExpansion::reindex: qden must divide target");
    if (M == qden) return *this;
    long m = M / qden;
    QExpansion out(weight, M, trunc * m + (m - 1), conductor);
    for (long j = 0; j <= trunc; ++j) out.coeffs[j * m] = coeffs[j];
    out.nonhol = nonhol;
    return out;
}

QExpansion QExpansion::to_integer_exponents() const {
    QExpansion out(weight, 1, trunc / qden, conductor);
    for (long j = 0; j <= trunc; ++j) {
        if (coeffs[j].is_zero()) continue;
        if (j % qden != 0)
            throw domain_error("QExpansion: non-integer exponent " + std::to_string(j) + "/" +
                               std::to_string(qden));
        out.coeffs[j / qden] = coeffs[j];
    }
    out.nonhol = nonhol;
    return out;
}

QExpansion& QExpansion::operator+=(const QExpansion& o) {
    if (weight != o.weight) throw domain_error("QExpansion: weight mismatch");
    long M = lcm_ll(qden, o.qden);
    long L = lcm_ll(conductor, o.conductor);
    QExpansion a = reindex(M).embed_conductor(L);
    QExpansion b = o.reindex(M).embed_conductor(L);
    long J = std::min(a.trunc, b.trunc);
    a.trunc = J;
    a.coeffs.resize(J + 1);
    for (long j = 0; j <= J; ++j) a.coeffs[j] += b.coeffs[j];
    a.nonhol += b.nonhol;
    *this = std::move(a);
    return *this;
}

QExpansion QExpansion::scaled(const CycNum& c) const {
    long L = lcm_ll(conductor, c.conductor);
    CycNum ce = c.embed(L);
    QExpansion out = embed_conductor(L);
    for (auto& a : out.coeffs) a = a * ce;
    out.nonhol = out.nonhol * ce;
    return out;
}

QExpansion QExpansion::scaled(const Rational& r) const {
    QExpansion out = *this;
    for (auto& a : out.coeffs) a = a * r;
    out.nonhol = out.nonhol * r;
    return out;
}

bool qexp_equal(const QExpansion& f, const QExpansion& g) {
    if (f.weight != g.weight) return false;
    long M = lcm_ll(f.qden, g.qden);
    QExpansion a = f.reindex(M), b = g.reindex(M);
    long J = std::min(a.trunc, b.trunc);
    for (long j = 0; j <= J; ++j)
        if (!cyc_equal(a.coeffs[j], b.coeffs[j])) return false;
    return cyc_equal(a.nonhol, b.nonhol);
}

} // namespace eis
