#include "eis/json_io.hpp"
#include "eis/errors.hpp"
#include <sstream>

namespace eis {

Json cyc_to_json(const CycNum& c) {
    Json coeffs = Json::array();
    for (const auto& r : c.coeffs) coeffs.push_back(rat_str(r));
    return Json{{"conductor", c.conductor}, {"coeffs", coeffs}};
}

CycNum cyc_from_json(const Json& j) {
    CycNum c(j.at("conductor").get<long>());
    const auto& arr = j.at("coeffs");
    if (arr.size() != c.coeffs.size())
        throw parse_error("cyc_from_json: wrong coefficient count for the conductor");
    for (size_t i = 0; i < c.coeffs.size(); ++i)
        c.coeffs[i] = rat_parse(arr[i].get<std::string>());
    return c;
}

Json qexp_to_json(const QExpansion& f) {
    Json coeffs = Json::array();
    for (const auto& c : f.coeffs) coeffs.push_back(cyc_to_json(c));
    return Json{{"weight", f.weight},
                {"qden", f.qden},
                {"coeffs", coeffs},
                {"nonhol", cyc_to_json(f.nonhol)},
                {"holomorphic", f.is_holomorphic()}};
}

QExpansion qexp_from_json(const Json& j) {
    const auto& arr = j.at("coeffs");
    if (arr.empty()) throw parse_error("qexp_from_json: empty coefficient list");
    CycNum first = cyc_from_json(arr[0]);
    QExpansion f(j.at("weight").get<long>(), j.at("qden").get<long>(), (long)arr.size() - 1,
                 first.conductor);
    for (size_t i = 0; i < arr.size(); ++i) f.coeffs[i] = cyc_from_json(arr[i]);
    f.nonhol = cyc_from_json(j.at("nonhol"));
    return f;
}

Json cusp_to_json(const Cusp& c) {
    return Json{{"cusp", c.str()},
                {"amplitude", c.amplitude},
                {"regular", c.regular},
                {"orbit_size", c.orbit_size},
                {"point", {c.point.l1, c.point.l2}}};
}

Json cusps_to_json(const std::vector<Cusp>& cs) {
    Json out = Json::array();
    for (const auto& c : cs) out.push_back(cusp_to_json(c));
    return out;
}

Json orbits_to_json(const std::vector<LatticeOrbit>& os) {
    Json out = Json::array();
    for (const auto& O : os) {
        Json pts = Json::array();
        for (const auto& p : O.points) pts.push_back(Json::array({p.l1, p.l2}));
        out.push_back(Json{{"points", pts}, {"regular", O.regular}});
    }
    return out;
}

Json basis_to_json(const EisensteinBasis& b) {
    Json els = Json::array();
    for (const auto& el : b.elements) {
        Json pts = Json::array();
        for (const auto& p : el.orbit.points) pts.push_back(Json::array({p.l1, p.l2}));
        Json labels = Json::array();
        for (const auto& t : el.labels)
            labels.push_back(Json{{"coeff", cyc_to_json(t.coeff)},
                                  {"kind", std::string(1, t.kind)},
                                  {"point", {t.point.l1, t.point.l2}}});
        els.push_back(Json{{"cusp", cusp_to_json(el.cusp)},
                           {"orbit", pts},
                           {"labels", labels},
                           {"qexp", qexp_to_json(el.series)}});
    }
    return Json{{"group", b.group_tag}, {"weight", b.weight}, {"kind", b.kind}, {"elements", els}};
}

Json label_combination_to_json(const LabelCombination& c) {
    Json terms = Json::array();
    for (const auto& [lb, coeff] : c.terms)
        terms.push_back(Json{{"group", std::string(1, lb.group)},
                             {"kind", std::string(1, lb.kind)},
                             {"label", {lb.l1, lb.l2}},
                             {"coeff", cyc_to_json(coeff)}});
    return Json{{"weight", c.weight}, {"level", c.level}, {"terms", terms}};
}

Json character_to_json(const DirichletCharacter& chi) {
    Json vals = Json::array();
    for (const auto& [a, v] : chi.values)
        vals.push_back(Json{{"residue", a}, {"value", cyc_to_json(v)}});
    return Json{{"modulus", chi.modulus},
                {"index", chi.index},
                {"value_conductor", chi.value_conductor},
                {"order", chi.order()},
                {"parity", chi.parity()},
                {"values", vals}};
}

Json nebentypus_basis_to_json(const NebentypusBasis& b) {
    Json els = Json::array();
    for (const auto& el : b.elements)
        els.push_back(Json{{"label", {el.label.l1, el.label.l2}},
                           {"qexp", qexp_to_json(el.series)}});
    return Json{{"level", b.level},
                {"weight", b.weight},
                {"character", character_to_json(b.chi)},
                {"elements", els}};
}

std::string cyc_to_text(const CycNum& c) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c.coeffs.size(); ++i) {
        if (c.coeffs[i] == 0) continue;
        if (!first) os << " + ";
        os << rat_str(c.coeffs[i]);
        if (i > 0) os << "*z" << c.conductor << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::string qexp_to_text(const QExpansion& f) {
    std::ostringstream os;
    os << "weight " << f.weight << ", q-denominator " << f.qden << "\n";
    if (!f.nonhol.is_zero()) os << "  nonholomorphic part: (" << cyc_to_text(f.nonhol) << ")/(pi*Im tau)\n";
    for (long j = 0; j <= f.trunc; ++j) {
        if (f.coeffs[j].is_zero()) continue;
        os << "  q^(" << j << "/" << f.qden << "): " << cyc_to_text(f.coeffs[j]) << "\n";
    }
    return os.str();
}

} // namespace eis
