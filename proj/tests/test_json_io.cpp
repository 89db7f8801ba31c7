#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "eis/json_io.hpp"
#include "eis/eisenstein.hpp"

using namespace eis;

TEST_CASE("cyclotomic round trip") {
    std::vector<CycNum> samples{
        CycNum::from_rational(1, Rational(-7, 3)),
        CycNum::zeta_pow(12, 5) * Rational(22, 7) - CycNum::from_rational(12, 2),
        CycNum(8),
        CycNum::zeta_pow(5, 1) + CycNum::zeta_pow(5, 4)};
    for (const auto& c : samples) {
        Json j = cyc_to_json(c);
        CycNum back = cyc_from_json(j);
        CHECK(back == c);
        // serialization is byte-stable
        CHECK(j.dump() == cyc_to_json(back).dump());
    }
}

TEST_CASE("expansion round trip") {
    QExpansion f = g_series(LatticePoint::make(4, 1, 2), 2, 16);
    Json j = qexp_to_json(f);
    QExpansion back = qexp_from_json(j);
    CHECK(back.weight == f.weight);
    CHECK(back.qden == f.qden);
    CHECK(back.trunc == f.trunc);
    CHECK(back.conductor == f.conductor);
    CHECK(back.coeffs == f.coeffs);
    CHECK(back.nonhol == f.nonhol);
    CHECK(j.dump() == qexp_to_json(back).dump());
    CHECK(j.at("holomorphic").get<bool>() == f.is_holomorphic());
}

TEST_CASE("structure serializers produce stable complete output") {
    auto G = subgroup_gamma1(4);
    Json jc = cusps_to_json(cusps(G));
    CHECK(jc.size() == 3);
    for (const auto& e : jc) {
        CHECK(e.contains("cusp"));
        CHECK(e.contains("amplitude"));
        CHECK(e.contains("regular"));
    }
    Json jo = orbits_to_json(orbits(G));
    CHECK(jo.size() == orbits(G).size());
    Json jb = basis_to_json(spectral_basis(G, 3, 12));
    CHECK(jb.at("weight").get<long>() == 3);
    for (const auto& el : jb.at("elements")) {
        CHECK(el.contains("cusp"));
        CHECK(el.contains("qexp"));
        CHECK(el.contains("labels"));
    }
    // repeated serialization is byte-identical
    CHECK(jb.dump() == basis_to_json(spectral_basis(G, 3, 12)).dump());
}

TEST_CASE("character serialization") {
    for (const auto& chi : enumerate_characters(5)) {
        Json j = character_to_json(chi);
        CHECK(j.at("modulus").get<long>() == 5);
        CHECK(j.at("order").get<long>() == chi.order());
        CHECK(j.at("parity").get<long>() == chi.parity());
    }
}

TEST_CASE("text rendering") {
    CHECK(cyc_to_text(CycNum::from_rational(1, Rational(-1, 12))) == "-1/12");
    std::string t = cyc_to_text(CycNum::zeta_pow(4, 1));
    CHECK(t.find("z4") != std::string::npos);
    QExpansion f = e_series(LatticePoint::make(1, 0, 0), 4, 3);
    std::string s = qexp_to_text(f);
    CHECK(s.find("240") != std::string::npos);
}
