#pragma once
#include "eis/characters.hpp"
#include "json.hpp"

namespace eis {

using Json = nlohmann::ordered_json;

Json cyc_to_json(const CycNum& c);
CycNum cyc_from_json(const Json& j);

Json qexp_to_json(const QExpansion& f);
QExpansion qexp_from_json(const Json& j);

Json cusp_to_json(const Cusp& c);
Json cusps_to_json(const std::vector<Cusp>& cs);
Json orbits_to_json(const std::vector<LatticeOrbit>& os);
Json basis_to_json(const EisensteinBasis& b);
Json label_combination_to_json(const LabelCombination& c);
Json character_to_json(const DirichletCharacter& chi);
Json nebentypus_basis_to_json(const NebentypusBasis& b);

// stable text rendering used by the CLI's human-readable format
std::string cyc_to_text(const CycNum& c);
std::string qexp_to_text(const QExpansion& f);

} // namespace eis
