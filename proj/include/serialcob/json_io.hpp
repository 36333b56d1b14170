#pragma once

#include <json.hpp>

#include "serialcob/fixtures.hpp"
#include "serialcob/gligible.hpp"

namespace serialcob {

using nlohmann::json;

// Scalars travel as strings "p" / "p/q"; plain JSON integers are accepted on
// input. Words use the dotted syntax ("s1.s2", empty word "e"), sign
// sequences the compact "+-+" form ("e" for the empty object).

json scalar_to_json(const Scalar& x);
Scalar scalar_from_json(const json& j);

json vec_to_json(const Vec& v);
Vec vec_from_json(const json& j);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json alphabet_to_json(const Alphabet& a);
Alphabet alphabet_from_json(const json& j);

json rep_to_json(const LinearRep& rep);
LinearRep rep_from_json(const json& j);

json pair_to_json(const SeriesPair& pair);
SeriesPair pair_from_json(const json& j);

json diagram_to_json(const Diagram& d, const Alphabet& alphabet);
Diagram diagram_from_json(const json& j, const Alphabet& alphabet);

json morphism_to_json(const Morphism& m, const Alphabet& alphabet);
Morphism morphism_from_json(const json& j, const Alphabet& alphabet);

json basis_id_to_json(const SkeinBasisId& id, const MatchingSet& ms, const SyntacticData& data);
json skein_to_json(const SkeinMorphism& m, const SyntacticData& data);

json matching_set_to_json(const MatchingSet& ms);
json gram_report_to_json(const GramReport& report, const SyntacticData& data);
json state_space_to_json(const StateSpace& space, const SyntacticData& data);
json selftest_to_json(const std::vector<SelftestEntry>& entries);

std::string mode_to_string(Mode mode);        // "c" / "ctilde"
Mode mode_from_string(const std::string& s);  // throws ValidationError

}  // namespace serialcob
