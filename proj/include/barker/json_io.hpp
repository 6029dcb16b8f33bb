#pragma once

#include <string>

#include "json.hpp"

#include "barker/correlation.hpp"
#include "barker/predicates.hpp"
#include "barker/search.hpp"
#include "barker/verify.hpp"

namespace barker {

// JSON renderings with stable field names. Durations are deliberately not
// serialized so that equal inputs produce byte-identical documents; timing
// belongs on stderr.
using json = nlohmann::ordered_json;

json to_json(const CorrelationProfile& profile);  // {"n":..., "acf":[...]}
json to_json(const Violation& violation);
json to_json(const SymmetryReport& report);
json to_json(const EvenBarkerStructure& structure);
json to_json(const OddBarkerStructure& structure);
json to_json(const Counterexample& ce);
json to_json(const VerificationReport& report);
json to_json(const Theorem1Row& row);
json to_json(const Lemma7Report& report);
json to_json(const SearchResult& result);

/// Everything cmd_analyze reports for one sequence.
json analyze_to_json(const BinarySequence& a);

}  // namespace barker
