#include "barker/json_io.hpp"

namespace barker {
namespace {

json optional_violation(const std::optional<Violation>& v) {
  return v ? to_json(*v) : json(nullptr);
}

}  // namespace

json to_json(const CorrelationProfile& profile) {
  return json{{"n", profile.n}, {"acf", profile.values}};
}

json to_json(const Violation& violation) {
  return json{{"property", violation.property},
              {"index", violation.index},
              {"expected", violation.expected},
              {"actual", violation.actual}};
}

json to_json(const SymmetryReport& report) {
  json j{{"is_barker", report.is_barker},
         {"is_skew_symmetric", report.is_skew_symmetric},
         {"is_weak_symmetric", report.is_weak_symmetric},
         {"is_strong_symmetric", report.is_strong_symmetric}};
  j["barker_even_structure_ok"] =
      report.barker_even_structure_ok ? json(*report.barker_even_structure_ok) : json(nullptr);
  j["first_violation"] = optional_violation(report.first_violation);
  return j;
}

json to_json(const EvenBarkerStructure& structure) {
  return json{{"weak_symmetric", structure.weak_symmetric},
              {"even_lags_zero", structure.even_lags_zero},
              {"odd_lags_match_mirror", structure.odd_lags_match_mirror},
              {"length_is_four_square", structure.length_is_four_square},
              {"antisymmetric", structure.antisymmetric},
              {"r", structure.r},
              {"first_violation", optional_violation(structure.first_violation)}};
}

json to_json(const OddBarkerStructure& structure) {
  return json{{"odd_lags_zero", structure.odd_lags_zero},
              {"even_lags_fixed", structure.even_lags_fixed},
              {"skew_symmetric", structure.skew_symmetric},
              {"first_violation", optional_violation(structure.first_violation)}};
}

json to_json(const Counterexample& ce) {
  return json{{"sequence", ce.sequence}, {"details", ce.details}};
}

json to_json(const VerificationReport& report) {
  json j{{"identity", report.identity_id},
         {"population", report.population},
         {"checked", report.checked},
         {"passed", report.passed}};
  j["first_counterexample"] =
      report.first_counterexample ? to_json(*report.first_counterexample) : json(nullptr);
  return j;
}

json to_json(const Theorem1Row& row) {
  return json{{"identity", "theorem1"},
              {"n", row.n},
              {"barker_count", row.barker_count},
              {"matching_count", row.matching_count},
              {"pass", row.consistent}};
}

json to_json(const Lemma7Report& report) {
  json j{{"identity", "lemma7"},
         {"n", report.n},
         {"population", report.population},
         {"pair_checks", report.pair_checks},
         {"violations", report.violations}};
  j["first_counterexample"] =
      report.first_counterexample ? to_json(*report.first_counterexample) : json(nullptr);
  return j;
}

json to_json(const SearchResult& result) {
  json sequences = json::array();
  for (const BinarySequence& s : result.sequences) sequences.push_back(s.to_string());
  return json{{"n", result.n},
              {"found", result.sequences.size()},
              {"sequences", std::move(sequences)},
              {"nodes_visited", result.nodes_visited},
              {"pruned", result.pruned}};
}

json analyze_to_json(const BinarySequence& a) {
  int n = a.length();
  json j;
  j["sequence"] = a.to_string();
  j["n"] = n;
  j["profile"] = to_json(acf_fast(a));
  Tvector t = t_vector(a);
  j["t"] = t.values;
  std::vector<int> deltas;
  for (int k = 1; k <= n; ++k) deltas.push_back(a.delta(k));
  j["delta"] = deltas;
  SymmetryReport report = symmetry_report(a);
  j["symmetry"] = to_json(report);
  j["even_structure"] = json(nullptr);
  j["odd_structure"] = json(nullptr);
  if (report.is_barker && n % 2 == 0 && n >= 4)
    j["even_structure"] = to_json(barker_even_structure(a));
  if (report.is_barker && n % 2 != 0) j["odd_structure"] = to_json(barker_odd_structure(a));
  return j;
}

}  // namespace barker
