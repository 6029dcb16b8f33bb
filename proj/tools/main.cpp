#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "barker/correlation.hpp"
#include "barker/errors.hpp"
#include "barker/json_io.hpp"
#include "barker/predicates.hpp"
#include "barker/search.hpp"
#include "barker/sequence.hpp"
#include "barker/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

std::string pad_right(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string pad_left(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw barker::PreconditionError("invalid range '" + text + "' (expected N or MIN..MAX)");
  }
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

// A deliberately false claim. `verify selftest` exists so operators can
// confirm the counterexample rendering and the exit-1 contract.
std::optional<std::string> selftest_claim(const barker::BinarySequence& a) {
  return "deliberately false claim (C_0 = " + std::to_string(a.length()) +
         " holds for every sequence)";
}

// --- analyze ------------------------------------------------------------

void print_analysis_text(const barker::BinarySequence& a, std::ostream& os) {
  auto row = [&](const std::string& label, const std::string& value) {
    os << pad_right(label, 22) << value << "\n";
  };
  auto join = [](const std::vector<int>& v) {
    std::ostringstream s;
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? " " : "") << v[i];
    return s.str();
  };

  int n = a.length();
  row("sequence", a.to_string());
  row("length", std::to_string(n));
  row("acf", join(barker::acf_fast(a).values));
  row("t_vector", join(barker::t_vector(a).values));
  std::vector<int> deltas;
  for (int k = 1; k <= n; ++k) deltas.push_back(a.delta(k));
  row("delta", join(deltas));

  barker::SymmetryReport report = barker::symmetry_report(a);
  row("is_barker", yesno(report.is_barker));
  row("is_skew_symmetric", yesno(report.is_skew_symmetric));
  row("is_weak_symmetric", yesno(report.is_weak_symmetric));
  row("is_strong_symmetric", yesno(report.is_strong_symmetric));
  if (report.barker_even_structure_ok) {
    barker::EvenBarkerStructure s = barker::barker_even_structure(a);
    row("barker_even_structure",
        *report.barker_even_structure_ok ? "ok (r=" + std::to_string(s.r) + ")" : "violated");
  } else {
    row("barker_even_structure", "n/a");
  }
  if (report.is_barker && n % 2 != 0) {
    barker::OddBarkerStructure s = barker::barker_odd_structure(a);
    row("barker_odd_structure", s.all_ok() ? "ok" : "violated");
  }
  if (report.first_violation) {
    const barker::Violation& v = *report.first_violation;
    row("first_violation", v.property + " at index " + std::to_string(v.index) +
                               ": expected " + std::to_string(v.expected) + ", got " +
                               std::to_string(v.actual));
  }
}

int cmd_analyze(const std::string& text, const std::string& file, const std::string& format) {
  std::vector<barker::BinarySequence> inputs;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "error: cannot open '" << file << "'\n";
      return kExitUsage;
    }
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
      try {
        inputs.push_back(barker::BinarySequence::parse(line));
      } catch (const barker::ParseError& e) {
        std::cerr << "error: " << file << ":" << line_no << ": " << e.what() << "\n";
        return kExitUsage;
      }
    }
    if (inputs.empty()) {
      std::cerr << "error: no sequences in '" << file << "'\n";
      return kExitUsage;
    }
  } else if (!text.empty()) {
    inputs.push_back(barker::BinarySequence::parse(text));
  } else {
    std::cerr << "error: provide a sequence argument or --file\n";
    return kExitUsage;
  }

  if (format == "json") {
    if (inputs.size() == 1 && file.empty()) {
      std::cout << barker::analyze_to_json(inputs.front()).dump(2) << "\n";
    } else {
      barker::json arr = barker::json::array();
      for (const auto& a : inputs) arr.push_back(barker::analyze_to_json(a));
      std::cout << arr.dump(2) << "\n";
    }
  } else {
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      if (i) std::cout << "\n";
      print_analysis_text(inputs[i], std::cout);
    }
  }
  return kExitOk;
}

// --- verify -------------------------------------------------------------

struct VerifyRow {
  std::string identity;
  std::string population;
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  bool ok = false;
  std::optional<barker::Counterexample> counterexample;
  barker::json as_json;
};

VerifyRow row_from_report(const barker::VerificationReport& r) {
  return {r.identity_id, r.population,           r.checked, r.passed,
          r.ok(),        r.first_counterexample, barker::to_json(r)};
}

VerifyRow row_from_theorem1(const barker::Theorem1Row& r) {
  std::string expect = r.n == 4 ? "expect >0" : "expect 0";
  return {"theorem1",
          "n=" + std::to_string(r.n) + ": barker with equal odd lags (" + expect + ")",
          r.barker_count,
          r.matching_count,
          r.consistent,
          std::nullopt,
          barker::to_json(r)};
}

VerifyRow row_from_lemma7(const barker::Lemma7Report& r) {
  return {"lemma7",
          "pair rule over " + std::to_string(r.population) +
              " constrained barker, n=" + std::to_string(r.n),
          r.pair_checks,
          r.pair_checks - r.violations,
          r.ok(),
          r.first_counterexample,
          barker::to_json(r)};
}

int cmd_verify(const std::string& identity, const std::string& range_text, bool random,
               std::uint64_t samples, std::optional<std::uint64_t> seed,
               const barker::EngineOptions& opts, const std::string& format) {
  auto [n_min, n_max] = parse_range(range_text);

  barker::VerifyMode mode = barker::VerifyMode::exhaustive();
  if (random) {
    if (!seed) {
      std::cerr << "error: --random requires --seed for reproducible reports\n";
      return kExitUsage;
    }
    mode = barker::VerifyMode::random(samples, *seed);
  }

  auto start = std::chrono::steady_clock::now();
  std::vector<VerifyRow> rows;
  auto add_theorem1 = [&]() {
    int first = std::max(4, n_min + (n_min % 2 != 0 ? 1 : 0));
    for (int n = first; n <= n_max; n += 2)
      rows.push_back(row_from_theorem1(barker::verify_theorem1(n, opts)));
  };
  auto add_lemma7 = [&]() {
    for (int n = 4; n <= n_max; n += 4)
      if (n >= n_min) rows.push_back(row_from_lemma7(barker::verify_lemma7(n, opts)));
  };

  if (identity == "all") {
    for (const barker::IdentityInfo& info : barker::identity_registry())
      rows.push_back(
          row_from_report(barker::verify_identity(info.id, n_min, n_max, mode, opts)));
    add_theorem1();
    add_lemma7();
  } else if (identity == "theorem1") {
    add_theorem1();
    if (rows.empty()) {
      std::cerr << "error: no even n >= 4 in range\n";
      return kExitUsage;
    }
  } else if (identity == "lemma7") {
    add_lemma7();
    if (rows.empty()) {
      std::cerr << "error: no multiple of 4 in range\n";
      return kExitUsage;
    }
  } else if (identity == "selftest") {
    rows.push_back(row_from_report(barker::run_verification(
        "selftest", &selftest_claim, barker::PopulationKind::AllSequences,
        barker::LengthFilter::All, n_min, n_max, mode, opts)));
  } else {
    rows.push_back(row_from_report(barker::verify_identity(identity, n_min, n_max, mode, opts)));
  }
  std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  bool all_ok = true;
  for (const VerifyRow& r : rows) all_ok = all_ok && r.ok;

  if (format == "json") {
    barker::json doc;
    doc["reports"] = barker::json::array();
    for (const VerifyRow& r : rows) doc["reports"].push_back(r.as_json);
    doc["all_ok"] = all_ok;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << pad_right("identity", 10) << pad_right("population", 56)
              << pad_left("checked", 10) << pad_left("passed", 10) << "  result\n";
    for (const VerifyRow& r : rows) {
      std::cout << pad_right(r.identity, 10) << pad_right(r.population, 56)
                << pad_left(std::to_string(r.checked), 10)
                << pad_left(std::to_string(r.passed), 10) << "  "
                << (r.ok ? "PASS" : "FAIL") << "\n";
    }
    for (const VerifyRow& r : rows) {
      if (r.counterexample)
        std::cout << "counterexample " << r.identity << ": " << r.counterexample->sequence
                  << " (" << r.counterexample->details << ")\n";
    }
  }
  std::cerr << "# elapsed: " << elapsed.count() << "s\n";
  return all_ok ? kExitOk : kExitFalsified;
}

// --- search, lengths ------------------------------------------------------

int cmd_search(const barker::SearchConfig& cfg, const std::string& format) {
  barker::SearchResult result = barker::search_barker(cfg);
  if (format == "json") {
    std::cout << barker::to_json(result).dump(2) << "\n";
  } else {
    for (const barker::BinarySequence& s : result.sequences) std::cout << s.to_string() << "\n";
    std::cout << "# n=" << result.n << " found=" << result.sequences.size()
              << " nodes=" << result.nodes_visited << " pruned=" << result.pruned << "\n";
  }
  std::cerr << "# elapsed: " << result.elapsed.count() << "s\n";
  return kExitOk;
}

int cmd_lengths(const std::string& format) {
  const std::set<int>& lengths = barker::known_barker_lengths();
  if (format == "json") {
    barker::json doc;
    doc["known_barker_lengths"] = lengths;
    std::cout << doc.dump(2) << "\n";
  } else {
    bool first = true;
    for (int n : lengths) {
      std::cout << (first ? "" : " ") << n;
      first = false;
    }
    std::cout << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"analysis, verification and search for aperiodic autocorrelations "
               "of +-1 sequences"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string analyze_text;
  std::string analyze_file;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "correlation profile and symmetry classification of a sequence");
  analyze->add_option("sequence", analyze_text, "sequence text, e.g. \"+++-\" or \"1,-1\"");
  analyze->add_option("--file", analyze_file, "file with one sequence per line");
  analyze->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string identity;
  std::string range_text;
  bool random = false;
  std::uint64_t samples = 10000;
  std::optional<std::uint64_t> seed;
  int workers = 1;
  std::optional<std::uint64_t> eval_budget;
  CLI::App* verify = app.add_subcommand(
      "verify", "check identities over enumerated populations (exit 1 on a counterexample)");
  verify->add_option("identity", identity,
                     "identity id, \"all\", \"theorem1\", \"lemma7\", or \"selftest\" "
                     "(a deliberately false claim that exercises exit code 1)")
      ->required();
  verify->add_option("range", range_text, "length range MIN..MAX (or a single N)")->required();
  verify->add_flag("--random", random, "sample instead of exhausting (requires --seed)");
  verify->add_option("--samples", samples, "samples per length in random mode");
  verify->add_option("--seed", seed, "seed for random mode");
  verify->add_option("--workers", workers, "parallel workers")->check(CLI::PositiveNumber);
  verify->add_option("--budget", eval_budget, "max evaluations per identity");
  verify->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  int search_n = 0;
  bool no_prune = false;
  bool canonical = false;
  std::optional<std::size_t> max_results;
  std::optional<int> length_budget;
  CLI::App* search = app.add_subcommand("search", "enumerate Barker sequences of a length");
  search->add_option("n", search_n, "sequence length")->required();
  search->add_flag("--no-prune", no_prune, "plain enumeration instead of pruned search");
  search->add_flag("--canonical", canonical, "one representative per symmetry orbit");
  search->add_option("--max-results", max_results, "cap the reported list");
  search->add_option("--workers", workers, "parallel workers")->check(CLI::PositiveNumber);
  search->add_option("--budget", length_budget, "max length to accept");
  search->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* lengths = app.add_subcommand("lengths", "known Barker sequence lengths");
  lengths->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(analyze_text, analyze_file, format);
    if (verify->parsed()) {
      barker::EngineOptions opts;
      opts.workers = workers;
      if (eval_budget) opts.max_evaluations = *eval_budget;
      return cmd_verify(identity, range_text, random, samples, seed, opts, format);
    }
    if (search->parsed()) {
      barker::SearchConfig cfg;
      cfg.n = search_n;
      cfg.prune = !no_prune;
      cfg.canonicalize = canonical;
      cfg.max_results = max_results;
      cfg.workers = workers;
      cfg.length_budget = length_budget;
      return cmd_search(cfg, format);
    }
    if (lengths->parsed()) return cmd_lengths(format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
