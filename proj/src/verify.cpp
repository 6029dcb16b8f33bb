#include "barker/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <cassert>
#include <sstream>

#include "barker/correlation.hpp"
#include "barker/errors.hpp"
#include "barker/predicates.hpp"
#include "barker/search.hpp"

namespace barker {
namespace {

std::string fail(const char* what, int index, long long expected, long long actual) {
  std::ostringstream os;
  os << what << " at k=" << index << ": expected " << expected << ", got " << actual;
  return os.str();
}

// --- per-sequence identity checks ------------------------------------------

std::optional<std::string> check_eq1(const BinarySequence& a) {
  int n = a.length();
  CorrelationProfile c = acf_direct(a);
  for (int k = 1; k < n; ++k)
    if ((c.at(k) - (n - k)) % 2 != 0)
      return fail("C_k parity", k, (n - k) % 2, ((c.at(k) % 2) + 2) % 2);
  return std::nullopt;
}

std::optional<std::string> check_eq2(const BinarySequence& a) {
  int n = a.length();
  int entry_sum = 0;
  for (int j = 1; j <= n; ++j) entry_sum += a.entry(j);
  CorrelationProfile c = acf_direct(a);
  long long rhs = n;
  for (int k = 1; k < n; ++k) rhs += 2ll * c.at(k);
  long long lhs = static_cast<long long>(entry_sum) * entry_sum;
  if (lhs != rhs) return fail("sum-square identity", 0, rhs, lhs);
  return std::nullopt;
}

std::optional<std::string> check_eq3(const BinarySequence& a) {
  int n = a.length();
  CorrelationProfile c = acf_direct(a);
  for (int k = 1; k < n; ++k) {
    int sum = c.at(k) + c.at(n - k);
    int circular = 0;
    for (int j = 1; j <= n; ++j) {
      int shifted = j + k > n ? j + k - n : j + k;
      circular += a.entry(j) * a.entry(shifted);
    }
    if (sum != circular) return fail("C_k + C_{n-k} vs circular sum", k, circular, sum);
    if (((sum - n) % 4 + 4) % 4 != 0) return fail("periodic sum mod 4", k, n % 4, sum);
  }
  return std::nullopt;
}

std::optional<std::string> check_eq4(const BinarySequence& a) {
  int n = a.length();
  // The antisymmetry consequence needs n == 0 (mod 4), which every Barker
  // sequence of even length n >= 4 satisfies; at n = 2 the congruence pins
  // nothing (C_1 = +-1 both work), so the hypothesis excludes it.
  if (n < 4 || !is_barker(a)) return std::nullopt;
  CorrelationProfile c = acf_direct(a);
  for (int k = 1; k < n; ++k)
    if (c.at(k) != -c.at(n - k)) return fail("barker antisymmetry", k, -c.at(n - k), c.at(k));
  return std::nullopt;
}

std::optional<std::string> check_eq5(const BinarySequence& a) {
  int n = a.length();
  for (int k = 1; k <= n; ++k)
    if (a.delta(k) != a.delta(n + 1 - k))
      return fail("delta mirror symmetry", k, a.delta(n + 1 - k), a.delta(k));
  return std::nullopt;
}

std::optional<std::string> check_eq6(const BinarySequence& a) {
  if (!is_weak_symmetric(a)) return std::nullopt;
  int n = a.length();
  for (int k = 1; k < n; k += 2)
    if (a.delta(k) != -a.delta(k + 1))
      return fail("alternating delta", k, -a.delta(k + 1), a.delta(k));
  return std::nullopt;
}

std::optional<std::string> check_lemma1(const BinarySequence& a) {
  int n = a.length();
  CorrelationProfile c = acf_direct(a);
  Tvector t = t_vector(a);
  for (int k = 1; k < n; ++k)
    if (((c.at(n - k) - t.at(k)) % 4 + 4) % 4 != 0)
      return fail("C_{n-k} vs T_k mod 4", k, t.at(k), c.at(n - k));
  if (is_weak_symmetric(a)) {
    for (int k = 1; k < n; ++k) {
      int expected = k % 2 == 0 ? 0 : a.delta(k);
      if (t.at(k) != expected) return fail("weak symmetric T_k", k, expected, t.at(k));
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_lemma2(const BinarySequence& a) {
  int product = 1;
  for (int j = 1; j <= a.length(); ++j) product *= a.entry(j);
  int via_sum = product_sign_via_sum(a);
  int via_alt = product_sign_via_alt_sum(a);
  if (via_sum != product) return fail("product via plain sum", 0, product, via_sum);
  if (via_alt != product) return fail("product via alternating sum", 0, product, via_alt);
  return std::nullopt;
}

std::optional<std::string> check_lemma3(const BinarySequence& a) {
  int n = a.length();
  CorrelationProfile c = acf_direct(a);
  for (int k = 1; k < n; ++k)
    if (acf_outer(a, k) != c.at(n - k))
      return fail("outer form", k, c.at(n - k), acf_outer(a, k));
  return std::nullopt;
}

std::optional<std::string> check_lemma4(const BinarySequence& a) {
  int n = a.length();
  CorrelationProfile c = acf_direct(a);
  for (int k = 1; k < n / 2; ++k)
    if (acf_split(a, k) != c.at(k)) return fail("split form", k, c.at(k), acf_split(a, k));
  return std::nullopt;
}

std::optional<std::string> check_lemma5(const BinarySequence& a) {
  int n = a.length();
  int m = n / 2;
  CorrelationProfile c = acf_direct(a);
  for (int k = 2; k < n; k += 2)
    if (acf_strong(a, k) != c.at(k))
      return fail("strong form, even lag", k, c.at(k), acf_strong(a, k));
  for (int k = 1; k < m; k += 2) {
    if (acf_strong(a, k) != c.at(k))
      return fail("strong form, odd lag", k, c.at(k), acf_strong(a, k));
    if (acf_strong_high(a, k) != c.at(n - k))
      return fail("strong form, mirrored odd lag", k, c.at(n - k), acf_strong_high(a, k));
  }
  return std::nullopt;
}

std::optional<std::string> check_lemma6(const BinarySequence& a) {
  if (!half_reversal_relation_holds(a))
    return std::string("half reversal changed an even lag or failed to negate a mirrored odd lag");
  return std::nullopt;
}

std::optional<std::string> check_prop1(const BinarySequence& a) {
  int n = a.length();
  if (n < 4 || !is_barker(a)) return std::nullopt;
  if (!is_weak_symmetric(a)) return std::string("even-length Barker sequence is not weak symmetric");
  CorrelationProfile c = acf_direct(a);
  for (int k = 1; k < n; k += 2)
    if (c.at(k) != -a.delta(k)) return fail("odd lag vs mirror product", k, -a.delta(k), c.at(k));
  return std::nullopt;
}

// --- population scanning ----------------------------------------------------

struct ScanOutcome {
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::optional<Counterexample> first;
};

BinarySequence materialize(PopulationKind pop, int n, std::uint64_t pattern) {
  if (pop == PopulationKind::StrongSymmetricHalves)
    return extend_strong_symmetric(BinarySequence::from_bits(pattern, n / 2));
  return BinarySequence::from_bits(pattern, n);
}

BinarySequence materialize_random(PopulationKind pop, int n, std::uint64_t seed,
                                  std::uint64_t trial) {
  if (pop == PopulationKind::StrongSymmetricHalves)
    return extend_strong_symmetric(random_sequence(seed, n / 2, trial));
  return random_sequence(seed, n, trial);
}

int population_bits(PopulationKind pop, int n) {
  return pop == PopulationKind::StrongSymmetricHalves ? n / 2 : n;
}

// Deterministic parallel scan: the population is split into fixed
// pattern-prefix blocks, each block reports the smallest failure it saw, and
// blocks merge in order.
ScanOutcome scan_length(PopulationKind pop, int n, CheckFn check, const VerifyMode& mode,
                        int workers) {
  std::uint64_t total;
  int part_bits;
  if (mode.kind == VerifyMode::Kind::Exhaustive) {
    total = 1ull << population_bits(pop, n);
    part_bits = std::clamp(population_bits(pop, n) - 12, 0, 8);
  } else {
    total = mode.samples;
    part_bits = total >= (1u << 12) ? 8 : 0;
  }
  std::uint64_t part_count = 1ull << part_bits;
  std::uint64_t per_part = total / part_count;
  std::uint64_t remainder = total % part_count;

  std::vector<ScanOutcome> parts(part_count);
#pragma omp parallel for schedule(dynamic) num_threads(workers)
  for (std::int64_t p = 0; p < static_cast<std::int64_t>(part_count); ++p) {
    ScanOutcome& out = parts[static_cast<std::size_t>(p)];
    std::uint64_t up = static_cast<std::uint64_t>(p);
    std::uint64_t begin = up * per_part + std::min(up, remainder);
    std::uint64_t end = begin + per_part + (up < remainder ? 1 : 0);
    for (std::uint64_t x = begin; x < end; ++x) {
      BinarySequence s = mode.kind == VerifyMode::Kind::Exhaustive
                             ? materialize(pop, n, x)
                             : materialize_random(pop, n, mode.seed, x);
      ++out.checked;
      std::optional<std::string> failure = check(s);
      if (!failure) {
        ++out.passed;
      } else if (!out.first) {
        out.first = Counterexample{s.to_string(), *failure};
      }
    }
  }

  ScanOutcome merged;
  for (ScanOutcome& p : parts) {
    merged.checked += p.checked;
    merged.passed += p.passed;
    if (!merged.first && p.first) merged.first = std::move(p.first);
  }
  return merged;
}

bool admits(LengthFilter f, int n) {
  switch (f) {
    case LengthFilter::All: return true;
    case LengthFilter::Even: return n % 2 == 0;
    case LengthFilter::MultipleOfFour: return n % 4 == 0;
  }
  return false;
}

std::string format_n_list(const std::vector<int>& ns) {
  if (ns.empty()) return "none";
  bool consecutive = true;
  for (std::size_t i = 1; i < ns.size(); ++i)
    if (ns[i] != ns[i - 1] + 1) consecutive = false;
  std::ostringstream os;
  if (consecutive && ns.size() > 1) {
    os << ns.front() << ".." << ns.back();
  } else {
    for (std::size_t i = 0; i < ns.size(); ++i) os << (i ? "," : "") << ns[i];
  }
  return os.str();
}

std::string describe_population(PopulationKind pop, const VerifyMode& mode,
                                const std::vector<int>& ns) {
  std::ostringstream os;
  if (mode.kind == VerifyMode::Kind::Exhaustive) {
    os << (pop == PopulationKind::StrongSymmetricHalves
               ? "strong symmetric via all 2^(n/2) halves"
               : "all 2^n sequences");
  } else {
    os << mode.samples << " seeded samples per n (seed " << mode.seed << ")"
       << (pop == PopulationKind::StrongSymmetricHalves ? ", strong symmetric" : "");
  }
  os << ", n=" << format_n_list(ns);
  return os.str();
}

}  // namespace

const std::vector<IdentityInfo>& identity_registry() {
  static const std::vector<IdentityInfo> registry = {
      {"eq1", "C_k == n-k (mod 2) for every lag", PopulationKind::AllSequences,
       LengthFilter::All, &check_eq1},
      {"eq2", "(sum of entries)^2 == n + 2*sum of nontrivial lags",
       PopulationKind::AllSequences, LengthFilter::All, &check_eq2},
      {"eq3", "C_k + C_{n-k} equals the circular correlation and is n (mod 4)",
       PopulationKind::AllSequences, LengthFilter::All, &check_eq3},
      {"eq4", "even-length Barker (n >= 4): C_k == -C_{n-k}", PopulationKind::AllSequences,
       LengthFilter::Even, &check_eq4},
      {"eq5", "delta_k == delta_{n+1-k}", PopulationKind::AllSequences, LengthFilter::All,
       &check_eq5},
      {"eq6", "weak symmetric: delta_k == -delta_{k+1} for odd k",
       PopulationKind::AllSequences, LengthFilter::All, &check_eq6},
      {"lemma1", "C_{n-k} == T_k (mod 4); weak symmetric pins T_k",
       PopulationKind::AllSequences, LengthFilter::All, &check_lemma1},
      {"lemma2", "counting signs equal the literal entry product",
       PopulationKind::AllSequences, LengthFilter::All, &check_lemma2},
      {"lemma3", "outer form equals acf_direct at every high lag",
       PopulationKind::AllSequences, LengthFilter::All, &check_lemma3},
      {"lemma4", "split form equals acf_direct at every low lag",
       PopulationKind::AllSequences, LengthFilter::Even, &check_lemma4},
      {"lemma5", "strong symmetric closed forms equal acf_direct",
       PopulationKind::StrongSymmetricHalves, LengthFilter::MultipleOfFour, &check_lemma5},
      {"lemma6", "half reversal fixes even lags, negates mirrored odd lags",
       PopulationKind::StrongSymmetricHalves, LengthFilter::MultipleOfFour, &check_lemma6},
      {"prop1", "even-length Barker is weak symmetric, odd lags are -delta_k",
       PopulationKind::AllSequences, LengthFilter::Even, &check_prop1},
  };
  return registry;
}

const IdentityInfo* find_identity(std::string_view id) {
  for (const IdentityInfo& info : identity_registry())
    if (id == info.id) return &info;
  return nullptr;
}

VerificationReport run_verification(std::string label, CheckFn check,
                                    PopulationKind population, LengthFilter lengths,
                                    int n_min, int n_max, const VerifyMode& mode,
                                    const EngineOptions& opts) {
  if (n_min < 2 || n_max < n_min || n_max > BinarySequence::kMaxLength)
    throw PreconditionError("invalid length range " + std::to_string(n_min) + ".." +
                            std::to_string(n_max));
  if (mode.kind == VerifyMode::Kind::Random && mode.samples == 0)
    throw PreconditionError("random mode requires a positive sample count");
  if (opts.workers < 1) throw PreconditionError("workers must be positive");

  std::vector<int> ns;
  std::uint64_t planned = 0;
  bool too_big = false;
  for (int n = n_min; n <= n_max; ++n) {
    if (!admits(lengths, n)) continue;
    if (population == PopulationKind::StrongSymmetricHalves && n % 4 != 0) continue;
    ns.push_back(n);
    if (mode.kind == VerifyMode::Kind::Exhaustive) {
      int bits = population_bits(population, n);
      if (bits >= 62 || planned + (1ull << bits) < planned)
        too_big = true;
      else
        planned += 1ull << bits;
    } else {
      planned += mode.samples;
    }
  }
  if (too_big || planned > opts.max_evaluations)
    throw BudgetError("verification of '" + label + "' over n=" + std::to_string(n_min) +
                      ".." + std::to_string(n_max) + " needs " +
                      (too_big ? std::string(">2^62") : std::to_string(planned)) +
                      " evaluations, budget is " + std::to_string(opts.max_evaluations) +
                      " (raise it explicitly to proceed)");

  auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.identity_id = std::move(label);
  report.population = describe_population(population, mode, ns);
  for (int n : ns) {
    ScanOutcome outcome = scan_length(population, n, check, mode, opts.workers);
    report.checked += outcome.checked;
    report.passed += outcome.passed;
    if (!report.first_counterexample && outcome.first)
      report.first_counterexample = std::move(outcome.first);
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  assert(report.first_counterexample.has_value() == (report.passed < report.checked));
  return report;
}

VerificationReport verify_identity(std::string_view id, int n_min, int n_max,
                                   const VerifyMode& mode, const EngineOptions& opts) {
  const IdentityInfo* info = find_identity(id);
  if (!info) throw PreconditionError("unknown identity '" + std::string(id) + "'");
  return run_verification(info->id, info->check, info->population, info->lengths, n_min,
                          n_max, mode, opts);
}

Theorem1Row verify_theorem1(int n, const EngineOptions& opts) {
  if (n % 2 != 0 || n < 4)
    throw PreconditionError("verify_theorem1 requires even n >= 4, got " + std::to_string(n));
  SearchConfig cfg;
  cfg.n = n;
  cfg.workers = opts.workers;
  SearchResult all = search_barker(cfg);

  Theorem1Row row;
  row.n = n;
  row.barker_count = all.sequences.size();
  for (const BinarySequence& s : all.sequences)
    if (has_equal_odd_lags(s)) ++row.matching_count;
  row.consistent = n == 4 ? row.matching_count > 0 : row.matching_count == 0;
  return row;
}

Lemma7Report verify_lemma7(int n, const EngineOptions& opts) {
  if (n % 4 != 0 || n < 4)
    throw PreconditionError("verify_lemma7 requires n to be a multiple of 4, got " +
                            std::to_string(n));
  SearchConfig cfg;
  cfg.workers = opts.workers;
  SearchResult constrained = search_constrained(n, cfg);

  Lemma7Report report;
  report.n = n;
  report.population = constrained.sequences.size();
  int u = n / 4;
  for (const BinarySequence& a : constrained.sequences) {
    for (int j = 1; j < u; ++j) {
      ++report.pair_checks;
      int base = a.entry(j) * a.entry(j + 1);
      int doubled = a.entry(2 * j) * a.entry(2 * j + 1);
      int offset = a.entry(u + j) * a.entry(u + j + 1);
      if (base != doubled || doubled != offset) {
        ++report.violations;
        if (!report.first_counterexample)
          report.first_counterexample = Counterexample{
              a.to_string(), fail("pair rule", j, base, base == doubled ? offset : doubled)};
      }
    }
  }
  return report;
}

BinarySequence random_sequence(std::uint64_t seed, int n, std::uint64_t trial) {
  if (n < 1 || n > BinarySequence::kMaxLength)
    throw PreconditionError("random_sequence length outside [1," +
                            std::to_string(BinarySequence::kMaxLength) + "]");
  auto splitmix = [](std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  };
  std::uint64_t state = seed;
  state ^= splitmix(state) + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(n);
  state ^= splitmix(state) + 0xD1B54A32D192ED03ull * (trial + 1);
  std::array<std::uint64_t, BinarySequence::kWordCount> words{};
  for (std::size_t w = 0; w < static_cast<std::size_t>((n + 63) / 64); ++w)
    words[w] = splitmix(state);
  return BinarySequence::from_words({words.data(), words.size()}, n);
}

}  // namespace barker
