#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "barker/sequence.hpp"

namespace barker {

/// What a verification run enumerates: every bit pattern of length n, or
/// every strong symmetric sequence of length n reached by extending each of
/// the 2^(n/2) possible halves.
enum class PopulationKind { AllSequences, StrongSymmetricHalves };

/// Which lengths in the requested range an identity applies to.
enum class LengthFilter { All, Even, MultipleOfFour };

struct VerifyMode {
  enum class Kind { Exhaustive, Random };
  Kind kind = Kind::Exhaustive;
  std::uint64_t samples = 0;  // per length, random mode only
  std::uint64_t seed = 0;     // mandatory for random mode

  static VerifyMode exhaustive() { return {}; }
  static VerifyMode random(std::uint64_t samples, std::uint64_t seed) {
    return {Kind::Random, samples, seed};
  }
};

struct EngineOptions {
  int workers = 1;
  /// Refuse exhaustive runs above this many per-identity evaluations.
  std::uint64_t max_evaluations = 1ull << 28;
};

struct Counterexample {
  std::string sequence;  // canonical "+-" rendering
  std::string details;
};

/// Outcome of checking one identity over one enumerated population.
/// first_counterexample is present iff passed < checked and is the failure
/// with the smallest (length, pattern) in enumeration order regardless of
/// worker count. elapsed is wall time, the only nondeterministic field.
struct VerificationReport {
  std::string identity_id;
  std::string population;
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::optional<Counterexample> first_counterexample;
  std::chrono::duration<double> elapsed{};

  bool ok() const { return passed == checked; }
};

/// A per-sequence check; returns the failure description, or nullopt when
/// the sequence satisfies the identity.
using CheckFn = std::optional<std::string> (*)(const BinarySequence&);

/// One verifiable identity: a stable id (the vocabulary the CLI accepts),
/// a statement of what is checked, and the population it ranges over.
struct IdentityInfo {
  const char* id;
  const char* statement;
  PopulationKind population;
  LengthFilter lengths;
  CheckFn check;
};

/// Every registered identity, in the order reports are emitted for "all".
const std::vector<IdentityInfo>& identity_registry();

/// nullptr when the id is unknown.
const IdentityInfo* find_identity(std::string_view id);

/// Runs one registered identity over lengths n_min..n_max (those its filter
/// admits). Throws BudgetError when the population exceeds
/// opts.max_evaluations and PreconditionError for bad ranges or a random
/// mode without samples.
VerificationReport verify_identity(std::string_view id, int n_min, int n_max,
                                   const VerifyMode& mode, const EngineOptions& opts = {});

/// The engine under verify_identity, usable with any check and population.
VerificationReport run_verification(std::string label, CheckFn check,
                                    PopulationKind population, LengthFilter lengths,
                                    int n_min, int n_max, const VerifyMode& mode,
                                    const EngineOptions& opts = {});

/// Outcome of testing that no Barker sequence of even length n > 4 has all
/// equal odd-lag correlations: enumerates every Barker sequence of length n
/// by search and counts those satisfying the condition. Consistency means a
/// positive count at n = 4 and zero elsewhere.
struct Theorem1Row {
  int n = 0;
  std::uint64_t barker_count = 0;
  std::uint64_t matching_count = 0;
  bool consistent = false;
};

Theorem1Row verify_theorem1(int n, const EngineOptions& opts = {});

/// Pair-rule check over the Barker sequences of length n (a multiple of 4)
/// with equal odd lags: entry(j)entry(j+1) == entry(2j)entry(2j+1) ==
/// entry(u+j)entry(u+j+1) for 1 <= j < u = n/4. For n > 4 the population is
/// empty; for n = 4 the index range is empty, so the rule holds vacuously.
struct Lemma7Report {
  int n = 0;
  std::uint64_t population = 0;
  std::uint64_t pair_checks = 0;
  std::uint64_t violations = 0;
  std::optional<Counterexample> first_counterexample;

  bool ok() const { return violations == 0; }
};

Lemma7Report verify_lemma7(int n, const EngineOptions& opts = {});

/// Deterministic seeded sequence: the same (seed, n, trial) triple yields
/// the same sequence on every platform and worker count.
BinarySequence random_sequence(std::uint64_t seed, int n, std::uint64_t trial);

}  // namespace barker
