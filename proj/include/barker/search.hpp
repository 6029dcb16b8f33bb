#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "barker/sequence.hpp"

namespace barker {

/// Search parameters. Entries are fixed inward from both ends
/// (a_1, a_n, a_2, a_{n-1}, ...), which pins the high-lag correlations
/// C_{n-1}, C_{n-2}, ... as early as possible; pruning abandons a branch as
/// soon as a pinned lag leaves {-1,0,+1}. With prune=false the search is a
/// plain scan of all 2^n patterns filtered after the fact — the oracle the
/// pruned search is tested against.
struct SearchConfig {
  int n = 0;
  bool prune = true;
  /// Keep one representative per orbit of the symmetry group generated by
  /// negate, reverse and alternate (the minimum bit pattern of the orbit).
  bool canonicalize = false;
  /// Additionally require C_1 == C_3 == ... == C_{n/2-1} (set by
  /// search_constrained).
  bool require_equal_odd_lags = false;
  std::optional<std::size_t> max_results;  // applied to the final sorted list
  int workers = 1;
  /// Overrides the default length cap (32 pruned, 24 unpruned).
  std::optional<int> length_budget;
};

/// sequences is sorted by bit pattern and duplicate-free; every element
/// satisfies is_barker (plus the extra constraint when configured).
/// nodes_visited counts entry assignments in the canonical depth-first
/// order (or patterns scanned when prune=false) and pruned counts abandoned
/// branches including rejected leaves; both are independent of the worker
/// count. elapsed is wall time and is the only nondeterministic field.
struct SearchResult {
  int n = 0;
  std::vector<BinarySequence> sequences;
  std::uint64_t nodes_visited = 0;
  std::uint64_t pruned = 0;
  std::chrono::duration<double> elapsed{};
};

/// All Barker sequences of length cfg.n (or canonical representatives).
/// Throws BudgetError when n exceeds the configured cap and
/// PreconditionError for n outside [2, 1024].
SearchResult search_barker(const SearchConfig& cfg);

/// Barker sequences of even length n >= 4 whose odd lags C_1, C_3, ...,
/// C_{n/2-1} are all equal. Settings other than n and the constraint are
/// taken from `base`.
SearchResult search_constrained(int n, const SearchConfig& base = {});

/// The lengths at which Barker sequences are known to exist.
const std::set<int>& known_barker_lengths();

/// The orbit of `a` under the group generated by negate, reverse and
/// alternate, computed by closure and returned sorted by bit pattern.
/// Never has more than 8 elements.
std::vector<BinarySequence> symmetry_orbit(const BinarySequence& a);

/// The minimum bit pattern in symmetry_orbit(a).
BinarySequence canonical_representative(const BinarySequence& a);

/// True iff C_1 == C_3 == ... == C_{n/2-1} (even n; vacuous when the list
/// is empty or a single lag).
bool has_equal_odd_lags(const BinarySequence& a);

}  // namespace barker
