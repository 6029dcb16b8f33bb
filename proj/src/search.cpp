#include "barker/search.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <string>

#include "barker/correlation.hpp"
#include "barker/errors.hpp"
#include "barker/predicates.hpp"

namespace barker {
namespace {

constexpr int kPrunedLengthCap = 32;
constexpr int kPlainLengthCap = 24;

struct DfsState {
  int n = 0;
  std::array<std::uint64_t, BinarySequence::kWordCount> words{};
  std::array<std::int8_t, BinarySequence::kMaxLength + 1> entries{};  // 1-based
};

struct DfsStats {
  std::uint64_t nodes = 0;
  std::uint64_t pruned = 0;
  std::vector<BinarySequence> found;
};

// Both-ends fixing order: a_1, a_n, a_2, a_{n-1}, ...
int fix_position(int n, int depth) {
  return depth % 2 == 0 ? depth / 2 + 1 : n - depth / 2;
}

void set_entry(DfsState& st, int pos, int value) {
  st.entries[static_cast<std::size_t>(pos)] = static_cast<std::int8_t>(value);
  std::uint64_t bit = 1ull << ((pos - 1) % 64);
  std::uint64_t& w = st.words[static_cast<std::size_t>((pos - 1) / 64)];
  if (value > 0)
    w |= bit;
  else
    w &= ~bit;
}

// C_{n-j}, fully determined once the outermost j entries at each end are set.
int outer_lag_value(const DfsState& st, int j) {
  int sum = 0;
  for (int i = 1; i <= j; ++i)
    sum += st.entries[static_cast<std::size_t>(i)] *
           st.entries[static_cast<std::size_t>(i + st.n - j)];
  return sum;
}

// Lags the descent did not pin: 1 .. ceil(n/2)-1, plus the extra constraint.
bool leaf_accept(const DfsState& st, const SearchConfig& cfg) {
  int n = st.n;
  std::span<const std::uint64_t> words(st.words.data(),
                                       static_cast<std::size_t>((n + 63) / 64));
  for (int k = 1; k <= (n + 1) / 2 - 1; ++k) {
    int c = acf_lag_words(words, n, k);
    if (c < -1 || c > 1) return false;
  }
  if (cfg.require_equal_odd_lags) {
    int first = 0;
    bool have_first = false;
    for (int k = 1; k <= n / 2 - 1; k += 2) {
      int c = acf_lag_words(words, n, k);
      if (!have_first) {
        first = c;
        have_first = true;
      } else if (c != first) {
        return false;
      }
    }
  }
  return true;
}

// Canonical depth-first expansion; node and prune counts do not depend on
// how the tree is split across workers.
template <typename AtDepth>
void expand(DfsState& st, int depth, int stop_depth, const SearchConfig& cfg,
            DfsStats& stats, AtDepth&& at_stop) {
  if (depth == stop_depth) {
    at_stop(st);
    return;
  }
  int pos = fix_position(st.n, depth);
  for (int value = -1; value <= 1; value += 2) {
    set_entry(st, pos, value);
    ++stats.nodes;
    if (depth % 2 == 1) {
      int j = (depth + 1) / 2;
      int c = outer_lag_value(st, j);
      if (c < -1 || c > 1) {
        ++stats.pruned;
        continue;
      }
      assert(((c - j) % 2 + 2) % 2 == 0);  // parity of a pinned lag
    }
    expand(st, depth + 1, stop_depth, cfg, stats, at_stop);
  }
}

void dfs_to_leaves(DfsState& st, int depth, const SearchConfig& cfg, DfsStats& stats) {
  expand(st, depth, st.n, cfg, stats, [&](DfsState& leaf) {
    if (leaf_accept(leaf, cfg)) {
      std::span<const std::uint64_t> words(leaf.words.data(),
                                           static_cast<std::size_t>((leaf.n + 63) / 64));
      stats.found.push_back(BinarySequence::from_words(words, leaf.n));
    } else {
      ++stats.pruned;
    }
  });
}

DfsStats pruned_search(const SearchConfig& cfg) {
  int n = cfg.n;
  int prefix_depth = 0;
  if (cfg.workers > 1) {
    int log2w = std::bit_width(static_cast<unsigned>(cfg.workers - 1));
    prefix_depth = std::min(2 * log2w, std::max(0, n - 2));
  }

  DfsStats total;
  DfsState root;
  root.n = n;
  std::vector<DfsState> work;
  expand(root, 0, prefix_depth, cfg, total,
         [&](DfsState& st) { work.push_back(st); });

  std::vector<DfsStats> parts(work.size());
#pragma omp parallel for schedule(dynamic) num_threads(cfg.workers)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(work.size()); ++i) {
    DfsState st = work[static_cast<std::size_t>(i)];
    dfs_to_leaves(st, prefix_depth, cfg, parts[static_cast<std::size_t>(i)]);
  }
  for (DfsStats& p : parts) {
    total.nodes += p.nodes;
    total.pruned += p.pruned;
    total.found.insert(total.found.end(), p.found.begin(), p.found.end());
  }
  return total;
}

DfsStats plain_scan(const SearchConfig& cfg) {
  int n = cfg.n;
  std::uint64_t total_patterns = 1ull << n;
  std::uint64_t chunks = std::min<std::uint64_t>(total_patterns, 256);
  std::uint64_t per_chunk = total_patterns / chunks;

  std::vector<DfsStats> parts(chunks);
#pragma omp parallel for schedule(dynamic) num_threads(cfg.workers)
  for (std::int64_t ci = 0; ci < static_cast<std::int64_t>(chunks); ++ci) {
    DfsStats& part = parts[static_cast<std::size_t>(ci)];
    std::uint64_t begin = static_cast<std::uint64_t>(ci) * per_chunk;
    std::uint64_t end = begin + per_chunk;
    for (std::uint64_t x = begin; x < end; ++x) {
      BinarySequence s = BinarySequence::from_bits(x, n);
      if (!is_barker(s)) continue;
      if (cfg.require_equal_odd_lags && !has_equal_odd_lags(s)) continue;
      part.found.push_back(std::move(s));
    }
  }
  DfsStats total;
  total.nodes = total_patterns;
  for (DfsStats& p : parts)
    total.found.insert(total.found.end(), p.found.begin(), p.found.end());
  return total;
}

}  // namespace

SearchResult search_barker(const SearchConfig& cfg) {
  if (cfg.n < 2 || cfg.n > BinarySequence::kMaxLength)
    throw PreconditionError("search length " + std::to_string(cfg.n) + " outside [2," +
                            std::to_string(BinarySequence::kMaxLength) + "]");
  if (cfg.workers < 1) throw PreconditionError("workers must be positive");
  int cap = cfg.length_budget.value_or(cfg.prune ? kPrunedLengthCap : kPlainLengthCap);
  if (cfg.n > cap)
    throw BudgetError("search length " + std::to_string(cfg.n) +
                      " exceeds the budget of " + std::to_string(cap) +
                      " (raise it explicitly to proceed)");

  auto start = std::chrono::steady_clock::now();
  DfsStats stats = cfg.prune ? pruned_search(cfg) : plain_scan(cfg);

  std::vector<BinarySequence>& found = stats.found;
  if (cfg.canonicalize) {
    std::erase_if(found,
                  [](const BinarySequence& s) { return canonical_representative(s) != s; });
  }
  std::sort(found.begin(), found.end());
  assert(std::adjacent_find(found.begin(), found.end()) == found.end());
  if (cfg.max_results && found.size() > *cfg.max_results) found.resize(*cfg.max_results);

  SearchResult result;
  result.n = cfg.n;
  result.sequences = std::move(found);
  result.nodes_visited = stats.nodes;
  result.pruned = stats.pruned;
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

SearchResult search_constrained(int n, const SearchConfig& base) {
  if (n % 2 != 0 || n < 4)
    throw PreconditionError("search_constrained requires even n >= 4, got " +
                            std::to_string(n));
  SearchConfig cfg = base;
  cfg.n = n;
  cfg.require_equal_odd_lags = true;
  return search_barker(cfg);
}

const std::set<int>& known_barker_lengths() {
  static const std::set<int> lengths{2, 3, 4, 5, 7, 11, 13};
  return lengths;
}

std::vector<BinarySequence> symmetry_orbit(const BinarySequence& a) {
  std::set<BinarySequence> seen{a};
  std::vector<BinarySequence> frontier{a};
  while (!frontier.empty()) {
    std::vector<BinarySequence> next;
    for (const BinarySequence& s : frontier) {
      for (BinarySequence t : {s.negate(), s.reverse(), s.alternate()}) {
        if (seen.insert(t).second) next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

BinarySequence canonical_representative(const BinarySequence& a) {
  return symmetry_orbit(a).front();
}

bool has_equal_odd_lags(const BinarySequence& a) {
  int n = a.length();
  if (n % 2 != 0)
    throw PreconditionError("has_equal_odd_lags requires even length, got " +
                            std::to_string(n));
  int first = 0;
  bool have_first = false;
  for (int k = 1; k <= n / 2 - 1; k += 2) {
    int c = acf_lag_words(a.words(), n, k);
    if (!have_first) {
      first = c;
      have_first = true;
    } else if (c != first) {
      return false;
    }
  }
  return true;
}

}  // namespace barker
