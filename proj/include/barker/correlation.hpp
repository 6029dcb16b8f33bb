#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "barker/sequence.hpp"

namespace barker {

/// The full aperiodic autocorrelation vector (C_0, ..., C_{n-1}) of one
/// sequence: C_k = sum_{j=1}^{n-k} a_j * a_{j+k}. C_0 is always n, every
/// C_k has |C_k| <= n-k and C_k == n-k (mod 2).
struct CorrelationProfile {
  int n = 0;
  std::vector<int> values;  // values[k] = C_k

  int at(int k) const { return values.at(static_cast<std::size_t>(k)); }
};

/// Prefix sums of mirror products: values[k-1] = sum_{j=1}^{k} a_j * a_{n+1-j}
/// for k = 1..n. Consecutive sums differ by exactly 1 and |T_k| <= k.
struct Tvector {
  int n = 0;
  std::vector<int> values;

  int at(int k) const { return values.at(static_cast<std::size_t>(k - 1)); }  // 1-based
};

/// Literal evaluation of the defining sums. This is the serial reference
/// every other correlation routine is tested against.
CorrelationProfile acf_direct(const BinarySequence& a);

/// Bit-parallel kernel: C_k = (n-k) - 2 * popcount of disagreements between
/// the sequence and its shift by k. Equal to acf_direct on every input.
CorrelationProfile acf_fast(const BinarySequence& a);

/// One lag of the bit-parallel kernel over raw packed words (+1 <-> bit 1).
/// Words beyond position n must be zero. 0 <= k < n.
int acf_lag_words(std::span<const std::uint64_t> words, int n, int k);

Tvector t_vector(const BinarySequence& a);

/// True iff C_k == n-k (mod 2) for every 1 <= k < n. Holds for all sequences.
bool lag_parity_holds(const BinarySequence& a);

/// True iff (sum of entries)^2 == n + 2 * sum_{k=1}^{n-1} C_k. Holds always.
bool sum_square_identity_holds(const BinarySequence& a);

/// C_k + C_{n-k} for 1 <= k < n; equals the circular correlation at lag k
/// and is always congruent to n mod 4.
int periodic_sum(const BinarySequence& a, int k);

/// Product of all entries computed from the plain sum S of entries as
/// (-1)^((m-S)/2).
int product_sign_via_sum(const BinarySequence& b);

/// Product of all entries computed from the alternating sum
/// R = sum (-1)^j b_j: (-1)^(R/2) for even length, (-1)^((R+1)/2) for odd.
int product_sign_via_alt_sum(const BinarySequence& b);

/// C_{n-k} (1 <= k < n) evaluated from the k outermost entries and their
/// mirror products only:
///   even k: sum_{j=1}^{k/2} a_j a_{k+1-j} (delta_j + delta_{k+1-j})
///   odd k:  delta_{(k+1)/2} + the same sum up to (k-1)/2.
int acf_outer(const BinarySequence& a, int k);

/// C_k for even length n = 2m and 1 <= k < m, evaluated from first-half
/// entries and mirror products via the split form
///   [odd k only: delta_{(n-k+1)/2}]
///   + sum_{j=1}^{m-k} a_j a_{j+k} (1 + delta_j delta_{j+k})
///   + sum_{j=1}^{k/2 or (k-1)/2} a_{j+m-k} a_{m+1-j} (delta_{j+m-k} + delta_{m+1-j}).
int acf_split(const BinarySequence& a, int k);

/// C_k of a strong symmetric sequence of length n = 2m, from its half b:
///   even k: 2*C_k(b) for k < m, 0 for k >= m (any 1 <= k < n)
///   odd k < m: (-1)^((k-1)/2) - 2 * sum_{j=1}^{(k-1)/2} (-1)^j b_{j+m-k} b_{m+1-j}
/// Odd k >= m is not covered by the closed form and raises
/// UnsupportedIndexError instead of falling back.
int acf_strong(const BinarySequence& a, int k);

/// C_{n-k} of a strong symmetric sequence for odd 1 <= k < m:
///   (-1)^((k+1)/2) + 2 * sum_{j=1}^{(k-1)/2} (-1)^j b_j b_{k+1-j}.
int acf_strong_high(const BinarySequence& a, int k);

/// For strong symmetric a and p = strong_symmetric_reverse(a), checks
/// C_k(p) == C_k(a) for even k and C_k(p) == -C_{n-k}(a) for odd k,
/// over all 1 <= k < n. True for every strong symmetric sequence.
bool half_reversal_relation_holds(const BinarySequence& a);

}  // namespace barker
