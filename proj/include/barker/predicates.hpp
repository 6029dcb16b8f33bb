#pragma once

#include <optional>
#include <string>

#include "barker/sequence.hpp"

namespace barker {

/// The smallest index at which a positional identity fails. `expected` is
/// the value the identity demands there and `actual` what the sequence has;
/// for the barker check, `expected` is the allowed magnitude bound (1) and
/// `actual` the offending correlation value.
struct Violation {
  std::string property;
  int index = 0;
  long long expected = 0;
  long long actual = 0;
};

/// Classification of one sequence. barker_even_structure_ok is nullopt when
/// the structural checks do not apply (not a Barker sequence of even length
/// >= 4). first_violation reports the first positional failure encountered,
/// scanning properties in the order they are listed here; length-gate
/// failures (e.g. odd n for weak symmetry) record nothing.
struct SymmetryReport {
  bool is_barker = false;
  bool is_skew_symmetric = false;
  bool is_weak_symmetric = false;
  bool is_strong_symmetric = false;
  std::optional<bool> barker_even_structure_ok;
  std::optional<Violation> first_violation;
};

/// All nontrivial correlations in {-1,0,+1}.
bool is_barker(const BinarySequence& a);

/// Odd n with entry(j)*entry(n+1-j) == (-1)^((n+1)/2 + j) for all j; false
/// for even lengths rather than an error, so it composes in filters.
bool is_skew_symmetric(const BinarySequence& a);

/// n a multiple of 4 with entry(j)*entry(j+1) == -entry(n+1-j)*entry(n-j)
/// for every odd j < n/2; false when the length gate fails.
bool is_weak_symmetric(const BinarySequence& a);

/// n a multiple of 4 with entry(j)*entry(n+1-j) == (-1)^j for j <= n/2;
/// false when the length gate fails. Implies is_weak_symmetric.
bool is_strong_symmetric(const BinarySequence& a);

SymmetryReport symmetry_report(const BinarySequence& a);

/// Structural consequences for a Barker sequence of even length n >= 4.
/// Construction throws PreconditionError if the input is not such a
/// sequence; a violated check here would falsify the classification rules.
struct EvenBarkerStructure {
  bool weak_symmetric = false;
  bool even_lags_zero = false;        // C_k == 0 for even k
  bool odd_lags_match_mirror = false; // C_k == -entry(k)*entry(n+1-k) for odd k
  bool length_is_four_square = false; // n == 4*r*r
  bool antisymmetric = false;         // C_k == -C_{n-k} for all k
  int r = 0;                          // the square root when applicable
  std::optional<Violation> first_violation;

  bool all_ok() const {
    return weak_symmetric && even_lags_zero && odd_lags_match_mirror &&
           length_is_four_square && antisymmetric;
  }
};

EvenBarkerStructure barker_even_structure(const BinarySequence& a);

/// Structural consequences for a Barker sequence of odd length: zero odd
/// lags, even lags pinned to (-1)^((n-1)/2), and skew symmetry.
struct OddBarkerStructure {
  bool odd_lags_zero = false;
  bool even_lags_fixed = false;
  bool skew_symmetric = false;
  std::optional<Violation> first_violation;

  bool all_ok() const { return odd_lags_zero && even_lags_fixed && skew_symmetric; }
};

OddBarkerStructure barker_odd_structure(const BinarySequence& a);

}  // namespace barker
