#include "barker/correlation.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>
#include <string>

#include "barker/errors.hpp"
#include "barker/predicates.hpp"

namespace barker {
namespace {

int pow_m1(long long exponent) { return (exponent % 2 + 2) % 2 == 0 ? 1 : -1; }

void check_lag(int k, int lo, int hi, const char* what) {
  if (k < lo || k > hi)
    throw std::out_of_range(std::string(what) + ": lag " + std::to_string(k) +
                            " outside [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
}

}  // namespace

CorrelationProfile acf_direct(const BinarySequence& a) {
  int n = a.length();
  CorrelationProfile p;
  p.n = n;
  p.values.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    int sum = 0;
    for (int j = 1; j <= n - k; ++j) sum += a.entry(j) * a.entry(j + k);
    p.values[static_cast<std::size_t>(k)] = sum;
  }
  return p;
}

int acf_lag_words(std::span<const std::uint64_t> words, int n, int k) {
  check_lag(k, 0, n - 1, "acf_lag_words");
  int len = n - k;
  int word_shift = k / 64;
  int bit_shift = k % 64;
  int overlap_words = (len + 63) / 64;
  int total_words = static_cast<int>(words.size());
  int disagreements = 0;
  for (int i = 0; i < overlap_words; ++i) {
    std::uint64_t shifted = words[static_cast<std::size_t>(i + word_shift)] >> bit_shift;
    if (bit_shift != 0 && i + word_shift + 1 < total_words)
      shifted |= words[static_cast<std::size_t>(i + word_shift + 1)] << (64 - bit_shift);
    std::uint64_t x = words[static_cast<std::size_t>(i)] ^ shifted;
    int remaining = len - 64 * i;
    if (remaining < 64) x &= (1ull << remaining) - 1;
    disagreements += std::popcount(x);
  }
  return len - 2 * disagreements;
}

CorrelationProfile acf_fast(const BinarySequence& a) {
  int n = a.length();
  CorrelationProfile p;
  p.n = n;
  p.values.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    p.values[static_cast<std::size_t>(k)] = acf_lag_words(a.words(), n, k);
  return p;
}

Tvector t_vector(const BinarySequence& a) {
  int n = a.length();
  Tvector t;
  t.n = n;
  t.values.resize(static_cast<std::size_t>(n));
  int sum = 0;
  for (int k = 1; k <= n; ++k) {
    sum += a.delta(k);
    t.values[static_cast<std::size_t>(k - 1)] = sum;
  }
  return t;
}

bool lag_parity_holds(const BinarySequence& a) {
  CorrelationProfile c = acf_direct(a);
  int n = a.length();
  for (int k = 1; k < n; ++k)
    if ((c.at(k) - (n - k)) % 2 != 0) return false;
  return true;
}

bool sum_square_identity_holds(const BinarySequence& a) {
  int n = a.length();
  int entry_sum = 0;
  for (int j = 1; j <= n; ++j) entry_sum += a.entry(j);
  CorrelationProfile c = acf_direct(a);
  long long rhs = n;
  for (int k = 1; k < n; ++k) rhs += 2ll * c.at(k);
  return static_cast<long long>(entry_sum) * entry_sum == rhs;
}

int periodic_sum(const BinarySequence& a, int k) {
  int n = a.length();
  check_lag(k, 1, n - 1, "periodic_sum");
  int value = acf_lag_words(a.words(), n, k) + acf_lag_words(a.words(), n, n - k);
  assert(((value - n) % 4 + 4) % 4 == 0);
  return value;
}

int product_sign_via_sum(const BinarySequence& b) {
  int m = b.length();
  int sum = 0;
  for (int j = 1; j <= m; ++j) sum += b.entry(j);
  return pow_m1((m - sum) / 2);
}

int product_sign_via_alt_sum(const BinarySequence& b) {
  int m = b.length();
  int alt = 0;
  for (int j = 1; j <= m; ++j) alt += (j % 2 != 0 ? -1 : 1) * b.entry(j);
  return m % 2 == 0 ? pow_m1(alt / 2) : pow_m1((alt + 1) / 2);
}

int acf_outer(const BinarySequence& a, int k) {
  int n = a.length();
  check_lag(k, 1, n - 1, "acf_outer");
  int sum = 0;
  int pairs = k / 2;  // floor; odd k contributes the middle mirror product
  if (k % 2 != 0) {
    sum = a.delta((k + 1) / 2);
    pairs = (k - 1) / 2;
  }
  for (int j = 1; j <= pairs; ++j)
    sum += a.entry(j) * a.entry(k + 1 - j) * (a.delta(j) + a.delta(k + 1 - j));
  return sum;
}

int acf_split(const BinarySequence& a, int k) {
  int n = a.length();
  if (n % 2 != 0) throw PreconditionError("acf_split requires even length, got " +
                                          std::to_string(n));
  int m = n / 2;
  if (k < 1 || k >= m)
    throw PreconditionError("acf_split: lag " + std::to_string(k) + " outside [1," +
                            std::to_string(m - 1) + "]");
  int sum = 0;
  int tail_pairs = k / 2;
  if (k % 2 != 0) {
    sum = a.delta((n - k + 1) / 2);
    tail_pairs = (k - 1) / 2;
  }
  for (int j = 1; j <= m - k; ++j)
    sum += a.entry(j) * a.entry(j + k) * (1 + a.delta(j) * a.delta(j + k));
  for (int j = 1; j <= tail_pairs; ++j)
    sum += a.entry(j + m - k) * a.entry(m + 1 - j) * (a.delta(j + m - k) + a.delta(m + 1 - j));
  return sum;
}

int acf_strong(const BinarySequence& a, int k) {
  if (!is_strong_symmetric(a))
    throw PreconditionError("acf_strong requires a strong symmetric sequence");
  int n = a.length();
  int m = n / 2;
  check_lag(k, 1, n - 1, "acf_strong");
  if (k % 2 == 0) {
    if (k >= m) return 0;
    BinarySequence b = a.first_half();
    return 2 * acf_lag_words(b.words(), m, k);
  }
  if (k >= m)
    throw UnsupportedIndexError("acf_strong: odd lag " + std::to_string(k) +
                                " >= " + std::to_string(m) +
                                " is outside the closed form's domain");
  int sum = pow_m1((k - 1) / 2);
  for (int j = 1; j <= (k - 1) / 2; ++j)
    sum -= 2 * pow_m1(j) * a.entry(j + m - k) * a.entry(m + 1 - j);
  return sum;
}

int acf_strong_high(const BinarySequence& a, int k) {
  if (!is_strong_symmetric(a))
    throw PreconditionError("acf_strong_high requires a strong symmetric sequence");
  int m = a.length() / 2;
  if (k < 1 || k >= m || k % 2 == 0)
    throw UnsupportedIndexError("acf_strong_high: lag " + std::to_string(k) +
                                " is not an odd lag in [1," + std::to_string(m - 1) + "]");
  int sum = pow_m1((k + 1) / 2);
  for (int j = 1; j <= (k - 1) / 2; ++j)
    sum += 2 * pow_m1(j) * a.entry(j) * a.entry(k + 1 - j);
  return sum;
}

bool half_reversal_relation_holds(const BinarySequence& a) {
  BinarySequence p = strong_symmetric_reverse(a);  // checks the precondition
  CorrelationProfile ca = acf_fast(a);
  CorrelationProfile cp = acf_fast(p);
  int n = a.length();
  for (int k = 1; k < n; ++k) {
    if (k % 2 == 0) {
      if (cp.at(k) != ca.at(k)) return false;
    } else {
      if (cp.at(k) != -ca.at(n - k)) return false;
    }
  }
  return true;
}

}  // namespace barker
