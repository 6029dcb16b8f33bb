#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

namespace barker {

/// A sequence over {-1,+1}, bit-packed one entry per bit.
///
/// Entries use 1-based logical indexing: entry j lives in bit j-1 of the
/// word array, with +1 <-> bit 1 and -1 <-> bit 0. Unused high bits are
/// always zero. Values are immutable after construction and freely shareable
/// between threads.
///
/// Normal sequences have length >= 2; length 1 is tolerated so that
/// first_half() of a length-2 sequence is representable.
class BinarySequence {
 public:
  static constexpr int kMaxLength = 1024;
  static constexpr int kWordCount = kMaxLength / 64;

  BinarySequence() = default;  // zero-length placeholder, not usable

  static BinarySequence from_entries(std::span<const int> entries);
  static BinarySequence from_entries(std::initializer_list<int> entries);
  /// Low n bits of `bits` in pattern order (bit j-1 = entry j); n <= 64.
  static BinarySequence from_bits(std::uint64_t bits, int n);
  static BinarySequence from_words(std::span<const std::uint64_t> words, int n);

  /// Accepts "+-" strings ("+++-") or comma-separated 1/-1 lists ("1,-1").
  /// A comma anywhere selects the list form. Throws ParseError naming the
  /// offending position for bad symbols; rejects lengths outside [2,1024].
  static BinarySequence parse(std::string_view text);

  int length() const { return n_; }
  bool empty() const { return n_ == 0; }

  /// Entry a_j for 1 <= j <= n; throws std::out_of_range otherwise.
  int entry(int j) const;

  /// Product of an entry with its mirror: entry(k) * entry(n+1-k).
  int delta(int k) const;

  BinarySequence negate() const;
  BinarySequence reverse() const;
  /// Entry j scaled by -1 when j is odd: (-1)^j * a_j.
  BinarySequence alternate() const;
  /// The length-n/2 prefix; requires even length.
  BinarySequence first_half() const;

  std::string to_string() const;  // canonical "+-" rendering
  std::string to_csv() const;     // "1,-1,..."

  std::span<const std::uint64_t> words() const;
  std::size_t word_count() const { return static_cast<std::size_t>((n_ + 63) / 64); }

  bool operator==(const BinarySequence& other) const = default;
  /// Orders by length, then by bit pattern as an unsigned integer.
  std::strong_ordering operator<=>(const BinarySequence& other) const;

 private:
  int n_ = 0;
  std::array<std::uint64_t, kWordCount> words_{};
};

/// Doubles a half of even length m into the length-2m sequence whose second
/// half is forced by entry(n+1-j) = (-1)^j * entry(j); the result is always
/// strong symmetric. Requires m even and >= 2.
BinarySequence extend_strong_symmetric(const BinarySequence& half);

/// The strong symmetric sequence whose first half is the reversed first half
/// of `a`. Requires is_strong_symmetric(a); an involution on that domain.
BinarySequence strong_symmetric_reverse(const BinarySequence& a);

}  // namespace barker
