#include "barker/sequence.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "barker/errors.hpp"
#include "barker/predicates.hpp"

namespace barker {
namespace {

constexpr std::uint64_t kAlternateMask = 0x5555555555555555ull;  // bits 0,2,4,...

std::uint64_t tail_mask(int bits) {
  return bits >= 64 ? ~0ull : ((1ull << bits) - 1);
}

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

void check_length(int n, int min_len) {
  if (n < min_len || n > BinarySequence::kMaxLength)
    throw PreconditionError("sequence length " + std::to_string(n) + " outside [" +
                            std::to_string(min_len) + "," +
                            std::to_string(BinarySequence::kMaxLength) + "]");
}

}  // namespace

BinarySequence BinarySequence::from_entries(std::span<const int> entries) {
  check_length(static_cast<int>(entries.size()), 1);
  BinarySequence s;
  s.n_ = static_cast<int>(entries.size());
  for (int j = 1; j <= s.n_; ++j) {
    int v = entries[static_cast<std::size_t>(j - 1)];
    if (v != 1 && v != -1)
      throw PreconditionError("entry " + std::to_string(j) + " is " + std::to_string(v) +
                              ", expected -1 or +1");
    if (v == 1) s.words_[static_cast<std::size_t>((j - 1) / 64)] |= 1ull << ((j - 1) % 64);
  }
  return s;
}

BinarySequence BinarySequence::from_entries(std::initializer_list<int> entries) {
  return from_entries(std::span<const int>(entries.begin(), entries.size()));
}

BinarySequence BinarySequence::from_bits(std::uint64_t bits, int n) {
  check_length(n, 1);
  if (n > 64) throw PreconditionError("from_bits supports n <= 64");
  BinarySequence s;
  s.n_ = n;
  s.words_[0] = bits & tail_mask(n);
  return s;
}

BinarySequence BinarySequence::from_words(std::span<const std::uint64_t> words, int n) {
  check_length(n, 1);
  std::size_t needed = static_cast<std::size_t>((n + 63) / 64);
  if (words.size() < needed) throw PreconditionError("word span too short for length");
  BinarySequence s;
  s.n_ = n;
  std::copy_n(words.begin(), needed, s.words_.begin());
  s.words_[needed - 1] &= tail_mask(n - static_cast<int>(64 * (needed - 1)));
  return s;
}

BinarySequence BinarySequence::parse(std::string_view text) {
  std::string_view body = trim(text);
  if (body.empty()) throw ParseError("empty sequence text", 0);

  std::vector<int> entries;
  if (body.find(',') != std::string_view::npos) {
    std::size_t token_index = 0;
    std::size_t start = 0;
    while (start <= body.size()) {
      ++token_index;
      std::size_t comma = body.find(',', start);
      std::string_view tok =
          trim(body.substr(start, comma == std::string_view::npos ? comma : comma - start));
      if (tok == "1")
        entries.push_back(1);
      else if (tok == "-1")
        entries.push_back(-1);
      else
        throw ParseError("invalid token '" + std::string(tok) + "' at position " +
                             std::to_string(token_index) + " (expected 1 or -1)",
                         token_index);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    for (std::size_t i = 0; i < body.size(); ++i) {
      char c = body[i];
      if (c == '+')
        entries.push_back(1);
      else if (c == '-')
        entries.push_back(-1);
      else
        throw ParseError(std::string("invalid symbol '") + c + "' at position " +
                             std::to_string(i + 1) + " (expected + or -)",
                         i + 1);
    }
  }

  if (entries.size() < 2)
    throw ParseError("sequence must have at least 2 entries, got " +
                         std::to_string(entries.size()),
                     0);
  if (entries.size() > static_cast<std::size_t>(kMaxLength))
    throw ParseError("sequence longer than the supported maximum of " +
                         std::to_string(kMaxLength),
                     0);
  return from_entries(entries);
}

int BinarySequence::entry(int j) const {
  if (j < 1 || j > n_)
    throw std::out_of_range("index " + std::to_string(j) + " outside [1," +
                            std::to_string(n_) + "]");
  std::uint64_t bit = (words_[static_cast<std::size_t>((j - 1) / 64)] >> ((j - 1) % 64)) & 1u;
  return bit ? 1 : -1;
}

int BinarySequence::delta(int k) const { return entry(k) * entry(n_ + 1 - k); }

BinarySequence BinarySequence::negate() const {
  BinarySequence s = *this;
  for (std::size_t w = 0; w < word_count(); ++w) s.words_[w] = ~s.words_[w];
  int tail = n_ - static_cast<int>(64 * (word_count() - 1));
  s.words_[word_count() - 1] &= tail_mask(tail);
  return s;
}

BinarySequence BinarySequence::reverse() const {
  BinarySequence s;
  s.n_ = n_;
  for (int j = 1; j <= n_; ++j) {
    if (entry(j) == 1) {
      int pos = n_ - j;  // 0-based position of the mirrored entry
      s.words_[static_cast<std::size_t>(pos / 64)] |= 1ull << (pos % 64);
    }
  }
  return s;
}

BinarySequence BinarySequence::alternate() const {
  BinarySequence s = *this;
  for (std::size_t w = 0; w < word_count(); ++w) s.words_[w] ^= kAlternateMask;
  int tail = n_ - static_cast<int>(64 * (word_count() - 1));
  s.words_[word_count() - 1] &= tail_mask(tail);
  return s;
}

BinarySequence BinarySequence::first_half() const {
  if (n_ % 2 != 0) throw PreconditionError("first_half requires even length, got " +
                                           std::to_string(n_));
  std::array<std::uint64_t, kWordCount> copy = words_;
  return from_words(std::span<const std::uint64_t>(copy.data(), copy.size()), n_ / 2);
}

std::string BinarySequence::to_string() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(n_));
  for (int j = 1; j <= n_; ++j) out.push_back(entry(j) == 1 ? '+' : '-');
  return out;
}

std::string BinarySequence::to_csv() const {
  std::string out;
  for (int j = 1; j <= n_; ++j) {
    if (j > 1) out.push_back(',');
    out += entry(j) == 1 ? "1" : "-1";
  }
  return out;
}

std::span<const std::uint64_t> BinarySequence::words() const {
  return {words_.data(), word_count()};
}

std::strong_ordering BinarySequence::operator<=>(const BinarySequence& other) const {
  if (auto c = n_ <=> other.n_; c != 0) return c;
  for (std::size_t w = word_count(); w-- > 0;) {
    if (auto c = words_[w] <=> other.words_[w]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

BinarySequence extend_strong_symmetric(const BinarySequence& half) {
  int m = half.length();
  if (m < 2 || m % 2 != 0)
    throw PreconditionError("extend_strong_symmetric requires an even half length >= 2, got " +
                            std::to_string(m));
  if (2 * m > BinarySequence::kMaxLength)
    throw PreconditionError("extended length " + std::to_string(2 * m) +
                            " exceeds the maximum");
  int n = 2 * m;
  std::vector<int> entries(static_cast<std::size_t>(n));
  for (int j = 1; j <= m; ++j) {
    int v = half.entry(j);
    entries[static_cast<std::size_t>(j - 1)] = v;
    entries[static_cast<std::size_t>(n - j)] = (j % 2 != 0 ? -v : v);  // entry n+1-j
  }
  return BinarySequence::from_entries(entries);
}

BinarySequence strong_symmetric_reverse(const BinarySequence& a) {
  if (!is_strong_symmetric(a))
    throw PreconditionError("strong_symmetric_reverse requires a strong symmetric sequence");
  return extend_strong_symmetric(a.first_half().reverse());
}

}  // namespace barker
