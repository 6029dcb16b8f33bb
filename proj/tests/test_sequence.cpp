#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "barker/errors.hpp"
#include "barker/predicates.hpp"
#include "barker/sequence.hpp"
#include "barker/verify.hpp"
#include "support/oracles.hpp"

using barker::BinarySequence;

TEST_SUITE("sequence") {

TEST_CASE("parse accepts +- strings and comma lists") {
  CHECK(oracle::unpack(BinarySequence::parse("+++-")) == std::vector<int>{1, 1, 1, -1});
  CHECK(oracle::unpack(BinarySequence::parse("1,-1")) == std::vector<int>{1, -1});
  CHECK(oracle::unpack(BinarySequence::parse(" ++ ")) == std::vector<int>{1, 1});
  CHECK(oracle::unpack(BinarySequence::parse("1, -1, 1")) == std::vector<int>{1, -1, 1});
}

TEST_CASE("parse reports the offending position") {
  try {
    BinarySequence::parse("+0+-");
    FAIL("expected ParseError");
  } catch (const barker::ParseError& e) {
    CHECK(e.position() == 2);
  }
  try {
    BinarySequence::parse("1,2,-1");
    FAIL("expected ParseError");
  } catch (const barker::ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("parse rejects empty and too-short input") {
  CHECK_THROWS_AS(BinarySequence::parse(""), barker::ParseError);
  CHECK_THROWS_AS(BinarySequence::parse("   "), barker::ParseError);
  CHECK_THROWS_AS(BinarySequence::parse("+"), barker::ParseError);
  CHECK_THROWS_AS(BinarySequence::parse("1,"), barker::ParseError);
  CHECK_THROWS_AS(BinarySequence::parse(std::string(1025, '+')), barker::ParseError);
  CHECK_NOTHROW(BinarySequence::parse(std::string(1024, '+')));
}

TEST_CASE("entry is 1-based and range checked") {
  BinarySequence a = BinarySequence::from_entries({1, 1, 1, -1});
  CHECK(a.entry(4) == -1);
  CHECK(a.entry(1) == 1);
  BinarySequence b = BinarySequence::from_entries({1, -1});
  CHECK(b.entry(1) == 1);
  CHECK_THROWS_AS(b.entry(3), std::out_of_range);
  CHECK_THROWS_AS(b.entry(0), std::out_of_range);
}

TEST_CASE("from_entries validates values") {
  std::vector<int> bad{1, 0, 1};
  CHECK_THROWS_AS(BinarySequence::from_entries(bad), barker::PreconditionError);
}

TEST_CASE("raw constructors validate their bounds") {
  CHECK_THROWS_AS(BinarySequence::from_bits(0, 65), barker::PreconditionError);
  CHECK_THROWS_AS(BinarySequence::from_bits(0, 0), barker::PreconditionError);
  std::vector<std::uint64_t> one_word{~0ull};
  CHECK_THROWS_AS(BinarySequence::from_words(one_word, 100), barker::PreconditionError);
  CHECK(BinarySequence::from_words(one_word, 64).length() == 64);
}

TEST_CASE("negate, reverse, alternate match their definitions") {
  BinarySequence a = BinarySequence::from_entries({1, 1, -1});
  CHECK(oracle::unpack(a.negate()) == std::vector<int>{-1, -1, 1});
  CHECK(oracle::unpack(a.reverse()) == std::vector<int>{-1, 1, 1});
  CHECK(oracle::unpack(BinarySequence::from_entries({1, 1, 1, -1}).alternate()) ==
        std::vector<int>{-1, 1, -1, -1});
  CHECK(oracle::unpack(BinarySequence::from_entries({1, 1}).alternate()) ==
        std::vector<int>{-1, 1});
}

TEST_CASE("transforms are involutions") {
  for (int n : {2, 3, 5, 17, 63, 64, 65, 200, 1024}) {
    for (std::uint64_t trial = 0; trial < 8; ++trial) {
      BinarySequence a = barker::random_sequence(7, n, trial);
      CHECK(a.negate().negate() == a);
      CHECK(a.reverse().reverse() == a);
      CHECK(a.alternate().alternate() == a);
    }
  }
}

TEST_CASE("delta is the mirror product and is mirror symmetric") {
  BinarySequence a = BinarySequence::from_entries({1, 1, 1, -1});
  CHECK(a.delta(1) == -1);
  CHECK(a.delta(4) == -1);
  CHECK(a.delta(2) == 1);
  for (int n : {2, 3, 8, 13, 64, 65}) {
    for (std::uint64_t trial = 0; trial < 4; ++trial) {
      BinarySequence s = barker::random_sequence(11, n, trial);
      for (int k = 1; k <= n; ++k) CHECK(s.delta(k) == s.delta(n + 1 - k));
    }
  }
}

TEST_CASE("first_half takes the prefix and requires even length") {
  CHECK(oracle::unpack(BinarySequence::from_entries({1, 1, 1, -1}).first_half()) ==
        std::vector<int>{1, 1});
  CHECK(oracle::unpack(BinarySequence::from_entries({1, -1}).first_half()) ==
        std::vector<int>{1});
  CHECK_THROWS_AS(BinarySequence::from_entries({1, 1, -1}).first_half(),
                  barker::PreconditionError);
}

TEST_CASE("extend_strong_symmetric forces the second half") {
  CHECK(oracle::unpack(barker::extend_strong_symmetric(BinarySequence::from_entries({1, 1}))) ==
        std::vector<int>{1, 1, 1, -1});
  CHECK(oracle::unpack(barker::extend_strong_symmetric(
            BinarySequence::from_entries({1, 1, 1, 1}))) ==
        std::vector<int>{1, 1, 1, 1, 1, -1, 1, -1});
  CHECK_THROWS_AS(barker::extend_strong_symmetric(BinarySequence::from_entries({1, 1, -1})),
                  barker::PreconditionError);
  CHECK_THROWS_AS(barker::extend_strong_symmetric(BinarySequence::from_entries({1})),
                  barker::PreconditionError);
}

TEST_CASE("every extension is strong symmetric and splits back to its half") {
  for (int m : {2, 4, 6}) {
    for (std::uint64_t x = 0; x < (1ull << m); ++x) {
      BinarySequence half = BinarySequence::from_bits(x, m);
      BinarySequence full = barker::extend_strong_symmetric(half);
      CHECK(barker::is_strong_symmetric(full));
      CHECK(full.first_half() == half);
      CHECK(barker::extend_strong_symmetric(full.first_half()) == full);
    }
  }
}

TEST_CASE("strong_symmetric_reverse reverses the half and is an involution") {
  BinarySequence a = BinarySequence::from_entries({1, 1, 1, -1});
  CHECK(barker::strong_symmetric_reverse(a) == a);  // palindromic half
  BinarySequence b = barker::extend_strong_symmetric(BinarySequence::from_entries({1, 1, 1, 1}));
  CHECK(barker::strong_symmetric_reverse(b) == b);
  for (std::uint64_t x = 0; x < (1ull << 6); ++x) {
    BinarySequence s =
        barker::extend_strong_symmetric(BinarySequence::from_bits(x, 6));
    CHECK(barker::strong_symmetric_reverse(barker::strong_symmetric_reverse(s)) == s);
  }
  CHECK_THROWS_AS(barker::strong_symmetric_reverse(BinarySequence::from_entries({1, 1, 1, 1})),
                  barker::PreconditionError);
}

TEST_CASE("packing round-trips across word boundaries") {
  for (int n : {1, 2, 3, 31, 32, 33, 63, 64, 65, 127, 128, 129, 511, 512, 513, 1023, 1024}) {
    for (std::uint64_t trial = 0; trial < 4; ++trial) {
      BinarySequence a = barker::random_sequence(23, n, trial);
      std::vector<int> entries = oracle::unpack(a);
      CHECK(BinarySequence::from_entries(entries) == a);
      if (n >= 2) {
        CHECK(BinarySequence::parse(a.to_string()) == a);
        CHECK(BinarySequence::parse(a.to_csv()) == a);
      }
      // unused high bits stay zero
      int tail_bits = n - 64 * (static_cast<int>(a.word_count()) - 1);
      if (tail_bits < 64)
        CHECK((a.words().back() >> tail_bits) == 0);
    }
  }
}

TEST_CASE("pattern ordering matches unsigned integer order") {
  std::vector<BinarySequence> seqs;
  for (std::uint64_t x = 0; x < 32; ++x) seqs.push_back(BinarySequence::from_bits(x, 5));
  for (std::size_t i = 1; i < seqs.size(); ++i) CHECK(seqs[i - 1] < seqs[i]);
}

TEST_CASE("rendering is canonical") {
  BinarySequence a = BinarySequence::parse("+++-");
  CHECK(a.to_string() == "+++-");
  CHECK(a.to_csv() == "1,1,1,-1");
}

}  // TEST_SUITE
