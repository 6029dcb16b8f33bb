#include "doctest.h"

#include <vector>

#include "barker/errors.hpp"
#include "barker/correlation.hpp"
#include "barker/predicates.hpp"
#include "barker/sequence.hpp"
#include "support/oracles.hpp"

using barker::BinarySequence;

namespace {

std::vector<BinarySequence> brute_barker(int n) {
  std::vector<BinarySequence> out;
  for (std::uint64_t x : oracle::brute_force_barker_patterns(n))
    out.push_back(BinarySequence::from_bits(x, n));
  return out;
}

}  // namespace

TEST_SUITE("predicates") {

TEST_CASE("is_barker examples") {
  CHECK(barker::is_barker(BinarySequence::parse("+++-")));
  CHECK(barker::is_barker(BinarySequence::parse("+++++--++-+-+")));  // length 13
  CHECK_FALSE(barker::is_barker(BinarySequence::parse("++++")));
}

TEST_CASE("is_barker agrees with the brute-force oracle") {
  for (int n = 2; n <= 12; ++n)
    for (std::uint64_t x = 0; x < (1ull << n); ++x)
      REQUIRE(barker::is_barker(BinarySequence::from_bits(x, n)) ==
              oracle::naive_is_barker(oracle::pattern_entries(x, n)));
}

TEST_CASE("is_skew_symmetric examples") {
  CHECK(barker::is_skew_symmetric(BinarySequence::parse("++-")));
  CHECK_FALSE(barker::is_skew_symmetric(BinarySequence::parse("+++-")));  // even length
  CHECK_FALSE(barker::is_skew_symmetric(BinarySequence::parse("++")));
}

TEST_CASE("every odd-length Barker sequence is skew symmetric") {
  for (int n : {3, 5, 7, 9, 11, 13}) {
    for (const BinarySequence& a : brute_barker(n)) CHECK(barker::is_skew_symmetric(a));
  }
  CHECK(brute_barker(5).size() > 0);
  CHECK(brute_barker(9).empty());
}

TEST_CASE("is_weak_symmetric examples") {
  CHECK(barker::is_weak_symmetric(BinarySequence::parse("+++-")));
  CHECK_FALSE(barker::is_weak_symmetric(BinarySequence::parse("++-")));  // length gate
  CHECK_FALSE(barker::is_weak_symmetric(BinarySequence::parse("++++++")));
}

TEST_CASE("every even-length Barker sequence is weak symmetric") {
  for (int n = 4; n <= 16; n += 2)
    for (const BinarySequence& a : brute_barker(n)) CHECK(barker::is_weak_symmetric(a));
}

TEST_CASE("is_strong_symmetric examples") {
  CHECK(barker::is_strong_symmetric(BinarySequence::parse("+++-")));
  CHECK(barker::is_strong_symmetric(BinarySequence::parse("+++++-+-")));
  CHECK_FALSE(barker::is_strong_symmetric(BinarySequence::parse("++++")));
}

TEST_CASE("strong symmetry implies weak symmetry, exhaustively to n=16") {
  for (int n = 2; n <= 16; ++n)
    for (std::uint64_t x = 0; x < (1ull << n); ++x) {
      BinarySequence a = BinarySequence::from_bits(x, n);
      if (barker::is_strong_symmetric(a)) REQUIRE(barker::is_weak_symmetric(a));
    }
}

TEST_CASE("strong symmetry is weak symmetry plus -1 mirror products at odd indices") {
  for (int n = 4; n <= 16; n += 4)
    for (std::uint64_t x = 0; x < (1ull << n); ++x) {
      BinarySequence a = BinarySequence::from_bits(x, n);
      bool odd_mirrors_negative = true;
      for (int k = 1; k <= n / 2; k += 2)
        if (a.delta(k) != -1) odd_mirrors_negative = false;
      REQUIRE(barker::is_strong_symmetric(a) ==
              (barker::is_weak_symmetric(a) && odd_mirrors_negative));
    }
}

TEST_CASE("even-length Barker structure at n=4") {
  barker::EvenBarkerStructure s = barker::barker_even_structure(BinarySequence::parse("+++-"));
  CHECK(s.all_ok());
  CHECK(s.weak_symmetric);
  CHECK(s.even_lags_zero);
  CHECK(s.odd_lags_match_mirror);
  CHECK(s.length_is_four_square);
  CHECK(s.r == 1);
  CHECK(s.antisymmetric);
  CHECK_FALSE(s.first_violation.has_value());
}

TEST_CASE("every even-length Barker sequence found passes the structure checks") {
  for (int n = 4; n <= 16; n += 2)
    for (const BinarySequence& a : brute_barker(n))
      CHECK(barker::barker_even_structure(a).all_ok());
}

TEST_CASE("structure verifiers reject misuse") {
  CHECK_THROWS_AS(barker::barker_even_structure(BinarySequence::parse("++++")),
                  barker::PreconditionError);
  CHECK_THROWS_AS(barker::barker_even_structure(BinarySequence::parse("++")),
                  barker::PreconditionError);  // n >= 4
  CHECK_THROWS_AS(barker::barker_even_structure(BinarySequence::parse("++-")),
                  barker::PreconditionError);  // odd n
  CHECK_THROWS_AS(barker::barker_odd_structure(BinarySequence::parse("+++-")),
                  barker::PreconditionError);
}

TEST_CASE("odd-length Barker structure") {
  barker::OddBarkerStructure s = barker::barker_odd_structure(BinarySequence::parse("++-"));
  CHECK(s.all_ok());
  for (int n : {3, 5, 7, 11, 13}) {
    for (const BinarySequence& a : brute_barker(n)) {
      barker::OddBarkerStructure r = barker::barker_odd_structure(a);
      CHECK(r.all_ok());
      // even lags sit at the fixed sign
      int fixed = ((n - 1) / 2) % 2 == 0 ? 1 : -1;
      barker::CorrelationProfile c = barker::acf_fast(a);
      for (int k = 2; k < n; k += 2) CHECK(c.at(k) == fixed);
      for (int k = 1; k < n; k += 2) CHECK(c.at(k) == 0);
    }
  }
}

TEST_CASE("symmetry_report aggregates the classification") {
  barker::SymmetryReport r = barker::symmetry_report(BinarySequence::parse("+++-"));
  CHECK(r.is_barker);
  CHECK_FALSE(r.is_skew_symmetric);
  CHECK(r.is_weak_symmetric);
  CHECK(r.is_strong_symmetric);
  REQUIRE(r.barker_even_structure_ok.has_value());
  CHECK(*r.barker_even_structure_ok);
  CHECK_FALSE(r.first_violation.has_value());

  barker::SymmetryReport bad = barker::symmetry_report(BinarySequence::parse("++++"));
  CHECK_FALSE(bad.is_barker);
  CHECK_FALSE(bad.barker_even_structure_ok.has_value());
  REQUIRE(bad.first_violation.has_value());
  CHECK(bad.first_violation->property == "is_barker");
  CHECK(bad.first_violation->index == 1);
  CHECK(bad.first_violation->actual == 3);

  barker::SymmetryReport two = barker::symmetry_report(BinarySequence::parse("++"));
  CHECK(two.is_barker);
  CHECK_FALSE(two.barker_even_structure_ok.has_value());  // needs n >= 4
}

TEST_CASE("first_violation reports the smallest failing index") {
  // ++++ is weak symmetric at j=1 only when a1 a2 == -a4 a3; here both are +1.
  barker::SymmetryReport r = barker::symmetry_report(BinarySequence::parse("++++"));
  REQUIRE(r.first_violation.has_value());
  // is_barker is scanned first and fails at lag 1; the weak scan fails at j=1 too.
  CHECK(r.first_violation->index == 1);
  for (int n : {4, 8}) {
    for (std::uint64_t x = 0; x < (1ull << n); ++x) {
      barker::SymmetryReport rep = barker::symmetry_report(BinarySequence::from_bits(x, n));
      if (rep.is_strong_symmetric) CHECK(rep.is_weak_symmetric);
    }
  }
}

}  // TEST_SUITE
