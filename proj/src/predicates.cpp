#include "barker/predicates.hpp"

#include <cmath>
#include <cstdlib>

#include "barker/correlation.hpp"
#include "barker/errors.hpp"

namespace barker {
namespace {

int pow_m1(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

std::optional<Violation> barker_violation(const BinarySequence& a) {
  int n = a.length();
  for (int k = 1; k < n; ++k) {
    int c = acf_lag_words(a.words(), n, k);
    if (c < -1 || c > 1) return Violation{"is_barker", k, 1, c};
  }
  return std::nullopt;
}

std::optional<Violation> skew_violation(const BinarySequence& a) {
  int n = a.length();  // caller guarantees odd n
  for (int j = 1; j <= n; ++j) {
    int expected = pow_m1((n + 1) / 2 + j);
    int actual = a.entry(j) * a.entry(n + 1 - j);
    if (actual != expected) return Violation{"is_skew_symmetric", j, expected, actual};
  }
  return std::nullopt;
}

std::optional<Violation> weak_violation(const BinarySequence& a) {
  int n = a.length();  // caller guarantees n % 4 == 0
  for (int j = 1; j < n / 2; j += 2) {
    int expected = -a.entry(n + 1 - j) * a.entry(n - j);
    int actual = a.entry(j) * a.entry(j + 1);
    if (actual != expected) return Violation{"is_weak_symmetric", j, expected, actual};
  }
  return std::nullopt;
}

std::optional<Violation> strong_violation(const BinarySequence& a) {
  int n = a.length();  // caller guarantees n % 4 == 0
  for (int j = 1; j <= n / 2; ++j) {
    int expected = pow_m1(j);
    int actual = a.delta(j);
    if (actual != expected) return Violation{"is_strong_symmetric", j, expected, actual};
  }
  return std::nullopt;
}

}  // namespace

bool is_barker(const BinarySequence& a) { return !barker_violation(a).has_value(); }

bool is_skew_symmetric(const BinarySequence& a) {
  if (a.length() % 2 == 0) return false;
  return !skew_violation(a).has_value();
}

bool is_weak_symmetric(const BinarySequence& a) {
  if (a.length() % 4 != 0) return false;
  return !weak_violation(a).has_value();
}

bool is_strong_symmetric(const BinarySequence& a) {
  if (a.length() % 4 != 0) return false;
  return !strong_violation(a).has_value();
}

EvenBarkerStructure barker_even_structure(const BinarySequence& a) {
  int n = a.length();
  if (n % 2 != 0 || n < 4 || !is_barker(a))
    throw PreconditionError("barker_even_structure requires a Barker sequence of even length >= 4");

  EvenBarkerStructure s;
  std::optional<Violation> first;
  auto note = [&first](std::optional<Violation> v) {
    if (v && !first) first = std::move(v);
  };

  auto weak = weak_violation(a);  // n is a multiple of 4 whenever checks below pass
  s.weak_symmetric = is_weak_symmetric(a);
  if (!s.weak_symmetric && n % 4 == 0) note(weak);

  CorrelationProfile c = acf_fast(a);
  s.even_lags_zero = true;
  for (int k = 2; k < n; k += 2) {
    if (c.at(k) != 0) {
      s.even_lags_zero = false;
      note(Violation{"even_lags_zero", k, 0, c.at(k)});
      break;
    }
  }
  s.odd_lags_match_mirror = true;
  for (int k = 1; k < n; k += 2) {
    int expected = -a.entry(k) * a.entry(n + 1 - k);
    if (c.at(k) != expected) {
      s.odd_lags_match_mirror = false;
      note(Violation{"odd_lags_match_mirror", k, expected, c.at(k)});
      break;
    }
  }
  int r = static_cast<int>(std::lround(std::sqrt(n / 4.0)));
  s.length_is_four_square = (4 * r * r == n);
  s.r = s.length_is_four_square ? r : 0;
  if (!s.length_is_four_square) note(Violation{"length_is_four_square", n, 0, n});
  s.antisymmetric = true;
  for (int k = 1; k < n; ++k) {
    if (c.at(k) != -c.at(n - k)) {
      s.antisymmetric = false;
      note(Violation{"antisymmetric", k, -c.at(n - k), c.at(k)});
      break;
    }
  }
  s.first_violation = first;
  return s;
}

OddBarkerStructure barker_odd_structure(const BinarySequence& a) {
  int n = a.length();
  if (n % 2 == 0 || !is_barker(a))
    throw PreconditionError("barker_odd_structure requires a Barker sequence of odd length");

  OddBarkerStructure s;
  std::optional<Violation> first;
  auto note = [&first](std::optional<Violation> v) {
    if (v && !first) first = std::move(v);
  };

  CorrelationProfile c = acf_fast(a);
  s.odd_lags_zero = true;
  for (int k = 1; k < n; k += 2) {
    if (c.at(k) != 0) {
      s.odd_lags_zero = false;
      note(Violation{"odd_lags_zero", k, 0, c.at(k)});
      break;
    }
  }
  int fixed = pow_m1((n - 1) / 2);
  s.even_lags_fixed = true;
  for (int k = 2; k < n; k += 2) {
    if (c.at(k) != fixed) {
      s.even_lags_fixed = false;
      note(Violation{"even_lags_fixed", k, fixed, c.at(k)});
      break;
    }
  }
  s.skew_symmetric = is_skew_symmetric(a);
  if (!s.skew_symmetric) note(skew_violation(a));
  s.first_violation = first;
  return s;
}

SymmetryReport symmetry_report(const BinarySequence& a) {
  int n = a.length();
  SymmetryReport r;
  std::optional<Violation> first;
  auto note = [&first](std::optional<Violation> v) {
    if (v && !first) first = std::move(v);
  };

  auto barker = barker_violation(a);
  r.is_barker = !barker.has_value();
  note(barker);

  if (n % 2 != 0) {
    auto skew = skew_violation(a);
    r.is_skew_symmetric = !skew.has_value();
    note(std::move(skew));
  }
  if (n % 4 == 0) {
    auto weak = weak_violation(a);
    r.is_weak_symmetric = !weak.has_value();
    note(std::move(weak));
    auto strong = strong_violation(a);
    r.is_strong_symmetric = !strong.has_value();
    note(std::move(strong));
  }
  if (r.is_barker && n % 2 == 0 && n >= 4) {
    EvenBarkerStructure s = barker_even_structure(a);
    r.barker_even_structure_ok = s.all_ok();
    note(s.first_violation);
  }
  r.first_violation = first;
  return r;
}

}  // namespace barker
