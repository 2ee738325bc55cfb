#include "origami/origami_series.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace origami;

namespace {
Partition hook(int head, int n) {
  std::vector<int> parts{head};
  for (int i = head; i < n; ++i) parts.push_back(1);
  return Partition(std::move(parts));
}
}  // namespace

TEST_SUITE("origami_series") {
  TEST_CASE("complex layers") {
    CHECK(complex_series(2, false).layer(2) == SymFunc::single(Basis::kPower, {1, 1}, 2));
    auto q = complex_series(8, true);
    CHECK(q.layer(3) == SymFunc::single(Basis::kPower, {1, 1, 1}, Rational(4, 3)) + SymFunc::single(Basis::kPower, {3}, 3));
    CHECK(q.layer(8).coefficient({2, 2, 1, 1, 1, 1}) == 345);
    CHECK_THROWS_AS(complex_series(0, true), std::invalid_argument);
  }

  TEST_CASE("real layers") {
    CHECK(real_series(2, false).layer(2) ==
          SymFunc::single(Basis::kPower, {1, 1}, 2) + SymFunc::single(Basis::kPower, {2}));
    auto p = real_series(4, true);
    CHECK(p.layer(2) == SymFunc::single(Basis::kPower, {1, 1}, Rational(3, 2)) + SymFunc::single(Basis::kPower, {2}));
    CHECK(p.layer(4).coefficient({4}) == 36);
  }

  TEST_CASE("integrality and parity") {
    auto qd = complex_series(10, false);
    auto pd = real_series(10, false);
    for (int n = 1; n <= 10; ++n) {
      const Rational nf(factorial(static_cast<unsigned>(n)));
      const Rational hn = nf * Rational(Integer(1) << static_cast<mp_bitcnt_t>(n));
      for (const auto& l : enumerate_partitions(n)) {
        Rational qc = qd.layer(n).coefficient(l) * nf;
        Rational pc = pd.layer(n).coefficient(l) * hn;
        CHECK(is_integer(qc));
        CHECK(qc >= 0);
        CHECK(is_integer(pc));
        CHECK(pc >= 0);
        // Commutators in S_n are even, so odd n − ℓ never occurs.
        if ((n - l.length()) % 2 != 0) CHECK(qc == 0);
      }
    }
  }

  TEST_CASE("jack series specialize") {
    CHECK(jack_series(6, 1, true) == complex_series(6, true));
    CHECK(jack_series(6, 2, false) == real_series(6, false));
    CHECK(jack_series(1, Rational(1, 2), false).layer(1) == SymFunc::single(Basis::kPower, {1}));
    CHECK_THROWS_AS(jack_series(3, 0, false), std::invalid_argument);
  }

  TEST_CASE("genus table") {
    auto row5 = genus_table(5);
    CHECK(row5.size() == 3);
    CHECK(row5.at(1) == Rational(6, 5));
    CHECK(row5.at(2) == 51);
    CHECK(row5.at(3) == 40);
    auto q = complex_series(9, true);
    CHECK(genus_table(q, 9).at(4) == 204813);
    CHECK_THROWS_AS(genus_table(q, 10), std::invalid_argument);
  }

  TEST_CASE("strata") {
    CHECK(real_stratum_coefficient(3, {3}) == 8);
    CHECK(real_stratum_coefficient(4, {2, 1, 1}) == 7);
    CHECK(real_stratum_coefficient(2, {1, 1}) == Rational(3, 2));
    CHECK_THROWS_AS(real_stratum_coefficient(3, {2}), std::invalid_argument);
    CHECK(n_real_h11(1) == 0);
    CHECK(n_real_h11(4) == 7);
    CHECK(n_real_h11(6) == 19);
    CHECK_THROWS_AS(n_real_h11(0), std::invalid_argument);
    auto p = real_series(8, true);
    auto h22 = real_h22_series(8);
    CHECK(h22[2] == 0);
    CHECK(h22[3] == 8);
    CHECK(h22[4] == 26);
    for (int n = 2; n <= 8; ++n) CHECK(p.layer(n).coefficient(hook(2, n)) == n_real_h11(n));
    for (int n = 3; n <= 8; ++n) CHECK(p.layer(n).coefficient(hook(3, n)) == h22[n]);
  }
}
