#include "origami/jack.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace origami;

TEST_SUITE("jack") {
  TEST_CASE("degree two closed forms") {
    // J_[2] = (1+α) m_2 + 2 m_11, J_[1,1] = 2 m_11
    for (Rational alpha : {Rational(1, 2), Rational(1), Rational(2), Rational(7, 3)}) {
      auto j2 = jack({2}, alpha).expansion_m;
      CHECK(j2.coefficient({2}) == 1 + alpha);
      CHECK(j2.coefficient({1, 1}) == 2);
      auto j11 = jack({1, 1}, alpha).expansion_m;
      CHECK(j11.coefficient({2}) == 0);
      CHECK(j11.coefficient({1, 1}) == 2);
    }
  }

  TEST_CASE("normalization, triangularity and orthogonality") {
    for (Rational alpha : {Rational(1, 3), Rational(2), Rational(5)}) {
      for (int n = 1; n <= 6; ++n) {
        auto family = jack_family(n, alpha);
        for (const auto& j : *family) {
          CHECK(j.expansion_m.coefficient(Partition::ones(n)) == factorial(static_cast<unsigned>(n)));
          for (const auto& [mu, c] : j.expansion_m.terms()) CHECK(dominance_leq(mu, j.index));
          CHECK(convert(j.expansion_m, Basis::kPower) == j.expansion_p);
        }
        for (const auto& a : *family) {
          for (const auto& b : *family) {
            if (a.index == b.index) continue;
            CHECK(hall_inner(a.expansion_p, b.expansion_p, alpha) == 0);
          }
        }
      }
    }
  }

  TEST_CASE("alpha = 1 gives hook-weighted Schur functions") {
    for (int n = 1; n <= 7; ++n) {
      for (const auto& l : enumerate_partitions(n)) {
        SymFunc s = convert(SymFunc::single(Basis::kSchur, l, Rational(hook_product(l))), Basis::kPower);
        CHECK(jack(l, 1).expansion_p == s);
      }
    }
  }

  TEST_CASE("zonal polynomials") {
    // Z_[2] = p_1² + 2 p_2, Z_[1,1] = p_1² − p_2
    CHECK(zonal({2}) == SymFunc::single(Basis::kPower, {1, 1}) + SymFunc::single(Basis::kPower, {2}, 2));
    CHECK(zonal({1, 1}) == SymFunc::single(Basis::kPower, {1, 1}) - SymFunc::single(Basis::kPower, {2}));
    for (int n = 1; n <= 6; ++n) {
      for (const auto& rho : enumerate_partitions(n)) {
        CHECK(zonal_spherical(rho, Partition::ones(n)) == 1);
      }
    }
    CHECK(zonal_spherical({1, 1}, {2}) == Rational(-1, 2));
    CHECK_THROWS_AS(zonal_spherical({2}, {1}), std::invalid_argument);
  }

  TEST_CASE("symbolic coefficients") {
    auto sym = jack_symbolic({2});
    CHECK(sym.at({2}) == std::vector<Rational>{1, 1});
    CHECK(sym.at({1, 1}) == std::vector<Rational>{2});
    auto sym3 = jack_symbolic({3});
    // J_[3] = (1+α)(1+2α) m_3 + 3(1+α) m_21 + 6 m_111
    CHECK(sym3.at({3}) == std::vector<Rational>{1, 3, 2});
    CHECK(sym3.at({2, 1}) == std::vector<Rational>{3, 3});
    CHECK(sym3.at({1, 1, 1}) == std::vector<Rational>{6});
  }

  TEST_CASE("errors and cache") {
    CHECK_THROWS_AS(jack_family(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(jack_family(3, -1), std::invalid_argument);
    auto a = jack_family(5, Rational(3, 2));
    auto b = jack_family(5, Rational(6, 4));
    CHECK(a.get() == b.get());
    clear_jack_cache();
    CHECK(jack_family(5, Rational(3, 2)).get() != a.get());
    CHECK(jack_family(5, Rational(3, 2))->front().expansion_m == a->front().expansion_m);
  }
}
