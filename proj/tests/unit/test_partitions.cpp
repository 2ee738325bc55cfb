#include "origami/partition.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using namespace origami;

TEST_SUITE("partitions") {
  TEST_CASE("construction validates shape") {
    CHECK(Partition{3, 1, 1}.size() == 5);
    CHECK(Partition{}.empty());
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::from_unsorted({3, -1}), std::invalid_argument);
    CHECK(Partition::from_unsorted({1, 3, 0, 2}) == Partition{3, 2, 1});
    CHECK_THROWS_AS(Partition::ones(kMaxPartitionSize + 1), std::invalid_argument);
  }

  TEST_CASE("enumeration is canonical and complete") {
    auto p4 = enumerate_partitions(4);
    std::vector<Partition> want{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    CHECK(p4 == want);
    CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
    for (int n = 0; n <= 25; ++n) {
      auto ps = enumerate_partitions(n);
      CHECK(Integer(static_cast<long>(ps.size())) == partition_count(n));
      std::set<Partition> unique(ps.begin(), ps.end());
      CHECK(unique.size() == ps.size());
      for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ReverseLex{}(ps[i - 1], ps[i]));
    }
    CHECK(partition_count(100) == Integer("190569292"));
  }

  TEST_CASE("conjugation, z and hooks") {
    CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
    for (const auto& l : enumerate_partitions(9)) CHECK(l.conjugate().conjugate() == l);
    CHECK(z_of({2, 2, 1}) == 8);
    CHECK(z_of(Partition::ones(4)) == 24);
    CHECK(z_of(double_parts({1, 1})) == 8);
    CHECK(hook_product({3, 1}) == 8);
    CHECK(hook_product({2, 2}) == 12);
    // Σ (n!/H_λ)² = n!
    for (int n = 1; n <= 8; ++n) {
      Integer nf = factorial(static_cast<unsigned>(n));
      Integer total = 0;
      for (const auto& l : enumerate_partitions(n)) {
        Integer d = nf / hook_product(l);
        total += d * d;
      }
      CHECK(total == nf);
    }
  }

  TEST_CASE("dominance") {
    CHECK(compare_dominance({2, 2}, {3, 1}) == Dominance::kLeq);
    CHECK(compare_dominance({3, 1}, {2, 2}) == Dominance::kGeq);
    CHECK(compare_dominance({3, 1, 1, 1}, {2, 2, 2}) == Dominance::kIncomparable);
    CHECK(compare_dominance({2, 1}, {2, 1}) == Dominance::kEqual);
    CHECK_FALSE(dominance_leq({2}, {2, 1}));
    CHECK(dominance_leq(Partition::ones(5), {5}));
  }

  TEST_CASE("text forms round trip") {
    CHECK(to_string(Partition{3, 1, 1}) == "[3,1,1]");
    CHECK(to_string(Partition{}) == "[]");
    CHECK(parse_partition("[3,1,1]") == Partition{3, 1, 1});
    CHECK(parse_partition(" [ 2 , 2 ] ") == Partition{2, 2});
    CHECK_THROWS_AS(parse_partition("[1,2]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,1"), std::invalid_argument);
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(to_string(parse_rational("4/2")) == "2");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  }
}
