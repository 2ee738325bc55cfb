#pragma once

#include "origami/rational.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace origami {

/// Largest partition size any routine in this library accepts.
inline constexpr int kMaxPartitionSize = 64;

/// A weakly decreasing sequence of positive integers. The empty partition is
/// a regular value (the unique partition of 0).
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// Sorts and drops zero parts before validating; throws on negative parts.
  static Partition from_unsorted(std::vector<int> parts);
  static Partition ones(int n);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Multiplicity of the part value k.
  int multiplicity(int k) const;

  Partition conjugate() const;
  Partition doubled() const;
  /// Multiset union, resorted. This is the product rule for p_λ p_μ.
  Partition joined(const Partition& other) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on parts; the canonical (reverse-lex) order is the
  /// descending direction of this comparison.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Canonical map order: [4] < [3,1] < [2,2] < [2,1,1] < [1,1,1,1].
struct ReverseLex {
  bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

std::vector<Partition> enumerate_partitions(int n);
/// Number of partitions of n, by the pentagonal-number recurrence.
Integer partition_count(int n);

Integer z_of(const Partition& lambda);
Partition double_parts(const Partition& lambda);
Integer hook_product(const Partition& lambda);

enum class Dominance { kLeq, kGeq, kEqual, kIncomparable };

/// Standard dominance comparison of two partitions of equal size.
/// Partitions of different sizes compare as kIncomparable.
Dominance compare_dominance(const Partition& lambda, const Partition& mu);
/// λ ⊴ μ in the standard convention; false for different sizes.
bool dominance_leq(const Partition& lambda, const Partition& mu);

/// "[3,1,1]"; the empty partition is "[]".
std::string to_string(const Partition& lambda);
/// Parses the JSON-array form; throws std::invalid_argument.
Partition parse_partition(const std::string& text);

}  // namespace origami

template <>
struct std::hash<origami::Partition> {
  std::size_t operator()(const origami::Partition& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : p.parts()) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};
