#pragma once

#include "origami/partition.hpp"
#include "origami/rational.hpp"

#include <cstddef>
#include <map>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

namespace origami {

/// Memoized Murnaghan–Nakayama evaluation of irreducible characters of S_n.
///
/// Entries are keyed on (shape, class) where the class is what remains of μ
/// after its largest parts have been stripped as rim hooks, so sub-results are
/// shared across the whole table. Lookups take a shared lock; inserts take a
/// unique lock. Recursion happens without holding any lock.
class CharacterTable {
 public:
  CharacterTable() = default;
  CharacterTable(const CharacterTable&) = delete;
  CharacterTable& operator=(const CharacterTable&) = delete;

  /// χ^λ(μ). Throws std::invalid_argument if |λ| ≠ |μ|.
  Integer character(const Partition& lambda, const Partition& mu);
  /// χ^λ(1) = number of standard Young tableaux.
  Integer dimension(const Partition& lambda);

  std::size_t cached_entries() const;
  void clear();

  /// Snapshot of all memo entries, for persistence.
  std::vector<std::pair<std::pair<Partition, Partition>, Integer>> entries() const;
  void insert(const Partition& lambda, const Partition& mu, const Integer& value);

  /// Process-wide instance used by the free functions below.
  static CharacterTable& shared();

 private:
  Integer evaluate(const Partition& lambda, const Partition& mu);

  mutable std::shared_mutex mutex_;
  std::map<std::pair<Partition, Partition>, Integer> memo_;
};

Integer character(const Partition& lambda, const Partition& mu);

/// |C_μ| = n!/z_μ.
Integer class_size(const Partition& mu);

enum class ShiftVariant { kComplex, kReal };

/// P_ℓ(λ) = Σ (λ_i − i + ½)^ℓ − (−i + ½)^ℓ  (complex shift), or
/// R_ℓ(λ) = Σ (λ_i − i/2)^ℓ − (−i/2)^ℓ     (real shift).
/// Terms with i > ℓ(λ) vanish, so the sum is finite.
Rational shifted_power_sum(const Partition& lambda, int ell, ShiftVariant variant);

/// ν(λ) = ½ P_2(λ), the content sum.
Rational nu(const Partition& lambda);
/// ν_R(λ) = R_2(λ).
Rational nu_real(const Partition& lambda);

/// f_μ(λ) = |C_μ| χ^λ(μ) / χ^λ(1).
Rational central_character(const Partition& mu, const Partition& lambda);

/// Rows λ, columns μ, both in canonical (reverse-lex) order.
std::string character_table_csv(int n);

}  // namespace origami
