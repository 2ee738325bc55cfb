#pragma once

#include "origami/partition.hpp"
#include "origami/rational.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace origami {

// Brute-force ground truth by exhaustive enumeration.
//
// Composition: (a * b)(x) = a(b(x)), i.e. b is applied first.
// Ground set for the real/mirror flavors: k ↦ 2k−2 and k̄ ↦ 2k−1, so τ swaps
// x and x ^ 1.

class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `images` is a bijection of 0..m−1.
  explicit Permutation(std::vector<std::uint8_t> images);
  static Permutation identity(int size);
  /// Builds from disjoint cycles on 0..size−1.
  static Permutation from_cycles(int size, const std::vector<std::vector<int>>& cycles);
  /// τ = (0 1)(2 3)…(2n−2 2n−1).
  static Permutation tau(int n);
  static Permutation transposition(int size, int a, int b);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<std::uint8_t>& images() const { return images_; }

  Permutation inverse() const;
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<std::uint8_t> images_;
};

/// A fixed-point-free involution stored as its partner array.
struct Matching {
  std::vector<int> partner;

  /// Throws std::invalid_argument unless this is a perfect matching.
  void validate() const;
  Permutation as_permutation() const;
  static Matching from_permutation(const Permutation& p);
};

using Transposition = std::pair<int, int>;

Partition cycle_type(const Permutation& p);
/// a b a⁻¹ b⁻¹; throws on size mismatch.
Permutation commutator(const Permutation& a, const Permutation& b);
/// Halves a cycle type of the form [λ₁,λ₁,λ₂,λ₂,…]; throws std::logic_error otherwise.
Partition half_type(const Partition& doubled);
/// Whether the group generated by `gens` acts transitively on all points.
bool is_transitive(const std::vector<const Permutation*>& gens);

/// Ordered product t₁ t₂ … t_k on `size` points.
Permutation product(int size, const std::vector<Transposition>& ts);

std::vector<Permutation> all_permutations(int size);

/// The centralizer of τ in S_{2n}, built directly. n ≤ 6.
std::vector<Permutation> enumerate_hyperoctahedral(int n);
/// {σ : στ = τσ} for an arbitrary fixed-point-free involution, by filtering S_{2n}. 2n ≤ 8.
std::vector<Permutation> centralizer_by_filter(const Permutation& tau);

/// σ with τσ = σ⁻¹τ and no τ-self-symmetric cycle, bucketed by half cycle type. n ≤ 6.
std::map<Partition, std::vector<Permutation>, ReverseLex> enumerate_b_tilde(int n);
std::map<Partition, std::vector<Permutation>, ReverseLex> enumerate_b_tilde(const Permutation& tau);

std::vector<Matching> all_matchings(int points);

/// (v, h) ∈ B^~ × H_n bucketed by the half type of [h, v], divided by 2ⁿn!. n ≤ 5.
std::map<Partition, Rational, ReverseLex> oracle_real_counts(int n, bool require_connected);
/// Same count for an arbitrary fixed-point-free τ, returned undivided. 2n ≤ 8.
std::map<Partition, Integer, ReverseLex> oracle_real_raw_counts(const Permutation& tau, bool require_connected);
/// (σ, ρ) ∈ S_n × S_n bucketed by the type of [σ, ρ], divided by n!. n ≤ 7.
std::map<Partition, Rational, ReverseLex> oracle_complex_counts(int n, bool require_connected);
/// v ∈ S_{2n}, h = τvτ, bucketed by the half type of [h, v], divided by 2ⁿn!. n ≤ 5.
std::map<Partition, Rational, ReverseLex> oracle_mirror_counts(int n, bool require_connected);

/// The unique strictly monotone sequence (a_i < b_i, b_i increasing) whose
/// ordered product is σ.
std::vector<Transposition> monotone_factorization(const Permutation& sigma);

/// The unique sequence σ₁…σ_k with ι = σ₁…σ_k τ σ_k…σ₁, each σ_i = (x, top)
/// where top is the unbarred point of the largest pair involved.
std::vector<Transposition> involution_factorization(const Matching& iota, int n);

/// Ξ(η, ξ) = (v, h). Only η enters: ι = ητη⁻¹ = wτw⁻¹ with w the product of
/// its involution factorization, v = wτw⁻¹τ and h = w⁻¹η ∈ H_n.
/// A bijection S_{2n} → B^~ × H_n; it does not keep the commutator profile
/// pointwise once n ≥ 3, although the profile buckets have equal sizes.
std::pair<Permutation, Permutation> xi_map(const Permutation& eta, const Permutation& xi, int n);
/// (v, h) ↦ (w h, τ w h τ) where vτ = wτw⁻¹.
std::pair<Permutation, Permutation> xi_inverse(const Permutation& v, const Permutation& h, int n);

/// Coset type of σ ∈ S_{2n}: the half type of στσ⁻¹τ.
Partition coset_type(const Permutation& sigma, int n);

/// b^μ_{μ,λ}: for fixed z ∈ K_μ, #{x ∈ K_μ : x⁻¹z ∈ K_λ}. n ≤ 3.
Integer coset_product_coefficient(const Partition& mu, const Partition& lambda, int n);
/// |K_λ| by enumeration. n ≤ 4.
Integer double_coset_size(const Partition& lambda, int n);
/// (1/|H_n|) Σ_{h∈H_n} χ^{2ρ}(xh) for x ∈ K_λ, checked on two representatives. n ≤ 4.
Rational zonal_spherical_direct(const Partition& rho, const Partition& lambda, int n);

/// Tuples (σ, ρ, τ₁…τ_{2g−2}) with a strictly monotone transposition sequence,
/// σρσ⁻¹ρ⁻¹τ₁…τ_{2g−2} = id and a transitive group, divided by n!. n ≤ 5, g ≤ 3.
Rational oracle_monotone_hurwitz(int genus, int n);

}  // namespace origami
