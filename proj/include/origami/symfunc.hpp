#pragma once

#include "origami/partition.hpp"
#include "origami/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace origami {

enum class Basis { kPower, kMonomial, kSchur };

const char* basis_name(Basis b);
Basis parse_basis(const std::string& name);

/// A homogeneous symmetric function stored sparsely in one basis.
/// Zero coefficients are never stored.
class SymFunc {
 public:
  using Terms = std::map<Partition, Rational, ReverseLex>;

  SymFunc(Basis basis, int degree);
  static SymFunc single(Basis basis, const Partition& lambda, const Rational& coeff = 1);
  /// The scalar 1 (degree 0).
  static SymFunc one(Basis basis = Basis::kPower);

  Basis basis() const { return basis_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Partition& lambda) const;
  /// Adds c to the coefficient of λ; throws if |λ| differs from the degree.
  void add(const Partition& lambda, const Rational& c);

  SymFunc& operator+=(const SymFunc& other);
  SymFunc& operator-=(const SymFunc& other);
  SymFunc& operator*=(const Rational& scalar);

  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(SymFunc a, const Rational& s) { return a *= s; }
  friend SymFunc operator*(const Rational& s, SymFunc a) { return a *= s; }
  friend bool operator==(const SymFunc& a, const SymFunc& b) {
    return a.basis_ == b.basis_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  void require_compatible(const SymFunc& other) const;

  Basis basis_;
  int degree_;
  Terms terms_;
};

/// Product of two power-sum expansions (p_λ p_μ = p_{λ∪μ}). Throws
/// std::invalid_argument for any other basis.
SymFunc multiply(const SymFunc& a, const SymFunc& b);

SymFunc convert(const SymFunc& f, Basis target);

/// ⟨f, g⟩_α with ⟨p_λ, p_μ⟩ = z_λ α^{ℓ(λ)} δ_{λμ}. Throws
/// std::invalid_argument for α = 0.
Rational hall_inner(const SymFunc& f, const SymFunc& g, const Rational& alpha);

/// Σ_n F_n tⁿ truncated at t^N, every layer in the p basis.
class GradedSeries {
 public:
  explicit GradedSeries(int truncation);
  /// Layer 0 is the scalar 1; higher layers are zero.
  static GradedSeries unit(int truncation);

  int truncation() const { return truncation_; }
  const SymFunc& layer(int n) const;
  void set_layer(int n, SymFunc f);

  friend bool operator==(const GradedSeries&, const GradedSeries&) = default;

 private:
  int truncation_;
  std::vector<SymFunc> layers_;
};

/// Formal logarithm in t. Requires layer 0 = 1; output has layer 0 = 0.
GradedSeries series_log(const GradedSeries& s);
/// Inverse of series_log. Requires layer 0 = 0; output has layer 0 = 1.
GradedSeries series_exp(const GradedSeries& s);

/// p_λ ↦ x^{|λ|−ℓ(λ)}; returns exponent → coefficient (zeros dropped).
std::map<int, Rational> substitute_genus(const SymFunc& f);

/// Σ_{λ⊢n} d_λ^c s_λ in the p basis, d_λ the hook product.
SymFunc weighted_schur_sum(int n, int c);

/// Partitions of one degree with the p↔m transition matrices, indexed in
/// canonical order. p_λ = Σ_μ p_to_m[λ][μ] m_μ and m_μ = Σ_λ m_to_p[μ][λ] p_λ.
struct DegreeBasis {
  int degree = 0;
  std::vector<Partition> partitions;
  std::map<Partition, std::size_t, ReverseLex> index;
  std::vector<std::vector<Integer>> p_to_m;
  std::vector<std::vector<Rational>> m_to_p;
};

/// Built on first use and cached for the life of the process.
const DegreeBasis& degree_basis(int n);

std::string to_json(const SymFunc& f, int indent = -1);
SymFunc symfunc_from_json(const std::string& text);

}  // namespace origami
