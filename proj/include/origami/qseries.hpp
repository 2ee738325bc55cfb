#pragma once

#include "origami/characters.hpp"
#include "origami/partition.hpp"
#include "origami/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace origami {

/// Σ_{n=0}^{N} a_n qⁿ with exact coefficients. Binary operations truncate to
/// the smaller operand.
class QSeries {
 public:
  explicit QSeries(int truncation);
  explicit QSeries(std::vector<Rational> coeffs);
  static QSeries constant(const Rational& c, int truncation);

  int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  Rational& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }

  QSeries truncated(int n) const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const Rational& s);

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const Rational& s) { return a *= s; }
  friend QSeries operator*(const Rational& s, QSeries a) { return a *= s; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  /// Requires a nonzero constant term in the divisor.
  friend QSeries operator/(const QSeries& a, const QSeries& b);
  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// σ_k(n) = Σ_{d|n} d^k.
Integer sigma(int k, int n);

/// E_k = Σ_{n≥1} σ_{k−1}(n) qⁿ, without a constant term.
QSeries eisenstein(int k, int truncation);
/// The classical normalization 1 − (2k/B_k) Σ σ_{k−1}(n) qⁿ, k even ≥ 2.
QSeries eisenstein_normalized(int k, int truncation);
/// Bernoulli number B_k with B_1 = −1/2.
Rational bernoulli(int k);

/// Σ_{λ⊢d} ν(λ)^{2g−2} (complex) or Σ_{λ⊢d} ν_R(λ)^{g−1} (real).
Rational t_cover(int genus, int degree, ShiftVariant variant);

/// Coefficients stored at (q-exponent d, x-exponent j) under divided powers:
/// the series is Σ c_{d,j} q^d x^j / j!.
struct BivariateSeries {
  int max_q = 0;
  int max_j = 0;
  std::map<std::pair<int, int>, Rational> coeffs;

  Rational at(int d, int j) const;
};

/// Σ_λ e^{ν(λ)x} q^{|λ|} (or with ν_R), truncated at q^{max_q}, x^{max_j}.
BivariateSeries bivariate_cover_series(ShiftVariant variant, int max_q, int max_j);

/// log in q with x-coefficients multiplied as exponential generating
/// functions. Requires the (0,0) coefficient to be 1 and no other d = 0 terms.
BivariateSeries bivariate_log(const BivariateSeries& z);
/// Inverse of bivariate_log; requires all d = 0 coefficients to vanish.
BivariateSeries bivariate_exp(const BivariateSeries& z);

/// Connected counts T^{conn}_{g,d} keyed by (g, d): x-exponent 2g − 2 for the
/// complex variant, g − 1 for the real one.
std::map<std::pair<int, int>, Rational> connected_extract(const BivariateSeries& z,
                                                          ShiftVariant variant);

/// ⟨f⟩_q = Σ f(λ) q^{|λ|} / Σ q^{|λ|}. Throws std::invalid_argument if any
/// partition of size ≤ N is missing.
QSeries q_bracket(const std::map<Partition, Rational>& values, int truncation);
QSeries q_bracket(const std::function<Rational(const Partition&)>& f, int truncation);

/// Exact solve of Σ c_i basis_i = target on q⁰..q^{n_train−1}, then checks
/// the next n_test coefficients. std::nullopt if inconsistent or the check
/// fails. Free parameters of an underdetermined system are set to zero.
std::optional<std::vector<Rational>> linear_fit(const QSeries& target,
                                                const std::vector<QSeries>& basis,
                                                int n_train, int n_test);

/// Products of E2, E4, E6 (classical normalization) of total weight ≤ max_weight,
/// with the weight-0 constant included. Labels like "E2^2*E4".
std::vector<std::pair<std::string, QSeries>> quasimodular_basis(int max_weight, int truncation);

}  // namespace origami
