#pragma once

#include "origami/partition.hpp"
#include "origami/rational.hpp"
#include "origami/symfunc.hpp"

#include <map>
#include <memory>
#include <vector>

namespace origami {

/// J^{(α)}_λ in both the monomial and the power-sum basis.
///
/// Normalized so that [m_{1^n}] J = n!. Coefficients of m_μ vanish unless
/// μ ⊴ λ in standard dominance.
struct JackPolynomial {
  Partition index;
  Rational alpha;
  SymFunc expansion_m;
  SymFunc expansion_p;
};

/// All Jack functions of degree n at parameter α, in canonical order.
///
/// Computed by Gram–Schmidt over the monomial basis, processing partitions in
/// increasing lexicographic order (a linear extension of dominance), under
/// ⟨·,·⟩_α. Results are cached per (n, α). Throws std::invalid_argument for
/// α ≤ 0.
std::shared_ptr<const std::vector<JackPolynomial>> jack_family(int n, const Rational& alpha);

JackPolynomial jack(const Partition& lambda, const Rational& alpha);

/// Z_ρ = J^{(2)}_ρ in the p basis.
SymFunc zonal(const Partition& rho);

/// ω^ρ(λ) = z_{2λ} [p_λ] Z_ρ / (2ⁿ n!). Throws on size mismatch.
Rational zonal_spherical(const Partition& rho, const Partition& lambda);

/// Coefficients of J^{(α)}_λ in the m basis as polynomials in α
/// (index k holds the coefficient of α^k), recovered by interpolation at
/// exact rational sample points and checked at one extra point.
std::map<Partition, std::vector<Rational>, ReverseLex> jack_symbolic(const Partition& lambda);

/// Drops cached families; mainly for tests and memory control.
void clear_jack_cache();

/// Every cached family, for persistence.
std::vector<std::shared_ptr<const std::vector<JackPolynomial>>> cached_jack_families();
/// Seeds the cache from monomial expansions given in canonical order. The
/// p expansions are rebuilt; throws if the shapes do not match degree n.
void insert_jack_family(int n, const Rational& alpha, const std::vector<SymFunc>& expansions_m);

}  // namespace origami
