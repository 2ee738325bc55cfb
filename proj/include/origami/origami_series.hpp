#pragma once

#include "origami/partition.hpp"
#include "origami/qseries.hpp"
#include "origami/rational.hpp"
#include "origami/symfunc.hpp"

#include <map>

namespace origami {

// Degree conventions: the layer index n is always the partition size. For
// real origami the cover degree is 2n.
//
// "Connected" for real origami means ⟨h, v, τ⟩ is transitive on the 2n
// sheets. Covers with two components swapped by the involution therefore
// count as connected; this is exactly what the logarithm of the disconnected
// series produces.

/// Layer n = Σ_{λ⊢n} d_λ s_λ = Σ h°_{μ,n} p_μ; the log if `connected`.
GradedSeries complex_series(int truncation, bool connected);
/// Layer n = Σ_{ρ⊢n} Z_ρ; the log if `connected`.
GradedSeries real_series(int truncation, bool connected);
/// Layer n = Σ_{λ⊢n} J^{(α)}_λ; the log if `connected`. α > 0.
GradedSeries jack_series(int truncation, const Rational& alpha, bool connected);

/// H_{g,n} for every genus with a nonzero count, from a connected complex
/// series that contains layer n.
std::map<int, Rational> genus_table(const GradedSeries& connected_complex, int n);
std::map<int, Rational> genus_table(int n);

/// [p_λ] of the connected real layer n = |λ|.
Rational real_stratum_coefficient(int n, const Partition& lambda);

/// ½(σ₂(n) − σ₁(n)): connected real origami of degree 2n in H(1,1).
Rational n_real_h11(int n);

/// 3E₂² + 7/6 E₂ − E₃ − 1/6 E₄ (Eisenstein series without constant term).
QSeries real_h22_series(int truncation);

}  // namespace origami
