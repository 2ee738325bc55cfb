#pragma once

#include "origami/partition.hpp"
#include "origami/qseries.hpp"
#include "origami/rational.hpp"
#include "origami/symfunc.hpp"

#include <map>
#include <string>

namespace origami {

enum class OutputFormat { kJson, kCsv, kLatex };

/// "json" | "csv" | "latex"; throws std::invalid_argument otherwise.
OutputFormat parse_format(const std::string& name);

/// Monomial for λ in the given basis, e.g. "p_{1}^{2} p_{3}" (parts ascending).
std::string latex_monomial(const Partition& lambda, Basis basis);
/// Terms in increasing lexicographic order ([1ⁿ] first), coefficients as
/// "a M", "\frac{a M}{b}", with 1 and −1 folded into the sign.
std::string to_latex(const SymFunc& f);
/// "3", "-\\frac{1}{6}".
std::string latex_rational(const Rational& c);
/// a_0 + a_1 q + ..., skipping zero coefficients.
std::string to_latex(const QSeries& s);

/// One-line JSON object {"[2,1]": "3/2", ...} in canonical order.
std::string coefficients_json(const SymFunc& f);
/// "partition,coefficient" rows in canonical order, with a header row.
std::string coefficients_csv(const SymFunc& f);

std::string qseries_json(const QSeries& s);
std::string qseries_csv(const QSeries& s);

/// Parses the object produced by coefficients_json back into a map.
std::map<Partition, Rational, ReverseLex> parse_coefficients_json(const std::string& text);

}  // namespace origami
