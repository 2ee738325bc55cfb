#include "origami/origami_series.hpp"

#include "origami/jack.hpp"
#include "origami/parallel.hpp"

#include <stdexcept>
#include <vector>

namespace origami {

namespace {

// Layers are independent; large degrees go first since they dominate.
template <typename Make>
GradedSeries build_layers(int truncation, Make make) {
  if (truncation < 1) {
    throw std::invalid_argument("series truncation must be at least 1");
  }
  std::vector<SymFunc> layers(static_cast<std::size_t>(truncation) + 1, SymFunc::one());
  parallel_for(static_cast<std::size_t>(truncation), [&](std::size_t i, unsigned) {
    const int n = truncation - static_cast<int>(i);
    layers[static_cast<std::size_t>(n)] = make(n);
  });
  GradedSeries out = GradedSeries::unit(truncation);
  for (int n = 1; n <= truncation; ++n) {
    out.set_layer(n, std::move(layers[static_cast<std::size_t>(n)]));
  }
  return out;
}

SymFunc jack_sum(int n, const Rational& alpha) {
  SymFunc sum(Basis::kPower, n);
  for (const auto& j : *jack_family(n, alpha)) {
    sum += j.expansion_p;
  }
  return sum;
}

}  // namespace

GradedSeries complex_series(int truncation, bool connected) {
  GradedSeries s = build_layers(truncation, [](int n) { return weighted_schur_sum(n, 1); });
  return connected ? series_log(s) : s;
}

GradedSeries real_series(int truncation, bool connected) {
  return jack_series(truncation, Rational(2), connected);
}

GradedSeries jack_series(int truncation, const Rational& alpha, bool connected) {
  if (alpha <= 0) {
    throw std::invalid_argument("jack_series: α must be positive");
  }
  GradedSeries s = build_layers(truncation, [&](int n) { return jack_sum(n, alpha); });
  return connected ? series_log(s) : s;
}

std::map<int, Rational> genus_table(const GradedSeries& connected_complex, int n) {
  if (n < 1 || n > connected_complex.truncation()) {
    throw std::invalid_argument("genus_table: layer out of range");
  }
  std::map<int, Rational> out;
  for (const auto& [exponent, value] : substitute_genus(connected_complex.layer(n))) {
    if (exponent % 2 != 0) {
      throw std::logic_error("genus_table: odd exponent in a complex layer");
    }
    out[exponent / 2 + 1] = value;
  }
  return out;
}

std::map<int, Rational> genus_table(int n) { return genus_table(complex_series(n, true), n); }

Rational real_stratum_coefficient(int n, const Partition& lambda) {
  if (lambda.size() != n) {
    throw std::invalid_argument("real_stratum_coefficient: λ must be a partition of n");
  }
  return real_series(n, true).layer(n).coefficient(lambda);
}

Rational n_real_h11(int n) {
  if (n < 1) {
    throw std::invalid_argument("n_real_h11: n must be positive");
  }
  return Rational(sigma(2, n) - sigma(1, n)) / 2;
}

QSeries real_h22_series(int truncation) {
  if (truncation < 1) {
    throw std::invalid_argument("real_h22_series: truncation must be at least 1");
  }
  const QSeries e2 = eisenstein(2, truncation);
  return Rational(3) * (e2 * e2) + Rational(7, 6) * e2 - eisenstein(3, truncation) -
         Rational(1, 6) * eisenstein(4, truncation);
}

}  // namespace origami
