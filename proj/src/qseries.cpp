#include "origami/qseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace origami {

QSeries::QSeries(int truncation) {
  if (truncation < 0) {
    throw std::invalid_argument("QSeries: negative truncation");
  }
  coeffs_.assign(static_cast<std::size_t>(truncation) + 1, Rational(0));
}

QSeries::QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("QSeries: needs at least the constant term");
  }
}

QSeries QSeries::constant(const Rational& c, int truncation) {
  QSeries s(truncation);
  s[0] = c;
  return s;
}

QSeries QSeries::truncated(int n) const {
  if (n > truncation()) {
    throw std::invalid_argument("QSeries::truncated cannot extend a series");
  }
  return QSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + n + 1));
}

QSeries& QSeries::operator+=(const QSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] += o.coeffs_[i];
  }
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] -= o.coeffs_[i];
  }
  return *this;
}

QSeries& QSeries::operator*=(const Rational& s) {
  for (auto& c : coeffs_) {
    c *= s;
  }
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const int n = std::min(a.truncation(), b.truncation());
  QSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) {
      continue;
    }
    for (int j = 0; i + j <= n; ++j) {
      if (b[j] != 0) {
        out[i + j] += a[i] * b[j];
      }
    }
  }
  return out;
}

QSeries operator/(const QSeries& a, const QSeries& b) {
  if (b[0] == 0) {
    throw std::domain_error("QSeries division by a series with zero constant term");
  }
  const int n = std::min(a.truncation(), b.truncation());
  QSeries out(n);
  for (int i = 0; i <= n; ++i) {
    Rational acc = a[i];
    for (int j = 1; j <= i; ++j) {
      if (b[j] != 0) {
        acc -= b[j] * out[i - j];
      }
    }
    out[i] = acc / b[0];
  }
  return out;
}

Integer sigma(int k, int n) {
  if (n < 1 || k < 0) {
    throw std::invalid_argument("sigma: need n ≥ 1 and k ≥ 0");
  }
  Integer sum = 0;
  for (int d = 1; d * d <= n; ++d) {
    if (n % d != 0) {
      continue;
    }
    Integer t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
    sum += t;
    int e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(k));
      sum += t;
    }
  }
  return sum;
}

QSeries eisenstein(int k, int truncation) {
  if (k < 2) {
    throw std::invalid_argument("eisenstein: k must be at least 2");
  }
  QSeries s(truncation);
  for (int n = 1; n <= truncation; ++n) {
    s[n] = Rational(sigma(k - 1, n));
  }
  return s;
}

Rational bernoulli(int k) {
  if (k < 0) {
    throw std::invalid_argument("bernoulli: negative index");
  }
  // Σ_{j=0}^{m} C(m+1, j) B_j = 0 for m ≥ 1.
  std::vector<Rational> b(static_cast<std::size_t>(k) + 1);
  b[0] = 1;
  for (int m = 1; m <= k; ++m) {
    Rational acc = 0;
    Integer binom = 1;  // C(m+1, 0)
    for (int j = 0; j < m; ++j) {
      acc += Rational(binom) * b[static_cast<std::size_t>(j)];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    b[static_cast<std::size_t>(m)] = -acc / Rational(m + 1);
  }
  return b[static_cast<std::size_t>(k)];
}

QSeries eisenstein_normalized(int k, int truncation) {
  if (k < 2 || k % 2 != 0) {
    throw std::invalid_argument("eisenstein_normalized: k must be even and ≥ 2");
  }
  Rational factor = Rational(-2 * k) / bernoulli(k);
  QSeries s = eisenstein(k, truncation) * factor;
  s[0] = 1;
  return s;
}

Rational t_cover(int genus, int degree, ShiftVariant variant) {
  if (genus < 1) {
    throw std::invalid_argument("t_cover: genus must be at least 1");
  }
  const auto exponent = static_cast<unsigned>(variant == ShiftVariant::kComplex ? 2 * genus - 2 : genus - 1);
  Rational sum = 0;
  for (const auto& lambda : enumerate_partitions(degree)) {
    Rational base = variant == ShiftVariant::kComplex ? nu(lambda) : nu_real(lambda);
    sum += pow(base, exponent);
  }
  return sum;
}

Rational BivariateSeries::at(int d, int j) const {
  auto it = coeffs.find({d, j});
  return it == coeffs.end() ? Rational(0) : it->second;
}

BivariateSeries bivariate_cover_series(ShiftVariant variant, int max_q, int max_j) {
  if (max_q < 0 || max_j < 0) {
    throw std::invalid_argument("bivariate_cover_series: negative bounds");
  }
  BivariateSeries z{max_q, max_j, {}};
  for (int d = 0; d <= max_q; ++d) {
    std::vector<Rational> sums(static_cast<std::size_t>(max_j) + 1, 0);
    for (const auto& lambda : enumerate_partitions(d)) {
      Rational v = variant == ShiftVariant::kComplex ? nu(lambda) : nu_real(lambda);
      Rational power = 1;
      for (int j = 0; j <= max_j; ++j) {
        sums[static_cast<std::size_t>(j)] += power;
        power *= v;
      }
    }
    for (int j = 0; j <= max_j; ++j) {
      if (sums[static_cast<std::size_t>(j)] != 0) {
        z.coeffs[{d, j}] = sums[static_cast<std::size_t>(j)];
      }
    }
  }
  return z;
}

namespace {

using Egf = std::vector<Rational>;  // divided-power coefficients in x

Egf egf_layer(const BivariateSeries& z, int d) {
  Egf out(static_cast<std::size_t>(z.max_j) + 1, 0);
  for (int j = 0; j <= z.max_j; ++j) {
    out[static_cast<std::size_t>(j)] = z.at(d, j);
  }
  return out;
}

// Binomial convolution: (a·b)_j = Σ C(j, i) a_i b_{j−i}.
Egf egf_multiply(const Egf& a, const Egf& b) {
  Egf out(a.size(), 0);
  for (std::size_t j = 0; j < a.size(); ++j) {
    Integer binom = 1;
    for (std::size_t i = 0; i <= j; ++i) {
      if (a[i] != 0 && b[j - i] != 0) {
        out[j] += Rational(binom) * a[i] * b[j - i];
      }
      binom = binom * static_cast<unsigned long>(j - i) / static_cast<unsigned long>(i + 1);
    }
  }
  return out;
}

BivariateSeries from_layers(const std::vector<Egf>& layers, int max_q, int max_j) {
  BivariateSeries out{max_q, max_j, {}};
  for (int d = 0; d <= max_q; ++d) {
    for (int j = 0; j <= max_j; ++j) {
      const auto& c = layers[static_cast<std::size_t>(d)][static_cast<std::size_t>(j)];
      if (c != 0) {
        out.coeffs[{d, j}] = c;
      }
    }
  }
  return out;
}

}  // namespace

BivariateSeries bivariate_log(const BivariateSeries& z) {
  if (z.at(0, 0) != 1) {
    throw std::invalid_argument("bivariate_log: constant term must be 1");
  }
  for (int j = 1; j <= z.max_j; ++j) {
    if (z.at(0, j) != 0) {
      throw std::invalid_argument("bivariate_log: q⁰ layer must be the constant 1");
    }
  }
  std::vector<Egf> zl;
  for (int d = 0; d <= z.max_q; ++d) {
    zl.push_back(egf_layer(z, d));
  }
  std::vector<Egf> log(static_cast<std::size_t>(z.max_q) + 1, Egf(static_cast<std::size_t>(z.max_j) + 1, 0));
  // d L_d = d Z_d − Σ_{k=1}^{d−1} k L_k Z_{d−k}.
  for (int d = 1; d <= z.max_q; ++d) {
    Egf acc = zl[static_cast<std::size_t>(d)];
    for (auto& c : acc) {
      c *= d;
    }
    for (int k = 1; k < d; ++k) {
      Egf prod = egf_multiply(log[static_cast<std::size_t>(k)], zl[static_cast<std::size_t>(d - k)]);
      for (std::size_t j = 0; j < acc.size(); ++j) {
        acc[j] -= Rational(k) * prod[j];
      }
    }
    for (auto& c : acc) {
      c /= d;
    }
    log[static_cast<std::size_t>(d)] = std::move(acc);
  }
  return from_layers(log, z.max_q, z.max_j);
}

BivariateSeries bivariate_exp(const BivariateSeries& z) {
  for (int j = 0; j <= z.max_j; ++j) {
    if (z.at(0, j) != 0) {
      throw std::invalid_argument("bivariate_exp: q⁰ layer must vanish");
    }
  }
  std::vector<Egf> zl;
  for (int d = 0; d <= z.max_q; ++d) {
    zl.push_back(egf_layer(z, d));
  }
  std::vector<Egf> out(static_cast<std::size_t>(z.max_q) + 1, Egf(static_cast<std::size_t>(z.max_j) + 1, 0));
  out[0][0] = 1;
  // d E_d = Σ_{k=1}^{d} k L_k E_{d−k}.
  for (int d = 1; d <= z.max_q; ++d) {
    Egf acc(static_cast<std::size_t>(z.max_j) + 1, 0);
    for (int k = 1; k <= d; ++k) {
      Egf prod = egf_multiply(zl[static_cast<std::size_t>(k)], out[static_cast<std::size_t>(d - k)]);
      for (std::size_t j = 0; j < acc.size(); ++j) {
        acc[j] += Rational(k) * prod[j];
      }
    }
    for (auto& c : acc) {
      c /= d;
    }
    out[static_cast<std::size_t>(d)] = std::move(acc);
  }
  return from_layers(out, z.max_q, z.max_j);
}

std::map<std::pair<int, int>, Rational> connected_extract(const BivariateSeries& z,
                                                          ShiftVariant variant) {
  BivariateSeries log = bivariate_log(z);
  std::map<std::pair<int, int>, Rational> out;
  for (int d = 1; d <= z.max_q; ++d) {
    for (int j = 0; j <= z.max_j; ++j) {
      int genus;
      if (variant == ShiftVariant::kComplex) {
        if (j % 2 != 0) {
          continue;
        }
        genus = j / 2 + 1;
      } else {
        genus = j + 1;
      }
      out[{genus, d}] = log.at(d, j);
    }
  }
  return out;
}

QSeries q_bracket(const std::map<Partition, Rational>& values, int truncation) {
  QSeries numerator(truncation);
  QSeries denominator(truncation);
  for (int n = 0; n <= truncation; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      auto it = values.find(lambda);
      if (it == values.end()) {
        throw std::invalid_argument("q_bracket: no value for " + to_string(lambda));
      }
      numerator[n] += it->second;
      denominator[n] += 1;
    }
  }
  return numerator / denominator;
}

QSeries q_bracket(const std::function<Rational(const Partition&)>& f, int truncation) {
  std::map<Partition, Rational> values;
  for (int n = 0; n <= truncation; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      values.emplace(lambda, f(lambda));
    }
  }
  return q_bracket(values, truncation);
}

std::optional<std::vector<Rational>> linear_fit(const QSeries& target,
                                                const std::vector<QSeries>& basis,
                                                int n_train, int n_test) {
  const int k = static_cast<int>(basis.size());
  if (k == 0) {
    throw std::invalid_argument("linear_fit: empty basis");
  }
  if (n_train < k || n_test < 0) {
    throw std::invalid_argument("linear_fit: need n_train ≥ basis size and n_test ≥ 0");
  }
  int available = target.truncation() + 1;
  for (const auto& b : basis) {
    available = std::min(available, b.truncation() + 1);
  }
  if (n_train + n_test > available) {
    throw std::invalid_argument("linear_fit: not enough coefficients for train + test");
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (basis[static_cast<std::size_t>(i)].truncated(available - 1) ==
          basis[static_cast<std::size_t>(j)].truncated(available - 1)) {
        throw std::invalid_argument("linear_fit: basis series must be pairwise distinct");
      }
    }
  }

  // Augmented matrix rows = coefficients q^0..q^{n_train−1}.
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(n_train),
                                          std::vector<Rational>(static_cast<std::size_t>(k) + 1));
  for (int r = 0; r < n_train; ++r) {
    for (int c = 0; c < k; ++c) {
      rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = basis[static_cast<std::size_t>(c)][r];
    }
    rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] = target[r];
  }
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int c = 0; c < k && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][static_cast<std::size_t>(c)] == 0) {
      ++piv;
    }
    if (piv == rows.size()) {
      continue;
    }
    std::swap(rows[rank], rows[piv]);
    Rational inv = Rational(1) / rows[rank][static_cast<std::size_t>(c)];
    for (auto& x : rows[rank]) {
      x *= inv;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][static_cast<std::size_t>(c)] == 0) {
        continue;
      }
      Rational f = rows[r][static_cast<std::size_t>(c)];
      for (std::size_t t = 0; t < rows[r].size(); ++t) {
        rows[r][t] -= f * rows[rank][t];
      }
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (rows[r][static_cast<std::size_t>(k)] != 0) {
      return std::nullopt;
    }
  }
  std::vector<Rational> solution(static_cast<std::size_t>(k), 0);
  for (std::size_t r = 0; r < rank; ++r) {
    solution[static_cast<std::size_t>(pivot_col[r])] = rows[r][static_cast<std::size_t>(k)];
  }
  for (int n = 0; n < n_train + n_test; ++n) {
    Rational value = 0;
    for (int c = 0; c < k; ++c) {
      value += solution[static_cast<std::size_t>(c)] * basis[static_cast<std::size_t>(c)][n];
    }
    if (value != target[n]) {
      return std::nullopt;
    }
  }
  return solution;
}

std::vector<std::pair<std::string, QSeries>> quasimodular_basis(int max_weight, int truncation) {
  const QSeries e2 = eisenstein_normalized(2, truncation);
  const QSeries e4 = eisenstein_normalized(4, truncation);
  const QSeries e6 = eisenstein_normalized(6, truncation);
  std::vector<std::pair<std::string, QSeries>> out;
  auto label = [](int a, int b, int c) {
    std::string s;
    auto part = [&](const char* name, int e) {
      if (e == 0) return;
      if (!s.empty()) s += '*';
      s += name;
      if (e > 1) s += "^" + std::to_string(e);
    };
    part("E2", a);
    part("E4", b);
    part("E6", c);
    return s.empty() ? std::string("1") : s;
  };
  for (int w = 0; w <= max_weight; w += 2) {
    for (int c = w / 6; c >= 0; --c) {
      for (int b = (w - 6 * c) / 4; b >= 0; --b) {
        int rest = w - 6 * c - 4 * b;
        if (rest % 2 != 0) continue;
        int a = rest / 2;
        QSeries term = QSeries::constant(1, truncation);
        for (int i = 0; i < a; ++i) term = term * e2;
        for (int i = 0; i < b; ++i) term = term * e4;
        for (int i = 0; i < c; ++i) term = term * e6;
        out.emplace_back(label(a, b, c), std::move(term));
      }
    }
  }
  return out;
}

}  // namespace origami
