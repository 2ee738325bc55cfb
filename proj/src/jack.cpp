#include "origami/jack.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace origami {

namespace {

std::shared_ptr<const std::vector<JackPolynomial>> compute_family(int n, const Rational& alpha) {
  const auto& db = degree_basis(n);
  const std::size_t k = db.partitions.size();
  const auto& m_to_p = db.m_to_p;

  std::vector<Rational> weight(k);
  for (std::size_t t = 0; t < k; ++t) {
    const auto& lambda = db.partitions[t];
    weight[t] = Rational(z_of(lambda)) * pow(alpha, static_cast<unsigned>(lambda.length()));
  }

  // Gram matrix of the monomial basis. m_i only involves p_t with t ≤ i.
  std::vector<std::vector<Rational>> gram(k, std::vector<Rational>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      Rational acc = 0;
      for (std::size_t t = 0; t <= j; ++t) {
        if (m_to_p[i][t] != 0 && m_to_p[j][t] != 0) {
          acc += m_to_p[i][t] * m_to_p[j][t] * weight[t];
        }
      }
      gram[i][j] = acc;
      gram[j][i] = acc;
    }
  }

  auto inner_with_basis = [&](std::size_t i, const std::vector<Rational>& v) {
    Rational acc = 0;
    for (std::size_t t = 0; t < k; ++t) {
      if (v[t] != 0 && gram[i][t] != 0) {
        acc += gram[i][t] * v[t];
      }
    }
    return acc;
  };

  // Canonical order is decreasing lex, so walk indices backwards.
  std::vector<std::vector<Rational>> vecs(k);
  std::vector<Rational> norms(k);
  for (std::size_t step = 0; step < k; ++step) {
    const std::size_t i = k - 1 - step;
    std::vector<Rational> v(k, 0);
    v[i] = 1;
    for (std::size_t j = i + 1; j < k; ++j) {
      Rational c = inner_with_basis(i, vecs[j]);
      if (c == 0) {
        continue;
      }
      c /= norms[j];
      for (std::size_t t = j; t < k; ++t) {
        if (vecs[j][t] != 0) {
          v[t] -= c * vecs[j][t];
        }
      }
    }
    Rational norm = 0;
    for (std::size_t t = i; t < k; ++t) {
      if (v[t] != 0) {
        norm += v[t] * inner_with_basis(t, v);
      }
    }
    vecs[i] = std::move(v);
    norms[i] = std::move(norm);
  }

  const Rational n_fact(factorial(static_cast<unsigned>(n)));
  auto family = std::make_shared<std::vector<JackPolynomial>>();
  family->reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Rational lead = vecs[i][k - 1];
    if (lead == 0) {
      throw std::logic_error("jack: vanishing [m_{1^n}] coefficient");
    }
    const Rational scale = n_fact / lead;
    SymFunc m(Basis::kMonomial, n);
    SymFunc p(Basis::kPower, n);
    for (std::size_t t = 0; t < k; ++t) {
      if (vecs[i][t] == 0) {
        continue;
      }
      Rational c = vecs[i][t] * scale;
      m.add(db.partitions[t], c);
      for (std::size_t u = 0; u <= t; ++u) {
        if (m_to_p[t][u] != 0) {
          p.add(db.partitions[u], c * m_to_p[t][u]);
        }
      }
    }
    family->push_back({db.partitions[i], alpha, std::move(m), std::move(p)});
  }
  return family;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<int, std::string>, std::shared_ptr<const std::vector<JackPolynomial>>>& cache() {
  static std::map<std::pair<int, std::string>, std::shared_ptr<const std::vector<JackPolynomial>>> c;
  return c;
}

}  // namespace

std::shared_ptr<const std::vector<JackPolynomial>> jack_family(int n, const Rational& alpha_in) {
  Rational alpha = alpha_in;
  alpha.canonicalize();
  if (alpha <= 0) {
    throw std::invalid_argument("jack: α must be positive, got " + to_string(alpha));
  }
  if (n < 0) {
    throw std::invalid_argument("jack: negative degree");
  }
  auto key = std::make_pair(n, to_string(alpha));
  {
    std::lock_guard lock(cache_mutex());
    if (auto it = cache().find(key); it != cache().end()) {
      return it->second;
    }
  }
  auto family = compute_family(n, alpha);
  std::lock_guard lock(cache_mutex());
  return cache().try_emplace(key, std::move(family)).first->second;
}

JackPolynomial jack(const Partition& lambda, const Rational& alpha) {
  auto family = jack_family(lambda.size(), alpha);
  const auto& db = degree_basis(lambda.size());
  return (*family)[db.index.at(lambda)];
}

SymFunc zonal(const Partition& rho) { return jack(rho, 2).expansion_p; }

Rational zonal_spherical(const Partition& rho, const Partition& lambda) {
  if (rho.size() != lambda.size()) {
    throw std::invalid_argument("zonal_spherical: size mismatch");
  }
  const int n = rho.size();
  Integer h_order = factorial(static_cast<unsigned>(n));
  h_order <<= static_cast<mp_bitcnt_t>(n);
  return Rational(z_of(lambda.doubled())) * zonal(rho).coefficient(lambda) / Rational(h_order);
}

std::map<Partition, std::vector<Rational>, ReverseLex> jack_symbolic(const Partition& lambda) {
  const int n = lambda.size();
  // Coefficients have degree < n in α; n + 1 samples leave one spare.
  const int samples = n + 1;
  std::vector<Rational> xs;
  std::vector<SymFunc> ys;
  for (int s = 1; s <= samples + 1; ++s) {
    xs.emplace_back(s);
    ys.push_back(jack(lambda, Rational(s)).expansion_m);
  }
  std::map<Partition, std::vector<Rational>, ReverseLex> out;
  for (const auto& mu : enumerate_partitions(n)) {
    // Newton divided differences on the first `samples` points.
    std::vector<Rational> dd(static_cast<std::size_t>(samples));
    for (int s = 0; s < samples; ++s) {
      dd[static_cast<std::size_t>(s)] = ys[static_cast<std::size_t>(s)].coefficient(mu);
    }
    for (int level = 1; level < samples; ++level) {
      for (int s = samples - 1; s >= level; --s) {
        auto us = static_cast<std::size_t>(s);
        dd[us] = (dd[us] - dd[us - 1]) / (xs[us] - xs[us - static_cast<std::size_t>(level)]);
      }
    }
    // Expand the Newton form into monomial coefficients.
    std::vector<Rational> poly(static_cast<std::size_t>(samples), 0);
    for (int s = samples - 1; s >= 0; --s) {
      // poly = poly·(α − x_s) + dd[s]
      std::vector<Rational> next(static_cast<std::size_t>(samples), 0);
      for (std::size_t d = 0; d + 1 < poly.size(); ++d) {
        next[d + 1] += poly[d];
        next[d] -= poly[d] * xs[static_cast<std::size_t>(s)];
      }
      next[0] += dd[static_cast<std::size_t>(s)];
      poly = std::move(next);
    }
    while (!poly.empty() && poly.back() == 0) {
      poly.pop_back();
    }
    Rational check = 0;
    const Rational& x_extra = xs.back();
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
      check = check * x_extra + *it;
    }
    if (check != ys.back().coefficient(mu)) {
      throw std::logic_error("jack_symbolic: interpolation failed the extra-point check");
    }
    if (!poly.empty()) {
      out.emplace(mu, std::move(poly));
    }
  }
  return out;
}

void clear_jack_cache() {
  std::lock_guard lock(cache_mutex());
  cache().clear();
}

std::vector<std::shared_ptr<const std::vector<JackPolynomial>>> cached_jack_families() {
  std::lock_guard lock(cache_mutex());
  std::vector<std::shared_ptr<const std::vector<JackPolynomial>>> out;
  for (const auto& [key, family] : cache()) {
    out.push_back(family);
  }
  return out;
}

void insert_jack_family(int n, const Rational& alpha_in, const std::vector<SymFunc>& expansions_m) {
  Rational alpha = alpha_in;
  alpha.canonicalize();
  if (alpha <= 0) {
    throw std::invalid_argument("insert_jack_family: α must be positive");
  }
  const auto& db = degree_basis(n);
  if (expansions_m.size() != db.partitions.size()) {
    throw std::invalid_argument("insert_jack_family: wrong number of expansions");
  }
  auto family = std::make_shared<std::vector<JackPolynomial>>();
  for (std::size_t i = 0; i < expansions_m.size(); ++i) {
    const SymFunc& m = expansions_m[i];
    if (m.basis() != Basis::kMonomial || m.degree() != n) {
      throw std::invalid_argument("insert_jack_family: expansions must be degree-n monomial sums");
    }
    SymFunc p(Basis::kPower, n);
    for (const auto& [mu, c] : m.terms()) {
      const std::size_t t = db.index.at(mu);
      for (std::size_t u = 0; u <= t; ++u) {
        if (db.m_to_p[t][u] != 0) {
          p.add(db.partitions[u], c * db.m_to_p[t][u]);
        }
      }
    }
    family->push_back({db.partitions[i], alpha, m, std::move(p)});
  }
  std::lock_guard lock(cache_mutex());
  cache().insert_or_assign(std::make_pair(n, to_string(alpha)), std::move(family));
}

}  // namespace origami
