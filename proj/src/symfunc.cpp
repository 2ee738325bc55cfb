#include "origami/symfunc.hpp"

#include "origami/characters.hpp"

#include <json.hpp>

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace origami {

const char* basis_name(Basis b) {
  switch (b) {
    case Basis::kPower:
      return "p";
    case Basis::kMonomial:
      return "m";
    case Basis::kSchur:
      return "s";
  }
  return "?";
}

Basis parse_basis(const std::string& name) {
  if (name == "p") return Basis::kPower;
  if (name == "m") return Basis::kMonomial;
  if (name == "s") return Basis::kSchur;
  throw std::invalid_argument("unknown basis: " + name);
}

SymFunc::SymFunc(Basis basis, int degree) : basis_(basis), degree_(degree) {
  if (degree < 0 || degree > kMaxPartitionSize) {
    throw std::invalid_argument("SymFunc degree out of range");
  }
}

SymFunc SymFunc::single(Basis basis, const Partition& lambda, const Rational& coeff) {
  SymFunc f(basis, lambda.size());
  f.add(lambda, coeff);
  return f;
}

SymFunc SymFunc::one(Basis basis) { return single(basis, Partition{}); }

Rational SymFunc::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymFunc::add(const Partition& lambda, const Rational& c) {
  if (lambda.size() != degree_) {
    throw std::invalid_argument("term " + to_string(lambda) + " does not have degree " +
                                std::to_string(degree_));
  }
  if (c == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

void SymFunc::require_compatible(const SymFunc& other) const {
  if (basis_ != other.basis_ || degree_ != other.degree_) {
    throw std::invalid_argument("SymFunc operands differ in basis or degree");
  }
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
  require_compatible(other);
  for (const auto& [lambda, c] : other.terms_) {
    add(lambda, c);
  }
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) {
  require_compatible(other);
  for (const auto& [lambda, c] : other.terms_) {
    add(lambda, -c);
  }
  return *this;
}

SymFunc& SymFunc::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, c] : terms_) {
    c *= scalar;
  }
  return *this;
}

SymFunc multiply(const SymFunc& a, const SymFunc& b) {
  if (a.basis() != Basis::kPower || b.basis() != Basis::kPower) {
    throw std::invalid_argument("multiply: only the p basis supports products");
  }
  SymFunc out(Basis::kPower, a.degree() + b.degree());
  for (const auto& [la, ca] : a.terms()) {
    for (const auto& [lb, cb] : b.terms()) {
      out.add(la.joined(lb), ca * cb);
    }
  }
  return out;
}

namespace {

// Number of maps f from the parts of λ to the rows of μ with
// Σ_{f(i)=j} λ_i = μ_j for every j. The count for a suffix of λ depends only
// on the multiset of remaining row capacities, which is the memo key.
Integer count_fillings(const Partition& lambda, const Partition& mu) {
  std::map<std::pair<std::size_t, std::vector<int>>, Integer> memo;
  auto rec = [&](auto&& self, std::size_t i, const std::vector<int>& room) -> Integer {
    if (i == lambda.parts().size()) {
      return 1;
    }
    auto key = std::make_pair(i, room);
    if (auto it = memo.find(key); it != memo.end()) {
      return it->second;
    }
    Integer total = 0;
    std::size_t j = 0;
    while (j < room.size()) {
      std::size_t same = j;
      while (same < room.size() && room[same] == room[j]) {
        ++same;
      }
      if (room[j] >= lambda[i]) {
        std::vector<int> next = room;
        next[j] -= lambda[i];
        std::sort(next.begin(), next.end(), std::greater<>());
        total += Integer(static_cast<unsigned long>(same - j)) * self(self, i + 1, next);
      }
      j = same;
    }
    memo.emplace(std::move(key), total);
    return total;
  };
  return rec(rec, 0, mu.parts());
}

std::unique_ptr<DegreeBasis> build_degree_basis(int n) {
  auto basis = std::make_unique<DegreeBasis>();
  basis->degree = n;
  basis->partitions = enumerate_partitions(n);
  const std::size_t k = basis->partitions.size();
  for (std::size_t i = 0; i < k; ++i) {
    basis->index.emplace(basis->partitions[i], i);
  }
  basis->p_to_m.assign(k, std::vector<Integer>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    // Nonzero only when μ dominates λ, i.e. μ is at or before λ canonically.
    for (std::size_t j = 0; j <= i; ++j) {
      basis->p_to_m[i][j] = count_fillings(basis->partitions[i], basis->partitions[j]);
    }
  }
  // p_to_m is lower triangular in canonical order; invert by forward
  // substitution. p = L m gives m = L^{-1} p directly.
  auto& inv = basis->m_to_p;
  inv.assign(k, std::vector<Rational>(k, 0));
  const auto& lower = basis->p_to_m;
  for (std::size_t j = 0; j < k; ++j) {
    inv[j][j] = Rational(1) / Rational(lower[j][j]);
    for (std::size_t i = j + 1; i < k; ++i) {
      Rational acc = 0;
      for (std::size_t t = j; t < i; ++t) {
        if (lower[i][t] != 0 && inv[t][j] != 0) {
          acc += Rational(lower[i][t]) * inv[t][j];
        }
      }
      inv[i][j] = -acc / Rational(lower[i][i]);
    }
  }
  return basis;
}

}  // namespace

const DegreeBasis& degree_basis(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<DegreeBasis>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) {
      return *it->second;
    }
  }
  auto built = build_degree_basis(n);
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace(n, std::move(built));
  return *it->second;
}

namespace {

SymFunc to_power(const SymFunc& f) {
  const int n = f.degree();
  SymFunc out(Basis::kPower, n);
  switch (f.basis()) {
    case Basis::kPower:
      return f;
    case Basis::kMonomial: {
      const auto& db = degree_basis(n);
      for (const auto& [mu, c] : f.terms()) {
        const auto& row = db.m_to_p[db.index.at(mu)];
        for (std::size_t j = 0; j < row.size(); ++j) {
          if (row[j] != 0) {
            out.add(db.partitions[j], c * row[j]);
          }
        }
      }
      return out;
    }
    case Basis::kSchur: {
      auto parts = enumerate_partitions(n);
      for (const auto& [lambda, c] : f.terms()) {
        for (const auto& mu : parts) {
          Rational coeff(character(lambda, mu), z_of(mu));
          coeff.canonicalize();
          out.add(mu, c * coeff);
        }
      }
      return out;
    }
  }
  return out;
}

SymFunc from_power(const SymFunc& f, Basis target) {
  const int n = f.degree();
  SymFunc out(target, n);
  switch (target) {
    case Basis::kPower:
      return f;
    case Basis::kMonomial: {
      const auto& db = degree_basis(n);
      for (const auto& [lambda, c] : f.terms()) {
        const auto& row = db.p_to_m[db.index.at(lambda)];
        for (std::size_t j = 0; j < row.size(); ++j) {
          if (row[j] != 0) {
            out.add(db.partitions[j], c * Rational(row[j]));
          }
        }
      }
      return out;
    }
    case Basis::kSchur: {
      auto parts = enumerate_partitions(n);
      for (const auto& [mu, c] : f.terms()) {
        for (const auto& lambda : parts) {
          out.add(lambda, c * Rational(character(lambda, mu)));
        }
      }
      return out;
    }
  }
  return out;
}

}  // namespace

SymFunc convert(const SymFunc& f, Basis target) {
  if (f.basis() == target) {
    return f;
  }
  return from_power(to_power(f), target);
}

Rational hall_inner(const SymFunc& f, const SymFunc& g, const Rational& alpha) {
  if (alpha == 0) {
    throw std::invalid_argument("hall_inner: α must be nonzero");
  }
  if (f.degree() != g.degree()) {
    return 0;
  }
  SymFunc fp = convert(f, Basis::kPower);
  SymFunc gp = convert(g, Basis::kPower);
  Rational sum = 0;
  for (const auto& [lambda, c] : fp.terms()) {
    Rational d = gp.coefficient(lambda);
    if (d != 0) {
      sum += c * d * Rational(z_of(lambda)) * pow(alpha, static_cast<unsigned>(lambda.length()));
    }
  }
  return sum;
}

GradedSeries::GradedSeries(int truncation) : truncation_(truncation) {
  if (truncation < 0 || truncation > kMaxPartitionSize) {
    throw std::invalid_argument("GradedSeries truncation out of range");
  }
  layers_.reserve(static_cast<std::size_t>(truncation) + 1);
  for (int n = 0; n <= truncation; ++n) {
    layers_.emplace_back(Basis::kPower, n);
  }
}

GradedSeries GradedSeries::unit(int truncation) {
  GradedSeries s(truncation);
  s.set_layer(0, SymFunc::one());
  return s;
}

const SymFunc& GradedSeries::layer(int n) const {
  if (n < 0 || n > truncation_) {
    throw std::out_of_range("layer " + std::to_string(n) + " beyond truncation " +
                            std::to_string(truncation_));
  }
  return layers_[static_cast<std::size_t>(n)];
}

void GradedSeries::set_layer(int n, SymFunc f) {
  if (n < 0 || n > truncation_) {
    throw std::out_of_range("layer " + std::to_string(n) + " beyond truncation");
  }
  if (f.degree() != n) {
    throw std::invalid_argument("layer degree mismatch");
  }
  layers_[static_cast<std::size_t>(n)] = convert(f, Basis::kPower);
}

GradedSeries series_log(const GradedSeries& s) {
  if (s.layer(0) != SymFunc::one()) {
    throw std::invalid_argument("series_log: layer 0 must be 1");
  }
  const int big_n = s.truncation();
  GradedSeries log(big_n);
  // From S' = S·L': n L_n = n S_n − Σ_{k=1}^{n−1} k L_k S_{n−k}.
  for (int n = 1; n <= big_n; ++n) {
    SymFunc acc = s.layer(n) * Rational(n);
    for (int k = 1; k < n; ++k) {
      acc -= multiply(log.layer(k), s.layer(n - k)) * Rational(k);
    }
    log.set_layer(n, acc * Rational(1, n));
  }
  return log;
}

GradedSeries series_exp(const GradedSeries& s) {
  if (!s.layer(0).is_zero()) {
    throw std::invalid_argument("series_exp: layer 0 must be 0");
  }
  const int big_n = s.truncation();
  GradedSeries out = GradedSeries::unit(big_n);
  // n E_n = Σ_{k=1}^{n} k L_k E_{n−k}.
  for (int n = 1; n <= big_n; ++n) {
    SymFunc acc(Basis::kPower, n);
    for (int k = 1; k <= n; ++k) {
      acc += multiply(s.layer(k), out.layer(n - k)) * Rational(k);
    }
    out.set_layer(n, acc * Rational(1, n));
  }
  return out;
}

std::map<int, Rational> substitute_genus(const SymFunc& f) {
  if (f.basis() != Basis::kPower) {
    throw std::invalid_argument("substitute_genus: expects the p basis");
  }
  std::map<int, Rational> poly;
  for (const auto& [lambda, c] : f.terms()) {
    poly[lambda.size() - lambda.length()] += c;
  }
  std::erase_if(poly, [](const auto& kv) { return kv.second == 0; });
  return poly;
}

SymFunc weighted_schur_sum(int n, int c) {
  if (n < 1) {
    throw std::invalid_argument("weighted_schur_sum: n must be positive");
  }
  auto parts = enumerate_partitions(n);
  std::vector<Rational> weight;
  weight.reserve(parts.size());
  for (const auto& lambda : parts) {
    Rational d(hook_product(lambda));
    Rational w = pow(d, static_cast<unsigned>(c < 0 ? -c : c));
    weight.push_back(c < 0 ? Rational(1) / w : w);
  }
  SymFunc out(Basis::kPower, n);
  for (const auto& mu : parts) {
    Rational sum = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      sum += weight[i] * Rational(character(parts[i], mu));
    }
    out.add(mu, sum / Rational(z_of(mu)));
  }
  return out;
}

std::string to_json(const SymFunc& f, int indent) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [lambda, c] : f.terms()) {
    terms.push_back({{"partition", lambda.parts()},
                     {"num", c.get_num().get_str()},
                     {"den", c.get_den().get_str()}});
  }
  nlohmann::json j = {{"basis", basis_name(f.basis())}, {"degree", f.degree()}, {"terms", terms}};
  return j.dump(indent);
}

SymFunc symfunc_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  SymFunc f(parse_basis(j.at("basis").get<std::string>()), j.at("degree").get<int>());
  for (const auto& t : j.at("terms")) {
    Rational c(Integer(t.at("num").get<std::string>()), Integer(t.at("den").get<std::string>()));
    c.canonicalize();
    f.add(Partition(t.at("partition").get<std::vector<int>>()), c);
  }
  return f;
}

}  // namespace origami
