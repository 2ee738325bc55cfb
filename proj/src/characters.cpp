#include "origami/characters.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace origami {

namespace {

// Beta-set of λ with exactly ℓ(λ) beads: β_i = λ_i + ℓ − i, strictly decreasing.
std::vector<int> beta_set(const Partition& lambda) {
  int len = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + len - 1 - i;
  }
  return beta;
}

Partition from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    int part = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (part > 0) {
      parts.push_back(part);
    }
  }
  return Partition(std::move(parts));
}

}  // namespace

CharacterTable& CharacterTable::shared() {
  static CharacterTable table;
  return table;
}

Integer CharacterTable::character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw std::invalid_argument("character: |λ| = " + std::to_string(lambda.size()) +
                                " but |μ| = " + std::to_string(mu.size()));
  }
  return evaluate(lambda, mu);
}

Integer CharacterTable::dimension(const Partition& lambda) {
  return character(lambda, Partition::ones(lambda.size()));
}

Integer CharacterTable::evaluate(const Partition& lambda, const Partition& mu) {
  if (mu.empty()) {
    return 1;
  }
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find({lambda, mu});
    if (it != memo_.end()) {
      return it->second;
    }
  }
  // Strip the largest part of μ as a rim hook of λ.
  const int r = mu[0];
  Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
  std::vector<int> beta = beta_set(lambda);
  Integer value = 0;
  for (std::size_t k = 0; k < beta.size(); ++k) {
    int target = beta[k] - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) {
      continue;
    }
    int between = 0;
    for (int b : beta) {
      if (b > target && b < beta[k]) {
        ++between;
      }
    }
    std::vector<int> moved = beta;
    moved[k] = target;
    Integer sub = evaluate(from_beta_set(std::move(moved)), rest);
    if (between % 2 == 0) {
      value += sub;
    } else {
      value -= sub;
    }
  }
  std::unique_lock lock(mutex_);
  memo_.emplace(std::make_pair(lambda, mu), value);
  return value;
}

std::size_t CharacterTable::cached_entries() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

void CharacterTable::clear() {
  std::unique_lock lock(mutex_);
  memo_.clear();
}

std::vector<std::pair<std::pair<Partition, Partition>, Integer>> CharacterTable::entries() const {
  std::shared_lock lock(mutex_);
  return {memo_.begin(), memo_.end()};
}

void CharacterTable::insert(const Partition& lambda, const Partition& mu, const Integer& value) {
  if (lambda.size() != mu.size()) {
    throw std::invalid_argument("character cache entry with mismatched sizes");
  }
  std::unique_lock lock(mutex_);
  memo_.insert_or_assign({lambda, mu}, value);
}

Integer character(const Partition& lambda, const Partition& mu) {
  return CharacterTable::shared().character(lambda, mu);
}

Integer class_size(const Partition& mu) {
  Integer n_fact = factorial(static_cast<unsigned>(mu.size()));
  return n_fact / z_of(mu);
}

Rational shifted_power_sum(const Partition& lambda, int ell, ShiftVariant variant) {
  if (ell < 1) {
    throw std::invalid_argument("shifted_power_sum: exponent must be positive");
  }
  const auto e = static_cast<unsigned>(ell);
  Rational sum = 0;
  for (int i = 1; i <= lambda.length(); ++i) {
    Rational shift = variant == ShiftVariant::kComplex ? Rational(-i) + Rational(1, 2)
                                                       : Rational(Rational(-i) / 2);
    sum += pow(Rational(lambda[static_cast<std::size_t>(i - 1)]) + shift, e) - pow(shift, e);
  }
  return sum;
}

Rational nu(const Partition& lambda) {
  return shifted_power_sum(lambda, 2, ShiftVariant::kComplex) / 2;
}

Rational nu_real(const Partition& lambda) {
  return shifted_power_sum(lambda, 2, ShiftVariant::kReal);
}

Rational central_character(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) {
    throw std::invalid_argument("central_character: size mismatch");
  }
  Rational value(class_size(mu) * character(lambda, mu));
  value /= Rational(CharacterTable::shared().dimension(lambda));
  return value;
}

std::string character_table_csv(int n) {
  auto parts = enumerate_partitions(n);
  std::string out = "lambda";
  for (const auto& mu : parts) {
    out += ",\"" + to_string(mu) + "\"";
  }
  out += '\n';
  for (const auto& lambda : parts) {
    out += '"' + to_string(lambda) + '"';
    for (const auto& mu : parts) {
      out += ',' + to_string(character(lambda, mu));
    }
    out += '\n';
  }
  return out;
}

}  // namespace origami
