#include "origami/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace origami {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw std::invalid_argument("partition parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  if (size_ > kMaxPartitionSize) {
    throw std::invalid_argument("partition size exceeds " + std::to_string(kMaxPartitionSize));
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  if (std::any_of(parts.begin(), parts.end(), [](int x) { return x < 0; })) {
    throw std::invalid_argument("negative part");
  }
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

Partition Partition::conjugate() const {
  if (parts_.empty()) {
    return {};
  }
  std::vector<int> conj(static_cast<std::size_t>(parts_.front()), 0);
  for (int part : parts_) {
    for (int j = 0; j < part; ++j) {
      ++conj[static_cast<std::size_t>(j)];
    }
  }
  return Partition(std::move(conj));
}

Partition Partition::doubled() const {
  std::vector<int> d = parts_;
  for (int& x : d) {
    x *= 2;
  }
  return Partition(std::move(d));
}

Partition Partition::joined(const Partition& other) const {
  std::vector<int> merged;
  merged.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
             std::back_inserter(merged), std::greater<>());
  return Partition(std::move(merged));
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) {
    throw std::invalid_argument("enumerate_partitions: negative size");
  }
  if (n > kMaxPartitionSize) {
    throw std::invalid_argument("enumerate_partitions: size exceeds guard");
  }
  std::vector<Partition> out;
  std::vector<int> cur;
  // Depth-first with the largest admissible part first yields reverse-lex order.
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      cur.push_back(k);
      self(self, remaining - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

Integer partition_count(int n) {
  std::vector<Integer> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Integer acc = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2;
      if (g1 > m) {
        break;
      }
      int g2 = k * (3 * k + 1) / 2;
      Integer term = p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) {
        term += p[static_cast<std::size_t>(m - g2)];
      }
      acc += (k % 2 == 1) ? term : Integer(-term);
    }
    p[static_cast<std::size_t>(m)] = acc;
  }
  return p[static_cast<std::size_t>(n)];
}

Integer z_of(const Partition& lambda) {
  Integer z = 1;
  const auto& parts = lambda.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) {
      ++j;
    }
    auto m = static_cast<unsigned>(j - i);
    Integer ipow;
    mpz_ui_pow_ui(ipow.get_mpz_t(), static_cast<unsigned long>(parts[i]), m);
    z *= ipow * factorial(m);
    i = j;
  }
  return z;
}

Partition double_parts(const Partition& lambda) { return lambda.doubled(); }

Integer hook_product(const Partition& lambda) {
  Partition conj = lambda.conjugate();
  Integer prod = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j) {
      int arm = lambda[static_cast<std::size_t>(i)] - j - 1;
      int leg = conj[static_cast<std::size_t>(j)] - i - 1;
      prod *= arm + leg + 1;
    }
  }
  return prod;
}

Dominance compare_dominance(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    return Dominance::kIncomparable;
  }
  if (lambda == mu) {
    return Dominance::kEqual;
  }
  bool leq = true;
  bool geq = true;
  int sa = 0;
  int sb = 0;
  std::size_t len = static_cast<std::size_t>(std::max(lambda.length(), mu.length()));
  for (std::size_t i = 0; i < len; ++i) {
    sa += i < lambda.parts().size() ? lambda[i] : 0;
    sb += i < mu.parts().size() ? mu[i] : 0;
    leq = leq && sa <= sb;
    geq = geq && sa >= sb;
  }
  if (leq) {
    return Dominance::kLeq;
  }
  if (geq) {
    return Dominance::kGeq;
  }
  return Dominance::kIncomparable;
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
  auto d = compare_dominance(lambda, mu);
  return d == Dominance::kLeq || d == Dominance::kEqual;
}

std::string to_string(const Partition& lambda) {
  std::string s = "[";
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
    if (i > 0) {
      s += ',';
    }
    s += std::to_string(lambda[i]);
  }
  return s + "]";
}

Partition parse_partition(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      t += c;
    }
  }
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
    throw std::invalid_argument("partition must be a JSON array: " + text);
  }
  std::vector<int> parts;
  std::string body = t.substr(1, t.size() - 2);
  if (!body.empty()) {
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw std::invalid_argument("malformed partition: " + text);
      }
      parts.push_back(std::stoi(item));
    }
  }
  return Partition(std::move(parts));
}

}  // namespace origami
