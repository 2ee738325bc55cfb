#include "origami/perm_oracle.hpp"

#include "origami/characters.hpp"
#include "origami/parallel.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace origami {

namespace {

constexpr int kMaxPoints = 16;
using Arr = std::array<std::uint8_t, kMaxPoints>;

void guard(bool ok, const std::string& what) {
  if (!ok) {
    throw std::invalid_argument(what);
  }
}

Arr to_arr(const Permutation& p) {
  Arr a{};
  std::copy(p.images().begin(), p.images().end(), a.begin());
  return a;
}

Arr inverse_arr(const Arr& a, int m) {
  Arr inv{};
  for (int i = 0; i < m; ++i) inv[a[i]] = static_cast<std::uint8_t>(i);
  return inv;
}

// a b a⁻¹ b⁻¹ evaluated pointwise, b⁻¹ first.
Arr commutator_arr(const Arr& a, const Arr& ai, const Arr& b, const Arr& bi, int m) {
  Arr c{};
  for (int x = 0; x < m; ++x) c[x] = a[b[ai[bi[x]]]];
  return c;
}

// Cycle multiplicities packed as 4-bit counts at slot = length (lengths ≤ 15).
std::uint64_t type_key(const Arr& p, int m) {
  std::uint32_t seen = 0;
  std::uint64_t key = 0;
  for (int x = 0; x < m; ++x) {
    if (seen >> x & 1u) continue;
    int len = 0;
    for (int y = x; !(seen >> y & 1u); y = p[y]) {
      seen |= 1u << y;
      ++len;
    }
    key += std::uint64_t{1} << (4 * len);
  }
  return key;
}

// Halves the multiplicities; throws if any is odd.
std::uint64_t halve_key(std::uint64_t key) {
  std::uint64_t out = 0;
  for (int len = 1; len < 16; ++len) {
    std::uint64_t c = key >> (4 * len) & 0xF;
    if (c % 2 != 0) {
      throw std::logic_error("commutator cycle type is not of doubled form");
    }
    out += (c / 2) << (4 * len);
  }
  return out;
}

Partition key_to_partition(std::uint64_t key) {
  std::vector<int> parts;
  for (int len = 15; len >= 1; --len) {
    for (std::uint64_t c = key >> (4 * len) & 0xF; c > 0; --c) parts.push_back(len);
  }
  return Partition(std::move(parts));
}

struct UnionFind {
  std::array<std::uint8_t, kMaxPoints> parent{};
  int components;
  explicit UnionFind(int m) : components(m) {
    for (int i = 0; i < m; ++i) parent[i] = static_cast<std::uint8_t>(i);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = static_cast<std::uint8_t>(b);
      --components;
    }
  }
};

template <typename... Ps>
bool transitive_arr(int m, const Ps&... gens) {
  UnionFind uf(m);
  for (int x = 0; x < m; ++x) {
    (uf.unite(x, gens[x]), ...);
  }
  return uf.components <= 1;
}

using KeyCounts = std::unordered_map<std::uint64_t, Integer>;

template <typename Out>
Out collect(const std::vector<KeyCounts>& parts, const Rational& divisor) {
  KeyCounts total;
  for (const auto& p : parts) {
    for (const auto& [k, c] : p) total[k] += c;
  }
  Out out;
  for (const auto& [k, c] : total) {
    out.emplace(key_to_partition(k), Rational(c) / divisor);
  }
  return out;
}

Rational hyperoctahedral_order(int n) {
  Integer order = factorial(static_cast<unsigned>(n));
  order <<= static_cast<mp_bitcnt_t>(n);
  return Rational(order);
}

void for_each_permutation(int m, const std::function<void(const Arr&)>& f) {
  Arr a{};
  std::iota(a.begin(), a.begin() + m, 0);
  do {
    f(a);
  } while (std::next_permutation(a.begin(), a.begin() + m));
}

// Counts (v, h) pairs with v ranging over `bs` and h over `hs`.
KeyCounts real_pair_counts(const std::vector<Permutation>& bs, const std::vector<Permutation>& hs,
                           const Permutation& tau, bool require_connected) {
  const int m = tau.size();
  std::vector<Arr> h_arr, h_inv;
  for (const auto& h : hs) {
    h_arr.push_back(to_arr(h));
    h_inv.push_back(inverse_arr(h_arr.back(), m));
  }
  const Arr t = to_arr(tau);
  std::vector<KeyCounts> partial(worker_threads());
  parallel_for(bs.size(), [&](std::size_t i, unsigned w) {
    const Arr v = to_arr(bs[i]);
    const Arr vi = inverse_arr(v, m);
    auto& counts = partial[w];
    for (std::size_t j = 0; j < h_arr.size(); ++j) {
      // Every commutator must have doubled type; checked even when skipped.
      std::uint64_t key = halve_key(type_key(commutator_arr(h_arr[j], h_inv[j], v, vi, m), m));
      if (require_connected && !transitive_arr(m, h_arr[j], v, t)) continue;
      counts[key] += 1;
    }
  });
  KeyCounts total;
  for (const auto& p : partial) {
    for (const auto& [k, c] : p) total[k] += c;
  }
  return total;
}

std::vector<std::vector<int>> cycles_of(const Permutation& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<std::size_t>(p.size()), false);
  for (int x = 0; x < p.size(); ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    std::vector<int> c;
    for (int y = x; !seen[static_cast<std::size_t>(y)]; y = p(y)) {
      seen[static_cast<std::size_t>(y)] = true;
      c.push_back(y);
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

Permutation::Permutation(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  guard(images_.size() <= static_cast<std::size_t>(kMaxPoints), "permutation larger than 16 points");
  std::vector<bool> hit(images_.size(), false);
  for (auto x : images_) {
    guard(x < images_.size() && !hit[x], "not a bijection");
    hit[x] = true;
  }
}

Permutation Permutation::identity(int size) {
  std::vector<std::uint8_t> v(static_cast<std::size_t>(size));
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::from_cycles(int size, const std::vector<std::vector<int>>& cycles) {
  std::vector<std::uint8_t> v(static_cast<std::size_t>(size));
  std::iota(v.begin(), v.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(size), false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      guard(c[i] >= 0 && c[i] < size && !used[static_cast<std::size_t>(c[i])], "cycles must be disjoint and in range");
      used[static_cast<std::size_t>(c[i])] = true;
      v[static_cast<std::size_t>(c[i])] = static_cast<std::uint8_t>(c[(i + 1) % c.size()]);
    }
  }
  return Permutation(std::move(v));
}

Permutation Permutation::tau(int n) {
  std::vector<std::uint8_t> v(static_cast<std::size_t>(2 * n));
  for (int x = 0; x < 2 * n; ++x) v[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(x ^ 1);
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(int size, int a, int b) {
  guard(a != b, "transposition needs two distinct points");
  return from_cycles(size, {{a, b}});
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> v(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) v[images_[i]] = static_cast<std::uint8_t>(i);
  Permutation p;
  p.images_ = std::move(v);
  return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  guard(a.size() == b.size(), "permutation size mismatch");
  std::vector<std::uint8_t> v(a.images_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.images_[b.images_[i]];
  Permutation p;
  p.images_ = std::move(v);
  return p;
}

void Matching::validate() const {
  guard(partner.size() % 2 == 0, "matching needs an even number of points");
  for (std::size_t x = 0; x < partner.size(); ++x) {
    int y = partner[x];
    guard(y >= 0 && static_cast<std::size_t>(y) < partner.size(), "matching partner out of range");
    guard(static_cast<std::size_t>(y) != x, "matching has a fixed point");
    guard(static_cast<std::size_t>(partner[static_cast<std::size_t>(y)]) == x, "matching is not an involution");
  }
}

Permutation Matching::as_permutation() const {
  validate();
  return Permutation(std::vector<std::uint8_t>(partner.begin(), partner.end()));
}

Matching Matching::from_permutation(const Permutation& p) {
  Matching m{std::vector<int>(p.images().begin(), p.images().end())};
  m.validate();
  return m;
}

Partition cycle_type(const Permutation& p) {
  std::vector<int> parts;
  for (const auto& c : cycles_of(p)) parts.push_back(static_cast<int>(c.size()));
  return Partition::from_unsorted(std::move(parts));
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  guard(a.size() == b.size(), "commutator: size mismatch");
  return a * b * a.inverse() * b.inverse();
}

Partition half_type(const Partition& doubled) {
  std::vector<int> parts;
  const auto& d = doubled.parts();
  for (std::size_t i = 0; i < d.size(); i += 2) {
    if (i + 1 >= d.size() || d[i] != d[i + 1]) {
      throw std::logic_error("cycle type " + to_string(doubled) + " is not of doubled form");
    }
    parts.push_back(d[i]);
  }
  return Partition(std::move(parts));
}

bool is_transitive(const std::vector<const Permutation*>& gens) {
  if (gens.empty()) return true;
  const int m = gens.front()->size();
  UnionFind uf(m);
  for (const auto* g : gens) {
    guard(g->size() == m, "is_transitive: size mismatch");
    for (int x = 0; x < m; ++x) uf.unite(x, (*g)(x));
  }
  return uf.components <= 1;
}

Permutation product(int size, const std::vector<Transposition>& ts) {
  Permutation p = Permutation::identity(size);
  for (const auto& [a, b] : ts) p = p * Permutation::transposition(size, a, b);
  return p;
}

std::vector<Permutation> all_permutations(int size) {
  guard(size >= 0 && size <= 10, "all_permutations: at most 10 points");
  std::vector<Permutation> out;
  std::vector<std::uint8_t> v(static_cast<std::size_t>(size));
  std::iota(v.begin(), v.end(), 0);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<Permutation> enumerate_hyperoctahedral(int n) {
  guard(n >= 0 && n <= 6, "enumerate_hyperoctahedral: n must be in [0, 6]");
  std::vector<Permutation> out;
  for (const auto& pi : all_permutations(n)) {
    for (unsigned s = 0; s < (1u << n); ++s) {
      std::vector<std::uint8_t> v(static_cast<std::size_t>(2 * n));
      for (int i = 0; i < n; ++i) {
        for (int b = 0; b < 2; ++b) {
          v[static_cast<std::size_t>(2 * i + b)] = static_cast<std::uint8_t>(2 * pi(i) + (b ^ static_cast<int>(s >> i & 1u)));
        }
      }
      out.emplace_back(std::move(v));
    }
  }
  return out;
}

std::vector<Permutation> centralizer_by_filter(const Permutation& tau) {
  guard(tau.size() <= 8, "centralizer_by_filter: at most 8 points");
  Matching::from_permutation(tau);
  std::vector<Permutation> out;
  for (const auto& s : all_permutations(tau.size())) {
    if (s * tau == tau * s) out.push_back(s);
  }
  return out;
}

std::vector<Matching> all_matchings(int points) {
  guard(points >= 0 && points % 2 == 0 && points <= 14, "all_matchings: even point count ≤ 14");
  std::vector<Matching> out;
  std::vector<int> partner(static_cast<std::size_t>(points), -1);
  std::function<void()> rec = [&] {
    auto first = std::find(partner.begin(), partner.end(), -1);
    if (first == partner.end()) {
      out.push_back({partner});
      return;
    }
    int x = static_cast<int>(first - partner.begin());
    for (int y = x + 1; y < points; ++y) {
      if (partner[static_cast<std::size_t>(y)] != -1) continue;
      partner[static_cast<std::size_t>(x)] = y;
      partner[static_cast<std::size_t>(y)] = x;
      rec();
      partner[static_cast<std::size_t>(x)] = -1;
      partner[static_cast<std::size_t>(y)] = -1;
    }
  };
  rec();
  return out;
}

std::map<Partition, std::vector<Permutation>, ReverseLex> enumerate_b_tilde(const Permutation& tau) {
  guard(tau.size() <= 12, "enumerate_b_tilde: n must be at most 6");
  Matching::from_permutation(tau);
  const Permutation tau_inv = tau.inverse();
  std::map<Partition, std::vector<Permutation>, ReverseLex> out;
  // C^~(τ) = {τι : ι a fixed-point-free involution}.
  for (const auto& m : all_matchings(tau.size())) {
    Permutation sigma = tau * m.as_permutation();
    if (tau * sigma != sigma.inverse() * tau) {
      throw std::logic_error("enumerate_b_tilde: τι is not in the twisted centralizer");
    }
    bool self_symmetric = false;
    for (const auto& c : cycles_of(sigma)) {
      // A cycle is τ-self-symmetric when τ maps its support onto itself.
      std::vector<int> support = c;
      std::vector<int> image;
      for (int x : c) image.push_back(tau(x));
      std::sort(support.begin(), support.end());
      std::sort(image.begin(), image.end());
      if (support == image) {
        self_symmetric = true;
        break;
      }
    }
    if (self_symmetric) continue;
    out[half_type(cycle_type(sigma))].push_back(std::move(sigma));
  }
  return out;
}

std::map<Partition, std::vector<Permutation>, ReverseLex> enumerate_b_tilde(int n) {
  guard(n >= 0 && n <= 6, "enumerate_b_tilde: n must be in [0, 6]");
  return enumerate_b_tilde(Permutation::tau(n));
}

std::map<Partition, Integer, ReverseLex> oracle_real_raw_counts(const Permutation& tau, bool require_connected) {
  guard(tau.size() <= 8, "oracle_real_raw_counts: at most 8 points");
  std::vector<Permutation> bs;
  for (auto& [lambda, list] : enumerate_b_tilde(tau)) bs.insert(bs.end(), list.begin(), list.end());
  KeyCounts counts = real_pair_counts(bs, centralizer_by_filter(tau), tau, require_connected);
  std::map<Partition, Integer, ReverseLex> out;
  for (const auto& [k, c] : counts) out.emplace(key_to_partition(k), c);
  return out;
}

std::map<Partition, Rational, ReverseLex> oracle_real_counts(int n, bool require_connected) {
  guard(n >= 1 && n <= 5, "oracle_real_counts: n must be in [1, 5]");
  const Permutation tau = Permutation::tau(n);
  std::vector<Permutation> bs;
  for (auto& [lambda, list] : enumerate_b_tilde(n)) bs.insert(bs.end(), list.begin(), list.end());
  KeyCounts counts = real_pair_counts(bs, enumerate_hyperoctahedral(n), tau, require_connected);
  return collect<std::map<Partition, Rational, ReverseLex>>({counts}, hyperoctahedral_order(n));
}

std::map<Partition, Rational, ReverseLex> oracle_complex_counts(int n, bool require_connected) {
  guard(n >= 1 && n <= 7, "oracle_complex_counts: n must be in [1, 7]");
  std::vector<Arr> perms, invs;
  for_each_permutation(n, [&](const Arr& a) {
    perms.push_back(a);
    invs.push_back(inverse_arr(a, n));
  });
  std::vector<KeyCounts> partial(worker_threads());
  parallel_for(perms.size(), [&](std::size_t i, unsigned w) {
    auto& counts = partial[w];
    for (std::size_t j = 0; j < perms.size(); ++j) {
      if (require_connected && !transitive_arr(n, perms[i], perms[j])) continue;
      counts[type_key(commutator_arr(perms[i], invs[i], perms[j], invs[j], n), n)] += 1;
    }
  });
  return collect<std::map<Partition, Rational, ReverseLex>>(partial, Rational(factorial(static_cast<unsigned>(n))));
}

std::map<Partition, Rational, ReverseLex> oracle_mirror_counts(int n, bool require_connected) {
  guard(n >= 1 && n <= 5, "oracle_mirror_counts: n must be in [1, 5]");
  const int m = 2 * n;
  const Arr t = to_arr(Permutation::tau(n));
  std::vector<KeyCounts> partial(worker_threads());
  // Split S_{2n} by the image of the first two points.
  parallel_for(static_cast<std::size_t>(m * m), [&](std::size_t task, unsigned w) {
    const int a0 = static_cast<int>(task) / m;
    const int a1 = static_cast<int>(task) % m;
    if (a0 == a1) return;
    Arr v{};
    v[0] = static_cast<std::uint8_t>(a0);
    v[1] = static_cast<std::uint8_t>(a1);
    int k = 2;
    for (int x = 0; x < m; ++x) {
      if (x != a0 && x != a1) v[k++] = static_cast<std::uint8_t>(x);
    }
    auto& counts = partial[w];
    do {
      const Arr vi = inverse_arr(v, m);
      Arr h{};
      for (int x = 0; x < m; ++x) h[x] = t[v[t[x]]];
      const Arr hi = inverse_arr(h, m);
      if (require_connected && !transitive_arr(m, h, v, t)) continue;
      counts[halve_key(type_key(commutator_arr(h, hi, v, vi, m), m))] += 1;
    } while (std::next_permutation(v.begin() + 2, v.begin() + m));
  });
  return collect<std::map<Partition, Rational, ReverseLex>>(partial, hyperoctahedral_order(n));
}

std::vector<Transposition> monotone_factorization(const Permutation& sigma) {
  // Peel transpositions off the right: σ·(a b) fixes b when a = σ⁻¹(b).
  Permutation cur = sigma;
  std::vector<Transposition> rev;
  for (int b = sigma.size() - 1; b >= 1; --b) {
    if (cur(b) == b) continue;
    const int a = cur.inverse()(b);
    if (a >= b) {
      throw std::logic_error("monotone_factorization: larger points not fixed");
    }
    rev.emplace_back(a, b);
    cur = cur * Permutation::transposition(sigma.size(), a, b);
  }
  if (cur != Permutation::identity(sigma.size())) {
    throw std::logic_error("monotone_factorization: residue is not the identity");
  }
  return {rev.rbegin(), rev.rend()};
}

std::vector<Transposition> involution_factorization(const Matching& iota, int n) {
  iota.validate();
  guard(static_cast<int>(iota.partner.size()) == 2 * n, "involution_factorization: matching size must be 2n");
  std::vector<int> partner = iota.partner;
  // Recursion over the top pair, unrolled: record what each level needs,
  // then replay bottom-up to recover x = w′⁻¹(y).
  struct Level {
    int top;
    int y;
  };
  std::vector<Level> levels;
  for (int k = n - 1; k >= 0; --k) {
    const int top = 2 * k;
    const int topbar = top + 1;
    if (partner[static_cast<std::size_t>(top)] == topbar) continue;
    const int u = partner[static_cast<std::size_t>(top)];
    const int y = partner[static_cast<std::size_t>(topbar)];
    partner[static_cast<std::size_t>(u)] = y;
    partner[static_cast<std::size_t>(y)] = u;
    partner[static_cast<std::size_t>(top)] = topbar;
    partner[static_cast<std::size_t>(topbar)] = top;
    levels.push_back({top, y});
  }
  std::vector<Transposition> seq;
  Permutation w = Permutation::identity(2 * n);
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    const int x = w.inverse()(it->y);
    seq.emplace_back(x, it->top);
    w = w * Permutation::transposition(2 * n, x, it->top);
  }
  const Permutation tau = Permutation::tau(n);
  if (w * tau * w.inverse() != iota.as_permutation()) {
    throw std::logic_error("involution_factorization: reconstruction failed");
  }
  return seq;
}

std::pair<Permutation, Permutation> xi_map(const Permutation& eta, const Permutation& xi, int n) {
  guard(eta.size() == 2 * n && xi.size() == 2 * n, "xi_map: permutations must act on 2n points");
  const Permutation tau = Permutation::tau(n);
  const Permutation iota = eta * tau * eta.inverse();
  const Permutation w = product(2 * n, involution_factorization(Matching::from_permutation(iota), n));
  const Permutation zeta = w.inverse() * eta;
  if (zeta * tau != tau * zeta) {
    throw std::logic_error("xi_map: ζ is not in H_n");
  }
  return {w * tau * w.inverse() * tau, zeta};
}

std::pair<Permutation, Permutation> xi_inverse(const Permutation& v, const Permutation& h, int n) {
  guard(v.size() == 2 * n && h.size() == 2 * n, "xi_inverse: permutations must act on 2n points");
  const Permutation tau = Permutation::tau(n);
  const Permutation iota = v * tau;
  const Permutation w = product(2 * n, involution_factorization(Matching::from_permutation(iota), n));
  const Permutation eta = w * h;
  return {eta, tau * eta * tau};
}

Partition coset_type(const Permutation& sigma, int n) {
  guard(sigma.size() == 2 * n, "coset_type: permutation must act on 2n points");
  const Permutation tau = Permutation::tau(n);
  return half_type(cycle_type(sigma * tau * sigma.inverse() * tau));
}

Integer coset_product_coefficient(const Partition& mu, const Partition& lambda, int n) {
  guard(n >= 1 && n <= 3, "coset_product_coefficient: n must be in [1, 3]");
  guard(mu.size() == n && lambda.size() == n, "coset_product_coefficient: partitions must have size n");
  std::vector<Permutation> k_mu;
  for (const auto& s : all_permutations(2 * n)) {
    if (coset_type(s, n) == mu) k_mu.push_back(s);
  }
  const Permutation& z = k_mu.front();
  Integer count = 0;
  for (const auto& x : k_mu) {
    if (coset_type(x.inverse() * z, n) == lambda) count += 1;
  }
  return count;
}

Integer double_coset_size(const Partition& lambda, int n) {
  guard(n >= 1 && n <= 4, "double_coset_size: n must be in [1, 4]");
  guard(lambda.size() == n, "double_coset_size: partition must have size n");
  Integer count = 0;
  for (const auto& s : all_permutations(2 * n)) {
    if (coset_type(s, n) == lambda) count += 1;
  }
  return count;
}

Rational zonal_spherical_direct(const Partition& rho, const Partition& lambda, int n) {
  guard(n >= 1 && n <= 4, "zonal_spherical_direct: n must be in [1, 4]");
  guard(rho.size() == n && lambda.size() == n, "zonal_spherical_direct: partitions must have size n");
  std::vector<Permutation> reps;
  for (const auto& s : all_permutations(2 * n)) {
    if (coset_type(s, n) == lambda) {
      reps.push_back(s);
      if (reps.size() == 2) break;
    }
  }
  const auto hs = enumerate_hyperoctahedral(n);
  const Partition shape = rho.doubled();
  std::vector<Rational> values;
  for (const auto& x : reps) {
    Rational sum = 0;
    for (const auto& h : hs) sum += Rational(character(shape, cycle_type(x * h)));
    values.push_back(sum / hyperoctahedral_order(n));
  }
  if (values.size() == 2 && values[0] != values[1]) {
    throw std::logic_error("zonal_spherical_direct: value depends on the representative");
  }
  return values.front();
}

Rational oracle_monotone_hurwitz(int genus, int n) {
  guard(genus >= 1 && genus <= 3, "oracle_monotone_hurwitz: genus must be in [1, 3]");
  guard(n >= 1 && n <= 5, "oracle_monotone_hurwitz: n must be in [1, 5]");
  const int k = 2 * genus - 2;
  // All strictly monotone sequences of length k, grouped by their product.
  std::map<Permutation, std::vector<std::vector<Transposition>>> by_product;
  std::vector<Transposition> seq;
  std::function<void(int)> rec = [&](int min_b) {
    if (static_cast<int>(seq.size()) == k) {
      by_product[product(n, seq)].push_back(seq);
      return;
    }
    for (int b = min_b; b < n; ++b) {
      for (int a = 0; a < b; ++a) {
        seq.emplace_back(a, b);
        rec(b + 1);
        seq.pop_back();
      }
    }
  };
  rec(1);
  const auto perms = all_permutations(n);
  Integer count = 0;
  for (const auto& s : perms) {
    for (const auto& r : perms) {
      auto it = by_product.find(commutator(s, r).inverse());
      if (it == by_product.end()) continue;
      for (const auto& ts : it->second) {
        UnionFind uf(n);
        for (int x = 0; x < n; ++x) {
          uf.unite(x, s(x));
          uf.unite(x, r(x));
        }
        for (const auto& [a, b] : ts) uf.unite(a, b);
        if (uf.components <= 1) count += 1;
      }
    }
  }
  return Rational(count) / Rational(factorial(static_cast<unsigned>(n)));
}

}  // namespace origami
