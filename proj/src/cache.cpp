#include "origami/cache.hpp"

#include "origami/characters.hpp"
#include "origami/jack.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

// File layout:
//   origami-cache <version>
//   chi <λ> <μ> <value>
//   jack <n> <α> <λ> <μ>:<coeff> <μ>:<coeff> ...

namespace origami {

namespace {

constexpr const char* kFileName = "origami-cache.txt";

std::string header() { return "origami-cache " + std::to_string(kCacheFormatVersion); }

[[noreturn]] void malformed(std::size_t line_no) {
  throw std::runtime_error("cache file: malformed record on line " + std::to_string(line_no));
}

}  // namespace

std::optional<std::filesystem::path> cache_dir_from_env() {
  const char* v = std::getenv("ORIGAMI_CACHE_DIR");
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::filesystem::path(v);
}

std::size_t load_cache(const std::filesystem::path& dir) {
  std::ifstream in(dir / kFileName);
  if (!in) return 0;
  std::string line;
  if (!std::getline(in, line) || line != header()) return 0;

  // (n, α) → λ → m-expansion
  std::map<std::pair<int, std::string>, std::map<Partition, SymFunc, ReverseLex>> jack_rows;
  std::size_t records = 0;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string kind;
    fields >> kind;
    try {
      if (kind == "chi") {
        std::string lambda, mu, value;
        if (!(fields >> lambda >> mu >> value)) malformed(line_no);
        CharacterTable::shared().insert(parse_partition(lambda), parse_partition(mu), Integer(value));
      } else if (kind == "jack") {
        int n = 0;
        std::string alpha, lambda, term;
        if (!(fields >> n >> alpha >> lambda)) malformed(line_no);
        SymFunc m(Basis::kMonomial, n);
        while (fields >> term) {
          auto colon = term.find(':');
          if (colon == std::string::npos) malformed(line_no);
          m.add(parse_partition(term.substr(0, colon)), parse_rational(term.substr(colon + 1)));
        }
        jack_rows[{n, alpha}].insert_or_assign(parse_partition(lambda), std::move(m));
      } else {
        malformed(line_no);
      }
    } catch (const std::invalid_argument&) {
      malformed(line_no);
    }
    ++records;
  }
  for (auto& [key, rows] : jack_rows) {
    std::vector<SymFunc> expansions;
    for (auto& [lambda, m] : rows) expansions.push_back(std::move(m));
    try {
      insert_jack_family(key.first, parse_rational(key.second), expansions);
    } catch (const std::invalid_argument&) {
      throw std::runtime_error("cache file: incomplete Jack family");
    }
  }
  return records;
}

void save_cache(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto target = dir / kFileName;
  const auto tmp = dir / (std::string(kFileName) + ".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << header() << '\n';
    for (const auto& [key, value] : CharacterTable::shared().entries()) {
      out << "chi " << to_string(key.first) << ' ' << to_string(key.second) << ' ' << to_string(value) << '\n';
    }
    for (const auto& family : cached_jack_families()) {
      for (const auto& j : *family) {
        out << "jack " << j.index.size() << ' ' << to_string(j.alpha) << ' ' << to_string(j.index);
        for (const auto& [mu, c] : j.expansion_m.terms()) {
          out << ' ' << to_string(mu) << ':' << to_string(c);
        }
        out << '\n';
      }
    }
    if (!out) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace origami
