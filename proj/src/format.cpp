#include "origami/format.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace origami {

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "latex") return OutputFormat::kLatex;
  throw std::invalid_argument("unknown format '" + name + "' (expected json, csv or latex)");
}

std::string latex_monomial(const Partition& lambda, Basis basis) {
  if (lambda.empty()) return "1";
  const char letter = basis == Basis::kPower ? 'p' : basis == Basis::kMonomial ? 'm' : 's';
  std::string out;
  if (basis != Basis::kPower) {
    // m and s are indexed by the whole partition.
    out += letter;
    out += "_{";
    for (int i = 0; i < lambda.length(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(lambda[static_cast<std::size_t>(i)]);
    }
    return out + "}";
  }
  const auto& parts = lambda.parts();
  for (auto it = parts.rbegin(); it != parts.rend();) {
    const int part = *it;
    int mult = 0;
    while (it != parts.rend() && *it == part) {
      ++mult;
      ++it;
    }
    if (!out.empty()) out += ' ';
    out += "p_{" + std::to_string(part) + "}";
    if (mult > 1) out += "^{" + std::to_string(mult) + "}";
  }
  return out;
}

namespace {

std::string latex_term(const Rational& c, const std::string& monomial, bool first) {
  std::string sign = c < 0 ? "-" : (first ? "" : "+");
  const Integer num = abs(c.get_num());
  const Integer& den = c.get_den();
  const bool unit_monomial = monomial == "1";
  std::string body;
  if (den == 1) {
    if (unit_monomial) {
      body = to_string(num);
    } else if (num == 1) {
      body = monomial;
    } else {
      body = to_string(num) + " " + monomial;
    }
  } else {
    std::string top = unit_monomial ? to_string(num) : (num == 1 ? monomial : to_string(num) + " " + monomial);
    body = "\\frac{" + top + "}{" + to_string(den) + "}";
  }
  return sign + body;
}

}  // namespace

std::string to_latex(const SymFunc& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto& terms = f.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    out += latex_term(it->second, latex_monomial(it->first, f.basis()), out.empty());
  }
  return out;
}

std::string latex_rational(const Rational& c) { return latex_term(c, "1", true); }

std::string to_latex(const QSeries& s) {
  std::string out;
  for (int n = 0; n <= s.truncation(); ++n) {
    if (s[n] == 0) continue;
    std::string mono = n == 0 ? "1" : (n == 1 ? "q" : "q^{" + std::to_string(n) + "}");
    out += latex_term(s[n], mono, out.empty());
  }
  return out.empty() ? "0" : out;
}

std::string coefficients_json(const SymFunc& f) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [lambda, c] : f.terms()) j[to_string(lambda)] = to_string(c);
  return j.dump();
}

std::string coefficients_csv(const SymFunc& f) {
  std::ostringstream out;
  out << "partition,coefficient\n";
  for (const auto& [lambda, c] : f.terms()) out << '"' << to_string(lambda) << "\"," << to_string(c) << '\n';
  return out.str();
}

std::string qseries_json(const QSeries& s) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : s.coeffs()) arr.push_back(to_string(c));
  return arr.dump();
}

std::string qseries_csv(const QSeries& s) {
  std::ostringstream out;
  out << "n,coefficient\n";
  for (int n = 0; n <= s.truncation(); ++n) out << n << ',' << to_string(s[n]) << '\n';
  return out.str();
}

std::map<Partition, Rational, ReverseLex> parse_coefficients_json(const std::string& text) {
  std::map<Partition, Rational, ReverseLex> out;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("coefficients JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("coefficients JSON must be an object");
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) throw std::invalid_argument("coefficient for " + key + " must be a string");
    out.emplace(parse_partition(key), parse_rational(value.get<std::string>()));
  }
  return out;
}

}  // namespace origami
