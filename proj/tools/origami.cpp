// Command-line front end. Exit codes: 0 success, 1 verification mismatch,
// 2 invalid configuration.

#include "origami/cache.hpp"
#include "origami/characters.hpp"
#include "origami/format.hpp"
#include "origami/jack.hpp"
#include "origami/origami_series.hpp"
#include "origami/parallel.hpp"
#include "origami/perm_oracle.hpp"
#include "origami/qseries.hpp"
#include "origami/symfunc.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

using namespace origami;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;

struct Options {
  std::string format;  // empty: command default
  std::string out_path;
  unsigned threads = 0;
  double max_seconds = 0;

  int n = 0;
  int max_n = 0;
  int max_q = 20;
  int genus = 2;
  int c = 1;
  bool connected = false;
  std::string alpha = "1";
  std::string flavor;
  std::string variant = "real";
  std::string f = "P1";
  std::string target;
  std::string basis;
  int n_train = 10;
  int n_test = 10;
};

struct Result {
  std::string text;
  int code = 0;
};

OutputFormat format_or(const Options& o, OutputFormat fallback) {
  return o.format.empty() ? fallback : parse_format(o.format);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

Json coefficients_object(const SymFunc& f) {
  Json j = Json::object();
  for (const auto& [lambda, c] : f.terms()) j[to_string(lambda)] = to_string(c);
  return j;
}

Result emit_layer(const Options& o, const std::string& flavor, const SymFunc& layer, int cover_degree) {
  switch (format_or(o, OutputFormat::kJson)) {
    case OutputFormat::kLatex:
      return {to_latex(layer) + "\n"};
    case OutputFormat::kCsv:
      return {coefficients_csv(layer)};
    case OutputFormat::kJson:
      break;
  }
  Json j;
  j["flavor"] = flavor;
  j["connected"] = o.connected;
  j["n"] = layer.degree();
  j["cover_degree"] = cover_degree;
  j["coefficients"] = coefficients_object(layer);
  return {j.dump(2) + "\n"};
}

Result emit_qseries(const Options& o, const QSeries& s) {
  switch (format_or(o, OutputFormat::kJson)) {
    case OutputFormat::kLatex:
      return {to_latex(s) + "\n"};
    case OutputFormat::kCsv:
      return {qseries_csv(s)};
    case OutputFormat::kJson:
      break;
  }
  return {qseries_json(s) + "\n"};
}

Result emit_scalar(const Options& o, const Rational& v) {
  if (!o.format.empty() && parse_format(o.format) == OutputFormat::kJson) {
    return {Json(to_string(v)).dump() + "\n"};
  }
  return {to_string(v) + "\n"};
}

Result cmd_complex(const Options& o) {
  require(o.n >= 1 && o.n <= 18, "--n must be in [1, 18]");
  return emit_layer(o, "complex", complex_series(o.n, o.connected).layer(o.n), o.n);
}

Result cmd_real(const Options& o) {
  require(o.n >= 1 && o.n <= 13, "--n must be in [1, 13]");
  return emit_layer(o, "real", real_series(o.n, o.connected).layer(o.n), 2 * o.n);
}

Result cmd_jack(const Options& o) {
  require(o.n >= 1 && o.n <= 13, "--n must be in [1, 13]");
  const Rational alpha = parse_rational(o.alpha);
  require(alpha > 0, "--alpha must be positive");
  return emit_layer(o, "jack(" + to_string(alpha) + ")", jack_series(o.n, alpha, o.connected).layer(o.n), o.n);
}

Result cmd_genus_table(const Options& o) {
  require(o.max_n >= 1 && o.max_n <= 18, "--max-n must be in [1, 18]");
  const GradedSeries q = complex_series(o.max_n, true);
  const OutputFormat fmt = format_or(o, OutputFormat::kJson);
  std::ostringstream out;
  Json j = Json::object();
  if (fmt == OutputFormat::kCsv) out << "n,g,H\n";
  for (int n = 1; n <= o.max_n; ++n) {
    Json row = Json::object();
    for (const auto& [g, v] : genus_table(q, n)) {
      if (fmt == OutputFormat::kCsv) out << n << ',' << g << ',' << to_string(v) << '\n';
      if (fmt == OutputFormat::kLatex) out << n << " & " << g << " & " << latex_rational(v) << " \\\\\n";
      row[std::to_string(g)] = to_string(v);
    }
    j[std::to_string(n)] = row;
  }
  if (fmt == OutputFormat::kJson) return {j.dump(2) + "\n"};
  return {out.str()};
}

Result cmd_h11(const Options& o) {
  require(o.n >= 1, "--n must be positive");
  return emit_scalar(o, n_real_h11(o.n));
}

Result cmd_h22(const Options& o) {
  require(o.max_q >= 1 && o.max_q <= 5000, "--max-q must be in [1, 5000]");
  return emit_qseries(o, real_h22_series(o.max_q));
}

Result cmd_qbracket(const Options& o) {
  require(o.max_q >= 0 && o.max_q <= 40, "--max-q must be in [0, 40]");
  std::function<Rational(const Partition&)> f;
  if (o.f == "one") {
    f = [](const Partition&) { return Rational(1); };
  } else if (o.f == "nu") {
    f = nu;
  } else if (o.f == "nu_real") {
    f = nu_real;
  } else if (o.f.size() >= 2 && (o.f[0] == 'P' || o.f[0] == 'R')) {
    int ell = 0;
    try {
      ell = std::stoi(o.f.substr(1));
    } catch (const std::exception&) {
      throw std::invalid_argument("--f: expected P<k>, R<k>, nu, nu_real or one");
    }
    require(ell >= 1, "--f: shifted power sum index must be positive");
    const ShiftVariant v = o.f[0] == 'P' ? ShiftVariant::kComplex : ShiftVariant::kReal;
    f = [ell, v](const Partition& lambda) { return shifted_power_sum(lambda, ell, v); };
  } else {
    throw std::invalid_argument("--f: expected P<k>, R<k>, nu, nu_real or one");
  }
  return emit_qseries(o, q_bracket(f, o.max_q));
}

QSeries connected_series(ShiftVariant variant, int genus, int max_q) {
  const int j = variant == ShiftVariant::kComplex ? 2 * genus - 2 : genus - 1;
  const auto conn = connected_extract(bivariate_cover_series(variant, max_q, j), variant);
  QSeries s(max_q);
  for (int d = 1; d <= max_q; ++d) s[d] = conn.at({genus, d});
  return s;
}

ShiftVariant parse_variant(const std::string& v) {
  if (v == "real") return ShiftVariant::kReal;
  if (v == "complex") return ShiftVariant::kComplex;
  throw std::invalid_argument("--variant must be real or complex");
}

Result cmd_fcover(const Options& o) {
  require(o.genus >= 1 && o.genus <= 8, "--genus must be in [1, 8]");
  require(o.max_q >= 1 && o.max_q <= 40, "--max-q must be in [1, 40]");
  if (o.genus >= 3) {
    std::cerr << "note: connected counts for genus ≥ 3 are experimental\n";
  }
  return emit_qseries(o, connected_series(parse_variant(o.variant), o.genus, o.max_q));
}

Result cmd_fit(const Options& o) {
  require(o.n_train >= 1 && o.n_test >= 0, "--n-train must be positive and --n-test nonnegative");
  const int max_q = o.n_train + o.n_test - 1;
  require(max_q <= 60, "--n-train + --n-test must be at most 61");
  QSeries target(max_q);
  if (o.target == "h22") {
    target = real_h22_series(max_q);
  } else if (o.target == "h11") {
    target = QSeries(max_q);
    for (int d = 1; d <= max_q; ++d) target[d] = n_real_h11(d);
  } else if (o.target == "F2") {
    target = connected_series(ShiftVariant::kComplex, 2, max_q);
  } else if (o.target == "FR2") {
    target = connected_series(ShiftVariant::kReal, 2, max_q);
  } else if (o.target == "T2") {
    target = QSeries(max_q);
    for (int d = 1; d <= max_q; ++d) target[d] = t_cover(2, d, ShiftVariant::kComplex);
  } else {
    throw std::invalid_argument("--target must be one of h22, h11, F2, FR2, T2");
  }
  std::vector<std::string> names;
  std::vector<QSeries> basis;
  std::stringstream tokens(o.basis);
  for (std::string tok; std::getline(tokens, tok, ',');) {
    if (tok == "QM6" || tok == "QM4" || tok == "QM2") {
      for (auto& [label, s] : quasimodular_basis(tok[2] - '0', max_q)) {
        names.push_back(label);
        basis.push_back(std::move(s));
      }
    } else if (tok == "E2sq") {
      const QSeries e2 = eisenstein(2, max_q);
      names.push_back(tok);
      basis.push_back(e2 * e2);
    } else if (tok.size() >= 2 && tok[0] == 'E') {
      int k = 0;
      try {
        k = std::stoi(tok.substr(1));
      } catch (const std::exception&) {
        throw std::invalid_argument("--basis: bad token " + tok);
      }
      names.push_back(tok);
      basis.push_back(eisenstein(k, max_q));
    } else if (tok == "1") {
      names.push_back(tok);
      basis.push_back(QSeries::constant(1, max_q));
    } else {
      throw std::invalid_argument("--basis: bad token " + tok);
    }
  }
  require(!basis.empty(), "--basis is required");
  auto fit = linear_fit(target, basis, o.n_train, o.n_test);
  Json j;
  j["target"] = o.target;
  if (!fit) {
    j["solution"] = nullptr;
    return {j.dump(2) + "\n", kExitMismatch};
  }
  Json sol = Json::object();
  for (std::size_t i = 0; i < names.size(); ++i) sol[names[i]] = to_string((*fit)[i]);
  j["solution"] = sol;
  return {j.dump(2) + "\n"};
}

Result cmd_oracle(const Options& o) {
  std::map<Partition, Rational, ReverseLex> counts;
  SymFunc series(Basis::kPower, o.n);
  if (o.flavor == "complex") {
    require(o.n >= 1 && o.n <= 7, "--n must be in [1, 7] for the complex oracle");
    counts = oracle_complex_counts(o.n, o.connected);
    series = complex_series(o.n, o.connected).layer(o.n);
  } else if (o.flavor == "real" || o.flavor == "mirror") {
    require(o.n >= 1 && o.n <= 5, "--n must be in [1, 5] for the real and mirror oracles");
    counts = o.flavor == "real" ? oracle_real_counts(o.n, o.connected) : oracle_mirror_counts(o.n, o.connected);
    series = real_series(o.n, o.connected).layer(o.n);
  } else {
    throw std::invalid_argument("--flavor must be real, complex or mirror");
  }
  Json found = Json::object();
  for (const auto& [lambda, c] : counts) found[to_string(lambda)] = to_string(c);
  Json diff = Json::object();
  for (const auto& lambda : enumerate_partitions(o.n)) {
    auto it = counts.find(lambda);
    const Rational oracle = it == counts.end() ? Rational(0) : it->second;
    const Rational expected = series.coefficient(lambda);
    if (oracle != expected) {
      diff[to_string(lambda)] = {{"oracle", to_string(oracle)}, {"series", to_string(expected)}};
    }
  }
  Json j;
  j["flavor"] = o.flavor;
  j["n"] = o.n;
  j["connected"] = o.connected;
  j["counts"] = found;
  j["diff"] = diff;
  return {j.dump(2) + "\n", diff.empty() ? 0 : kExitMismatch};
}

Result cmd_tau(const Options& o) {
  require(o.n >= 1 && o.n <= 18, "--n must be in [1, 18]");
  SymFunc f = weighted_schur_sum(o.n, o.c);
  switch (format_or(o, OutputFormat::kJson)) {
    case OutputFormat::kLatex:
      return {to_latex(f) + "\n"};
    case OutputFormat::kCsv:
      return {coefficients_csv(f)};
    case OutputFormat::kJson:
      break;
  }
  Json j;
  j["n"] = o.n;
  j["c"] = o.c;
  j["coefficients"] = coefficients_object(f);
  return {j.dump(2) + "\n"};
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact enumeration of complex and real origami"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  app.add_option("--format", o.format, "json, csv or latex")->check(CLI::IsMember({"json", "csv", "latex"}));
  app.add_option("--out", o.out_path, "write output to this file instead of stdout");
  app.add_option("--threads", o.threads, "worker threads (0 = all cores)");
  app.add_option("--max-seconds", o.max_seconds, "soft time budget; a warning is printed when exceeded");

  std::map<CLI::App*, Result (*)(const Options&)> handlers;
  auto sub = [&](const char* name, const char* help, Result (*h)(const Options&)) {
    CLI::App* s = app.add_subcommand(name, help);
    handlers[s] = h;
    return s;
  };

  auto* complex = sub("complex", "complex origami polynomial Q_n (or its disconnected form)", cmd_complex);
  complex->add_option("--n", o.n, "degree")->required();
  complex->add_flag("--connected", o.connected);

  auto* real = sub("real", "real origami polynomial P_n; cover degree is 2n", cmd_real);
  real->add_option("--n", o.n, "half-degree")->required();
  real->add_flag("--connected", o.connected);

  auto* jack = sub("jack", "Jack-interpolated series layer", cmd_jack);
  jack->add_option("--n", o.n, "degree")->required();
  jack->add_option("--alpha", o.alpha, "positive rational, e.g. 3/2");
  jack->add_flag("--connected", o.connected);

  auto* genus = sub("genus-table", "connected counts H_{g,n} by genus", cmd_genus_table);
  genus->add_option("--max-n", o.max_n)->required();

  auto* h11 = sub("h11", "connected real origami of degree 2n in H(1,1)", cmd_h11);
  h11->add_option("--n", o.n)->required();

  auto* h22 = sub("h22", "generating series for real origami in H(2,2)", cmd_h22);
  h22->add_option("--max-q", o.max_q);

  auto* qb = sub("qbracket", "q-bracket of a shifted symmetric function", cmd_qbracket);
  qb->add_option("--f", o.f, "P<k>, R<k>, nu, nu_real or one");
  qb->add_option("--max-q", o.max_q);

  auto* fc = sub("fcover", "connected simply-branched torus cover series", cmd_fcover);
  fc->add_option("--variant", o.variant, "real or complex");
  fc->add_option("--genus", o.genus);
  fc->add_option("--max-q", o.max_q);

  auto* fit = sub("fit", "exact linear fit of a q-series against a basis", cmd_fit);
  fit->add_option("--target", o.target, "h22, h11, F2, FR2 or T2")->required();
  fit->add_option("--basis", o.basis, "comma list of E<k>, E2sq, 1, QM2, QM4, QM6")->required();
  fit->add_option("--n-train", o.n_train);
  fit->add_option("--n-test", o.n_test);

  auto* oracle = sub("oracle", "exhaustive permutation count compared with the series", cmd_oracle);
  oracle->add_option("--flavor", o.flavor, "real, complex or mirror")->required();
  oracle->add_option("--n", o.n)->required();
  oracle->add_flag("--connected", o.connected);

  auto* tau = sub("tau", "weighted Schur sum Σ d_λ^c s_λ in the p basis", cmd_tau);
  tau->add_option("--n", o.n)->required();
  tau->add_option("--c", o.c, "exponent of d_λ (may be negative)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInvalid;
  }

  set_worker_threads(o.threads);
  const auto cache_dir = cache_dir_from_env();
  const auto start = std::chrono::steady_clock::now();
  Result result;
  try {
    if (cache_dir) load_cache(*cache_dir);
    for (const auto& [s, handler] : handlers) {
      if (s->parsed()) result = handler(o);
    }
    if (cache_dir) save_cache(*cache_dir);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.max_seconds > 0 && elapsed > o.max_seconds) {
    std::cerr << "warning: took " << elapsed << " s, over the " << o.max_seconds << " s budget\n";
  }

  if (o.out_path.empty()) {
    std::cout << result.text;
  } else {
    std::ofstream out(o.out_path);
    if (!out) {
      std::cerr << "error: cannot open " << o.out_path << "\n";
      return kExitInvalid;
    }
    out << result.text;
  }
  return result.code;
}
