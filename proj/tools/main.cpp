// partalg: command-line front end for the partition algebra library.

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

#include "partalg/algebra.hpp"
#include "partalg/characters.hpp"
#include "partalg/combinatorics.hpp"
#include "partalg/error.hpp"
#include "partalg/tableaux.hpp"
#include "partalg/tensorrep.hpp"
#include "verify.hpp"

using namespace partalg;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { ok = 0, verification_failed = 1, usage = 2, budget_exceeded = 3 };

struct Config {
  std::string k_text;
  int n = 0;
  std::string basis;
  std::string format = "text";
  std::size_t budget = kDefaultBudget;
  std::uint64_t seed = 1;
  std::string mode = "abstract";
};

// "2", "2.5" or "5/2" -> 2k
int parse_level(const std::string& text) {
  auto fail = [&] { throw Error(ErrorKind::invalid_argument, "cannot read k from '" + text + "'"); };
  if (text.empty()) fail();
  try {
    std::size_t used = 0;
    if (auto slash = text.find('/'); slash != std::string::npos) {
      int num = std::stoi(text.substr(0, slash), &used);
      if (used != slash || text.substr(slash + 1) != "2" || num < 0) fail();
      return num;
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
      int whole = std::stoi(text.substr(0, dot), &used);
      if (used != dot || whole < 0) fail();
      std::string frac = text.substr(dot + 1);
      if (frac == "5") return 2 * whole + 1;
      if (frac == "0") return 2 * whole;
      fail();
    }
    int whole = std::stoi(text, &used);
    if (used != text.size() || whole < 0) fail();
    return 2 * whole;
  } catch (const std::logic_error&) {
    fail();
  }
  return 0;
}

std::string level_text(int two_k) {
  return std::to_string(two_k / 2) + (two_k % 2 ? ".5" : "");
}

// Metadata header shared by every output format.
class Output {
 public:
  Output(std::string command, const Config& cfg) : cfg_(cfg) {
    meta_ = {{"tool", "partalg"}, {"version", kVersion}, {"command", std::move(command)}};
  }
  void meta(const std::string& key, json value) { meta_[key] = std::move(value); }

  void emit(const json& result, const std::string& text) const {
    if (cfg_.format == "json") {
      std::cout << json{{"meta", meta_}, {"result", result}}.dump(2) << '\n';
      return;
    }
    const char* comment = cfg_.format == "dot" ? "// " : "# ";
    std::cout << comment;
    bool first = true;
    for (const auto& [key, value] : meta_.items()) {
      std::cout << (first ? "" : " ") << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump());
      first = false;
    }
    std::cout << '\n' << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  }

 private:
  const Config& cfg_;
  json meta_;
};

void require_format(const Config& cfg, std::initializer_list<const char*> allowed) {
  for (auto f : allowed)
    if (cfg.format == f) return;
  throw Error(ErrorKind::invalid_argument, "format '" + cfg.format + "' is not available here");
}

int require_n(const Config& cfg) {
  if (cfg.n < 1) throw Error(ErrorKind::invalid_argument, "--n is required and must be positive");
  return cfg.n;
}

int require_k(const Config& cfg) {
  if (cfg.k_text.empty()) throw Error(ErrorKind::invalid_argument, "--k is required");
  return parse_level(cfg.k_text);
}

// Level from --k, or the smallest integer level that fits the element text.
int level_for(const Config& cfg, const std::string& text) {
  if (!cfg.k_text.empty()) return parse_level(cfg.k_text);
  std::size_t open = text.find('{');
  if (open == std::string::npos || text.find_first_not_of(" \t") == open)
    throw Error(ErrorKind::invalid_argument, "--k is required");
  std::size_t close = text.find('}', open);
  auto pi = SetPartition::parse(text.substr(open + 1, close - open - 1));
  return static_cast<int>(pi.size());
}

// -- table -------------------------------------------------------------------

int cmd_table(const Config& cfg, const std::string& max_k_text, int max_n) {
  require_format(cfg, {"csv", "json", "text"});
  int max_two_k = parse_level(max_k_text);
  if (max_two_k < 1 || max_n < 2) throw Error(ErrorKind::invalid_argument, "table needs k >= 1/2 and n >= 2");
  Output out("table", cfg);
  out.meta("max_k", level_text(max_two_k));
  out.meta("max_n", max_n);
  json rows = json::array();
  std::ostringstream csv, text;
  csv << "k";
  text << std::setw(5) << "k";
  for (int n = 2; n <= max_n; ++n) {
    csv << ",\"B(2k," << n << ")\"";
    text << std::setw(10) << ("n=" + std::to_string(n));
  }
  csv << ",B(2k)\n";
  text << std::setw(12) << "B(2k)" << '\n';
  for (int two_k = 1; two_k <= max_two_k; ++two_k) {
    json row = {{"k", level_text(two_k)}};
    json values = json::array();
    csv << level_text(two_k);
    text << std::setw(5) << level_text(two_k);
    for (int n = 2; n <= max_n; ++n) {
      auto v = to_string(restricted_bell(two_k, n));
      values.push_back(v);
      csv << ',' << v;
      text << std::setw(10) << v;
    }
    auto b = to_string(bell(two_k));
    row["restricted"] = values;
    row["bell"] = b;
    rows.push_back(row);
    csv << ',' << b << '\n';
    text << std::setw(12) << b << '\n';
  }
  out.emit(rows, cfg.format == "csv" ? csv.str() : text.str());
  return ok;
}

// -- verify ------------------------------------------------------------------

int cmd_verify(const Config& cfg, const std::string& suite) {
  require_format(cfg, {"json", "text"});
  cli::VerifyOptions opt{cfg.seed, cfg.budget};
  auto results = cli::run_suite(suite, opt);
  Output out("verify", cfg);
  out.meta("suite", suite);
  out.meta("seed", cfg.seed);
  out.meta("budget", cfg.budget);
  json checks = json::array();
  std::ostringstream text;
  int passed = 0, failed = 0, skipped = 0;
  for (const auto& r : results) {
    checks.push_back(cli::to_json(r));
    passed += r.status == cli::CheckStatus::pass;
    failed += r.status == cli::CheckStatus::fail;
    skipped += r.status == cli::CheckStatus::skipped;
    text << std::left << std::setw(8) << cli::to_string(r.status) << std::setw(14) << r.suite
         << std::setw(36) << r.name << std::right << std::fixed << std::setprecision(2)
         << std::setw(8) << r.seconds << "s";
    if (!r.detail.empty()) text << "  " << r.detail;
    text << '\n';
  }
  text << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
  json report = {{"checks", checks},
                 {"summary", {{"passed", passed}, {"failed", failed}, {"skipped", skipped}}}};
  out.emit(report, text.str());
  return failed ? verification_failed : ok;
}

// -- algebra -----------------------------------------------------------------

int cmd_mult(const Config& cfg, const std::string& a_text, const std::string& b_text) {
  require_format(cfg, {"json", "text"});
  int n = require_n(cfg);
  int two_k = level_for(cfg, a_text);
  auto a = parse_element(a_text, two_k, n);
  auto b = parse_element(b_text, two_k, n);
  Basis basis = cfg.basis.empty() ? a.basis() : parse_basis(cfg.basis);
  OrbitMode mode = cfg.mode == "image" ? OrbitMode::image : OrbitMode::abstract;
  if (cfg.mode != "image" && cfg.mode != "abstract")
    throw Error(ErrorKind::invalid_argument, "--mode is abstract or image");
  Element product = basis == Basis::orbit || mode == OrbitMode::image
                        ? multiply_orbit(a, b, mode)
                        : multiply(a, b);
  product = to_basis(product, basis);
  Output out("mult", cfg);
  out.meta("k", level_text(two_k));
  out.meta("n", n);
  out.meta("basis", to_string(basis));
  out.meta("mode", cfg.mode);
  out.emit(product.to_json(), product.to_string());
  return ok;
}

int cmd_convert(const Config& cfg, const std::string& text) {
  require_format(cfg, {"json", "text"});
  int n = require_n(cfg);
  int two_k = level_for(cfg, text);
  auto e = parse_element(text, two_k, n);
  Basis target = cfg.basis.empty() ? (e.basis() == Basis::diagram ? Basis::orbit : Basis::diagram)
                                   : parse_basis(cfg.basis);
  auto r = to_basis(e, target);
  Output out("convert", cfg);
  out.meta("k", level_text(two_k));
  out.meta("n", n);
  out.meta("basis", to_string(target));
  out.emit(r.to_json(), r.to_string());
  return ok;
}

int cmd_phi(const Config& cfg, const std::string& text) {
  require_format(cfg, {"json", "text", "csv"});
  int n = require_n(cfg);
  int two_k = level_for(cfg, text);
  auto e = parse_element(text, two_k, n);
  auto m = represent(e, cfg.budget);
  Output out("phi", cfg);
  out.meta("k", level_text(two_k));
  out.meta("n", n);
  out.meta("basis", to_string(e.basis()));
  out.meta("dim", m.dim());
  std::string body = m.to_triples();
  if (cfg.format == "csv") {
    std::string csv = "row,col,value\n";
    for (char& c : body)
      if (c == ' ') c = ',';
    body = csv + body;
  }
  out.emit(m.to_json(n, two_k / 2), body);
  return ok;
}

// -- combinatorics -----------------------------------------------------------

int cmd_bratteli(const Config& cfg) {
  require_format(cfg, {"json", "dot", "text"});
  int n = require_n(cfg);
  int two_k = require_k(cfg);
  auto b = build_bratteli(n, two_k);
  Output out("bratteli", cfg);
  out.meta("k", level_text(two_k));
  out.meta("n", n);
  std::ostringstream text;
  for (int t = 0; t <= two_k; ++t) {
    BigInt squares = 0;
    text << std::setw(5) << level_text(t) << " :";
    for (const auto& v : b.level(t)) {
      text << ' ' << v.shape.to_string() << ':' << to_string(v.paths);
      squares += v.paths * v.paths;
    }
    text << "   sum of squares " << to_string(squares) << '\n';
  }
  out.emit(b.to_json(), cfg.format == "dot" ? b.to_dot() : text.str());
  return ok;
}

int cmd_bijection(const Config& cfg, const std::string& input) {
  require_format(cfg, {"json", "text"});
  std::size_t first = input.find_first_not_of(" \t");
  if (first == std::string::npos) throw Error(ErrorKind::invalid_argument, "empty input");
  std::vector<BijectionStep> forward, backward;
  SetPartitionTableau spt;
  VacillatingTableau vt;
  std::string direction;
  if (input[first] == '(') {
    vt = VacillatingTableau::parse(input);
    spt = bijection_B(vt, &forward);
    direction = "B";
    if (bijection_A(spt, &backward) != vt) return verification_failed;
  } else {
    spt = input[first] == '{' ? SetPartitionTableau::from_json(json::parse(input))
                              : SetPartitionTableau::parse(input);
    vt = bijection_A(spt, &forward);
    direction = "A";
    if (bijection_B(vt, &backward) != spt) return verification_failed;
  }
  if (cfg.n && cfg.n != spt.n) throw Error(ErrorKind::dimension, "--n does not match the input");
  Output out("bijection", cfg);
  out.meta("k", spt.k);
  out.meta("n", spt.n);
  out.meta("direction", direction);
  std::ostringstream text;
  text << "set-partition tableau: " << spt.to_string() << '\n'
       << "set partition: " << (spt.k ? spt.set_partition().to_string() : std::string("{}")) << '\n'
       << "vacillating tableau: " << vt.to_string() << '\n'
       << "shape " << vt.shape().to_string() << ", length " << vt.length() << '\n'
       << "algorithm " << direction << " trace:\n"
       << format_trace(forward) << "round trip: ok\n";
  json trace = json::array();
  for (const auto& st : forward)
    trace.push_back({{"level", level_text(st.two_level)}, {"rows", format_rows(st.rows)}});
  json result = {{"set_partition_tableau", spt.to_json()},
                 {"vacillating_tableau", vt.to_json()},
                 {"trace", trace},
                 {"round_trip", true}};
  if (vt.length() % 2 == 0 && vt.shape() == IntegerPartition::row(vt.n)) {
    auto [a, b] = halves_split(vt);
    text << "halves: " << a.to_string() << " and " << b.to_string() << '\n';
    result["halves"] = {a.to_json(), b.to_json()};
  }
  out.emit(result, text.str());
  return ok;
}

// -- characters --------------------------------------------------------------

int cmd_char(const Config& cfg, const std::string& lambda_text, const std::string& mu_text) {
  require_format(cfg, {"json", "csv", "text"});
  int n = require_n(cfg);
  Output out("char", cfg);
  out.meta("n", n);
  if (cfg.k_text.empty()) {
    auto table = character_table(n);
    json rows = json::array();
    for (const auto& row : table) {
      json values = json::array();
      for (const auto& v : row.values) values.push_back(to_string(v));
      rows.push_back({{"lambda", row.lambda.to_string()}, {"values", values}});
    }
    json classes = json::array();
    for (const auto& c : conjugacy_classes(n))
      classes.push_back({{"delta", c.delta.to_string()}, {"size", to_string(c.size)}, {"z", to_string(c.z)}});
    out.emit({{"classes", classes}, {"rows", rows}}, character_table_csv(n));
    return ok;
  }
  int two_k = require_k(cfg);
  if (two_k % 2) throw Error(ErrorKind::parity, "characters are given for integer k");
  int k = two_k / 2;
  out.meta("k", k);
  json records = json::array();
  std::ostringstream text;
  text << "lambda,mu,value\n";
  for (const auto& lambda : integer_partitions(n)) {
    if (!lambda_text.empty() && lambda != IntegerPartition::parse(lambda_text)) continue;
    for (int l = 0; l <= k; ++l)
      for (const auto& mu : integer_partitions(l)) {
        if (!mu_text.empty() && mu != IntegerPartition::parse(mu_text)) continue;
        auto v = to_string(partition_algebra_character(lambda, mu, k, n));
        records.push_back({{"lambda", lambda.to_string()}, {"mu", mu.to_string()}, {"k", k}, {"n", n}, {"value", v}});
        text << '"' << lambda.to_string() << "\",\"" << mu.to_string() << "\"," << v << '\n';
      }
  }
  out.emit(records, text.str());
  return ok;
}

int cmd_dims(const Config& cfg, bool by_rank) {
  require_format(cfg, {"json", "text"});
  int n = require_n(cfg);
  int two_k = require_k(cfg);
  Output out("dims", cfg);
  out.meta("k", level_text(two_k));
  out.meta("n", n);
  json result = {{"restricted_bell", to_string(restricted_bell(two_k, n))},
                 {"bell", to_string(bell(two_k))}};
  std::ostringstream text;
  text << "dim P_k(n) = B(2k) = " << to_string(bell(two_k)) << '\n'
       << "dim centralizer = B(2k,n) = " << to_string(restricted_bell(two_k, n)) << '\n';
  json mults = json::array();
  BigInt squares = 0;
  if (two_k % 2 == 0) {
    for (const auto& lambda : integer_partitions(n)) {
      BigInt m = multiplicity(lambda, two_k / 2, n, MultiplicityMethod::stirling_skew);
      BigInt c = multiplicity(lambda, two_k / 2, n, MultiplicityMethod::character);
      BigInt b = multiplicity(lambda, two_k / 2, n, MultiplicityMethod::bratteli);
      if (m != c || m != b) return verification_failed;
      squares += m * m;
      mults.push_back({{"shape", lambda.to_string()}, {"multiplicity", to_string(m)}});
      text << "  " << lambda.to_string() << ": " << to_string(m) << '\n';
    }
  } else {
    for (const auto& mu : integer_partitions(n - 1)) {
      BigInt m = half_multiplicity(mu, two_k / 2, n, MultiplicityMethod::stirling_skew);
      if (m != half_multiplicity(mu, two_k / 2, n, MultiplicityMethod::character))
        return verification_failed;
      squares += m * m;
      mults.push_back({{"shape", mu.to_string()}, {"multiplicity", to_string(m)}});
      text << "  " << mu.to_string() << ": " << to_string(m) << '\n';
    }
  }
  text << "sum of squared multiplicities = " << to_string(squares) << '\n';
  result["multiplicities"] = mults;
  result["sum_of_squares"] = to_string(squares);
  if (by_rank) {
    auto rank = image_dimension(two_k, n, ImagePath::matrices, cfg.budget);
    result["rank"] = rank;
    text << "rank of the image = " << rank << '\n';
  }
  out.emit(result, text.str());
  return squares == restricted_bell(two_k, n) ? ok : verification_failed;
}

void add_common(CLI::App* sub, Config& cfg) {
  sub->add_option("--n", cfg.n, "parameter n");
  sub->add_option("--k", cfg.k_text, "level k (integer, or half-integer as 2.5 or 5/2)");
  sub->add_option("--basis", cfg.basis, "diagram or orbit");
  sub->add_option("--format", cfg.format, "json, csv, dot or text");
  sub->add_option("--budget", cfg.budget, "largest matrix dimension n^k to build")
      ->check(CLI::PositiveNumber);
  sub->add_option("--seed", cfg.seed, "seed for randomized checks");
  sub->add_option("--mode", cfg.mode, "abstract or image (orbit products)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in partition algebras P_k(n)"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Config cfg;

  std::string max_k = "6";
  int max_n = 8;
  auto* table = app.add_subcommand("table", "restricted Bell numbers B(2k,n) and B(2k)");
  add_common(table, cfg);
  table->add_option("--max-k", max_k, "last row");
  table->add_option("--max-n", max_n, "last column");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  add_common(verify, cfg);
  verify->add_option("suite", suite, "bases, homomorphism, idempotents, kernel, bijection, characters, identities or all");

  std::string a, b;
  auto* mult = app.add_subcommand("mult", "multiply two elements");
  add_common(mult, cfg);
  mult->add_option("a", a, "left factor, e.g. \"d{1,2|3,4}\"")->required();
  mult->add_option("b", b, "right factor")->required();

  auto* convert = app.add_subcommand("convert", "change between diagram and orbit bases");
  add_common(convert, cfg);
  convert->add_option("element", a)->required();

  auto* phi_cmd = app.add_subcommand("phi", "matrix of an element on the tensor power");
  add_common(phi_cmd, cfg);
  phi_cmd->add_option("element", a)->required();

  auto* bratteli = app.add_subcommand("bratteli", "Bratteli diagram for (S_n, S_{n-1})");
  add_common(bratteli, cfg);

  auto* bijection = app.add_subcommand("bijection", "set-partition tableau <-> vacillating tableau");
  add_common(bijection, cfg);
  bijection->add_option("tableau", a, "\"[0][6] / [2][4,7] / [1,3,5]\", JSON, or \"([3],[2],...)\"")->required();

  std::string lambda, mu;
  auto* chr = app.add_subcommand("char", "symmetric group or partition algebra characters");
  add_common(chr, cfg);
  chr->add_option("--lambda", lambda, "restrict to one irreducible");
  chr->add_option("--mu", mu, "restrict to one gamma_mu");

  bool by_rank = false;
  auto* dims = app.add_subcommand("dims", "dimensions and multiplicities at one level");
  add_common(dims, cfg);
  dims->add_flag("--rank", by_rank, "also compute the image dimension by exact rank");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*table) return cmd_table(cfg, max_k, max_n);
    if (*verify) return cmd_verify(cfg, suite);
    if (*mult) return cmd_mult(cfg, a, b);
    if (*convert) return cmd_convert(cfg, a);
    if (*phi_cmd) return cmd_phi(cfg, a);
    if (*bratteli) return cmd_bratteli(cfg);
    if (*bijection) return cmd_bijection(cfg, a);
    if (*chr) return cmd_char(cfg, lambda, mu);
    if (*dims) return cmd_dims(cfg, by_rank);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::budget ? budget_exceeded : usage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  }
  return usage;
}
