#include "incline/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "incline/errors.hpp"
#include "incline/json_io.hpp"
#include "incline/sampling.hpp"
#include "incline/walk.hpp"

namespace incline::cli {

namespace {

struct RunConfig {
  std::size_t n = 3;
  std::size_t long_length = 11;
  std::size_t short_length = 5;
  std::string mode = "multiset";
  std::string primes;
  std::string incline = "boolean";
  std::string matrix;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 42;
  std::uint64_t horizon = 0;
  std::uint64_t power = 1;
  std::string walk;
  std::string out;
  bool timing = false;
};

// Theorem inequality A^(k+d) <= A^k checked by check-theorem.
constexpr std::uint64_t kTheoremIndex = 5;
constexpr std::uint64_t kTheoremPeriod = 6;
// Finite carriers with at most this many n x n matrices are enumerated in full.
constexpr std::uint64_t kExhaustiveLimit = std::uint64_t{1} << 20;

void write_report(const RunConfig& cfg, const Json& doc, std::ostream& out) {
  if (cfg.out.empty()) return;
  const std::string text = doc.dump(2) + "\n";
  if (cfg.out == "-") {
    out << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw InputError("cannot write " + cfg.out);
  file << text;
}

ReductionMode mode_of(const RunConfig& cfg) {
  auto mode = parse_reduction_mode(cfg.mode);
  if (!mode) throw InputError("unknown --mode \"" + cfg.mode + "\" (use multiset, prime-code or both)");
  return *mode;
}

PrimeLabeling labeling_of(const RunConfig& cfg, std::size_t n) {
  if (cfg.primes.empty()) return PrimeLabeling::default_for(n);
  std::vector<std::uint64_t> primes;
  std::string token;
  std::istringstream in(cfg.primes);
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      primes.push_back(std::stoull(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::logic_error&) {
      throw InputError("bad --primes entry \"" + token + "\"");
    }
  }
  try {
    return PrimeLabeling(n, std::move(primes));
  } catch (const ArgumentError& e) {
    throw InputError(std::string("--primes: ") + e.what());
  }
}

Matrix load_matrix(const std::string& path) {
  if (path.empty()) throw InputError("--matrix is required");
  const std::filesystem::path file(path);
  return matrix_from_json(read_json_file(file), file.parent_path());
}

void print_matrix(const Matrix& a, std::ostream& out) {
  std::vector<std::string> cells;
  std::size_t width = 0;
  for (const auto& e : a.entries()) {
    cells.push_back(a.incline().format(e));
    width = std::max(width, cells.back().size());
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      const std::string& c = cells[i * a.size() + j];
      out << (j ? " " : "") << std::string(width - c.size(), ' ') << c;
    }
    out << "\n";
  }
}

int cmd_verify_lemma(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n < 2 || cfg.long_length < 1 || cfg.short_length < 1) {
    throw InputError("verify-lemma needs --n >= 2, --long >= 1 and --short >= 1");
  }
  const ReductionMode mode = mode_of(cfg);
  const PrimeLabeling labels = labeling_of(cfg, cfg.n);
  VerificationReport report;
  try {
    report = verify_all(cfg.n, cfg.long_length, cfg.short_length, labels, mode);
  } catch (const ArgumentError& e) {
    throw InputError(e.what());
  }
  for (const auto& w : report.failures) {
    out << w.to_string() << " : no reduction of length " << cfg.short_length << "\n";
  }
  out << "examined = " << report.examined << "\n";
  if (mode == ReductionMode::both) out << "disagreements = " << report.disagreements.size() << "\n";
  out << "count = " << report.failures.size() << "\n";
  out << "time = " << std::chrono::duration<double, std::milli>(report.elapsed).count() << " ms\n";
  write_report(cfg, to_json(report, cfg.timing), out);
  return report.holds() ? kExitOk : kExitAssertionFailed;
}

// Calls visit(matrix) for the population selected by cfg; returns the
// population description.
std::string for_each_matrix(const RunConfig& cfg, bool trials_given, const InclinePtr& incline,
                            const std::function<void(const Matrix&)>& visit) {
  const std::size_t cells = cfg.n * cfg.n;
  if (!trials_given) {
    if (auto size = incline->cardinality()) {
      std::uint64_t population = 1;
      bool small = true;
      for (std::size_t k = 0; k < cells && small; ++k) {
        population *= *size;
        small = population <= kExhaustiveLimit;
      }
      if (small) {
        std::vector<std::size_t> digits(cells, 0);
        for (std::uint64_t m = 0; m < population; ++m) {
          std::vector<Element> entries;
          entries.reserve(cells);
          for (std::size_t d : digits) entries.push_back(incline->element_at(d));
          visit(Matrix(incline, cfg.n, std::move(entries)));
          for (std::size_t k = cells; k-- > 0;) {
            if (++digits[k] < *size) break;
            digits[k] = 0;
          }
        }
        return "exhaustive";
      }
    }
  }
  Rng rng(cfg.seed);
  for (std::uint64_t t = 0; t < cfg.trials; ++t) visit(random_matrix(incline, cfg.n, rng));
  return "sampled";
}

int cmd_check_theorem(const RunConfig& cfg, bool trials_given, std::ostream& out) {
  if (cfg.n < 2) throw InputError("check-theorem needs --n >= 2");
  auto incline = std::make_shared<const Incline>(resolve_incline(cfg.incline));
  std::uint64_t examined = 0;
  Json violations = Json::array();
  const std::string population = for_each_matrix(cfg, trials_given, incline, [&](const Matrix& a) {
    ++examined;
    if (!check_power_inequality(a, kTheoremIndex, kTheoremPeriod)) violations.push_back(to_json(a)["entries"]);
  });
  out << "incline = " << describe(incline->spec()) << "\n";
  out << "population = " << population << "\n";
  out << "examined = " << examined << "\n";
  out << "violations = " << violations.size() << "\n";

  Json doc;
  doc["incline"] = to_json(incline->spec());
  doc["n"] = cfg.n;
  doc["k"] = kTheoremIndex;
  doc["d"] = kTheoremPeriod;
  doc["population"] = population;
  if (population == "sampled") doc["seed"] = cfg.seed;
  doc["examined"] = examined;
  doc["violations"] = violations;
  write_report(cfg, doc, out);
  return violations.empty() ? kExitOk : kExitAssertionFailed;
}

int cmd_order(const RunConfig& cfg, bool horizon_given, std::ostream& out) {
  const Matrix a = load_matrix(cfg.matrix);
  std::optional<std::uint64_t> horizon;
  if (horizon_given) horizon = cfg.horizon;
  OrderReport report;
  try {
    report = order_index_period(a, horizon);
  } catch (const ArgumentError& e) {
    throw InputError(e.what());
  }
  auto show = [](const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string("not found"); };
  out << "horizon = " << report.horizon << "\n";
  out << "order-index <= " << show(report.index_bound) << "\n";
  out << "order-period <= " << show(report.period_bound) << "\n";
  for (const auto& [k, d] : report.witnesses) out << "A^" << (k + d) << " <= A^" << k << "\n";
  write_report(cfg, to_json(report), out);

  bool holds = report.index_bound.has_value() && report.period_bound.has_value();
  if (a.size() == 3 && report.horizon >= kTheoremIndex + kTheoremPeriod) {
    holds = holds && *report.index_bound <= kTheoremIndex && *report.period_bound <= kTheoremPeriod;
  }
  return holds ? kExitOk : kExitAssertionFailed;
}

int cmd_axioms(const RunConfig& cfg, bool trials_given, bool seed_given, std::ostream& out) {
  ValidationOptions options;
  if (trials_given) options.samples = cfg.trials;
  if (seed_given) options.seed = cfg.seed;
  const ValidationReport report = validate_incline(resolve_incline(cfg.incline), options);
  out << "incline = " << report.incline << "\n";
  out << (report.exhaustive ? "triples = " : "sampled triples = ") << report.triples_checked << "\n";
  for (const auto& c : report.checks) {
    out << (c.passed ? "pass " : "FAIL ") << c.law;
    if (!c.passed) out << "  " << c.message;
    out << "\n";
  }
  out << (report.valid() ? "valid" : "invalid") << "\n";
  write_report(cfg, to_json(report), out);
  return report.valid() ? kExitOk : kExitAssertionFailed;
}

int cmd_powers(const RunConfig& cfg, std::ostream& out) {
  if (cfg.power < 1) throw InputError("--power must be >= 1");
  const Matrix a = load_matrix(cfg.matrix);
  const Matrix p = mat_pow(a, cfg.power);
  out << "A^" << cfg.power << " =\n";
  print_matrix(p, out);
  Json doc = to_json(p);
  doc["power"] = cfg.power;
  write_report(cfg, doc, out);
  return kExitOk;
}

int cmd_reduce(const RunConfig& cfg, bool n_given, std::ostream& out, std::ostream& err) {
  std::size_t n = cfg.n;
  if (!n_given) {
    // Smallest vertex set containing every term.
    const Walk probe = Walk::parse(1'000'000'000, cfg.walk);
    n = std::max<std::size_t>(2, *std::max_element(probe.terms().begin(), probe.terms().end()));
  }
  const Walk v = Walk::parse(n, cfg.walk);
  if (v.length() < 1) throw InputError("--walk needs at least two terms");
  if (cfg.short_length < 1) throw InputError("--short must be >= 1");
  const ReductionMode mode = mode_of(cfg);

  std::optional<Walk> found;
  if (mode == ReductionMode::multiset) {
    found = find_reduction(v, cfg.short_length);
  } else {
    const PrimeLabeling labels = labeling_of(cfg, n);
    found = find_reduction_by_code(v, cfg.short_length, labels);
    if (mode == ReductionMode::both && find_reduction(v, cfg.short_length) != found) {
      err << "incline: multiset and prime-code searches disagree on " << v.to_string() << "\n";
      return kExitAssertionFailed;
    }
  }
  if (found) {
    out << v.to_string() << " : " << found->to_string() << "\n";
  } else {
    out << v.to_string() << " : no reduction of length " << cfg.short_length << "\n";
  }
  Json doc;
  doc["n"] = n;
  doc["walk"] = v.to_string();
  doc["short"] = cfg.short_length;
  doc["mode"] = std::string(to_string(mode));
  doc["reduction"] = found ? Json(found->to_string()) : Json(nullptr);
  write_report(cfg, doc, out);
  return found ? kExitOk : kExitAssertionFailed;
}

}  // namespace

InclineSpec resolve_incline(const std::string& name_or_path) {
  if (auto builtin = builtin_incline_spec(name_or_path)) return *builtin;
  if (!name_or_path.empty() && name_or_path.front() == '{') {
    try {
      return incline_spec_from_json(Json::parse(name_or_path));
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("invalid inline incline JSON: ") + e.what());
    }
  }
  return incline_spec_from_json(read_json_file(name_or_path));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Commutative incline matrices and walk-reduction verification", "incline"};
  app.require_subcommand(1);

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Write the JSON report to this path ('-' for stdout)");
  };
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", cfg.mode, "Reduction test: multiset, prime-code or both")->capture_default_str();
    sub->add_option("--primes", cfg.primes, "Comma-separated n*n distinct primes, row-major");
  };

  auto* verify = app.add_subcommand("verify-lemma", "Check that every long walk has a short reduction");
  verify->add_option("--n", cfg.n, "Number of vertices")->capture_default_str();
  verify->add_option("--long", cfg.long_length, "Length of the walks to reduce")->capture_default_str();
  verify->add_option("--short", cfg.short_length, "Length of the reductions")->capture_default_str();
  verify->add_flag("--timing", cfg.timing, "Include elapsed_ms in the JSON report");
  add_mode(verify);
  add_out(verify);

  auto* theorem = app.add_subcommand("check-theorem", "Check A^11 <= A^5 over a population of matrices");
  theorem->add_option("--incline", cfg.incline, "Builtin name or incline spec file")->capture_default_str();
  theorem->add_option("--n", cfg.n, "Matrix dimension")->capture_default_str();
  auto* theorem_trials = theorem->add_option("--trials", cfg.trials, "Number of random matrices");
  theorem->add_option("--seed", cfg.seed, "Seed for random matrices")->capture_default_str();
  add_out(theorem);

  auto* order = app.add_subcommand("order", "Within-horizon order-index and order-period bounds");
  order->add_option("--matrix", cfg.matrix, "Matrix file")->required();
  auto* order_horizon = order->add_option("--horizon", cfg.horizon, "Largest power compared (default 11 for n = 3)");
  add_out(order);

  auto* axioms = app.add_subcommand("axioms", "Validate the incline axioms");
  axioms->add_option("--incline", cfg.incline, "Builtin name or incline spec file")->required();
  auto* axiom_trials = axioms->add_option("--trials", cfg.trials, "Sampled triples for builtin families");
  auto* axiom_seed = axioms->add_option("--seed", cfg.seed, "Sampling seed");
  add_out(axioms);

  auto* powers = app.add_subcommand("powers", "Print A^l");
  powers->add_option("--matrix", cfg.matrix, "Matrix file")->required();
  powers->add_option("--power", cfg.power, "Exponent l >= 1")->required();
  add_out(powers);

  auto* reduce = app.add_subcommand("reduce", "Find the first reduction of a walk");
  reduce->add_option("--walk", cfg.walk, "Space- or comma-separated 1-based vertices")->required();
  auto* reduce_n = reduce->add_option("--n", cfg.n, "Number of vertices (default: largest term)");
  reduce->add_option("--short", cfg.short_length, "Length of the reduction")->capture_default_str();
  add_mode(reduce);
  add_out(reduce);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify_lemma(cfg, out);
    if (theorem->parsed()) return cmd_check_theorem(cfg, theorem_trials->count() > 0, out);
    if (order->parsed()) return cmd_order(cfg, order_horizon->count() > 0, out);
    if (axioms->parsed()) return cmd_axioms(cfg, axiom_trials->count() > 0, axiom_seed->count() > 0, out);
    if (powers->parsed()) return cmd_powers(cfg, out);
    if (reduce->parsed()) return cmd_reduce(cfg, reduce_n->count() > 0, out, err);
  } catch (const Error& e) {
    err << "incline: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace incline::cli
