#pragma once

// Batch front end: identity registry, concurrent runner, report writers and
// the verify / det / bench subcommands.

#include <cyclodet/identities.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace cyclodet::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

enum class Format { Json, Csv, Text };

struct RunConfig {
  std::string subcommand;
  std::string identity = "all";
  std::optional<std::pair<long, long>> n_range;  // inclusive; absent = per-identity default grid
  std::optional<Rational> x;
  Format format = Format::Text;
  std::optional<std::string> out_path;
  bool force = false;
  bool oracle = false;
  std::string matrix;
  long n = 0;
  unsigned jobs = 0;  // 0 = hardware concurrency
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "a..b" or a single "n".
inline std::pair<long, long> parse_n_range(const std::string& text) {
  auto to_long = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      long v = std::stol(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw UsageError("bad n-range '" + text + "': expected a..b or a single integer");
    }
  };
  const auto dots = text.find("..");
  const long lo = to_long(dots == std::string::npos ? text : text.substr(0, dots));
  const long hi = dots == std::string::npos ? lo : to_long(text.substr(dots + 2));
  if (lo > hi) throw UsageError("bad n-range '" + text + "': start exceeds end");
  return {lo, hi};
}

// ---------------------------------------------------------------------------
// Registry

struct IdentityEntry {
  std::string name;
  std::string description;
  bool odd_only;
  long min_n;
  long default_lo;
  long default_hi;
  std::function<IdentityReport(long, const RunConfig&)> run;

  bool admits(long n) const { return n >= min_n && (!odd_only || n % 2 == 1); }
};

inline const std::vector<IdentityEntry>& registry() {
  static const std::vector<IdentityEntry> entries = [] {
    std::vector<IdentityEntry> e;
    e.push_back({"thm1.1", "det[x + a_jk] at size n-1 is constant (-1)^((n-1)/2) ((n-2)!!)^2 / n", true, 3, 3, 25,
                 [](long n, const RunConfig& c) { return verify_cayley_det(n, c.oracle, c.force); }});
    e.push_back({"cor1.2", "det of the 1/2-diagonal Cauchy-type matrix", true, 3, 3, 25,
                 [](long n, const RunConfig&) { return verify_half_diagonal_det(n); }});
    e.push_back({"eq1.4", "det of the hollow 1/(1 - z^(j-k)) matrix", true, 3, 3, 25,
                 [](long n, const RunConfig& c) { return verify_hollow_cauchy_det(n, c.oracle, c.force); }});
    e.push_back({"thm1.3", "det[x + b_jk] = (n x + 1) d0", true, 3, 3, 25,
                 [](long n, const RunConfig&) { return verify_unit_diagonal_cayley_det(n); }});
    e.push_back({"lemma3.1-i", "charpoly of C + I has roots s - (n-1)/2", false, 2, 2, 12,
                 [](long n, const RunConfig&) { return verify_shifted_cauchy_spectrum(n); }});
    e.push_back({"lemma3.1-ii", "det of C + I at size n-1", true, 3, 3, 25,
                 [](long n, const RunConfig&) { return verify_shifted_cauchy_det(n); }});
    e.push_back({"eq3.3", "charpoly of 2C has roots 2s - n - 1", false, 2, 2, 12,
                 [](long n, const RunConfig&) { return verify_doubled_cauchy_charpoly(n); }});
    e.push_back({"lemma2.1", "cleared partial-fraction identity, all s", false, 2, 2, 12,
                 [](long n, const RunConfig&) { return verify_root_sum_identity(n); }});
    e.push_back({"prop2.3", "cleared Cayley-sum identity, all k and s", false, 2, 2, 12,
                 [](long n, const RunConfig&) { return verify_cayley_sum_identity(n); }});
    e.push_back({"cor2.2", "both reciprocal root sums (1 + z^r half for odd n)", false, 2, 2, 12,
                 [](long n, const RunConfig&) { return verify_root_sums(n); }});
    e.push_back({"eq2.2", "sum z^(-rs)/(1 + z^r) = ((-1)^s n - 1)/2", true, 3, 3, 49,
                 [](long n, const RunConfig&) { return verify_plus_root_sums(n); }});
    e.push_back({"eq2.3", "sum z^(-rs)/(1 - z^r) = (n-1)/2 - s", false, 2, 2, 50,
                 [](long n, const RunConfig&) { return verify_minus_root_sums(n); }});
    e.push_back({"eq2.6", "Cayley row sums n - 2s / 0", false, 2, 2, 12,
                 [](long n, const RunConfig&) { return verify_cayley_row_sums(n); }});
    e.push_back({"s19", "algebraic tangent determinant (-1)^((n-1)/2) n^(n-2)", true, 3, 3, 13,
                 [](long n, const RunConfig&) { return verify_tangent_det(n); }});
    for (auto [sel, kind] : {std::pair{"a", MatrixKind::A}, std::pair{"b", MatrixKind::B},
                             std::pair{"c1", MatrixKind::CPlusI}}) {
      const bool odd = kind != MatrixKind::CPlusI;
      e.push_back({std::string("eigen.") + sel, "exact eigenpairs M v = lambda v, both orientations", odd,
                   odd ? 3 : 2, 3, 13, [kind](long n, const RunConfig&) { return verify_eigenpairs(kind, n); }});
      e.push_back({std::string("eei.") + sel, "eigenvector-eigenvalue identity for every (eigen index, minor)",
                   true, 3, 3, 13,
                   [kind](long n, const RunConfig&) { return verify_eigenvector_eigenvalue_identity(kind, n); }});
    }
    for (const auto& base : galois_supported_identities()) {
      e.push_back({"galois." + base, "closed form reproduced under every z -> z^t", true, 3, 3, 9,
                   [base](long n, const RunConfig&) { return verify_galois_invariance(base, n); }});
    }
    std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return e;
  }();
  return entries;
}

inline const IdentityEntry* find_identity(const std::string& name) {
  for (const auto& e : registry()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

struct Task {
  const IdentityEntry* entry;
  long n;
};

/// Expands the selector and range into (identity, n) tasks sorted by identity then n.
inline std::vector<Task> plan_tasks(const RunConfig& cfg) {
  std::vector<const IdentityEntry*> chosen;
  if (cfg.identity == "all") {
    for (const auto& e : registry()) chosen.push_back(&e);
  } else if (const auto* e = find_identity(cfg.identity)) {
    chosen.push_back(e);
  } else {
    throw UsageError("unknown identity '" + cfg.identity + "'");
  }
  std::vector<Task> tasks;
  for (const auto* e : chosen) {
    const long lo = cfg.n_range ? cfg.n_range->first : e->default_lo;
    const long hi = cfg.n_range ? cfg.n_range->second : e->default_hi;
    for (long n = lo; n <= hi; ++n) {
      if (e->admits(n)) tasks.push_back({e, n});
    }
  }
  if (tasks.empty()) throw UsageError("n-range admits no value for identity '" + cfg.identity + "'");
  return tasks;
}

/// Runs every task on a worker pool; `on_report` sees reports in task order.
inline std::vector<IdentityReport> run_tasks(const std::vector<Task>& tasks, const RunConfig& cfg,
                                             const std::function<void(const IdentityReport&)>& on_report = {}) {
  std::vector<std::promise<IdentityReport>> promises(tasks.size());
  std::vector<std::future<IdentityReport>> futures;
  futures.reserve(tasks.size());
  for (auto& p : promises) futures.push_back(p.get_future());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto& t = tasks[i];
      try {
        promises[i].set_value(t.entry->run(t.n, cfg));
      } catch (const std::exception& ex) {
        promises[i].set_value(IdentityReport{t.entry->name, t.n, "", "(no error)", std::string("error: ") + ex.what(),
                                             false, 0.0});
      }
    }
  };
  unsigned jobs = cfg.jobs != 0 ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, tasks.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);

  std::vector<IdentityReport> reports;
  reports.reserve(tasks.size());
  for (auto& f : futures) {
    reports.push_back(f.get());
    if (on_report) on_report(reports.back());
  }
  for (auto& th : pool) th.join();
  return reports;
}

// ---------------------------------------------------------------------------
// Report writers

inline std::string format_seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << s;
  return os.str();
}

inline std::string text_line(const IdentityReport& r) {
  return std::string(r.passed ? "PASS" : "FAIL") + " " + r.identity + " n=" + std::to_string(r.n) + " expected=" +
         r.expected + " computed=" + r.computed + " (" + format_seconds(r.elapsed_seconds) + " s)";
}

struct Summary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

inline Summary summarize(const std::vector<IdentityReport>& reports) {
  Summary s;
  s.total = reports.size();
  s.passed = static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.passed; }));
  s.failed = s.total - s.passed;
  return s;
}

inline nlohmann::json to_json(const IdentityReport& r) {
  return nlohmann::json{{"identity", r.identity},   {"n", r.n},
                        {"params", r.params},       {"expected", r.expected},
                        {"computed", r.computed},   {"passed", r.passed},
                        {"elapsed_seconds", r.elapsed_seconds}, {"tool_version", kToolVersion}};
}

inline IdentityReport report_from_json(const nlohmann::json& j) {
  return IdentityReport{j.at("identity").get<std::string>(), j.at("n").get<long>(),
                        j.at("params").get<std::string>(),   j.at("expected").get<std::string>(),
                        j.at("computed").get<std::string>(), j.at("passed").get<bool>(),
                        j.at("elapsed_seconds").get<double>()};
}

inline std::string write_json(const std::vector<IdentityReport>& reports) {
  nlohmann::json doc;
  doc["reports"] = nlohmann::json::array();
  for (const auto& r : reports) doc["reports"].push_back(to_json(r));
  const Summary s = summarize(reports);
  doc["summary"] = {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}};
  return doc.dump(2) + "\n";
}

inline std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string write_csv(const std::vector<IdentityReport>& reports) {
  std::string out = "identity,n,params,expected,computed,passed,elapsed_seconds,tool_version\n";
  for (const auto& r : reports) {
    out += csv_field(r.identity) + "," + std::to_string(r.n) + "," + csv_field(r.params) + "," +
           csv_field(r.expected) + "," + csv_field(r.computed) + "," + (r.passed ? "true" : "false") + "," +
           format_seconds(r.elapsed_seconds) + "," + kToolVersion + "\n";
  }
  return out;
}

inline std::string write_text(const std::vector<IdentityReport>& reports) {
  std::string out;
  for (const auto& r : reports) out += text_line(r) + "\n";
  const Summary s = summarize(reports);
  out += "total=" + std::to_string(s.total) + " passed=" + std::to_string(s.passed) +
         " failed=" + std::to_string(s.failed) + "\n";
  return out;
}

inline std::string write_reports(const std::vector<IdentityReport>& reports, Format f) {
  switch (f) {
    case Format::Json: return write_json(reports);
    case Format::Csv: return write_csv(reports);
    case Format::Text: return write_text(reports);
  }
  return {};
}

// ---------------------------------------------------------------------------
// Subcommands. Each returns the process exit status.

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<Task> tasks;
  try {
    tasks = plan_tasks(cfg);
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsageError;
  }
  // Progress lines go to stdout unless stdout carries a machine-readable aggregate.
  const bool aggregate_to_out = !cfg.out_path.has_value();
  std::ostream& progress = (aggregate_to_out && cfg.format != Format::Text) ? err : out;
  const bool stream_text = !(aggregate_to_out && cfg.format == Format::Text);
  auto reports = run_tasks(tasks, cfg, [&](const IdentityReport& r) {
    if (stream_text) progress << text_line(r) << "\n" << std::flush;
  });
  const std::string doc = write_reports(reports, cfg.format);
  if (cfg.out_path) {
    std::ofstream f(*cfg.out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << *cfg.out_path << "\n";
      return kUsageError;
    }
    f << doc;
  } else {
    out << doc;
  }
  return summarize(reports).failed == 0 ? kSuccess : kVerificationFailed;
}

inline std::optional<MatrixKind> parse_matrix_kind(const std::string& name) {
  static const std::map<std::string, MatrixKind> kinds{
      {"a", MatrixKind::A},      {"b", MatrixKind::B},           {"c", MatrixKind::CHollow},
      {"c1", MatrixKind::CPlusI}, {"tilde-a", MatrixKind::TildeA}, {"s19", MatrixKind::Tangent}};
  auto it = kinds.find(name);
  if (it == kinds.end()) return std::nullopt;
  return it->second;
}

/// det[x + m_jk] of the chosen kind at size n-1.
inline int cmd_det(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto kind = parse_matrix_kind(cfg.matrix);
  if (!kind) {
    err << "error: unknown matrix '" << cfg.matrix << "' (expected a|b|c|c1|tilde-a|s19)\n";
    return kUsageError;
  }
  if (cfg.n < 2) {
    err << "error: n must be >= 2\n";
    return kUsageError;
  }
  if (*kind == MatrixKind::Tangent && cfg.n % 2 == 0) {
    err << "error: matrix s19 needs odd n (1 + z^(n/2) vanishes)\n";
    return kUsageError;
  }
  const auto ctx = context_new(cfg.n);
  const CycloElem x = CycloElem::from_rational(ctx, cfg.x.value_or(Rational(0)));
  const CMatrix m = build(*kind, ctx, static_cast<std::size_t>(cfg.n - 1)).plus_constant(x);
  out << render(det(m)) << "\n";
  return kSuccess;
}

/// Times the signed derangement sum against elimination on A at size n-1.
inline int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n < 3 || cfg.n % 2 == 0) {
    err << "error: bench needs odd n >= 3\n";
    return kUsageError;
  }
  const long dim = cfg.n - 1;
  if (dim > kDerangementGuardrail && !cfg.force) {
    err << "error: derangement dimension " << dim << " exceeds guardrail " << kDerangementGuardrail
        << " (D_" << dim << " = " << to_string(derangement_count(dim)) << " terms); pass --force to override\n";
    return kUsageError;
  }
  const auto ctx = context_new(cfg.n);
  const CMatrix a = build(MatrixKind::A, ctx, static_cast<std::size_t>(dim));
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  const CycloElem by_det = det(a);
  auto t1 = clock::now();
  const CycloElem by_sum = signed_derangement_sum(a, cfg.force);
  auto t2 = clock::now();
  const double det_s = std::chrono::duration<double>(t1 - t0).count();
  const double sum_s = std::chrono::duration<double>(t2 - t1).count();
  const bool equal = by_det == by_sum;
  out << "n=" << cfg.n << " dim=" << dim << " terms=D_" << dim << "=" << to_string(derangement_count(dim)) << "\n"
      << "det=" << render(by_det) << " derangement_sum=" << render(by_sum) << " equal=" << (equal ? "true" : "false")
      << "\n"
      << "det_seconds=" << format_seconds(det_s) << " derangement_seconds=" << format_seconds(sum_s)
      << " speedup=" << std::fixed << std::setprecision(1) << (det_s > 0 ? sum_s / det_s : 0.0) << "x\n";
  return equal ? kSuccess : kVerificationFailed;
}

// ---------------------------------------------------------------------------
// Argument parsing

/// Parses argv and dispatches. Usage errors exit 2.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of root-of-unity determinant identities"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string range_text;
  std::string format_text = "text";
  std::string x_text;

  auto* verify = app.add_subcommand("verify", "Run identity verifiers over a range of n");
  verify->add_option("--identity", cfg.identity, "Identity name, or 'all'");
  verify->add_option("--n", range_text, "Inclusive range a..b (default: per-identity grid)");
  verify->add_flag("--oracle", cfg.oracle, "Cross-check determinants with the derangement sum (n <= 9)");
  verify->add_option("--format", format_text, "json | csv | text");
  verify->add_option("--out", cfg.out_path, "Write the aggregate report here");
  verify->add_flag("--force", cfg.force, "Override factorial-cost guardrails");
  verify->add_option("--jobs", cfg.jobs, "Worker threads (default: hardware concurrency)");

  auto* det_cmd = app.add_subcommand("det", "Print det[x + m_jk] at size n-1");
  det_cmd->add_option("--matrix", cfg.matrix, "a | b | c | c1 | tilde-a | s19")->required();
  det_cmd->add_option("--n", cfg.n, "n")->required();
  det_cmd->add_option("--x", x_text, "Rational shift p/q (default 0)");

  auto* bench = app.add_subcommand("bench", "Derangement sum vs elimination on A");
  bench->add_option("--n", cfg.n, "odd n")->required();
  bench->add_flag("--force", cfg.force, "Override the derangement guardrail");

  auto* list = app.add_subcommand("list", "List identity names and default grids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (!range_text.empty()) cfg.n_range = parse_n_range(range_text);
    if (!x_text.empty()) cfg.x = parse_rational(x_text);
    if (format_text == "json") {
      cfg.format = Format::Json;
    } else if (format_text == "csv") {
      cfg.format = Format::Csv;
    } else if (format_text == "text") {
      cfg.format = Format::Text;
    } else {
      throw UsageError("unknown format '" + format_text + "'");
    }
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsageError;
  }

  if (verify->parsed()) {
    cfg.subcommand = "verify";
    return cmd_verify(cfg, out, err);
  }
  if (det_cmd->parsed()) {
    cfg.subcommand = "det";
    return cmd_det(cfg, out, err);
  }
  if (bench->parsed()) {
    cfg.subcommand = "bench";
    return cmd_bench(cfg, out, err);
  }
  if (list->parsed()) {
    for (const auto& e : registry()) {
      out << std::left << std::setw(20) << e.name << (e.odd_only ? "odd " : "any ") << e.default_lo << ".."
          << e.default_hi << "  " << e.description << "\n";
    }
    return kSuccess;
  }
  return kUsageError;
}

}  // namespace cyclodet::cli
