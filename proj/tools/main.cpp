// Command-line driver: character tables, conjecture checks, corpus scans,
// and the closed-form Lie-type scans, with JSON/CSV output and a result
// cache keyed by group hash, prime, check, and engine version.

#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "exchar/chartab.hpp"
#include "exchar/checks.hpp"
#include "exchar/corpus.hpp"
#include "exchar/error.hpp"
#include "exchar/lie.hpp"
#include "exchar/store.hpp"
#include "exchar/version.hpp"

namespace {

using exchar::Error;
using exchar::ErrorCode;
using json = nlohmann::ordered_json;

std::string default_cache_dir() {
  if (const char* env = std::getenv("EXCHAR_CACHE_DIR")) return env;
  if (const char* home = std::getenv("HOME")) {
    return std::string(home) + "/.cache/exchar";
  }
  return ".exchar-cache";
}

bool theorem_tier(ErrorCode code) {
  switch (code) {
    case ErrorCode::EquivalenceViolation:
    case ErrorCode::UniquenessViolation:
    case ErrorCode::CountMismatch:
    case ErrorCode::InternalInconsistency:
      return true;
    default:
      return false;
  }
}

struct Options {
  std::string format = "json";
  bool stats = false;
  bool no_cache = false;
  std::string cache_dir;
};

std::unique_ptr<exchar::ResultStore> open_store(const Options& opt) {
  if (opt.no_cache) return nullptr;
  std::string dir = opt.cache_dir.empty() ? default_cache_dir() : opt.cache_dir;
  return std::make_unique<exchar::ResultStore>(dir);
}

void emit_payload(const Options& opt, const std::string& payload) {
  if (opt.format == "csv") {
    std::cout << exchar::payload_to_csv(payload);
  } else {
    std::cout << payload;
  }
}

int cmd_table(const Options& opt, const std::string& target) {
  exchar::PermGroup g = exchar::load_group(target);
  emit_payload(opt, exchar::render_table(exchar::resolve_name(target), g));
  return 0;
}

int cmd_check(const Options& opt, const std::string& target, long prime,
              const std::string& check, const exchar::RelativeArgs& rel) {
  auto store = open_store(opt);
  exchar::CheckResult result =
      exchar::run_check(target, prime, check, store.get(), rel);
  emit_payload(opt, result.payload);
  return exchar::payload_exit_code(check, result.payload);
}

int cmd_scan(const Options& opt, std::optional<long> prime,
             std::vector<std::string> checks) {
  if (checks.empty()) checks = {"conja", "theoremc", "bijection"};
  auto store = open_store(opt);
  exchar::CorpusScanSummary summary = exchar::scan_corpus(
      exchar::builtin_manifest(), prime, checks, store.get());
  std::cout << (opt.format == "csv" ? exchar::summary_csv(summary)
                                    : exchar::summary_json(summary));
  return summary.exit_code();
}

struct LieScanArgs {
  std::string family;
  long n = -1;
  long n_min = -1;
  long n_max = 12;
  long q_max = 101;
  bool defchar = false;
  long p = 0;
  bool sporadic = false;
  bool covers = false;
  bool emit_table1 = false;
};

int cmd_lie_scan(const Options& opt, const LieScanArgs& args) {
  int modes = int(args.defchar) + int(args.p != 0) + int(args.sporadic) +
              int(args.covers) + int(args.emit_table1);
  if (modes != 1) {
    exchar::fail(ErrorCode::ParseError,
                 "pick exactly one of --defchar, --p, --sporadic, --covers, "
                 "--emit-table1");
  }
  if (args.sporadic) {
    std::cout << exchar::sporadic_json();
    return 0;
  }
  if (args.covers) {
    std::cout << exchar::covers_json();
    return 0;
  }
  if (args.emit_table1) {
    std::cout << exchar::table1_json();
    return 0;
  }
  if (args.family.empty()) {
    exchar::fail(ErrorCode::ParseError, "--family is required for a scan");
  }
  auto family = exchar::lie_family_from_name(args.family);
  if (!family) {
    exchar::fail(ErrorCode::UnsupportedFamily,
                 "no family named " + args.family);
  }
  long n_min = args.n >= 0 ? args.n : (args.n_min >= 0 ? args.n_min : 2);
  long n_max = args.n >= 0 ? args.n : args.n_max;
  exchar::ScanReport report;
  if (args.defchar) {
    report = exchar::defining_char_scan(*family, n_min, n_max, args.q_max);
  } else {
    if (args.p != 2) {
      exchar::fail(ErrorCode::ParseError,
                   "only the p = 2 normalizer tables are encoded");
    }
    report = exchar::p2_inequality_scan(*family, n_min, n_max, args.q_max);
  }
  std::cout << (opt.format == "csv" ? exchar::scan_report_csv(report)
                                    : exchar::scan_report_json(report));
  for (const exchar::ScanRow& row : report.rows) {
    if (!row.holds) return 2;
  }
  return 0;
}

int cmd_corpus(const Options& opt, const std::string& action) {
  const exchar::CorpusManifest& manifest = exchar::builtin_manifest();
  if (action == "list") {
    if (opt.format == "csv") {
      std::cout << "name,order,source,tags\n";
      for (const exchar::CorpusEntry& e : manifest.entries) {
        std::string tags;
        for (const std::string& t : e.tags) {
          if (!tags.empty()) tags += ';';
          tags += t;
        }
        std::cout << e.name << ',' << e.expected_order << ',' << e.source
                  << ',' << tags << '\n';
      }
    } else {
      json doc = json::array();
      for (const exchar::CorpusEntry& e : manifest.entries) {
        json row;
        row["name"] = e.name;
        row["order"] = e.expected_order.convert_to<long>();
        row["source"] = e.source;
        row["tags"] = e.tags;
        doc.push_back(row);
      }
      std::cout << doc.dump(2) << '\n';
    }
    return 0;
  }
  if (action == "verify") {
    exchar::validate_manifest(manifest);
    json doc;
    doc["validated"] = manifest.entries.size();
    doc["version"] = manifest.version;
    std::cout << doc.dump(2) << '\n';
    return 0;
  }
  exchar::fail(ErrorCode::ParseError, "corpus action must be list or verify");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact character-degree computations for finite groups"};
  app.set_version_flag("--version", exchar::kEngineVersion);
  app.require_subcommand(1);
  // Let global flags (--format, --stats, ...) appear after the subcommand.
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_flag("--stats", opt.stats,
               "Print a computation-counter JSON object to stderr");
  app.add_flag("--no-cache", opt.no_cache, "Disable the result store");
  app.add_option("--cache-dir", opt.cache_dir,
                 "Result store directory (default: EXCHAR_CACHE_DIR or "
                 "~/.cache/exchar)");

  auto* table_cmd = app.add_subcommand("table", "Print a character table");
  std::string table_target;
  table_cmd->add_option("group", table_target, "Corpus name or generator file")
      ->required();

  auto* check_cmd = app.add_subcommand("check", "Run one check on one group");
  std::string check_target, check_name = "conja";
  long check_prime = 2;
  exchar::RelativeArgs rel;
  check_cmd->add_option("group", check_target, "Corpus name or generator file")
      ->required();
  check_cmd->add_option("-p,--prime", check_prime, "Prime p")->required();
  check_cmd->add_option("--check", check_name, "Check name")
      ->capture_default_str();
  check_cmd->add_option("--normal", rel.normal,
                        "relative check: trivial | center | derived | "
                        "corpus name | file");
  check_cmd->add_option("--theta", rel.theta_row,
                        "relative check: row of the normal subgroup's table");

  auto* scan_cmd = app.add_subcommand("scan", "Run checks on every corpus "
                                              "group and prime");
  long scan_prime = 0;
  std::vector<std::string> scan_checks;
  scan_cmd->add_option("--prime", scan_prime,
                       "Restrict the scan to one prime");
  scan_cmd->add_option("--checks", scan_checks,
                       "Checks to run (default conja theoremc bijection)")
      ->delimiter(',');

  auto* lie_cmd = app.add_subcommand("lie-scan", "Closed-form scans for the "
                                                 "Lie-type families");
  LieScanArgs lie;
  lie_cmd->add_option("--family", lie.family, "Family name (SL, SU, Sp, "
                                              "SpinOdd, SpinPlus, SpinMinus, "
                                              "2B2, 2G2, 2F4, ...)");
  lie_cmd->add_option("--n", lie.n, "Single rank");
  lie_cmd->add_option("--n-min", lie.n_min, "Smallest rank");
  lie_cmd->add_option("--n-max", lie.n_max, "Largest rank")
      ->capture_default_str();
  lie_cmd->add_option("--q-max", lie.q_max, "Largest field size")
      ->capture_default_str();
  lie_cmd->add_flag("--defchar", lie.defchar,
                    "Defining-characteristic comparison");
  lie_cmd->add_option("--p", lie.p, "Cross-characteristic prime (2 only)");
  lie_cmd->add_flag("--sporadic", lie.sporadic,
                    "Print the sporadic exception records");
  lie_cmd->add_flag("--covers", lie.covers,
                    "Print the exceptional covering-group records");
  lie_cmd->add_flag("--emit-table1", lie.emit_table1,
                    "Print the minimal-degree table rows");

  auto* corpus_cmd = app.add_subcommand("corpus", "List or verify the "
                                                  "built-in corpus");
  std::string corpus_action;
  corpus_cmd->add_option("action", corpus_action, "list | verify")
      ->required()
      ->check(CLI::IsMember({"list", "verify"}));

  CLI11_PARSE(app, argc, argv);

  int code = 0;
  try {
    if (*table_cmd) {
      code = cmd_table(opt, table_target);
    } else if (*check_cmd) {
      code = cmd_check(opt, check_target, check_prime, check_name, rel);
    } else if (*scan_cmd) {
      std::optional<long> prime;
      if (scan_prime != 0) prime = scan_prime;
      code = cmd_scan(opt, prime, scan_checks);
    } else if (*lie_cmd) {
      code = cmd_lie_scan(opt, lie);
    } else if (*corpus_cmd) {
      code = cmd_corpus(opt, corpus_action);
    }
  } catch (const Error& err) {
    json doc;
    doc["error"] = exchar::error_code_name(err.code());
    doc["message"] = err.what();
    std::cerr << doc.dump(2) << '\n';
    code = theorem_tier(err.code()) ? 3 : 1;
  }
  if (opt.stats) {
    json stats;
    stats["table_computations"] = exchar::table_computations();
    std::cerr << stats.dump() << '\n';
  }
  return code;
}
