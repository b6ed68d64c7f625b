#ifndef EXCHAR_CHECKS_HPP
#define EXCHAR_CHECKS_HPP

#include <optional>
#include <string>
#include <vector>

#include "exchar/corpus.hpp"
#include "exchar/lie.hpp"
#include "exchar/permgroup.hpp"
#include "exchar/store.hpp"

namespace exchar {

// Arguments of the `relative` check: the normal subgroup is named by the
// keyword "trivial", "center" or "derived", or by a corpus name / generator
// file resolving to a subgroup of the target.
struct RelativeArgs {
  std::string normal = "trivial";
  int theta_row = 0;
};

struct CheckResult {
  std::string group; // canonical target name
  long prime = 2;
  std::string check;
  std::string payload; // JSON document, newline-terminated
  bool from_cache = false;
};

// The check names accepted by run_check and scan_corpus.
const std::vector<std::string>& known_checks();

// Runs one check on one target, consulting the store first when given one.
// Fails with UnknownCheck / UnknownGroup / ParseError on bad arguments and
// with the theorem-tier codes (EquivalenceViolation, UniquenessViolation,
// CountMismatch, InternalInconsistency) when a theorem-backed cross-check
// fails.
CheckResult run_check(const std::string& target, long p,
                      const std::string& check, ResultStore* store,
                      const RelativeArgs& rel = {});

// Exit status of a single check run: 0 clean, 2 when the payload records a
// falsified conjectural inequality (counterexample class).
int payload_exit_code(const std::string& check, const std::string& payload);

// One (group, prime, check) outcome inside a corpus scan.
struct ScanOutcome {
  std::string group;
  long prime = 2;
  std::string check;
  std::string status; // ok | counterexample | violation
  std::string detail; // one-line diagnosis for non-ok rows
};

struct CorpusScanSummary {
  std::vector<ScanOutcome> outcomes;
  long counterexamples = 0;
  long violations = 0;
  // 0 clean, 2 = counterexample found, 3 = theorem-backed violation.
  int exit_code() const;
};

// Validates the whole manifest, then runs every requested check on every
// (group, prime) pair: the given prime, or all primes dividing each order.
CorpusScanSummary scan_corpus(const CorpusManifest& manifest,
                              std::optional<long> prime,
                              const std::vector<std::string>& checks,
                              ResultStore* store);

std::string summary_json(const CorpusScanSummary& summary);
std::string summary_csv(const CorpusScanSummary& summary);

// Full character table of a group as a JSON document: conjugacy classes
// (size, element order, representative) and all rows with exact values.
std::string render_table(const std::string& name, const PermGroup& g);

// CSV mirror of a single-check JSON payload: one header line, one row.
std::string payload_to_csv(const std::string& payload);

// Lie-type scan reports as JSON lines / CSV.
std::string scan_report_json(const ScanReport& report);
std::string scan_report_csv(const ScanReport& report);

// JSON lines for the transcribed data sets.
std::string sporadic_json();
std::string covers_json();
std::string table1_json();

} // namespace exchar

#endif
