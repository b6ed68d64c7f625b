#include "exchar/checks.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "json.hpp"

#include "exchar/chartab.hpp"
#include "exchar/error.hpp"
#include "exchar/mckay.hpp"

namespace exchar {

namespace {

using json = nlohmann::ordered_json;

long to_long(const Int& v) { return v.convert_to<long>(); }

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::vector<long> sorted_desc(std::vector<long> v) {
  std::sort(v.begin(), v.end(), std::greater<long>());
  return v;
}

// The p'-degree multisets of the group and of its Sylow normalizer.
std::pair<std::vector<long>, std::vector<long>> pprime_degree_pair(
    const PermGroup& g, long p) {
  const CharacterTable& tg = character_table(g);
  PermGroup normalizer = g.normalizer_of(g.sylow_subgroup(p));
  const CharacterTable& tn = character_table(normalizer);
  return {pprime_stats(tg, p).degrees, pprime_stats(tn, p).degrees};
}

json conja_payload(const PermGroup& g, const std::string& name, long p) {
  ConjAReport rep = conjecture_a_report(g, p);
  if (rep.mckay_counts.first != rep.mckay_counts.second) {
    std::ostringstream msg;
    msg << name << " p=" << p << ": |Irr_p'(G)| = " << rep.mckay_counts.first
        << " but |Irr_p'(N_G(P))| = " << rep.mckay_counts.second;
    fail(ErrorCode::CountMismatch, msg.str());
  }
  bool bij = restriction_bijection_check(g, p);
  json doc;
  doc["group"] = name;
  doc["prime"] = p;
  doc["lhs"] = to_long(rep.lhs);
  doc["rhs"] = to_long(rep.rhs);
  doc["holds"] = rep.holds;
  doc["equality"] = rep.equality;
  doc["complement_order"] =
      rep.complement ? json(to_long(rep.complement->order())) : json(nullptr);
  doc["all_extend"] = rep.all_extend;
  doc["counts"] =
      json::array({rep.mckay_counts.first, rep.mckay_counts.second});
  doc["bijection"] = bij ? "ok" : "fail";
  doc["notes"] = rep.notes;
  return doc;
}

json theoremc_payload(const PermGroup& g, const std::string& name, long p) {
  ConjAReport rep = conjecture_a_report(g, p);
  TheoremCTriple triple = theoremc_equivalence(g, p);
  bool bij = restriction_bijection_check(g, p);
  if (rep.mckay_counts.first != rep.mckay_counts.second) {
    fail(ErrorCode::CountMismatch,
         name + ": the two p'-degree character counts differ");
  }
  const bool vals[4] = {rep.equality, triple.complement_exists,
                        triple.pprime_extend, bij};
  for (bool v : vals) {
    if (v != vals[0]) {
      std::ostringstream msg;
      msg << name << " p=" << p << ": equality=" << rep.equality
          << " complement=" << triple.complement_exists
          << " pprime_extend=" << triple.pprime_extend << " bijection=" << bij
          << " disagree";
      fail(ErrorCode::EquivalenceViolation, msg.str());
    }
  }
  TateReport tate = tate_crosscheck(g, p);
  json doc;
  doc["group"] = name;
  doc["prime"] = p;
  doc["pprime_extend"] = triple.pprime_extend;
  doc["all_extend"] = triple.all_extend;
  doc["complement_exists"] = triple.complement_exists;
  doc["restriction_bijection"] = bij;
  doc["equality"] = rep.equality;
  doc["complement_order"] =
      rep.complement ? json(to_long(rep.complement->order())) : json(nullptr);
  doc["mckay_counts"] =
      json::array({rep.mckay_counts.first, rep.mckay_counts.second});
  json tate_doc;
  tate_doc["eligible"] = tate.eligible;
  tate_doc["verified"] = tate.verified;
  tate_doc["skipped"] = tate.skipped;
  tate_doc["notes"] = tate.notes;
  doc["tate"] = tate_doc;
  return doc;
}

json bijection_payload(const PermGroup& g, const std::string& name, long p) {
  auto [gdegs, ndegs] = pprime_degree_pair(g, p);
  auto pairs = degree_dominating_bijection(gdegs, ndegs);
  bool bij = restriction_bijection_check(g, p);
  json doc;
  doc["group"] = name;
  doc["prime"] = p;
  doc["group_degrees"] = sorted_desc(gdegs);
  doc["normalizer_degrees"] = sorted_desc(ndegs);
  if (pairs) {
    json rows = json::array();
    for (const auto& [gd, nd] : *pairs) rows.push_back(json::array({gd, nd}));
    doc["pairs"] = rows;
  } else {
    doc["pairs"] = nullptr;
  }
  doc["dominates"] = pairs.has_value();
  doc["restriction_bijection"] = bij;
  return doc;
}

json stats_payload(const PermGroup& g, const std::string& name, long p) {
  PPrimeStats st = pprime_stats(character_table(g), p);
  json doc;
  doc["group"] = name;
  doc["prime"] = p;
  doc["degrees"] = st.degrees;
  doc["m"] = st.m;
  doc["b"] = st.b;
  doc["d"] = st.d;
  return doc;
}

json pprimepart_payload(const PermGroup& g, const std::string& name, long p) {
  PPrimePartReport rep = pprime_part_test(g, p);
  json doc;
  doc["group"] = name;
  doc["prime"] = p;
  doc["lhs"] = to_long(rep.lhs);
  doc["lhs_pprime_part"] = to_long(rep.lhs_pprime_part);
  doc["order_pprime_part"] = to_long(rep.order_pprime_part);
  doc["sylow_normal"] = rep.sylow_normal;
  doc["consistent"] = rep.consistent;
  return doc;
}

json hypothesis_payload(const PermGroup& g, const std::string& name, long p) {
  const CharacterTable& tg = character_table(g);
  PermGroup normalizer = g.normalizer_of(g.sylow_subgroup(p));
  const CharacterTable& tn = character_table(normalizer);
  long m = pprime_stats(tg, p).m;
  long b = pprime_stats(tn, p).b;
  bool holds = hypothesis_check_group(g, p);
  if (holds != (m >= b)) {
    fail(ErrorCode::InternalInconsistency,
         name + ": hypothesis flag disagrees with its defining comparison");
  }
  json doc;
  doc["group"] = name;
  doc["prime"] = p;
  doc["m"] = m;
  doc["b"] = b;
  doc["holds"] = holds;
  return doc;
}

PermGroup resolve_normal(const PermGroup& g, const std::string& spec) {
  if (spec == "trivial" || spec == "1") return PermGroup::trivial(g.degree());
  if (spec == "center") return g.center();
  if (spec == "derived") return g.derived_subgroup();
  return load_group(spec);
}

json relative_payload(const PermGroup& g, const std::string& name, long p,
                      const RelativeArgs& rel) {
  PermGroup n = resolve_normal(g, rel.normal);
  RelativeReport rep = relative_report(g, n, rel.theta_row, p);
  json doc;
  doc["group"] = name;
  doc["normal"] = rel.normal;
  doc["theta_row"] = rel.theta_row;
  doc["prime"] = p;
  doc["lhs"] = to_long(rep.lhs);
  doc["rhs"] = to_long(rep.rhs);
  doc["holds"] = rep.holds;
  doc["equality"] = rep.equality;
  if (rep.complement_with_extension) {
    doc["complement_order"] =
        to_long(rep.complement_with_extension->first.order());
    doc["extension_row"] = rep.complement_with_extension->second;
  } else {
    doc["complement_order"] = nullptr;
    doc["extension_row"] = nullptr;
  }
  doc["notes"] = rep.notes;
  return doc;
}

json payload_for(const PermGroup& g, const std::string& name, long p,
                 const std::string& check, const RelativeArgs& rel) {
  if (check == "conja") return conja_payload(g, name, p);
  if (check == "theoremc") return theoremc_payload(g, name, p);
  if (check == "bijection") return bijection_payload(g, name, p);
  if (check == "stats") return stats_payload(g, name, p);
  if (check == "pprimepart") return pprimepart_payload(g, name, p);
  if (check == "hypothesis") return hypothesis_payload(g, name, p);
  if (check == "relative") return relative_payload(g, name, p, rel);
  fail(ErrorCode::UnknownCheck, "no check named " + check);
}

std::string sanitize_token(const std::string& raw) {
  std::string out;
  for (char c : raw) {
    out += (std::isalnum(static_cast<unsigned char>(c)) != 0) ? c : '_';
  }
  return out;
}

// Store key component: the check name, extended for `relative` so different
// (normal, theta) choices never collide.
std::string store_check_key(const std::string& check, const RelativeArgs& rel) {
  if (check != "relative") return check;
  return "relative-" + sanitize_token(rel.normal) + "-" +
         std::to_string(rel.theta_row);
}

void require_known_check(const std::string& check) {
  const auto& all = known_checks();
  if (std::find(all.begin(), all.end(), check) == all.end()) {
    fail(ErrorCode::UnknownCheck, "no check named " + check);
  }
}

CheckResult run_on_group(const PermGroup& g, const std::string& name, long p,
                         const std::string& check, ResultStore* store,
                         const RelativeArgs& rel) {
  CheckResult result;
  result.group = name;
  result.prime = p;
  result.check = check;
  const std::string key_check = store_check_key(check, rel);
  if (store) {
    if (auto hit = store->fetch(g.hash(), p, key_check)) {
      result.payload = *hit;
      result.from_cache = true;
      return result;
    }
  }
  result.payload = dump(payload_for(g, name, p, check, rel));
  if (store) store->put(g.hash(), p, key_check, result.payload);
  return result;
}

// Conjecture-tier status of a payload; theorem-tier problems never reach
// here (they are thrown while the payload is built).
std::pair<std::string, std::string> payload_status(const std::string& check,
                                                   const json& doc) {
  auto counterexample = [&](const std::string& detail) {
    return std::make_pair(std::string("counterexample"), detail);
  };
  if (check == "conja" || check == "relative" || check == "hypothesis") {
    if (!doc.at("holds").get<bool>()) {
      std::ostringstream detail;
      if (check == "hypothesis") {
        detail << "m = " << doc.at("m") << " < b = " << doc.at("b");
      } else {
        detail << "lhs " << doc.at("lhs") << " < rhs " << doc.at("rhs");
      }
      return counterexample(detail.str());
    }
  } else if (check == "bijection") {
    if (!doc.at("dominates").get<bool>()) {
      return counterexample("no degree-dominating pairing exists");
    }
  } else if (check == "pprimepart") {
    if (!doc.at("consistent").get<bool>()) {
      return {"violation", "p'-part diagnostic disagrees with Sylow normality"};
    }
  }
  return {"ok", ""};
}

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string value_to_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_array()) {
    std::string out;
    for (const auto& item : v) {
      if (!out.empty()) out += ';';
      out += value_to_cell(item);
    }
    return out;
  }
  if (v.is_object()) {
    std::string out;
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (!out.empty()) out += ';';
      out += it.key() + "=" + value_to_cell(it.value());
    }
    return out;
  }
  return v.dump();
}

json scan_row_json(const ScanRow& row) {
  json doc;
  doc["family"] = row.family;
  doc["n"] = row.n;
  doc["q"] = row.q;
  doc["p"] = row.p;
  doc["lhs_name"] = row.lhs_name;
  doc["lhs"] = row.lhs.str();
  doc["rhs_name"] = row.rhs_name;
  doc["rhs"] = row.rhs.str();
  doc["holds"] = row.holds;
  doc["notes"] = row.notes;
  return doc;
}

} // namespace

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> checks = {
      "conja",      "theoremc", "bijection", "stats",
      "pprimepart", "relative", "hypothesis"};
  return checks;
}

CheckResult run_check(const std::string& target, long p,
                      const std::string& check, ResultStore* store,
                      const RelativeArgs& rel) {
  require_known_check(check);
  if (!is_prime(p)) {
    fail(ErrorCode::ParseError,
         "checks need a prime, got " + std::to_string(p));
  }
  PermGroup g = load_group(target);
  return run_on_group(g, resolve_name(target), p, check, store, rel);
}

int payload_exit_code(const std::string& check, const std::string& payload) {
  auto [status, detail] = payload_status(check, json::parse(payload));
  (void)detail;
  if (status == "ok") return 0;
  return status == "counterexample" ? 2 : 3;
}

int CorpusScanSummary::exit_code() const {
  if (violations > 0) return 3;
  if (counterexamples > 0) return 2;
  return 0;
}

CorpusScanSummary scan_corpus(const CorpusManifest& manifest,
                              std::optional<long> prime,
                              const std::vector<std::string>& checks,
                              ResultStore* store) {
  for (const std::string& check : checks) require_known_check(check);
  if (prime && !is_prime(*prime)) {
    fail(ErrorCode::ParseError,
         "scan needs a prime, got " + std::to_string(*prime));
  }
  // Manifest validation happens in full before any check runs.
  std::vector<std::pair<std::string, PermGroup>> loaded;
  loaded.reserve(manifest.entries.size());
  for (const CorpusEntry& entry : manifest.entries) {
    loaded.emplace_back(entry.name, load_entry(entry));
  }

  CorpusScanSummary summary;
  for (const auto& [name, group] : loaded) {
    std::vector<long> primes;
    if (prime) {
      primes.push_back(*prime);
    } else {
      primes = prime_factors(group.order_long());
    }
    for (long p : primes) {
      for (const std::string& check : checks) {
        ScanOutcome outcome;
        outcome.group = name;
        outcome.prime = p;
        outcome.check = check;
        try {
          CheckResult result =
              run_on_group(group, name, p, check, store, RelativeArgs{});
          auto [status, detail] = payload_status(check, json::parse(result.payload));
          outcome.status = status;
          outcome.detail = detail;
        } catch (const Error& err) {
          outcome.status = "violation";
          outcome.detail =
              std::string(error_code_name(err.code())) + ": " + err.what();
        }
        if (outcome.status == "counterexample") ++summary.counterexamples;
        if (outcome.status == "violation") ++summary.violations;
        summary.outcomes.push_back(std::move(outcome));
      }
    }
  }
  return summary;
}

std::string summary_json(const CorpusScanSummary& summary) {
  json doc;
  doc["outcomes"] = json::array();
  for (const ScanOutcome& o : summary.outcomes) {
    json row;
    row["group"] = o.group;
    row["prime"] = o.prime;
    row["check"] = o.check;
    row["status"] = o.status;
    if (!o.detail.empty()) row["detail"] = o.detail;
    doc["outcomes"].push_back(row);
  }
  doc["counterexamples"] = summary.counterexamples;
  doc["violations"] = summary.violations;
  doc["exit_code"] = summary.exit_code();
  return dump(doc);
}

std::string summary_csv(const CorpusScanSummary& summary) {
  std::ostringstream out;
  out << "group,prime,check,status,detail\n";
  for (const ScanOutcome& o : summary.outcomes) {
    out << csv_escape(o.group) << ',' << o.prime << ',' << o.check << ','
        << o.status << ',' << csv_escape(o.detail) << '\n';
  }
  return out.str();
}

std::string render_table(const std::string& name, const PermGroup& g) {
  const CharacterTable& t = character_table(g);
  json doc;
  doc["group"] = name;
  doc["order"] = to_long(g.order());
  doc["degree"] = g.degree();
  json classes = json::array();
  for (std::size_t k = 0; k < t.classes.reps.size(); ++k) {
    json cls;
    cls["size"] = t.classes.sizes[k];
    cls["element_order"] = t.classes.rep_orders[k];
    cls["representative"] = t.classes.reps[k].to_cycle_string();
    classes.push_back(cls);
  }
  doc["classes"] = classes;
  json degrees = json::array();
  json rows = json::array();
  for (const Character& chi : t.chars) {
    degrees.push_back(chi.degree);
    json row = json::array();
    for (const Cyc& v : chi.values) row.push_back(v.str());
    rows.push_back(row);
  }
  doc["degrees"] = degrees;
  doc["characters"] = rows;
  return dump(doc);
}

std::string payload_to_csv(const std::string& payload) {
  json doc = json::parse(payload);
  std::ostringstream header, row;
  bool first = true;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (!first) {
      header << ',';
      row << ',';
    }
    first = false;
    header << csv_escape(it.key());
    row << csv_escape(value_to_cell(it.value()));
  }
  return header.str() + "\n" + row.str() + "\n";
}

std::string scan_report_json(const ScanReport& report) {
  std::ostringstream out;
  for (const ScanRow& row : report.rows) {
    out << scan_row_json(row).dump() << '\n';
  }
  for (const std::string& cell : report.skipped) {
    json doc;
    doc["skipped"] = cell;
    out << doc.dump() << '\n';
  }
  return out.str();
}

std::string scan_report_csv(const ScanReport& report) {
  std::ostringstream out;
  out << "family,n,q,p,lhs_name,lhs,rhs_name,rhs,holds,notes\n";
  for (const ScanRow& row : report.rows) {
    std::string notes;
    for (const std::string& note : row.notes) {
      if (!notes.empty()) notes += ';';
      notes += note;
    }
    out << row.family << ',' << row.n << ',' << row.q << ',' << row.p << ','
        << row.lhs_name << ',' << row.lhs.str() << ',' << row.rhs_name << ','
        << row.rhs.str() << ',' << (row.holds ? "true" : "false") << ','
        << csv_escape(notes) << '\n';
  }
  for (const std::string& cell : report.skipped) {
    out << "# skipped: " << cell << '\n';
  }
  return out.str();
}

std::string sporadic_json() {
  std::ostringstream out;
  for (const SporadicRecord& rec : sporadic_exceptions()) {
    json doc;
    doc["group"] = rec.name;
    doc["prime"] = rec.p;
    doc["normalizer_largest_pprime_degree"] = rec.b_val;
    doc["smallest_nontrivial_pprime_degree"] = rec.m_val;
    doc["hypothesis_holds"] = rec.b_val <= rec.m_val;
    out << doc.dump() << '\n';
  }
  return out.str();
}

std::string covers_json() {
  std::ostringstream out;
  for (const CoverRecord& rec : exceptional_cover_checks()) {
    json doc;
    doc["group"] = rec.name;
    doc["prime"] = rec.p;
    doc["normalizer_degree_bound"] = rec.bound;
    doc["smallest_nontrivial_degree"] = rec.m_val;
    doc["hypothesis_holds"] = rec.bound <= rec.m_val;
    out << doc.dump() << '\n';
  }
  return out.str();
}

std::string table1_json() {
  std::ostringstream out;
  for (const Table1Row& row : minimal_degree_table()) {
    json doc;
    doc["family"] = row.family;
    doc["conditions"] = row.conditions;
    doc["expression"] = row.expression;
    doc["lower_bound"] = row.lower_bound;
    out << doc.dump() << '\n';
  }
  return out.str();
}

} // namespace exchar
