#include "exchar/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "exchar/error.hpp"

namespace exchar {

namespace {

struct BuiltinGroup {
  const char* name;
  long order;
  int degree;
  std::vector<std::string> generators;
  std::vector<std::string> tags;
  std::vector<std::string> aliases;
};

// Generator words are plain cycle notation on 1..degree.
const std::vector<BuiltinGroup>& builtin_groups() {
  static const std::vector<BuiltinGroup> groups = {
      {"C2", 2, 2, {"(1,2)"}, {"cyclic", "abelian"}, {}},
      {"C3", 3, 3, {"(1,2,3)"}, {"cyclic", "abelian"}, {}},
      {"C4", 4, 4, {"(1,2,3,4)"}, {"cyclic", "abelian"}, {}},
      {"C5", 5, 5, {"(1,2,3,4,5)"}, {"cyclic", "abelian"}, {}},
      {"C6", 6, 6, {"(1,2,3,4,5,6)"}, {"cyclic", "abelian"}, {}},
      {"C7", 7, 7, {"(1,2,3,4,5,6,7)"}, {"cyclic", "abelian"}, {}},
      {"C8", 8, 8, {"(1,2,3,4,5,6,7,8)"}, {"cyclic", "abelian", "order8"}, {}},
      {"C9", 9, 9, {"(1,2,3,4,5,6,7,8,9)"}, {"cyclic", "abelian"}, {}},
      {"C12", 12, 12, {"(1,2,3,4,5,6,7,8,9,10,11,12)"}, {"cyclic", "abelian"}, {}},
      {"C15",
       15,
       15,
       {"(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15)"},
       {"cyclic", "abelian"},
       {}},
      {"V4", 4, 4, {"(1,2)(3,4)", "(1,3)(2,4)"}, {"abelian"}, {"C2xC2"}},
      {"C2xC2xC2",
       8,
       6,
       {"(1,2)", "(3,4)", "(5,6)"},
       {"abelian", "order8"},
       {"C2^3"}},
      {"C4xC2", 8, 6, {"(1,2,3,4)", "(5,6)"}, {"abelian", "order8"}, {}},
      {"D8", 8, 4, {"(1,2,3,4)", "(1,3)"}, {"dihedral", "order8"}, {}},
      {"Q8",
       8,
       8,
       {"(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"},
       {"quaternion", "order8"},
       {}},
      {"S3", 6, 3, {"(1,2,3)", "(1,2)"}, {"symmetric"}, {}},
      {"S4", 24, 4, {"(1,2,3,4)", "(1,2)"}, {"symmetric"}, {}},
      {"S5", 120, 5, {"(1,2,3,4,5)", "(1,2)"}, {"symmetric"}, {}},
      {"S6", 720, 6, {"(1,2,3,4,5,6)", "(1,2)"}, {"symmetric"}, {}},
      {"A4", 12, 4, {"(1,2,3)", "(2,3,4)"}, {"alternating"}, {}},
      {"A5", 60, 5, {"(1,2,3,4,5)", "(1,2,3)"}, {"alternating", "simple"}, {}},
      {"A6",
       360,
       6,
       {"(1,2,3)", "(2,3,4,5,6)"},
       {"alternating", "simple"},
       {}},
      {"A7",
       2520,
       7,
       {"(1,2,3)", "(1,2,3,4,5,6,7)"},
       {"alternating", "simple"},
       {}},
      {"D10", 10, 5, {"(1,2,3,4,5)", "(2,5)(3,4)"}, {"dihedral"}, {}},
      {"D12", 12, 6, {"(1,2,3,4,5,6)", "(2,6)(3,5)"}, {"dihedral"}, {}},
      {"Dic3",
       12,
       7,
       {"(1,2,3)", "(2,3)(4,5,6,7)"},
       {"dicyclic"},
       {"C3:C4"}},
      {"F21", 21, 7, {"(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"}, {"frobenius"}, {}},
      {"SL(2,3)",
       24,
       8,
       {"(1,3,2,6)(4,5,8,7)", "(3,4,5)(6,8,7)"},
       {"linear"},
       {"SL2(3)", "SL_2(3)"}},
      {"GL(2,3)",
       48,
       8,
       {"(1,3,2,6)(4,5,8,7)", "(3,4,5)(6,8,7)", "(1,2)(4,5)(7,8)"},
       {"linear"},
       {"GL2(3)", "GL_2(3)"}},
      {"SL(2,5)",
       120,
       24,
       {"(1,5,4,20)(2,10,3,15)(6,9,24,21)(7,14,23,16)(8,19,22,11)"
        "(12,13,18,17)",
        "(5,6,7,8,9)(10,12,14,11,13)(15,18,16,19,17)(20,24,23,22,21)"},
       {"linear"},
       {"SL2(5)", "SL_2(5)"}},
      {"PSL(2,7)",
       168,
       8,
       {"(1,2,3,4,5,6,7)", "(1,8)(2,7)(3,4)(5,6)"},
       {"linear", "simple"},
       {"PSL2(7)", "PSL_2(7)", "L2(7)"}},
      {"S3xC5",
       30,
       8,
       {"(1,2,3)", "(1,2)", "(4,5,6,7,8)"},
       {"direct-product"},
       {"S3*C5"}},
  };
  return groups;
}

const std::map<std::string, const BuiltinGroup*>& builtin_index() {
  static const std::map<std::string, const BuiltinGroup*> index = [] {
    std::map<std::string, const BuiltinGroup*> out;
    for (const BuiltinGroup& g : builtin_groups()) {
      out.emplace(g.name, &g);
      for (const std::string& alias : g.aliases) out.emplace(alias, &g);
    }
    return out;
  }();
  return index;
}

const BuiltinGroup* find_builtin(const std::string& name) {
  auto it = builtin_index().find(name);
  return it == builtin_index().end() ? nullptr : it->second;
}

PermGroup build_builtin(const BuiltinGroup& entry) {
  std::vector<Permutation> gens;
  gens.reserve(entry.generators.size());
  for (const std::string& word : entry.generators) {
    gens.push_back(Permutation::parse_cycles(word, entry.degree));
  }
  return PermGroup::from_generators(std::move(gens), entry.degree);
}

} // namespace

const CorpusManifest& builtin_manifest() {
  static const CorpusManifest manifest = [] {
    CorpusManifest out;
    out.version = "1.0.0";
    for (const BuiltinGroup& g : builtin_groups()) {
      out.entries.push_back({g.name, "builtin", Int(g.order), g.tags});
    }
    return out;
  }();
  return manifest;
}

const std::vector<std::string>& builtin_generators(const std::string& name) {
  const BuiltinGroup* entry = find_builtin(name);
  if (!entry) {
    fail(ErrorCode::UnknownGroup, "no compiled-in group named " + name);
  }
  return entry->generators;
}

PermGroup load_entry(const CorpusEntry& entry) {
  PermGroup group = entry.source == "builtin" ? load_group(entry.name)
                                              : parse_group_file(entry.source);
  if (group.order() != entry.expected_order) {
    std::ostringstream msg;
    msg << "corpus entry " << entry.name << ": computed order "
        << group.order() << " differs from expected " << entry.expected_order;
    fail(ErrorCode::GroupMismatch, msg.str());
  }
  return group;
}

PermGroup load_group(const std::string& target) {
  if (const BuiltinGroup* entry = find_builtin(target)) {
    return build_builtin(*entry);
  }
  if (std::ifstream probe{target}; probe.good()) {
    return parse_group_file(target);
  }
  fail(ErrorCode::UnknownGroup,
       "not a corpus group name or a readable file: " + target);
}

std::string resolve_name(const std::string& target) {
  if (const BuiltinGroup* entry = find_builtin(target)) return entry->name;
  return target;
}

PermGroup parse_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    fail(ErrorCode::ParseError, "cannot open group file " + path);
  }
  std::string line;
  int degree = -1;
  std::vector<Permutation> gens;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto pos = line.find('#'); pos != std::string::npos) {
      line.erase(pos);
    }
    auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
    line.erase(std::remove_if(line.begin(), line.end(), is_space), line.end());
    if (line.empty()) continue;
    if (degree < 0) {
      // first significant line: "degree <n>" (spaces already stripped)
      constexpr const char* kw = "degree";
      if (line.rfind(kw, 0) != 0) {
        fail(ErrorCode::ParseError,
             path + ":" + std::to_string(line_no) +
                 ": expected 'degree <n>' before any generator");
      }
      try {
        degree = std::stoi(line.substr(6));
      } catch (const std::exception&) {
        fail(ErrorCode::ParseError,
             path + ":" + std::to_string(line_no) + ": bad degree value");
      }
      if (degree <= 0) {
        fail(ErrorCode::ParseError,
             path + ":" + std::to_string(line_no) + ": degree must be >= 1");
      }
      continue;
    }
    gens.push_back(Permutation::parse_cycles(line, degree));
  }
  if (degree < 0) {
    fail(ErrorCode::ParseError, path + ": no 'degree <n>' line found");
  }
  return PermGroup::from_generators(std::move(gens), degree);
}

void validate_manifest(const CorpusManifest& manifest) {
  for (const CorpusEntry& entry : manifest.entries) {
    load_entry(entry); // throws GroupMismatch on a stale expected_order
  }
}

} // namespace exchar
