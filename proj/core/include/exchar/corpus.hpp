#ifndef EXCHAR_CORPUS_HPP
#define EXCHAR_CORPUS_HPP

#include <string>
#include <vector>

#include "exchar/intmath.hpp"
#include "exchar/permgroup.hpp"

namespace exchar {

// One group of the test corpus. source is "builtin" for the compiled-in
// groups or a path to a generator file (see parse_group_file).
struct CorpusEntry {
  std::string name;
  std::string source;
  Int expected_order;
  std::vector<std::string> tags;
};

struct CorpusManifest {
  std::vector<CorpusEntry> entries;
  std::string version;
};

// The compiled-in manifest: cyclic samples, the five groups of order 8,
// dihedral and dicyclic samples, S_3..S_6, A_4..A_7, and the small linear
// groups, each with its expected order.
const CorpusManifest& builtin_manifest();

// Returns the generators of a compiled-in group; fails with UnknownGroup.
// Lookup accepts the canonical name and a few common alternate spellings.
const std::vector<std::string>& builtin_generators(const std::string& name);

// Builds the group for a manifest entry (builtin lookup or file parse) and
// checks its order against expected_order, failing with GroupMismatch on
// disagreement.
PermGroup load_entry(const CorpusEntry& entry);

// Resolves a command-line target: a corpus name, else a path to a generator
// file. Fails with UnknownGroup when neither matches.
PermGroup load_group(const std::string& target);

// Canonical corpus name for a target if it resolves to a builtin entry;
// otherwise the target itself.
std::string resolve_name(const std::string& target);

// Parses a generator file: `degree <n>` on the first non-comment line, then
// one permutation per line in cycle notation ("()" for the identity, `#`
// starts a comment). Fails with ParseError.
PermGroup parse_group_file(const std::string& path);

// Recomputes every entry's order; fails with GroupMismatch on the first
// entry whose computed order differs from expected_order.
void validate_manifest(const CorpusManifest& manifest);

} // namespace exchar

#endif
