#include "doctest.h"

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>

#include "exchar/corpus.hpp"
#include "exchar/error.hpp"
#include "exchar/store.hpp"
#include "exchar/version.hpp"

using namespace exchar;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("exchar-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

} // namespace

TEST_CASE("builtin manifest is complete, unique, and validated") {
  const auto& m = builtin_manifest();
  CHECK(m.entries.size() == 32);
  CHECK_FALSE(m.version.empty());
  std::set<std::string> names;
  for (const auto& e : m.entries) {
    CHECK(e.source == "builtin");
    CHECK(names.insert(e.name).second);
    CHECK(load_entry(e).order() == e.expected_order);
  }
  validate_manifest(m); // must not throw
}

TEST_CASE("alternate spellings resolve to the same group") {
  CHECK(load_group("SL2(3)").hash() == load_group("SL(2,3)").hash());
  CHECK(load_group("SL_2(3)").hash() == load_group("SL(2,3)").hash());
  CHECK(load_group("L2(7)").hash() == load_group("PSL(2,7)").hash());
  CHECK(load_group("C2xC2").hash() == load_group("V4").hash());
  CHECK(load_group("C2^3").hash() == load_group("C2xC2xC2").hash());
  CHECK(load_group("S3*C5").hash() == load_group("S3xC5").hash());
  CHECK(load_group("C3:C4").hash() == load_group("Dic3").hash());
  CHECK(resolve_name("SL2(3)") == "SL(2,3)");
  CHECK(resolve_name("L2(7)") == "PSL(2,7)");
  CHECK(resolve_name("/no/such/file") == "/no/such/file");
}

TEST_CASE("unknown targets are rejected") {
  CHECK_THROWS_AS(load_group("Nope"), Error);
  CHECK_THROWS_AS(builtin_generators("Nope"), Error);
  try {
    load_group("Nope");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownGroup);
  }
}

TEST_CASE("generator files parse with comments and blank lines") {
  TempDir tmp;
  fs::path file = tmp.path / "group.txt";
  {
    std::ofstream out(file);
    out << "# a symmetric group on four points\n";
    out << "\n";
    out << "degree 4\n";
    out << "(1,2,3,4)  # the long cycle\n";
    out << "(1,2)\n";
  }
  PermGroup g = parse_group_file(file.string());
  CHECK(g.degree() == 4);
  CHECK(g.order() == 24);
  // load_group falls through to the file path
  CHECK(load_group(file.string()).order() == 24);

  fs::path ident = tmp.path / "trivial.txt";
  {
    std::ofstream out(ident);
    out << "degree 3\n()\n";
  }
  CHECK(parse_group_file(ident.string()).order() == 1);
}

TEST_CASE("malformed generator files are rejected") {
  TempDir tmp;
  auto write = [&](const std::string& name, const std::string& body) {
    fs::path p = tmp.path / name;
    std::ofstream out(p);
    out << body;
    return p.string();
  };
  CHECK_THROWS_AS(parse_group_file((tmp.path / "missing.txt").string()),
                  Error);
  CHECK_THROWS_AS(parse_group_file(write("a.txt", "(1,2)\n")), Error);
  CHECK_THROWS_AS(parse_group_file(write("b.txt", "degree zero\n(1,2)\n")),
                  Error);
  CHECK_THROWS_AS(parse_group_file(write("c.txt", "degree 4\n(1,5)\n")),
                  Error);
  // No generator lines at all is not malformed: it is the trivial group.
  CHECK(parse_group_file(write("d.txt", "degree 4\n")).order() == 1);
}

TEST_CASE("manifest entries with wrong orders are flagged") {
  CorpusEntry bad{"S3", "builtin", Int(7), {}};
  CHECK_THROWS_AS(load_entry(bad), Error);
  try {
    load_entry(bad);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GroupMismatch);
  }
  CorpusManifest m = builtin_manifest();
  m.entries[3].expected_order = 999;
  CHECK_THROWS_AS(validate_manifest(m), Error);
}

TEST_CASE("result store round-trips payloads byte for byte") {
  TempDir tmp;
  ResultStore store(tmp.path / "cache");
  std::string hash(64, 'a');
  CHECK_FALSE(store.fetch(hash, 2, "conja").has_value());
  std::string payload = "{\n  \"lhs\": 44,\n  \"tail\": \"\\n quoted\"\n}\n";
  fs::path where = store.put(hash, 2, "conja", payload);
  CHECK(fs::exists(where));
  auto back = store.fetch(hash, 2, "conja");
  REQUIRE(back.has_value());
  CHECK(*back == payload);

  // layout: root/<hash[0:2]>/<hash>/<p>-<check>-v<version>.json
  fs::path expected = tmp.path / "cache" / hash.substr(0, 2) / hash /
                      ("2-conja-v" + std::string(kEngineVersion) + ".json");
  CHECK(where == expected);

  // distinct keys live in distinct files
  store.put(hash, 3, "conja", "other");
  store.put(hash, 2, "theoremc", "third");
  CHECK(*store.fetch(hash, 2, "conja") == payload);
  CHECK(*store.fetch(hash, 3, "conja") == "other");
  CHECK(*store.fetch(hash, 2, "theoremc") == "third");

  // overwrite is atomic-by-rename: last write wins, no partial state
  store.put(hash, 2, "conja", "second version");
  CHECK(*store.fetch(hash, 2, "conja") == "second version");
}

TEST_CASE("store rejects malformed group hashes") {
  TempDir tmp;
  ResultStore store(tmp.path / "cache");
  CHECK_THROWS_AS(store.put("x", 2, "conja", "payload"), Error);
  CHECK_THROWS_AS(store.fetch("x", 2, "conja"), Error);
}
