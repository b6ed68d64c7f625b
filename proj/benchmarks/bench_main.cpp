#include <benchmark/benchmark.h>

#include <filesystem>
#include <string>

#include "exchar/chartab.hpp"
#include "exchar/checks.hpp"
#include "exchar/classdata.hpp"
#include "exchar/corpus.hpp"
#include "exchar/cyclotomic.hpp"
#include "exchar/lie.hpp"
#include "exchar/mckay.hpp"
#include "exchar/permgroup.hpp"
#include "exchar/store.hpp"

using namespace exchar;

namespace {

// Stabilizer-chain construction from scratch.
void BM_GroupConstruction(benchmark::State& state) {
  const auto& gens = builtin_generators("S6");
  std::vector<Permutation> parsed;
  for (const auto& g : gens) parsed.push_back(Permutation::parse_cycles(g, 6));
  for (auto _ : state) {
    PermGroup g = PermGroup::from_generators(parsed, 6);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_GroupConstruction);

// Conjugacy class enumeration including canonical ordering (not memoized).
void BM_ConjugacyClasses(benchmark::State& state) {
  PermGroup g = load_group("S5");
  for (auto _ : state) {
    ClassData cd = conjugacy_classes(g);
    benchmark::DoNotOptimize(cd.class_count());
  }
}
BENCHMARK(BM_ConjugacyClasses);

// Exact cyclotomic arithmetic in a composite conductor.
void BM_CyclotomicProduct(benchmark::State& state) {
  Cyc a = Cyc::root_of_unity(12, 1) + Cyc::root_of_unity(5, 2);
  Cyc b = Cyc::root_of_unity(15, 4) - Cyc(3);
  for (auto _ : state) {
    Cyc c = a * b;
    benchmark::DoNotOptimize(c.conductor());
  }
}
BENCHMARK(BM_CyclotomicProduct);

// Full inequality report (character tables warm after the first iteration;
// normalizer, complement and extension machinery run every time).
void BM_InequalityReportWarm(benchmark::State& state) {
  PermGroup g = load_group("A5");
  character_table(g);
  for (auto _ : state) {
    ConjAReport rep = conjecture_a_report(g, 2);
    benchmark::DoNotOptimize(rep.lhs);
  }
}
BENCHMARK(BM_InequalityReportWarm);

// Closed-form grid of 163 defining-characteristic rows.
void BM_DefiningCharGrid(benchmark::State& state) {
  for (auto _ : state) {
    ScanReport rep = defining_char_scan(LieFamily::SU, 3, 7, 49);
    benchmark::DoNotOptimize(rep.rows.size());
  }
}
BENCHMARK(BM_DefiningCharGrid);

// Result-store write + read round trip.
void BM_StoreRoundTrip(benchmark::State& state) {
  namespace fs = std::filesystem;
  fs::path root = fs::temp_directory_path() / "exchar-bench-store";
  ResultStore store(root);
  std::string hash(64, 'b');
  std::string payload(512, 'x');
  long p = 2;
  for (auto _ : state) {
    store.put(hash, p, "conja", payload);
    benchmark::DoNotOptimize(store.fetch(hash, p, "conja"));
  }
  std::error_code ec;
  fs::remove_all(root, ec);
}
BENCHMARK(BM_StoreRoundTrip);

} // namespace

BENCHMARK_MAIN();
