#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fixset/fixing.hpp"
#include "fixset/graph.hpp"
#include "json.hpp"

namespace fixset {

enum class TheoremId {
  kCompositionDistance,
  kLiftedAutomorphisms,
  kCompositionSlices,
  kCompositionBounds,
  kDisconnectedFormula,
  kCorona,
  kCoronaIter,
  kJoinLemmas,
};

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::kCompositionDistance, TheoremId::kLiftedAutomorphisms,
    TheoremId::kCompositionSlices,   TheoremId::kCompositionBounds,
    TheoremId::kDisconnectedFormula, TheoremId::kCorona,
    TheoremId::kCoronaIter,          TheoremId::kJoinLemmas,
};

std::string ToString(TheoremId id);
std::optional<TheoremId> ParseTheoremId(std::string_view name);

enum class Verdict { kConfirmed, kViolated, kHypothesisNotMet, kSkippedCap };

std::string ToString(Verdict v);

// Inputs of one check. Single-graph theorems leave g2 empty.
struct Instance {
  Graph g1;
  std::optional<Graph> g2;
  std::optional<int> k;
};

// One theorem checked on one instance. `numbers` holds named quantities
// (formula sides, sub-check counts, hypothesis predicates as 0/1, flags as
// 0/1 under "flag."). A violated verdict always carries a witness that can
// be re-checked without the harness.
struct VerificationReport {
  TheoremId theorem;
  std::string g1;
  std::optional<std::string> g2;
  std::optional<int> k;
  Verdict verdict = Verdict::kConfirmed;
  std::map<std::string, std::int64_t> numbers;
  std::optional<nlohmann::json> witness;

  nlohmann::json ToJson() const;
  std::string SortKey() const;
};

struct Limits {
  // Largest graph handed to the exact fixing-number solver.
  std::size_t cap = 64;
};

VerificationReport VerifyCompositionDistance(const Graph& g1, const Graph& g2,
                                             const Limits& limits = {});
VerificationReport VerifyLiftedAutomorphisms(const Graph& g1, const Graph& g2,
                                             const Limits& limits = {});
VerificationReport VerifyCompositionSlices(const Graph& g1, const Graph& g2,
                                           const Limits& limits = {});
VerificationReport VerifyCompositionBounds(const Graph& g1, const Graph& g2,
                                           const Limits& limits = {});
VerificationReport VerifyDisconnectedFormula(const Graph& g, const Limits& limits = {});
VerificationReport VerifyCorona(const Graph& g1, const Graph& g2, const Limits& limits = {});
VerificationReport VerifyCoronaIter(const Graph& g1, const Graph& g2, int k,
                                    const Limits& limits = {});
VerificationReport VerifyJoinLemmas(const Graph& g, const Limits& limits = {});

VerificationReport Verify(TheoremId id, const Instance& instance, const Limits& limits);

// Re-checks a violated report's witness from scratch; true when the witness
// reproduces. Reports without a witness return false.
bool RecheckWitness(const VerificationReport& report);

struct ScanSummary {
  std::map<Verdict, std::size_t> counts;
  std::vector<VerificationReport> reports;  // sorted by SortKey()

  std::size_t count(Verdict v) const {
    const auto it = counts.find(v);
    return it == counts.end() ? 0 : it->second;
  }
  // Instances whose report sets numbers[name] to a nonzero value.
  std::size_t count_flag(const std::string& name) const;
};

// Evaluates every instance; a violated instance never stops the scan.
// `jobs` > 1 evaluates instances in parallel; the result is identical.
ScanSummary ScanCorpus(const std::vector<Instance>& corpus, TheoremId id,
                       const Limits& limits, int jobs = 1);
ScanSummary ScanCorpusSerial(const std::vector<Instance>& corpus, TheoremId id,
                             const Limits& limits);

struct CorpusOptions {
  std::size_t g1_max = 3;    // connected first factors on 1..g1_max vertices
  std::size_t g2_max = 3;    // second factors on 1..g2_max vertices
  std::size_t corona_g1_max = 4;
  int k_max = 2;             // iterated corona depths 1..k_max
  std::size_t iter_g1_max = 2;
  std::size_t iter_g2_max = 2;
  std::size_t join_max = 7;  // all graphs on 1..join_max vertices
  std::size_t disconnected_count = 50;
  std::uint64_t seed = 1;
};

// The desk-scale corpus each theorem is scanned on by default.
std::vector<Instance> DefaultCorpus(TheoremId id, const CorpusOptions& options);

}  // namespace fixset
