// One PASS/FAIL line per acceptance criterion; exit status is the number of
// failed criteria.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "fixset/aut_engine.hpp"
#include "fixset/corpus.hpp"
#include "fixset/fixing.hpp"
#include "fixset/graph_io.hpp"
#include "fixset/perm.hpp"
#include "fixset/products.hpp"
#include "fixset/theorems.hpp"
#include "oracle/brute_force.hpp"

namespace fixset {
namespace {

// Wall-clock budgets in seconds.
constexpr double kFamilyBudget = 1.0;
constexpr double kOracleBudget = 300.0;
constexpr double kScanBudget = 600.0;
constexpr double kIterBudget = 60.0;

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void Criterion(int number, const std::string& name, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("[%s] %d %s (%.2fs): %s\n", o.pass ? "PASS" : "FAIL", number, name.c_str(),
              Seconds(start), o.detail.c_str());
  std::fflush(stdout);
}

Graph Union(const std::vector<Graph>& parts) { return DisjointUnion(parts).graph; }

Outcome KnownFamilies() {
  int checked = 0;
  double slowest = 0;
  std::string bad;
  auto check = [&](Family f, std::size_t n, std::size_t expected) {
    const auto start = Clock::now();
    const FixingResult r = FixingNumber(NamedFamily(f, n));
    slowest = std::max(slowest, Seconds(start));
    ++checked;
    if (r.fix_number != expected || !r.optimal) {
      bad += " n=" + std::to_string(n) + " got " + std::to_string(r.fix_number);
    }
  };
  for (std::size_t n = 2; n <= 8; ++n) check(Family::kComplete, n, n - 1);
  for (std::size_t n = 2; n <= 10; ++n) check(Family::kPath, n, 1);
  for (std::size_t n = 3; n <= 10; ++n) check(Family::kCycle, n, 2);
  const bool pass = bad.empty() && slowest < kFamilyBudget;
  return {pass, std::to_string(checked) + " graphs, slowest " + std::to_string(slowest) +
                    "s" + bad};
}

Outcome OracleEquivalence() {
  const auto start = Clock::now();
  const auto corpus = AllGraphsUpTo(7);
  std::size_t order_mismatch = 0;
  std::size_t fix_mismatch = 0;
  for (const Graph& g : corpus) {
    const auto auts = oracle::AllAutomorphisms(g);
    if (GroupOrder(AutomorphismGenerators(g).generators) != auts.size()) ++order_mismatch;
    if (FixingNumber(g).fix_number != oracle::FixingNumber(g)) ++fix_mismatch;
  }
  std::size_t up_to_5 = 0;
  for (const Graph& g : corpus) up_to_5 += g.order() <= 5;
  const bool pass = corpus.size() >= 500 && up_to_5 == 52 && order_mismatch == 0 &&
                    fix_mismatch == 0 && Seconds(start) < kOracleBudget;
  return {pass, std::to_string(corpus.size()) + " graphs (" + std::to_string(up_to_5) +
                    " on <= 5 vertices), order mismatches " +
                    std::to_string(order_mismatch) + ", fix mismatches " +
                    std::to_string(fix_mismatch)};
}

Outcome CompositionFixtures() {
  std::string detail;
  bool pass = true;
  auto expect = [&](const std::string& name, const Graph& g1, const Graph& g2,
                    std::size_t want) {
    const std::size_t got = FixingNumber(Composition(g1, g2).graph).fix_number;
    detail += name + "=" + std::to_string(got) + " ";
    pass = pass && got == want;
  };
  expect("K2[K3]", NamedFamily(Family::kComplete, 2), NamedFamily(Family::kComplete, 3), 5);
  const Graph p3 = NamedFamily(Family::kPath, 3);
  expect("P2[P3+P3]", NamedFamily(Family::kPath, 2), Union({p3, p3}), 4);
  for (std::size_t m = 2; m <= 3; ++m) {
    for (std::size_t n = 2; n <= 3; ++n) {
      const Graph pn = NamedFamily(Family::kPath, n);
      const std::size_t l = 2;
      expect("P" + std::to_string(m) + "[2P" + std::to_string(n) + "]",
             NamedFamily(Family::kPath, m), Union({pn, pn}), m * l);
    }
  }
  return {pass, detail};
}

Outcome CompositionScan() {
  const auto start = Clock::now();
  CorpusOptions opts;
  opts.g1_max = 3;
  opts.g2_max = 3;
  const Limits limits;
  std::string detail;
  bool pass = true;
  for (TheoremId id : {TheoremId::kCompositionDistance, TheoremId::kLiftedAutomorphisms}) {
    const auto s = ScanCorpus(DefaultCorpus(id, opts), id, limits);
    const bool all = s.count(Verdict::kConfirmed) == s.reports.size();
    pass = pass && all && !s.reports.empty();
    detail += ToString(id) + " " + std::to_string(s.count(Verdict::kConfirmed)) + "/" +
              std::to_string(s.reports.size()) + " confirmed; ";
  }
  const auto b = ScanCorpus(DefaultCorpus(TheoremId::kCompositionBounds, opts),
                            TheoremId::kCompositionBounds, limits);
  std::size_t flagged = 0;
  std::size_t flagged_symmetric = 0;
  std::size_t case1_fail = 0;
  for (const auto& r : b.reports) {
    if (r.numbers.contains("connected_case.holds") && r.numbers.at("connected_case.holds") == 0) {
      ++case1_fail;
    }
    if (r.numbers.at("flag.connected_case_vs_asymmetric_factor") != 0) {
      ++flagged;
      if (!IsAsymmetric(ParseGraph6(*r.g2))) ++flagged_symmetric;
    }
  }
  pass = pass && b.count(Verdict::kViolated) == 0 && flagged_symmetric == 0 &&
         Seconds(start) < kScanBudget;
  detail += "bounds violated " + std::to_string(b.count(Verdict::kViolated)) + "/" +
            std::to_string(b.reports.size()) + ", discrepancy flags " + std::to_string(flagged) +
            " (on symmetric G2: " + std::to_string(flagged_symmetric) +
            "), connected-case equality failures " + std::to_string(case1_fail);
  return {pass, detail};
}

Outcome CoronaScan() {
  const auto start = Clock::now();
  CorpusOptions opts;
  opts.corona_g1_max = 4;
  opts.g2_max = 3;
  const auto s = ScanCorpus(DefaultCorpus(TheoremId::kCorona, opts), TheoremId::kCorona, Limits{});
  std::int64_t pairs = 0;
  std::int64_t copies = 0;
  for (const auto& r : s.reports) {
    if (r.numbers.contains("similar_pairs")) pairs += r.numbers.at("similar_pairs");
    if (r.numbers.contains("copy_checks")) copies += r.numbers.at("copy_checks");
  }
  const bool pass = s.count(Verdict::kViolated) == 0 && s.count(Verdict::kSkippedCap) == 0 &&
                    s.count(Verdict::kConfirmed) > 0 && Seconds(start) < kScanBudget;
  return {pass, std::to_string(s.reports.size()) + " instances: confirmed " +
                    std::to_string(s.count(Verdict::kConfirmed)) + ", hypothesis_not_met " +
                    std::to_string(s.count(Verdict::kHypothesisNotMet)) + ", violated " +
                    std::to_string(s.count(Verdict::kViolated)) + "; copy checks " +
                    std::to_string(copies) + ", similar pairs " + std::to_string(pairs)};
}

Outcome IteratedCorona() {
  const auto start = Clock::now();
  const Graph p2 = NamedFamily(Family::kPath, 2);
  const Graph k1 = NamedFamily(Family::kComplete, 1);
  const Graph k2 = NamedFamily(Family::kComplete, 2);
  const FixingResult a = FixingNumber(CoronaIter(p2, p2, 2).graph);
  const FixingResult b = FixingNumber(CoronaIter(k1, k2, 2).graph);
  const auto ra = VerifyCoronaIter(p2, p2, 2);
  const auto rb = VerifyCoronaIter(k1, k2, 2);
  const bool pass = a.fix_number == 6 && b.fix_number == 3 && a.optimal && b.optimal &&
                    ra.verdict == Verdict::kConfirmed && rb.verdict == Verdict::kConfirmed &&
                    ra.numbers.at("formula") == 6 && rb.numbers.at("formula") == 3 &&
                    Seconds(start) < kIterBudget;
  return {pass, "P2 corona^2 P2 = " + std::to_string(a.fix_number) +
                    ", K1 corona^2 K2 = " + std::to_string(b.fix_number)};
}

Outcome DisconnectedFormula() {
  const auto corpus = MultiComponentCorpus(50, 1);
  std::size_t agree = 0;
  std::size_t disagree = 0;
  std::size_t flagged = 0;
  std::size_t flagged_disagree = 0;
  std::size_t with_twins = 0;
  for (const Graph& g : corpus) {
    const auto r = VerifyDisconnectedFormula(g);
    const bool flag = r.numbers.at("flag.isomorphic_non_asymmetric_components") != 0;
    const bool ok = r.numbers.at("formula") == r.numbers.at("solver");
    for (const auto& cls : FixingNumberDisconnected(g).asymmetric_classes) {
      if (cls.components.size() > 1) {
        ++with_twins;
        break;
      }
    }
    if (flag) {
      ++flagged;
      flagged_disagree += !ok;
    } else {
      ok ? ++agree : ++disagree;
    }
  }
  const bool pass = corpus.size() == 50 && disagree == 0 && with_twins > 0;
  return {pass, std::to_string(corpus.size()) + " graphs (" + std::to_string(with_twins) +
                    " with asymmetric twins): unflagged agree " + std::to_string(agree) +
                    ", unflagged disagree " + std::to_string(disagree) +
                    "; flagged (isomorphic non-asymmetric components) " +
                    std::to_string(flagged) + ", of which disagree " +
                    std::to_string(flagged_disagree)};
}

Outcome Codec() {
  std::vector<Graph> corpus = AllGraphsUpTo(7);
  for (const auto& g : MultiComponentCorpus(50, 1)) corpus.push_back(g);
  std::size_t bad = 0;
  for (const Graph& g : corpus) {
    const std::string code = EmitGraph6(g);
    const Graph back = ParseGraph6(code);
    if (!(back == g) || EmitGraph6(back) != code) ++bad;
  }
  const Graph k3 = ParseGraph6("Bw");
  const bool bw = k3 == NamedFamily(Family::kComplete, 3) && EmitGraph6(k3) == "Bw";
  return {bad == 0 && bw, std::to_string(corpus.size()) + " graphs, mismatches " +
                              std::to_string(bad) + (bw ? ", Bw ok" : ", Bw FAILED")};
}

Outcome Determinism() {
  auto run = [](std::vector<std::string> args) {
    std::istringstream in;
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::RunCli(args, in, out, err);
    return std::make_pair(code, out.str());
  };
  const auto a = run({"verify", "--theorem", "all", "--json"});
  const auto b = run({"verify", "--theorem", "all", "--json"});
  const auto c = run({"verify", "--theorem", "all", "--json", "--jobs", "4"});
  std::size_t lines = 0;
  for (char ch : a.second) lines += ch == '\n';
  const bool pass = a.second == b.second && a.second == c.second && lines > 0 &&
                    a.first == b.first;
  return {pass, std::to_string(lines) + " JSONL lines, " + std::to_string(a.second.size()) +
                    " bytes, runs identical: " + (a.second == b.second ? "yes" : "no") +
                    ", parallel identical: " + (a.second == c.second ? "yes" : "no") +
                    ", exit " + std::to_string(a.first)};
}

}  // namespace
}  // namespace fixset

int main() {
  using namespace fixset;
  Criterion(1, "known families", KnownFamilies);
  Criterion(2, "oracle equivalence", OracleEquivalence);
  Criterion(3, "composition fixtures", CompositionFixtures);
  Criterion(4, "composition property scan", CompositionScan);
  Criterion(5, "corona formula scan", CoronaScan);
  Criterion(6, "iterated corona", IteratedCorona);
  Criterion(7, "disconnected formula", DisconnectedFormula);
  Criterion(8, "graph6 codec", Codec);
  Criterion(9, "determinism", Determinism);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures;
}
