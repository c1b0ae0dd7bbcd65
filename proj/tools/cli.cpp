#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fixset/aut_engine.hpp"
#include "fixset/error.hpp"
#include "fixset/fixing.hpp"
#include "fixset/graph_io.hpp"
#include "fixset/perm.hpp"
#include "fixset/products.hpp"
#include "fixset/theorems.hpp"
#include "json.hpp"

namespace fixset::cli {
namespace {

using nlohmann::json;

struct IoError : Error {
  using Error::Error;
};

struct Common {
  std::string format = "graph6";
  bool json = false;
  std::string output;
};

GraphFormat ToFormat(const std::string& name) {
  return name == "edgelist" ? GraphFormat::kEdgeList : GraphFormat::kGraph6;
}

std::vector<Graph> LoadGraphs(const std::string& path, const std::string& format,
                              std::istream& in) {
  try {
    if (path == "-") return ReadGraphs(in, ToFormat(format));
    std::ifstream file(path);
    if (!file) throw IoError("cannot open " + path);
    return ReadGraphs(file, ToFormat(format));
  } catch (const ParseError& e) {
    throw IoError((path == "-" ? std::string("<stdin>") : path) + ":" +
                  std::to_string(e.position()) + ": " + e.what());
  }
}

Graph LoadOne(const std::string& path, const std::string& format, std::istream& in) {
  auto graphs = LoadGraphs(path, format, in);
  if (graphs.size() != 1) {
    throw IoError(path + ": expected one graph, found " + std::to_string(graphs.size()));
  }
  return std::move(graphs.front());
}

std::string JoinInts(const std::vector<Vertex>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string CellsString(const OrbitPartition& o) {
  std::string s;
  for (const auto& cell : o.cells()) s += "{" + JoinInts(cell) + "}";
  return s;
}

json CellsJson(const OrbitPartition& o) { return o.cells(); }

// Writes to -o when given, stdout otherwise.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& out) : out_(&out) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw IoError("cannot write " + path);
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

int CmdFix(const Common& c, const std::string& input, std::size_t cap, bool greedy,
           std::istream& in, std::ostream& out) {
  Sink sink(c.output, out);
  for (const Graph& g : LoadGraphs(input, c.format, in)) {
    const FixingResult r = greedy ? GreedyFixingSet(g) : FixingNumber(g, cap);
    if (c.json) {
      sink.stream() << json{{"graph", InstanceCode(g)},
                            {"fix_number", r.fix_number},
                            {"witness", r.witness},
                            {"optimal", r.optimal}}
                           .dump()
                    << '\n';
    } else {
      sink.stream() << InstanceCode(g) << "\tfix_number=" << r.fix_number
                    << (r.optimal ? "" : " (upper bound)") << "\twitness={"
                    << JoinInts(r.witness) << "}\n";
    }
  }
  return kExitOk;
}

int CmdAut(const Common& c, const std::string& input, bool orbits_only, std::istream& in,
           std::ostream& out) {
  Sink sink(c.output, out);
  for (const Graph& g : LoadGraphs(input, c.format, in)) {
    const AutResult r = AutomorphismGenerators(g);
    if (orbits_only) {
      if (c.json) {
        sink.stream() << json{{"graph", InstanceCode(g)},
                              {"orbits", CellsJson(r.orbit_partition)},
                              {"fixed_vertices", FixedVertices(g)}}
                             .dump()
                      << '\n';
      } else {
        sink.stream() << InstanceCode(g) << "\torbits=" << CellsString(r.orbit_partition)
                      << '\n';
      }
      continue;
    }
    const std::string order = GroupOrder(r.generators).str();
    std::vector<std::string> gens;
    for (const auto& p : r.generators.gens()) gens.push_back(p.ToCycleString());
    if (c.json) {
      sink.stream() << json{{"graph", InstanceCode(g)},
                            {"group_order", order},
                            {"generators", gens},
                            {"orbits", CellsJson(r.orbit_partition)}}
                           .dump()
                    << '\n';
    } else {
      sink.stream() << InstanceCode(g) << "\tgroup_order=" << order << "\torbits="
                    << CellsString(r.orbit_partition) << '\n';
      for (const auto& s : gens) sink.stream() << "  " << s << '\n';
    }
  }
  return kExitOk;
}

int CmdCanon(const Common& c, const std::string& input, std::istream& in, std::ostream& out) {
  Sink sink(c.output, out);
  for (const Graph& g : LoadGraphs(input, c.format, in)) {
    const CanonicalForm f = Canonicalize(g);
    if (c.json) {
      sink.stream() << json{{"graph", InstanceCode(g)}, {"canonical", f.code},
                            {"labeling", f.labeling}}
                           .dump()
                    << '\n';
    } else {
      sink.stream() << f.code << '\n';
    }
  }
  return kExitOk;
}

int CmdConvert(const Common& c, const std::string& input, const std::string& to,
               std::istream& in, std::ostream& out) {
  Sink sink(c.output, out);
  for (const Graph& g : LoadGraphs(input, c.format, in)) {
    sink.stream() << (to == "edgelist" ? EmitEdgeList(g) : EmitGraph6(g) + "\n");
  }
  return kExitOk;
}

std::string SidecarPath(const std::string& path) {
  const std::string ext = ".g6";
  std::string stem = path;
  if (stem.size() > ext.size() && stem.ends_with(ext)) stem.resize(stem.size() - ext.size());
  return stem + ".coord.json";
}

int CmdProduct(const Common& c, const std::string& op, int k, const std::string& a,
               const std::string& b, std::istream& in, std::ostream& out) {
  const Graph g1 = LoadOne(a, c.format, in);
  const Graph g2 = LoadOne(b, c.format, in);
  ProductGraph p = op == "composition" ? Composition(g1, g2)
                   : op == "corona"    ? Corona(g1, g2)
                                       : CoronaIter(g1, g2, k);
  const std::string text = c.format == "edgelist" ? EmitEdgeList(p.graph)
                                                  : EmitGraph6(p.graph) + "\n";
  if (c.output.empty() || c.output == "-") {
    out << text;
    return kExitOk;
  }
  Sink graph_sink(c.output, out);
  graph_sink.stream() << text;
  Sink coord_sink(SidecarPath(c.output), out);
  coord_sink.stream() << CoordinatesToJson(p).dump(2) << '\n';
  return kExitOk;
}

// One instance per line: g1 [g2 [k]] as whitespace-separated graph6 tokens.
std::vector<Instance> LoadCorpus(const std::string& path, std::istream& in) {
  std::ifstream file;
  std::istream* src = &in;
  if (path != "-") {
    file.open(path);
    if (!file) throw IoError("cannot open " + path);
    src = &file;
  }
  std::vector<Instance> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(*src, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::vector<std::string> parts;
    for (std::string t; tokens >> t;) parts.push_back(t);
    if (parts.empty() || parts[0].starts_with('#')) continue;
    try {
      Instance inst{ParseGraph6(parts[0]), std::nullopt, std::nullopt};
      if (parts.size() > 1) inst.g2 = ParseGraph6(parts[1]);
      if (parts.size() > 2) inst.k = std::stoi(parts[2]);
      if (parts.size() > 3) throw ParseError("too many fields", 0);
      out.push_back(std::move(inst));
    } catch (const std::exception& e) {
      throw IoError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::string TableLine(const VerificationReport& r) {
  std::string s = ToString(r.theorem) + "\t" + r.g1;
  s += "\t" + (r.g2 ? *r.g2 : std::string("-"));
  s += "\t" + (r.k ? std::to_string(*r.k) : std::string("-"));
  s += "\t" + ToString(r.verdict);
  for (const auto& [name, value] : r.numbers) s += "\t" + name + "=" + std::to_string(value);
  if (r.witness) s += "\twitness=" + r.witness->dump();
  return s;
}

struct VerifyArgs {
  std::string theorem = "all";
  CorpusOptions corpus;
  bool g1_set = false;
  std::string corpus_path;
  std::size_t cap = Limits{}.cap;
  int jobs = 1;
};

int CmdVerify(const Common& c, const VerifyArgs& v, std::istream& in, std::ostream& out) {
  std::vector<TheoremId> ids;
  if (v.theorem == "all") {
    ids.assign(std::begin(kAllTheorems), std::end(kAllTheorems));
  } else if (auto id = ParseTheoremId(v.theorem)) {
    ids.push_back(*id);
  } else {
    throw CLI::ValidationError("--theorem", "unknown theorem " + v.theorem);
  }
  CorpusOptions options = v.corpus;
  if (v.g1_set) options.corona_g1_max = options.g1_max;
  std::optional<std::vector<Instance>> fixed_corpus;
  if (!v.corpus_path.empty()) fixed_corpus = LoadCorpus(v.corpus_path, in);

  Sink sink(c.output, out);
  bool violated = false;
  for (TheoremId id : ids) {
    const auto corpus = fixed_corpus ? *fixed_corpus : DefaultCorpus(id, options);
    const ScanSummary s = ScanCorpus(corpus, id, Limits{v.cap}, v.jobs);
    violated = violated || s.count(Verdict::kViolated) > 0;
    for (const auto& r : s.reports) {
      sink.stream() << (c.json ? r.ToJson().dump() : TableLine(r)) << '\n';
    }
    if (!c.json) {
      sink.stream() << "# " << ToString(id) << ": " << s.reports.size() << " instances";
      for (Verdict verdict : {Verdict::kConfirmed, Verdict::kViolated,
                              Verdict::kHypothesisNotMet, Verdict::kSkippedCap}) {
        sink.stream() << ", " << ToString(verdict) << "=" << s.count(verdict);
      }
      sink.stream() << '\n';
    }
  }
  return violated ? kExitViolated : kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Graph symmetry toolkit: automorphisms, fixing numbers, products", "fixset"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "input format")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    sub->add_flag("--json", common.json, "emit JSON lines");
    sub->add_option("-o", common.output, "output path");
  };

  std::string input;
  std::size_t cap = kDefaultExactCap;
  bool greedy = false;
  auto* fix = app.add_subcommand("fix", "fixing number with a witness set");
  add_common(fix);
  fix->add_option("input", input, "graph file or -")->required();
  fix->add_option("--cap", cap, "largest order for the exact search")
      ->check(CLI::PositiveNumber);
  fix->add_flag("--greedy", greedy, "greedy upper bound instead of the exact value");

  auto* aut = app.add_subcommand("aut", "automorphism group generators, order and orbits");
  add_common(aut);
  aut->add_option("input", input, "graph file or -")->required();

  auto* orbits = app.add_subcommand("orbits", "orbit partition and fixed vertices");
  add_common(orbits);
  orbits->add_option("input", input, "graph file or -")->required();

  auto* canon = app.add_subcommand("canon", "canonical form");
  add_common(canon);
  canon->add_option("input", input, "graph file or -")->required();

  std::string to = "graph6";
  auto* convert = app.add_subcommand("convert", "re-encode graphs");
  add_common(convert);
  convert->add_option("input", input, "graph file or -")->required();
  convert->add_option("--to", to, "output format")->check(CLI::IsMember({"graph6", "edgelist"}));

  std::string op;
  int k = 1;
  std::string g1_path;
  std::string g2_path;
  auto* product = app.add_subcommand("product", "build a composition or corona product");
  add_common(product);
  product->add_option("--op", op, "composition | corona | corona-iter")
      ->required()
      ->check(CLI::IsMember({"composition", "corona", "corona-iter"}));
  product->add_option("--k", k, "corona depth")->check(CLI::PositiveNumber);
  product->add_option("g1", g1_path, "first factor")->required();
  product->add_option("g2", g2_path, "second factor")->required();

  VerifyArgs v;
  std::uint64_t seed = v.corpus.seed;
  auto* verify = app.add_subcommand("verify", "check theorems on a corpus");
  add_common(verify);
  verify->add_option("--theorem", v.theorem, "theorem id or all");
  verify->add_option("--g1-max", v.corpus.g1_max, "largest first factor")
      ->check(CLI::Range(1, 6));
  verify->add_option("--g2-max", v.corpus.g2_max, "largest second factor")
      ->check(CLI::Range(1, 6));
  verify->add_option("--k-max", v.corpus.k_max, "deepest iterated corona")
      ->check(CLI::Range(1, 4));
  verify->add_option("--join-max", v.corpus.join_max, "largest graph for join checks")
      ->check(CLI::Range(1, 8));
  verify->add_option("--count", v.corpus.disconnected_count, "multi-component instances");
  verify->add_option("--corpus", v.corpus_path, "instance file: g1 [g2 [k]] per line");
  verify->add_option("--seed", seed, "seed for the multi-component corpus");
  verify->add_option("--jobs", v.jobs, "parallel instances")->check(CLI::PositiveNumber);
  verify->add_option("--cap", v.cap, "largest graph for the exact solver")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  v.corpus.seed = seed;
  v.g1_set = verify->count("--g1-max") > 0;

  try {
    if (*fix) return CmdFix(common, input, cap, greedy, in, out);
    if (*aut) return CmdAut(common, input, false, in, out);
    if (*orbits) return CmdAut(common, input, true, in, out);
    if (*canon) return CmdCanon(common, input, in, out);
    if (*convert) return CmdConvert(common, input, to, in, out);
    if (*product) return CmdProduct(common, op, k, g1_path, g2_path, in, out);
    if (*verify) return CmdVerify(common, v, in, out);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: value unknown, " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fixset::cli
