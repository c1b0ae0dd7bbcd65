#include "fixset/fixing.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_set>

#include "fixset/aut_engine.hpp"
#include "fixset/error.hpp"
#include "fixset/perm.hpp"

namespace fixset {
namespace {

void CheckVertices(const Graph& g, std::span<const Vertex> set) {
  for (Vertex v : set) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.order()) {
      throw InvalidArgument("vertex " + std::to_string(v) + " not in graph");
    }
  }
}

std::string SetKey(const std::vector<Vertex>& sorted) {
  std::string key;
  key.reserve(sorted.size() * 2);
  for (Vertex v : sorted) {
    key.push_back(static_cast<char>(v & 0xff));
    key.push_back(static_cast<char>((v >> 8) & 0xff));
  }
  return key;
}

std::vector<Vertex> With(const std::vector<Vertex>& set, Vertex v) {
  std::vector<Vertex> out = set;
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return out;
}

class ExactSearch {
 public:
  ExactSearch(const Graph& g, std::vector<char> candidate)
      : g_(g), candidate_(std::move(candidate)) {}

  std::optional<std::vector<Vertex>> Run(std::size_t k, const AutResult& root) {
    target_ = k;
    visited_.clear();
    std::vector<Vertex> empty;
    if (Search(empty, root)) return witness_;
    return std::nullopt;
  }

 private:
  bool Search(const std::vector<Vertex>& set, const AutResult& stab) {
    if (set.size() >= target_) return false;
    const OrbitPartition& orbits = stab.orbit_partition;
    std::size_t widest = 0;
    for (std::size_t v = 0; v < g_.order(); ++v) {
      if (candidate_[v]) widest = std::max(widest, orbits.orbit(static_cast<Vertex>(v)).size());
    }
    if (widest <= 1) return false;
    // Fixing one more point shrinks the group by at most `widest`.
    const std::size_t remaining = target_ - set.size();
    BigInt reach = 1;
    for (std::size_t i = 0; i < remaining; ++i) reach *= widest;
    if (reach < GroupOrder(stab.generators)) return false;

    // Orbit pruning is only sound under elements that preserve the
    // candidate set.
    std::vector<Permutation> preserving;
    for (const auto& p : stab.generators.gens()) {
      bool keeps = true;
      for (std::size_t v = 0; v < g_.order() && keeps; ++v) {
        keeps = candidate_[v] == candidate_[p(static_cast<Vertex>(v))];
      }
      if (keeps) preserving.push_back(p);
    }
    const OrbitPartition pruning = Orbits(g_.order(), preserving);
    std::vector<char> cell_done(g_.order(), 0);
    for (std::size_t v = 0; v < g_.order(); ++v) {
      const auto w = static_cast<Vertex>(v);
      if (!candidate_[v] || orbits.orbit(w).size() <= 1) continue;
      const std::size_t cell = pruning.cell_index(w);
      if (cell_done[cell]) continue;
      cell_done[cell] = 1;
      std::vector<Vertex> next = With(set, w);
      if (!visited_.insert(SetKey(next)).second) continue;
      AutResult sub = AutomorphismGenerators(g_, next);
      if (sub.generators.empty()) {
        witness_ = std::move(next);
        return true;
      }
      if (Search(next, sub)) return true;
    }
    return false;
  }

  const Graph& g_;
  std::vector<char> candidate_;
  std::size_t target_ = 0;
  std::unordered_set<std::string> visited_;
  std::vector<Vertex> witness_;
};

FixingResult Greedy(const Graph& g, const std::vector<char>& candidate) {
  std::vector<Vertex> set;
  AutResult stab = AutomorphismGenerators(g);
  while (!stab.generators.empty()) {
    Vertex pick = -1;
    std::size_t best = 1;
    for (const auto& cell : stab.orbit_partition.cells()) {
      if (cell.size() <= best) continue;
      for (Vertex v : cell) {
        if (candidate[v]) {
          pick = v;
          best = cell.size();
          break;
        }
      }
    }
    if (pick < 0) throw InvalidArgument("candidate set cannot fix the graph");
    set = With(set, pick);
    stab = AutomorphismGenerators(g, set);
  }
  return FixingResult{set.size(), std::move(set), false};
}

}  // namespace

bool IsFixingSet(const Graph& g, std::span<const Vertex> set) {
  CheckVertices(g, set);
  return AutomorphismGenerators(g, set).generators.empty();
}

std::optional<FixingResult> FixingNumberRestricted(const Graph& g,
                                                   const FixingOptions& options) {
  if (g.order() > options.cap) {
    throw CapExceeded("exact fixing number refused: order " +
                          std::to_string(g.order()) + " exceeds cap " +
                          std::to_string(options.cap),
                      g.order(), options.cap);
  }
  std::vector<char> candidate(g.order(), options.candidates ? 0 : 1);
  if (options.candidates) {
    CheckVertices(g, *options.candidates);
    for (Vertex v : *options.candidates) candidate[v] = 1;
  }
  const AutResult root = AutomorphismGenerators(g);
  if (root.generators.empty()) return FixingResult{0, {}, true};
  if (options.candidates && !IsFixingSet(g, *options.candidates)) return std::nullopt;

  FixingResult upper = Greedy(g, candidate);
  ExactSearch search(g, candidate);
  for (std::size_t k = 1; k < upper.fix_number; ++k) {
    if (auto found = search.Run(k, root)) {
      return FixingResult{k, std::move(*found), true};
    }
  }
  upper.optimal = true;
  return upper;
}

FixingResult FixingNumber(const Graph& g, std::size_t cap) {
  return *FixingNumberRestricted(g, FixingOptions{cap, std::nullopt});
}

FixingResult GreedyFixingSet(const Graph& g) {
  return Greedy(g, std::vector<char>(g.order(), 1));
}

std::vector<Vertex> FixedVertices(const Graph& g) {
  std::vector<Vertex> out;
  const AutResult aut = AutomorphismGenerators(g);
  for (const auto& cell : aut.orbit_partition.cells()) {
    if (cell.size() == 1) out.push_back(cell.front());
  }
  std::sort(out.begin(), out.end());
  return out;
}

RelativeFixing RelativeFixingSet(const Graph& g, Vertex u, Vertex v) {
  const Vertex pair[] = {u, v};
  CheckVertices(g, pair);
  if (u == v) throw InvalidArgument("relative fixing set needs two distinct vertices");
  RelativeFixing out;
  if (!AutomorphismGenerators(g).orbit_partition.same_orbit(u, v)) {
    out.similar = false;
    for (std::size_t x = 0; x < g.order(); ++x) out.vertices.push_back(static_cast<Vertex>(x));
    return out;
  }
  // Within a group, some element sends u to v iff some element sends v to
  // u, so x qualifies iff u and v lie in different orbits of Aut_x.
  for (std::size_t x = 0; x < g.order(); ++x) {
    const Vertex fixed[] = {static_cast<Vertex>(x)};
    if (!AutomorphismGenerators(g, fixed).orbit_partition.same_orbit(u, v)) {
      out.vertices.push_back(static_cast<Vertex>(x));
    }
  }
  return out;
}

DisconnectedFixing FixingNumberDisconnected(const Graph& g, std::size_t cap) {
  DisconnectedFixing out;
  out.components = Components(g);
  if (out.components.size() < 2) {
    throw HypothesisError("disconnected formula needs at least two components");
  }
  for (const auto& c : out.components) {
    if (c.size() < 2) {
      throw HypothesisError("component {" + std::to_string(c.front()) +
                            "} has order 1; every component needs order >= 2");
    }
  }
  std::map<std::string, std::size_t> class_of;
  std::map<std::string, std::size_t> symmetric_seen;
  for (std::size_t i = 0; i < out.components.size(); ++i) {
    const Graph part = Induce(g, out.components[i]).graph;
    const std::string code = CanonicalCode(part);
    if (IsAsymmetric(part)) {
      auto [it, inserted] = class_of.emplace(code, out.asymmetric_classes.size());
      if (inserted) out.asymmetric_classes.emplace_back();
      out.asymmetric_classes[it->second].components.push_back(i);
      continue;
    }
    if (symmetric_seen[code]++ > 0) out.isomorphic_symmetric_components = true;
    const std::size_t f = FixingNumber(part, cap).fix_number;
    out.symmetric.push_back(i);
    out.symmetric_fix.push_back(f);
    out.formula_value += f;
  }
  for (const auto& cls : out.asymmetric_classes) {
    out.formula_value += cls.components.size() - 1;
  }
  if (g.order() <= cap) out.solver = FixingNumber(g, cap);
  return out;
}

}  // namespace fixset
