#include "fixset/corpus.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "fixset/aut_engine.hpp"
#include "fixset/error.hpp"
#include "fixset/graph_io.hpp"

namespace fixset {

namespace {

// Classes on n vertices from the classes on n-1 vertices.
std::vector<Graph> Extend(const std::vector<Graph>& prev, std::size_t n) {
  std::map<std::string, Graph> classes;
  const auto apex = static_cast<Vertex>(n - 1);
  for (const Graph& base : prev) {
    for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
      GraphBuilder b(n);
      for (const auto& [u, v] : base.edges()) b.add_edge(u, v);
      for (std::size_t v = 0; v + 1 < n; ++v) {
        if ((mask >> v) & 1U) b.add_edge(static_cast<Vertex>(v), apex);
      }
      Graph g = std::move(b).build();
      CanonicalForm c = Canonicalize(g);
      if (!classes.contains(c.code)) classes.emplace(c.code, g.relabeled(c.labeling));
    }
  }
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [code, g] : classes) out.push_back(std::move(g));
  return out;
}

void CheckEnumerationOrder(std::size_t n) {
  if (n > 9) throw CapExceeded("exhaustive enumeration limited to n <= 9", n, 9);
}

}  // namespace

std::vector<Graph> AllGraphs(std::size_t n) {
  if (n == 0) throw InvalidArgument("graph order must be at least 1");
  CheckEnumerationOrder(n);
  std::vector<Graph> level{Graph::FromEdges(1, {})};
  for (std::size_t k = 2; k <= n; ++k) level = Extend(level, k);
  return level;
}

std::vector<Graph> AllGraphsUpTo(std::size_t max_n) {
  CheckEnumerationOrder(max_n);
  std::vector<Graph> out;
  std::vector<Graph> level;
  for (std::size_t n = 1; n <= max_n; ++n) {
    level = n == 1 ? std::vector<Graph>{Graph::FromEdges(1, {})} : Extend(level, n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Graph> ConnectedGraphsUpTo(std::size_t max_n) {
  std::vector<Graph> out;
  for (auto& g : AllGraphsUpTo(max_n)) {
    if (IsConnected(g)) out.push_back(std::move(g));
  }
  return out;
}

Graph AsymmetricSix() {
  return Graph::FromEdges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 3}, {0, 5}});
}

std::vector<Graph> MultiComponentCorpus(std::size_t count, std::uint64_t seed) {
  // Asymmetric components: the six-vertex graph and a second, non-isomorphic
  // one (its complement is asymmetric too and connected).
  const Graph a6 = AsymmetricSix();
  const Graph a6c = a6.complement();
  const std::vector<Graph> pool = {
      NamedFamily(Family::kComplete, 2), NamedFamily(Family::kPath, 3),
      NamedFamily(Family::kComplete, 3), NamedFamily(Family::kCycle, 4),
      NamedFamily(Family::kPath, 4),     NamedFamily(Family::kStar, 4),
      NamedFamily(Family::kCycle, 5),    a6,
      a6c,
  };
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  std::map<std::string, bool> seen;
  std::size_t attempts = 0;
  while (out.size() < count && attempts++ < count * 100) {
    const std::size_t parts = 2 + rng() % 3;
    std::vector<Graph> chosen;
    std::size_t order = 0;
    for (std::size_t i = 0; i < parts; ++i) {
      // Bias toward asymmetric twins so that multiplicities > 1 show up.
      const std::size_t pick = rng() % (pool.size() + 3);
      chosen.push_back(pick < pool.size() ? pool[pick] : pool[7 + pick % 2]);
      order += chosen.back().order();
    }
    if (order > 20) continue;
    const Graph g = DisjointUnion(chosen).graph;
    const std::string code = CanonicalCode(g);
    if (seen[code]) continue;
    seen[code] = true;
    out.push_back(g);
  }
  return out;
}

}  // namespace fixset
