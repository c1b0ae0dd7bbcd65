#include "fixset/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <sstream>

#include "fixset/error.hpp"

namespace fixset {
namespace {

std::size_t WordsFor(std::size_t n) { return (n + 63) / 64; }

void CheckOrder(std::size_t n, std::size_t max_order) {
  if (n == 0) throw InvalidArgument("graph must have at least one vertex");
  if (n > max_order) {
    throw CapExceeded("graph order " + std::to_string(n) + " exceeds cap " +
                          std::to_string(max_order),
                      n, max_order);
  }
}

void Bfs(const Graph& g, Vertex source, std::span<int> out) {
  std::fill(out.begin(), out.end(), DistanceMatrix::kUnreachable);
  std::vector<Vertex> frontier{source};
  out[source] = 0;
  std::size_t head = 0;
  while (head < frontier.size()) {
    const Vertex u = frontier[head++];
    const auto row = g.row(u);
    for (std::size_t w = 0; w < row.size(); ++w) {
      for (std::uint64_t bits = row[w]; bits != 0; bits &= bits - 1) {
        const Vertex v = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
        if (out[v] == DistanceMatrix::kUnreachable) {
          out[v] = out[u] + 1;
          frontier.push_back(v);
        }
      }
    }
  }
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<std::uint64_t> bits)
    : n_(n), words_(WordsFor(n)), bits_(std::move(bits)) {
  for (std::uint64_t w : bits_) num_edges_ += std::popcount(w);
  num_edges_ /= 2;
}

void Graph::set_edge(Vertex u, Vertex v) {
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ULL << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ULL << (u & 63);
}

Graph Graph::FromEdges(std::size_t n, std::span<const Edge> edges,
                       std::size_t max_order) {
  GraphBuilder builder(n, max_order);
  for (const auto& [u, v] : edges) builder.add_edge(u, v);
  return std::move(builder).build();
}

int Graph::degree(Vertex v) const {
  int d = 0;
  for (std::uint64_t w : row(v)) d += std::popcount(w);
  return d;
}

int Graph::max_degree() const {
  int best = 0;
  for (std::size_t v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(n_);
  for (std::size_t v = 0; v < n_; ++v) out[v] = degree(static_cast<Vertex>(v));
  return out;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  const auto r = row(v);
  for (std::size_t w = 0; w < r.size(); ++w) {
    for (std::uint64_t bits = r[w]; bits != 0; bits &= bits - 1) {
      out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (std::size_t u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(static_cast<Vertex>(u))) {
      if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
    }
  }
  return out;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != n_) {
    throw InvalidArgument("label table size does not match vertex count");
  }
  Graph out = *this;
  out.labels_ = std::move(labels);
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != n_) throw InvalidArgument("relabeling has wrong size");
  std::vector<Vertex> inverse(n_, -1);
  for (std::size_t i = 0; i < n_; ++i) {
    if (perm[i] < 0 || static_cast<std::size_t>(perm[i]) >= n_ ||
        inverse[perm[i]] != -1) {
      throw InvalidArgument("relabeling is not a permutation");
    }
    inverse[perm[i]] = static_cast<Vertex>(i);
  }
  GraphBuilder b(n_, std::max(n_, kDefaultMaxOrder));
  for (const auto& [u, v] : edges()) b.add_edge(inverse[u], inverse[v]);
  return std::move(b).build();
}

Graph Graph::complement() const {
  GraphBuilder b(n_, std::max(n_, kDefaultMaxOrder));
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u + 1; v < n_; ++v) {
      if (!adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
        b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
      }
    }
  }
  return std::move(b).build();
}

GraphBuilder::GraphBuilder(std::size_t n, std::size_t max_order)
    : n_(n), words_(WordsFor(n)) {
  CheckOrder(n, max_order);
  bits_.assign(n_ * words_, 0);
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n_ ||
      static_cast<std::size_t>(v) >= n_) {
    throw InvalidArgument("edge (" + std::to_string(u) + "," +
                          std::to_string(v) + ") has an index outside 0.." +
                          std::to_string(n_ - 1));
  }
  if (u == v) {
    throw InvalidArgument("loop edge (" + std::to_string(u) + "," +
                          std::to_string(v) + ") rejected");
  }
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ULL << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ULL << (u & 63);
}

Graph GraphBuilder::build() && { return Graph(n_, std::move(bits_)); }

std::string ValidateGraph(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return "graph has no vertices";
  for (std::size_t u = 0; u < n; ++u) {
    if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(u))) {
      return "loop at vertex " + std::to_string(u);
    }
    for (std::size_t v = u + 1; v < n; ++v) {
      if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)) !=
          g.adjacent(static_cast<Vertex>(v), static_cast<Vertex>(u))) {
        return "asymmetric adjacency at (" + std::to_string(u) + "," +
               std::to_string(v) + ")";
      }
    }
  }
  // Padding bits past n must stay clear.
  for (std::size_t u = 0; u < n; ++u) {
    const auto r = g.row(static_cast<Vertex>(u));
    if (n % 64 != 0 && (r.back() >> (n % 64)) != 0) {
      return "stray padding bits in row " + std::to_string(u);
    }
  }
  return {};
}

Graph NamedFamily(Family family, std::size_t n) {
  if (n == 0) throw InvalidArgument("family order must be at least 1");
  GraphBuilder b(n);
  const auto last = static_cast<Vertex>(n - 1);
  switch (family) {
    case Family::kPath:
      for (Vertex v = 0; v < last; ++v) b.add_edge(v, v + 1);
      break;
    case Family::kCycle:
      if (n < 3) throw InvalidArgument("cycle requires at least 3 vertices");
      for (Vertex v = 0; v < last; ++v) b.add_edge(v, v + 1);
      b.add_edge(last, 0);
      break;
    case Family::kComplete:
      for (Vertex u = 0; u <= last; ++u) {
        for (Vertex v = u + 1; v <= last; ++v) b.add_edge(u, v);
      }
      break;
    case Family::kStar:
      for (Vertex v = 1; v <= last; ++v) b.add_edge(0, v);
      break;
    case Family::kEmpty:
      break;
  }
  return std::move(b).build();
}

std::optional<Family> ParseFamily(std::string_view name) {
  if (name == "path") return Family::kPath;
  if (name == "cycle") return Family::kCycle;
  if (name == "complete") return Family::kComplete;
  if (name == "star") return Family::kStar;
  if (name == "empty") return Family::kEmpty;
  return std::nullopt;
}

std::optional<int> DistanceMatrix::eccentricity(Vertex v) const {
  int best = 0;
  for (std::size_t u = 0; u < n_; ++u) {
    const int d = at(v, static_cast<Vertex>(u));
    if (d == kUnreachable) return std::nullopt;
    best = std::max(best, d);
  }
  return best;
}

std::vector<Vertex> DistanceMatrix::distance_neighborhood(Vertex v,
                                                          int i) const {
  std::vector<Vertex> out;
  for (std::size_t u = 0; u < n_; ++u) {
    if (at(v, static_cast<Vertex>(u)) == i) out.push_back(static_cast<Vertex>(u));
  }
  return out;
}

DistanceMatrix AllPairsDistancesSerial(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> d(n * n);
  for (std::size_t s = 0; s < n; ++s) {
    Bfs(g, static_cast<Vertex>(s), std::span<int>(d.data() + s * n, n));
  }
  return {n, std::move(d)};
}

DistanceMatrix AllPairsDistances(const Graph& g) {
  const auto n = static_cast<std::int64_t>(g.order());
  std::vector<int> d(static_cast<std::size_t>(n * n));
#pragma omp parallel for schedule(dynamic, 16) if (n >= 256)
  for (std::int64_t s = 0; s < n; ++s) {
    Bfs(g, static_cast<Vertex>(s),
        std::span<int>(d.data() + s * n, static_cast<std::size_t>(n)));
  }
  return {static_cast<std::size_t>(n), std::move(d)};
}

std::vector<std::vector<Vertex>> Components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<Vertex> cell{static_cast<Vertex>(s)};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t head = 0; head < cell.size(); ++head) {
      for (Vertex v : g.neighbors(cell[head])) {
        if (comp[v] == -1) {
          comp[v] = static_cast<int>(out.size());
          cell.push_back(v);
        }
      }
    }
    std::sort(cell.begin(), cell.end());
    out.push_back(std::move(cell));
  }
  return out;
}

bool IsConnected(const Graph& g) { return Components(g).size() == 1; }

InducedSubgraph Induce(const Graph& g, std::span<const Vertex> vertices) {
  if (vertices.empty()) {
    throw InvalidArgument("induced subgraph needs a nonempty vertex set");
  }
  std::vector<Vertex> index(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Vertex v = vertices[i];
    if (v < 0 || static_cast<std::size_t>(v) >= g.order()) {
      throw InvalidArgument("vertex " + std::to_string(v) + " not in graph");
    }
    if (index[v] != -1) {
      throw InvalidArgument("vertex " + std::to_string(v) + " listed twice");
    }
    index[v] = static_cast<Vertex>(i);
  }
  GraphBuilder b(vertices.size(), g.order());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.adjacent(vertices[i], vertices[j])) {
        b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return {std::move(b).build(),
          std::vector<Vertex>(vertices.begin(), vertices.end())};
}

DisjointUnionResult DisjointUnion(std::span<const Graph> parts) {
  if (parts.empty()) throw InvalidArgument("disjoint union of no graphs");
  std::vector<std::size_t> offsets{0};
  for (const Graph& p : parts) offsets.push_back(offsets.back() + p.order());
  GraphBuilder b(offsets.back());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto off = static_cast<Vertex>(offsets[i]);
    for (const auto& [u, v] : parts[i].edges()) b.add_edge(u + off, v + off);
  }
  return {std::move(b).build(), std::move(offsets)};
}

Graph JoinWithApex(const Graph& g) {
  const std::size_t n = g.order();
  GraphBuilder b(n + 1);
  for (const auto& [u, v] : g.edges()) b.add_edge(u, v);
  for (std::size_t v = 0; v < n; ++v) {
    b.add_edge(static_cast<Vertex>(v), static_cast<Vertex>(n));
  }
  return std::move(b).build();
}

}  // namespace fixset
