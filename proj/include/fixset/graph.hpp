#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fixset {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::size_t kDefaultMaxOrder = 4096;

// Immutable simple undirected graph on vertices 0..n-1. Adjacency is kept as
// one fixed-width bit row per vertex.
class Graph {
 public:
  static Graph FromEdges(std::size_t n, std::span<const Edge> edges,
                         std::size_t max_order = kDefaultMaxOrder);
  static Graph FromEdges(std::size_t n, std::initializer_list<Edge> edges) {
    return FromEdges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return n_; }
  std::size_t size() const { return num_edges_; }
  std::size_t words_per_row() const { return words_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >>
            (v & 63)) & 1U;
  }
  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  int degree(Vertex v) const;
  int max_degree() const;
  std::vector<int> degrees() const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<Edge> edges() const;

  // Per-vertex provenance tags; empty unless a constructor set them.
  const std::vector<std::string>& labels() const { return labels_; }
  Graph with_labels(std::vector<std::string> labels) const;

  // Vertex v of the result is vertex perm[v] of this graph.
  Graph relabeled(std::span<const Vertex> perm) const;
  Graph complement() const;

  // Structural equality; labels are ignored.
  bool operator==(const Graph& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

 private:
  Graph(std::size_t n, std::vector<std::uint64_t> bits);
  void set_edge(Vertex u, Vertex v);

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t num_edges_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::string> labels_;

  friend class GraphBuilder;
};

// Mutable staging area for constructors that generate many edges.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n, std::size_t max_order = kDefaultMaxOrder);
  std::size_t order() const { return n_; }
  void add_edge(Vertex u, Vertex v);
  Graph build() &&;

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

// Empty string when both invariants hold, otherwise a description of the
// first violation.
std::string ValidateGraph(const Graph& g);

enum class Family { kPath, kCycle, kComplete, kStar, kEmpty };

Graph NamedFamily(Family family, std::size_t n);
std::optional<Family> ParseFamily(std::string_view name);

// Hop counts with an explicit unreachable sentinel.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  DistanceMatrix(std::size_t n, std::vector<int> entries)
      : n_(n), d_(std::move(entries)) {}

  std::size_t order() const { return n_; }
  int at(Vertex u, Vertex v) const {
    return d_[static_cast<std::size_t>(u) * n_ + v];
  }
  bool reachable(Vertex u, Vertex v) const { return at(u, v) != kUnreachable; }
  // nullopt when some vertex is unreachable from v.
  std::optional<int> eccentricity(Vertex v) const;
  std::vector<Vertex> distance_neighborhood(Vertex v, int i) const;

  bool operator==(const DistanceMatrix&) const = default;

 private:
  std::size_t n_;
  std::vector<int> d_;
};

// Breadth-first search from every source. The default entry point runs
// sources in parallel when OpenMP is available; the serial version is the
// reference used by tests and benchmarks.
DistanceMatrix AllPairsDistances(const Graph& g);
DistanceMatrix AllPairsDistancesSerial(const Graph& g);

// Maximal connected vertex sets, each sorted, ordered by least vertex.
std::vector<std::vector<Vertex>> Components(const Graph& g);
bool IsConnected(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // new index -> old index
};
InducedSubgraph Induce(const Graph& g, std::span<const Vertex> vertices);

struct DisjointUnionResult {
  Graph graph;
  std::vector<std::size_t> offsets;  // part i occupies [offsets[i], offsets[i+1])
};
DisjointUnionResult DisjointUnion(std::span<const Graph> parts);

// G + K_1 with the apex as the last vertex.
Graph JoinWithApex(const Graph& g);

}  // namespace fixset
