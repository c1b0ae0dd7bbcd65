#include "fixset/products.hpp"

#include <limits>
#include <stdexcept>

#include "fixset/error.hpp"

namespace fixset {
namespace {

void CheckProductOrder(const std::string& what, std::size_t order, std::size_t cap) {
  if (order > cap) {
    throw CapExceeded(what + " would have " + std::to_string(order) +
                          " vertices, cap is " + std::to_string(cap),
                      order, cap);
  }
}

std::string PairLabel(int a, int v) {
  return "(" + std::to_string(a) + "," + std::to_string(v) + ")";
}

}  // namespace

std::string ToString(ProductKind kind) {
  switch (kind) {
    case ProductKind::kComposition: return "composition";
    case ProductKind::kCorona: return "corona";
    case ProductKind::kCoronaIter: return "corona_iter";
  }
  return "unknown";
}

std::vector<Vertex> ProductGraph::slice(Vertex a) const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < n; ++v) out.push_back(static_cast<Vertex>(a * n + v));
  return out;
}

std::vector<Vertex> ProductGraph::fiber(Vertex b) const {
  std::vector<Vertex> out;
  for (std::size_t x = 0; x < m; ++x) out.push_back(static_cast<Vertex>(x * n + b));
  return out;
}

std::vector<Vertex> ProductGraph::roots() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back(static_cast<Vertex>(i));
  return out;
}

std::vector<Vertex> ProductGraph::copy(Vertex root) const {
  std::vector<Vertex> out;
  const std::size_t first = m + static_cast<std::size_t>(root) * n;
  for (std::size_t j = 0; j < n; ++j) out.push_back(static_cast<Vertex>(first + j));
  return out;
}

ProductGraph Composition(const Graph& g1, const Graph& g2, std::size_t max_order) {
  const std::size_t m = g1.order();
  const std::size_t n = g2.order();
  CheckProductOrder("composition", m * n, max_order);
  GraphBuilder b(m * n, max_order);
  std::vector<VertexCoord> coord(m * n);
  std::vector<std::string> labels(m * n);
  auto id = [n](std::size_t a, std::size_t v) { return static_cast<Vertex>(a * n + v); };
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t v = 0; v < n; ++v) {
      coord[id(a, v)] = {VertexCoord::Role::kPair, static_cast<int>(a),
                         static_cast<int>(v), 0};
      labels[id(a, v)] = PairLabel(static_cast<int>(a), static_cast<int>(v));
    }
  }
  for (const auto& [a, c] : g1.edges()) {
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t w = 0; w < n; ++w) b.add_edge(id(a, v), id(c, w));
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (const auto& [v, w] : g2.edges()) b.add_edge(id(a, v), id(a, w));
  }
  Graph graph = std::move(b).build().with_labels(std::move(labels));

  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t v = 0; v < n; ++v) {
      const int expected = g1.degree(static_cast<Vertex>(a)) * static_cast<int>(n) +
                           g2.degree(static_cast<Vertex>(v));
      if (graph.degree(id(a, v)) != expected) {
        throw std::logic_error("composition degree identity failed at " +
                               PairLabel(static_cast<int>(a), static_cast<int>(v)));
      }
    }
  }
  return ProductGraph{std::move(graph), ProductKind::kComposition, m, n, 1,
                      std::move(coord), {}};
}

ProductGraph Corona(const Graph& g1, const Graph& g2, std::size_t max_order) {
  const std::size_t m = g1.order();
  const std::size_t n = g2.order();
  CheckProductOrder("corona", m * (n + 1), max_order);
  GraphBuilder b(m * (n + 1), max_order);
  std::vector<VertexCoord> coord(m * (n + 1));
  std::vector<std::string> labels(m * (n + 1));
  for (const auto& [u, v] : g1.edges()) b.add_edge(u, v);
  for (std::size_t i = 0; i < m; ++i) {
    coord[i] = {VertexCoord::Role::kBase, static_cast<int>(i), -1, 0};
    labels[i] = "u" + std::to_string(i);
    const auto first = static_cast<Vertex>(m + i * n);
    for (std::size_t j = 0; j < n; ++j) {
      const auto x = static_cast<Vertex>(first + j);
      coord[x] = {VertexCoord::Role::kCopy, static_cast<int>(i), static_cast<int>(j), 1};
      labels[x] = "v" + std::to_string(j) + "^" + std::to_string(i);
      b.add_edge(x, static_cast<Vertex>(i));
    }
    for (const auto& [v, w] : g2.edges()) b.add_edge(first + v, first + w);
  }
  Graph graph = std::move(b).build().with_labels(std::move(labels));
  return ProductGraph{std::move(graph), ProductKind::kCorona, m, n, 1,
                      std::move(coord), {g1}};
}

ProductGraph CoronaIter(const Graph& g1, const Graph& g2, int k, std::size_t max_order) {
  if (k < 1) throw InvalidArgument("corona depth must be at least 1");
  const std::size_t m = g1.order();
  const std::size_t n = g2.order();
  std::size_t order = m;
  for (int level = 0; level < k; ++level) {
    if (order > std::numeric_limits<std::size_t>::max() / (n + 1)) {
      throw CapExceeded("iterated corona order overflows", max_order + 1, max_order);
    }
    order *= n + 1;
  }
  CheckProductOrder("iterated corona of depth " + std::to_string(k), order, max_order);

  ProductGraph current = Corona(g1, g2, max_order);
  std::vector<Graph> levels{g1, current.graph};
  for (int level = 2; level <= k; ++level) {
    ProductGraph next = Corona(current.graph, g2, max_order);
    // Roots of the new level are the previous level's vertices, in place.
    const std::size_t prev = current.graph.order();
    for (std::size_t x = 0; x < prev; ++x) next.coord[x] = current.coord[x];
    for (std::size_t x = prev; x < next.coord.size(); ++x) next.coord[x].level = level;
    levels.push_back(next.graph);
    current = std::move(next);
  }
  current.kind = ProductKind::kCoronaIter;
  current.m = m;
  current.n = n;
  current.k = k;
  current.levels = std::move(levels);
  return current;
}

nlohmann::json CoordinatesToJson(const ProductGraph& p) {
  nlohmann::json coords = nlohmann::json::array();
  for (const auto& c : p.coord) {
    switch (c.role) {
      case VertexCoord::Role::kPair:
        coords.push_back({c.first, c.second});
        break;
      case VertexCoord::Role::kBase:
        coords.push_back({{"role", "base"}, {"index", c.first}});
        break;
      case VertexCoord::Role::kCopy:
        coords.push_back({{"role", "copy"}, {"root", c.first}, {"vertex", c.second},
                          {"level", c.level}});
        break;
    }
  }
  nlohmann::json out = {{"kind", ToString(p.kind)}, {"m", p.m}, {"n", p.n},
                        {"order", p.graph.order()}, {"coords", std::move(coords)}};
  if (p.kind == ProductKind::kCoronaIter) out["k"] = p.k;
  return out;
}

}  // namespace fixset
