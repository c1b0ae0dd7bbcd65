#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fixset/graph.hpp"
#include "json.hpp"

namespace fixset {

enum class ProductKind { kComposition, kCorona, kCoronaIter };

std::string ToString(ProductKind kind);

// Where a product vertex came from.
//   composition: role kPair, first = a in G1, second = v in G2; index a*n+v.
//   corona / corona_iter: role kBase for vertices of G1 (first = index,
//   level 0); role kCopy for vertex `second` of the copy of G2 attached to
//   root `first`, created at `level`. Roots keep their index across levels.
struct VertexCoord {
  enum class Role { kPair, kBase, kCopy };
  Role role = Role::kPair;
  int first = 0;
  int second = -1;
  int level = 0;

  bool operator==(const VertexCoord&) const = default;
};

struct ProductGraph {
  Graph graph;
  ProductKind kind;
  std::size_t m = 0;  // order of G1
  std::size_t n = 0;  // order of G2
  int k = 1;          // corona depth
  std::vector<VertexCoord> coord;
  // corona_iter: levels[i] is G1 corona^i G2, levels[0] = G1.
  std::vector<Graph> levels;

  // composition: the slice G2(a), in order of v.
  std::vector<Vertex> slice(Vertex a) const;
  // composition: G1(b) = {(x, b)}, in order of x.
  std::vector<Vertex> fiber(Vertex b) const;
  // corona (k = 1): roots 0..m-1 and the copy V_i attached to root i.
  std::vector<Vertex> roots() const;
  std::vector<Vertex> copy(Vertex root) const;
  // composition: projections onto the G1 and G2 coordinates.
  Vertex project_first(Vertex x) const { return coord[x].first; }
  Vertex project_second(Vertex x) const { return coord[x].second; }
};

ProductGraph Composition(const Graph& g1, const Graph& g2,
                         std::size_t max_order = kDefaultMaxOrder);
ProductGraph Corona(const Graph& g1, const Graph& g2,
                    std::size_t max_order = kDefaultMaxOrder);
ProductGraph CoronaIter(const Graph& g1, const Graph& g2, int k,
                        std::size_t max_order = kDefaultMaxOrder);

// Coordinate sidecar written next to the product's graph6 file.
nlohmann::json CoordinatesToJson(const ProductGraph& p);

}  // namespace fixset
