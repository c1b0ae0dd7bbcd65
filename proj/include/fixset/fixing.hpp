#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fixset/graph.hpp"

namespace fixset {

inline constexpr std::size_t kDefaultExactCap = 512;

struct FixingResult {
  std::size_t fix_number = 0;
  std::vector<Vertex> witness;  // sorted
  bool optimal = false;         // false for the greedy bound
};

struct FixingOptions {
  std::size_t cap = kDefaultExactCap;
  // When set, only these vertices may enter the fixing set.
  std::optional<std::vector<Vertex>> candidates;
};

bool IsFixingSet(const Graph& g, std::span<const Vertex> set);

// Exact fixing number by iterative deepening over orbit representatives of
// the current pointwise stabilizer. Throws CapExceeded above options.cap.
// With a candidate restriction, returns nullopt when no subset of the
// candidates fixes the graph.
std::optional<FixingResult> FixingNumberRestricted(const Graph& g,
                                                   const FixingOptions& options);
FixingResult FixingNumber(const Graph& g, std::size_t cap = kDefaultExactCap);

// Repeatedly fixes the least vertex of a largest stabilizer orbit.
FixingResult GreedyFixingSet(const Graph& g);

// Union of the singleton orbits of Aut(g).
std::vector<Vertex> FixedVertices(const Graph& g);

struct RelativeFixing {
  std::vector<Vertex> vertices;
  // False when u and v are not similar; `vertices` is then all of V(g).
  bool similar = true;
};

// {x : no automorphism fixing x maps u to v or v to u}. Throws on u == v.
RelativeFixing RelativeFixingSet(const Graph& g, Vertex u, Vertex v);

struct AsymmetricClass {
  std::vector<std::size_t> components;  // indices into `components`
};

struct DisconnectedFixing {
  std::vector<std::vector<Vertex>> components;
  std::vector<std::size_t> symmetric;  // component indices forming H
  std::vector<std::size_t> symmetric_fix;
  std::vector<AsymmetricClass> asymmetric_classes;  // H_1..H_l
  std::size_t formula_value = 0;
  // Exact solver on the whole graph; nullopt when over the cap.
  std::optional<FixingResult> solver;
  // Some two non-asymmetric components are isomorphic.
  bool isomorphic_symmetric_components = false;
};

// Sum of fix over non-asymmetric components plus, for each isomorphism class
// of asymmetric components with multiplicity m_i, m_i - 1. Requires at least
// two components, each on two or more vertices (HypothesisError otherwise).
DisconnectedFixing FixingNumberDisconnected(const Graph& g,
                                            std::size_t cap = kDefaultExactCap);

}  // namespace fixset
