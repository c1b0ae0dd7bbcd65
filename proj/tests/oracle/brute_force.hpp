#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fixset/graph.hpp"

namespace fixset::oracle {

// Every automorphism of g as an image vector, by enumerating all n!
// bijections. Intended for n <= 8.
std::vector<std::vector<int>> AllAutomorphisms(const Graph& g);

// Orbit id per vertex under the full automorphism list; ids are the least
// member of each orbit.
std::vector<int> OrbitIds(const Graph& g, const std::vector<std::vector<int>>& auts);

// Automorphisms fixing every vertex of `set`.
std::size_t StabilizerSize(const std::vector<std::vector<int>>& auts,
                           std::span<const Vertex> set);

// Minimum size of a vertex set whose pointwise stabilizer is trivial,
// found by trying all subsets in order of size. `allowed` restricts the
// vertices (all when empty).
std::size_t FixingNumber(const Graph& g, std::span<const Vertex> allowed = {});

// BFS from one source with plain adjacency scans; -1 when unreachable.
std::vector<int> Distances(const Graph& g, Vertex source);

}  // namespace fixset::oracle
