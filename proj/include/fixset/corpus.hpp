#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fixset/graph.hpp"

namespace fixset {

// One representative of every isomorphism class of graphs on exactly n
// vertices, grown by attaching a vertex to every subset of each class on
// n-1 vertices and deduplicating by canonical form. Sorted by canonical code.
std::vector<Graph> AllGraphs(std::size_t n);
// All classes on 1..max_n vertices, by order then canonical code.
std::vector<Graph> AllGraphsUpTo(std::size_t max_n);
std::vector<Graph> ConnectedGraphsUpTo(std::size_t max_n);

// Asymmetric graph on 6 vertices with edges 01,12,23,34,13,05.
Graph AsymmetricSix();

// Deterministic multi-component graphs drawn from a pool of symmetric
// components and asymmetric twins; every component has order >= 2.
std::vector<Graph> MultiComponentCorpus(std::size_t count, std::uint64_t seed);

}  // namespace fixset
