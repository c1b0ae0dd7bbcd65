#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fixset/graph.hpp"
#include "fixset/perm.hpp"

namespace fixset {

// Ordered partition of 0..n-1 stored nauty-style: cells are contiguous runs
// of `lab`, and a cell is identified by the position where it starts. Splits
// keep the first subcell at the old start, so starts are stable.
class OrderedPartition {
 public:
  explicit OrderedPartition(std::size_t n);
  // Cells in the given order; must be disjoint, nonempty and covering.
  static OrderedPartition FromCells(std::size_t n,
                                    const std::vector<std::vector<Vertex>>& cells);

  std::size_t order() const { return lab_.size(); }
  std::size_t num_cells() const { return num_cells_; }
  bool is_discrete() const { return num_cells_ == lab_.size(); }
  // Members of every cell in order; each cell sorted ascending.
  std::vector<std::vector<Vertex>> cells() const;
  std::size_t cell_start(Vertex v) const { return cell_of_[v]; }
  std::size_t cell_end(std::size_t start) const { return end_[start]; }
  std::span<const Vertex> lab() const { return lab_; }

  // Start of the first non-singleton cell of minimum size; order() if none.
  std::size_t TargetCell() const;
  // Splits v out of its cell as a leading singleton; returns its start.
  std::size_t Individualize(Vertex v);

  // Refines to the coarsest equitable partition finer than this one, using
  // the given cells as initial splitters. Subcells are ordered by neighbor
  // count into the splitter. Returns a hash of the split sequence; it is
  // invariant under relabeling of the graph.
  std::uint64_t Refine(const Graph& g, std::span<const std::size_t> splitters);
  std::uint64_t RefineAll(const Graph& g);

 private:
  std::vector<Vertex> lab_;
  std::vector<std::size_t> cell_of_;  // vertex -> start of its cell
  std::vector<std::size_t> end_;      // start -> one past the cell's end
  std::size_t num_cells_ = 0;
};

// True iff every vertex's neighbor count into each cell depends only on its
// own cell.
bool IsEquitable(const Graph& g, const OrderedPartition& p);

struct AutResult {
  GeneratorSet generators;        // generate the pointwise stabilizer of F
  OrbitPartition orbit_partition;  // orbits of that group
  std::size_t node_count = 0;     // search-tree nodes visited
};

// Generators of the pointwise stabilizer of `fixed` in Aut(g); with an empty
// set this is the full automorphism group.
AutResult AutomorphismGenerators(const Graph& g, std::span<const Vertex> fixed = {});

bool IsAsymmetric(const Graph& g);

// True iff p preserves adjacency of g.
bool IsAutomorphism(const Graph& g, const Permutation& p);

struct CanonicalForm {
  // Equal for two graphs iff they are isomorphic. graph6 of the canonical
  // relabeling when n <= 62.
  std::string code;
  // Position i of the canonical graph holds vertex labeling[i] of the input.
  std::vector<Vertex> labeling;
};

CanonicalForm Canonicalize(const Graph& g);
inline std::string CanonicalCode(const Graph& g) { return Canonicalize(g).code; }

}  // namespace fixset
