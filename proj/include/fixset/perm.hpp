#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace fixset {

using BigInt = boost::multiprecision::cpp_int;

// Bijection on 0..n-1; position v holds the image of v.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation Identity(std::size_t n);

  std::size_t degree() const { return images_.size(); }
  int operator()(int v) const { return images_[v]; }
  std::span<const int> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  // Points v with image != v, ascending.
  std::vector<int> support() const;
  // Cycle notation, e.g. "(0 1)(2 3)"; identity prints as "()".
  std::string ToCycleString() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// Result maps v to a(b(v)).
Permutation Compose(const Permutation& a, const Permutation& b);

// Generators of a permutation group. Identities are dropped on construction;
// an empty list presents the trivial group.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::size_t degree) : degree_(degree) {}
  GeneratorSet(std::size_t degree, std::vector<Permutation> gens);

  void add(Permutation g);
  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& gens() const { return gens_; }
  bool empty() const { return gens_.empty(); }

 private:
  std::size_t degree_;
  std::vector<Permutation> gens_;
};

// Orbits as sorted cells ordered by their least element, which is also the
// cell representative.
class OrbitPartition {
 public:
  explicit OrbitPartition(std::vector<std::vector<int>> cells);

  const std::vector<std::vector<int>>& cells() const { return cells_; }
  std::size_t cell_index(int v) const { return cell_of_[v]; }
  int representative(int v) const { return cells_[cell_of_[v]].front(); }
  const std::vector<int>& orbit(int v) const { return cells_[cell_of_[v]]; }
  bool same_orbit(int u, int v) const { return cell_of_[u] == cell_of_[v]; }
  bool is_discrete() const { return cells_.size() == cell_of_.size(); }

  bool operator==(const OrbitPartition& o) const { return cells_ == o.cells_; }

 private:
  std::vector<std::vector<int>> cells_;
  std::vector<std::size_t> cell_of_;
};

OrbitPartition Orbits(const GeneratorSet& gs);
OrbitPartition Orbits(std::size_t degree, std::span<const Permutation> gens);

// Deterministic Schreier-Sims stabilizer chain. New base points are the
// least point moved by the element that forces a new level, so the base is
// ascending-first and never contains points fixed by the whole group.
class StabilizerChain {
 public:
  explicit StabilizerChain(const GeneratorSet& gs);

  BigInt order() const;
  const std::vector<int>& base() const { return base_; }
  // Size of the basic orbit at each level.
  std::vector<std::size_t> orbit_sizes() const;
  bool contains(const Permutation& p) const;

 private:
  struct Level {
    int base_point = 0;
    std::vector<Permutation> gens;  // strong generators fixing earlier points
    std::vector<int> orbit;
    // transversal[x] maps base_point to x; empty for points not in orbit.
    std::vector<Permutation> transversal;
  };

  void RebuildOrbit(Level& level) const;
  // Returns the residue and the level at which sifting stopped.
  std::pair<Permutation, std::size_t> Sift(Permutation p,
                                           std::size_t from) const;
  void AddStrongGenerator(const Permutation& g, std::size_t from,
                          std::size_t to);

  std::size_t degree_;
  std::vector<int> base_;
  std::vector<Level> levels_;
};

BigInt GroupOrder(const GeneratorSet& gs);

}  // namespace fixset
