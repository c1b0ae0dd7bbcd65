#include "fixset/perm.hpp"

#include <algorithm>
#include <numeric>

#include "fixset/error.hpp"

namespace fixset {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[x]) {
      throw InvalidArgument("image array is not a bijection on 0..n-1");
    }
    seen[x] = 1;
  }
}

Permutation Permutation::Identity(std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t v = 0; v < images_.size(); ++v) {
    if (images_[v] != static_cast<int>(v)) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t v = 0; v < images_.size(); ++v) {
    p.images_[images_[v]] = static_cast<int>(v);
  }
  return p;
}

std::vector<int> Permutation::support() const {
  std::vector<int> out;
  for (std::size_t v = 0; v < images_.size(); ++v) {
    if (images_[v] != static_cast<int>(v)) out.push_back(static_cast<int>(v));
  }
  return out;
}

std::string Permutation::ToCycleString() const {
  std::string out;
  std::vector<char> done(images_.size(), 0);
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (done[s] || images_[s] == static_cast<int>(s)) continue;
    out += '(';
    int v = static_cast<int>(s);
    bool first = true;
    while (!done[v]) {
      done[v] = 1;
      if (!first) out += ' ';
      first = false;
      out += std::to_string(v);
      v = images_[v];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation Compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw InvalidArgument("cannot compose permutations of degree " +
                          std::to_string(a.degree()) + " and " +
                          std::to_string(b.degree()));
  }
  std::vector<int> images(a.degree());
  for (std::size_t v = 0; v < images.size(); ++v) images[v] = a(b(static_cast<int>(v)));
  return Permutation(std::move(images));
}

GeneratorSet::GeneratorSet(std::size_t degree, std::vector<Permutation> gens)
    : degree_(degree) {
  for (auto& g : gens) add(std::move(g));
}

void GeneratorSet::add(Permutation g) {
  if (g.degree() != degree_) {
    throw InvalidArgument("generator degree " + std::to_string(g.degree()) +
                          " differs from group degree " +
                          std::to_string(degree_));
  }
  if (!g.is_identity()) gens_.push_back(std::move(g));
}

OrbitPartition::OrbitPartition(std::vector<std::vector<int>> cells)
    : cells_(std::move(cells)) {
  std::size_t n = 0;
  for (auto& c : cells_) {
    std::sort(c.begin(), c.end());
    n += c.size();
  }
  std::sort(cells_.begin(), cells_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  cell_of_.assign(n, 0);
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    for (int v : cells_[i]) cell_of_[v] = i;
  }
}

OrbitPartition Orbits(std::size_t degree, std::span<const Permutation> gens) {
  std::vector<int> parent(degree);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens) {
    for (std::size_t v = 0; v < degree; ++v) {
      const int a = find(static_cast<int>(v));
      const int b = find(g(static_cast<int>(v)));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<int>> cells;
  std::vector<int> slot(degree, -1);
  for (std::size_t v = 0; v < degree; ++v) {
    const int r = find(static_cast<int>(v));
    if (slot[r] == -1) {
      slot[r] = static_cast<int>(cells.size());
      cells.emplace_back();
    }
    cells[slot[r]].push_back(static_cast<int>(v));
  }
  return OrbitPartition(std::move(cells));
}

OrbitPartition Orbits(const GeneratorSet& gs) {
  return Orbits(gs.degree(), gs.gens());
}

StabilizerChain::StabilizerChain(const GeneratorSet& gs) : degree_(gs.degree()) {
  for (const auto& g : gs.gens()) {
    auto [residue, level] = Sift(g, 0);
    if (residue.is_identity()) continue;
    AddStrongGenerator(residue, 0, level);
  }
  // Schreier generators are checked bottom-up; any residue restarts the
  // sweep from the deepest level it touched.
  std::size_t i = levels_.size();
  while (i > 0) {
    const std::size_t li = i - 1;
    bool restarted = false;
    for (std::size_t oi = 0; oi < levels_[li].orbit.size() && !restarted; ++oi) {
      const int beta = levels_[li].orbit[oi];
      for (std::size_t si = 0; si < levels_[li].gens.size(); ++si) {
        const Level& lv = levels_[li];
        const Permutation& s = lv.gens[si];
        const Permutation schreier =
            Compose(lv.transversal[s(beta)].inverse(),
                    Compose(s, lv.transversal[beta]));
        if (schreier.is_identity()) continue;
        auto [residue, level] = Sift(schreier, li + 1);
        if (residue.is_identity()) continue;
        AddStrongGenerator(residue, li + 1, level);
        i = level + 1;
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

void StabilizerChain::RebuildOrbit(Level& level) const {
  level.transversal.assign(degree_, Permutation());
  level.orbit.assign(1, level.base_point);
  level.transversal[level.base_point] = Permutation::Identity(degree_);
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    const int x = level.orbit[head];
    for (const auto& g : level.gens) {
      const int y = g(x);
      if (level.transversal[y].degree() == 0) {
        level.transversal[y] = Compose(g, level.transversal[x]);
        level.orbit.push_back(y);
      }
    }
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::Sift(
    Permutation p, std::size_t from) const {
  for (std::size_t j = from; j < levels_.size(); ++j) {
    const int beta = p(levels_[j].base_point);
    const Permutation& u = levels_[j].transversal[beta];
    if (u.degree() == 0) return {std::move(p), j};
    p = Compose(u.inverse(), p);
  }
  return {std::move(p), levels_.size()};
}

void StabilizerChain::AddStrongGenerator(const Permutation& g, std::size_t from,
                                         std::size_t to) {
  if (to == levels_.size()) {
    Level level;
    level.base_point = g.support().front();
    base_.push_back(level.base_point);
    levels_.push_back(std::move(level));
  }
  for (std::size_t j = from; j <= to; ++j) {
    levels_[j].gens.push_back(g);
    RebuildOrbit(levels_[j]);
  }
}

BigInt StabilizerChain::order() const {
  BigInt out = 1;
  for (const auto& l : levels_) out *= l.orbit.size();
  return out;
}

std::vector<std::size_t> StabilizerChain::orbit_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& l : levels_) out.push_back(l.orbit.size());
  return out;
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  return Sift(p, 0).first.is_identity();
}

BigInt GroupOrder(const GeneratorSet& gs) {
  return StabilizerChain(gs).order();
}

}  // namespace fixset
