#include "fixset/aut_engine.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <optional>
#include <utility>

#include "fixset/error.hpp"

namespace fixset {
namespace {

std::uint64_t Mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ULL;
  return h;
}

// (cell count, refinement hash) recorded at each search-tree node.
using NodeKey = std::pair<std::size_t, std::uint64_t>;

std::vector<Vertex> SortedCell(const OrderedPartition& p, std::size_t start) {
  const auto lab = p.lab();
  std::vector<Vertex> out(lab.begin() + static_cast<std::ptrdiff_t>(start),
                          lab.begin() + static_cast<std::ptrdiff_t>(p.cell_end(start)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> GeneratorsFixing(const std::vector<Permutation>& gens,
                                          std::span<const Vertex> points) {
  std::vector<Permutation> out;
  for (const auto& g : gens) {
    if (std::all_of(points.begin(), points.end(),
                    [&](Vertex v) { return g(v) == v; })) {
      out.push_back(g);
    }
  }
  return out;
}

class AutSearch {
 public:
  AutSearch(const Graph& g, std::span<const Vertex> fixed) : g_(g), n_(g.order()) {
    std::vector<char> seen(n_, 0);
    for (Vertex v : fixed) {
      if (v < 0 || static_cast<std::size_t>(v) >= n_) {
        throw InvalidArgument("fixed vertex " + std::to_string(v) +
                              " not in graph");
      }
      if (!seen[v]) fixed_.push_back(v);
      seen[v] = 1;
    }
    std::sort(fixed_.begin(), fixed_.end());
  }

  AutResult Run() {
    std::vector<std::vector<Vertex>> cells;
    std::vector<Vertex> rest;
    std::vector<char> in_fixed(n_, 0);
    for (Vertex v : fixed_) {
      cells.push_back({v});
      in_fixed[v] = 1;
    }
    for (std::size_t v = 0; v < n_; ++v) {
      if (!in_fixed[v]) rest.push_back(static_cast<Vertex>(v));
    }
    if (!rest.empty()) cells.push_back(std::move(rest));

    OrderedPartition root = OrderedPartition::FromCells(n_, cells);
    const std::uint64_t t0 = root.RefineAll(g_);
    ++node_count_;
    path_.push_back(root);
    path_key_.emplace_back(root.num_cells(), t0);
    while (!path_.back().is_discrete()) {
      OrderedPartition child = path_.back();
      const std::size_t target = child.TargetCell();
      const Vertex v = SortedCell(child, target).front();
      const std::size_t s = child.Individualize(v);
      const std::size_t splitter[] = {s};
      const std::uint64_t t = child.Refine(g_, splitter);
      ++node_count_;
      path_choice_.push_back(v);
      path_key_.emplace_back(child.num_cells(), t);
      path_.push_back(std::move(child));
    }
    leaf_ = std::vector<Vertex>(path_.back().lab().begin(), path_.back().lab().end());

    for (std::size_t i = path_choice_.size(); i-- > 0;) {
      const OrderedPartition& node = path_[i];
      const std::vector<Vertex> members = SortedCell(node, node.TargetCell());
      const Vertex first = path_choice_[i];
      std::vector<Vertex> failed;
      std::vector<Vertex> prefix(path_choice_.begin(),
                                 path_choice_.begin() + static_cast<std::ptrdiff_t>(i));
      for (Vertex w : members) {
        if (w == first) continue;
        const OrbitPartition orbits = Orbits(n_, gens_);
        if (orbits.same_orbit(w, first)) continue;
        if (std::any_of(failed.begin(), failed.end(),
                        [&](Vertex f) { return orbits.same_orbit(w, f); })) {
          continue;
        }
        OrderedPartition child = node;
        const std::size_t s = child.Individualize(w);
        const std::size_t splitter[] = {s};
        const std::uint64_t t = child.Refine(g_, splitter);
        prefix.push_back(w);
        auto found = Explore(child, NodeKey{child.num_cells(), t}, i + 1, prefix);
        prefix.pop_back();
        if (found) {
          gens_.push_back(std::move(*found));
        } else {
          failed.push_back(w);
        }
      }
    }

    GeneratorSet gs(n_, gens_);
    OrbitPartition orbits = Orbits(gs);
    return AutResult{std::move(gs), std::move(orbits), node_count_};
  }

 private:
  // Looks for a leaf below `node` equivalent to the first leaf.
  std::optional<Permutation> Explore(const OrderedPartition& node, NodeKey key,
                                     std::size_t depth, std::vector<Vertex>& prefix) {
    ++node_count_;
    if (depth >= path_key_.size() || key != path_key_[depth]) return std::nullopt;
    if (node.is_discrete()) {
      std::vector<int> images(n_);
      const auto lab = node.lab();
      for (std::size_t i = 0; i < n_; ++i) images[leaf_[i]] = lab[i];
      Permutation gamma(std::move(images));
      if (IsAutomorphism(g_, gamma)) return gamma;
      return std::nullopt;
    }
    const std::vector<Vertex> members = SortedCell(node, node.TargetCell());
    const OrbitPartition local(Orbits(n_, GeneratorsFixing(gens_, prefix)));
    std::vector<Vertex> failed;
    for (Vertex u : members) {
      if (std::any_of(failed.begin(), failed.end(),
                      [&](Vertex f) { return local.same_orbit(u, f); })) {
        continue;
      }
      OrderedPartition child = node;
      const std::size_t s = child.Individualize(u);
      const std::size_t splitter[] = {s};
      const std::uint64_t t = child.Refine(g_, splitter);
      prefix.push_back(u);
      auto found = Explore(child, NodeKey{child.num_cells(), t}, depth + 1, prefix);
      prefix.pop_back();
      if (found) return found;
      failed.push_back(u);
    }
    return std::nullopt;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Vertex> fixed_;
  std::vector<OrderedPartition> path_;
  std::vector<NodeKey> path_key_;
  std::vector<Vertex> path_choice_;
  std::vector<Vertex> leaf_;
  std::vector<Permutation> gens_;
  std::size_t node_count_ = 0;
};

std::string EncodeLeaf(const Graph& g, std::span<const Vertex> lab) {
  const std::size_t n = lab.size();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out = "N" + std::to_string(n) + ":";
  }
  int acc = 0;
  int nbits = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(lab[i], lab[j]) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g)
      : g_(g), gens_(AutomorphismGenerators(g).generators.gens()) {}

  CanonicalForm Run() {
    OrderedPartition root(g_.order());
    const std::uint64_t t = root.RefineAll(g_);
    key_.emplace_back(root.num_cells(), t);
    std::vector<Vertex> prefix;
    Dfs(root, prefix);
    return CanonicalForm{best_code_, best_lab_};
  }

 private:
  void Dfs(const OrderedPartition& node, std::vector<Vertex>& prefix) {
    bool ahead = !has_best_;
    if (has_best_) {
      const auto cmp = std::lexicographical_compare_three_way(
          key_.begin(), key_.end(), best_key_.begin(),
          best_key_.begin() + static_cast<std::ptrdiff_t>(
                                  std::min(key_.size(), best_key_.size())));
      if (cmp < 0) return;
      ahead = cmp > 0;
    }
    if (node.is_discrete()) {
      std::string code = EncodeLeaf(g_, node.lab());
      if (ahead || code > best_code_) {
        has_best_ = true;
        best_code_ = std::move(code);
        best_key_ = key_;
        best_lab_.assign(node.lab().begin(), node.lab().end());
      }
      return;
    }
    const std::vector<Vertex> members = SortedCell(node, node.TargetCell());
    const OrbitPartition local(Orbits(g_.order(), GeneratorsFixing(gens_, prefix)));
    std::vector<Vertex> done;
    for (Vertex u : members) {
      if (std::any_of(done.begin(), done.end(),
                      [&](Vertex f) { return local.same_orbit(u, f); })) {
        continue;
      }
      OrderedPartition child = node;
      const std::size_t s = child.Individualize(u);
      const std::size_t splitter[] = {s};
      const std::uint64_t t = child.Refine(g_, splitter);
      key_.emplace_back(child.num_cells(), t);
      prefix.push_back(u);
      Dfs(child, prefix);
      prefix.pop_back();
      key_.pop_back();
      done.push_back(u);
    }
  }

  const Graph& g_;
  std::vector<Permutation> gens_;
  std::vector<NodeKey> key_;
  std::vector<NodeKey> best_key_;
  std::string best_code_;
  std::vector<Vertex> best_lab_;
  bool has_best_ = false;
};

}  // namespace

OrderedPartition::OrderedPartition(std::size_t n)
    : lab_(n), cell_of_(n, 0), end_(n, 0), num_cells_(n == 0 ? 0 : 1) {
  for (std::size_t v = 0; v < n; ++v) lab_[v] = static_cast<Vertex>(v);
  if (n > 0) end_[0] = n;
}

OrderedPartition OrderedPartition::FromCells(
    std::size_t n, const std::vector<std::vector<Vertex>>& cells) {
  OrderedPartition p(n);
  std::vector<char> seen(n, 0);
  std::size_t pos = 0;
  for (const auto& cell : cells) {
    if (cell.empty()) throw InvalidArgument("partition cell is empty");
    const std::size_t start = pos;
    for (Vertex v : cell) {
      if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v]) {
        throw InvalidArgument("partition cells overlap or leave the range");
      }
      seen[v] = 1;
      p.lab_[pos++] = v;
      p.cell_of_[v] = start;
    }
    p.end_[start] = pos;
  }
  if (pos != n) throw InvalidArgument("partition cells do not cover all vertices");
  p.num_cells_ = cells.size();
  return p;
}

std::vector<std::vector<Vertex>> OrderedPartition::cells() const {
  std::vector<std::vector<Vertex>> out;
  for (std::size_t s = 0; s < lab_.size(); s = end_[s]) out.push_back(SortedCell(*this, s));
  return out;
}

std::size_t OrderedPartition::TargetCell() const {
  std::size_t best = lab_.size();
  std::size_t best_size = lab_.size() + 1;
  for (std::size_t s = 0; s < lab_.size(); s = end_[s]) {
    const std::size_t size = end_[s] - s;
    if (size > 1 && size < best_size) {
      best = s;
      best_size = size;
    }
  }
  return best;
}

std::size_t OrderedPartition::Individualize(Vertex v) {
  const std::size_t s = cell_of_[v];
  const std::size_t e = end_[s];
  if (e - s == 1) return s;
  const auto it = std::find(lab_.begin() + static_cast<std::ptrdiff_t>(s),
                            lab_.begin() + static_cast<std::ptrdiff_t>(e), v);
  std::iter_swap(lab_.begin() + static_cast<std::ptrdiff_t>(s), it);
  end_[s] = s + 1;
  end_[s + 1] = e;
  for (std::size_t pos = s + 1; pos < e; ++pos) cell_of_[lab_[pos]] = s + 1;
  ++num_cells_;
  return s;
}

std::uint64_t OrderedPartition::RefineAll(const Graph& g) {
  std::vector<std::size_t> starts;
  for (std::size_t s = 0; s < lab_.size(); s = end_[s]) starts.push_back(s);
  return Refine(g, starts);
}

std::uint64_t OrderedPartition::Refine(const Graph& g,
                                       std::span<const std::size_t> splitters) {
  const std::size_t n = lab_.size();
  const std::size_t words = g.words_per_row();
  std::deque<std::size_t> queue(splitters.begin(), splitters.end());
  std::vector<char> queued(n, 0);
  for (std::size_t s : splitters) queued[s] = 1;
  std::vector<std::uint64_t> mask(words);
  std::vector<int> count(n, 0);
  std::vector<std::pair<int, Vertex>> buf;
  std::uint64_t h = Mix(0x243f6a8885a308d3ULL, num_cells_);

  while (!queue.empty() && num_cells_ < n) {
    const std::size_t w = queue.front();
    queue.pop_front();
    queued[w] = 0;
    std::fill(mask.begin(), mask.end(), 0);
    for (std::size_t pos = w; pos < end_[w]; ++pos) {
      mask[lab_[pos] >> 6] |= 1ULL << (lab_[pos] & 63);
    }
    h = Mix(h, (w << 20) ^ (end_[w] - w));

    for (std::size_t s = 0; s < n;) {
      const std::size_t e = end_[s];
      if (e - s > 1) {
        bool uniform = true;
        for (std::size_t pos = s; pos < e; ++pos) {
          const auto r = g.row(lab_[pos]);
          int c = 0;
          for (std::size_t k = 0; k < words; ++k) c += std::popcount(r[k] & mask[k]);
          count[lab_[pos]] = c;
          if (c != count[lab_[s]]) uniform = false;
        }
        if (!uniform) {
          buf.clear();
          for (std::size_t pos = s; pos < e; ++pos) {
            buf.emplace_back(count[lab_[pos]], lab_[pos]);
          }
          std::sort(buf.begin(), buf.end());
          for (std::size_t pos = s; pos < e; ++pos) lab_[pos] = buf[pos - s].second;
          const bool was_queued = queued[s] != 0;
          std::size_t run = s;
          while (run < e) {
            std::size_t q = run;
            while (q < e && buf[q - s].first == buf[run - s].first) ++q;
            end_[run] = q;
            for (std::size_t pos = run; pos < q; ++pos) cell_of_[lab_[pos]] = run;
            h = Mix(h, (static_cast<std::uint64_t>(s) << 40) ^
                           (static_cast<std::uint64_t>(buf[run - s].first) << 20) ^
                           (q - run));
            if (run != s) ++num_cells_;
            if (!queued[run] && (run != s || !was_queued)) {
              queue.push_back(run);
              queued[run] = 1;
            }
            run = q;
          }
        }
      }
      s = e;
    }
  }
  return Mix(h, num_cells_);
}

bool IsEquitable(const Graph& g, const OrderedPartition& p) {
  const auto cells = p.cells();
  for (const auto& target : cells) {
    for (const auto& cell : cells) {
      int expected = -1;
      for (Vertex v : cell) {
        int c = 0;
        for (Vertex u : target) c += g.adjacent(v, u) ? 1 : 0;
        if (expected == -1) expected = c;
        if (c != expected) return false;
      }
    }
  }
  return true;
}

bool IsAutomorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.order()) return false;
  for (const auto& [u, v] : g.edges()) {
    if (!g.adjacent(p(u), p(v))) return false;
  }
  return true;
}

AutResult AutomorphismGenerators(const Graph& g, std::span<const Vertex> fixed) {
  return AutSearch(g, fixed).Run();
}

bool IsAsymmetric(const Graph& g) {
  return AutomorphismGenerators(g).generators.empty();
}

CanonicalForm Canonicalize(const Graph& g) { return CanonSearch(g).Run(); }

}  // namespace fixset
