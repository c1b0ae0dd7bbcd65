#include "fixset/theorems.hpp"

#include <algorithm>
#include <functional>

#include "fixset/aut_engine.hpp"
#include "fixset/corpus.hpp"
#include "fixset/error.hpp"
#include "fixset/graph_io.hpp"
#include "fixset/perm.hpp"
#include "fixset/products.hpp"

namespace fixset {
namespace {

using nlohmann::json;

VerificationReport NewReport(TheoremId id, const Graph& g1, const Graph* g2,
                             std::optional<int> k = std::nullopt) {
  VerificationReport r;
  r.theorem = id;
  r.g1 = InstanceCode(g1);
  if (g2 != nullptr) r.g2 = InstanceCode(*g2);
  r.k = k;
  return r;
}

// Records the first failure only; later failures still bump the counter.
void Fail(VerificationReport& r, const std::string& check, json detail) {
  ++r.numbers["failures"];
  if (r.verdict == Verdict::kViolated) return;
  r.verdict = Verdict::kViolated;
  detail["check"] = check;
  r.witness = std::move(detail);
}

std::int64_t I(std::size_t x) { return static_cast<std::int64_t>(x); }

json PairJson(const ProductGraph& p, Vertex x) {
  return json::array({p.coord[x].first, p.coord[x].second});
}

json AutomorphismWitness(const Graph& g, const Permutation& p) {
  return {{"graph", InstanceCode(g)},
          {"automorphism", std::vector<int>(p.images().begin(), p.images().end())}};
}

std::vector<Graph> ComponentGraphs(const Graph& g) {
  std::vector<Graph> out;
  for (const auto& c : Components(g)) out.push_back(Induce(g, c).graph);
  return out;
}

// Orbits of the stabilizer of each single vertex; the workhorse for fix(u,v)
// membership tests.
std::vector<OrbitPartition> PointStabilizerOrbits(const Graph& g,
                                                  std::span<const Vertex> points) {
  std::vector<OrbitPartition> out;
  out.reserve(points.size());
  for (Vertex x : points) {
    const Vertex fixed[] = {x};
    out.push_back(AutomorphismGenerators(g, fixed).orbit_partition);
  }
  return out;
}

std::vector<Vertex> AllVertices(const Graph& g) {
  std::vector<Vertex> out(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) out[v] = static_cast<Vertex>(v);
  return out;
}

}  // namespace

std::string ToString(TheoremId id) {
  switch (id) {
    case TheoremId::kCompositionDistance: return "composition_distance";
    case TheoremId::kLiftedAutomorphisms: return "lifted_automorphisms";
    case TheoremId::kCompositionSlices: return "composition_slices";
    case TheoremId::kCompositionBounds: return "composition_bounds";
    case TheoremId::kDisconnectedFormula: return "disconnected_formula";
    case TheoremId::kCorona: return "corona";
    case TheoremId::kCoronaIter: return "corona_iter";
    case TheoremId::kJoinLemmas: return "join_lemmas";
  }
  return "unknown";
}

std::optional<TheoremId> ParseTheoremId(std::string_view name) {
  for (TheoremId id : kAllTheorems) {
    std::string s = ToString(id);
    std::string dashed = s;
    std::replace(dashed.begin(), dashed.end(), '_', '-');
    if (name == s || name == dashed) return id;
  }
  return std::nullopt;
}

std::string ToString(Verdict v) {
  switch (v) {
    case Verdict::kConfirmed: return "confirmed";
    case Verdict::kViolated: return "violated";
    case Verdict::kHypothesisNotMet: return "hypothesis_not_met";
    case Verdict::kSkippedCap: return "skipped_cap";
  }
  return "unknown";
}

json VerificationReport::ToJson() const {
  json instance = {{"g1", g1}};
  if (g2) instance["g2"] = *g2;
  if (k) instance["k"] = *k;
  json out = {{"theorem_id", ToString(theorem)},
              {"instance", std::move(instance)},
              {"verdict", ToString(verdict)},
              {"numbers", numbers}};
  if (witness) out["witness"] = *witness;
  return out;
}

std::string VerificationReport::SortKey() const {
  std::string key = ToString(theorem) + '\x01' + std::to_string(g1.size()) + ':' + g1 +
                    '\x01' + (g2 ? std::to_string(g2->size()) + ':' + *g2 : "") +
                    '\x01';
  if (k) key += std::to_string(*k);
  return key;
}

VerificationReport VerifyCompositionDistance(const Graph& g1, const Graph& g2,
                                             const Limits&) {
  VerificationReport r = NewReport(TheoremId::kCompositionDistance, g1, &g2);
  const bool connected = IsConnected(g1);
  r.numbers["hypothesis.g1_connected"] = connected;
  if (!connected) {
    r.verdict = Verdict::kHypothesisNotMet;
    return r;
  }
  const ProductGraph p = Composition(g1, g2);
  const DistanceMatrix d = AllPairsDistances(p.graph);
  const DistanceMatrix d1 = AllPairsDistances(g1);
  const DistanceMatrix d2 = AllPairsDistances(g2);
  const std::size_t order = p.graph.order();

  std::int64_t pairs = 0;
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      const auto [a, b] = std::pair(p.coord[x].first, p.coord[x].second);
      const auto [a2, b2] = std::pair(p.coord[y].first, p.coord[y].second);
      int formula = 0;
      if (a != a2) {
        formula = d1.at(a, a2);
      } else if (g1.degree(a) == 0) {
        formula = d2.at(b, b2);
      } else {
        const int inner = d2.at(b, b2);
        formula = inner == DistanceMatrix::kUnreachable ? 2 : std::min(inner, 2);
      }
      ++pairs;
      const int bfs = d.at(static_cast<Vertex>(x), static_cast<Vertex>(y));
      if (bfs != formula) {
        Fail(r, "distance_formula",
             {{"x", PairJson(p, static_cast<Vertex>(x))},
              {"y", PairJson(p, static_cast<Vertex>(y))},
              {"bfs", bfs},
              {"formula", formula}});
      }
    }
  }
  r.numbers["distance_pairs"] = pairs;

  // Two vertices of one slice are equidistant from every vertex of another.
  std::int64_t slice_checks = 0;
  for (std::size_t a = 0; a < p.m; ++a) {
    const auto sa = p.slice(static_cast<Vertex>(a));
    for (std::size_t b = 0; b < p.m; ++b) {
      if (a == b) continue;
      for (Vertex z : p.slice(static_cast<Vertex>(b))) {
        for (std::size_t i = 0; i < sa.size(); ++i) {
          for (std::size_t j = i + 1; j < sa.size(); ++j) {
            ++slice_checks;
            if (d.at(sa[i], z) != d.at(sa[j], z)) {
              Fail(r, "slice_equidistance",
                   {{"u", PairJson(p, sa[i])}, {"v", PairJson(p, sa[j])},
                    {"z", PairJson(p, z)}, {"d_uz", d.at(sa[i], z)},
                    {"d_vz", d.at(sa[j], z)}});
            }
          }
        }
      }
    }
  }
  r.numbers["slice_checks"] = slice_checks;

  // Same within one slice across different components of G2.
  const auto comps = Components(g2);
  std::int64_t component_checks = 0;
  for (std::size_t a = 0; a < p.m; ++a) {
    const auto at = [&](Vertex v) { return static_cast<Vertex>(a * p.n + v); };
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
      for (std::size_t cj = 0; cj < comps.size(); ++cj) {
        if (ci == cj) continue;
        for (Vertex zv : comps[cj]) {
          const Vertex z = at(zv);
          for (std::size_t i = 0; i < comps[ci].size(); ++i) {
            for (std::size_t j = i + 1; j < comps[ci].size(); ++j) {
              const Vertex x = at(comps[ci][i]);
              const Vertex y = at(comps[ci][j]);
              ++component_checks;
              if (d.at(x, z) != d.at(y, z)) {
                Fail(r, "component_equidistance",
                     {{"x", PairJson(p, x)}, {"y", PairJson(p, y)},
                      {"z", PairJson(p, z)}, {"d_xz", d.at(x, z)},
                      {"d_yz", d.at(y, z)}});
              }
            }
          }
        }
      }
    }
  }
  r.numbers["component_checks"] = component_checks;
  return r;
}

VerificationReport VerifyLiftedAutomorphisms(const Graph& g1, const Graph& g2,
                                             const Limits&) {
  VerificationReport r = NewReport(TheoremId::kLiftedAutomorphisms, g1, &g2);
  const ProductGraph p = Composition(g1, g2);
  const std::size_t m = p.m;
  const std::size_t n = p.n;
  const AutResult aut1 = AutomorphismGenerators(g1);
  const AutResult aut2 = AutomorphismGenerators(g2);

  std::int64_t lifted = 0;
  for (const auto& alpha : aut1.generators.gens()) {
    std::vector<int> images(m * n);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t v = 0; v < n; ++v) {
        images[a * n + v] = static_cast<int>(alpha(static_cast<int>(a)) * n + v);
      }
    }
    const Permutation f(std::move(images));
    ++lifted;
    if (!IsAutomorphism(p.graph, f)) {
      json w = AutomorphismWitness(p.graph, f);
      w["generator"] = std::vector<int>(alpha.images().begin(), alpha.images().end());
      Fail(r, "lift_first_factor", std::move(w));
    }
  }
  for (const auto& beta : aut2.generators.gens()) {
    std::vector<int> images(m * n);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t v = 0; v < n; ++v) {
        images[a * n + v] = static_cast<int>(a * n + beta(static_cast<int>(v)));
      }
    }
    const Permutation f(std::move(images));
    ++lifted;
    if (!IsAutomorphism(p.graph, f)) {
      json w = AutomorphismWitness(p.graph, f);
      w["generator"] = std::vector<int>(beta.images().begin(), beta.images().end());
      Fail(r, "lift_second_factor", std::move(w));
    }
  }
  r.numbers["lifted_generators"] = lifted;

  // Orbit lifting, checked against orbits computed on the product itself.
  const OrbitPartition product_orbits = AutomorphismGenerators(p.graph).orbit_partition;
  const OrbitPartition& o1 = aut1.orbit_partition;
  const OrbitPartition& o2 = aut2.orbit_partition;
  std::int64_t orbit_checks = 0;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (!o1.same_orbit(static_cast<int>(a), static_cast<int>(b))) continue;
      for (std::size_t i = 0; i < n; ++i) {
        ++orbit_checks;
        const auto x = static_cast<Vertex>(a * n + i);
        const auto y = static_cast<Vertex>(b * n + i);
        if (!product_orbits.same_orbit(x, y)) {
          Fail(r, "orbit_lift_first_factor",
               {{"x", PairJson(p, x)}, {"y", PairJson(p, y)}});
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!o2.same_orbit(static_cast<int>(i), static_cast<int>(j))) continue;
      for (std::size_t a = 0; a < m; ++a) {
        ++orbit_checks;
        const auto x = static_cast<Vertex>(a * n + i);
        const auto y = static_cast<Vertex>(a * n + j);
        if (!product_orbits.same_orbit(x, y)) {
          Fail(r, "orbit_lift_second_factor",
               {{"x", PairJson(p, x)}, {"y", PairJson(p, y)}});
        }
      }
    }
  }
  r.numbers["orbit_checks"] = orbit_checks;
  return r;
}

VerificationReport VerifyCompositionSlices(const Graph& g1, const Graph& g2,
                                           const Limits& limits) {
  VerificationReport r = NewReport(TheoremId::kCompositionSlices, g1, &g2);
  const bool connected = IsConnected(g1);
  const bool g2_symmetric = !IsAsymmetric(g2);
  r.numbers["hypothesis.g1_connected"] = connected;
  r.numbers["hypothesis.g2_non_asymmetric"] = g2_symmetric;
  if (!connected || !g2_symmetric) {
    r.verdict = Verdict::kHypothesisNotMet;
    return r;
  }
  if (g1.order() * g2.order() > limits.cap) {
    r.verdict = Verdict::kSkippedCap;
    return r;
  }
  const ProductGraph p = Composition(g1, g2);
  const FixingResult best = FixingNumber(p.graph, limits.cap);
  r.numbers["fix"] = I(best.fix_number);

  const auto comps = Components(g2);
  std::vector<Graph> comp_graphs;
  std::vector<std::size_t> comp_fix;
  std::vector<int> comp_of(g2.order());
  bool all_symmetric = true;
  std::size_t sum_fix = 0;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    comp_graphs.push_back(Induce(g2, comps[c]).graph);
    comp_fix.push_back(FixingNumber(comp_graphs.back(), limits.cap).fix_number);
    all_symmetric = all_symmetric && comp_fix.back() > 0;
    sum_fix += comp_fix.back();
    for (Vertex v : comps[c]) comp_of[v] = static_cast<int>(c);
  }
  r.numbers["hypothesis.components_non_asymmetric"] = all_symmetric;
  r.numbers["sum_component_fix"] = I(sum_fix);

  bool slice_sum_equal = true;
  std::int64_t min_slice = -1;
  for (std::size_t a = 0; a < p.m; ++a) {
    std::vector<Vertex> projected;
    for (Vertex x : best.witness) {
      if (p.project_first(x) == static_cast<Vertex>(a)) projected.push_back(p.project_second(x));
    }
    if (min_slice < 0 || I(projected.size()) < min_slice) min_slice = I(projected.size());
    slice_sum_equal = slice_sum_equal && projected.size() == sum_fix;
    if (projected.empty()) {
      Fail(r, "slice_nonempty", {{"slice", a}, {"fixing_set", best.witness}});
      continue;
    }
    if (!IsFixingSet(g2, projected)) {
      Fail(r, "slice_fixes", {{"slice", a}, {"fixing_set", best.witness},
                              {"projection", projected}});
    }
    if (!all_symmetric) continue;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      std::vector<Vertex> local;
      for (std::size_t i = 0; i < comps[c].size(); ++i) {
        if (std::binary_search(projected.begin(), projected.end(), comps[c][i])) {
          local.push_back(static_cast<Vertex>(i));
        }
      }
      if (local.empty() || !IsFixingSet(comp_graphs[c], local) ||
          local.size() < comp_fix[c]) {
        Fail(r, "component_slice",
             {{"slice", a}, {"component", c}, {"fixing_set", best.witness},
              {"in_component", local.size()}, {"component_fix", comp_fix[c]}});
      }
    }
  }
  r.numbers["min_slice_size"] = min_slice;
  r.numbers["flag.slice_sum_equal"] = slice_sum_equal;

  // A vertex outside a slice, or in another component of the same slice,
  // never separates a similar pair inside it.
  const OrbitPartition root = AutomorphismGenerators(p.graph).orbit_partition;
  const auto stab = PointStabilizerOrbits(p.graph, AllVertices(p.graph));
  std::int64_t nonfixing_checks = 0;
  for (std::size_t a = 0; a < p.m; ++a) {
    const auto sa = p.slice(static_cast<Vertex>(a));
    for (std::size_t i = 0; i < sa.size(); ++i) {
      for (std::size_t j = i + 1; j < sa.size(); ++j) {
        const Vertex x = sa[i];
        const Vertex y = sa[j];
        if (!root.same_orbit(x, y)) continue;
        for (std::size_t z = 0; z < p.graph.order(); ++z) {
          const bool other_slice = p.project_first(static_cast<Vertex>(z)) != static_cast<Vertex>(a);
          const int cz = comp_of[p.project_second(static_cast<Vertex>(z))];
          const bool other_component =
              !other_slice && comp_of[p.project_second(x)] == comp_of[p.project_second(y)] &&
              cz != comp_of[p.project_second(x)];
          if (!other_slice && !other_component) continue;
          ++nonfixing_checks;
          if (!stab[z].same_orbit(x, y)) {
            Fail(r, other_slice ? "other_slice_nonfixing" : "other_component_nonfixing",
                 {{"z", PairJson(p, static_cast<Vertex>(z))},
                  {"x", PairJson(p, x)},
                  {"y", PairJson(p, y)}});
          }
        }
      }
    }
  }
  r.numbers["nonfixing_checks"] = nonfixing_checks;
  return r;
}

VerificationReport VerifyCompositionBounds(const Graph& g1, const Graph& g2,
                                           const Limits& limits) {
  VerificationReport r = NewReport(TheoremId::kCompositionBounds, g1, &g2);
  const bool connected = IsConnected(g1);
  r.numbers["hypothesis.g1_connected"] = connected;
  if (!connected) {
    r.verdict = Verdict::kHypothesisNotMet;
    return r;
  }
  const std::size_t m = g1.order();
  const std::size_t n = g2.order();
  if (m * n > limits.cap) {
    r.verdict = Verdict::kSkippedCap;
    return r;
  }
  const ProductGraph p = Composition(g1, g2);
  const FixingResult fix = FixingNumber(p.graph, limits.cap);
  const std::size_t fix1 = FixingNumber(g1, limits.cap).fix_number;
  const std::size_t fix2 = FixingNumber(g2, limits.cap).fix_number;

  const auto parts = ComponentGraphs(g2);
  std::size_t sum_fix = 0;
  std::vector<std::string> asym_codes;
  for (const Graph& part : parts) {
    const std::size_t f = FixingNumber(part, limits.cap).fix_number;
    sum_fix += f;
    if (f == 0) asym_codes.push_back(CanonicalCode(part));
  }
  std::sort(asym_codes.begin(), asym_codes.end());
  const bool twin_asymmetric =
      std::adjacent_find(asym_codes.begin(), asym_codes.end()) != asym_codes.end();

  const std::size_t upper = m * n - 1;
  const std::size_t lower = m * sum_fix;
  r.numbers["m"] = I(m);
  r.numbers["n"] = I(n);
  r.numbers["components"] = I(parts.size());
  r.numbers["fix"] = I(fix.fix_number);
  r.numbers["upper"] = I(upper);
  r.numbers["lower"] = I(lower);
  if (fix.fix_number < lower || fix.fix_number > upper) {
    Fail(r, "bounds", {{"lower", lower}, {"fix", fix.fix_number}, {"upper", upper},
                       {"fixing_set", fix.witness}});
  }

  // Equality claims made on the way to the lower bound, recorded but not
  // part of the verdict.
  const bool case1 = parts.size() == 1;
  r.numbers["connected_case.applicable"] = case1;
  if (case1) {
    r.numbers["connected_case.value"] = I(m * fix2);
    r.numbers["connected_case.holds"] = fix.fix_number == m * fix2;
  }
  const bool case2 = parts.size() >= 2 && !twin_asymmetric;
  r.numbers["disconnected_case.applicable"] = case2;
  if (case2) {
    r.numbers["disconnected_case.value"] = I(lower);
    r.numbers["disconnected_case.holds"] = fix.fix_number == lower;
  }
  const bool asym = fix2 == 0;
  r.numbers["asymmetric_factor.applicable"] = asym;
  if (asym) {
    r.numbers["asymmetric_factor.value"] = I(fix1);
    r.numbers["asymmetric_factor.holds"] = fix.fix_number == fix1;
  }
  // Connected asymmetric G2: the connected-case value m*fix(G2) = 0 and the
  // asymmetric-factor value fix(G1) disagree whenever G1 is not asymmetric.
  r.numbers["flag.connected_case_vs_asymmetric_factor"] = case1 && asym && fix1 != 0;
  return r;
}

VerificationReport VerifyDisconnectedFormula(const Graph& g, const Limits& limits) {
  VerificationReport r = NewReport(TheoremId::kDisconnectedFormula, g, nullptr);
  const auto comps = Components(g);
  r.numbers["components"] = I(comps.size());
  const bool orders_ok =
      std::all_of(comps.begin(), comps.end(), [](const auto& c) { return c.size() >= 2; });
  r.numbers["hypothesis.two_or_more_components"] = comps.size() >= 2;
  r.numbers["hypothesis.component_orders_at_least_2"] = orders_ok;
  if (comps.size() < 2 || !orders_ok) {
    r.verdict = Verdict::kHypothesisNotMet;
    return r;
  }
  if (g.order() > limits.cap) {
    r.verdict = Verdict::kSkippedCap;
    return r;
  }
  const DisconnectedFixing d = FixingNumberDisconnected(g, limits.cap);
  r.numbers["formula"] = I(d.formula_value);
  r.numbers["solver"] = I(d.solver->fix_number);
  r.numbers["asymmetric_classes"] = I(d.asymmetric_classes.size());
  r.numbers["non_asymmetric_components"] = I(d.symmetric.size());
  r.numbers["flag.isomorphic_non_asymmetric_components"] = d.isomorphic_symmetric_components;
  if (d.formula_value != d.solver->fix_number) {
    Fail(r, "formula_vs_solver", {{"formula", d.formula_value},
                                  {"solver", d.solver->fix_number},
                                  {"fixing_set", d.solver->witness}});
  }
  return r;
}

VerificationReport VerifyCorona(const Graph& g1, const Graph& g2, const Limits& limits) {
  VerificationReport r = NewReport(TheoremId::kCorona, g1, &g2);
  const std::size_t m = g1.order();
  const std::size_t n = g2.order();
  const bool connected = IsConnected(g1);
  r.numbers["hypothesis.g1_connected"] = connected;
  r.numbers["hypothesis.g1_nontrivial"] = m >= 2;
  if (!connected || m < 2) {
    r.verdict = Verdict::kHypothesisNotMet;
    return r;
  }
  if (m * (n + 1) > limits.cap) {
    r.verdict = Verdict::kSkippedCap;
    return r;
  }
  const ProductGraph p = Corona(g1, g2);
  const FixingResult fix = FixingNumber(p.graph, limits.cap);
  const std::size_t fix1 = FixingNumber(g1, limits.cap).fix_number;
  const std::size_t fix2 = FixingNumber(g2, limits.cap).fix_number;
  const std::size_t max_formula = std::max(fix1, m * fix2);
  r.numbers["m"] = I(m);
  r.numbers["n"] = I(n);
  r.numbers["fix"] = I(fix.fix_number);
  r.numbers["fix_g1"] = I(fix1);
  r.numbers["fix_g2"] = I(fix2);
  r.numbers["max_formula"] = I(max_formula);
  if (fix.fix_number != max_formula) {
    Fail(r, "max_formula", {{"fix", fix.fix_number}, {"formula", max_formula},
                            {"fixing_set", fix.witness}});
  }
  const bool both_symmetric = fix1 > 0 && fix2 > 0;
  r.numbers["m_fix_formula.applicable"] = both_symmetric;
  if (both_symmetric) {
    r.numbers["m_fix_formula"] = I(m * fix2);
    if (fix.fix_number != m * fix2) {
      Fail(r, "m_fix_formula", {{"fix", fix.fix_number}, {"formula", m * fix2},
                                {"fixing_set", fix.witness}});
    }
  }
  if (fix1 == 0 && fix2 == 0 && fix.fix_number != 0) {
    Fail(r, "asymmetric_factors", {{"fix", fix.fix_number}, {"fixing_set", fix.witness}});
  }

  // Structure of a minimum fixing set relative to the copies.
  std::vector<Vertex> copy_vertices;
  for (std::size_t x = m; x < p.graph.order(); ++x) copy_vertices.push_back(static_cast<Vertex>(x));
  std::int64_t copy_checks = 0;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Vertex> local;
    for (Vertex x : fix.witness) {
      if (p.coord[x].role == VertexCoord::Role::kCopy &&
          p.coord[x].first == static_cast<int>(i)) {
        local.push_back(p.coord[x].second);
      }
    }
    ++copy_checks;
    if (fix2 > 0 && local.empty()) {
      Fail(r, "copy_meets_fixing_set", {{"copy", i}, {"fixing_set", fix.witness}});
    }
    if (!IsFixingSet(g2, local)) {
      Fail(r, "copy_part_fixes_copy", {{"copy", i}, {"fixing_set", fix.witness},
                                       {"in_copy", local}});
    }
  }
  r.numbers["copy_checks"] = copy_checks;
  // Existential form: some minimum fixing set avoids the roots.
  const auto root_free =
      FixingNumberRestricted(p.graph, FixingOptions{limits.cap, copy_vertices});
  r.numbers["root_free_fix"] = root_free ? I(root_free->fix_number) : -1;
  if (!root_free || root_free->fix_number != fix.fix_number) {
    Fail(r, "root_free_minimum",
         {{"fix", fix.fix_number},
          {"root_free", root_free ? json(root_free->fix_number) : json(nullptr)}});
  }

  // Relative fixing sets of similar pairs inside one copy.
  const OrbitPartition orbits = AutomorphismGenerators(p.graph).orbit_partition;
  const auto stab = PointStabilizerOrbits(p.graph, copy_vertices);
  auto stab_of = [&](Vertex x) -> const OrbitPartition& { return stab[x - m]; };
  std::int64_t pair_checks = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto vi = p.copy(static_cast<Vertex>(i));
    for (std::size_t s = 0; s < vi.size(); ++s) {
      for (std::size_t t = s + 1; t < vi.size(); ++t) {
        if (!orbits.same_orbit(vi[s], vi[t])) continue;
        ++pair_checks;
        const bool inside = std::any_of(vi.begin(), vi.end(), [&](Vertex x) {
          return !stab_of(x).same_orbit(vi[s], vi[t]);
        });
        if (!inside) {
          Fail(r, "pair_fixed_inside_copy", {{"copy", i}, {"s", vi[s]}, {"t", vi[t]}});
        }
        for (std::size_t j = 0; j < m; ++j) {
          if (j == i) continue;
          for (Vertex x : p.copy(static_cast<Vertex>(j))) {
            if (!stab_of(x).same_orbit(vi[s], vi[t])) {
              Fail(r, "pair_fixed_from_other_copy",
                   {{"copy", i}, {"s", vi[s]}, {"t", vi[t]}, {"x", x}});
            }
          }
        }
      }
    }
  }
  r.numbers["similar_pairs"] = pair_checks;
  return r;
}

VerificationReport VerifyCoronaIter(const Graph& g1, const Graph& g2, int k,
                                    const Limits& limits) {
  VerificationReport r = NewReport(TheoremId::kCoronaIter, g1, &g2, k);
  const std::size_t m = g1.order();
  const std::size_t n = g2.order();
  const bool connected = IsConnected(g1);
  const bool g2_symmetric = !IsAsymmetric(g2);
  std::size_t base = m;
  for (int level = 1; level < k; ++level) base *= n + 1;
  r.numbers["hypothesis.g1_connected"] = connected;
  r.numbers["hypothesis.g2_non_asymmetric"] = g2_symmetric;
  r.numbers["hypothesis.base_nontrivial"] = base >= 2;
  if (!connected || !g2_symmetric || base < 2 || k < 1) {
    r.verdict = Verdict::kHypothesisNotMet;
    return r;
  }
  const std::size_t order = base * (n + 1);
  r.numbers["order"] = I(order);
  if (order > limits.cap) {
    r.verdict = Verdict::kSkippedCap;
    return r;
  }
  const ProductGraph p = CoronaIter(g1, g2, k);
  const FixingResult fix = FixingNumber(p.graph, limits.cap);
  const std::size_t formula = base * FixingNumber(g2, limits.cap).fix_number;
  r.numbers["fix"] = I(fix.fix_number);
  r.numbers["formula"] = I(formula);
  if (fix.fix_number != formula) {
    Fail(r, "iterated_formula", {{"fix", fix.fix_number}, {"formula", formula},
                                 {"fixing_set", fix.witness}});
  }
  return r;
}

VerificationReport VerifyJoinLemmas(const Graph& g, const Limits& limits) {
  VerificationReport r = NewReport(TheoremId::kJoinLemmas, g, nullptr);
  const std::size_t n = g.order();
  const bool asym = IsAsymmetric(g);
  r.numbers["asymmetric"] = asym;
  const Graph joined = JoinWithApex(g);
  const auto apex = static_cast<Vertex>(n);

  if (asym) {
    std::int64_t dominating = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (g.degree(static_cast<Vertex>(v)) == static_cast<int>(n) - 1) ++dominating;
    }
    r.numbers["dominating_vertices"] = dominating;
    if (dominating > 1) {
      Fail(r, "dominating_vertices", {{"graph", InstanceCode(g)}, {"count", dominating}});
    }
    r.numbers["apex_asymmetry.applicable"] = n >= 2;
    if (n >= 2) {
      const AutResult ja = AutomorphismGenerators(joined);
      r.numbers["apex_asymmetry.holds"] = ja.generators.empty();
      if (!ja.generators.empty()) {
        Fail(r, "apex_join_asymmetric",
             AutomorphismWitness(joined, ja.generators.gens().front()));
      }
    }
  }

  if (joined.order() > limits.cap) {
    r.numbers["apex_free.checked"] = 0;
    return r;
  }
  r.numbers["apex_free.checked"] = 1;
  const FixingResult fix = FixingNumber(joined, limits.cap);
  std::vector<Vertex> base_vertices(n);
  for (std::size_t v = 0; v < n; ++v) base_vertices[v] = static_cast<Vertex>(v);
  const auto apex_free =
      FixingNumberRestricted(joined, FixingOptions{limits.cap, base_vertices});
  r.numbers["fix_join"] = I(fix.fix_number);
  r.numbers["apex_free_fix"] = apex_free ? I(apex_free->fix_number) : -1;
  if (!apex_free || apex_free->fix_number != fix.fix_number) {
    Fail(r, "apex_free_fixing_set",
         {{"fix", fix.fix_number},
          {"apex_free", apex_free ? json(apex_free->fix_number) : json(nullptr)},
          {"apex", apex}});
  }
  return r;
}

VerificationReport Verify(TheoremId id, const Instance& in, const Limits& limits) {
  auto need_g2 = [&]() -> const Graph& {
    if (!in.g2) throw InvalidArgument(ToString(id) + " needs two graphs");
    return *in.g2;
  };
  switch (id) {
    case TheoremId::kCompositionDistance:
      return VerifyCompositionDistance(in.g1, need_g2(), limits);
    case TheoremId::kLiftedAutomorphisms:
      return VerifyLiftedAutomorphisms(in.g1, need_g2(), limits);
    case TheoremId::kCompositionSlices:
      return VerifyCompositionSlices(in.g1, need_g2(), limits);
    case TheoremId::kCompositionBounds:
      return VerifyCompositionBounds(in.g1, need_g2(), limits);
    case TheoremId::kDisconnectedFormula:
      return VerifyDisconnectedFormula(in.g1, limits);
    case TheoremId::kCorona:
      return VerifyCorona(in.g1, need_g2(), limits);
    case TheoremId::kCoronaIter:
      return VerifyCoronaIter(in.g1, need_g2(), in.k.value_or(1), limits);
    case TheoremId::kJoinLemmas:
      return VerifyJoinLemmas(in.g1, limits);
  }
  throw InvalidArgument("unknown theorem");
}

bool RecheckWitness(const VerificationReport& report) {
  if (report.verdict != Verdict::kViolated || !report.witness) return false;
  const json& w = *report.witness;
  if (w.contains("automorphism")) {
    const Graph g = ParseGraph6(w.at("graph").get<std::string>());
    const Permutation p(w.at("automorphism").get<std::vector<int>>());
    const std::string check = w.at("check").get<std::string>();
    if (check == "apex_join_asymmetric") {
      // A nontrivial automorphism of G + K_1 refutes asymmetry directly.
      return !p.is_identity() && IsAutomorphism(g, p);
    }
    // Lift checks claim the map is not an automorphism.
    return !IsAutomorphism(g, p);
  }
  Instance in{ParseGraph6(report.g1), std::nullopt, report.k};
  if (report.g2) in.g2 = ParseGraph6(*report.g2);
  const VerificationReport again = Verify(report.theorem, in, Limits{kDefaultExactCap});
  return again.verdict == Verdict::kViolated && again.witness == report.witness;
}

std::size_t ScanSummary::count_flag(const std::string& name) const {
  std::size_t c = 0;
  for (const auto& r : reports) {
    const auto it = r.numbers.find(name);
    if (it != r.numbers.end() && it->second != 0) ++c;
  }
  return c;
}

namespace {

VerificationReport Evaluate(TheoremId id, const Instance& in, const Limits& limits) {
  try {
    return Verify(id, in, limits);
  } catch (const CapExceeded&) {
    VerificationReport r;
    r.theorem = id;
    r.g1 = InstanceCode(in.g1);
    if (in.g2) r.g2 = InstanceCode(*in.g2);
    r.k = in.k;
    r.verdict = Verdict::kSkippedCap;
    return r;
  }
}

ScanSummary Summarize(std::vector<VerificationReport> reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
    return a.SortKey() < b.SortKey();
  });
  ScanSummary s;
  for (const auto& r : reports) ++s.counts[r.verdict];
  s.reports = std::move(reports);
  return s;
}

}  // namespace

ScanSummary ScanCorpusSerial(const std::vector<Instance>& corpus, TheoremId id,
                             const Limits& limits) {
  std::vector<VerificationReport> reports;
  reports.reserve(corpus.size());
  for (const auto& in : corpus) reports.push_back(Evaluate(id, in, limits));
  return Summarize(std::move(reports));
}

ScanSummary ScanCorpus(const std::vector<Instance>& corpus, TheoremId id,
                       const Limits& limits, int jobs) {
  if (jobs <= 1) return ScanCorpusSerial(corpus, id, limits);
  std::vector<VerificationReport> reports(corpus.size());
  const auto count = static_cast<std::int64_t>(corpus.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
  for (std::int64_t i = 0; i < count; ++i) {
    reports[static_cast<std::size_t>(i)] =
        Evaluate(id, corpus[static_cast<std::size_t>(i)], limits);
  }
  return Summarize(std::move(reports));
}

std::vector<Instance> DefaultCorpus(TheoremId id, const CorpusOptions& options) {
  std::vector<Instance> out;
  auto pairs = [&](std::size_t g1_max, std::size_t g2_max, std::optional<int> k) {
    const auto first = ConnectedGraphsUpTo(g1_max);
    const auto second = AllGraphsUpTo(g2_max);
    for (const auto& a : first) {
      for (const auto& b : second) out.push_back(Instance{a, b, k});
    }
  };
  switch (id) {
    case TheoremId::kCompositionDistance:
    case TheoremId::kLiftedAutomorphisms:
    case TheoremId::kCompositionSlices:
    case TheoremId::kCompositionBounds:
      pairs(options.g1_max, options.g2_max, std::nullopt);
      break;
    case TheoremId::kCorona:
      pairs(options.corona_g1_max, options.g2_max, std::nullopt);
      break;
    case TheoremId::kCoronaIter:
      for (int k = 1; k <= options.k_max; ++k) {
        pairs(options.iter_g1_max, options.iter_g2_max, k);
      }
      break;
    case TheoremId::kDisconnectedFormula:
      for (auto& g : MultiComponentCorpus(options.disconnected_count, options.seed)) {
        out.push_back(Instance{std::move(g), std::nullopt, std::nullopt});
      }
      break;
    case TheoremId::kJoinLemmas:
      for (auto& g : AllGraphsUpTo(options.join_max)) {
        out.push_back(Instance{std::move(g), std::nullopt, std::nullopt});
      }
      break;
  }
  return out;
}

}  // namespace fixset
