#pragma once

// Shared fixtures, random instance generators, and independent oracles for
// the unit and acceptance suites.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "quiverpa/group.hpp"
#include "quiverpa/pathalg.hpp"
#include "quiverpa/quiver.hpp"
#include "quiverpa/quiver_paction.hpp"
#include "quiverpa/setaction.hpp"

namespace testsupport {

using namespace qpa;

// ---- fixed instances -------------------------------------------------------

inline Quiver four_cycle() {
  return Quiver({"1", "2", "3", "4"},
                {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "4"},
                 {"d", "4", "1"}});
}

inline GlobalQuiverAction c4_rotation() {
  GlobalQuiverAction b;
  b.group = FiniteGroup::cyclic(4);
  b.quiver = four_cycle();
  b.vertex_action.resize(4);
  b.arrow_action.resize(4);
  for (int g = 0; g < 4; ++g) {
    b.vertex_action[g].resize(4);
    b.arrow_action[g].resize(4);
    for (int i = 0; i < 4; ++i) {
      b.vertex_action[g][i] = (i + g) % 4;
      b.arrow_action[g][i] = (i + g) % 4;
    }
  }
  return b;
}

inline Subquiver path_subquiver() {
  return Subquiver::of(four_cycle(), {"1", "2", "3"}, {"a", "b"});
}

// the C4 fixture's partial action: a rotation restricted to a path
inline QuiverPartialAction c4_restriction() {
  return restrict_global_action(c4_rotation(), path_subquiver());
}

inline Quiver arrow_quiver() {
  return Quiver({"v1", "v2"}, {{"f", "v1", "v2"}});
}

// the C3 fixture: domains {v1} and {v2}, no arrows moved
inline QuiverPartialAction c3_arrow_partial() {
  QuiverPartialAction a;
  a.group = FiniteGroup::cyclic(3);
  a.quiver = arrow_quiver();
  a.domains.resize(3);
  a.vertex_maps.resize(3);
  a.arrow_maps.resize(3);
  a.domains[0] = Subquiver::full(a.quiver);
  a.vertex_maps[0] = {{0, 0}, {1, 1}};
  a.arrow_maps[0] = {{0, 0}};
  a.domains[1] = Subquiver::of(a.quiver, {"v1"}, {});
  a.domains[2] = Subquiver::of(a.quiver, {"v2"}, {});
  a.vertex_maps[1] = {{1, 0}};  // alpha_t : v2 -> v1
  a.vertex_maps[2] = {{0, 1}};  // alpha_t2 : v1 -> v2
  return a;
}

// ---- random instance family ------------------------------------------------

inline FiniteGroup random_group(std::mt19937_64& rng) {
  switch (rng() % 8) {
    case 0: return FiniteGroup::cyclic(1);
    case 1: return FiniteGroup::cyclic(2);
    case 2: return FiniteGroup::cyclic(3);
    case 3: return FiniteGroup::cyclic(4);
    case 4: return FiniteGroup::cyclic(5);
    case 5: return FiniteGroup::cyclic(6);
    case 6:  // Klein four-group
      return FiniteGroup::from_permutations({{1, 0, 3, 2}, {2, 3, 0, 1}});
    default:  // S3
      return FiniteGroup::from_permutations({{1, 0, 2}, {1, 2, 0}});
  }
}

inline Quiver random_quiver(std::mt19937_64& rng, int max_vertices,
                            int max_arrows) {
  int nv = 1 + static_cast<int>(rng() % std::max(1, max_vertices));
  int na = static_cast<int>(rng() % (max_arrows + 1));
  std::vector<std::string> vertices;
  for (int v = 0; v < nv; ++v) vertices.push_back("v" + std::to_string(v));
  std::vector<Arrow> arrows;
  for (int a = 0; a < na; ++a)
    arrows.push_back({"a" + std::to_string(a),
                      vertices[rng() % nv],
                      vertices[rng() % nv]});
  return Quiver(std::move(vertices), std::move(arrows));
}

// A valid global action: either trivial, a free translation action on |G|
// copies of a base quiver, or (for cyclic groups) a cycle rotation with an
// optional fixed hub.
inline GlobalQuiverAction random_global_action(std::mt19937_64& rng) {
  FiniteGroup group = random_group(rng);
  const int m = group.size();

  auto identity_tables = [](const Quiver& q, int count) {
    std::vector<std::vector<int>> v(count), a(count);
    for (int g = 0; g < count; ++g) {
      v[g].resize(q.n_vertices());
      a[g].resize(q.n_arrows());
      for (int i = 0; i < q.n_vertices(); ++i) v[g][i] = i;
      for (int i = 0; i < q.n_arrows(); ++i) a[g][i] = i;
    }
    return std::make_pair(v, a);
  };

  bool cyclic = group.elements()[0] == "e" && group.size() >= 1 &&
                group.elements() == FiniteGroup::cyclic(m).elements();
  int strategy = static_cast<int>(rng() % (cyclic && m >= 2 ? 4 : 2));

  if (strategy == 0) {
    // trivial action
    GlobalQuiverAction b;
    b.group = group;
    b.quiver = random_quiver(rng, 6, 8);
    auto [v, a] = identity_tables(b.quiver, m);
    b.vertex_action = v;
    b.arrow_action = a;
    return b;
  }

  if (strategy == 1) {
    // free translation action on |G| copies of a base quiver
    int base_v = 1 + static_cast<int>(rng() % std::max(1, 6 / m));
    int base_a = static_cast<int>(rng() % (8 / m + 1));
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::vector<std::pair<int, int>> base_ends;
    for (int a = 0; a < base_a; ++a)
      base_ends.push_back({static_cast<int>(rng() % base_v),
                           static_cast<int>(rng() % base_v)});
    for (int g = 0; g < m; ++g)
      for (int v = 0; v < base_v; ++v)
        vertices.push_back("v" + std::to_string(g) + "_" + std::to_string(v));
    for (int g = 0; g < m; ++g)
      for (int a = 0; a < base_a; ++a)
        arrows.push_back(
            {"a" + std::to_string(g) + "_" + std::to_string(a),
             vertices[g * base_v + base_ends[a].first],
             vertices[g * base_v + base_ends[a].second]});
    GlobalQuiverAction b;
    b.group = group;
    b.quiver = Quiver(std::move(vertices), std::move(arrows));
    b.vertex_action.resize(m);
    b.arrow_action.resize(m);
    for (int h = 0; h < m; ++h) {
      b.vertex_action[h].resize(b.quiver.n_vertices());
      b.arrow_action[h].resize(b.quiver.n_arrows());
      for (int g = 0; g < m; ++g) {
        for (int v = 0; v < base_v; ++v)
          b.vertex_action[h][g * base_v + v] =
              group.mul(h, g) * base_v + v;
        for (int a = 0; a < base_a; ++a)
          b.arrow_action[h][g * base_a + a] = group.mul(h, g) * base_a + a;
      }
    }
    return b;
  }

  // cyclic rotation on a directed d-cycle for some divisor d of |G|,
  // optionally with a fixed hub feeding every cycle vertex
  std::vector<int> divisors;
  for (int d = 1; d <= m; ++d)
    if (m % d == 0) divisors.push_back(d);
  int d = divisors[rng() % divisors.size()];
  bool hub = strategy == 3 && d + 1 <= 6 && 2 * d <= 8 && d >= 1;

  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  for (int i = 0; i < d; ++i) vertices.push_back("c" + std::to_string(i));
  for (int i = 0; i < d; ++i)
    arrows.push_back({"r" + std::to_string(i), vertices[i],
                      vertices[(i + 1) % d]});
  if (hub) {
    vertices.push_back("hub");
    for (int i = 0; i < d; ++i)
      arrows.push_back({"h" + std::to_string(i), "hub", "c" + std::to_string(i)});
  }
  GlobalQuiverAction b;
  b.group = group;
  b.quiver = Quiver(std::move(vertices), std::move(arrows));
  b.vertex_action.resize(m);
  b.arrow_action.resize(m);
  int nv = b.quiver.n_vertices(), na = b.quiver.n_arrows();
  for (int g = 0; g < m; ++g) {
    b.vertex_action[g].resize(nv);
    b.arrow_action[g].resize(na);
    int shift = g % d;
    for (int i = 0; i < d; ++i) {
      b.vertex_action[g][i] = (i + shift) % d;
      b.arrow_action[g][i] = (i + shift) % d;
    }
    if (hub) {
      b.vertex_action[g][d] = d;
      for (int i = 0; i < d; ++i)
        b.arrow_action[g][d + i] = d + (i + shift) % d;
    }
  }
  return b;
}

inline Subquiver random_closed_subquiver(std::mt19937_64& rng,
                                         const Quiver& q) {
  Subquiver s;
  s.parent = q;
  std::vector<bool> chosen(q.n_vertices(), false);
  for (int v = 0; v < q.n_vertices(); ++v)
    if (rng() % 10 < 6) {
      chosen[v] = true;
      s.vertices.push_back(v);
    }
  for (int a = 0; a < q.n_arrows(); ++a)
    if (chosen[q.source_of(a)] && chosen[q.target_of(a)] && rng() % 10 < 6)
      s.arrows.push_back(a);
  return s;
}

struct RandomInstance {
  GlobalQuiverAction global;
  Subquiver sub;
  QuiverPartialAction partial;
};

inline RandomInstance random_instance(std::mt19937_64& rng) {
  RandomInstance inst;
  inst.global = random_global_action(rng);
  inst.sub = random_closed_subquiver(rng, inst.global.quiver);
  inst.partial = restrict_global_action(inst.global, inst.sub);
  return inst;
}

// The sub-action of the global action on the orbit of the chosen subquiver,
// packaged as an enveloping action of the restriction.
inline EnvelopingQuiverAction orbit_envelope(const RandomInstance& inst) {
  Subquiver orbit = inst.sub;
  for (int g = 0; g < inst.global.group.size(); ++g) {
    Subquiver translated;
    translated.parent = inst.global.quiver;
    for (int v : inst.sub.vertices)
      translated.vertices.push_back(inst.global.vertex_action[g][v]);
    for (int x : inst.sub.arrows)
      translated.arrows.push_back(inst.global.arrow_action[g][x]);
    std::sort(translated.vertices.begin(), translated.vertices.end());
    std::sort(translated.arrows.begin(), translated.arrows.end());
    orbit = unite(orbit, translated);
  }

  Quiver orbit_quiver = orbit.to_quiver();
  GlobalQuiverAction orbit_action;
  orbit_action.group = inst.global.group;
  orbit_action.quiver = orbit_quiver;
  orbit_action.vertex_action.resize(inst.global.group.size());
  orbit_action.arrow_action.resize(inst.global.group.size());
  for (int g = 0; g < inst.global.group.size(); ++g) {
    for (int v : orbit.vertices)
      orbit_action.vertex_action[g].push_back(orbit_quiver.vertex_index(
          inst.global.quiver.vertex_name(inst.global.vertex_action[g][v])));
    for (int x : orbit.arrows)
      orbit_action.arrow_action[g].push_back(orbit_quiver.arrow_index(
          inst.global.quiver.arrow(inst.global.arrow_action[g][x]).id));
  }

  std::vector<int> vm, am;
  for (int v : inst.sub.vertices)
    vm.push_back(orbit_quiver.vertex_index(inst.global.quiver.vertex_name(v)));
  for (int x : inst.sub.arrows)
    am.push_back(orbit_quiver.arrow_index(inst.global.quiver.arrow(x).id));
  return EnvelopingQuiverAction(
      orbit_action,
      QuiverMorphism::make(inst.partial.quiver, orbit_quiver, vm, am),
      inst.partial);
}

// ---- oracles ----------------------------------------------------------------

// Brute-force globalization oracle: the reflexive-symmetric-transitive
// closure of the declared relation on group x carrier, straight from the
// definition, with Warshall's algorithm.
inline std::set<std::set<std::pair<int, int>>> closure_oracle(
    const SetPartialAction& a) {
  const int m = a.group.size();
  const int n = static_cast<int>(a.carrier.size());
  const int total = m * n;
  std::vector<std::vector<bool>> rel(total, std::vector<bool>(total, false));
  auto in_domain = [&](int g, int x) {
    return std::binary_search(a.domains[g].begin(), a.domains[g].end(), x);
  };
  for (int g = 0; g < m; ++g)
    for (int x = 0; x < n; ++x)
      for (int h = 0; h < m; ++h)
        for (int y = 0; y < n; ++y) {
          int gh = a.group.mul(a.group.inv(g), h);
          if (!in_domain(gh, x)) continue;
          int hg = a.group.mul(a.group.inv(h), g);
          auto it = a.maps[hg].find(x);
          if (it != a.maps[hg].end() && it->second == y)
            rel[g * n + x][h * n + y] = true;
        }
  for (int p = 0; p < total; ++p) rel[p][p] = true;
  for (int p = 0; p < total; ++p)
    for (int q = 0; q < total; ++q)
      if (rel[p][q]) rel[q][p] = true;
  for (int k = 0; k < total; ++k)
    for (int p = 0; p < total; ++p)
      if (rel[p][k])
        for (int q = 0; q < total; ++q)
          if (rel[k][q]) rel[p][q] = true;

  std::set<std::set<std::pair<int, int>>> classes;
  std::vector<bool> seen(total, false);
  for (int p = 0; p < total; ++p) {
    if (seen[p]) continue;
    std::set<std::pair<int, int>> cls;
    for (int q = 0; q < total; ++q)
      if (rel[p][q]) {
        seen[q] = true;
        cls.insert({q / n, q % n});
      }
    classes.insert(std::move(cls));
  }
  return classes;
}

inline std::set<std::set<std::pair<int, int>>> classes_as_sets(
    const SetGlobalization& g) {
  std::set<std::set<std::pair<int, int>>> out;
  for (const auto& cls : g.classes)
    out.insert(std::set<std::pair<int, int>>(cls.begin(), cls.end()));
  return out;
}

// ---- mutation machinery for checker-soundness tests -------------------------

// Applies one random structural perturbation to a quiver partial action.
// Returns false when the chosen mutation does not apply to this instance.
inline bool mutate_quiver_action(QuiverPartialAction& a, std::mt19937_64& rng) {
  const int m = a.group.size();
  int g = static_cast<int>(rng() % m);
  switch (rng() % 6) {
    case 0: {
      if (a.vertex_maps[g].size() < 2) return false;
      auto i1 = a.vertex_maps[g].begin();
      std::advance(i1, rng() % a.vertex_maps[g].size());
      auto i2 = a.vertex_maps[g].begin();
      std::advance(i2, rng() % a.vertex_maps[g].size());
      if (i1->second == i2->second) return false;
      std::swap(i1->second, i2->second);
      return true;
    }
    case 1: {
      if (a.arrow_maps[g].size() < 2) return false;
      auto i1 = a.arrow_maps[g].begin();
      std::advance(i1, rng() % a.arrow_maps[g].size());
      auto i2 = a.arrow_maps[g].begin();
      std::advance(i2, rng() % a.arrow_maps[g].size());
      if (i1->second == i2->second) return false;
      std::swap(i1->second, i2->second);
      return true;
    }
    case 2: {
      if (g == a.group.identity() || a.domains[g].vertices.empty()) return false;
      auto& vs = a.domains[g].vertices;
      vs.erase(vs.begin() + rng() % vs.size());
      return true;
    }
    case 3: {
      if (g == a.group.identity() || a.domains[g].arrows.empty()) return false;
      auto& as = a.domains[g].arrows;
      as.erase(as.begin() + rng() % as.size());
      return true;
    }
    case 4: {
      if (g == a.group.identity()) return false;
      std::vector<int> missing;
      for (int v = 0; v < a.quiver.n_vertices(); ++v)
        if (!a.domains[g].contains_vertex(v)) missing.push_back(v);
      if (missing.empty()) return false;
      auto& vs = a.domains[g].vertices;
      vs.push_back(missing[rng() % missing.size()]);
      std::sort(vs.begin(), vs.end());
      return true;
    }
    default: {
      if (a.vertex_maps[g].empty() || a.quiver.n_vertices() < 2) return false;
      auto it = a.vertex_maps[g].begin();
      std::advance(it, rng() % a.vertex_maps[g].size());
      int replacement = static_cast<int>(rng() % a.quiver.n_vertices());
      if (replacement == it->second) return false;
      it->second = replacement;
      return true;
    }
  }
}

// Applies one random structural perturbation (a domain element dropped or
// added, or a map entry redirected or swapped). Returns false when the
// chosen mutation does not apply to this instance.
inline bool mutate_once(AlgebraPartialAction& a, std::mt19937_64& rng) {
  const int m = a.group.size();
  int g = static_cast<int>(rng() % m);
  switch (rng() % 6) {
    case 0: {  // swap two vertex images
      if (a.vertex_maps[g].size() < 2) return false;
      auto it1 = a.vertex_maps[g].begin();
      std::advance(it1, rng() % a.vertex_maps[g].size());
      auto it2 = a.vertex_maps[g].begin();
      std::advance(it2, rng() % a.vertex_maps[g].size());
      if (it1->second == it2->second) return false;
      std::swap(it1->second, it2->second);
      return true;
    }
    case 1: {  // swap two arrow images
      if (a.arrow_maps[g].size() < 2) return false;
      auto it1 = a.arrow_maps[g].begin();
      std::advance(it1, rng() % a.arrow_maps[g].size());
      auto it2 = a.arrow_maps[g].begin();
      std::advance(it2, rng() % a.arrow_maps[g].size());
      if (it1->second == it2->second) return false;
      std::swap(it1->second, it2->second);
      return true;
    }
    case 2: {  // drop a domain vertex
      if (g == a.group.identity() || a.domains[g].vertices.empty()) return false;
      auto& vs = a.domains[g].vertices;
      vs.erase(vs.begin() + rng() % vs.size());
      return true;
    }
    case 3: {  // drop a domain arrow
      if (g == a.group.identity() || a.domains[g].arrows.empty()) return false;
      auto& as = a.domains[g].arrows;
      as.erase(as.begin() + rng() % as.size());
      return true;
    }
    case 4: {  // add a vertex to a domain
      if (g == a.group.identity()) return false;
      std::vector<int> missing;
      for (int v = 0; v < a.quiver->n_vertices(); ++v)
        if (!a.domains[g].contains_vertex(v)) missing.push_back(v);
      if (missing.empty()) return false;
      auto& vs = a.domains[g].vertices;
      vs.push_back(missing[rng() % missing.size()]);
      std::sort(vs.begin(), vs.end());
      return true;
    }
    default: {  // redirect one vertex image
      if (a.vertex_maps[g].empty() || a.quiver->n_vertices() < 2) return false;
      auto it = a.vertex_maps[g].begin();
      std::advance(it, rng() % a.vertex_maps[g].size());
      int replacement = static_cast<int>(rng() % a.quiver->n_vertices());
      if (replacement == it->second) return false;
      it->second = replacement;
      return true;
    }
  }
}

}  // namespace testsupport
