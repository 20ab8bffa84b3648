#include "quiverpa/quiver_paction.hpp"

#include <algorithm>
#include <set>

namespace qpa {

namespace {

std::vector<std::string> arrow_ids(const Quiver& q) {
  std::vector<std::string> ids;
  ids.reserve(q.n_arrows());
  for (const auto& a : q.arrows()) ids.push_back(a.id);
  return ids;
}

}  // namespace

ValidationReport GlobalQuiverAction::validate() const {
  ValidationReport report;
  report.merge(quiver.validate(), "quiver ");
  if (!report.valid()) return report;
  report.merge(vertex_set_action().validate(), "vertices ");
  report.merge(arrow_set_action().validate(), "arrows ");
  if (!report.valid()) return report;
  // each beta_g must commute with source/target
  for (int g = 0; g < group.size(); ++g)
    for (int a = 0; a < quiver.n_arrows(); ++a) {
      int ia = arrow_action[g][a];
      if (vertex_action[g][quiver.source_of(a)] != quiver.source_of(ia) ||
          vertex_action[g][quiver.target_of(a)] != quiver.target_of(ia))
        report.add("automorphism",
                   "beta_" + group.name(g) +
                       " does not commute with source/target at arrow '" +
                       quiver.arrow(a).id + "'");
    }
  return report;
}

QuiverMorphism GlobalQuiverAction::beta(int g) const {
  return QuiverMorphism::make(quiver, quiver, vertex_action[g],
                              arrow_action[g]);
}

GlobalSetAction GlobalQuiverAction::vertex_set_action() const {
  return GlobalSetAction{group, quiver.vertices(), vertex_action};
}

GlobalSetAction GlobalQuiverAction::arrow_set_action() const {
  return GlobalSetAction{group, arrow_ids(quiver), arrow_action};
}

SetPartialAction QuiverPartialAction::vertex_set_action() const {
  SetPartialAction s;
  s.group = group;
  s.carrier = quiver.vertices();
  for (const auto& d : domains) s.domains.push_back(d.vertices);
  s.maps = vertex_maps;
  return s;
}

SetPartialAction QuiverPartialAction::arrow_set_action() const {
  SetPartialAction s;
  s.group = group;
  s.carrier = arrow_ids(quiver);
  for (const auto& d : domains) s.domains.push_back(d.arrows);
  s.maps = arrow_maps;
  return s;
}

ValidationReport check_quiver_partial_action(const QuiverPartialAction& a) {
  ValidationReport report;
  report.merge(a.group.validate(), "group ");
  report.merge(a.quiver.validate(), "quiver ");
  if (!report.valid()) return report;

  const int m = a.group.size();
  if (static_cast<int>(a.domains.size()) != m ||
      static_cast<int>(a.vertex_maps.size()) != m ||
      static_cast<int>(a.arrow_maps.size()) != m) {
    report.add("shape", "need one domain and one map pair per group element");
    return report;
  }
  for (int g = 0; g < m; ++g)
    if (!(a.domains[g].parent == a.quiver)) {
      report.add("shape", "domain of " + a.group.name(g) +
                              " is a subquiver of a different quiver");
      return report;
    }

  const int e = a.group.identity();

  // (i) full domain and identity maps at e
  if (static_cast<int>(a.domains[e].vertices.size()) != a.quiver.n_vertices() ||
      static_cast<int>(a.domains[e].arrows.size()) != a.quiver.n_arrows())
    report.add("(i)", "the domain of e is not the whole quiver");
  for (const auto& [x, y] : a.vertex_maps[e])
    if (x != y)
      report.add("(i)", "alpha_e moves vertex '" + a.quiver.vertex_name(x) + "'");
  for (const auto& [x, y] : a.arrow_maps[e])
    if (x != y)
      report.add("(i)", "alpha_e moves arrow '" + a.quiver.arrow(x).id + "'");

  // (ii)/(iii) the vertex and arrow components are partial set actions
  report.merge(check_partial_set_action(a.vertex_set_action()), "(ii) vertex ");
  report.merge(check_partial_set_action(a.arrow_set_action()), "(iii) arrow ");

  // (iv) closure of every domain subquiver
  for (int g = 0; g < m; ++g)
    report.merge(a.domains[g].validate(),
                 "(iv) domain of " + a.group.name(g) + " ");

  // (morphism) alpha_g commutes with source and target where defined
  for (int g = 0; g < m; ++g) {
    for (const auto& [x, y] : a.arrow_maps[g]) {
      if (x < 0 || x >= a.quiver.n_arrows() || y < 0 || y >= a.quiver.n_arrows())
        continue;
      auto check_end = [&](int end_x, int end_y, const char* which) {
        auto it = a.vertex_maps[g].find(end_x);
        if (it == a.vertex_maps[g].end())
          report.add("(morphism)",
                     "alpha_" + a.group.name(g) + " maps arrow '" +
                         a.quiver.arrow(x).id + "' but not its " + which);
        else if (it->second != end_y)
          report.add("(morphism)",
                     "alpha_" + a.group.name(g) + " does not commute with " +
                         which + " at arrow '" + a.quiver.arrow(x).id + "'");
      };
      check_end(a.quiver.source_of(x), a.quiver.source_of(y), "source");
      check_end(a.quiver.target_of(x), a.quiver.target_of(y), "target");
    }
  }
  return report;
}

QuiverPartialAction restrict_global_action(const GlobalQuiverAction& b,
                                           const Subquiver& s) {
  if (!(s.parent == b.quiver))
    throw std::invalid_argument("subquiver does not live in the action's quiver");
  auto closure = s.validate();
  if (!closure.valid())
    throw std::invalid_argument("cannot restrict to an invalid subquiver:\n" +
                                closure.to_string());

  QuiverPartialAction r;
  r.group = b.group;
  r.quiver = s.to_quiver();

  std::vector<int> vpos(b.quiver.n_vertices(), -1);
  std::vector<int> apos(b.quiver.n_arrows(), -1);
  for (std::size_t i = 0; i < s.vertices.size(); ++i) vpos[s.vertices[i]] = i;
  for (std::size_t i = 0; i < s.arrows.size(); ++i) apos[s.arrows[i]] = i;

  const int m = b.group.size();
  r.domains.resize(m);
  r.vertex_maps.resize(m);
  r.arrow_maps.resize(m);
  for (int g = 0; g < m; ++g) {
    Subquiver dom;
    dom.parent = r.quiver;
    for (int x : s.vertices) {
      int y = b.vertex_action[g][x];
      if (vpos[y] >= 0) {
        dom.vertices.push_back(vpos[y]);
        r.vertex_maps[g].emplace(vpos[x], vpos[y]);
      }
    }
    for (int x : s.arrows) {
      int y = b.arrow_action[g][x];
      if (apos[y] >= 0) {
        dom.arrows.push_back(apos[y]);
        r.arrow_maps[g].emplace(apos[x], apos[y]);
      }
    }
    std::sort(dom.vertices.begin(), dom.vertices.end());
    std::sort(dom.arrows.begin(), dom.arrows.end());
    r.domains[g] = std::move(dom);
  }
  return r;
}

EnvelopingQuiverAction envelope_quiver_action(const QuiverPartialAction& a,
                                              const GlobalizeOptions& opts) {
  auto check = check_quiver_partial_action(a);
  if (!check.valid())
    throw std::invalid_argument("cannot envelope an invalid partial action:\n" +
                                check.to_string());

  SetGlobalization vg = globalize_set_action(a.vertex_set_action(), opts);
  SetGlobalization ag = globalize_set_action(a.arrow_set_action(), opts);

  const int m = a.group.size();
  const int nv = a.quiver.n_vertices();

  // class lookup for (g, vertex) pairs
  std::vector<int> vclass(static_cast<std::size_t>(m) * std::max(nv, 1), -1);
  for (std::size_t c = 0; c < vg.classes.size(); ++c)
    for (const auto& [g, x] : vg.classes[c]) vclass[g * nv + x] = c;

  // Source and target of each globalized arrow, transported from every
  // representative; disagreement means the construction is broken.
  std::vector<Arrow> big_arrows;
  for (std::size_t c = 0; c < ag.classes.size(); ++c) {
    int src = -1, tgt = -1;
    for (const auto& [g, arrow] : ag.classes[c]) {
      int s_cand = vclass[g * nv + a.quiver.source_of(arrow)];
      int t_cand = vclass[g * nv + a.quiver.target_of(arrow)];
      if (src < 0) {
        src = s_cand;
        tgt = t_cand;
      } else if (src != s_cand || tgt != t_cand) {
        throw WellDefinednessError(
            "source/target of globalized arrow " + ag.global.carrier[c] +
            " differ between representatives");
      }
    }
    big_arrows.push_back(Arrow{ag.global.carrier[c], vg.global.carrier[src],
                               vg.global.carrier[tgt]});
  }

  Quiver big(vg.global.carrier, std::move(big_arrows));
  GlobalQuiverAction global{a.group, big, vg.global.action, ag.global.action};
  QuiverMorphism embedding =
      QuiverMorphism::make(a.quiver, big, vg.embedding, ag.embedding);

  EnvelopingQuiverAction result(std::move(global), std::move(embedding), a);
  auto verify = check_enveloping(result);
  if (!verify.valid())
    throw std::logic_error("enveloping construction failed its own checks:\n" +
                           verify.to_string());
  return result;
}

QuiverPartialAction restriction_along_embedding(const EnvelopingQuiverAction& e) {
  const Quiver& gamma = e.original.quiver;
  const Quiver& big = e.global.quiver;
  if (!(e.embedding.source() == gamma) || !(e.embedding.target() == big))
    throw std::invalid_argument("embedding does not connect the partial quiver "
                                "to the global one");

  std::vector<int> inv_v(big.n_vertices(), -1), inv_a(big.n_arrows(), -1);
  for (int x = 0; x < gamma.n_vertices(); ++x) {
    int y = e.embedding.apply_vertex(x);
    if (inv_v[y] >= 0)
      throw std::invalid_argument("embedding is not injective on vertices");
    inv_v[y] = x;
  }
  for (int x = 0; x < gamma.n_arrows(); ++x) {
    int y = e.embedding.apply_arrow(x);
    if (inv_a[y] >= 0)
      throw std::invalid_argument("embedding is not injective on arrows");
    inv_a[y] = x;
  }

  QuiverPartialAction r;
  r.group = e.global.group;
  r.quiver = gamma;
  const int m = r.group.size();
  r.domains.resize(m);
  r.vertex_maps.resize(m);
  r.arrow_maps.resize(m);
  for (int g = 0; g < m; ++g) {
    Subquiver dom;
    dom.parent = gamma;
    for (int x = 0; x < gamma.n_vertices(); ++x) {
      int y = e.global.vertex_action[g][e.embedding.apply_vertex(x)];
      if (inv_v[y] >= 0) {
        dom.vertices.push_back(inv_v[y]);
        r.vertex_maps[g].emplace(x, inv_v[y]);
      }
    }
    for (int x = 0; x < gamma.n_arrows(); ++x) {
      int y = e.global.arrow_action[g][e.embedding.apply_arrow(x)];
      if (inv_a[y] >= 0) {
        dom.arrows.push_back(inv_a[y]);
        r.arrow_maps[g].emplace(x, inv_a[y]);
      }
    }
    std::sort(dom.vertices.begin(), dom.vertices.end());
    std::sort(dom.arrows.begin(), dom.arrows.end());
    r.domains[g] = std::move(dom);
  }
  return r;
}

ValidationReport check_enveloping(const EnvelopingQuiverAction& e) {
  ValidationReport report;
  report.merge(e.global.validate(), "input global ");
  report.merge(check_quiver_partial_action(e.original), "input partial ");
  if (!report.valid()) return report;

  const Quiver& gamma = e.original.quiver;
  const Quiver& big = e.global.quiver;

  // (a) the embedding is an injective morphism between the right quivers
  bool embedding_ok = true;
  if (!(e.embedding.source() == gamma) || !(e.embedding.target() == big)) {
    report.add("(a)", "embedding does not map the partial action's quiver "
                      "into the global one");
    embedding_ok = false;
  } else {
    std::set<int> v_images, a_images;
    for (int x = 0; x < gamma.n_vertices(); ++x)
      if (!v_images.insert(e.embedding.apply_vertex(x)).second) {
        report.add("(a)", "embedding identifies two vertices");
        embedding_ok = false;
      }
    for (int x = 0; x < gamma.n_arrows(); ++x)
      if (!a_images.insert(e.embedding.apply_arrow(x)).second) {
        report.add("(a)", "embedding identifies two arrows");
        embedding_ok = false;
      }
  }
  if (!embedding_ok) return report;

  // (b) restriction along the embedding reproduces the partial action
  QuiverPartialAction restricted = restriction_along_embedding(e);
  const int m = e.global.group.size();
  for (int g = 0; g < m; ++g) {
    if (restricted.domains[g].vertices != e.original.domains[g].vertices)
      report.add("(b)", "restricted vertex domain of " +
                            e.global.group.name(g) +
                            " differs from the declared one");
    if (restricted.domains[g].arrows != e.original.domains[g].arrows)
      report.add("(b)", "restricted arrow domain of " + e.global.group.name(g) +
                            " differs from the declared one");
    if (restricted.vertex_maps[g] != e.original.vertex_maps[g])
      report.add("(b)", "restricted vertex map of " + e.global.group.name(g) +
                            " differs from the declared one");
    if (restricted.arrow_maps[g] != e.original.arrow_maps[g])
      report.add("(b)", "restricted arrow map of " + e.global.group.name(g) +
                            " differs from the declared one");
  }

  // (c)/(d) minimality: every vertex and arrow lies in a translate of the
  // embedded quiver
  std::vector<bool> v_covered(big.n_vertices(), false);
  std::vector<bool> a_covered(big.n_arrows(), false);
  for (int g = 0; g < m; ++g) {
    for (int x = 0; x < gamma.n_vertices(); ++x)
      v_covered[e.global.vertex_action[g][e.embedding.apply_vertex(x)]] = true;
    for (int x = 0; x < gamma.n_arrows(); ++x)
      a_covered[e.global.arrow_action[g][e.embedding.apply_arrow(x)]] = true;
  }
  for (int v = 0; v < big.n_vertices(); ++v)
    if (!v_covered[v])
      report.add("(c)", "vertex '" + big.vertex_name(v) +
                            "' lies in no translate of the embedded quiver");
  for (int a = 0; a < big.n_arrows(); ++a)
    if (!a_covered[a])
      report.add("(d)", "arrow '" + big.arrow(a).id +
                            "' lies in no translate of the embedded quiver");
  return report;
}

QuiverMorphism enveloping_isomorphism(const EnvelopingQuiverAction& e1,
                                      const EnvelopingQuiverAction& e2) {
  if (!(e1.original == e2.original))
    throw std::invalid_argument(
        "the two actions do not envelope the same partial action");
  for (const auto* e : {&e1, &e2}) {
    auto check = check_enveloping(*e);
    if (!check.valid())
      throw std::invalid_argument("input is not an enveloping action:\n" +
                                  check.to_string());
  }

  const Quiver& gamma = e1.original.quiver;
  const int m = e1.global.group.size();

  auto build_map = [&](int n_from, int n_to, int n_gamma,
                       auto&& translate1, auto&& translate2,
                       const char* what) {
    std::vector<int> map(n_from, -1);
    for (int g = 0; g < m; ++g)
      for (int x = 0; x < n_gamma; ++x) {
        int from = translate1(g, x);
        int to = translate2(g, x);
        if (map[from] >= 0 && map[from] != to)
          throw std::runtime_error(
              std::string("canonical isomorphism is not well defined on ") +
              what);
        map[from] = to;
      }
    std::vector<bool> hit(n_to, false);
    for (int v : map) {
      if (v < 0)
        throw std::runtime_error(
            std::string("canonical isomorphism leaves a ") + what +
            " unassigned");
      if (hit[v])
        throw std::runtime_error(
            std::string("canonical isomorphism is not injective on ") + what);
      hit[v] = true;
    }
    if (n_from != n_to)
      throw std::runtime_error(
          std::string("canonical isomorphism is not surjective on ") + what);
    return map;
  };

  auto vmap = build_map(
      e1.global.quiver.n_vertices(), e2.global.quiver.n_vertices(),
      gamma.n_vertices(),
      [&](int g, int x) {
        return e1.global.vertex_action[g][e1.embedding.apply_vertex(x)];
      },
      [&](int g, int x) {
        return e2.global.vertex_action[g][e2.embedding.apply_vertex(x)];
      },
      "vertices");
  auto amap = build_map(
      e1.global.quiver.n_arrows(), e2.global.quiver.n_arrows(),
      gamma.n_arrows(),
      [&](int g, int x) {
        return e1.global.arrow_action[g][e1.embedding.apply_arrow(x)];
      },
      [&](int g, int x) {
        return e2.global.arrow_action[g][e2.embedding.apply_arrow(x)];
      },
      "arrows");

  QuiverMorphism phi = QuiverMorphism::make(e1.global.quiver, e2.global.quiver,
                                            std::move(vmap), std::move(amap));

  // equivariance: phi ∘ beta_g = beta'_g ∘ phi
  for (int g = 0; g < m; ++g) {
    for (int v = 0; v < e1.global.quiver.n_vertices(); ++v)
      if (phi.apply_vertex(e1.global.vertex_action[g][v]) !=
          e2.global.vertex_action[g][phi.apply_vertex(v)])
        throw std::runtime_error("canonical isomorphism is not equivariant");
    for (int a = 0; a < e1.global.quiver.n_arrows(); ++a)
      if (phi.apply_arrow(e1.global.arrow_action[g][a]) !=
          e2.global.arrow_action[g][phi.apply_arrow(a)])
        throw std::runtime_error("canonical isomorphism is not equivariant");
  }
  return phi;
}

}  // namespace qpa
