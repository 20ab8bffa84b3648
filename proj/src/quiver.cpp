#include "quiverpa/quiver.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace qpa {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  for (int i = 0; i < n_vertices(); ++i)
    vertex_index_.emplace(vertices_[i], i);  // first wins on duplicates
  for (int i = 0; i < n_arrows(); ++i) arrow_index_.emplace(arrows_[i].id, i);
  sources_.resize(arrows_.size());
  targets_.resize(arrows_.size());
  for (int i = 0; i < n_arrows(); ++i) {
    sources_[i] = vertex_index(arrows_[i].source);
    targets_[i] = vertex_index(arrows_[i].target);
  }
}

int Quiver::vertex_index(const std::string& name) const {
  auto it = vertex_index_.find(name);
  return it == vertex_index_.end() ? -1 : it->second;
}

int Quiver::arrow_index(const std::string& name) const {
  auto it = arrow_index_.find(name);
  return it == arrow_index_.end() ? -1 : it->second;
}

ValidationReport Quiver::validate() const {
  ValidationReport report;
  std::set<std::string> seen;
  for (const auto& v : vertices_)
    if (!seen.insert(v).second)
      report.add("identifiers", "duplicate vertex '" + v + "'");
  seen.clear();
  for (const auto& a : arrows_)
    if (!seen.insert(a.id).second)
      report.add("identifiers", "duplicate arrow '" + a.id + "'");
  for (int i = 0; i < n_arrows(); ++i) {
    if (sources_[i] < 0)
      report.add("dangling", "arrow '" + arrows_[i].id + "' has unknown source '" +
                                 arrows_[i].source + "'");
    if (targets_[i] < 0)
      report.add("dangling", "arrow '" + arrows_[i].id + "' has unknown target '" +
                                 arrows_[i].target + "'");
  }
  return report;
}

Subquiver Subquiver::of(const Quiver& parent,
                        const std::vector<std::string>& vertex_names,
                        const std::vector<std::string>& arrow_names) {
  Subquiver s;
  s.parent = parent;
  for (const auto& v : vertex_names) {
    int i = parent.vertex_index(v);
    if (i < 0)
      throw std::invalid_argument("subquiver vertex '" + v +
                                  "' is not in the parent quiver");
    s.vertices.push_back(i);
  }
  for (const auto& a : arrow_names) {
    int i = parent.arrow_index(a);
    if (i < 0)
      throw std::invalid_argument("subquiver arrow '" + a +
                                  "' is not in the parent quiver");
    s.arrows.push_back(i);
  }
  std::sort(s.vertices.begin(), s.vertices.end());
  s.vertices.erase(std::unique(s.vertices.begin(), s.vertices.end()),
                   s.vertices.end());
  std::sort(s.arrows.begin(), s.arrows.end());
  s.arrows.erase(std::unique(s.arrows.begin(), s.arrows.end()), s.arrows.end());
  return s;
}

Subquiver Subquiver::full(const Quiver& parent) {
  Subquiver s;
  s.parent = parent;
  s.vertices.resize(parent.n_vertices());
  s.arrows.resize(parent.n_arrows());
  for (int i = 0; i < parent.n_vertices(); ++i) s.vertices[i] = i;
  for (int i = 0; i < parent.n_arrows(); ++i) s.arrows[i] = i;
  return s;
}

bool Subquiver::contains_vertex(int v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool Subquiver::contains_arrow(int a) const {
  return std::binary_search(arrows.begin(), arrows.end(), a);
}

Quiver Subquiver::to_quiver() const {
  std::vector<std::string> vs;
  std::vector<Arrow> as;
  for (int v : vertices) vs.push_back(parent.vertex_name(v));
  for (int a : arrows) as.push_back(parent.arrow(a));
  return Quiver(std::move(vs), std::move(as));
}

ValidationReport Subquiver::validate() const {
  ValidationReport report;
  for (int a : arrows) {
    if (a < 0 || a >= parent.n_arrows()) {
      report.add("range", "arrow index " + std::to_string(a) + " out of range");
      continue;
    }
    int s = parent.source_of(a), t = parent.target_of(a);
    if (s < 0 || !contains_vertex(s))
      report.add("closure", "arrow '" + parent.arrow(a).id +
                                "' included but its source '" +
                                parent.arrow(a).source + "' is not");
    if (t < 0 || !contains_vertex(t))
      report.add("closure", "arrow '" + parent.arrow(a).id +
                                "' included but its target '" +
                                parent.arrow(a).target + "' is not");
  }
  for (int v : vertices)
    if (v < 0 || v >= parent.n_vertices())
      report.add("range", "vertex index " + std::to_string(v) + " out of range");
  return report;
}

Subquiver intersect(const Subquiver& a, const Subquiver& b) {
  Subquiver r;
  r.parent = a.parent;
  std::set_intersection(a.vertices.begin(), a.vertices.end(),
                        b.vertices.begin(), b.vertices.end(),
                        std::back_inserter(r.vertices));
  std::set_intersection(a.arrows.begin(), a.arrows.end(), b.arrows.begin(),
                        b.arrows.end(), std::back_inserter(r.arrows));
  return r;
}

Subquiver unite(const Subquiver& a, const Subquiver& b) {
  Subquiver r;
  r.parent = a.parent;
  std::set_union(a.vertices.begin(), a.vertices.end(), b.vertices.begin(),
                 b.vertices.end(), std::back_inserter(r.vertices));
  std::set_union(a.arrows.begin(), a.arrows.end(), b.arrows.begin(),
                 b.arrows.end(), std::back_inserter(r.arrows));
  return r;
}

QuiverMorphism QuiverMorphism::make(Quiver source, Quiver target,
                                    std::vector<int> vertex_map,
                                    std::vector<int> arrow_map) {
  if (static_cast<int>(vertex_map.size()) != source.n_vertices() ||
      static_cast<int>(arrow_map.size()) != source.n_arrows())
    throw std::invalid_argument("morphism maps must be total on the source");
  for (int v : vertex_map)
    if (v < 0 || v >= target.n_vertices())
      throw std::invalid_argument("morphism vertex image out of range");
  for (int a = 0; a < source.n_arrows(); ++a) {
    int ia = arrow_map[a];
    if (ia < 0 || ia >= target.n_arrows())
      throw std::invalid_argument("morphism arrow image out of range");
    if (vertex_map[source.source_of(a)] != target.source_of(ia) ||
        vertex_map[source.target_of(a)] != target.target_of(ia))
      throw std::invalid_argument(
          "morphism does not commute with source/target at arrow '" +
          source.arrow(a).id + "'");
  }
  QuiverMorphism m;
  m.source_ = std::move(source);
  m.target_ = std::move(target);
  m.vertex_map_ = std::move(vertex_map);
  m.arrow_map_ = std::move(arrow_map);
  return m;
}

QuiverMorphism QuiverMorphism::identity(const Quiver& q) {
  std::vector<int> vm(q.n_vertices()), am(q.n_arrows());
  for (int i = 0; i < q.n_vertices(); ++i) vm[i] = i;
  for (int i = 0; i < q.n_arrows(); ++i) am[i] = i;
  return make(q, q, std::move(vm), std::move(am));
}

namespace {

bool is_bijection(const std::vector<int>& map, int codomain_size) {
  if (static_cast<int>(map.size()) != codomain_size) return false;
  std::vector<bool> hit(codomain_size, false);
  for (int v : map) {
    if (v < 0 || v >= codomain_size || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

}  // namespace

bool QuiverMorphism::is_isomorphism() const {
  return is_bijection(vertex_map_, target_.n_vertices()) &&
         is_bijection(arrow_map_, target_.n_arrows());
}

QuiverMorphism compose(const QuiverMorphism& f, const QuiverMorphism& g) {
  if (!(g.target() == f.source()))
    throw std::invalid_argument(
        "cannot compose: inner morphism's target differs from outer's source");
  std::vector<int> vm(g.source().n_vertices()), am(g.source().n_arrows());
  for (int v = 0; v < g.source().n_vertices(); ++v)
    vm[v] = f.apply_vertex(g.apply_vertex(v));
  for (int a = 0; a < g.source().n_arrows(); ++a)
    am[a] = f.apply_arrow(g.apply_arrow(a));
  return QuiverMorphism::make(g.source(), f.target(), std::move(vm),
                              std::move(am));
}

QuiverMorphism invert(const QuiverMorphism& f) {
  if (!f.is_isomorphism())
    throw std::invalid_argument("cannot invert a non-bijective morphism");
  std::vector<int> vm(f.target().n_vertices()), am(f.target().n_arrows());
  for (int v = 0; v < f.source().n_vertices(); ++v) vm[f.apply_vertex(v)] = v;
  for (int a = 0; a < f.source().n_arrows(); ++a) am[f.apply_arrow(a)] = a;
  return QuiverMorphism::make(f.target(), f.source(), std::move(vm),
                              std::move(am));
}

namespace {

struct AutSearch {
  const Quiver& q;
  std::size_t cap;
  int n;
  std::vector<std::vector<int>> arc_count;      // arc_count[u][v]
  std::vector<std::array<int, 3>> signature;    // out, in, loops
  std::vector<int> vmap;                        // partial vertex map
  std::vector<bool> used;
  std::vector<QuiverMorphism> out;

  explicit AutSearch(const Quiver& quiver, std::size_t cap_limit)
      : q(quiver), cap(cap_limit), n(quiver.n_vertices()) {
    arc_count.assign(n, std::vector<int>(n, 0));
    for (int a = 0; a < q.n_arrows(); ++a)
      ++arc_count[q.source_of(a)][q.target_of(a)];
    signature.resize(n);
    for (int v = 0; v < n; ++v) {
      int outd = 0, ind = 0;
      for (int u = 0; u < n; ++u) {
        outd += arc_count[v][u];
        ind += arc_count[u][v];
      }
      signature[v] = {outd, ind, arc_count[v][v]};
    }
    vmap.assign(n, -1);
    used.assign(n, false);
  }

  void run() {
    place(0);
  }

  void place(int v) {
    if (v == n) {
      emit_arrow_maps();
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || signature[v] != signature[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        ok = arc_count[u][v] == arc_count[vmap[u]][w] &&
             arc_count[v][u] == arc_count[w][vmap[u]];
      if (!ok || arc_count[v][v] != arc_count[w][w]) continue;
      vmap[v] = w;
      used[w] = true;
      place(v + 1);
      used[w] = false;
      vmap[v] = -1;
    }
  }

  // For a complete vertex bijection, enumerate every consistent arrow
  // bijection: within each (source,target) pair the parallel arrows may be
  // permuted arbitrarily.
  void emit_arrow_maps() {
    std::map<std::pair<int, int>, std::vector<int>> by_pair;
    for (int a = 0; a < q.n_arrows(); ++a)
      by_pair[{q.source_of(a), q.target_of(a)}].push_back(a);

    std::vector<std::pair<std::vector<int>, std::vector<int>>> blocks;
    for (auto& [pair, as] : by_pair) {
      auto it = by_pair.find({vmap[pair.first], vmap[pair.second]});
      if (it == by_pair.end() || it->second.size() != as.size()) return;
      blocks.emplace_back(as, it->second);
    }

    std::vector<int> amap(q.n_arrows(), -1);
    emit_block(blocks, 0, amap);
  }

  void emit_block(
      std::vector<std::pair<std::vector<int>, std::vector<int>>>& blocks,
      std::size_t i, std::vector<int>& amap) {
    if (i == blocks.size()) {
      if (out.size() >= cap)
        throw std::runtime_error("automorphism enumeration exceeded cap of " +
                                 std::to_string(cap));
      out.push_back(QuiverMorphism::make(q, q, vmap, amap));
      return;
    }
    auto& [from, to] = blocks[i];
    std::vector<int> perm = to;  // already sorted ascending
    do {
      for (std::size_t k = 0; k < from.size(); ++k) amap[from[k]] = perm[k];
      emit_block(blocks, i + 1, amap);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
};

}  // namespace

std::vector<QuiverMorphism> automorphisms(const Quiver& q, std::size_t cap) {
  auto report = q.validate();
  if (!report.valid())
    throw std::invalid_argument("automorphisms of an invalid quiver:\n" +
                                report.to_string());
  AutSearch search(q, cap);
  search.run();
  return search.out;
}

QuiverMorphism restrict_morphism(const QuiverMorphism& f, const Subquiver& s) {
  if (!(s.parent == f.source()))
    throw std::invalid_argument("subquiver does not live in the morphism's source");
  auto closure = s.validate();
  if (!closure.valid())
    throw std::invalid_argument("cannot restrict to a non-closed subquiver:\n" +
                                closure.to_string());

  Subquiver image;
  image.parent = f.target();
  for (int v : s.vertices) image.vertices.push_back(f.apply_vertex(v));
  for (int a : s.arrows) image.arrows.push_back(f.apply_arrow(a));
  std::sort(image.vertices.begin(), image.vertices.end());
  image.vertices.erase(
      std::unique(image.vertices.begin(), image.vertices.end()),
      image.vertices.end());
  std::sort(image.arrows.begin(), image.arrows.end());
  image.arrows.erase(std::unique(image.arrows.begin(), image.arrows.end()),
                     image.arrows.end());
  auto image_closure = image.validate();
  if (!image_closure.valid())
    throw std::invalid_argument("image of restriction violates closure:\n" +
                                image_closure.to_string());

  Quiver src = s.to_quiver();
  Quiver dst = image.to_quiver();
  std::vector<int> vm, am;
  for (int v : s.vertices)
    vm.push_back(dst.vertex_index(f.target().vertex_name(f.apply_vertex(v))));
  for (int a : s.arrows)
    am.push_back(dst.arrow_index(f.target().arrow(f.apply_arrow(a)).id));
  return QuiverMorphism::make(std::move(src), std::move(dst), std::move(vm),
                              std::move(am));
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string export_dot(const Quiver& q,
                       const std::optional<Subquiver>& highlight) {
  std::string out = "digraph quiver {\n";
  for (int v = 0; v < q.n_vertices(); ++v) {
    out += "  " + dot_quote(q.vertex_name(v));
    if (highlight && highlight->contains_vertex(v))
      out += " [style=filled, fillcolor=lightblue]";
    out += ";\n";
  }
  for (int a = 0; a < q.n_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    out += "  " + dot_quote(ar.source) + " -> " + dot_quote(ar.target) +
           " [label=" + dot_quote(ar.id);
    if (highlight && highlight->contains_arrow(a))
      out += ", color=blue, penwidth=2";
    out += "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace qpa
