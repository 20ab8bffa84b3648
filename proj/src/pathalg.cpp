#include "quiverpa/pathalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qpa {

namespace {

// column indexing for sparse rows over an enumerated path basis
struct PathIndexer {
  std::map<Path, int> index;

  explicit PathIndexer(const std::vector<Path>& paths) {
    for (std::size_t i = 0; i < paths.size(); ++i)
      index.emplace(paths[i], static_cast<int>(i));
  }

  int at(const Path& p) const {
    auto it = index.find(p);
    if (it == index.end())
      throw std::logic_error("path outside the enumerated window");
    return it->second;
  }

  bool has(const Path& p) const { return index.count(p) != 0; }
};

RowSpace::SparseRow unit_row(const PathIndexer& ix, const Path& p) {
  return {{ix.at(p), Rational(1)}};
}

RowSpace::SparseRow element_row(const PathIndexer& ix,
                                const AlgebraElement& x) {
  RowSpace::SparseRow row;
  for (const auto& [p, c] : x.terms()) row.emplace(ix.at(p), c);
  return row;
}

bool composable_in(const Quiver& q, const std::vector<int>& arrows) {
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i)
    if (q.target_of(arrows[i]) != q.source_of(arrows[i + 1]) ||
        q.target_of(arrows[i]) < 0)
      return false;
  return true;
}

}  // namespace

std::string Path::to_string(const Quiver& q) const {
  if (trivial()) return "e_" + q.vertex_name(vertex);
  bool single_char = true;
  for (int a : arrows)
    if (q.arrow(a).id.size() != 1) single_char = false;
  std::string out;
  for (auto it = arrows.rbegin(); it != arrows.rend(); ++it) {
    if (!out.empty() && !single_char) out += '*';
    out += q.arrow(*it).id;
  }
  return out;
}

Path trivial_path(int vertex) {
  Path p;
  p.vertex = vertex;
  return p;
}

Path arrow_path(int arrow) {
  Path p;
  p.arrows.push_back(arrow);
  return p;
}

Path make_path(const Quiver& q, std::vector<int> arrows) {
  if (arrows.empty())
    throw std::invalid_argument("use trivial_path for length-zero paths");
  for (int a : arrows)
    if (a < 0 || a >= q.n_arrows())
      throw std::invalid_argument("arrow index out of range");
  if (!composable_in(q, arrows))
    throw std::invalid_argument("arrows do not compose into a path");
  Path p;
  p.arrows = std::move(arrows);
  return p;
}

std::optional<Path> compose_paths(const Quiver& q, const Path& p,
                                  const Path& first) {
  if (p.source(q) != first.target(q)) return std::nullopt;
  if (p.trivial()) return first;
  if (first.trivial()) return p;
  Path r;
  r.arrows = first.arrows;
  r.arrows.insert(r.arrows.end(), p.arrows.begin(), p.arrows.end());
  return r;
}

std::vector<Path> enumerate_paths(const Quiver& q, int max_len) {
  auto report = q.validate();
  if (!report.valid())
    throw std::invalid_argument("cannot enumerate paths of an invalid quiver:\n" +
                                report.to_string());
  if (max_len < 0) throw std::invalid_argument("negative length bound");

  std::vector<Path> all;
  std::vector<Path> level;
  for (int v = 0; v < q.n_vertices(); ++v) level.push_back(trivial_path(v));
  all = level;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Path> next;
    for (const auto& p : level) {
      int end = p.target(q);
      for (int a = 0; a < q.n_arrows(); ++a) {
        if (q.source_of(a) != end) continue;
        Path ext = p;
        ext.vertex = -1;
        ext.arrows.push_back(a);
        next.push_back(std::move(ext));
      }
    }
    std::sort(next.begin(), next.end());
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
    if (level.empty()) break;
  }
  return all;
}

std::size_t truncated_dimension(const Quiver& q, int max_len) {
  return enumerate_paths(q, max_len).size();
}

AlgebraElement AlgebraElement::basis(std::shared_ptr<const Quiver> quiver,
                                     Path p, Rational coeff) {
  if (p.trivial()) {
    if (p.vertex < 0 || p.vertex >= quiver->n_vertices())
      throw std::invalid_argument("trivial path at an unknown vertex");
  } else {
    for (int a : p.arrows)
      if (a < 0 || a >= quiver->n_arrows() || quiver->source_of(a) < 0 ||
          quiver->target_of(a) < 0)
        throw std::invalid_argument("path uses an unknown or dangling arrow");
    if (!composable_in(*quiver, p.arrows))
      throw std::invalid_argument("path arrows do not compose");
  }
  AlgebraElement x(std::move(quiver));
  x.add_term(p, coeff);
  return x;
}

AlgebraElement& AlgebraElement::add_term(const Path& p, const Rational& c) {
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

namespace {

void require_same_quiver(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.quiver_ptr() != b.quiver_ptr() && !(a.quiver() == b.quiver()))
    throw std::invalid_argument("elements live over different quivers");
}

}  // namespace

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_quiver(a, b);
  AlgebraElement r = a;
  for (const auto& [p, c] : b.terms()) r.add_term(p, c);
  return r;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_quiver(a, b);
  AlgebraElement r = a;
  for (const auto& [p, c] : b.terms()) r.add_term(p, -c);
  return r;
}

AlgebraElement operator*(const Rational& c, const AlgebraElement& a) {
  AlgebraElement r(a.quiver_ptr());
  for (const auto& [p, coeff] : a.terms()) r.add_term(p, c * coeff);
  return r;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_quiver(a, b);
  AlgebraElement r(a.quiver_ptr());
  for (const auto& [p, cp] : a.terms())
    for (const auto& [q, cq] : b.terms()) {
      auto prod = compose_paths(a.quiver(), p, q);
      if (prod) r.add_term(*prod, cp * cq);
    }
  return r;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [p, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (!(c == Rational(1))) out += c.to_string() + "*";
    out += p.to_string(*quiver_);
  }
  return out;
}

AlgebraElement algebra_identity(std::shared_ptr<const Quiver> quiver) {
  AlgebraElement x(quiver);
  for (int v = 0; v < quiver->n_vertices(); ++v)
    x.add_term(trivial_path(v), Rational(1));
  return x;
}

std::vector<Path> subquiver_paths(const Subquiver& s, int max_len) {
  std::vector<Path> all;
  std::vector<Path> level;
  for (int v : s.vertices) level.push_back(trivial_path(v));
  all = level;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Path> next;
    for (const auto& p : level) {
      int end = p.target(s.parent);
      for (int a : s.arrows) {
        if (s.parent.source_of(a) != end) continue;
        Path ext = p;
        ext.vertex = -1;
        ext.arrows.push_back(a);
        next.push_back(std::move(ext));
      }
    }
    std::sort(next.begin(), next.end());
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
    if (level.empty()) break;
  }
  return all;
}

SubalgebraSpan SubalgebraSpan::from_subquiver(
    std::shared_ptr<const Quiver> quiver, Subquiver s) {
  if (!(s.parent == *quiver))
    throw std::invalid_argument("subquiver belongs to a different quiver");
  SubalgebraSpan span;
  span.quiver = std::move(quiver);
  span.subquiver = std::move(s);
  return span;
}

SubalgebraSpan SubalgebraSpan::from_elements(
    std::shared_ptr<const Quiver> quiver, std::vector<AlgebraElement> elements,
    int truncation) {
  SubalgebraSpan span;
  span.quiver = std::move(quiver);
  span.spanning = std::move(elements);
  span.truncation = truncation;
  return span;
}

std::size_t SubalgebraSpan::dimension(int max_len) const {
  if (subquiver_form()) return subquiver_paths(*subquiver, max_len).size();
  std::set<Path> support;
  for (const auto& x : spanning)
    for (const auto& [p, c] : x.terms()) support.insert(p);
  PathIndexer ix(std::vector<Path>(support.begin(), support.end()));
  RowSpace space;
  for (const auto& x : spanning) space.insert(element_row(ix, x));
  return space.dimension();
}

bool SubalgebraSpan::contains(const AlgebraElement& x) const {
  if (subquiver_form()) {
    for (const auto& [p, c] : x.terms()) {
      if (p.trivial()) {
        if (!subquiver->contains_vertex(p.vertex)) return false;
      } else {
        for (int a : p.arrows)
          if (!subquiver->contains_arrow(a)) return false;
      }
    }
    return true;
  }
  std::set<Path> support;
  for (const auto& y : spanning)
    for (const auto& [p, c] : y.terms()) support.insert(p);
  for (const auto& [p, c] : x.terms()) support.insert(p);
  PathIndexer ix(std::vector<Path>(support.begin(), support.end()));
  RowSpace space;
  for (const auto& y : spanning) space.insert(element_row(ix, y));
  return space.contains(element_row(ix, x));
}

std::vector<AlgebraElement> SubalgebraSpan::basis_elements(int max_len) const {
  if (subquiver_form()) {
    std::vector<AlgebraElement> out;
    for (const auto& p : subquiver_paths(*subquiver, max_len))
      out.push_back(AlgebraElement::basis(quiver, p));
    return out;
  }
  return spanning;
}

SubalgebraSpan AlgebraPartialAction::domain_span(int g) const {
  return SubalgebraSpan::from_subquiver(quiver, domains[g]);
}

std::optional<Path> AlgebraPartialAction::apply_path(int g,
                                                     const Path& p) const {
  if (p.trivial()) {
    auto it = vertex_maps[g].find(p.vertex);
    if (it == vertex_maps[g].end()) return std::nullopt;
    return trivial_path(it->second);
  }
  Path image;
  image.vertex = -1;
  for (int a : p.arrows) {
    auto it = arrow_maps[g].find(a);
    if (it == arrow_maps[g].end()) return std::nullopt;
    image.arrows.push_back(it->second);
  }
  if (!composable_in(*quiver, image.arrows)) return std::nullopt;
  return image;
}

AlgebraElement AlgebraPartialAction::apply(int g,
                                           const AlgebraElement& x) const {
  AlgebraElement r(quiver);
  for (const auto& [p, c] : x.terms()) {
    auto image = apply_path(g, p);
    if (!image)
      throw std::invalid_argument("alpha_" + group.name(g) +
                                  " is not defined on " +
                                  p.to_string(*quiver));
    r.add_term(*image, c);
  }
  return r;
}

AlgebraPartialAction induced_partial_action(const QuiverPartialAction& a) {
  auto check = check_quiver_partial_action(a);
  if (!check.valid())
    throw std::invalid_argument(
        "cannot induce an algebra action from an invalid partial action:\n" +
        check.to_string());
  AlgebraPartialAction r;
  r.group = a.group;
  r.quiver = std::make_shared<Quiver>(a.quiver);
  r.domains = a.domains;
  r.vertex_maps = a.vertex_maps;
  r.arrow_maps = a.arrow_maps;
  return r;
}

namespace {

std::optional<Subquiver> map_subquiver(const Subquiver& s,
                                       const std::map<int, int>& vmap,
                                       const std::map<int, int>& amap) {
  Subquiver image;
  image.parent = s.parent;
  for (int v : s.vertices) {
    auto it = vmap.find(v);
    if (it == vmap.end()) return std::nullopt;
    image.vertices.push_back(it->second);
  }
  for (int a : s.arrows) {
    auto it = amap.find(a);
    if (it == amap.end()) return std::nullopt;
    image.arrows.push_back(it->second);
  }
  std::sort(image.vertices.begin(), image.vertices.end());
  image.vertices.erase(
      std::unique(image.vertices.begin(), image.vertices.end()),
      image.vertices.end());
  std::sort(image.arrows.begin(), image.arrows.end());
  image.arrows.erase(std::unique(image.arrows.begin(), image.arrows.end()),
                     image.arrows.end());
  return image;
}

std::string subquiver_to_string(const Subquiver& s) {
  std::string out = "(vertices {";
  for (std::size_t i = 0; i < s.vertices.size(); ++i) {
    if (i) out += ',';
    out += s.parent.vertex_name(s.vertices[i]);
  }
  out += "} arrows {";
  for (std::size_t i = 0; i < s.arrows.size(); ++i) {
    if (i) out += ',';
    out += s.parent.arrow(s.arrows[i]).id;
  }
  out += "})";
  return out;
}

}  // namespace

ValidationReport check_subalgebra_partial_action(const AlgebraPartialAction& a,
                                                 int max_len) {
  ValidationReport report;
  report.merge(a.group.validate(), "group ");
  if (!report.valid()) return report;
  const int m = a.group.size();
  if (static_cast<int>(a.domains.size()) != m ||
      static_cast<int>(a.vertex_maps.size()) != m ||
      static_cast<int>(a.arrow_maps.size()) != m) {
    report.add("shape", "need one domain and one map pair per group element");
    return report;
  }
  const Quiver& q = *a.quiver;
  for (int g = 0; g < m; ++g)
    if (!(a.domains[g].parent == q)) {
      report.add("shape", "domain of " + a.group.name(g) +
                              " spans paths of a different quiver");
      return report;
    }

  const int e = a.group.identity();

  // (i) R_e is the whole path algebra with the identity map
  if (static_cast<int>(a.domains[e].vertices.size()) != q.n_vertices() ||
      static_cast<int>(a.domains[e].arrows.size()) != q.n_arrows())
    report.add("(i)", "R_e is not the whole path algebra");
  for (const auto& [x, y] : a.vertex_maps[e])
    if (x != y)
      report.add("(i)", "alpha_e moves e_" + q.vertex_name(x));
  for (const auto& [x, y] : a.arrow_maps[e])
    if (x != y)
      report.add("(i)", "alpha_e moves arrow '" + q.arrow(x).id + "'");

  // typing: each alpha_g must biject the domain subquivers, with no data
  // outside the declared domain
  for (int g = 0; g < m; ++g) {
    const auto& dom = a.domains[a.group.inv(g)];
    const auto& cod = a.domains[g];
    for (const auto& [x, y] : a.vertex_maps[g])
      if (!dom.contains_vertex(x))
        report.add("map", "alpha_" + a.group.name(g) + " is defined on e_" +
                              q.vertex_name(x) + " outside R_" +
                              a.group.name(a.group.inv(g)));
    for (const auto& [x, y] : a.arrow_maps[g])
      if (!dom.contains_arrow(x))
        report.add("map", "alpha_" + a.group.name(g) + " is defined on '" +
                              q.arrow(x).id + "' outside R_" +
                              a.group.name(a.group.inv(g)));
    auto image = map_subquiver(dom, a.vertex_maps[g], a.arrow_maps[g]);
    if (!image) {
      report.add("map", "alpha_" + a.group.name(g) +
                            " is undefined on part of R_" +
                            a.group.name(a.group.inv(g)));
      continue;
    }
    if (image->vertices.size() != dom.vertices.size() ||
        image->arrows.size() != dom.arrows.size())
      report.add("map", "alpha_" + a.group.name(g) + " is not injective");
    else if (!(image->vertices == cod.vertices && image->arrows == cod.arrows))
      report.add("map", "alpha_" + a.group.name(g) + " maps R_" +
                            a.group.name(a.group.inv(g)) + " to " +
                            subquiver_to_string(*image) + " instead of R_" +
                            a.group.name(g));
  }

  auto window = enumerate_paths(q, max_len);
  PathIndexer ix(window);

  // each alpha_g must be multiplicative on composable basis paths, or it is
  // no algebra map at all
  for (int g = 0; g < m; ++g) {
    const auto& dom = a.domains[a.group.inv(g)];
    auto dom_paths = subquiver_paths(dom, max_len);
    for (const auto& p : dom_paths)
      for (const auto& r : dom_paths) {
        if (p.length() + r.length() > max_len) continue;
        auto prod = compose_paths(q, p, r);
        auto ip = a.apply_path(g, p);
        auto ir = a.apply_path(g, r);
        if (!ip || !ir) continue;  // reported under "map"
        auto image_prod = compose_paths(q, *ip, *ir);
        bool ok;
        if (!prod) {
          ok = !image_prod;
        } else {
          auto mapped = a.apply_path(g, *prod);
          ok = image_prod && mapped && *image_prod == *mapped;
        }
        if (!ok) {
          report.add("map", "alpha_" + a.group.name(g) +
                                " is not multiplicative at " + p.to_string(q) +
                                " * " + r.to_string(q));
        }
      }
  }

  // (ii) alpha_g(R_{g^-1} ∩ R_h) = R_g ∩ R_{gh}: exactly at the subquiver
  // level, then as spans on the truncated basis
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h) {
      Subquiver lhs_dom = intersect(a.domains[a.group.inv(g)], a.domains[h]);
      Subquiver rhs = intersect(a.domains[g], a.domains[a.group.mul(g, h)]);
      auto image = map_subquiver(lhs_dom, a.vertex_maps[g], a.arrow_maps[g]);
      if (!image) {
        report.add("(ii)", "alpha_" + a.group.name(g) +
                               " is undefined on R_" +
                               a.group.name(a.group.inv(g)) + " ∩ R_" +
                               a.group.name(h));
        continue;
      }
      if (!(image->vertices == rhs.vertices && image->arrows == rhs.arrows)) {
        report.add("(ii)", "alpha_" + a.group.name(g) + "(R_" +
                               a.group.name(a.group.inv(g)) + " ∩ R_" +
                               a.group.name(h) + ") = " +
                               subquiver_to_string(*image) + " but R_" +
                               a.group.name(g) + " ∩ R_" +
                               a.group.name(a.group.mul(g, h)) + " = " +
                               subquiver_to_string(rhs));
        continue;
      }
      // windowed span comparison via exact elimination
      RowSpace lhs_span, rhs_span;
      bool mapped_ok = true;
      for (const auto& p : subquiver_paths(lhs_dom, max_len)) {
        auto img = a.apply_path(g, p);
        if (!img || !ix.has(*img)) {
          report.add("(ii)", "alpha_" + a.group.name(g) +
                                 " does not map basis path " + p.to_string(q) +
                                 " to a path");
          mapped_ok = false;
          break;
        }
        lhs_span.insert(unit_row(ix, *img));
      }
      if (!mapped_ok) continue;
      for (const auto& p : subquiver_paths(rhs, max_len))
        rhs_span.insert(unit_row(ix, p));
      bool equal = lhs_span.dimension() == rhs_span.dimension();
      if (equal)
        for (const auto& p : subquiver_paths(rhs, max_len))
          if (!lhs_span.contains(unit_row(ix, p))) {
            equal = false;
            break;
          }
      if (!equal)
        report.add("(ii)", "window spans of alpha_" + a.group.name(g) + "(R_" +
                               a.group.name(a.group.inv(g)) + " ∩ R_" +
                               a.group.name(h) + ") and R_" + a.group.name(g) +
                               " ∩ R_" + a.group.name(a.group.mul(g, h)) +
                               " differ");
    }

  // (iii) alpha_g(alpha_h(x)) = alpha_{gh}(x) on the declared domain
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h) {
      Subquiver inner = intersect(a.domains[h], a.domains[a.group.inv(g)]);
      auto dom = map_subquiver(inner, a.vertex_maps[a.group.inv(h)],
                               a.arrow_maps[a.group.inv(h)]);
      if (!dom) continue;  // reported under "map" for h^-1
      const int gh = a.group.mul(g, h);
      for (const auto& x : subquiver_paths(*dom, max_len)) {
        auto via_h = a.apply_path(h, x);
        auto lhs = via_h ? a.apply_path(g, *via_h) : std::nullopt;
        auto rhs = a.apply_path(gh, x);
        if (!lhs || !rhs || !(*lhs == *rhs))
          report.add(
              "(iii)",
              "alpha_" + a.group.name(g) + "(alpha_" + a.group.name(h) + "(" +
                  x.to_string(q) + ")) = " +
                  (lhs ? lhs->to_string(q) : std::string("undefined")) +
                  " but alpha_" + a.group.name(gh) + "(" + x.to_string(q) +
                  ") = " + (rhs ? rhs->to_string(q) : std::string("undefined")));
      }
    }
  return report;
}

std::string IdealWitness::to_string(const Quiver& q) const {
  std::string out = left ? ambient_path.to_string(q) + " * (" +
                               member.to_string() + ")"
                         : "(" + member.to_string() + ") * " +
                               ambient_path.to_string(q);
  out += " = " + product.to_string() + ", which leaves the span";
  return out;
}

std::optional<IdealWitness> check_not_ideal(const SubalgebraSpan& s,
                                            int max_len) {
  auto members = s.basis_elements(max_len);
  for (const auto& p : enumerate_paths(*s.quiver, max_len)) {
    AlgebraElement pe = AlgebraElement::basis(s.quiver, p);
    for (const auto& x : members) {
      AlgebraElement left = pe * x;
      if (!s.contains(left))
        return IdealWitness{p, x, true, left};
      AlgebraElement right = x * pe;
      if (!s.contains(right))
        return IdealWitness{p, x, false, right};
    }
  }
  return std::nullopt;
}

namespace {

Path map_path_total(const Path& p, const std::vector<int>& vmap,
                    const std::vector<int>& amap) {
  if (p.trivial()) return trivial_path(vmap[p.vertex]);
  Path r;
  r.vertex = -1;
  for (int a : p.arrows) r.arrows.push_back(amap[a]);
  return r;
}

// beta_g applied to the embedded copy of a path of the original quiver
Path translate_path(const EnvelopingQuiverAction& e, int g, const Path& p) {
  Path embedded = map_path_total(p, e.embedding.vertex_map(),
                                 e.embedding.arrow_map());
  return map_path_total(embedded, e.global.vertex_action[g],
                        e.global.arrow_action[g]);
}

std::set<Path> translate_path_set(const EnvelopingQuiverAction& e,
                                  int max_len) {
  std::set<Path> paths;
  auto gamma_paths = enumerate_paths(e.original.quiver, max_len);
  for (int g = 0; g < e.global.group.size(); ++g)
    for (const auto& p : gamma_paths) paths.insert(translate_path(e, g, p));
  return paths;
}

SubalgebraSpan span_of_paths(const EnvelopingQuiverAction& e,
                             const std::set<Path>& paths, int max_len) {
  auto quiver = std::make_shared<Quiver>(e.global.quiver);
  std::vector<AlgebraElement> spanning;
  for (const auto& p : paths)
    spanning.push_back(AlgebraElement::basis(quiver, p));
  return SubalgebraSpan::from_elements(quiver, std::move(spanning), max_len);
}

}  // namespace

SubalgebraSpan sum_of_translates(const EnvelopingQuiverAction& e, int max_len) {
  return span_of_paths(e, translate_path_set(e, max_len), max_len);
}

SubalgebraSpan generated_subalgebra(const EnvelopingQuiverAction& e,
                                    int max_len) {
  std::set<Path> paths = translate_path_set(e, max_len);
  const Quiver& q = e.global.quiver;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Path> batch(paths.begin(), paths.end());
    for (const auto& p : batch)
      for (const auto& r : batch) {
        if (p.length() + r.length() > max_len) continue;
        auto prod = compose_paths(q, p, r);
        if (prod && paths.insert(*prod).second) grew = true;
      }
  }
  return span_of_paths(e, paths, max_len);
}

ValidationReport check_algebra_globalization(const EnvelopingQuiverAction& e,
                                             int max_len) {
  ValidationReport report;
  report.merge(check_enveloping(e), "input ");
  if (!report.valid()) return report;

  const Quiver& gamma = e.original.quiver;
  const Quiver& big = e.global.quiver;
  auto gamma_paths = enumerate_paths(gamma, max_len);
  auto big_paths = enumerate_paths(big, max_len);
  PathIndexer big_ix(big_paths);
  const int m = e.global.group.size();

  // (i) the embedding is an injective algebra homomorphism on the window
  {
    std::set<Path> images;
    for (const auto& p : gamma_paths) {
      Path ip = map_path_total(p, e.embedding.vertex_map(),
                               e.embedding.arrow_map());
      if (!images.insert(ip).second)
        report.add("(i)", "embedding identifies two basis paths");
    }
    for (const auto& p : gamma_paths)
      for (const auto& r : gamma_paths) {
        auto prod = compose_paths(gamma, p, r);
        Path ip = map_path_total(p, e.embedding.vertex_map(),
                                 e.embedding.arrow_map());
        Path ir = map_path_total(r, e.embedding.vertex_map(),
                                 e.embedding.arrow_map());
        auto iprod = compose_paths(big, ip, ir);
        bool ok = prod.has_value() == iprod.has_value();
        if (ok && prod)
          ok = *iprod == map_path_total(*prod, e.embedding.vertex_map(),
                                        e.embedding.arrow_map());
        if (!ok)
          report.add("(i)", "embedding is not multiplicative at " +
                                p.to_string(gamma) + " * " +
                                r.to_string(gamma));
      }
  }

  // (ii) the translates generate the whole window
  {
    auto generated = generated_subalgebra(e, max_len);
    std::size_t have = generated.dimension(max_len);
    if (have != big_paths.size())
      report.add("(ii)", "translates generate a subspace of dimension " +
                             std::to_string(have) + " inside a window of " +
                             std::to_string(big_paths.size()));
  }

  // (iii) each D_g is the span of the intersection subquiver and carries
  // its own identity
  Subquiver embedded;
  embedded.parent = big;
  for (int x = 0; x < gamma.n_vertices(); ++x)
    embedded.vertices.push_back(e.embedding.apply_vertex(x));
  for (int x = 0; x < gamma.n_arrows(); ++x)
    embedded.arrows.push_back(e.embedding.apply_arrow(x));
  std::sort(embedded.vertices.begin(), embedded.vertices.end());
  std::sort(embedded.arrows.begin(), embedded.arrows.end());

  auto big_quiver = std::make_shared<Quiver>(big);
  for (int g = 0; g < m; ++g) {
    Subquiver translated;
    translated.parent = big;
    for (int v : embedded.vertices)
      translated.vertices.push_back(e.global.vertex_action[g][v]);
    for (int a : embedded.arrows)
      translated.arrows.push_back(e.global.arrow_action[g][a]);
    std::sort(translated.vertices.begin(), translated.vertices.end());
    std::sort(translated.arrows.begin(), translated.arrows.end());
    Subquiver meet = intersect(translated, embedded);

    RowSpace span_a, span_b, span_union;
    for (const auto& p : gamma_paths) {
      Path tp = translate_path(e, g, p);
      span_a.insert(unit_row(big_ix, tp));
      span_union.insert(unit_row(big_ix, tp));
    }
    for (const auto& p : gamma_paths) {
      Path ip = map_path_total(p, e.embedding.vertex_map(),
                               e.embedding.arrow_map());
      span_b.insert(unit_row(big_ix, ip));
      span_union.insert(unit_row(big_ix, ip));
    }
    std::size_t inter_dim =
        span_a.dimension() + span_b.dimension() - span_union.dimension();

    auto meet_paths = subquiver_paths(meet, max_len);
    bool contained = true;
    for (const auto& p : meet_paths)
      if (!span_a.contains(unit_row(big_ix, p)) ||
          !span_b.contains(unit_row(big_ix, p)))
        contained = false;
    if (!contained || meet_paths.size() != inter_dim)
      report.add("(iii)",
                 "D_" + e.global.group.name(g) +
                     " does not equal the span of the intersection subquiver "
                     "(window dimensions " +
                     std::to_string(inter_dim) + " vs " +
                     std::to_string(meet_paths.size()) + ")");

    // own identity: the sum of the intersection's vertex idempotents is a
    // two-sided unit for every basis path of D_g
    AlgebraElement unit(big_quiver);
    for (int v : meet.vertices) unit.add_term(trivial_path(v), Rational(1));
    for (const auto& p : meet_paths) {
      AlgebraElement x = AlgebraElement::basis(big_quiver, p);
      if (!(unit * x == x) || !(x * unit == x))
        report.add("(iii)", "the identity of D_" + e.global.group.name(g) +
                                " does not fix basis path " +
                                p.to_string(big));
    }
  }

  // (iv) the restriction of beta reproduces the induced partial action
  AlgebraPartialAction induced;
  induced.group = e.global.group;
  induced.quiver = std::make_shared<Quiver>(gamma);
  induced.domains = e.original.domains;
  induced.vertex_maps = e.original.vertex_maps;
  induced.arrow_maps = e.original.arrow_maps;
  for (int g = 0; g < m; ++g) {
    const int ginv = e.global.group.inv(g);
    for (const auto& p : subquiver_paths(e.original.domains[ginv], max_len)) {
      Path via_beta = translate_path(e, g, p);
      std::optional<Path> image = induced.apply_path(g, p);
      if (!image) {
        report.add("(iv)", "alpha_" + e.global.group.name(g) +
                               " is undefined on basis path " +
                               p.to_string(gamma));
        continue;
      }
      Path expected = map_path_total(*image, e.embedding.vertex_map(),
                                     e.embedding.arrow_map());
      if (!(via_beta == expected))
        report.add("(iv)", "beta_" + e.global.group.name(g) +
                               " and alpha_" + e.global.group.name(g) +
                               " disagree on basis path " +
                               p.to_string(gamma));
    }
  }
  return report;
}

TruncatedAlgebraMap canonical_algebra_isomorphism(
    const EnvelopingQuiverAction& e1, const EnvelopingQuiverAction& e2,
    int max_len) {
  if (!(e1.original == e2.original))
    throw std::invalid_argument(
        "the two globalizations do not share a partial action");
  for (const auto* e : {&e1, &e2}) {
    auto check = check_algebra_globalization(*e, max_len);
    if (!check.valid())
      throw std::invalid_argument("input fails the globalization checks:\n" +
                                  check.to_string());
  }

  // the equivariant quiver isomorphism carries the basis bijection
  QuiverMorphism phi = enveloping_isomorphism(e1, e2);

  TruncatedAlgebraMap eta;
  eta.source = std::make_shared<Quiver>(e1.global.quiver);
  eta.target = std::make_shared<Quiver>(e2.global.quiver);

  auto window1 = enumerate_paths(e1.global.quiver, max_len);
  auto window2 = enumerate_paths(e2.global.quiver, max_len);
  std::set<Path> window2_set(window2.begin(), window2.end());

  for (const auto& p : window1)
    eta.images.emplace(p, map_path_total(p, phi.vertex_map(), phi.arrow_map()));

  // agreement across every translate representative
  auto gamma_paths = enumerate_paths(e1.original.quiver, max_len);
  for (int g = 0; g < e1.global.group.size(); ++g)
    for (const auto& p : gamma_paths) {
      Path from = translate_path(e1, g, p);
      Path to = translate_path(e2, g, p);
      auto it = eta.images.find(from);
      if (it == eta.images.end() || !(it->second == to))
        throw std::runtime_error(
            "canonical algebra map is not well defined across representatives");
    }

  // bijectivity on the windows
  std::set<Path> image_set;
  for (const auto& [p, ip] : eta.images) {
    if (!window2_set.count(ip))
      throw std::runtime_error("canonical algebra map leaves the window");
    if (!image_set.insert(ip).second)
      throw std::runtime_error("canonical algebra map is not injective");
  }
  if (image_set.size() != window2_set.size())
    throw std::runtime_error("canonical algebra map is not surjective");

  // multiplicativity within the window
  for (const auto& p : window1)
    for (const auto& r : window1) {
      if (p.length() + r.length() > max_len) continue;
      auto prod = compose_paths(e1.global.quiver, p, r);
      auto iprod = compose_paths(e2.global.quiver, eta.images.at(p),
                                 eta.images.at(r));
      if (prod.has_value() != iprod.has_value() ||
          (prod && !(eta.images.at(*prod) == *iprod)))
        throw std::runtime_error("canonical algebra map is not multiplicative");
    }
  return eta;
}

}  // namespace qpa
