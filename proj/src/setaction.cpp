#include "quiverpa/setaction.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace qpa {

namespace {

std::string set_to_string(const std::vector<std::string>& names,
                          const std::vector<int>& indices) {
  std::string out = "{";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ',';
    out += names[indices[i]];
  }
  out += '}';
  return out;
}

bool sorted_unique_in_range(const std::vector<int>& v, int n) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0 || v[i] >= n) return false;
    if (i && v[i] <= v[i - 1]) return false;
  }
  return true;
}

}  // namespace

SetPartialAction SetPartialAction::empty_shell(FiniteGroup g,
                                               std::vector<std::string> carrier) {
  SetPartialAction a;
  a.group = std::move(g);
  a.carrier = std::move(carrier);
  a.domains.resize(a.group.size());
  a.maps.resize(a.group.size());
  return a;
}

ValidationReport GlobalSetAction::validate() const {
  ValidationReport report;
  report.merge(group.validate(), "group ");
  if (!report.valid()) return report;
  const int n = static_cast<int>(carrier.size());
  if (static_cast<int>(action.size()) != group.size()) {
    report.add("shape", "need one permutation per group element");
    return report;
  }
  for (int g = 0; g < group.size(); ++g) {
    if (static_cast<int>(action[g].size()) != n) {
      report.add("shape", "map for " + group.name(g) + " is not total");
      return report;
    }
    std::vector<bool> hit(n, false);
    for (int x = 0; x < n; ++x) {
      int y = action[g][x];
      if (y < 0 || y >= n || hit[y]) {
        report.add("bijection",
                   "map for " + group.name(g) + " is not a permutation");
        break;
      }
      hit[y] = true;
    }
  }
  if (!report.valid()) return report;
  for (int x = 0; x < n; ++x)
    if (action[group.identity()][x] != x) {
      report.add("identity", "beta_e moves " + carrier[x]);
      break;
    }
  for (int g = 0; g < group.size(); ++g)
    for (int h = 0; h < group.size(); ++h)
      for (int x = 0; x < n; ++x)
        if (action[g][action[h][x]] != action[group.mul(g, h)][x]) {
          report.add("homomorphism",
                     "beta_" + group.name(g) + "(beta_" + group.name(h) + "(" +
                         carrier[x] + ")) != beta_" +
                         group.name(group.mul(g, h)) + "(" + carrier[x] + ")");
        }
  return report;
}

ValidationReport check_partial_set_action(const SetPartialAction& a) {
  ValidationReport report;
  report.merge(a.group.validate(), "group ");
  if (!report.valid()) return report;

  const int n = static_cast<int>(a.carrier.size());
  const int m = a.group.size();
  if (static_cast<int>(a.domains.size()) != m ||
      static_cast<int>(a.maps.size()) != m) {
    report.add("shape", "need one domain and one map per group element");
    return report;
  }
  for (int g = 0; g < m; ++g)
    if (!sorted_unique_in_range(a.domains[g], n)) {
      report.add("shape", "domain of " + a.group.name(g) +
                              " is not a sorted subset of the carrier");
      return report;
    }

  const int e = a.group.identity();

  // (i) X_e = X and alpha_e = id
  if (static_cast<int>(a.domains[e].size()) != n)
    report.add("(i)", "X_e = " + set_to_string(a.carrier, a.domains[e]) +
                          " is not the whole carrier");
  for (const auto& [x, y] : a.maps[e])
    if (x != y)
      report.add("(i)", "alpha_e(" + a.carrier[x] + ") = " + a.carrier[y] +
                            ", expected identity");

  // Each alpha_g must be a bijection X_{g^-1} -> X_g.
  std::vector<bool> map_ok(m, true);
  for (int g = 0; g < m; ++g) {
    const auto& dom = a.domains[a.group.inv(g)];
    const auto& cod = a.domains[g];
    const auto& map = a.maps[g];
    std::vector<int> image;
    for (int x : dom) {
      auto it = map.find(x);
      if (it == map.end()) {
        report.add("map", "alpha_" + a.group.name(g) + " undefined on " +
                              a.carrier[x]);
        map_ok[g] = false;
        continue;
      }
      image.push_back(it->second);
    }
    for (const auto& [x, y] : map) {
      if (!std::binary_search(dom.begin(), dom.end(), x)) {
        report.add("map", "alpha_" + a.group.name(g) + " defined on " +
                              a.carrier[x] + " outside X_" +
                              a.group.name(a.group.inv(g)));
        map_ok[g] = false;
      }
      if (!std::binary_search(cod.begin(), cod.end(), y)) {
        report.add("map", "alpha_" + a.group.name(g) + "(" + a.carrier[x] +
                              ") = " + a.carrier[y] + " lies outside X_" +
                              a.group.name(g));
        map_ok[g] = false;
      }
    }
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
      report.add("map", "alpha_" + a.group.name(g) + " is not injective");
      map_ok[g] = false;
    } else if (map_ok[g] && image != cod) {
      report.add("map", "alpha_" + a.group.name(g) + " does not map X_" +
                            a.group.name(a.group.inv(g)) + " onto X_" +
                            a.group.name(g));
      map_ok[g] = false;
    }
  }

  auto alpha = [&](int g, int x) -> int {
    auto it = a.maps[g].find(x);
    return it == a.maps[g].end() ? -1 : it->second;
  };
  auto in_domain = [&](int g, int x) {
    return std::binary_search(a.domains[g].begin(), a.domains[g].end(), x);
  };

  // (ii) alpha_g(X_{g^-1} ∩ X_h) = X_g ∩ X_{gh}
  for (int g = 0; g < m; ++g) {
    if (!map_ok[g]) continue;
    for (int h = 0; h < m; ++h) {
      std::vector<int> lhs;
      for (int x : a.domains[a.group.inv(g)])
        if (in_domain(h, x)) {
          int y = alpha(g, x);
          if (y >= 0) lhs.push_back(y);
        }
      std::sort(lhs.begin(), lhs.end());
      std::vector<int> rhs;
      for (int y : a.domains[g])
        if (in_domain(a.group.mul(g, h), y)) rhs.push_back(y);
      if (lhs != rhs)
        report.add("(ii)", "alpha_" + a.group.name(g) + "(X_" +
                               a.group.name(a.group.inv(g)) + " ∩ X_" +
                               a.group.name(h) + ") = " +
                               set_to_string(a.carrier, lhs) + " but X_" +
                               a.group.name(g) + " ∩ X_" +
                               a.group.name(a.group.mul(g, h)) + " = " +
                               set_to_string(a.carrier, rhs));
    }
  }

  // (iii) alpha_g(alpha_h(x)) = alpha_{gh}(x) on alpha_{h^-1}(X_h ∩ X_{g^-1})
  for (int g = 0; g < m; ++g) {
    if (!map_ok[g]) continue;
    for (int h = 0; h < m; ++h) {
      if (!map_ok[h] || !map_ok[a.group.inv(h)]) continue;
      const int gh = a.group.mul(g, h);
      for (int s : a.domains[h]) {
        if (!in_domain(a.group.inv(g), s)) continue;
        int x = alpha(a.group.inv(h), s);
        if (x < 0) continue;
        int via_h = alpha(h, x);
        int lhs = via_h < 0 ? -1 : alpha(g, via_h);
        int rhs = alpha(gh, x);
        if (lhs != rhs || lhs < 0)
          report.add(
              "(iii)",
              "alpha_" + a.group.name(g) + "(alpha_" + a.group.name(h) + "(" +
                  a.carrier[x] + ")) = " +
                  (lhs < 0 ? std::string("undefined") : a.carrier[lhs]) +
                  " but alpha_" + a.group.name(gh) + "(" + a.carrier[x] +
                  ") = " +
                  (rhs < 0 ? std::string("undefined") : a.carrier[rhs]));
      }
    }
  }
  return report;
}

namespace {

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
};

}  // namespace

SetGlobalization globalize_set_action(const SetPartialAction& a,
                                      const GlobalizeOptions& opts) {
  auto check = check_partial_set_action(a);
  if (!check.valid())
    throw std::invalid_argument("cannot globalize an invalid partial action:\n" +
                                check.to_string());

  const int m = a.group.size();
  const int n = static_cast<int>(a.carrier.size());
  const int total = m * n;
  auto pair_id = [n](int g, int x) { return g * n + x; };

  auto in_domain = [&](int g, int x) {
    return std::binary_search(a.domains[g].begin(), a.domains[g].end(), x);
  };
  // (g,x) ~ (h,y)  iff  x ∈ X_{g⁻¹h} and alpha_{h⁻¹g}(x) = y
  auto related = [&](int g, int x, int h, int y) {
    int gh = a.group.mul(a.group.inv(g), h);
    if (!in_domain(gh, x)) return false;
    int hg = a.group.mul(a.group.inv(h), g);
    auto it = a.maps[hg].find(x);
    return it != a.maps[hg].end() && it->second == y;
  };

  // The relation is an equivalence only under the axioms; verify it outright
  // so a defective input can never silently produce a garbage quotient.
  const int words = (total + 63) / 64;
  std::vector<std::uint64_t> rel(static_cast<std::size_t>(total) * words, 0);
  auto rel_row = [&](int p) { return rel.data() + static_cast<std::size_t>(p) * words; };
  auto rel_get = [&](int p, int q) {
    return (rel_row(p)[q >> 6] >> (q & 63)) & 1u;
  };
  for (int g = 0; g < m; ++g)
    for (int x = 0; x < n; ++x)
      for (int h = 0; h < m; ++h)
        for (int y = 0; y < n; ++y)
          if (related(g, x, h, y)) {
            int p = pair_id(g, x), q = pair_id(h, y);
            rel_row(p)[q >> 6] |= std::uint64_t(1) << (q & 63);
          }
  for (int p = 0; p < total; ++p)
    if (!rel_get(p, p))
      throw std::invalid_argument("globalization relation is not reflexive");
  for (int p = 0; p < total; ++p)
    for (int q = 0; q < total; ++q)
      if (rel_get(p, q) != rel_get(q, p))
        throw std::invalid_argument("globalization relation is not symmetric");
  for (int p = 0; p < total; ++p)
    for (int q = 0; q < total; ++q)
      if (rel_get(p, q))
        for (int w = 0; w < words; ++w)
          if (rel_row(q)[w] & ~rel_row(p)[w])
            throw std::invalid_argument(
                "globalization relation is not transitive");

  DisjointSet dsu(total);
  for (int p = 0; p < total; ++p)
    for (int q = p + 1; q < total; ++q)
      if (rel_get(p, q)) dsu.unite(p, q);

  // Canonical representative order: lexicographic (group, carrier) by
  // default, or a seeded shuffle of the pair order.
  std::vector<int> order_key(total);
  for (int p = 0; p < total; ++p) order_key[p] = p;
  if (opts.shuffle_seed) {
    std::vector<int> perm(total);
    for (int p = 0; p < total; ++p) perm[p] = p;
    std::mt19937_64 rng(*opts.shuffle_seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int pos = 0; pos < total; ++pos) order_key[perm[pos]] = pos;
  }

  std::map<int, std::vector<int>> members_by_root;
  for (int p = 0; p < total; ++p) members_by_root[dsu.find(p)].push_back(p);

  std::vector<std::pair<int, int>> rep_and_root;  // (order key of rep, root)
  for (auto& [root, members] : members_by_root) {
    int best = members.front();
    for (int p : members)
      if (order_key[p] < order_key[best]) best = p;
    rep_and_root.emplace_back(order_key[best], root);
  }
  std::sort(rep_and_root.begin(), rep_and_root.end());

  SetGlobalization result;
  result.global.group = a.group;
  std::vector<int> class_of(total, -1);
  for (std::size_t c = 0; c < rep_and_root.size(); ++c) {
    auto& members = members_by_root[rep_and_root[c].second];
    std::vector<std::pair<int, int>> pairs;
    for (int p : members) pairs.emplace_back(p / n, p % n);
    std::sort(pairs.begin(), pairs.end());
    for (int p : members) class_of[p] = static_cast<int>(c);
    int rep = -1;
    for (int p : members)
      if (rep < 0 || order_key[p] < order_key[rep]) rep = p;
    result.global.carrier.push_back("(" + a.group.name(rep / n) + "," +
                                    a.carrier[rep % n] + ")");
    result.classes.push_back(std::move(pairs));
  }

  const int n_classes = static_cast<int>(result.classes.size());
  result.global.action.assign(m, std::vector<int>(n_classes, -1));
  for (int g = 0; g < m; ++g)
    for (int c = 0; c < n_classes; ++c) {
      int image = -1;
      for (const auto& [h, x] : result.classes[c]) {
        int candidate = class_of[pair_id(a.group.mul(g, h), x)];
        if (image < 0) image = candidate;
        if (candidate != image)
          throw std::logic_error(
              "globalized action is not well defined on a class");
      }
      result.global.action[g][c] = image;
    }

  result.embedding.resize(n);
  for (int x = 0; x < n; ++x)
    result.embedding[x] = class_of[pair_id(a.group.identity(), x)];
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (result.embedding[x] == result.embedding[y])
        throw std::logic_error("globalization embedding is not injective");

  // Restricting along the embedding must reproduce the input exactly.
  std::vector<bool> embedded(n_classes, false);
  for (int x = 0; x < n; ++x) embedded[result.embedding[x]] = true;
  for (int g = 0; g < m; ++g) {
    for (int x = 0; x < n; ++x) {
      int image_class = result.global.action[g][result.embedding[x]];
      bool in_restriction = embedded[image_class];
      bool declared = in_domain(a.group.inv(g), x);
      if (in_restriction != declared)
        throw std::logic_error(
            "restriction of the globalization disagrees with the input domain");
      if (declared) {
        int expected = result.embedding[a.maps[g].at(x)];
        if (image_class != expected)
          throw std::logic_error(
              "restriction of the globalization disagrees with the input map");
      }
    }
  }

  // Minimality: every class is beta_g of an embedded point.
  for (int c = 0; c < n_classes; ++c)
    if (result.classes[c].empty())
      throw std::logic_error("globalization produced an empty class");

  return result;
}

SetPartialAction restrict_set_action(const GlobalSetAction& b,
                                     const std::vector<std::string>& subset) {
  const int n = static_cast<int>(b.carrier.size());
  std::map<std::string, int> carrier_pos;
  for (int i = 0; i < n; ++i) carrier_pos.emplace(b.carrier[i], i);

  std::vector<bool> chosen(n, false);
  for (const auto& name : subset) {
    auto it = carrier_pos.find(name);
    if (it == carrier_pos.end())
      throw std::invalid_argument("subset element '" + name +
                                  "' is not in the carrier");
    chosen[it->second] = true;
  }

  std::vector<int> members;  // parent indices, ascending
  std::vector<int> pos_in_sub(n, -1);
  for (int i = 0; i < n; ++i)
    if (chosen[i]) {
      pos_in_sub[i] = static_cast<int>(members.size());
      members.push_back(i);
    }

  SetPartialAction a;
  a.group = b.group;
  for (int i : members) a.carrier.push_back(b.carrier[i]);
  const int m = b.group.size();
  a.domains.resize(m);
  a.maps.resize(m);
  for (int g = 0; g < m; ++g) {
    // X_g = beta_g(S) ∩ S
    for (int i : members)
      if (chosen[b.action[g][i]]) a.domains[g].push_back(pos_in_sub[b.action[g][i]]);
    std::sort(a.domains[g].begin(), a.domains[g].end());
    // alpha_g = beta_g on X_{g^-1}
    for (int i : members) {
      int j = b.action[g][i];
      if (chosen[j]) a.maps[g].emplace(pos_in_sub[i], pos_in_sub[j]);
    }
  }
  return a;
}

}  // namespace qpa
