#include "quiverpa/group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qpa {

namespace {

std::string perm_name(const std::vector<int>& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  s += ']';
  return s;
}

std::vector<int> perm_compose(const std::vector<int>& a,
                              const std::vector<int>& b) {
  // apply b first, then a
  std::vector<int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

}  // namespace

void FiniteGroup::build_index() {
  index_.clear();
  for (int i = 0; i < size(); ++i) index_.emplace(elements_[i], i);
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
  FiniteGroup g;
  g.elements_.reserve(n);
  g.elements_.push_back("e");
  for (int k = 1; k < n; ++k)
    g.elements_.push_back(k == 1 ? "t" : "t" + std::to_string(k));
  g.mul_.resize(static_cast<std::size_t>(n) * n);
  g.inv_.resize(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) g.mul_[a * n + b] = (a + b) % n;
    g.inv_[a] = (n - a) % n;
  }
  g.identity_ = 0;
  g.build_index();
  return g;
}

FiniteGroup FiniteGroup::from_table(
    std::vector<std::string> elements, const std::string& identity,
    const std::map<std::pair<std::string, std::string>, std::string>& table) {
  FiniteGroup g;
  g.elements_ = std::move(elements);
  {
    std::set<std::string> seen;
    for (const auto& e : g.elements_)
      if (!seen.insert(e).second)
        throw std::invalid_argument("duplicate group element '" + e + "'");
  }
  g.build_index();
  auto it = g.index_.find(identity);
  if (it == g.index_.end())
    throw std::invalid_argument("identity '" + identity +
                                "' is not in the element list");
  g.identity_ = it->second;

  const int n = g.size();
  g.mul_.assign(static_cast<std::size_t>(n) * n, -1);
  for (const auto& [key, value] : table) {
    auto a = g.index_.find(key.first);
    auto b = g.index_.find(key.second);
    auto c = g.index_.find(value);
    if (a == g.index_.end() || b == g.index_.end() || c == g.index_.end())
      throw std::invalid_argument("product entry " + key.first + " * " +
                                  key.second + " -> " + value +
                                  " mentions an unknown element");
    g.mul_[a->second * n + b->second] = c->second;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mul_[a * n + b] < 0)
        throw std::invalid_argument("multiplication table is missing " +
                                    g.elements_[a] + " * " + g.elements_[b]);

  // Best-effort inverses; validate() reports elements without one.
  g.inv_.resize(n);
  for (int a = 0; a < n; ++a) {
    g.inv_[a] = a;
    for (int b = 0; b < n; ++b) {
      if (g.mul_[a * n + b] == g.identity_ && g.mul_[b * n + a] == g.identity_) {
        g.inv_[a] = b;
        break;
      }
    }
  }
  return g;
}

FiniteGroup FiniteGroup::from_permutations(
    const std::vector<std::vector<int>>& generators,
    std::size_t max_elements) {
  if (generators.empty())
    throw std::invalid_argument("need at least one generating permutation");
  const std::size_t n = generators[0].size();
  for (const auto& p : generators) {
    if (p.size() != n)
      throw std::invalid_argument("generators act on different point counts");
    std::vector<bool> hit(n, false);
    for (int v : p) {
      if (v < 0 || static_cast<std::size_t>(v) >= n || hit[v])
        throw std::invalid_argument("generator is not a permutation");
      hit[v] = true;
    }
  }

  std::vector<int> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);

  std::set<std::vector<int>> closure{id};
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier) {
      for (const auto& gen : generators) {
        auto q = perm_compose(gen, p);
        if (closure.insert(q).second) {
          if (closure.size() > max_elements)
            throw std::runtime_error(
                "permutation closure exceeds the size cap of " +
                std::to_string(max_elements) + " elements");
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }

  // identity first, the rest in lexicographic order
  std::vector<std::vector<int>> elems(closure.begin(), closure.end());
  auto id_pos = std::find(elems.begin(), elems.end(), id);
  std::rotate(elems.begin(), id_pos, id_pos + 1);

  FiniteGroup g;
  const int m = static_cast<int>(elems.size());
  for (const auto& p : elems) g.elements_.push_back(perm_name(p));
  g.identity_ = 0;
  g.build_index();

  std::map<std::vector<int>, int> pos;
  for (int i = 0; i < m; ++i) pos.emplace(elems[i], i);
  g.mul_.resize(static_cast<std::size_t>(m) * m);
  g.inv_.resize(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      g.mul_[a * m + b] = pos.at(perm_compose(elems[a], elems[b]));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (g.mul_[a * m + b] == 0 && g.mul_[b * m + a] == 0) {
        g.inv_[a] = b;
        break;
      }
  return g;
}

int FiniteGroup::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end())
    throw std::invalid_argument("unknown group element '" + name + "'");
  return it->second;
}

bool FiniteGroup::has(const std::string& name) const {
  return index_.count(name) != 0;
}

std::string FiniteGroup::mul(const std::string& a, const std::string& b) const {
  return elements_[mul(index(a), index(b))];
}

std::string FiniteGroup::inv(const std::string& a) const {
  return elements_[inv(index(a))];
}

ValidationReport FiniteGroup::validate() const {
  ValidationReport report;
  const int n = size();
  for (int a = 0; a < n; ++a) {
    if (mul(identity_, a) != a)
      report.add("identity", "e * " + elements_[a] + " = " +
                                 elements_[mul(identity_, a)] + ", expected " +
                                 elements_[a]);
    if (mul(a, identity_) != a)
      report.add("identity", elements_[a] + " * e = " +
                                 elements_[mul(a, identity_)] + ", expected " +
                                 elements_[a]);
  }
  for (int a = 0; a < n; ++a) {
    if (mul(a, inv_[a]) != identity_ || mul(inv_[a], a) != identity_)
      report.add("inverse",
                 "no two-sided inverse recorded for " + elements_[a]);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int left = mul(mul(a, b), c);
        int right = mul(a, mul(b, c));
        if (left != right)
          report.add("associativity",
                     "(" + elements_[a] + " * " + elements_[b] + ") * " +
                         elements_[c] + " = " + elements_[left] + " but " +
                         elements_[a] + " * (" + elements_[b] + " * " +
                         elements_[c] + ") = " + elements_[right]);
      }
  return report;
}

}  // namespace qpa
