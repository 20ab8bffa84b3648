#include "quiverpa/instance.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace qpa {

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

// whitespace-separated tokens, with {...} groups kept whole
std::vector<Token> tokenize(const std::string& line, int line_no) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (line[i] == '{') {
      auto close = line.find('}', i);
      if (close == std::string::npos)
        throw ParseError(line_no, static_cast<int>(i) + 1, "unclosed '{'");
      i = close + 1;
    } else {
      while (i < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[i])) &&
             line[i] != '{')
        ++i;
    }
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

// comma-separated identifiers inside braces; commas nested in parentheses
// belong to the identifier (canonical class names look like "(e,v1)")
std::vector<std::string> parse_list(const Token& tok, int line_no) {
  const std::string& s = tok.text;
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw ParseError(line_no, tok.column, "expected a {...} list");
  std::string inner = s.substr(1, s.size() - 2);
  std::vector<std::string> items;
  std::string current;
  int depth = 0;
  auto flush = [&]() {
    std::size_t a = current.find_first_not_of(" \t");
    if (a == std::string::npos) {
      current.clear();
      return false;
    }
    std::size_t b = current.find_last_not_of(" \t");
    items.push_back(current.substr(a, b - a + 1));
    current.clear();
    return true;
  };
  bool saw_comma = false;
  for (char c : inner) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      if (!flush())
        throw ParseError(line_no, tok.column, "empty item in list");
      saw_comma = true;
    } else {
      current += c;
    }
  }
  if (!flush() && saw_comma)
    throw ParseError(line_no, tok.column, "trailing comma in list");
  return items;
}

int parse_int(const Token& tok, int line_no) {
  try {
    std::size_t used = 0;
    int value = std::stoi(tok.text, &used);
    if (used != tok.text.size()) throw std::invalid_argument("trailing junk");
    return value;
  } catch (const std::exception&) {
    throw ParseError(line_no, tok.column,
                     "expected an integer, got '" + tok.text + "'");
  }
}

void expect_count(const std::vector<Token>& tokens, std::size_t n, int line_no,
                  const std::string& usage) {
  if (tokens.size() != n)
    throw ParseError(line_no, tokens.empty() ? 1 : tokens.back().column,
                     "expected: " + usage);
}

void expect_keyword(const Token& tok, const std::string& kw, int line_no) {
  if (tok.text != kw)
    throw ParseError(line_no, tok.column,
                     "expected '" + kw + "', got '" + tok.text + "'");
}

enum class Block { none, group_table, quiver, global, partial };

}  // namespace

InstanceDocument parse_instance(const std::string& text) {
  InstanceDocument doc;
  Block block = Block::none;
  int block_line = 0;

  std::istringstream stream(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    auto tokens = tokenize(raw, line_no);
    if (tokens.empty()) continue;
    const std::string& head = tokens[0].text;

    if (block == Block::group_table) {
      auto& table = *doc.group->table;
      if (head == "end") {
        expect_count(tokens, 1, line_no, "end");
        block = Block::none;
      } else if (head == "elements") {
        if (tokens.size() < 2)
          throw ParseError(line_no, tokens[0].column,
                           "expected: elements <id> ...");
        for (std::size_t i = 1; i < tokens.size(); ++i)
          table.elements.push_back(tokens[i].text);
      } else if (head == "identity") {
        expect_count(tokens, 2, line_no, "identity <id>");
        table.identity = tokens[1].text;
      } else if (head == "mul") {
        expect_count(tokens, 5, line_no, "mul <a> <b> -> <c>");
        expect_keyword(tokens[3], "->", line_no);
        table.products.push_back({tokens[1].text, tokens[2].text, tokens[4].text});
      } else {
        throw ParseError(line_no, tokens[0].column,
                         "unknown group-table line '" + head + "'");
      }
      continue;
    }

    if (block == Block::quiver) {
      auto& decl = doc.quivers.back();
      if (head == "end") {
        expect_count(tokens, 1, line_no, "end");
        block = Block::none;
      } else if (head == "vertex") {
        expect_count(tokens, 2, line_no, "vertex <id>");
        decl.vertices.push_back({tokens[1].text, line_no});
      } else if (head == "arrow") {
        expect_count(tokens, 6, line_no, "arrow <id> : <src> -> <tgt>");
        expect_keyword(tokens[2], ":", line_no);
        expect_keyword(tokens[4], "->", line_no);
        decl.arrows.push_back({tokens[1].text, tokens[3].text, tokens[5].text,
                               line_no});
      } else {
        throw ParseError(line_no, tokens[0].column,
                         "unknown quiver line '" + head + "'");
      }
      continue;
    }

    if (block == Block::global) {
      auto& decl = *doc.global;
      if (head == "end") {
        expect_count(tokens, 1, line_no, "end");
        block = Block::none;
      } else if (head == "act") {
        expect_count(tokens, 6, line_no, "act <g> vertex|arrow <x> -> <y>");
        expect_keyword(tokens[4], "->", line_no);
        bool vertex;
        if (tokens[2].text == "vertex") vertex = true;
        else if (tokens[2].text == "arrow") vertex = false;
        else
          throw ParseError(line_no, tokens[2].column,
                           "expected 'vertex' or 'arrow'");
        decl.acts.push_back(
            {tokens[1].text, vertex, tokens[3].text, tokens[5].text, line_no});
      } else {
        throw ParseError(line_no, tokens[0].column,
                         "unknown global-action line '" + head + "'");
      }
      continue;
    }

    if (block == Block::partial) {
      auto& decl = *doc.partial;
      if (head == "end") {
        expect_count(tokens, 1, line_no, "end");
        block = Block::none;
      } else if (head == "domain") {
        expect_count(tokens, 6, line_no,
                     "domain <g> vertices {...} arrows {...}");
        expect_keyword(tokens[2], "vertices", line_no);
        expect_keyword(tokens[4], "arrows", line_no);
        DomainLine dom;
        dom.element = tokens[1].text;
        dom.vertices = parse_list(tokens[3], line_no);
        dom.arrows = parse_list(tokens[5], line_no);
        dom.line = line_no;
        decl.domains.push_back(std::move(dom));
      } else if (head == "map") {
        MapLine map;
        map.element = tokens.size() > 1 ? tokens[1].text : "";
        map.line = line_no;
        if (tokens.size() == 6) {
          if (tokens[2].text == "vertex") map.sort = MapSort::vertex;
          else if (tokens[2].text == "arrow") map.sort = MapSort::arrow;
          else
            throw ParseError(line_no, tokens[2].column,
                             "expected 'vertex' or 'arrow'");
          expect_keyword(tokens[4], "->", line_no);
          map.from = tokens[3].text;
          map.to = tokens[5].text;
        } else if (tokens.size() == 5) {
          expect_keyword(tokens[3], "->", line_no);
          map.sort = MapSort::automatic;
          map.from = tokens[2].text;
          map.to = tokens[4].text;
        } else {
          throw ParseError(line_no, tokens[0].column,
                           "expected: map <g> [vertex|arrow] <x> -> <y>");
        }
        decl.maps.push_back(std::move(map));
      } else {
        throw ParseError(line_no, tokens[0].column,
                         "unknown partial-action line '" + head + "'");
      }
      continue;
    }

    // top level
    if (head == "group") {
      if (doc.group)
        throw ParseError(line_no, tokens[0].column, "duplicate group block");
      if (tokens.size() >= 2 && tokens[1].text == "cyclic") {
        expect_count(tokens, 3, line_no, "group cyclic <n>");
        GroupDecl g;
        g.cyclic_order = parse_int(tokens[2], line_no);
        doc.group = std::move(g);
      } else if (tokens.size() >= 2 && tokens[1].text == "table") {
        expect_count(tokens, 3, line_no, "group table <name>");
        GroupDecl g;
        g.table = GroupTableDecl{};
        g.table->name = tokens[2].text;
        doc.group = std::move(g);
        block = Block::group_table;
        block_line = line_no;
      } else {
        throw ParseError(line_no, tokens[0].column,
                         "expected 'group cyclic <n>' or 'group table <name>'");
      }
    } else if (head == "quiver") {
      expect_count(tokens, 2, line_no, "quiver <name>");
      for (const auto& q : doc.quivers)
        if (q.name == tokens[1].text)
          throw ParseError(line_no, tokens[1].column,
                           "duplicate quiver '" + tokens[1].text + "'");
      doc.quivers.push_back(QuiverDecl{tokens[1].text, {}, {}});
      block = Block::quiver;
      block_line = line_no;
    } else if (head == "global") {
      if (doc.global)
        throw ParseError(line_no, tokens[0].column, "duplicate global block");
      expect_count(tokens, 4, line_no, "global <name> on <quiver>");
      expect_keyword(tokens[2], "on", line_no);
      doc.global = GlobalDecl{tokens[1].text, tokens[3].text, {}};
      block = Block::global;
      block_line = line_no;
    } else if (head == "partial") {
      if (doc.partial)
        throw ParseError(line_no, tokens[0].column, "duplicate partial block");
      expect_count(tokens, 4, line_no, "partial <name> on <quiver>");
      expect_keyword(tokens[2], "on", line_no);
      doc.partial = PartialDecl{tokens[1].text, tokens[3].text, {}, {}};
      block = Block::partial;
      block_line = line_no;
    } else if (head == "restrict") {
      if (doc.restriction)
        throw ParseError(line_no, tokens[0].column, "duplicate restrict line");
      expect_count(tokens, 7, line_no,
                   "restrict <global> to vertices {...} arrows {...}");
      expect_keyword(tokens[2], "to", line_no);
      expect_keyword(tokens[3], "vertices", line_no);
      expect_keyword(tokens[5], "arrows", line_no);
      RestrictDecl r;
      r.global = tokens[1].text;
      r.vertices = parse_list(tokens[4], line_no);
      r.arrows = parse_list(tokens[6], line_no);
      r.line = line_no;
      doc.restriction = std::move(r);
    } else if (head == "truncate") {
      if (doc.truncate)
        throw ParseError(line_no, tokens[0].column, "duplicate truncate line");
      expect_count(tokens, 2, line_no, "truncate <L>");
      doc.truncate = parse_int(tokens[1], line_no);
    } else {
      throw ParseError(line_no, tokens[0].column,
                       "unknown directive '" + head + "'");
    }
  }
  if (block != Block::none)
    throw ParseError(block_line, 1, "block is never closed with 'end'");
  if (!doc.group && doc.quivers.empty() && !doc.global && !doc.partial &&
      !doc.restriction)
    throw ParseError(1, 1, "empty document: no subject");
  return doc;
}

namespace {

std::string list_text(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    out += items[i];
  }
  out += '}';
  return out;
}

}  // namespace

std::string serialize_instance(const InstanceDocument& doc) {
  std::string out;
  if (doc.group) {
    if (doc.group->cyclic_order > 0) {
      out += "group cyclic " + std::to_string(doc.group->cyclic_order) + "\n";
    } else if (doc.group->table) {
      const auto& t = *doc.group->table;
      out += "group table " + t.name + "\n";
      out += "  elements";
      for (const auto& e : t.elements) out += " " + e;
      out += "\n  identity " + t.identity + "\n";
      for (const auto& p : t.products)
        out += "  mul " + p[0] + " " + p[1] + " -> " + p[2] + "\n";
      out += "end\n";
    }
  }
  for (const auto& q : doc.quivers) {
    out += "quiver " + q.name + "\n";
    for (const auto& v : q.vertices) out += "  vertex " + v.id + "\n";
    for (const auto& a : q.arrows)
      out += "  arrow " + a.id + " : " + a.source + " -> " + a.target + "\n";
    out += "end\n";
  }
  if (doc.global) {
    out += "global " + doc.global->name + " on " + doc.global->quiver + "\n";
    for (const auto& act : doc.global->acts)
      out += "  act " + act.element + (act.vertex ? " vertex " : " arrow ") +
             act.from + " -> " + act.to + "\n";
    out += "end\n";
  }
  if (doc.partial) {
    out += "partial " + doc.partial->name + " on " + doc.partial->quiver + "\n";
    for (const auto& dom : doc.partial->domains)
      out += "  domain " + dom.element + " vertices " + list_text(dom.vertices) +
             " arrows " + list_text(dom.arrows) + "\n";
    for (const auto& map : doc.partial->maps) {
      out += "  map " + map.element;
      if (map.sort == MapSort::vertex) out += " vertex";
      if (map.sort == MapSort::arrow) out += " arrow";
      out += " " + map.from + " -> " + map.to + "\n";
    }
    out += "end\n";
  }
  if (doc.restriction)
    out += "restrict " + doc.restriction->global + " to vertices " +
           list_text(doc.restriction->vertices) + " arrows " +
           list_text(doc.restriction->arrows) + "\n";
  if (doc.truncate) out += "truncate " + std::to_string(*doc.truncate) + "\n";
  return out;
}

const Quiver* ResolvedInstance::find_quiver(const std::string& name) const {
  for (std::size_t i = 0; i < quiver_names.size(); ++i)
    if (quiver_names[i] == name) return &quivers[i];
  return nullptr;
}

namespace {

[[noreturn]] void input_error(const std::string& message) {
  throw BuildError(BuildError::Kind::input, message);
}

[[noreturn]] void input_error_at(int line, const std::string& message) {
  input_error("line " + std::to_string(line) + ": " + message);
}

Quiver build_quiver(const QuiverDecl& decl) {
  std::set<std::string> vertex_ids, arrow_ids;
  std::vector<std::string> vertices;
  for (const auto& v : decl.vertices) {
    if (!vertex_ids.insert(v.id).second)
      input_error_at(v.line, "duplicate vertex '" + v.id + "' in quiver '" +
                                 decl.name + "'");
    vertices.push_back(v.id);
  }
  std::vector<Arrow> arrows;
  for (const auto& a : decl.arrows) {
    if (!arrow_ids.insert(a.id).second)
      input_error_at(a.line, "duplicate arrow '" + a.id + "' in quiver '" +
                                 decl.name + "'");
    if (!vertex_ids.count(a.source))
      input_error_at(a.line, "arrow '" + a.id + "' refers to unknown vertex '" +
                                 a.source + "'");
    if (!vertex_ids.count(a.target))
      input_error_at(a.line, "arrow '" + a.id + "' refers to unknown vertex '" +
                                 a.target + "'");
    arrows.push_back(Arrow{a.id, a.source, a.target});
  }
  return Quiver(std::move(vertices), std::move(arrows));
}

GlobalQuiverAction build_global(const GlobalDecl& decl, const FiniteGroup& group,
                                const Quiver& quiver) {
  const int m = group.size();
  const int nv = quiver.n_vertices();
  const int na = quiver.n_arrows();

  // collect generator images
  std::map<int, std::pair<std::vector<int>, std::vector<int>>> generators;
  for (const auto& act : decl.acts) {
    if (!group.has(act.element))
      input_error_at(act.line, "unknown group element '" + act.element + "'");
    int g = group.index(act.element);
    auto& [vm, am] = generators
                         .try_emplace(g, std::vector<int>(nv, -1),
                                      std::vector<int>(na, -1))
                         .first->second;
    if (act.vertex) {
      int from = quiver.vertex_index(act.from);
      int to = quiver.vertex_index(act.to);
      if (from < 0)
        input_error_at(act.line, "unknown vertex '" + act.from + "'");
      if (to < 0) input_error_at(act.line, "unknown vertex '" + act.to + "'");
      if (vm[from] >= 0 && vm[from] != to)
        input_error_at(act.line, "conflicting images for vertex '" + act.from +
                                     "' under " + act.element);
      vm[from] = to;
    } else {
      int from = quiver.arrow_index(act.from);
      int to = quiver.arrow_index(act.to);
      if (from < 0) input_error_at(act.line, "unknown arrow '" + act.from + "'");
      if (to < 0) input_error_at(act.line, "unknown arrow '" + act.to + "'");
      if (am[from] >= 0 && am[from] != to)
        input_error_at(act.line, "conflicting images for arrow '" + act.from +
                                     "' under " + act.element);
      am[from] = to;
    }
  }
  if (generators.empty() && m > 1)
    input_error("global action '" + decl.name + "' declares no act lines");
  for (const auto& [g, maps] : generators) {
    for (int v = 0; v < nv; ++v)
      if (maps.first[v] < 0)
        input_error("act lines for " + group.name(g) +
                    " do not cover vertex '" + quiver.vertex_name(v) + "'");
    for (int a = 0; a < na; ++a)
      if (maps.second[a] < 0)
        input_error("act lines for " + group.name(g) + " do not cover arrow '" +
                     quiver.arrow(a).id + "'");
  }

  // complete by composition, checking consistency against the group table
  std::map<int, std::pair<std::vector<int>, std::vector<int>>> known;
  {
    std::vector<int> idv(nv), ida(na);
    for (int v = 0; v < nv; ++v) idv[v] = v;
    for (int a = 0; a < na; ++a) ida[a] = a;
    known.emplace(group.identity(), std::make_pair(idv, ida));
  }
  auto reconcile = [&](int g, std::pair<std::vector<int>, std::vector<int>> maps)
      -> bool {
    auto it = known.find(g);
    if (it == known.end()) {
      known.emplace(g, std::move(maps));
      return true;
    }
    if (it->second != maps)
      throw BuildError(BuildError::Kind::invalid,
                       "act images are inconsistent with the group table at " +
                           group.name(g));
    return false;
  };
  for (const auto& [g, maps] : generators) reconcile(g, maps);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::pair<int, std::pair<std::vector<int>, std::vector<int>>>>
        snapshot(known.begin(), known.end());
    for (const auto& [k, kmaps] : snapshot)
      for (const auto& [s, smaps] : generators) {
        int t = group.mul(s, k);
        std::vector<int> vm(nv), am(na);
        for (int v = 0; v < nv; ++v) vm[v] = smaps.first[kmaps.first[v]];
        for (int a = 0; a < na; ++a) am[a] = smaps.second[kmaps.second[a]];
        if (reconcile(t, {std::move(vm), std::move(am)})) grew = true;
      }
  }
  for (int g = 0; g < m; ++g)
    if (!known.count(g))
      input_error("group element " + group.name(g) +
                  " is not generated by the declared act elements");

  GlobalQuiverAction action;
  action.group = group;
  action.quiver = quiver;
  action.vertex_action.resize(m);
  action.arrow_action.resize(m);
  for (int g = 0; g < m; ++g) {
    action.vertex_action[g] = known.at(g).first;
    action.arrow_action[g] = known.at(g).second;
  }
  return action;
}

QuiverPartialAction build_partial(const PartialDecl& decl,
                                  const FiniteGroup& group,
                                  const Quiver& quiver) {
  const int m = group.size();
  QuiverPartialAction a;
  a.group = group;
  a.quiver = quiver;
  a.domains.resize(m);
  a.vertex_maps.resize(m);
  a.arrow_maps.resize(m);
  for (int g = 0; g < m; ++g) {
    a.domains[g].parent = quiver;
  }

  std::set<int> declared_domains;
  for (const auto& dom : decl.domains) {
    if (!group.has(dom.element))
      input_error_at(dom.line, "unknown group element '" + dom.element + "'");
    int g = group.index(dom.element);
    if (!declared_domains.insert(g).second)
      input_error_at(dom.line, "duplicate domain for " + dom.element);
    try {
      a.domains[g] = Subquiver::of(quiver, dom.vertices, dom.arrows);
    } catch (const std::invalid_argument& err) {
      input_error_at(dom.line, err.what());
    }
  }

  std::set<int> declared_maps;
  for (const auto& map : decl.maps) {
    if (!group.has(map.element))
      input_error_at(map.line, "unknown group element '" + map.element + "'");
    int g = group.index(map.element);
    declared_maps.insert(g);
    MapSort sort = map.sort;
    if (sort == MapSort::automatic) {
      bool is_vertex = quiver.vertex_index(map.from) >= 0;
      bool is_arrow = quiver.arrow_index(map.from) >= 0;
      if (is_vertex && is_arrow)
        input_error_at(map.line, "'" + map.from +
                                     "' names both a vertex and an arrow; "
                                     "use 'map <g> vertex ...' or 'map <g> "
                                     "arrow ...'");
      if (!is_vertex && !is_arrow)
        input_error_at(map.line, "unknown identifier '" + map.from + "'");
      sort = is_vertex ? MapSort::vertex : MapSort::arrow;
    }
    if (sort == MapSort::vertex) {
      int from = quiver.vertex_index(map.from);
      int to = quiver.vertex_index(map.to);
      if (from < 0) input_error_at(map.line, "unknown vertex '" + map.from + "'");
      if (to < 0) input_error_at(map.line, "unknown vertex '" + map.to + "'");
      if (!a.vertex_maps[g].emplace(from, to).second)
        input_error_at(map.line, "duplicate map for vertex '" + map.from +
                                     "' under " + map.element);
    } else {
      int from = quiver.arrow_index(map.from);
      int to = quiver.arrow_index(map.to);
      if (from < 0) input_error_at(map.line, "unknown arrow '" + map.from + "'");
      if (to < 0) input_error_at(map.line, "unknown arrow '" + map.to + "'");
      if (!a.arrow_maps[g].emplace(from, to).second)
        input_error_at(map.line, "duplicate map for arrow '" + map.from +
                                     "' under " + map.element);
    }
  }

  // the identity domain and map are forced by definition; fill them in
  // unless the document chose to spell them out
  const int e = group.identity();
  if (!declared_domains.count(e) && !declared_maps.count(e)) {
    a.domains[e] = Subquiver::full(quiver);
    for (int v = 0; v < quiver.n_vertices(); ++v) a.vertex_maps[e].emplace(v, v);
    for (int x = 0; x < quiver.n_arrows(); ++x) a.arrow_maps[e].emplace(x, x);
  }
  return a;
}

}  // namespace

ResolvedInstance build_instance(const InstanceDocument& doc) {
  ResolvedInstance r;
  if (doc.group) {
    try {
      if (doc.group->cyclic_order != 0 || !doc.group->table) {
        r.group = FiniteGroup::cyclic(doc.group->cyclic_order);
      } else {
        const auto& t = *doc.group->table;
        std::map<std::pair<std::string, std::string>, std::string> products;
        for (const auto& p : t.products) {
          if (!products.emplace(std::make_pair(p[0], p[1]), p[2]).second)
            input_error("duplicate product " + p[0] + " * " + p[1] +
                        " in group '" + t.name + "'");
        }
        r.group = FiniteGroup::from_table(t.elements, t.identity, products);
      }
    } catch (const BuildError&) {
      throw;
    } catch (const std::exception& err) {
      input_error(err.what());
    }
  }

  for (const auto& decl : doc.quivers) {
    r.quiver_names.push_back(decl.name);
    r.quivers.push_back(build_quiver(decl));
  }

  if (doc.global) {
    if (!r.group) input_error("global action needs a group block");
    const Quiver* q = r.find_quiver(doc.global->quiver);
    if (!q)
      input_error("global action refers to unknown quiver '" +
                  doc.global->quiver + "'");
    r.global = build_global(*doc.global, *r.group, *q);
  }

  if (doc.partial) {
    if (!r.group) input_error("partial action needs a group block");
    const Quiver* q = r.find_quiver(doc.partial->quiver);
    if (!q)
      input_error("partial action refers to unknown quiver '" +
                  doc.partial->quiver + "'");
    r.partial = build_partial(*doc.partial, *r.group, *q);
  }

  if (doc.restriction) {
    if (!r.global)
      input_error_at(doc.restriction->line,
                     "restrict refers to global action '" +
                         doc.restriction->global + "', which is not declared");
    if (doc.restriction->global != doc.global->name)
      input_error_at(doc.restriction->line,
                     "restrict refers to unknown global action '" +
                         doc.restriction->global + "'");
    if (doc.partial)
      input_error_at(doc.restriction->line,
                     "a document cannot declare both a partial action and a "
                     "restriction; pick one subject");
    try {
      r.restriction = Subquiver::of(r.global->quiver, doc.restriction->vertices,
                                    doc.restriction->arrows);
    } catch (const std::invalid_argument& err) {
      input_error_at(doc.restriction->line, err.what());
    }
  }

  if (doc.truncate) {
    if (*doc.truncate < 0) input_error("truncate must be non-negative");
    r.truncate = *doc.truncate;
  }
  return r;
}

InstanceDocument document_for_partial_action(const GroupDecl& group,
                                             const std::string& quiver_name,
                                             const std::string& action_name,
                                             const QuiverPartialAction& a) {
  InstanceDocument doc;
  doc.group = group;

  QuiverDecl qd;
  qd.name = quiver_name;
  for (const auto& v : a.quiver.vertices()) qd.vertices.push_back({v, 0});
  for (const auto& arrow : a.quiver.arrows())
    qd.arrows.push_back({arrow.id, arrow.source, arrow.target, 0});
  doc.quivers.push_back(std::move(qd));

  PartialDecl pd;
  pd.name = action_name;
  pd.quiver = quiver_name;
  const int e = a.group.identity();
  for (int g = 0; g < a.group.size(); ++g) {
    if (g == e) continue;
    DomainLine dom;
    dom.element = a.group.name(g);
    for (int v : a.domains[g].vertices)
      dom.vertices.push_back(a.quiver.vertex_name(v));
    for (int x : a.domains[g].arrows)
      dom.arrows.push_back(a.quiver.arrow(x).id);
    pd.domains.push_back(std::move(dom));
    for (const auto& [from, to] : a.vertex_maps[g])
      pd.maps.push_back({a.group.name(g), MapSort::vertex,
                         a.quiver.vertex_name(from), a.quiver.vertex_name(to),
                         0});
    for (const auto& [from, to] : a.arrow_maps[g])
      pd.maps.push_back({a.group.name(g), MapSort::arrow,
                         a.quiver.arrow(from).id, a.quiver.arrow(to).id, 0});
  }
  doc.partial = std::move(pd);
  return doc;
}

}  // namespace qpa
