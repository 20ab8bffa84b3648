#include "quiverpa/commands.hpp"

#include <functional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "quiverpa/instance.hpp"
#include "quiverpa/pathalg.hpp"
#include "quiverpa/quiver_paction.hpp"

namespace qpa {

namespace {

using nlohmann::json;

json report_json(const ValidationReport& report) {
  json items = json::array();
  for (const auto& item : report.items)
    items.push_back({{"clause", item.clause}, {"message", item.message}});
  return items;
}

std::string report_text(const ValidationReport& report,
                        const std::string& indent) {
  std::string out;
  for (const auto& item : report.items)
    out += indent + item.clause + ": " + item.message + "\n";
  return out;
}

int effective_truncate(const CommandOptions& opts, const ResolvedInstance& r) {
  return opts.truncate >= 0 ? opts.truncate : r.truncate;
}

// The one partial-action subject of a document: an explicit partial block,
// or the restriction of the declared global action.
QuiverPartialAction subject_partial(const ResolvedInstance& r) {
  if (r.partial) return *r.partial;
  if (r.global && r.restriction)
    return restrict_global_action(*r.global, *r.restriction);
  throw BuildError(BuildError::Kind::input,
                   "this command needs a partial action: declare a 'partial' "
                   "block or a 'restrict' line");
}

CommandResult cmd_validate(const InstanceDocument& doc,
                           const ResolvedInstance& r,
                           const CommandOptions& opts) {
  struct Entry {
    std::string kind, name;
    ValidationReport report;
  };
  std::vector<Entry> entries;
  if (r.group) entries.push_back({"group", "", r.group->validate()});
  for (std::size_t i = 0; i < r.quivers.size(); ++i)
    entries.push_back({"quiver", r.quiver_names[i], r.quivers[i].validate()});
  if (r.global)
    entries.push_back({"global", doc.global->name, r.global->validate()});
  if (r.partial)
    entries.push_back(
        {"partial", doc.partial->name, check_quiver_partial_action(*r.partial)});
  if (r.restriction)
    entries.push_back({"restriction", "", r.restriction->validate()});

  bool all_valid = true;
  for (const auto& e : entries) all_valid = all_valid && e.report.valid();

  CommandResult result;
  result.exit_code = all_valid ? 0 : 1;
  if (opts.structured) {
    json objects = json::array();
    for (const auto& e : entries)
      objects.push_back({{"kind", e.kind},
                         {"name", e.name},
                         {"valid", e.report.valid()},
                         {"report", report_json(e.report)}});
    result.output = json{{"command", "validate"},
                         {"status", all_valid ? "ok" : "invalid"},
                         {"exit_code", result.exit_code},
                         {"objects", objects}}
                        .dump(2) +
                    "\n";
  } else {
    for (const auto& e : entries) {
      result.output += e.kind + (e.name.empty() ? "" : " " + e.name) + ": " +
                       (e.report.valid() ? "valid" : "INVALID") + "\n";
      result.output += report_text(e.report, "  ");
    }
  }
  return result;
}

CommandResult cmd_globalize(const InstanceDocument&,
                            const ResolvedInstance& r,
                            const CommandOptions& opts) {
  QuiverPartialAction partial = subject_partial(r);
  EnvelopingQuiverAction envelope = envelope_quiver_action(partial);
  const Quiver& big = envelope.global.quiver;
  const FiniteGroup& group = envelope.global.group;
  ValidationReport check = check_enveloping(envelope);

  CommandResult result;
  result.exit_code = check.valid() ? 0 : 1;
  if (opts.structured) {
    json arrows = json::array();
    for (const auto& a : big.arrows())
      arrows.push_back(
          {{"id", a.id}, {"source", a.source}, {"target", a.target}});
    json beta = json::object();
    for (int g = 0; g < group.size(); ++g) {
      json vm = json::object(), am = json::object();
      for (int v = 0; v < big.n_vertices(); ++v)
        vm[big.vertex_name(v)] =
            big.vertex_name(envelope.global.vertex_action[g][v]);
      for (int a = 0; a < big.n_arrows(); ++a)
        am[big.arrow(a).id] = big.arrow(envelope.global.arrow_action[g][a]).id;
      beta[group.name(g)] = {{"vertices", vm}, {"arrows", am}};
    }
    json embedding_v = json::object(), embedding_a = json::object();
    const Quiver& gamma = partial.quiver;
    for (int v = 0; v < gamma.n_vertices(); ++v)
      embedding_v[gamma.vertex_name(v)] =
          big.vertex_name(envelope.embedding.apply_vertex(v));
    for (int a = 0; a < gamma.n_arrows(); ++a)
      embedding_a[gamma.arrow(a).id] =
          big.arrow(envelope.embedding.apply_arrow(a)).id;
    result.output =
        json{{"command", "globalize"},
             {"status", check.valid() ? "ok" : "invalid"},
             {"exit_code", result.exit_code},
             {"quiver",
              {{"vertices", big.vertices()}, {"arrows", arrows}}},
             {"beta", beta},
             {"embedding",
              {{"vertices", embedding_v}, {"arrows", embedding_a}}},
             {"check", report_json(check)}}
            .dump(2) +
        "\n";
  } else {
    std::string& out = result.output;
    out += "vertices " + std::to_string(big.n_vertices()) + "\n";
    out += "arrows " + std::to_string(big.n_arrows()) + "\n";
    for (const auto& v : big.vertices()) out += "vertex " + v + "\n";
    for (const auto& a : big.arrows())
      out += "arrow " + a.id + " : " + a.source + " -> " + a.target + "\n";
    for (int g = 0; g < group.size(); ++g) {
      for (int v = 0; v < big.n_vertices(); ++v)
        out += "beta " + group.name(g) + " vertex " + big.vertex_name(v) +
               " -> " +
               big.vertex_name(envelope.global.vertex_action[g][v]) + "\n";
      for (int a = 0; a < big.n_arrows(); ++a)
        out += "beta " + group.name(g) + " arrow " + big.arrow(a).id + " -> " +
               big.arrow(envelope.global.arrow_action[g][a]).id + "\n";
    }
    const Quiver& gamma = partial.quiver;
    for (int v = 0; v < gamma.n_vertices(); ++v)
      out += "embedding vertex " + gamma.vertex_name(v) + " -> " +
             big.vertex_name(envelope.embedding.apply_vertex(v)) + "\n";
    for (int a = 0; a < gamma.n_arrows(); ++a)
      out += "embedding arrow " + gamma.arrow(a).id + " -> " +
             big.arrow(envelope.embedding.apply_arrow(a)).id + "\n";
    for (const char* clause : {"(a)", "(b)", "(c)", "(d)"}) {
      bool ok = true;
      for (const auto& item : check.items)
        if (item.clause.rfind(clause, 0) == 0) ok = false;
      out += std::string("check ") + clause + ": " + (ok ? "ok" : "FAIL") +
             "\n";
    }
    out += report_text(check, "  ");
  }
  return result;
}

CommandResult cmd_restrict(const InstanceDocument& doc,
                           const ResolvedInstance& r,
                           const CommandOptions& opts) {
  if (!r.global || !r.restriction)
    throw BuildError(BuildError::Kind::input,
                     "restrict needs a 'global' block and a 'restrict' line");
  QuiverPartialAction partial =
      restrict_global_action(*r.global, *r.restriction);
  InstanceDocument out_doc = document_for_partial_action(
      *doc.group, doc.global->quiver, doc.global->name, partial);
  std::string text = serialize_instance(out_doc);

  CommandResult result;
  if (opts.structured) {
    const FiniteGroup& group = partial.group;
    json domains = json::object(), vmaps = json::object(),
         amaps = json::object();
    for (int g = 0; g < group.size(); ++g) {
      json vs = json::array(), as = json::array();
      for (int v : partial.domains[g].vertices)
        vs.push_back(partial.quiver.vertex_name(v));
      for (int a : partial.domains[g].arrows)
        as.push_back(partial.quiver.arrow(a).id);
      domains[group.name(g)] = {{"vertices", vs}, {"arrows", as}};
      json vm = json::object(), am = json::object();
      for (const auto& [from, to] : partial.vertex_maps[g])
        vm[partial.quiver.vertex_name(from)] = partial.quiver.vertex_name(to);
      for (const auto& [from, to] : partial.arrow_maps[g])
        am[partial.quiver.arrow(from).id] = partial.quiver.arrow(to).id;
      vmaps[group.name(g)] = vm;
      amaps[group.name(g)] = am;
    }
    result.output = json{{"command", "restrict"},
                         {"status", "ok"},
                         {"exit_code", 0},
                         {"document", text},
                         {"domains", domains},
                         {"vertex_maps", vmaps},
                         {"arrow_maps", amaps}}
                        .dump(2) +
                    "\n";
  } else {
    result.output = text;
  }
  return result;
}

CommandResult cmd_algebra_check(const InstanceDocument&,
                                const ResolvedInstance& r,
                                const CommandOptions& opts) {
  const int window = effective_truncate(opts, r);
  QuiverPartialAction partial = subject_partial(r);

  AlgebraPartialAction induced = induced_partial_action(partial);
  ValidationReport subalgebra = check_subalgebra_partial_action(induced, window);
  EnvelopingQuiverAction envelope = envelope_quiver_action(partial);
  ValidationReport globalization = check_algebra_globalization(envelope, window);

  SubalgebraSpan sum = sum_of_translates(envelope, window);
  SubalgebraSpan generated = generated_subalgebra(envelope, window);
  std::size_t sum_dim = sum.dimension(window);
  std::size_t gen_dim = generated.dimension(window);

  const FiniteGroup& group = partial.group;
  struct IdealLine {
    std::string element;
    std::optional<IdealWitness> witness;
  };
  std::vector<IdealLine> ideals;
  for (int g = 0; g < group.size(); ++g) {
    if (g == group.identity()) continue;
    auto span = induced.domain_span(g);
    ideals.push_back({group.name(g), check_not_ideal(span, window)});
  }

  bool valid = subalgebra.valid() && globalization.valid();
  CommandResult result;
  result.exit_code = valid ? 0 : 1;
  if (opts.structured) {
    json ideal_json = json::object();
    for (const auto& line : ideals) {
      json entry = {{"ideal", !line.witness.has_value()}};
      if (line.witness)
        entry["witness"] = line.witness->to_string(*induced.quiver);
      ideal_json[line.element] = entry;
    }
    result.output =
        json{{"command", "algebra-check"},
             {"status", valid ? "ok" : "invalid"},
             {"exit_code", result.exit_code},
             {"window", window},
             {"subalgebra_report", report_json(subalgebra)},
             {"globalization_report", report_json(globalization)},
             {"sum_dimension", sum_dim},
             {"generated_dimension", gen_dim},
             {"strict", sum_dim < gen_dim},
             {"ideals", ideal_json}}
            .dump(2) +
        "\n";
  } else {
    std::string& out = result.output;
    out += "window L=" + std::to_string(window) + "\n";
    for (const char* clause : {"(i)", "(ii)", "(iii)"}) {
      bool ok = true;
      for (const auto& item : subalgebra.items)
        if (item.clause.rfind(clause, 0) == 0) ok = false;
      out += std::string("subalgebra axiom ") + clause + ": " +
             (ok ? "ok" : "FAIL") + "\n";
    }
    out += report_text(subalgebra, "  ");
    for (const char* clause : {"(i)", "(ii)", "(iii)", "(iv)"}) {
      bool ok = true;
      for (const auto& item : globalization.items)
        if (item.clause.rfind(clause, 0) == 0) ok = false;
      out += std::string("globalization condition ") + clause + ": " +
             (ok ? "ok" : "FAIL") + "\n";
    }
    out += report_text(globalization, "  ");
    out += "sum dim = " + std::to_string(sum_dim) +
           ", generated dim = " + std::to_string(gen_dim) +
           ", strict: " + (sum_dim < gen_dim ? "yes" : "no") + "\n";
    for (const auto& line : ideals) {
      if (line.witness)
        out += "R_" + line.element +
               ": not an ideal, witness: " +
               line.witness->to_string(*induced.quiver) + "\n";
      else
        out += "R_" + line.element + ": ideal-closed within the window\n";
    }
  }
  return result;
}

CommandResult cmd_export_dot(const InstanceDocument&,
                             const ResolvedInstance& r,
                             const CommandOptions& opts) {
  const Quiver* quiver = nullptr;
  std::optional<Subquiver> highlight;
  if (r.restriction) {
    quiver = &r.global->quiver;
    highlight = r.restriction;
  } else if (r.partial) {
    quiver = &r.partial->quiver;
  } else if (r.quivers.size() == 1) {
    quiver = &r.quivers[0];
  } else if (r.quivers.empty()) {
    throw BuildError(BuildError::Kind::input, "no quiver to export");
  } else {
    throw BuildError(BuildError::Kind::input,
                     "several quivers declared; add a partial action or a "
                     "restrict line to pick one");
  }
  std::string dot = export_dot(*quiver, highlight);

  CommandResult result;
  if (opts.structured)
    result.output = json{{"command", "export-dot"},
                         {"status", "ok"},
                         {"exit_code", 0},
                         {"dot", dot}}
                        .dump(2) +
                    "\n";
  else
    result.output = dot;
  return result;
}

}  // namespace

CommandResult run_command(const std::string& verb, const std::string& input,
                          const CommandOptions& opts) {
  auto error_result = [&](int code, const std::string& message) {
    CommandResult result;
    result.exit_code = code;
    if (opts.structured)
      result.output = json{{"command", verb},
                           {"status", code == 2 ? "error" : "invalid"},
                           {"exit_code", code},
                           {"error", message}}
                          .dump(2) +
                      "\n";
    else
      result.output = "error: " + message + "\n";
    return result;
  };

  InstanceDocument doc;
  ResolvedInstance resolved;
  try {
    doc = parse_instance(input);
    resolved = build_instance(doc);
  } catch (const ParseError& err) {
    return error_result(2, err.what());
  } catch (const BuildError& err) {
    return error_result(err.kind == BuildError::Kind::input ? 2 : 1,
                        err.what());
  }

  try {
    if (verb == "validate") return cmd_validate(doc, resolved, opts);
    if (verb == "globalize") return cmd_globalize(doc, resolved, opts);
    if (verb == "restrict") return cmd_restrict(doc, resolved, opts);
    if (verb == "algebra-check") return cmd_algebra_check(doc, resolved, opts);
    if (verb == "export-dot") return cmd_export_dot(doc, resolved, opts);
  } catch (const BuildError& err) {
    return error_result(err.kind == BuildError::Kind::input ? 2 : 1,
                        err.what());
  } catch (const std::invalid_argument& err) {
    // an operation rejected its input: a reported violation, not a usage bug
    return error_result(1, err.what());
  }
  return error_result(2, "unknown command '" + verb + "'");
}

}  // namespace qpa
