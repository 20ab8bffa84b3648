#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quiverpa/group.hpp"
#include "quiverpa/quiver.hpp"
#include "quiverpa/quiver_paction.hpp"

namespace qpa {

/// Syntax error with 1-based position information.
struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(int line_, int column_, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_) + ", column " +
                           std::to_string(column_) + ": " + message),
        line(line_),
        column(column_) {}
};

/// Raised while elaborating a parsed document. `input` failures (unresolved
/// names, missing blocks) map to CLI exit code 2; `invalid` failures
/// (violated axioms discovered during completion) map to exit code 1.
struct BuildError : std::runtime_error {
  enum class Kind { input, invalid };
  Kind kind;
  BuildError(Kind kind_, const std::string& message)
      : std::runtime_error(message), kind(kind_) {}
};

// ---- document model -------------------------------------------------------

struct GroupTableDecl {
  std::string name;
  std::vector<std::string> elements;
  std::string identity;
  std::vector<std::array<std::string, 3>> products;  // a * b -> c
};

struct GroupDecl {
  int cyclic_order = 0;  // > 0 for the cyclic form
  std::optional<GroupTableDecl> table;
};

struct VertexDecl {
  std::string id;
  int line = 0;
};

struct ArrowDecl {
  std::string id, source, target;
  int line = 0;
};

struct QuiverDecl {
  std::string name;
  std::vector<VertexDecl> vertices;
  std::vector<ArrowDecl> arrows;
};

struct ActLine {
  std::string element;
  bool vertex = true;
  std::string from, to;
  int line = 0;
};

struct GlobalDecl {
  std::string name;
  std::string quiver;
  std::vector<ActLine> acts;
};

struct DomainLine {
  std::string element;
  std::vector<std::string> vertices, arrows;
  int line = 0;
};

enum class MapSort { automatic, vertex, arrow };

struct MapLine {
  std::string element;
  MapSort sort = MapSort::automatic;
  std::string from, to;
  int line = 0;
};

struct PartialDecl {
  std::string name;
  std::string quiver;
  std::vector<DomainLine> domains;
  std::vector<MapLine> maps;
};

struct RestrictDecl {
  std::string global;
  std::vector<std::string> vertices, arrows;
  int line = 0;
};

struct InstanceDocument {
  std::optional<GroupDecl> group;
  std::vector<QuiverDecl> quivers;
  std::optional<GlobalDecl> global;
  std::optional<PartialDecl> partial;
  std::optional<RestrictDecl> restriction;
  std::optional<int> truncate;
};

/// Parses the line-oriented instance format; throws ParseError.
InstanceDocument parse_instance(const std::string& text);

/// Writes a document back into the same format; parse(serialize(d)) is d.
std::string serialize_instance(const InstanceDocument& doc);

// ---- elaboration ----------------------------------------------------------

struct ResolvedInstance {
  std::optional<FiniteGroup> group;
  std::vector<std::string> quiver_names;
  std::vector<Quiver> quivers;
  std::optional<GlobalQuiverAction> global;
  std::optional<QuiverPartialAction> partial;   // from an explicit block
  std::optional<Subquiver> restriction;         // of the global's quiver
  int truncate = 4;

  const Quiver* find_quiver(const std::string& name) const;
};

/// Resolves every reference and completes global actions from their
/// generator images; throws BuildError.
ResolvedInstance build_instance(const InstanceDocument& doc);

/// Serializes a partial action as a parseable document (group block, the
/// carrier quiver, and a partial block with explicit map sorts).
InstanceDocument document_for_partial_action(const GroupDecl& group,
                                             const std::string& quiver_name,
                                             const std::string& action_name,
                                             const QuiverPartialAction& a);

}  // namespace qpa
