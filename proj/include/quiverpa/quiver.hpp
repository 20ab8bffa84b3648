#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quiverpa/report.hpp"

namespace qpa {

struct Arrow {
  std::string id;
  std::string source;
  std::string target;

  bool operator==(const Arrow&) const = default;
};

/// A finite quiver: named vertices plus named arrows with source/target.
/// Parallel arrows and loops are allowed. Construction is permissive
/// (dangling arrows and duplicate identifiers are representable) so that
/// validate() can report defects instead of throwing.
class Quiver {
public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  int n_vertices() const { return static_cast<int>(vertices_.size()); }
  int n_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::string& vertex_name(int v) const { return vertices_.at(v); }
  const Arrow& arrow(int a) const { return arrows_.at(a); }

  /// -1 when the name is unknown.
  int vertex_index(const std::string& name) const;
  int arrow_index(const std::string& name) const;

  /// Source/target as vertex indices; -1 for a dangling endpoint.
  int source_of(int arrow) const { return sources_[arrow]; }
  int target_of(int arrow) const { return targets_[arrow]; }

  /// Dangling endpoints and duplicated identifiers.
  ValidationReport validate() const;

  bool operator==(const Quiver& o) const {
    return vertices_ == o.vertices_ && arrows_ == o.arrows_;
  }

private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<int> sources_, targets_;
  std::map<std::string, int> vertex_index_, arrow_index_;
};

/// A sub-object of a fixed parent quiver, as sorted index sets.
/// Closure (arrow endpoints included) is checked by validate(), not forced.
struct Subquiver {
  Quiver parent;
  std::vector<int> vertices;  // sorted, unique
  std::vector<int> arrows;    // sorted, unique

  /// Builds from names; throws on names missing from the parent.
  static Subquiver of(const Quiver& parent,
                      const std::vector<std::string>& vertex_names,
                      const std::vector<std::string>& arrow_names);
  static Subquiver full(const Quiver& parent);

  bool contains_vertex(int v) const;
  bool contains_arrow(int a) const;

  /// The subquiver as a quiver in its own right, keeping identifiers.
  Quiver to_quiver() const;

  ValidationReport validate() const;

  bool operator==(const Subquiver&) const = default;
};

Subquiver intersect(const Subquiver& a, const Subquiver& b);
Subquiver unite(const Subquiver& a, const Subquiver& b);

/// A quiver morphism: total vertex and arrow maps commuting with
/// source and target. make() enforces the commuting condition.
class QuiverMorphism {
public:
  static QuiverMorphism make(Quiver source, Quiver target,
                             std::vector<int> vertex_map,
                             std::vector<int> arrow_map);
  static QuiverMorphism identity(const Quiver& q);

  const Quiver& source() const { return source_; }
  const Quiver& target() const { return target_; }
  const std::vector<int>& vertex_map() const { return vertex_map_; }
  const std::vector<int>& arrow_map() const { return arrow_map_; }
  int apply_vertex(int v) const { return vertex_map_.at(v); }
  int apply_arrow(int a) const { return arrow_map_.at(a); }

  bool is_isomorphism() const;

  bool operator==(const QuiverMorphism& o) const {
    return source_ == o.source_ && target_ == o.target_ &&
           vertex_map_ == o.vertex_map_ && arrow_map_ == o.arrow_map_;
  }

private:
  QuiverMorphism() = default;
  Quiver source_, target_;
  std::vector<int> vertex_map_, arrow_map_;
};

/// f after g; requires g's target to equal f's source.
QuiverMorphism compose(const QuiverMorphism& f, const QuiverMorphism& g);

/// Componentwise inverse; requires both maps bijective.
QuiverMorphism invert(const QuiverMorphism& f);

/// All automorphisms, found by backtracking over degree-compatible vertex
/// bijections and extending to arrows (parallel arrows permuted in every
/// consistent way). Deterministic order; throws once more than `cap`
/// automorphisms are found.
std::vector<QuiverMorphism> automorphisms(const Quiver& q,
                                          std::size_t cap = 100000);

/// Corestriction of f to a subquiver of its source and the image subquiver.
QuiverMorphism restrict_morphism(const QuiverMorphism& f, const Subquiver& s);

/// Deterministic Graphviz output; the optional subquiver is highlighted.
std::string export_dot(const Quiver& q,
                       const std::optional<Subquiver>& highlight = {});

}  // namespace qpa
