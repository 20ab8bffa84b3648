#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quiverpa/group.hpp"
#include "quiverpa/linalg.hpp"
#include "quiverpa/quiver.hpp"
#include "quiverpa/quiver_paction.hpp"
#include "quiverpa/rational.hpp"
#include "quiverpa/report.hpp"

namespace qpa {

/// A basis path: either the trivial path at a vertex, or a composable
/// arrow sequence in traversal order (arrows.front() is walked first).
struct Path {
  int vertex = -1;
  std::vector<int> arrows;

  bool trivial() const { return arrows.empty(); }
  int length() const { return static_cast<int>(arrows.size()); }
  int source(const Quiver& q) const {
    return trivial() ? vertex : q.source_of(arrows.front());
  }
  int target(const Quiver& q) const {
    return trivial() ? vertex : q.target_of(arrows.back());
  }

  /// "e_v" for a trivial path; otherwise arrow names with the last
  /// traversed arrow written leftmost, matching composition order.
  std::string to_string(const Quiver& q) const;

  bool operator==(const Path&) const = default;
  bool operator<(const Path& o) const {
    if (length() != o.length()) return length() < o.length();
    if (arrows != o.arrows) return arrows < o.arrows;
    return vertex < o.vertex;
  }
};

Path trivial_path(int vertex);
Path arrow_path(int arrow);
/// Validates composability against the quiver; throws on a broken sequence.
Path make_path(const Quiver& q, std::vector<int> arrows);

/// Product p·q with q traversed first; nullopt when source(p) != target(q).
std::optional<Path> compose_paths(const Quiver& q, const Path& p,
                                  const Path& first);

/// All paths of length <= max_len in deterministic order (by length, then
/// lexicographically by arrow sequence). Requires a valid quiver.
std::vector<Path> enumerate_paths(const Quiver& q, int max_len);
std::size_t truncated_dimension(const Quiver& q, int max_len);

/// A finite rational linear combination of basis paths of a fixed quiver.
/// Zero coefficients are never stored.
class AlgebraElement {
public:
  explicit AlgebraElement(std::shared_ptr<const Quiver> quiver)
      : quiver_(std::move(quiver)) {}
  static AlgebraElement basis(std::shared_ptr<const Quiver> quiver, Path p,
                              Rational coeff = Rational(1));

  const std::shared_ptr<const Quiver>& quiver_ptr() const { return quiver_; }
  const Quiver& quiver() const { return *quiver_; }
  const std::map<Path, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  AlgebraElement& add_term(const Path& p, const Rational& c);

  friend AlgebraElement operator+(const AlgebraElement& a,
                                  const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a,
                                  const AlgebraElement& b);
  friend AlgebraElement operator*(const Rational& c, const AlgebraElement& a);
  /// Bilinear extension of path concatenation; in a*b, b acts first.
  friend AlgebraElement operator*(const AlgebraElement& a,
                                  const AlgebraElement& b);

  bool operator==(const AlgebraElement& o) const {
    return *quiver_ == *o.quiver_ && terms_ == o.terms_;
  }

  std::string to_string() const;

private:
  std::shared_ptr<const Quiver> quiver_;
  std::map<Path, Rational> terms_;
};

/// The identity of the path algebra: the sum of all vertex idempotents.
AlgebraElement algebra_identity(std::shared_ptr<const Quiver> quiver);

/// Paths of a subquiver, reported in ambient indices, deterministic order.
std::vector<Path> subquiver_paths(const Subquiver& s, int max_len);

/// A subalgebra given either by a path-closed subquiver (exact) or by an
/// explicit spanning list certified up to a truncation length.
struct SubalgebraSpan {
  std::shared_ptr<const Quiver> quiver;
  std::optional<Subquiver> subquiver;
  std::vector<AlgebraElement> spanning;
  int truncation = -1;

  static SubalgebraSpan from_subquiver(std::shared_ptr<const Quiver> quiver,
                                       Subquiver s);
  static SubalgebraSpan from_elements(std::shared_ptr<const Quiver> quiver,
                                      std::vector<AlgebraElement> elements,
                                      int truncation);

  bool subquiver_form() const { return subquiver.has_value(); }

  /// Exact rational dimension of the span within the length window.
  std::size_t dimension(int max_len) const;

  /// Exact membership: path-closure for the subquiver form, Gaussian
  /// elimination against the spanning list otherwise.
  bool contains(const AlgebraElement& x) const;

  /// Basis elements in deterministic order (window-limited paths for the
  /// subquiver form, the spanning list otherwise).
  std::vector<AlgebraElement> basis_elements(int max_len) const;
};

/// The induced partial action on the path algebra: per group element the
/// span of paths of the domain subquiver, with the algebra isomorphism
/// acting arrowwise through the quiver isomorphism.
struct AlgebraPartialAction {
  FiniteGroup group;
  std::shared_ptr<const Quiver> quiver;
  std::vector<Subquiver> domains;
  std::vector<std::map<int, int>> vertex_maps;
  std::vector<std::map<int, int>> arrow_maps;

  SubalgebraSpan domain_span(int g) const;

  /// Image of a basis path under alpha_g; nullopt when some arrow or vertex
  /// has no image.
  std::optional<Path> apply_path(int g, const Path& p) const;

  /// Linear extension of apply_path; throws when a term cannot be mapped.
  AlgebraElement apply(int g, const AlgebraElement& x) const;
};

/// Builds the induced action from a valid quiver partial action.
AlgebraPartialAction induced_partial_action(const QuiverPartialAction& a);

/// Verifies the subalgebra partial-action axioms:
///   (i) exactly; (ii) exactly at the subquiver level and additionally on
///   the truncated basis; (iii) on every basis path of the stated domain up
///   to the window; plus well-typedness of each alpha_g ("map" clause).
ValidationReport check_subalgebra_partial_action(const AlgebraPartialAction& a,
                                                 int max_len);

/// A product that escapes the span, demonstrating the span is not an ideal.
struct IdealWitness {
  Path ambient_path;
  AlgebraElement member;
  bool left;  // true: ambient*member, false: member*ambient
  AlgebraElement product;

  std::string to_string(const Quiver& q) const;
};

/// First witness in deterministic scan order, or nullopt when the span is
/// closed under multiplication by ambient basis paths up to the window.
std::optional<IdealWitness> check_not_ideal(const SubalgebraSpan& s,
                                            int max_len);

/// The linear span of all translates beta_g(K·embedded paths) inside the
/// window, as an explicit-form span over the enveloping quiver.
SubalgebraSpan sum_of_translates(const EnvelopingQuiverAction& e, int max_len);

/// The multiplicative closure of the translates within the window.
SubalgebraSpan generated_subalgebra(const EnvelopingQuiverAction& e,
                                    int max_len);

/// Verifies the algebra-globalization conditions within the window:
///   (i) the embedding is an injective algebra homomorphism on the basis,
///   (ii) the translates generate the full window,
///   (iii) each beta_g(KΓ) ∩ KΓ is the span of paths of the intersection
///         subquiver and contains its own identity,
///   (iv) restricting beta to the embedded algebra reproduces the induced
///        partial action.
ValidationReport check_algebra_globalization(const EnvelopingQuiverAction& e,
                                             int max_len);

/// The canonical map between the truncated path bases of two enveloping
/// quivers of the same partial action.
struct TruncatedAlgebraMap {
  std::shared_ptr<const Quiver> source;
  std::shared_ptr<const Quiver> target;
  std::map<Path, Path> images;
};

/// Builds the canonical isomorphism on the window basis: vertices and
/// arrows are matched through translate representatives (agreement across
/// all representatives is asserted), longer paths multiplicatively; the map
/// is verified bijective and multiplicative within the window. Throws when
/// any of that fails.
TruncatedAlgebraMap canonical_algebra_isomorphism(
    const EnvelopingQuiverAction& e1, const EnvelopingQuiverAction& e2,
    int max_len);

}  // namespace qpa
