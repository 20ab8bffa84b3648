#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "quiverpa/group.hpp"
#include "quiverpa/quiver.hpp"
#include "quiverpa/report.hpp"
#include "quiverpa/setaction.hpp"

namespace qpa {

/// A group homomorphism into Aut(Q), stored as one vertex permutation and
/// one arrow permutation per group element.
struct GlobalQuiverAction {
  FiniteGroup group;
  Quiver quiver;
  std::vector<std::vector<int>> vertex_action;
  std::vector<std::vector<int>> arrow_action;

  /// beta_e = id, homomorphism property, and that every beta_g is a quiver
  /// automorphism.
  ValidationReport validate() const;

  QuiverMorphism beta(int g) const;
  GlobalSetAction vertex_set_action() const;
  GlobalSetAction arrow_set_action() const;

  bool operator==(const GlobalQuiverAction&) const = default;
};

/// A partial action on a quiver: a domain subquiver per group element and
/// quiver isomorphisms alpha_g : domain(g⁻¹) → domain(g) given on vertex
/// and arrow indices of the carrier quiver.
struct QuiverPartialAction {
  FiniteGroup group;
  Quiver quiver;
  std::vector<Subquiver> domains;
  std::vector<std::map<int, int>> vertex_maps;
  std::vector<std::map<int, int>> arrow_maps;

  SetPartialAction vertex_set_action() const;
  SetPartialAction arrow_set_action() const;

  bool operator==(const QuiverPartialAction&) const = default;
};

/// A global action together with the embedding that exhibits it as an
/// enveloping action of `original`.
struct EnvelopingQuiverAction {
  GlobalQuiverAction global;
  QuiverMorphism embedding;  // original.quiver -> global.quiver
  QuiverPartialAction original;

  EnvelopingQuiverAction(GlobalQuiverAction g, QuiverMorphism e,
                         QuiverPartialAction o)
      : global(std::move(g)), embedding(std::move(e)), original(std::move(o)) {}

  bool operator==(const EnvelopingQuiverAction&) const = default;
};

/// Raised when the source/target assignment of a globalized arrow comes out
/// differently from two representatives of the same class. This cannot
/// happen for inputs that pass check_quiver_partial_action.
struct WellDefinednessError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Reports every violated clause with witnesses:
///   (i) full domain and identity map at e,
///   (ii) the vertex components form a partial set action,
///   (iii) the arrow components form a partial set action,
///   (iv) each domain subquiver is closed,
///   (morphism) each alpha_g commutes with source and target.
ValidationReport check_quiver_partial_action(const QuiverPartialAction& a);

/// The restriction of a global action to a closed subquiver: domains
/// beta_g(S) ∩ S with the restricted maps, as a partial action on the
/// subquiver viewed as a quiver in its own right.
QuiverPartialAction restrict_global_action(const GlobalQuiverAction& b,
                                           const Subquiver& s);

/// Builds the enveloping action: vertex and arrow carriers are globalized
/// independently, then each globalized arrow receives the source/target
/// transported from its representatives, with agreement across every
/// representative asserted (WellDefinednessError otherwise).
EnvelopingQuiverAction envelope_quiver_action(const QuiverPartialAction& a,
                                              const GlobalizeOptions& opts = {});

/// Independently re-verifies the four enveloping-action conditions:
/// (a) injective embedding morphism, (b) restriction along the embedding
/// reproduces the original, (c)/(d) every vertex/arrow of the big quiver
/// lies in some translate of the embedded one.
ValidationReport check_enveloping(const EnvelopingQuiverAction& e);

/// The restriction of e.global to the embedded copy of the original quiver,
/// pulled back along the embedding so it is directly comparable with
/// e.original. Requires an injective embedding.
QuiverPartialAction restriction_along_embedding(const EnvelopingQuiverAction& e);

/// The canonical equivariant isomorphism between two enveloping actions of
/// the same partial action, determined by beta'_g(i2(x)) <- beta_g(i1(x)).
/// Throws if the assignment is not well defined, not bijective, or not
/// equivariant — any of which signals that an input is not an enveloping
/// action of the shared partial action.
QuiverMorphism enveloping_isomorphism(const EnvelopingQuiverAction& e1,
                                      const EnvelopingQuiverAction& e2);

}  // namespace qpa
