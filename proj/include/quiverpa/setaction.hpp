#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quiverpa/group.hpp"
#include "quiverpa/report.hpp"

namespace qpa {

/// A partial action of a finite group on a finite set: per group element a
/// domain X_g ⊆ X and a pairing alpha_g : X_{g⁻¹} → X_g. Everything is
/// index-based against the carrier order.
struct SetPartialAction {
  FiniteGroup group;
  std::vector<std::string> carrier;
  std::vector<std::vector<int>> domains;  // per g, sorted carrier indices
  std::vector<std::map<int, int>> maps;   // per g, defined on domains[inv(g)]

  static SetPartialAction empty_shell(FiniteGroup g,
                                      std::vector<std::string> carrier);

  bool operator==(const SetPartialAction&) const = default;
};

/// A total action: per group element a permutation of the carrier.
struct GlobalSetAction {
  FiniteGroup group;
  std::vector<std::string> carrier;
  std::vector<std::vector<int>> action;  // action[g][x]

  ValidationReport validate() const;

  bool operator==(const GlobalSetAction&) const = default;
};

/// Checks X_e = X, alpha_e = id, that each pairing is a bijection
/// X_{g⁻¹} → X_g, and the two coherence axioms
///   alpha_g(X_{g⁻¹} ∩ X_h) = X_g ∩ X_{gh}
///   alpha_g(alpha_h(x)) = alpha_{gh}(x) on alpha_{h⁻¹}(X_h ∩ X_{g⁻¹}).
/// Every violated instance is reported with its witness.
ValidationReport check_partial_set_action(const SetPartialAction& a);

struct GlobalizeOptions {
  // Reorders the canonical choice of class representatives; the default is
  // the lexicographic (group order, carrier order) ordering of pairs.
  std::optional<std::uint64_t> shuffle_seed;
};

/// The globalization of a valid partial action: carrier is the quotient of
/// group x carrier by (g,x) ~ (h,y) iff x ∈ X_{g⁻¹h} and alpha_{h⁻¹g}(x) = y,
/// with beta_g[h,x] = [gh,x] and x embedded as [e,x].
struct SetGlobalization {
  GlobalSetAction global;
  std::vector<int> embedding;  // carrier index -> global carrier index
  // members of each class, sorted as (group index, carrier index) pairs
  std::vector<std::vector<std::pair<int, int>>> classes;
};

/// Quotient construction over a disjoint-set forest. The declared relation
/// is verified to be an equivalence first; any defect (which can only come
/// from an invalid input action) is thrown as std::invalid_argument.
SetGlobalization globalize_set_action(const SetPartialAction& a,
                                      const GlobalizeOptions& opts = {});

/// Restriction of a global action to a subset: X_g = beta_g(S) ∩ S with the
/// restricted maps. Throws when the subset mentions unknown carrier names.
SetPartialAction restrict_set_action(const GlobalSetAction& b,
                                     const std::vector<std::string>& subset);

}  // namespace qpa
