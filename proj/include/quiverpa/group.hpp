#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "quiverpa/report.hpp"

namespace qpa {

/// A finite group given by an explicit multiplication table.
///
/// Elements are opaque string identifiers; internally everything runs on
/// dense indices into the element list. Values are immutable after
/// construction and freely copyable.
class FiniteGroup {
public:
  FiniteGroup() = default;

  /// Cyclic group of order n with canonical element names "e", "t", "t2", ...
  /// Throws std::invalid_argument for n < 1.
  static FiniteGroup cyclic(int n);

  /// Group from an explicit table. The table must be total over the element
  /// list (missing or unknown entries throw); whether it actually satisfies
  /// the group axioms is the business of validate(). Inverses are derived
  /// from the table where they exist.
  static FiniteGroup from_table(
      std::vector<std::string> elements, const std::string& identity,
      const std::map<std::pair<std::string, std::string>, std::string>& table);

  /// Closes a generating set of permutations of {0..n-1} into a full table.
  /// Element names are the one-line images, e.g. "[1,2,0]"; the identity is
  /// named first and the rest are ordered lexicographically. Throws if the
  /// closure exceeds max_elements.
  static FiniteGroup from_permutations(
      const std::vector<std::vector<int>>& generators,
      std::size_t max_elements = 10000);

  int size() const { return static_cast<int>(elements_.size()); }
  int identity() const { return identity_; }
  const std::string& name(int g) const { return elements_.at(g); }
  const std::vector<std::string>& elements() const { return elements_; }

  /// Index of a named element; throws std::invalid_argument if unknown.
  int index(const std::string& name) const;
  bool has(const std::string& name) const;

  int mul(int a, int b) const { return mul_[a * size() + b]; }
  int inv(int a) const { return inv_[a]; }

  // Name-based variants of the group law.
  std::string mul(const std::string& a, const std::string& b) const;
  std::string inv(const std::string& a) const;

  /// Exhaustive axiom scan: identity, inverses, every associativity triple.
  ValidationReport validate() const;

  bool operator==(const FiniteGroup& o) const {
    return elements_ == o.elements_ && mul_ == o.mul_ &&
           identity_ == o.identity_;
  }

private:
  std::vector<std::string> elements_;
  std::vector<int> mul_;  // row-major size() x size()
  std::vector<int> inv_;
  int identity_ = 0;
  std::map<std::string, int> index_;

  void build_index();
};

}  // namespace qpa
