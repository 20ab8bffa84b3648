#pragma once

#include <string>
#include <vector>

namespace qpa {

struct ReportItem {
  std::string clause;
  std::string message;
};

// Accumulated axiom violations with witnesses. Empty means valid.
// Checkers append items in a fixed scan order, so reports are
// deterministic for a given input.
struct ValidationReport {
  std::vector<ReportItem> items;

  bool valid() const { return items.empty(); }

  void add(std::string clause, std::string message) {
    items.push_back({std::move(clause), std::move(message)});
  }

  void merge(const ValidationReport& other, const std::string& prefix) {
    for (const auto& it : other.items)
      items.push_back({prefix + it.clause, it.message});
  }

  std::string to_string() const {
    std::string out;
    for (const auto& it : items) {
      out += it.clause;
      out += ": ";
      out += it.message;
      out += '\n';
    }
    return out;
  }
};

}  // namespace qpa
