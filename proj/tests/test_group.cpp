#include <map>
#include <stdexcept>

#include "doctest.h"
#include "quiverpa/group.hpp"

using qpa::FiniteGroup;

TEST_CASE("trivial cyclic group") {
  auto g = FiniteGroup::cyclic(1);
  CHECK(g.size() == 1);
  CHECK(g.name(g.identity()) == "e");
  CHECK(g.validate().valid());
}

TEST_CASE("cyclic group of order 4") {
  auto g = FiniteGroup::cyclic(4);
  CHECK(g.elements() == std::vector<std::string>{"e", "t", "t2", "t3"});
  CHECK(g.mul("t", "t3") == "e");
  CHECK(g.inv("t") == "t3");
  CHECK(g.validate().valid());
  // the generator has order 4
  int x = g.index("t");
  int power = g.identity();
  for (int k = 1; k <= 4; ++k) {
    power = g.mul(power, x);
    CHECK((power == g.identity()) == (k == 4));
  }
}

TEST_CASE("cyclic group of order 3") {
  auto g = FiniteGroup::cyclic(3);
  CHECK(g.mul("t", "t") == "t2");
  CHECK(g.mul("t2", "t") == "e");
  CHECK(g.mul("t2", "t2") == "t");
  CHECK(g.inv("t") == "t2");
}

TEST_CASE("order zero is rejected") {
  CHECK_THROWS_AS(FiniteGroup::cyclic(0), std::invalid_argument);
}

TEST_CASE("unknown element identifiers throw") {
  auto g = FiniteGroup::cyclic(3);
  CHECK_THROWS_AS(g.mul("t", "nope"), std::invalid_argument);
  CHECK_THROWS_AS(g.inv("sigma"), std::invalid_argument);
}

TEST_CASE("a swapped table entry is caught with its triple") {
  auto c4 = FiniteGroup::cyclic(4);
  std::map<std::pair<std::string, std::string>, std::string> table;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      table[{c4.name(a), c4.name(b)}] = c4.name(c4.mul(a, b));
  table[{"t", "t"}] = "e";  // should be t2
  auto broken = FiniteGroup::from_table(c4.elements(), "e", table);

  auto report = broken.validate();
  CHECK_FALSE(report.valid());

  // oracle: scan all triples over the mutated table directly
  int oracle_violations = 0;
  auto lookup = [&](const std::string& a, const std::string& b) {
    return table.at({a, b});
  };
  for (const auto& a : broken.elements())
    for (const auto& b : broken.elements())
      for (const auto& c : broken.elements())
        if (lookup(lookup(a, b), c) != lookup(a, lookup(b, c)))
          ++oracle_violations;
  CHECK(oracle_violations > 0);
  int reported = 0;
  for (const auto& item : report.items)
    if (item.clause == "associativity") ++reported;
  CHECK(reported == oracle_violations);
}

TEST_CASE("group law properties hold for every constructor") {
  std::vector<FiniteGroup> groups{
      FiniteGroup::cyclic(1), FiniteGroup::cyclic(5),
      FiniteGroup::from_permutations({{1, 0, 2}, {1, 2, 0}}),   // S3
      FiniteGroup::from_permutations({{1, 0, 3, 2}, {2, 3, 0, 1}})};  // V4
  CHECK(groups[2].size() == 6);
  CHECK(groups[3].size() == 4);
  for (const auto& g : groups) {
    CHECK(g.validate().valid());
    for (int x = 0; x < g.size(); ++x) {
      CHECK(g.mul(x, g.inv(x)) == g.identity());
      CHECK(g.mul(g.identity(), x) == x);
    }
  }
}

TEST_CASE("permutation closure respects the size cap") {
  CHECK_THROWS_AS(FiniteGroup::from_permutations({{1, 0, 2}, {1, 2, 0}}, 3),
                  std::runtime_error);
}

TEST_CASE("tables must be total") {
  std::map<std::pair<std::string, std::string>, std::string> partial{
      {{"e", "e"}, "e"}};
  CHECK_THROWS_AS(FiniteGroup::from_table({"e", "x"}, "e", partial),
                  std::invalid_argument);
}
