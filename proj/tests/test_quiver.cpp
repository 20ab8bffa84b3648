#include <algorithm>

#include "doctest.h"
#include "quiverpa/quiver.hpp"
#include "testsupport.hpp"

using namespace qpa;

TEST_CASE("the four-cycle is a valid quiver") {
  CHECK(testsupport::four_cycle().validate().valid());
}

TEST_CASE("empty quiver is valid and exports cleanly") {
  Quiver q;
  CHECK(q.validate().valid());
  CHECK(export_dot(q) == "digraph quiver {\n}\n");
}

TEST_CASE("subquiver closure violations are reported") {
  auto q = testsupport::four_cycle();
  Subquiver s = Subquiver::of(q, {"2", "3"}, {"a"});
  auto report = s.validate();
  REQUIRE_FALSE(report.valid());
  CHECK(report.items[0].clause == "closure");
  CHECK(report.items[0].message.find("'1'") != std::string::npos);
}

TEST_CASE("dangling arrows are reported") {
  Quiver q({"1"}, {{"a", "1", "9"}});
  auto report = q.validate();
  REQUIRE_FALSE(report.valid());
  CHECK(report.items[0].clause == "dangling");
}

namespace {

// brute-force automorphism count over all vertex bijections
int brute_force_automorphisms(const Quiver& q) {
  int n = q.n_vertices();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  int count = 0;
  do {
    // arc multiplicities must match pairwise
    bool ok = true;
    std::map<std::pair<int, int>, int> from, to;
    for (int a = 0; a < q.n_arrows(); ++a) {
      ++from[{q.source_of(a), q.target_of(a)}];
      ++to[{perm[q.source_of(a)], perm[q.target_of(a)]}];
    }
    ok = from == to;
    if (!ok) continue;
    // extensions to arrows: product of factorials of parallel classes
    int ways = 1;
    for (const auto& [pair, k] : from)
      for (int i = 2; i <= k; ++i) ways *= i;
    count += ways;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace

TEST_CASE("automorphism groups of small quivers") {
  Quiver arrow({"u", "v"}, {{"f", "u", "v"}});
  CHECK(automorphisms(arrow).size() == 1);

  auto cycle = testsupport::four_cycle();
  auto auts = automorphisms(cycle);
  CHECK(auts.size() == 4);
  CHECK(auts.size() == static_cast<std::size_t>(brute_force_automorphisms(cycle)));

  Quiver parallel({"u", "v"}, {{"f", "u", "v"}, {"g", "u", "v"}});
  auto pauts = automorphisms(parallel);
  CHECK(pauts.size() == 2);
  CHECK(pauts.size() ==
        static_cast<std::size_t>(brute_force_automorphisms(parallel)));
}

TEST_CASE("automorphisms form a group") {
  auto cycle = testsupport::four_cycle();
  auto auts = automorphisms(cycle);
  bool has_identity = false;
  for (const auto& f : auts) {
    CHECK(f.is_isomorphism());
    if (f == QuiverMorphism::identity(cycle)) has_identity = true;
    // closure under inverse
    auto finv = invert(f);
    CHECK(std::find(auts.begin(), auts.end(), finv) != auts.end());
    // morphism condition on every arrow
    for (int a = 0; a < cycle.n_arrows(); ++a) {
      CHECK(f.apply_vertex(cycle.source_of(a)) ==
            cycle.source_of(f.apply_arrow(a)));
      CHECK(f.apply_vertex(cycle.target_of(a)) ==
            cycle.target_of(f.apply_arrow(a)));
    }
  }
  CHECK(has_identity);
  for (const auto& f : auts)
    for (const auto& g : auts)
      CHECK(std::find(auts.begin(), auts.end(), compose(f, g)) != auts.end());
}

TEST_CASE("the enumeration cap throws") {
  Quiver parallel({"u", "v"}, {{"f", "u", "v"}, {"g", "u", "v"}});
  CHECK_THROWS_AS(automorphisms(parallel, 1), std::runtime_error);
}

TEST_CASE("composition and inversion of rotations") {
  auto b = testsupport::c4_rotation();
  auto rot1 = b.beta(1);
  auto rot2 = b.beta(2);
  auto rot3 = b.beta(3);
  CHECK(compose(rot1, rot1) == rot2);
  CHECK(compose(QuiverMorphism::identity(b.quiver), rot1) == rot1);
  CHECK(compose(rot1, invert(rot1)) == QuiverMorphism::identity(b.quiver));
  CHECK(invert(rot1) == rot3);
}

TEST_CASE("collapsing morphisms are not isomorphisms") {
  Quiver two({"u", "v"}, {});
  Quiver one({"w"}, {});
  auto collapse = QuiverMorphism::make(two, one, {0, 0}, {});
  CHECK_FALSE(collapse.is_isomorphism());
  CHECK_THROWS_AS(invert(collapse), std::invalid_argument);
  CHECK(QuiverMorphism::identity(two).is_isomorphism());
}

TEST_CASE("restriction of the rotation to a closed subquiver") {
  auto b = testsupport::c4_rotation();
  auto sub = Subquiver::of(b.quiver, {"2", "3"}, {"b"});
  auto restricted = restrict_morphism(b.beta(1), sub);
  CHECK(restricted.source().vertices() == std::vector<std::string>{"2", "3"});
  CHECK(restricted.target().vertices() == std::vector<std::string>{"3", "4"});
  CHECK(restricted.target().arrows()[0].id == "c");
  CHECK(restricted.apply_vertex(0) == 0);  // 2 -> 3
  CHECK(restricted.apply_vertex(1) == 1);  // 3 -> 4
  CHECK(restricted.apply_arrow(0) == 0);   // b -> c
}

TEST_CASE("morphisms that break the commuting condition are rejected") {
  auto q = testsupport::four_cycle();
  std::vector<int> vm{0, 1, 2, 3};
  std::vector<int> am{1, 0, 2, 3};  // a -> b without moving vertices
  CHECK_THROWS_AS(QuiverMorphism::make(q, q, vm, am), std::invalid_argument);
}

TEST_CASE("random quivers: enumeration agrees with the brute-force oracle") {
  std::mt19937_64 rng(1812);
  for (int trial = 0; trial < 30; ++trial) {
    auto q = testsupport::random_quiver(rng, 5, 6);
    auto auts = automorphisms(q);
    CHECK(auts.size() ==
          static_cast<std::size_t>(brute_force_automorphisms(q)));
  }
}

TEST_CASE("composition requires matching quivers") {
  auto cycle = testsupport::four_cycle();
  Quiver arrow({"u", "v"}, {{"f", "u", "v"}});
  CHECK_THROWS_AS(compose(QuiverMorphism::identity(cycle),
                          QuiverMorphism::identity(arrow)),
                  std::invalid_argument);
}

TEST_CASE("restriction to a non-closed subquiver is rejected") {
  auto b = testsupport::c4_rotation();
  Subquiver broken = Subquiver::of(b.quiver, {"2"}, {"a"});
  CHECK_THROWS_AS(restrict_morphism(b.beta(1), broken), std::invalid_argument);
}

TEST_CASE("dot export is deterministic and highlights subquivers") {
  auto q = testsupport::four_cycle();
  CHECK(export_dot(q) == export_dot(testsupport::four_cycle()));

  auto dot = export_dot(q, testsupport::path_subquiver());
  CHECK(std::count(dot.begin(), dot.end(), '\n') == 2 + 4 + 4);
  std::size_t highlighted_nodes = 0, highlighted_edges = 0, pos = 0;
  while ((pos = dot.find("fillcolor", pos)) != std::string::npos) {
    ++highlighted_nodes;
    ++pos;
  }
  pos = 0;
  while ((pos = dot.find("penwidth", pos)) != std::string::npos) {
    ++highlighted_edges;
    ++pos;
  }
  CHECK(highlighted_nodes == 3);
  CHECK(highlighted_edges == 2);
}
