#include "doctest.h"
#include "quiverpa/quiver_paction.hpp"
#include "testsupport.hpp"

using namespace qpa;

TEST_CASE("the C3 arrow partial action is valid") {
  CHECK(check_quiver_partial_action(testsupport::c3_arrow_partial()).valid());
}

TEST_CASE("restricting the rotation reproduces the expected domains") {
  auto a = testsupport::c4_restriction();
  REQUIRE(check_quiver_partial_action(a).valid());
  const Quiver& q = a.quiver;
  auto vertex_names = [&](int g) {
    std::vector<std::string> names;
    for (int v : a.domains[g].vertices) names.push_back(q.vertex_name(v));
    return names;
  };
  auto arrow_names = [&](int g) {
    std::vector<std::string> names;
    for (int x : a.domains[g].arrows) names.push_back(q.arrow(x).id);
    return names;
  };
  CHECK(vertex_names(1) == std::vector<std::string>{"2", "3"});
  CHECK(vertex_names(2) == std::vector<std::string>{"1", "3"});
  CHECK(vertex_names(3) == std::vector<std::string>{"1", "2"});
  CHECK(arrow_names(1) == std::vector<std::string>{"b"});
  CHECK(arrow_names(2).empty());
  CHECK(arrow_names(3) == std::vector<std::string>{"a"});
  // alpha_t(a) = b and alpha_t3(b) = a
  CHECK(a.arrow_maps[1].at(q.arrow_index("a")) == q.arrow_index("b"));
  CHECK(a.arrow_maps[3].at(q.arrow_index("b")) == q.arrow_index("a"));
  // alpha_t2 swaps 1 and 3
  CHECK(a.vertex_maps[2].at(q.vertex_index("1")) == q.vertex_index("3"));
  CHECK(a.vertex_maps[2].at(q.vertex_index("3")) == q.vertex_index("1"));
}

TEST_CASE("an enlarged arrow domain breaks the set-level axioms") {
  auto a = testsupport::c4_restriction();
  a.domains[1].arrows = {0, 1};  // declare both a and b in the t-domain
  auto report = check_quiver_partial_action(a);
  CHECK_FALSE(report.valid());
}

TEST_CASE("restriction to the full quiver is the global action itself") {
  auto b = testsupport::c4_rotation();
  auto a = restrict_global_action(b, Subquiver::full(b.quiver));
  REQUIRE(check_quiver_partial_action(a).valid());
  for (int g = 0; g < 4; ++g) {
    CHECK(a.domains[g].vertices.size() == 4);
    CHECK(a.domains[g].arrows.size() == 4);
    for (int v = 0; v < 4; ++v)
      CHECK(a.vertex_maps[g].at(v) == b.vertex_action[g][v]);
  }
}

TEST_CASE("restricting to a single free vertex empties every domain") {
  auto b = testsupport::c4_rotation();
  auto a = restrict_global_action(b, Subquiver::of(b.quiver, {"1"}, {}));
  REQUIRE(check_quiver_partial_action(a).valid());
  for (int g = 1; g < 4; ++g) {
    CHECK(a.domains[g].vertices.empty());
    CHECK(a.domains[g].arrows.empty());
  }
  // its envelope is the free orbit: four isolated vertices
  auto envelope = envelope_quiver_action(a);
  CHECK(envelope.global.quiver.n_vertices() == 4);
  CHECK(envelope.global.quiver.n_arrows() == 0);
}

TEST_CASE("the empty restriction envelopes to the empty quiver") {
  auto b = testsupport::c4_rotation();
  auto a = restrict_global_action(b, Subquiver::of(b.quiver, {}, {}));
  REQUIRE(check_quiver_partial_action(a).valid());
  auto envelope = envelope_quiver_action(a);
  CHECK(envelope.global.quiver.n_vertices() == 0);
  CHECK(envelope.global.quiver.n_arrows() == 0);
  CHECK(check_enveloping(envelope).valid());
}

TEST_CASE("the enveloping quiver of the C3 arrow action is a 3-cycle") {
  auto envelope = envelope_quiver_action(testsupport::c3_arrow_partial());
  const Quiver& big = envelope.global.quiver;
  CHECK(big.vertices() ==
        std::vector<std::string>{"(e,v1)", "(e,v2)", "(t,v1)"});
  REQUIRE(big.n_arrows() == 3);
  CHECK(big.arrow(0) == Arrow{"(e,f)", "(e,v1)", "(e,v2)"});
  CHECK(big.arrow(1) == Arrow{"(t,f)", "(t,v1)", "(e,v1)"});
  CHECK(big.arrow(2) == Arrow{"(t2,f)", "(e,v2)", "(t,v1)"});
  CHECK(check_enveloping(envelope).valid());
}

TEST_CASE("a global action is its own envelope up to isomorphism") {
  auto b = testsupport::c4_rotation();
  auto a = restrict_global_action(b, Subquiver::full(b.quiver));
  auto envelope = envelope_quiver_action(a);
  CHECK(envelope.global.quiver.n_vertices() == 4);
  CHECK(envelope.global.quiver.n_arrows() == 4);
  CHECK(envelope.embedding.is_isomorphism());
}

TEST_CASE("the hand-given rotation envelopes the restricted action") {
  auto b = testsupport::c4_rotation();
  auto sub = testsupport::path_subquiver();
  auto a = restrict_global_action(b, sub);

  // the full rotation with the literal inclusion is an enveloping action
  std::vector<int> vm, am;
  for (int v : sub.vertices) vm.push_back(v);
  for (int x : sub.arrows) am.push_back(x);
  EnvelopingQuiverAction by_hand(
      b, QuiverMorphism::make(a.quiver, b.quiver, vm, am), a);
  CHECK(check_enveloping(by_hand).valid());

  // and the constructed one is equivariantly isomorphic to it
  auto constructed = envelope_quiver_action(a);
  auto phi = enveloping_isomorphism(constructed, by_hand);
  CHECK(phi.is_isomorphism());
  CHECK(enveloping_isomorphism(constructed, constructed) ==
        QuiverMorphism::identity(constructed.global.quiver));
}

TEST_CASE("an enveloping action with an extra fixed vertex fails minimality") {
  auto b = testsupport::c4_rotation();
  auto sub = testsupport::path_subquiver();
  auto a = restrict_global_action(b, sub);

  Quiver padded({"1", "2", "3", "4", "z"},
                {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "4"},
                 {"d", "4", "1"}});
  GlobalQuiverAction padded_action;
  padded_action.group = b.group;
  padded_action.quiver = padded;
  padded_action.vertex_action.resize(4);
  padded_action.arrow_action = b.arrow_action;
  for (int g = 0; g < 4; ++g) {
    padded_action.vertex_action[g].resize(5);
    for (int v = 0; v < 4; ++v)
      padded_action.vertex_action[g][v] = b.vertex_action[g][v];
    padded_action.vertex_action[g][4] = 4;
  }
  REQUIRE(padded_action.validate().valid());

  std::vector<int> vm, am;
  for (int v : sub.vertices) vm.push_back(v);
  for (int x : sub.arrows) am.push_back(x);
  EnvelopingQuiverAction padded_envelope(
      padded_action, QuiverMorphism::make(a.quiver, padded, vm, am), a);
  auto report = check_enveloping(padded_envelope);
  REQUIRE_FALSE(report.valid());
  bool clause_c = false;
  for (const auto& item : report.items)
    if (item.clause == "(c)" && item.message.find("'z'") != std::string::npos)
      clause_c = true;
  CHECK(clause_c);
}

TEST_CASE("a shuffled envelope is still connected by the canonical map") {
  auto a = testsupport::c4_restriction();
  auto e1 = envelope_quiver_action(a);
  GlobalizeOptions opts;
  opts.shuffle_seed = 12345;
  auto e2 = envelope_quiver_action(a, opts);
  auto phi = enveloping_isomorphism(e1, e2);
  CHECK(phi.is_isomorphism());
}

TEST_CASE("round trip: restriction along the embedding returns the input") {
  std::mt19937_64 rng(987654);
  for (int trial = 0; trial < 25; ++trial) {
    auto inst = testsupport::random_instance(rng);
    auto envelope = envelope_quiver_action(inst.partial);
    CHECK(restriction_along_embedding(envelope) == inst.partial);
  }
}

TEST_CASE("envelope of a restriction matches the orbit sub-action") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 25; ++trial) {
    auto inst = testsupport::random_instance(rng);
    auto orbit = testsupport::orbit_envelope(inst);
    REQUIRE(orbit.global.validate().valid());
    REQUIRE(check_enveloping(orbit).valid());

    auto constructed = envelope_quiver_action(inst.partial);
    auto phi = enveloping_isomorphism(constructed, orbit);
    CHECK(phi.is_isomorphism());
  }
}

TEST_CASE("the checker verdict predicts envelope constructibility") {
  std::mt19937_64 rng(0xd1ff);
  int tried = 0;
  while (tried < 150) {
    auto inst = testsupport::random_instance(rng);
    auto mutant = inst.partial;
    if (!testsupport::mutate_quiver_action(mutant, rng)) continue;
    if (mutant == inst.partial) continue;
    ++tried;
    bool checker_valid = check_quiver_partial_action(mutant).valid();
    bool envelope_ok = false;
    try {
      auto envelope = envelope_quiver_action(mutant);
      envelope_ok = true;
      CHECK(restriction_along_embedding(envelope) == mutant);
    } catch (const std::invalid_argument&) {
    }
    CHECK(checker_valid == envelope_ok);
  }
}

TEST_CASE("enveloping actions of different partial actions are rejected") {
  auto e1 = envelope_quiver_action(testsupport::c4_restriction());
  auto e2 = envelope_quiver_action(testsupport::c3_arrow_partial());
  CHECK_THROWS_AS(enveloping_isomorphism(e1, e2), std::invalid_argument);
}

TEST_CASE("enveloping an invalid action is rejected") {
  auto a = testsupport::c4_restriction();
  a.domains[1].arrows = {0, 1};
  CHECK_THROWS_AS(envelope_quiver_action(a), std::invalid_argument);
}
