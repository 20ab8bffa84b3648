"""End-to-end smoke tests for the python bindings."""

import json
import os

import pytest

import quiverpa as qp


def fixture_text(name: str) -> str:
    root = os.environ.get("QUIVERPA_FIXTURES", "fixtures")
    with open(os.path.join(root, name), encoding="utf-8") as handle:
        return handle.read()


@pytest.fixture
def c3_partial():
    group = qp.FiniteGroup.cyclic(3)
    quiver = qp.Quiver(["v1", "v2"], [("f", "v1", "v2")])
    return qp.QuiverPartialAction(
        group,
        quiver,
        domains={"t": (["v1"], []), "t2": (["v2"], [])},
        vertex_maps={"t": {"v2": "v1"}, "t2": {"v1": "v2"}},
        arrow_maps={},
    )


def test_cyclic_group_arithmetic():
    g = qp.FiniteGroup.cyclic(4)
    assert g.elements == ["e", "t", "t2", "t3"]
    assert g.mul("t", "t3") == "e"
    assert g.inv("t") == "t3"
    assert g.validate().valid


def test_envelope_of_the_arrow_action(c3_partial):
    assert c3_partial.check().valid
    env = qp.envelope(c3_partial)
    assert len(env.quiver.vertices) == 3
    assert len(env.quiver.arrows) == 3
    assert env.check().valid
    assert env.embedding.vertex_map["v1"] == "(e,v1)"
    # the non-ideal witnesses behind the subalgebra-based definition
    assert qp.not_ideal_witness(c3_partial, "t", 1) is not None
    assert qp.not_ideal_witness(c3_partial, "t2", 1) is not None
    assert qp.check_induced_action(c3_partial, 4).valid
    assert qp.check_algebra_globalization(env, 4).valid


def test_shuffled_envelopes_are_isomorphic(c3_partial):
    e1 = qp.envelope(c3_partial)
    e2 = qp.envelope(c3_partial, shuffle_seed=99)
    phi = qp.enveloping_isomorphism(e1, e2)
    assert phi.is_isomorphism()
    eta = qp.canonical_algebra_isomorphism(e1, e2, 3)
    assert len(eta) == qp.truncated_dimension(e1.quiver, 3)


def test_restriction_through_an_envelope(c3_partial):
    env = qp.envelope(c3_partial)
    restricted = qp.restrict_global_action(
        env.global_action,
        vertices=["(e,v1)", "(e,v2)"],
        arrows=["(e,f)"],
    )
    assert restricted.check().valid
    assert restricted.domain("t") == (["(e,v1)"], [])


def test_automorphisms_of_the_four_cycle():
    quiver = qp.Quiver(
        ["1", "2", "3", "4"],
        [("a", "1", "2"), ("b", "2", "3"), ("c", "3", "4"), ("d", "4", "1")],
    )
    auts = qp.automorphisms(quiver)
    assert len(auts) == 4
    dot = qp.export_dot(quiver, highlight_vertices=["1", "2"], highlight_arrows=["a"])
    assert "digraph" in dot and "fillcolor" in dot


def test_cli_pipeline_dimension_split():
    code, output = qp.run_command(
        "algebra-check", fixture_text("c4_cycle_restriction.qpa")
    )
    assert code == 0
    assert "sum dim = 12, generated dim = 16, strict: yes" in output

    code, output = qp.run_command(
        "globalize", fixture_text("c3_arrow_action.qpa"), structured=True
    )
    assert code == 0
    payload = json.loads(output)
    assert len(payload["quiver"]["vertices"]) == 3
    assert payload["status"] == "ok"


def test_error_paths():
    code, output = qp.run_command("validate", "nonsense\n")
    assert code == 2
    with pytest.raises(ValueError):
        qp.FiniteGroup.cyclic(0)
