import pytest

from cyclelink.connectivity import is_massed
from cyclelink.errors import GenerationError, GraphError
from cyclelink.extremal import ExtremalCertificate, generate, recognize
from cyclelink.graph import complete_graph, cycle_graph
from cyclelink.minor import find_rooted_cycle_minor


def test_core_member_sizes(e0, e1, e2):
    assert e0[0].n == 7
    assert e1[0].n == 10
    assert e2[0].n == 13


def test_global_density_is_exact(e0, e1, e2):
    for g, roots in (e0, e1, e2):
        rest = set(g.vertices()) - set(roots)
        assert g.rho(rest) == 5 * len(rest) + 1


def test_members_are_massed_but_not_linked(e0, e1, e2):
    for g, roots in (e0, e1, e2):
        assert is_massed(g, roots, 5).massed
        assert find_rooted_cycle_minor(g, roots) is None


def test_recognizer_returns_verified_certificate(e1):
    g, roots = e1
    cert = recognize(g, roots)
    assert cert is not None
    assert cert.verify(g)
    assert sorted(cert.apex_pair) == [6, 7]
    assert len(cert.components) == 1
    comp, idx = cert.components[0]
    assert len(comp) == 3
    # attachments are {a, b, x_idx, x_{idx+2}}
    order = cert.roots
    allowed = {*cert.apex_pair, order[idx], order[(idx + 2) % 5]}
    assert g.neighborhood(comp) <= allowed


def test_recognizer_rejects_non_members():
    k7 = complete_graph(list(range(7)))
    assert recognize(k7, {0, 1, 2, 3, 4}) is None
    with pytest.raises(GraphError):
        recognize(k7, {0, 1, 2})


def test_recognizer_rejects_perturbed_member(e1):
    g, roots = e1
    # an extra root-component edge breaks the global density target
    broken = g.add_edges([(2, 8)])
    assert recognize(broken, roots) is None
    # deleting an apex-root edge breaks it the other way
    broken = g.delete_edge(6, 1)
    assert recognize(broken, roots) is None


def test_certificate_verify_catches_tampering(e1):
    g, roots = e1
    cert = recognize(g, roots)
    # rotating the labeling desynchronizes the stored attachment indices
    rotated = ExtremalCertificate(
        cert.roots[1:] + cert.roots[:1], cert.apex_pair, cert.components
    )
    assert not rotated.verify(g)
    bad_apex = ExtremalCertificate(cert.roots, (1, 2), cert.components)
    assert not bad_apex.verify(g)
    bad_comp = ExtremalCertificate(cert.roots, cert.apex_pair, ())
    assert not bad_comp.verify(g)


def test_certificate_json(e1):
    g, roots = e1
    cert = recognize(g, roots)
    d = cert.to_json_dict()
    assert set(d) == {"roots", "apex_pair", "components"}
    assert d["components"][0]["attachment_index"] in range(5)


def test_generate_bigger_components():
    g, roots = generate([(2, 5)])
    assert g.n == 12
    rest = set(g.vertices()) - set(roots)
    assert g.rho(rest) == 5 * len(rest) + 1
    comps = g.delete(set(roots) | {6, 7}).components()
    assert len(comps) == 1 and len(comps[0]) == 5
    assert g.rho(comps[0]) == 5 * 5
    assert recognize(g, roots) is not None
    assert find_rooted_cycle_minor(g, roots) is None


def test_generate_multiple_components():
    g, roots = generate([(1, 3), (3, 4), (5, 3)])
    assert recognize(g, roots) is not None
    assert find_rooted_cycle_minor(g, roots) is None


def test_generate_rejects_bad_specs():
    with pytest.raises(GenerationError):
        generate([(0, 3)])
    with pytest.raises(GenerationError):
        generate([(6, 3)])
    with pytest.raises(GenerationError):
        generate([(1, 2)])


def test_generate_deterministic():
    g1, _ = generate([(1, 3), (2, 3)])
    g2, _ = generate([(1, 3), (2, 3)])
    assert g1 == g2


def test_recognizer_needs_apex_pair():
    # a cycle has the wrong density and no dominating pair
    c7 = cycle_graph(list(range(7)))
    assert recognize(c7, {0, 1, 2, 3, 4}) is None
