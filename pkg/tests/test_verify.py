"""The independent verification harness and the universal property suite."""

import pytest

from latcon import birkhoff as bk
from latcon import catalog, core
from latcon import congruence as cg
from latcon import construction as cn
from latcon import verify as vf
from latcon.errors import EmbeddingInvalid

G22 = catalog.rect_catalog()["grid-2x2"]
M3 = catalog.rect_catalog()["m3"]
S7 = catalog.s7()


def _hom(F, G, k=0):
    D = cg.congruence_lattice(F.lattice).as_lattice()
    E = cg.congruence_lattice(G.lattice).as_lattice()
    return bk.enumerate_bounded_homs(D, E)[k]


def _built(F=G22, G=M3):
    phi = _hom(F, G)
    L, rep = cn.filter_representation(F, G, phi)
    return L, rep, phi


class TestRepresentationVerifier:
    def test_passes_on_construction_output(self):
        L, rep, phi = _built()
        out = vf.verify_filter_representation(
            L.lattice, rep.embedded_f, rep.embedded_g, phi
        )
        assert out.summary
        assert [c.name for c in out.checks] == [
            "target-copy-is-filter",
            "restriction-bijective",
            "restriction-diagram",
        ]
        assert all(c.passed for c in out.checks)

    def test_render_text(self):
        L, rep, phi = _built()
        out = vf.verify_filter_representation(
            L.lattice, rep.embedded_f, rep.embedded_g, phi
        )
        text = out.render_text()
        assert text.splitlines()[0] == "PASS target-copy-is-filter"
        assert text.splitlines()[-1] == "summary: PASS"

    def test_ideal_checker_rejects_filter_output(self):
        # same data, wrong-side checker: the copy is a filter, not an ideal
        L, rep, phi = _built()
        out = vf.verify_ideal_representation(
            L.lattice, rep.embedded_f, rep.embedded_g, phi
        )
        assert not out.summary
        failed = {c.name for c in out.checks if not c.passed}
        assert "target-copy-is-ideal" in failed

    def test_ideal_verifier_passes_on_ideal_output(self):
        phi = _hom(M3, G22)
        L, rep = cn.ideal_representation(M3, G22, phi)
        out = vf.verify_ideal_representation(
            L.lattice, rep.embedded_f, rep.embedded_g, phi
        )
        assert out.summary

    def test_scrambled_embedding_rejected(self):
        L, rep, phi = _built()
        bad = tuple(reversed(rep.embedded_g))
        with pytest.raises(EmbeddingInvalid):
            vf.verify_filter_representation(L.lattice, rep.embedded_f, bad, phi)

    def test_non_convex_embedding_rejected(self):
        L, rep, phi = _built()
        with pytest.raises(EmbeddingInvalid):
            vf.verify_filter_representation(
                L.lattice, rep.embedded_f, (0, L.lattice.top), phi
            )

    def test_repeated_elements_rejected(self):
        L, rep, phi = _built()
        bad = (rep.embedded_g[0],) * len(rep.embedded_g)
        with pytest.raises(EmbeddingInvalid):
            vf.verify_filter_representation(L.lattice, rep.embedded_f, bad, phi)

    def test_wrong_hom_endpoints_rejected(self):
        L, rep, phi = _built(G22, M3)
        other = _hom(M3, G22)
        with pytest.raises(EmbeddingInvalid):
            vf.verify_filter_representation(
                L.lattice, rep.embedded_f, rep.embedded_g, other
            )

    def test_wrong_hom_fails_diagram_check(self):
        # both endomorphism endpoints fit, but the map is not the one realized
        homs = bk.enumerate_bounded_homs(
            cg.congruence_lattice(S7.lattice).as_lattice(),
            cg.congruence_lattice(S7.lattice).as_lattice(),
        )
        L, rep = cn.filter_representation(S7, S7, homs[0])
        out = vf.verify_filter_representation(
            L.lattice, rep.embedded_f, rep.embedded_g, homs[3]
        )
        assert not out.summary
        failed = {c.name for c in out.checks if not c.passed}
        assert "restriction-diagram" in failed


class TestLemmaSuite:
    def test_default_catalog_counts_frozen(self):
        rep = vf.lemma_suite()
        assert rep.summary
        got = {c.name: c.witness for c in rep.checks if c.name != "inapplicable-items"}
        assert got == {
            "ideal_singleton_meet_extension": "1218 configurations",
            "rect_ideal_corners_on_lower_chains": "34 configurations",
            "non_eye_corner_decomposition": "124 configurations",
            "outside_ideal_above_a_corner": "180 configurations",
            "singleton_full_congruence_when_upper_chains_untouched": "43 configurations",
            "flap_union_sublattice": "10 configurations",
            "two_piece_congruence_assembly": "60 configurations",
        }

    def test_skip_notes_mention_non_rectangular_items(self):
        rep = vf.lemma_suite()
        note = next(c for c in rep.checks if c.name == "inapplicable-items")
        assert note.passed
        assert "not rectangular" in note.witness

    def test_empty_catalog_is_vacuous_pass(self):
        rep = vf.lemma_suite([])
        assert rep.summary
        assert rep.checks[0].name == "catalog"
        assert "vacuous" in rep.checks[0].witness

    def test_explicit_items_run(self):
        rep = vf.lemma_suite([catalog.s7(), catalog.get("grid-2x2")])
        assert rep.summary
        names = {c.name for c in rep.checks}
        assert "two_piece_congruence_assembly" not in names or rep.summary
        assert "rect_ideal_corners_on_lower_chains" in names
