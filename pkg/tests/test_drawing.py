"""
Drawings of finite dendroidal sets as diagrams of dendrex presentations, their exports, and the
edge-homomorphism probes standing in for the dendraw side.
"""
import json
import pytest

from itertools import product

from dendrex.homs import induced_hom, is_generator_surjective
from dendrex.presentation import dendrex
from drawing.draw import draw, induced_diagram_map, verify_drawing
from drawing.export import drawing_to_dot, to_json
from drawing.probes import dendraw_probe, edge_homs, hom_id
from errors import PreconditionError
from models.star_presentation import StarPresentation
from models.tree import Node, Tree
from omega.enumeration import corolla, enumerate_trees, linear_tree, unit_tree
from omega.morphisms import hom_set
from omega.normal_form import normal_form
from presheaf.representable import boundary, inner_horn, representable


# -- Helpers -----------------------------------------------------------------

def _vertex(edge, *children):
    return Tree(edge=edge, node=Node(children=tuple(children)))

def _small_presheaves(bound):
    """Representables of every tree within `bound`, their boundaries and their inner horns."""
    for canonical in enumerate_trees(bound):
        tree = canonical.tree
        yield representable(tree, bound)
        if not tree.is_unit():
            yield boundary(tree, bound).sub
        for edge in tree.inner_edges:
            yield inner_horn(tree, edge, bound).sub

def _face_arrows_are_generator_surjective(drawing):
    return all(
        is_generator_surjective(item.hom)
        for item in drawing.arrows
        if normal_form(item.arrow.morphism).has_only_faces_and_isomorphisms()
    )

def _first_non_identity(drawing):
    return next(position for position, item in enumerate(drawing.arrows) if not item.arrow.is_identity())


class TestDraw:
    @pytest.mark.parametrize("tree", [linear_tree(1), linear_tree(2), corolla(2), _vertex("e0", _vertex("e1"))])
    def test_representables_and_boundaries(self, tree):
        assert verify_drawing(draw(representable(tree, 3))).passed
        assert verify_drawing(draw(boundary(tree, 3).sub)).passed

    def test_inner_horn(self):
        assert verify_drawing(draw(inner_horn(linear_tree(2), "e1", 3).sub)).passed

    def test_every_small_tree_draws_soundly(self):
        for presheaf in _small_presheaves(3):
            drawing = draw(presheaf)
            assert verify_drawing(drawing).passed
            assert _face_arrows_are_generator_surjective(drawing)

    @pytest.mark.slow
    def test_every_tree_up_to_four_edges_draws_soundly(self):
        for presheaf in _small_presheaves(4):
            drawing = draw(presheaf)
            assert verify_drawing(drawing).passed
            assert _face_arrows_are_generator_surjective(drawing)

    def test_unit_representable_is_generator_surjective(self):
        drawing = draw(representable(unit_tree(), 3))
        assert drawing.arrows
        assert all(is_generator_surjective(item.hom) for item in drawing.arrows)

    def test_nodes_are_dendrices_of_element_trees(self):
        drawing = draw(representable(linear_tree(1), 2))
        assert len(drawing.nodes) == 5
        assert drawing.node("(e[(e)]):e0>e0,e1>e1").generators == ("e0", "e1")
        assert drawing.node("(e):e0>e1") == dendrex(unit_tree())

    def test_homs_run_against_the_arrows(self):
        drawing = draw(representable(linear_tree(1), 2))
        for item in drawing.arrows:
            assert item.hom.source == drawing.node(item.arrow.target.label())
            assert item.hom.target == drawing.node(item.arrow.source.label())

    def test_boundary_of_linear_tree_without_degenerate_elements(self):
        drawing = draw(boundary(linear_tree(1), 2).sub, include_degenerate=False)
        assert sorted(drawing.nodes) == ["(e):e0>e0", "(e):e0>e1"]
        assert all(item.arrow.is_identity() for item in drawing.arrows)

    def test_open_only(self):
        drawing = draw(representable(_vertex("e0", _vertex("e1")), 2), open_only=True)
        assert drawing.open_only
        assert all("[]" not in label.split(":")[0] for label in drawing.nodes)

    def test_broken_unit_is_detected(self):
        drawing = draw(representable(linear_tree(1), 2))
        position = _first_non_identity(drawing)
        item = drawing.arrows[position]
        bogus = item.hom.model_copy(update={"assignment": {generator: () for generator in item.hom.source.generators}})
        report = verify_drawing(drawing.with_arrow(position, bogus))
        assert not report.passed
        assert report.relation == "unit"

    def test_swapped_endpoints_are_detected(self):
        drawing = draw(representable(linear_tree(1), 2))
        position = _first_non_identity(drawing)
        other = next(item for item in drawing.arrows if item.hom.source != drawing.arrows[position].hom.source)
        report = verify_drawing(drawing.with_arrow(position, other.hom))
        assert report.relation == "endpoints"


class TestDiagramMap:
    def test_boundary_inclusion(self):
        inclusion = boundary(linear_tree(2), 3)
        diagram_map = induced_diagram_map(draw(inclusion.sub), draw(inclusion.ambient))
        assert diagram_map.report.passed
        assert diagram_map.arrow_count == len(draw(inclusion.sub).arrows)

    def test_horn_inclusion(self):
        inclusion = inner_horn(linear_tree(2), "e1", 3)
        assert induced_diagram_map(draw(inclusion.sub), draw(inclusion.ambient)).report.passed

    def test_missing_objects(self):
        inclusion = boundary(linear_tree(1), 2)
        report = induced_diagram_map(draw(inclusion.ambient), draw(inclusion.sub)).report
        assert not report.passed
        assert report.relation == "objects"


class TestExport:
    def test_json_is_deterministic(self):
        first = to_json(draw(representable(corolla(2), 3)))
        second = to_json(draw(representable(corolla(2), 3)))
        assert first == second
        assert json.loads(first)["label"] == "dr(Omega[e0[e1 e2]])"

    def test_json_of_lists(self):
        assert json.loads(to_json([dendrex(unit_tree())]))[0]["generators"] == ["e0"]

    def test_dot(self):
        dot = drawing_to_dot(draw(representable(linear_tree(1), 2)))
        assert dot.startswith('digraph "dr(Omega[e0[e1]])" {')
        assert '"(e[(e)]):e0>e0,e1>e1" [label="(e[(e)])"];' in dot
        assert dot.rstrip().endswith("}")


class TestProbes:
    def test_edge_homs_of_linear_tree(self):
        presentation = dendrex(linear_tree(1))
        homs = edge_homs(presentation, presentation)
        assert len(homs) == 4
        assert all(hom.verified for hom in homs)

    def test_zero_relations_cut_down_edge_homs(self):
        assert len(edge_homs(dendrex(corolla(2)), dendrex(linear_tree(1)))) == 7

    def test_hom_id(self):
        presentation = dendrex(linear_tree(1))
        ids = sorted(hom_id(hom) for hom in edge_homs(presentation, presentation))
        assert "e0>e0;e1>e1" in ids

    def test_needs_full_unit_sum(self):
        partial = StarPresentation(name="partial", generators=("a", "b"), unit_sum=("a",))
        with pytest.raises(PreconditionError):
            edge_homs(partial, dendrex(unit_tree()))

    def test_induced_homs_are_edge_homs(self):
        trees = [canonical.tree for canonical in enumerate_trees(3)]
        for source, target in product(trees, repeat=2):
            found = {hom_id(hom) for hom in edge_homs(dendrex(target), dendrex(source))}
            for morphism in hom_set(source, target):
                assert hom_id(induced_hom(morphism)) in found

    def test_dendraw_of_linear_tree_over_itself(self):
        presheaf = dendraw_probe(dendrex(linear_tree(1)), 2)
        assert len(presheaf.values["(e[(e)])"]) == 4

    def test_probe_of_the_complex_numbers_is_terminal(self):
        probe = dendraw_probe(dendrex(unit_tree()), 2)
        assert all(len(elements) == 1 for elements in probe.values.values())
