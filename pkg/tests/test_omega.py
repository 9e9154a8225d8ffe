"""
The tree category: elementary faces and degeneracies, composition, hom-sets against the operadic
criterion, normal forms, enumeration of shapes and the face/degeneracy identities.
"""
import pytest

from itertools import product
from math import comb

from errors import PreconditionError, ResourceLimitError, UnsupportedCaseError
from models.identity_instance import IdentityName
from models.tree import Node, Tree
from models.tree_morphism import MorphismKind, TreeMorphism, composite_edge_map, has_operation
from omega.canonical import code_of
from omega.enumeration import corolla, enumerate_trees, is_open, linear_tree, shape_codes, unit_tree
from omega.faces import degeneracies, degeneracy, edge_inclusion, faces, inner_face, outer_face
from omega.identities import identity_instances, identity_suite
from omega.morphisms import compose, compose_all, hom_set, identity, is_morphism, isomorphism_between, relabel
from omega.normal_form import normal_form
from settings import settings


# -- Helpers -----------------------------------------------------------------

def _leaf(edge):
    return Tree(edge=edge)

def _vertex(edge, *children):
    return Tree(edge=edge, node=Node(children=tuple(children)))

def _remark_tree():
    return _vertex("r", _vertex("e1", _leaf("l1"), _leaf("l2")), _vertex("e2"))

def _stump():
    return _vertex("e0")

def _brute_force_keys(source, target):
    """Edge maps accepted by the operadic criterion, as keys over the sorted source edges."""
    keys = []
    for images in product(target.edges, repeat=len(source.edges)):
        if is_morphism(source, target, dict(zip(source.edges, images))):
            keys.append(tuple(images))
    return sorted(keys)


class TestFaces:
    def test_linear_tree_faces(self):
        found = faces(linear_tree(2))
        assert [face.label() for face in found] == ["inner_face:e1", "outer_face:e0", "outer_face:e1"]
        assert [face.source for face in found] == [
            _vertex("e0", _leaf("e2")),
            _vertex("e1", _leaf("e2")),
            _vertex("e0", _leaf("e1"))
        ]

    def test_corolla_faces_are_edge_inclusions(self):
        found = faces(corolla(2))
        assert [face.kind for face in found] == [MorphismKind.EDGE_INCLUSION] * 3
        assert [face.source for face in found] == [_leaf("e0"), _leaf("e1"), _leaf("e2")]

    def test_stump_face(self):
        assert [face.label() for face in faces(_stump())] == ["edge_inclusion:e0"]

    def test_unit_tree_has_no_faces(self):
        assert faces(unit_tree()) == []

    def test_remark_tree_faces(self):
        found = faces(_remark_tree())
        assert [face.label() for face in found] == ["inner_face:e1", "inner_face:e2", "outer_face:e1", "outer_face:e2"]
        assert found[1].source == _vertex("r", _vertex("e1", _leaf("l1"), _leaf("l2")))
        assert found[3].source == _vertex("r", _vertex("e1", _leaf("l1"), _leaf("l2")), _leaf("e2"))

    def test_faces_are_morphisms(self):
        for face in faces(_remark_tree()):
            assert is_morphism(face.source, face.target, face.edge_map)
            assert face.is_injective()

    def test_inner_face_of_outer_edge(self):
        with pytest.raises(PreconditionError):
            inner_face(_remark_tree(), "l1")

    def test_inner_face_of_unknown_edge(self):
        with pytest.raises(PreconditionError):
            inner_face(_remark_tree(), "zz")

    def test_outer_face_needs_exactly_one_inner_edge(self):
        with pytest.raises(PreconditionError):
            outer_face(_remark_tree(), "r")

    def test_outer_face_of_single_vertex_tree_is_unsupported(self):
        with pytest.raises(UnsupportedCaseError):
            outer_face(corolla(2), "e0")

    def test_edge_inclusion(self):
        face = edge_inclusion(_remark_tree(), "l2")
        assert face.source == _leaf("l2")
        assert face.edge_map == {"l2": "l2"}


class TestDegeneracies:
    def test_merges_unary_vertex_with_its_input(self):
        step = degeneracy(linear_tree(2), "e1")
        assert step.target == _vertex("e0", _leaf("e1+e2"))
        assert step.edge_map == {"e0": "e0", "e1": "e1+e2", "e2": "e1+e2"}
        assert step.is_surjective()

    def test_degeneracies_of_linear_tree(self):
        assert [step.locus for step in degeneracies(linear_tree(3))] == ["e0", "e1", "e2"]

    def test_corolla_has_no_degeneracies(self):
        assert degeneracies(corolla(3)) == []

    def test_binary_vertex_is_rejected(self):
        with pytest.raises(PreconditionError):
            degeneracy(corolla(2), "e0")

    def test_merged_name_avoids_existing_edge(self):
        tree = _vertex("r", _vertex("a", _leaf("b")), _leaf("a+b"))
        step = degeneracy(tree, "a")
        assert step.edge_map == {"a": "a+b'", "a+b": "a+b", "b": "a+b'", "r": "r"}
        assert step.target == _vertex("r", _leaf("a+b'"), _leaf("a+b"))

    def test_hom_set_of_tree_with_merged_looking_edge(self):
        tree = _vertex("r", _vertex("a", _leaf("b")), _leaf("a+b"))
        found = hom_set(tree, tree)
        assert [morphism.key for morphism in found] == _brute_force_keys(tree, tree)
        assert all(composite_edge_map(normal_form(morphism).steps(), tree) == morphism.edge_map for morphism in found)


class TestComposition:
    def test_identity_is_neutral(self):
        face = inner_face(linear_tree(2), "e1")
        assert compose(identity(face.target), face) == face
        assert compose(face, identity(face.source)) == face

    def test_composite_of_faces(self):
        tree = linear_tree(3)
        first = inner_face(tree, "e1")
        second = inner_face(first.source, "e2")
        composite = compose(first, second)
        assert composite.source == _vertex("e0", _leaf("e3"))
        assert composite.edge_map == {"e0": "e0", "e3": "e3"}

    def test_compose_all_reads_right_to_left(self):
        tree = linear_tree(3)
        first = inner_face(tree, "e1")
        second = inner_face(first.source, "e2")
        assert compose_all(first, second, identity(second.source)) == compose(first, second)

    def test_mismatched_endpoints(self):
        with pytest.raises(PreconditionError):
            compose(inner_face(linear_tree(2), "e1"), inner_face(linear_tree(3), "e1"))

    def test_relabel_is_an_isomorphism(self):
        morphism = relabel(linear_tree(1), {"e1": "top"})
        assert morphism.target.edges == ("e0", "top")
        assert morphism.is_isomorphism()

    def test_relabel_must_be_injective(self):
        with pytest.raises(PreconditionError):
            relabel(linear_tree(1), {"e1": "e0"})

    def test_isomorphism_between_non_isomorphic_trees(self):
        with pytest.raises(PreconditionError):
            isomorphism_between(corolla(2), linear_tree(2))

    def test_composition_is_associative(self):
        trees = [canonical.tree for canonical in enumerate_trees(2)]
        checked = 0
        for first_tree, second_tree, third_tree, fourth_tree in product(trees, repeat=4):
            for first in hom_set(first_tree, second_tree):
                for second in hom_set(second_tree, third_tree):
                    inner = compose(second, first)
                    for third in hom_set(third_tree, fourth_tree):
                        checked += 1
                        assert compose(third, inner).key == compose(compose(third, second), first).key
        assert checked > 0


class TestOperadicCriterion:
    def test_unit_operation(self):
        assert has_operation(_remark_tree(), ["e1"], "e1")

    def test_cut_through_stump(self):
        assert has_operation(_remark_tree(), ["l1", "l2"], "r")

    def test_incomplete_cut(self):
        assert not has_operation(_remark_tree(), ["l1", "e2"], "r")

    def test_comparable_inputs(self):
        assert not has_operation(_remark_tree(), ["e1", "l1"], "r")

    def test_constant_only_above_stumps(self):
        assert has_operation(_remark_tree(), [], "e2")
        assert not has_operation(_remark_tree(), [], "r")

    def test_invalid_edge_map_is_rejected_by_the_model(self):
        with pytest.raises(ValueError):
            TreeMorphism(source=corolla(2), target=corolla(2), edge_map={"e0": "e0", "e1": "e1", "e2": "e1"})


class TestHomSet:
    @pytest.mark.parametrize("m", range(0, 3))
    @pytest.mark.parametrize("n", range(0, 4))
    def test_linear_trees_match_monotone_maps(self, m, n):
        assert len(hom_set(linear_tree(m), linear_tree(n))) == comb(n + m + 1, m + 1)

    @pytest.mark.parametrize("source, target", [
        (linear_tree(1), _remark_tree()),
        (corolla(2), _remark_tree()),
        (_stump(), _remark_tree()),
        (_remark_tree(), _remark_tree()),
        (linear_tree(2), linear_tree(1)),
        (linear_tree(3), _vertex("r", _vertex("a", _leaf("b")))),
        (_vertex("r", _vertex("a", _leaf("b"), _leaf("c"))), corolla(2))
    ])
    def test_matches_operadic_criterion(self, source, target):
        assert [morphism.key for morphism in hom_set(source, target)] == _brute_force_keys(source, target)

    def test_points_of_a_tree_are_its_edges(self):
        assert len(hom_set(unit_tree(), _remark_tree())) == 5

    def test_stump_has_one_point_in_remark_tree(self):
        assert [morphism.edge_map for morphism in hom_set(_stump(), _remark_tree())] == [{"e0": "e2"}]

    def test_automorphisms_of_remark_tree(self):
        assert len(hom_set(_remark_tree(), _remark_tree())) == 2

    def test_ordered_by_key(self):
        keys = [morphism.key for morphism in hom_set(linear_tree(1), linear_tree(2))]
        assert keys == sorted(keys)


class TestNormalForm:
    def test_face_has_no_degeneracies(self):
        factorization = normal_form(inner_face(linear_tree(2), "e1"))
        assert factorization.has_only_faces_and_isomorphisms()
        assert [step.label() for step in factorization.faces] == ["inner_face:e1"]

    def test_degenerate_map_starts_with_degeneracies(self):
        morphism = TreeMorphism(source=linear_tree(2), target=linear_tree(1), edge_map={"e0": "e0", "e1": "e0", "e2": "e1"})
        factorization = normal_form(morphism)
        assert [step.locus for step in factorization.degeneracies] == ["e0"]
        assert factorization.isomorphism.target == linear_tree(1)
        assert factorization.faces == ()

    @pytest.mark.parametrize("source, target", [
        (linear_tree(2), linear_tree(2)),
        (linear_tree(3), linear_tree(1)),
        (linear_tree(1), _remark_tree()),
        (corolla(2), _remark_tree()),
        (_remark_tree(), _remark_tree())
    ])
    def test_every_morphism_factors(self, source, target):
        for morphism in hom_set(source, target):
            factorization = morphism.normal_form
            assert all(step.kind == MorphismKind.DEGENERACY for step in factorization.degeneracies)
            assert all(step.kind.is_face() for step in factorization.faces)
            assert factorization.isomorphism.is_isomorphism()

    def test_json_lists_step_labels(self):
        json = normal_form(outer_face(linear_tree(2), "e0")).__json__()
        assert json["degeneracies"] == []
        assert json["faces"] == ["outer_face:e0"]


class TestEnumeration:
    def test_shape_counts(self):
        assert [len(shape_codes(size)) for size in range(1, 5)] == [2, 2, 5, 13]

    def test_one_edge_shapes(self):
        assert shape_codes(1) == ("(e)", "(e[])")

    def test_representatives_are_canonical(self):
        trees = enumerate_trees(4)
        assert len(trees) == 22
        assert len({canonical.code for canonical in trees}) == 22
        assert all(code_of(canonical.tree) == canonical.code for canonical in trees)

    def test_ordered_by_size(self):
        sizes = [len(canonical.tree.edges) for canonical in enumerate_trees(4)]
        assert sizes == sorted(sizes)

    def test_rejects_empty_bound(self):
        with pytest.raises(PreconditionError):
            enumerate_trees(0)

    def test_ceiling(self, monkeypatch):
        monkeypatch.setattr(settings, "max_edges", 3)
        with pytest.raises(ResourceLimitError):
            enumerate_trees(4)

    def test_open_trees(self):
        assert is_open(corolla(2))
        assert not is_open(_remark_tree())


class TestIdentities:
    def test_suite_holds_up_to_six_edges(self):
        instances = identity_suite(6)
        failures = [instance for instance in instances if not instance.holds]
        assert instances
        assert failures == []

    def test_every_identity_is_exercised(self):
        names = {instance.identity for instance in identity_suite(5)}
        assert names == set(IdentityName)

    def test_linear_tree_instances(self):
        instances = identity_instances(linear_tree(3))
        inner_inner = [instance for instance in instances if instance.identity == IdentityName.INNER_INNER]
        assert [instance.locus for instance in inner_inner] == ["e1,e2"]
        assert inner_inner[0].lhs == inner_inner[0].rhs

    def test_single_vertex_tree_has_only_sections(self):
        instances = identity_instances(linear_tree(1))
        assert {instance.identity for instance in instances} == {IdentityName.DEGENERACY_SECTION}
        assert len(instances) == 2
