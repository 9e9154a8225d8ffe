"""
Finite dendroidal sets: representables, boundaries, inner horns, categories of elements and normal
monomorphisms, including a quotient on which an automorphism acts with a fixed point.
"""
import pytest

from math import comb

from errors import PreconditionError, PresheafValidationError
from models.fin_dendroidal_set import FinDendroidalSet, Inclusion
from models.tree import Node, Tree
from models.tree_morphism import MorphismKind, TreeMorphism
from omega.canonical import code_of
from omega.enumeration import corolla, enumerate_trees, linear_tree, unit_tree
from omega.morphisms import compose, hom_set
from presheaf.builder import build_presheaf, canonical_trees, generating_morphisms, signature
from presheaf.elements import category_of_elements, is_degenerate, nondegenerate_count, validate_presheaf
from presheaf.normal_mono import is_normal_mono
from presheaf.representable import (
    boundary,
    empty_presheaf,
    inner_horn,
    is_contained,
    open_part,
    representable
)

LEAF = "(e)"
STUMP = "(e[])"
LINEAR_1 = "(e[(e)])"
LINEAR_2 = "(e[(e[(e)])])"
COROLLA_2 = "(e[(e)(e)])"


# -- Helpers -----------------------------------------------------------------

def _vertex(edge, *children):
    return Tree(edge=edge, node=Node(children=tuple(children)))

def _trees_with_faces(max_edges):
    return [canonical.tree for canonical in enumerate_trees(max_edges) if not canonical.tree.is_unit()]

def _orbit_quotient(bound=3):
    """Maps into the 2-corolla up to swapping its leaves; the swap fixes the class of the identity."""
    tree = corolla(2)
    swap = TreeMorphism.trusted(tree, tree, {"e0": "e0", "e1": "e2", "e2": "e1"}, MorphismKind.ISOMORPHISM)
    representatives = {}

    def orbit(morphism):
        return min(signature(morphism), signature(compose(swap, morphism)))

    def elements_at(source):
        found = {}
        for morphism in hom_set(source, tree):
            found.setdefault(orbit(morphism), morphism)
        representatives[code_of(source)] = found
        return list(found)

    def act(generator, element):
        return orbit(compose(representatives[code_of(generator.target)][element], generator))

    return build_presheaf("Omega[C2]/Aut", bound, elements_at, act)


class TestBuilder:
    def test_canonical_trees(self):
        assert [code_of(tree) for tree in canonical_trees(2)] == [LEAF, STUMP, LINEAR_1, "(e[(e[])])"]

    def test_generating_morphisms_of_linear_tree(self):
        kinds = [morphism.kind for morphism in generating_morphisms(linear_tree(1))]
        assert kinds == [MorphismKind.EDGE_INCLUSION, MorphismKind.EDGE_INCLUSION, MorphismKind.DEGENERACY]

    def test_generating_morphisms_include_automorphisms(self):
        kinds = [morphism.kind for morphism in generating_morphisms(corolla(2))]
        assert kinds.count(MorphismKind.ISOMORPHISM) == 1

    def test_generating_morphisms_need_canonical_tree(self):
        with pytest.raises(PreconditionError):
            generating_morphisms(linear_tree(1).relabel({"e0": "a", "e1": "b"}))

    def test_non_functorial_actions_are_rejected(self):
        with pytest.raises(PresheafValidationError):
            build_presheaf(
                "broken",
                2,
                lambda tree: ["x", "y"],
                lambda generator, element: "y" if generator.kind == MorphismKind.DEGENERACY else "x"
            )

    def test_broken_section_names_the_identity(self):
        presheaf = representable(linear_tree(1), 2)
        actions = tuple(
            action.model_copy(update={"table": {**action.table, "e0>e1,e1>e1": "e0>e0"}})
            if action.kind == MorphismKind.EDGE_INCLUSION and action.target_code == LINEAR_1 and action.morphism.locus == "e0"
            else action
            for action in presheaf.actions
        )
        broken = FinDendroidalSet(label="broken", bound=2, values=presheaf.values, actions=actions)
        with pytest.raises(PresheafValidationError) as error:
            validate_presheaf(broken)
        assert "violates identity VII" in error.value.detail


class TestRepresentable:
    def test_linear_tree_values(self):
        presheaf = representable(linear_tree(1), 2)
        assert presheaf.values[LEAF] == ("e0>e0", "e0>e1")
        assert presheaf.values[STUMP] == ()
        assert len(presheaf.values[LINEAR_1]) == 3

    @pytest.mark.parametrize("n", range(0, 3))
    def test_linear_values_are_monotone_maps(self, n):
        presheaf = representable(linear_tree(n), 3)
        for m in range(0, 3):
            assert len(presheaf.elements(code_of(linear_tree(m)))) == comb(n + m + 1, m + 1)

    def test_degenerate_elements(self):
        presheaf = representable(linear_tree(1), 2)
        assert nondegenerate_count(presheaf, LINEAR_1) == 1
        assert nondegenerate_count(presheaf, LEAF) == 2
        assert is_degenerate(presheaf, LINEAR_1, "e0>e0,e1>e0")
        assert not is_degenerate(presheaf, LINEAR_1, "e0>e0,e1>e1")

    def test_functorial(self):
        assert validate_presheaf(representable(corolla(2), 3)) > 0

    def test_tree_larger_than_bound(self):
        with pytest.raises(PreconditionError):
            representable(linear_tree(3), 2)

    def test_json_shape(self):
        json = representable(unit_tree(), 1).__json__()
        assert json["values"] == {LEAF: ["e0>e0"], STUMP: []}
        assert json["bound"] == 1


class TestBoundaryAndHorn:
    def test_boundary_of_linear_tree_misses_the_identity(self):
        inclusion = boundary(linear_tree(1), 2)
        assert inclusion.sub.values[LEAF] == ("e0>e0", "e0>e1")
        assert "e0>e0,e1>e1" not in inclusion.sub.values[LINEAR_1]
        assert all(is_degenerate(inclusion.sub, LINEAR_1, element) for element in inclusion.sub.values[LINEAR_1])

    def test_boundary_of_two_simplex(self):
        inclusion = boundary(linear_tree(2), 3)
        assert len(inclusion.sub.values[LINEAR_2]) == len(inclusion.ambient.values[LINEAR_2]) - 1

    def test_inner_horn_of_two_simplex(self):
        inclusion = inner_horn(linear_tree(2), "e1", 3)
        assert len(inclusion.ambient.values[LINEAR_1]) == 6
        assert len(inclusion.sub.values[LINEAR_1]) == 5
        assert "e0>e0,e1>e2" not in inclusion.sub.values[LINEAR_1]

    @pytest.mark.parametrize("n", range(1, 4))
    def test_boundary_of_linear_tree_counts_non_surjective_maps(self, n):
        inclusion = boundary(linear_tree(n), 4)
        for m in range(0, 4):
            expected = comb(n + m + 1, m + 1) - comb(m, n)
            assert len(inclusion.sub.elements(code_of(linear_tree(m)))) == expected

    @pytest.mark.parametrize("n, k", [(2, 1), (3, 1), (3, 2)])
    def test_inner_horn_of_linear_tree_counts(self, n, k):
        inclusion = inner_horn(linear_tree(n), f"e{k}", 4)
        for m in range(0, 4):
            expected = comb(n + m + 1, m + 1) - comb(m, n) - comb(m, n - 1)
            assert len(inclusion.sub.elements(code_of(linear_tree(m)))) == expected

    def test_inner_horn_needs_inner_edge(self):
        with pytest.raises(PreconditionError):
            inner_horn(linear_tree(2), "e0", 3)

    def test_unit_tree_has_no_boundary(self):
        with pytest.raises(PreconditionError):
            boundary(unit_tree(), 2)

    def test_containment(self):
        inclusion = boundary(corolla(2), 3)
        assert is_contained(inclusion.sub, inclusion.ambient) is None
        assert is_contained(inclusion.ambient, inclusion.sub) is not None

    def test_open_part_drops_stumps(self):
        presheaf = representable(_vertex("e0", _vertex("e1")), 2)
        opened = open_part(presheaf)
        assert opened.values[STUMP] == ()
        assert opened.values[LINEAR_1] == presheaf.values[LINEAR_1]
        assert presheaf.values[STUMP] != ()
        validate_presheaf(opened)


class TestCategoryOfElements:
    def test_representable_of_linear_tree(self):
        category = category_of_elements(representable(linear_tree(1), 2))
        assert len(category.objects) == 5
        assert len(category.arrows) == 19

    def test_without_degenerate_elements(self):
        category = category_of_elements(representable(linear_tree(1), 2), include_degenerate=False)
        assert len(category.objects) == 3

    def test_boundary_nondegenerate_view(self):
        category = category_of_elements(boundary(linear_tree(1), 2).sub, include_degenerate=False)
        assert [obj.code for obj in category.objects] == [LEAF, LEAF]
        assert all(arrow.is_identity() for arrow in category.arrows)

    def test_generating_arrows(self):
        category = category_of_elements(representable(linear_tree(1), 2))
        assert category.generating_arrows()
        assert all(not arrow.morphism.is_identity() for arrow in category.generating_arrows())


class TestNormalMono:
    @pytest.mark.parametrize("tree", [linear_tree(1), linear_tree(2), corolla(2), _vertex("e0", _vertex("e1"))])
    def test_boundaries_are_normal(self, tree):
        assert is_normal_mono(boundary(tree, 3)).normal

    def test_every_boundary_up_to_four_edges_is_normal(self):
        for tree in _trees_with_faces(4):
            report = is_normal_mono(boundary(tree, 4))
            assert report.normal, report.__json__()

    @pytest.mark.slow
    def test_every_boundary_up_to_five_edges_is_normal(self):
        for tree in _trees_with_faces(5):
            assert is_normal_mono(boundary(tree, 5)).normal

    def test_inner_horn_is_normal(self):
        assert is_normal_mono(inner_horn(linear_tree(2), "e1", 3))

    def test_fixed_point_is_reported(self):
        quotient = _orbit_quotient()
        report = is_normal_mono(Inclusion(sub=empty_presheaf(3), ambient=quotient))
        assert not report.normal
        assert report.tree == COROLLA_2
        assert report.element == "e0>e0,e1>e1,e2>e2"
        assert report.stabilizer == ({"e0": "e0", "e1": "e2", "e2": "e1"},)
        assert report.__json__()["witness"]["tree"] == COROLLA_2

    def test_quotient_values(self):
        quotient = _orbit_quotient()
        assert len(quotient.values[LEAF]) == 2
        assert len(quotient.values[COROLLA_2]) == 1

    def test_sub_must_be_contained(self):
        inclusion = boundary(corolla(2), 3)
        with pytest.raises(PreconditionError):
            is_normal_mono(Inclusion(sub=inclusion.ambient, ambient=inclusion.sub))

    def test_empty_presheaf(self):
        presheaf = empty_presheaf(2)
        assert isinstance(presheaf, FinDendroidalSet)
        assert presheaf.size() == 0
