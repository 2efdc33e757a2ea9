import json
import random
from fractions import Fraction

import pytest

from padicdyn import (
    IntPoly,
    backward_tree,
    distance_first_difference,
    distance_series,
    eval_mod,
    forward_orbit,
    preimages,
)
from helpers import exhaustive_roots, random_int_poly, tree_shape

SQUARE = IntPoly((0, 0, 1))


def random_tree_inputs(rng):
    p = rng.choice([2, 3, 5, 7])
    k = rng.randint(1, 3)
    depth = rng.randint(1, 4)
    f = random_int_poly(rng, 4, min_deg=1)
    seed = rng.randrange(p**k)
    return f, seed, p, k, depth


class TestPreimages:
    def test_two_lifted_roots(self):
        lifted, singular = preimages(SQUARE, 2, 7, 2)
        assert lifted == [10, 39]
        assert singular == []
        assert exhaustive_roots(SQUARE, 2, 49) == [10, 39]

    def test_nonresidue_has_no_preimages(self):
        lifted, singular = preimages(SQUARE, 3, 7, 2)
        assert lifted == [] and singular == []
        assert exhaustive_roots(SQUARE, 3, 7) == []

    def test_singular_root_left_unexpanded(self):
        lifted, singular = preimages(SQUARE, 0, 5, 2)
        assert lifted == []
        assert [r.residue for r in singular] == [0]

    def test_lifted_values_solve_the_congruence(self):
        rng = random.Random(89)
        for _ in range(100):
            f, seed, p, k, _ = random_tree_inputs(rng)
            target = rng.randrange(p**k)
            lifted, singular = preimages(f, target, p, k)
            for v in lifted:
                assert eval_mod(f, v, p**k) == target
            for r in singular:
                assert eval_mod(f, r.residue, p) == target % p
            # children are pairwise distinct mod p
            residues = [v % p for v in lifted] + [r.residue for r in singular]
            assert len(residues) == len(set(residues))


class TestBackwardTree:
    def test_square_tree_structure(self):
        tree = backward_tree(SQUARE, 2, 7, 1, 2)
        assert len(tree) == 5
        assert tree.complete
        root = tree.root
        assert root.value == 2 and root.status == "expanded"
        d1 = {n.value: n.status for n in tree.nodes_at_depth(1)}
        assert d1 == {3: "no-preimage-leaf", 4: "expanded"}
        d2 = {n.value: n.status for n in tree.nodes_at_depth(2)}
        assert d2 == {2: "frontier", 5: "frontier"}

    def test_identity_map_single_path(self):
        tree = backward_tree(IntPoly((0, 1)), 4, 5, 2, 3)
        assert len(tree) == 4
        assert [n.value for n in tree.nodes] == [4, 4, 4, 4]
        assert tree.paths() == [(4, 4, 4, 4)]

    def test_branching_bound_attained(self):
        tree = backward_tree(SQUARE, 2, 7, 1, 1)
        assert len(tree.nodes_at_depth(1)) == 2  # == deg(f)^1

    def test_depth_zero_tree(self):
        tree = backward_tree(SQUARE, 2, 7, 1, 0)
        assert len(tree) == 1
        assert tree.root.status == "frontier"

    def test_singular_leaves_recorded(self):
        tree = backward_tree(SQUARE, 0, 5, 2, 1)
        assert len(tree) == 2
        leaf = tree.nodes[1]
        assert leaf.status == "singular-leaf"
        assert leaf.value == 0

    def test_forward_consistency_random(self):
        rng = random.Random(97)
        for _ in range(50):
            f, seed, p, k, depth = random_tree_inputs(rng)
            tree = backward_tree(f, seed, p, k, depth)
            assert tree.complete
            for node in tree.nodes:
                if node.parent is None:
                    continue
                parent_value = tree.node(node.parent).value
                if node.status == "singular-leaf":
                    assert eval_mod(f, node.value, p) == parent_value % p
                else:
                    assert eval_mod(f, node.value, p**k) == parent_value

    def test_branching_bound_random(self):
        rng = random.Random(103)
        for _ in range(50):
            f, seed, p, k, depth = random_tree_inputs(rng)
            tree = backward_tree(f, seed, p, k, depth)
            for m in range(depth + 1):
                lifted_nodes = [
                    n
                    for n in tree.nodes_at_depth(m)
                    if n.status != "singular-leaf"
                ]
                assert len(lifted_nodes) <= f.degree**m

    def test_depth1_children_match_mod_p_tree(self):
        rng = random.Random(107)
        for _ in range(50):
            f, seed, p, k, _ = random_tree_inputs(rng)
            big = backward_tree(f, seed, p, k, 1)
            small = backward_tree(f, seed % p, p, 1, 1)

            def summary(tree, reduce_mod):
                return sorted(
                    (
                        n.value % reduce_mod
                        if n.status != "singular-leaf"
                        else n.value,
                        n.status == "singular-leaf",
                    )
                    for n in tree.nodes_at_depth(1)
                )

            assert summary(big, p) == summary(small, p)

    def test_reduction_to_lower_precision_is_a_valid_tree(self):
        rng = random.Random(109)
        for _ in range(50):
            f, seed, p, k, depth = random_tree_inputs(rng)
            if k == 1:
                k = 2
                seed %= p**k
            big = backward_tree(f, seed, p, k, depth)
            small = backward_tree(f, seed % p ** (k - 1), p, k - 1, depth)
            assert tree_shape(big, 0, reduce_to=p ** (k - 1)) == tree_shape(small, 0)

    def test_mod_p_paths_satisfy_backward_relation(self):
        rng = random.Random(113)
        for _ in range(25):
            f, seed, p, _, depth = random_tree_inputs(rng)
            tree = backward_tree(f, seed % p, p, 1, depth)
            for path in tree.paths():
                for prev, nxt in zip(path, path[1:]):
                    assert eval_mod(f, nxt, p) == prev

    def test_budget_exhaustion_flags_incomplete(self):
        tree = backward_tree(SQUARE, 2, 7, 1, 5, max_nodes=4)
        assert not tree.complete
        assert len(tree) <= 4
        # unexpanded nodes stay frontier
        assert all(
            n.status in {"expanded", "frontier", "no-preimage-leaf", "singular-leaf"}
            for n in tree.nodes
        )

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            backward_tree(SQUARE, 2, 7, 1, -1)
        with pytest.raises(ValueError):
            backward_tree(SQUARE, 2, 7, 0, 1)
        with pytest.raises(ValueError):
            backward_tree(SQUARE, 2, 7, 1, 1, max_nodes=0)


class TestForwardOrbit:
    def test_square_orbit_mod_7(self):
        orbit = forward_orbit(SQUARE, 3, 7, 1, 3)
        assert orbit.terms == (3, 2, 4, 2)
        assert orbit.preperiodic
        assert orbit.tail_length == 1
        assert orbit.cycle_length == 2

    def test_constant_orbit(self):
        orbit = forward_orbit(IntPoly((0, 1)), 5, 11, 1, 4)
        assert orbit.terms == (5, 5, 5, 5, 5)
        assert orbit.tail_length == 0
        assert orbit.cycle_length == 1

    def test_reverses_preimage_example(self):
        assert forward_orbit(SQUARE, 10, 7, 2, 1).terms == (10, 2)

    def test_no_repeat_detected_within_steps(self):
        orbit = forward_orbit(SQUARE, 3, 7, 1, 1)
        assert orbit.terms == (3, 2)
        assert not orbit.preperiodic
        assert orbit.tail_length is None

    def test_every_orbit_repeats_within_state_space(self):
        rng = random.Random(127)
        for _ in range(50):
            f, seed, p, k, _ = random_tree_inputs(rng)
            orbit = forward_orbit(f, seed, p, k, p**k)
            assert orbit.preperiodic
            assert orbit.tail_length + orbit.cycle_length <= p**k


class TestDistances:
    def test_series_examples(self):
        assert distance_series([1, 2, 3], [1, 2, 3], 5) == 0
        assert distance_series([1, 0], [0, 0], 5) == 1
        assert distance_series([0, 2, 0], [0, 0, 1], 5) == Fraction(11, 25)

    def test_first_difference_examples(self):
        assert distance_first_difference([4, 4], [4, 4]) == 0
        assert distance_first_difference([1, 0], [0, 0]) == 1
        assert distance_first_difference([1, 2, 3, 4], [1, 2, 3, 5]) == Fraction(1, 8)

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            distance_series([1], [1, 2], 5)
        with pytest.raises(ValueError):
            distance_first_difference([1], [1, 2])

    @staticmethod
    def random_sequences(rng, count):
        n = rng.randint(1, 8)
        return [tuple(rng.randint(0, 30) for _ in range(n)) for _ in range(count)]

    def test_metric_axioms(self):
        rng = random.Random(131)
        for _ in range(300):
            p = rng.choice([2, 3, 5, 7])
            s, t, u = self.random_sequences(rng, 3)
            for dist in (
                lambda a, b: distance_series(a, b, p),
                distance_first_difference,
            ):
                assert dist(s, t) == dist(t, s)
                assert (dist(s, t) == 0) == (s == t)
                assert dist(s, u) <= dist(s, t) + dist(t, u)
            # the first-difference metric is an ultrametric
            assert distance_first_difference(s, u) <= max(
                distance_first_difference(s, t), distance_first_difference(t, u)
            )


GOLDEN_JSON = """{
  "p": 7,
  "k": 1,
  "poly": [
    0,
    0,
    1
  ],
  "seed": 2,
  "depth": 2,
  "complete": true,
  "nodes": [
    {
      "id": 0,
      "value": 2,
      "depth": 0,
      "status": "expanded",
      "parent": null
    },
    {
      "id": 1,
      "value": 3,
      "depth": 1,
      "status": "no-preimage-leaf",
      "parent": 0
    },
    {
      "id": 2,
      "value": 4,
      "depth": 1,
      "status": "expanded",
      "parent": 0
    },
    {
      "id": 3,
      "value": 2,
      "depth": 2,
      "status": "frontier",
      "parent": 2
    },
    {
      "id": 4,
      "value": 5,
      "depth": 2,
      "status": "frontier",
      "parent": 2
    }
  ]
}"""

GOLDEN_DOT = """digraph backward_tree {
  node [shape=circle];
  n0 [label="2 (mod 7)"];
  n1 [label="3 (mod 7)", shape=box, style=dashed];
  n2 [label="4 (mod 7)"];
  n3 [label="2 (mod 7)"];
  n4 [label="5 (mod 7)"];
  n0 -> n1;
  n0 -> n2;
  n2 -> n3;
  n2 -> n4;
}
"""


class TestSerialization:
    def test_json_golden_file(self):
        tree = backward_tree(SQUARE, 2, 7, 1, 2)
        assert tree.to_json() == GOLDEN_JSON

    def test_dot_golden_file(self):
        tree = backward_tree(SQUARE, 2, 7, 1, 2)
        assert tree.to_dot() == GOLDEN_DOT

    def test_json_round_trips_and_field_order(self):
        tree = backward_tree(SQUARE, 2, 7, 2, 2)
        payload = json.loads(tree.to_json())
        assert list(payload) == ["p", "k", "poly", "seed", "depth", "complete", "nodes"]
        assert list(payload["nodes"][0]) == ["id", "value", "depth", "status", "parent"]
        assert payload["p"] == 7 and payload["k"] == 2

    def test_serialization_is_deterministic(self):
        a = backward_tree(SQUARE, 2, 7, 2, 3)
        b = backward_tree(SQUARE, 2, 7, 2, 3)
        assert a.to_json() == b.to_json()
        assert a.to_dot() == b.to_dot()

    def test_singular_leaf_styled_distinctly(self):
        tree = backward_tree(SQUARE, 0, 5, 2, 1)
        dot = tree.to_dot()
        assert 'n1 [label="0 (mod 5)", shape=box, style=filled, fillcolor=gray80];' in dot
