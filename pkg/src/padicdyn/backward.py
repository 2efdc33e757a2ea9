"""Backward dynamics over Z/p^kZ: preimage trees, forward orbits, and
sequence-space distances.

A backward step at a target value solves f(x) = target (mod p^k) by
finding roots mod p and Hensel-lifting the nonsingular ones.  Repeating
the step breadth-first yields a tree of iterated preimages whose
branching at depth m is bounded by deg(f)^m.  Singular mod-p roots are
kept as explicit leaf markers (their values are residues mod p, there
being no unique lift to carry them higher), so the tree records why a
branch ends.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .congruence import RootModP, roots_mod_p
from .hensel import hensel_lift
from .padic import Prime, as_prime
from .polynomial import IntPoly, eval_mod

DEFAULT_NODE_BUDGET = 100_000

EXPANDED = "expanded"
SINGULAR_LEAF = "singular-leaf"
NO_PREIMAGE_LEAF = "no-preimage-leaf"
FRONTIER = "frontier"


def preimages(
    f: IntPoly,
    target: int,
    p: Union[int, Prime],
    k: int,
) -> tuple[list[int], list[RootModP]]:
    """One backward step: solutions of f(x) = target (mod p^k).

    Returns (lifted, singular): the nonsingular mod-p roots lifted to
    residues mod p^k (ascending), and the singular mod-p roots left
    unexpanded.  Both lists may be empty.
    """
    prime = as_prime(p)
    modulus = prime.p**k
    target %= modulus
    roots = roots_mod_p(f, target, prime)
    lifted = sorted(
        hensel_lift(f, r.residue, k, prime, target=target).root
        for r in roots
        if not r.singular
    )
    singular = [r for r in roots if r.singular]
    return lifted, singular


@dataclass(frozen=True)
class BackwardNode:
    """One tree node: a residue reached after `depth` backward steps.

    Lifted nodes hold residues mod p^k and satisfy f(value) = parent
    value (mod p^k); singular-leaf nodes hold the unlifted mod-p root
    and satisfy the congruence mod p only.
    """

    id: int
    value: int
    depth: int
    status: str
    parent: int | None


class BackwardTree:
    """Rooted tree of iterated preimages, expanded breadth-first with
    children in ascending value order, so identical inputs always build
    the identical tree."""

    def __init__(
        self,
        prime: Prime,
        precision: int,
        polynomial: IntPoly,
        seed: int,
        max_depth: int,
        nodes: list[BackwardNode],
        children: dict[int, list[int]],
        complete: bool,
    ):
        self.prime = prime
        self.precision = precision
        self.polynomial = polynomial
        self.seed = seed
        self.max_depth = max_depth
        self.nodes = nodes
        self._children = children
        self.complete = complete

    def __len__(self) -> int:
        return len(self.nodes)

    @property
    def root(self) -> BackwardNode:
        return self.nodes[0]

    def node(self, node_id: int) -> BackwardNode:
        return self.nodes[node_id]

    def children_of(self, node_id: int) -> list[BackwardNode]:
        return [self.nodes[c] for c in self._children.get(node_id, [])]

    def nodes_at_depth(self, depth: int) -> list[BackwardNode]:
        return [n for n in self.nodes if n.depth == depth]

    def paths(self) -> list[tuple[int, ...]]:
        """Seed-to-leaf value sequences, one per leaf, in node-id order."""
        out = []
        for node in self.nodes:
            if self._children.get(node.id):
                continue
            path = []
            cur: int | None = node.id
            while cur is not None:
                path.append(self.nodes[cur].value)
                cur = self.nodes[cur].parent
            out.append(tuple(reversed(path)))
        return out

    def to_json_dict(self) -> dict:
        return {
            "p": self.prime.p,
            "k": self.precision,
            "poly": self.polynomial.coeff_list(),
            "seed": self.seed,
            "depth": self.max_depth,
            "complete": self.complete,
            "nodes": [
                {
                    "id": n.id,
                    "value": n.value,
                    "depth": n.depth,
                    "status": n.status,
                    "parent": n.parent,
                }
                for n in self.nodes
            ],
        }

    def to_json(self) -> str:
        # Field order is fixed by construction; output must stay
        # byte-identical for identical trees.
        return json.dumps(self.to_json_dict(), indent=2)

    def to_dot(self) -> str:
        q = self.prime.p
        lifted_mod = f"{q}" if self.precision == 1 else f"{q}^{self.precision}"
        lines = ["digraph backward_tree {", "  node [shape=circle];"]
        for n in self.nodes:
            if n.status == SINGULAR_LEAF:
                label = f"{n.value} (mod {q})"
                style = ", shape=box, style=filled, fillcolor=gray80"
            else:
                label = f"{n.value} (mod {lifted_mod})"
                style = ", shape=box, style=dashed" if n.status == NO_PREIMAGE_LEAF else ""
            lines.append(f'  n{n.id} [label="{label}"{style}];')
        for n in self.nodes:
            if n.parent is not None:
                lines.append(f"  n{n.parent} -> n{n.id};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def backward_tree(
    f: IntPoly,
    seed: int,
    p: Union[int, Prime],
    k: int,
    depth: int,
    max_nodes: int = DEFAULT_NODE_BUDGET,
) -> BackwardTree:
    """Expand the iterated-preimage tree of f from `seed` to the given
    depth, breadth-first.

    Depth-d nodes are the preimages of depth-(d-1) values.  Nodes at the
    requested depth are marked frontier; nodes whose congruence has no
    solutions become no-preimage leaves; singular mod-p roots become
    singular leaves.  If the node budget runs out the expansion stops
    and the partial tree is flagged incomplete (unexpanded nodes stay
    frontier).
    """
    prime = as_prime(p)
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if k < 1:
        raise ValueError("precision must be at least 1")
    if max_nodes < 1:
        raise ValueError("node budget must be positive")
    modulus = prime.p**k
    seed %= modulus

    values: list[int] = [seed]
    depths: list[int] = [0]
    parents: list[int | None] = [None]
    statuses: list[str | None] = [FRONTIER if depth == 0 else None]
    children: dict[int, list[int]] = {}
    complete = True

    queue: deque[int] = deque()
    if depth > 0:
        queue.append(0)

    while queue:
        nid = queue.popleft()
        lifted, singular = preimages(f, values[nid], prime, k)
        kids = sorted(
            [(v, False) for v in lifted] + [(r.residue, True) for r in singular]
        )
        if len(values) + len(kids) > max_nodes:
            complete = False
            break
        if not kids:
            statuses[nid] = NO_PREIMAGE_LEAF
            continue
        statuses[nid] = EXPANDED
        child_depth = depths[nid] + 1
        ids = []
        for value, is_singular in kids:
            cid = len(values)
            values.append(value)
            depths.append(child_depth)
            parents.append(nid)
            if is_singular:
                statuses.append(SINGULAR_LEAF)
            elif child_depth == depth:
                statuses.append(FRONTIER)
            else:
                statuses.append(None)
                queue.append(cid)
            ids.append(cid)
        children[nid] = ids

    # Anything left unexpanded (budget stop) is a frontier of the
    # partial tree.
    nodes = [
        BackwardNode(i, values[i], depths[i], statuses[i] or FRONTIER, parents[i])
        for i in range(len(values))
    ]
    return BackwardTree(prime, k, f, seed, depth, nodes, children, complete)


@dataclass(frozen=True)
class OrbitResult:
    """A forward orbit (x0, f(x0), ...) mod p^k with its first detected
    repeat, if any: tail_length steps before entering a cycle of
    cycle_length."""

    terms: tuple[int, ...]
    tail_length: int | None
    cycle_length: int | None

    @property
    def preperiodic(self) -> bool:
        return self.cycle_length is not None


def forward_orbit(
    f: IntPoly,
    x0: int,
    p: Union[int, Prime],
    k: int,
    steps: int,
) -> OrbitResult:
    """Iterate f forward `steps` times mod p^k, reporting cycle entry.

    The state space is finite, so any orbit repeats within p^k steps;
    detection covers only the terms actually computed.
    """
    prime = as_prime(p)
    if k < 1:
        raise ValueError("precision must be at least 1")
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    modulus = prime.p**k
    x = x0 % modulus
    terms = [x]
    first_seen = {x: 0}
    tail = cycle = None
    for i in range(1, steps + 1):
        x = eval_mod(f, x, modulus)
        terms.append(x)
        if cycle is None and x in first_seen:
            tail = first_seen[x]
            cycle = i - first_seen[x]
        first_seen.setdefault(x, i)
    return OrbitResult(tuple(terms), tail, cycle)


def distance_series(
    s: Sequence[int],
    t: Sequence[int],
    p: Union[int, Prime],
) -> Fraction:
    """Sequence distance sum(|s_i - t_i| / p^i), as an exact Fraction."""
    if len(s) != len(t):
        raise ValueError("sequences must have the same length")
    q = as_prime(p).p
    total = Fraction(0)
    for i, (a, b) in enumerate(zip(s, t)):
        if a != b:
            total += Fraction(abs(a - b), q**i)
    return total


def distance_first_difference(s: Sequence[int], t: Sequence[int]) -> Fraction:
    """Distance 2^(-l) for l the first differing index; 0 when equal."""
    if len(s) != len(t):
        raise ValueError("sequences must have the same length")
    for i, (a, b) in enumerate(zip(s, t)):
        if a != b:
            return Fraction(1, 2**i)
    return Fraction(0)
