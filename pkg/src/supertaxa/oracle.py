"""Independent correctness machinery.

Three tools that deliberately share no code with the fast engine beyond the
tree data model: a literal reference engine that recomputes semi-universal
labels and connectivity from first principles at every step, an exhaustive
compatibility decider for tiny label sets, and a verifier for produced
supertrees.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .trees import (
    APART,
    SAME,
    Profile,
    SemiLabeledTree,
    add_distinct_labels,
    strip_synthetic,
)


@dataclass
class Verdict:
    compatible: bool
    witness_tree: SemiLabeledTree | None = None


@dataclass
class OutputViolation:
    kind: str  # "missing-label" | "descendance" | "incomparability"
    tree_index: int | None
    pair: tuple[str, ...]

    def __str__(self) -> str:
        where = "" if self.tree_index is None else f" (input tree {self.tree_index})"
        return f"{self.kind} violated for {self.pair}{where}"


@dataclass
class ActivationRecord:
    """One engine step, for lockstep comparison between engines."""

    labels: frozenset[int]
    semi: tuple[int, ...]
    position: dict[int, frozenset[int]] = field(default_factory=dict)


def _adjacency(profile: Profile) -> dict[int, set[int]]:
    """Label adjacency derived straight from the trees (no display module)."""
    adj: dict[int, set[int]] = {}
    for t in profile.trees:
        lab = [ls[0] for ls in t.node_labels]
        for v in range(t.n_nodes):
            adj.setdefault(lab[v], set())
            for c in t.children[v]:
                adj[lab[v]].add(lab[c])
                adj.setdefault(lab[c], set()).add(lab[v])
    return adj


def _components(adj: dict[int, set[int]], allowed: set[int]) -> list[set[int]]:
    comps = []
    left = set(allowed)
    while left:
        s = left.pop()
        comp = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v in left:
                    left.discard(v)
                    comp.add(v)
                    stack.append(v)
        comps.append(comp)
    return comps


class _Node:
    __slots__ = ("labels", "children")

    def __init__(self, labels: set[int]):
        self.labels = labels
        self.children: list[_Node] = []


def _to_tree(profile: Profile, roots: list[_Node]) -> SemiLabeledTree:
    if len(roots) == 1:
        top = roots[0]
    else:
        top = _Node(set())
        top.children = roots
    parent: list[int] = []
    labels: list[list[int]] = []
    stack = [(top, -1)]
    while stack:
        node, p = stack.pop()
        idx = len(parent)
        parent.append(p)
        labels.append(sorted(node.labels))
        for c in node.children:
            stack.append((c, idx))
    return SemiLabeledTree(profile.universe, parent, labels)


def naive_build(
    profile: Profile, record: list[ActivationRecord] | None = None
) -> Verdict:
    """Reference engine: the same recursion as the fast one, but every step
    recomputes semi-universal labels from the position definition and the
    component split by breadth-first search."""
    full = add_distinct_labels(profile)
    k = len(full.trees)
    trees = full.trees
    contains = {}  # label -> tree indices
    for i, t in enumerate(trees):
        for l in t.labels():
            contains.setdefault(l, []).append(i)
    children_of = [
        {
            t.node_labels[v][0]: tuple(t.node_labels[c][0] for c in t.children[v])
            for v in range(t.n_nodes)
        }
        for t in trees
    ]
    adj = _adjacency(full)

    init_U = tuple(frozenset(t.node_labels[t.root]) for t in trees)
    init_comps = _components(adj, set(adj))
    queue: list[tuple[tuple[frozenset[int], ...], set[int], _Node | None]] = []
    roots: list[_Node] = []
    for comp in sorted(init_comps, key=min):
        U = tuple(fs & comp for fs in init_U)
        queue.append((U, comp, None))
    while queue:
        U, comp, parent = queue.pop(0)
        present = frozenset(l for fs in U for l in fs)
        S = sorted(
            l for l in present if all(U[i] == {l} for i in contains[l])
        )
        if record is not None:
            record.append(
                ActivationRecord(
                    labels=frozenset(comp),
                    semi=tuple(S),
                    position={i: U[i] for i in range(k) if U[i]},
                )
            )
        if not S:
            return Verdict(False, None)
        if len(comp) == 1:
            node = _Node(set(S))
        else:
            node = _Node(set(S))
            # Successor position, then the component splits.
            nxt = []
            for i in range(k):
                entry = U[i]
                if len(entry) == 1 and next(iter(entry)) in S:
                    entry = frozenset(children_of[i][next(iter(entry))])
                nxt.append(entry)
            remaining = comp - set(S)
            for sub in sorted(_components(adj, remaining), key=min):
                sub_U = tuple(fs & sub for fs in nxt)
                queue.append((sub_U, sub, node))
        if parent is None:
            roots.append(node)
        else:
            parent.children.append(node)
    tree = _to_tree(full, roots)
    return Verdict(True, strip_synthetic(tree))


def _set_partitions(items: tuple[int, ...]):
    """All partitions of items into nonempty blocks."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [part[i] + [first]] + part[i + 1 :]


def enumerate_cluster_families(labels: frozenset[int]) -> list[frozenset[frozenset[int]]]:
    """Every semi-labeled tree on exactly `labels`, as its cluster family.

    A family is laminar, contains the full set, and is in bijection with
    semi-labeled trees; subsets used as internal clusters recurse.  Each
    family has at most 2n-1 clusters (asserted).
    """
    memo: dict[frozenset[int], list[frozenset[frozenset[int]]]] = {}

    def go(S: frozenset[int]) -> list[frozenset[frozenset[int]]]:
        got = memo.get(S)
        if got is not None:
            return got
        out: list[frozenset[frozenset[int]]] = []
        elems = tuple(sorted(S))
        # Choose which labels hang below the root, then partition them into
        # child subtrees; uncovered labels sit on the root itself.
        for r in range(len(elems) + 1):
            for covered in itertools.combinations(elems, r):
                for part in _set_partitions(covered):
                    if len(part) == 1 and len(part[0]) == len(elems):
                        continue  # child cluster may not equal the node's own
                    choice_lists = [go(frozenset(b)) for b in part]
                    for combo in itertools.product(*choice_lists):
                        fam = frozenset({S}.union(*combo))
                        out.append(fam)
        memo[S] = out
        return out

    families = go(labels)
    n = len(labels)
    for fam in families:
        assert len(fam) <= 2 * n - 1
    return families


def tree_from_clusters(
    profile_or_universe, clusters: frozenset[frozenset[int]]
) -> SemiLabeledTree:
    """Realize a laminar cluster family as the semi-labeled tree it encodes."""
    universe = getattr(profile_or_universe, "universe", profile_or_universe)
    order = sorted(clusters, key=lambda c: (-len(c), sorted(c)))
    idx = {c: i for i, c in enumerate(order)}
    parent = [-1] * len(order)
    for i, c in enumerate(order):
        best = None
        for j in range(i):
            o = order[j]
            if c < o and (best is None or len(o) < len(order[best])):
                best = j
        parent[i] = -1 if best is None else best
    child_union: list[set[int]] = [set() for _ in order]
    for i, p in enumerate(parent):
        if p >= 0:
            child_union[p] |= order[i]
    labels = [sorted(order[i] - child_union[i]) for i in range(len(order))]
    return SemiLabeledTree(universe, parent, labels)


def exhaustive_compatible(profile: Profile, limit: int = 5) -> Verdict:
    """Ground-truth decider: try every semi-labeled tree on L(P)."""
    labels = profile.labels()
    if len(labels) > limit:
        raise ValueError(f"exhaustive check limited to {limit} labels")
    for fam in enumerate_cluster_families(labels):
        cand = tree_from_clusters(profile, fam)
        if all(_displays(cand, t) for t in profile.trees):
            return Verdict(True, cand)
    return Verdict(False, None)


def _displays(big: SemiLabeledTree, small: SemiLabeledTree) -> bool:
    if not small.labels() <= big.labels():
        return False
    for a, b in itertools.combinations(sorted(small.labels()), 2):
        r = small.relation(a, b)
        if r != SAME and big.relation(a, b) != r:
            return False
    return True


def verify_output(profile: Profile, tree: SemiLabeledTree) -> OutputViolation | None:
    """Check that tree ancestrally displays every profile tree.

    Returns None when the output is sound, else the first violated pair.
    """
    uni = profile.universe
    tree_labels = tree.labels()
    for l in sorted(profile.labels()):
        if l not in tree_labels:
            return OutputViolation("missing-label", None, (uni.name(l),))
    for i, t in enumerate(profile.trees):
        for a, b in itertools.combinations(sorted(t.labels()), 2):
            r = t.relation(a, b)
            if r == SAME:
                continue
            if tree.relation(a, b) != r:
                kind = "incomparability" if r == APART else "descendance"
                return OutputViolation(kind, i, (uni.name(a), uni.name(b)))
    return None
