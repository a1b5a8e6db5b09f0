"""Semi-labeled trees and profiles.

A semi-labeled tree is a rooted tree together with a labeling function that
attaches taxa to nodes.  Internal nodes may carry labels (higher-order taxa),
every leaf carries at least one, and any node with fewer than two children
must be labeled.  A profile is an ordered collection of such trees over a
shared label table.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

# Relation of two labels inside one tree, decided on their nodes.
SAME = "same"
ABOVE = "above"  # first label's node properly above the second's
BELOW = "below"
APART = "apart"  # nodes on divergent branches


class InvalidTreeError(ValueError):
    """Raised when a structure cannot be interpreted as a rooted tree."""


@dataclass(frozen=True)
class Label:
    id: int
    name: str
    synthetic: bool = False


class LabelUniverse:
    """Intern table mapping taxon names to dense integer ids.

    Ids are handed out contiguously and never change, so trees built against
    a universe stay valid when it is later extended with fresh labels.
    """

    __slots__ = ("_labels", "_by_name", "_fresh_counter")

    def __init__(self) -> None:
        self._labels: list[Label] = []
        self._by_name: dict[str, Label] = {}
        self._fresh_counter = 0

    def __len__(self) -> int:
        return len(self._labels)

    def __getitem__(self, lid: int) -> Label:
        return self._labels[lid]

    def __iter__(self) -> Iterator[Label]:
        return iter(self._labels)

    def get(self, name: str) -> Label | None:
        return self._by_name.get(name)

    def name(self, lid: int) -> str:
        return self._labels[lid].name

    def names(self, lids: Iterable[int]) -> list[str]:
        return [self._labels[i].name for i in lids]

    def intern(self, name: str) -> Label:
        lab = self._by_name.get(name)
        if lab is None:
            lab = Label(len(self._labels), name, synthetic=False)
            self._labels.append(lab)
            self._by_name[name] = lab
        return lab

    def fresh(self) -> Label:
        """Mint a synthetic label whose name collides with no existing one."""
        while True:
            self._fresh_counter += 1
            name = f"#{self._fresh_counter}"
            if name not in self._by_name:
                break
        lab = Label(len(self._labels), name, synthetic=True)
        self._labels.append(lab)
        self._by_name[name] = lab
        return lab


@dataclass(frozen=True)
class Violation:
    """First broken invariant found by :func:`validate`."""

    rule: str
    node: int | None = None

    def __str__(self) -> str:
        where = f" at node {self.node}" if self.node is not None else ""
        return f"{self.rule}{where}"


class SemiLabeledTree:
    """Rooted tree plus label assignment, immutable after construction.

    ``parent[v]`` is the parent node index (-1 for the root) and
    ``node_labels[v]`` the sorted label ids on node ``v``.  The constructor
    rejects structures that are not a single rooted tree or that put one
    label on two nodes; the softer semi-labeling invariants are reported by
    :func:`validate` instead.
    """

    __slots__ = (
        "universe",
        "parent",
        "children",
        "root",
        "node_labels",
        "label_node",
        "_labels",
        "_tin",
        "_tout",
    )

    def __init__(
        self,
        universe: LabelUniverse,
        parent: Sequence[int],
        node_labels: Sequence[Iterable[int]],
    ) -> None:
        n = len(parent)
        if n == 0:
            raise InvalidTreeError("tree must have at least one node")
        if len(node_labels) != n:
            raise InvalidTreeError("parent and node_labels length mismatch")
        children: list[list[int]] = [[] for _ in range(n)]
        root = -1
        for v, p in enumerate(parent):
            if p == -1:
                if root != -1:
                    raise InvalidTreeError("more than one root")
                root = v
            elif 0 <= p < n:
                children[p].append(v)
            else:
                raise InvalidTreeError(f"parent index {p} out of range")
        if root == -1:
            raise InvalidTreeError("no root")
        # Reachability from the root doubles as the acyclicity check.
        seen = 0
        stack = [root]
        mark = bytearray(n)
        mark[root] = 1
        while stack:
            v = stack.pop()
            seen += 1
            for c in children[v]:
                if mark[c]:
                    raise InvalidTreeError("cycle detected")
                mark[c] = 1
                stack.append(c)
        if seen != n:
            raise InvalidTreeError("tree is not connected")

        label_node: dict[int, int] = {}
        labels_per_node: list[list[int]] = []
        for v in range(n):
            lids = sorted(set(node_labels[v]))
            for lid in lids:
                if lid in label_node:
                    raise InvalidTreeError(
                        f"label {universe.name(lid)!r} used on two nodes"
                    )
                if not 0 <= lid < len(universe):
                    raise InvalidTreeError(f"label id {lid} not in universe")
                label_node[lid] = v
            labels_per_node.append(lids)

        self.universe = universe
        self.parent = list(parent)
        self.children = children
        self.root = root
        self.node_labels = labels_per_node
        self.label_node = label_node
        self._labels: frozenset[int] | None = None
        self._tin: list[int] | None = None
        self._tout: list[int] | None = None

    # -- basic queries -----------------------------------------------------

    @property
    def n_nodes(self) -> int:
        return len(self.parent)

    @property
    def n_edges(self) -> int:
        return len(self.parent) - 1

    def labels(self) -> frozenset[int]:
        if self._labels is None:
            self._labels = frozenset(self.label_node)
        return self._labels

    def node_of(self, lid: int) -> int:
        return self.label_node[lid]

    def is_fully_labeled(self) -> bool:
        return all(self.node_labels[v] for v in range(self.n_nodes))

    def is_singularly_labeled(self) -> bool:
        return all(len(self.node_labels[v]) <= 1 for v in range(self.n_nodes))

    def preorder(self) -> list[int]:
        order = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            order.append(v)
            stack.extend(reversed(self.children[v]))
        return order

    def postorder(self) -> list[int]:
        return list(reversed(self._reverse_postorder()))

    def _reverse_postorder(self) -> list[int]:
        # Parents before children; reversing yields a postorder.
        out = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            out.append(v)
            stack.extend(self.children[v])
        return out

    # -- ancestor machinery --------------------------------------------------

    def _ensure_order(self) -> None:
        if self._tin is not None:
            return
        n = self.n_nodes
        tin = [0] * n
        tout = [0] * n
        clock = 0
        stack: list[tuple[int, bool]] = [(self.root, False)]
        while stack:
            v, done = stack.pop()
            if done:
                tout[v] = clock
                clock += 1
                continue
            tin[v] = clock
            clock += 1
            stack.append((v, True))
            for c in reversed(self.children[v]):
                stack.append((c, False))
        self._tin = tin
        self._tout = tout

    def node_is_ancestor(self, u: int, v: int) -> bool:
        """True iff u lies on the path from v to the root (u == v counts)."""
        self._ensure_order()
        return self._tin[u] <= self._tin[v] and self._tout[v] <= self._tout[u]

    def relation(self, a: int, b: int) -> str:
        """Relate labels a and b through their nodes: SAME/ABOVE/BELOW/APART."""
        u = self.label_node[a]
        v = self.label_node[b]
        if u == v:
            return SAME
        if self.node_is_ancestor(u, v):
            return ABOVE
        if self.node_is_ancestor(v, u):
            return BELOW
        return APART

    # -- clusters and restriction -------------------------------------------

    def clusters(self) -> set[frozenset[int]]:
        """The set of clusters; one per node, duplicates impossible."""
        n = self.n_nodes
        acc: list[set[int] | None] = [None] * n
        out: set[frozenset[int]] = set()
        for v in reversed(self._reverse_postorder()):
            s = set(self.node_labels[v])
            for c in self.children[v]:
                s |= acc[c]  # type: ignore[operator]
                acc[c] = None
            acc[v] = s
            out.add(frozenset(s))
        return out

    def restrict(self, A: Iterable[int]) -> "SemiLabeledTree":
        """Restriction to label set A: prune, re-root at the LCA, suppress.

        The result's cluster set is {X & A : X in clusters, X & A nonempty};
        this identity is re-checked on small trees under __debug__.
        """
        want = set(A)
        if not want:
            raise ValueError("restriction to an empty label set")
        missing = want - self.labels()
        if missing:
            name = self.universe.name(next(iter(missing)))
            raise ValueError(f"label {name!r} not in tree")

        n = self.n_nodes
        keep = bytearray(n)  # subtree holds a wanted label
        own = [False] * n  # node itself carries a wanted label
        for v in range(n):
            if any(l in want for l in self.node_labels[v]):
                own[v] = True
        for v in self._reverse_postorder()[::-1]:
            if own[v] or any(keep[c] for c in self.children[v]):
                keep[v] = 1

        # Descend to the LCA of the wanted labels.
        top = self.root
        while not own[top]:
            kept = [c for c in self.children[top] if keep[c]]
            if len(kept) != 1:
                break
            top = kept[0]

        # Representative of each kept node after degree-2 suppression.
        rep = [-1] * n
        new_parent: list[int] = []
        new_labels: list[list[int]] = []

        def fresh_node(labels: list[int]) -> int:
            new_parent.append(-2)
            new_labels.append(labels)
            return len(new_parent) - 1

        order = [v for v in self._reverse_postorder()[::-1] if keep[v]]
        for v in order:
            kept_children = [c for c in self.children[v] if keep[c]]
            if not own[v] and len(kept_children) == 1:
                rep[v] = rep[kept_children[0]]
                continue
            labels = [l for l in self.node_labels[v] if l in want]
            me = fresh_node(labels)
            for c in kept_children:
                new_parent[rep[c]] = me
            rep[v] = me

        root_new = rep[top]
        new_parent[root_new] = -1
        # Nodes above the LCA were materialized but are unreachable; rebuild
        # compactly from the reachable part.
        reach = _compact(new_parent, new_labels, root_new)
        result = SemiLabeledTree(self.universe, reach[0], reach[1])

        if __debug__ and len(want) <= 64 and self.n_nodes <= 256:
            expect = {
                fs
                for fs in (c & frozenset(want) for c in self.clusters())
                if fs
            }
            assert result.clusters() == expect, "restriction cluster identity"
        return result

    # -- label pair sets ------------------------------------------------------

    def d_pairs(self) -> set[tuple[int, int]]:
        """Ordered pairs (a, b) where a's node is properly above b's."""
        labs = sorted(self.labels())
        return {
            (a, b)
            for a, b in itertools.permutations(labs, 2)
            if self.relation(a, b) == ABOVE
        }

    def n_pairs(self) -> set[frozenset[int]]:
        """Unordered pairs of labels on divergent branches."""
        labs = sorted(self.labels())
        return {
            frozenset((a, b))
            for a, b in itertools.combinations(labs, 2)
            if self.relation(a, b) == APART
        }


def _compact(
    parent: list[int], labels: list[list[int]], root: int
) -> tuple[list[int], list[list[int]]]:
    """Drop nodes unreachable from root and renumber."""
    n = len(parent)
    kids: list[list[int]] = [[] for _ in range(n)]
    for v, p in enumerate(parent):
        if p >= 0:
            kids[p].append(v)
    order = []
    stack = [root]
    while stack:
        v = stack.pop()
        order.append(v)
        stack.extend(kids[v])
    remap = {old: new for new, old in enumerate(order)}
    new_parent = [
        -1 if parent[old] == -1 or parent[old] not in remap else remap[parent[old]]
        for old in order
    ]
    new_parent[0] = -1
    return new_parent, [labels[old] for old in order]


def single_node_tree(universe: LabelUniverse, lids: Iterable[int]) -> SemiLabeledTree:
    return SemiLabeledTree(universe, [-1], [list(lids)])


def validate(tree: SemiLabeledTree) -> Violation | None:
    """Check every semi-labeled-tree invariant; None means the tree is valid.

    Reports the first violation found, in node-index order.
    """
    n = tree.n_nodes
    roots = [v for v in range(n) if tree.parent[v] == -1]
    if len(roots) != 1:
        return Violation("tree must have exactly one root")
    reached = len(tree.preorder())
    if reached != n:
        return Violation("tree is not connected")
    for lid, v in tree.label_node.items():
        if lid not in tree.node_labels[v]:
            return Violation("label maps are not mutually inverse", v)
    for v in range(n):
        for lid in tree.node_labels[v]:
            if tree.label_node.get(lid) != v:
                return Violation("label maps are not mutually inverse", v)
    for v in range(n):
        if len(tree.children[v]) < 2 and not tree.node_labels[v]:
            return Violation("unlabeled node with <2 children", v)
    return None


def isomorphic(t1: SemiLabeledTree, t2: SemiLabeledTree) -> bool:
    """Cluster-set equality, compared on label names.

    A semi-labeled tree is completely determined by its cluster set, so this
    is a full isomorphism test that also works across label universes.
    """
    c1 = {frozenset(t1.universe.name(l) for l in X) for X in t1.clusters()}
    c2 = {frozenset(t2.universe.name(l) for l in X) for X in t2.clusters()}
    return c1 == c2


def ancestrally_displays(big: SemiLabeledTree, small: SemiLabeledTree) -> bool:
    """True iff big preserves all of small's proper-descendance and
    incomparability relations (and contains its labels)."""
    small_labels = small.labels()
    if not small_labels <= big.labels():
        return False
    for a, b in itertools.combinations(sorted(small_labels), 2):
        r = small.relation(a, b)
        if r == SAME:
            continue
        if big.relation(a, b) != r:
            return False
    return True


def strip_synthetic(tree: SemiLabeledTree) -> SemiLabeledTree:
    """Remove synthetic labels; suppress nodes this leaves unlabeled with a
    single child.  Raises if no non-synthetic labels remain."""
    keep = [l for l in tree.labels() if not tree.universe[l].synthetic]
    if not keep:
        raise ValueError("tree has no non-synthetic labels")
    if len(keep) == len(tree.labels()):
        return tree
    return tree.restrict(keep)


class Profile:
    """Ordered collection of semi-labeled trees over one label universe."""

    __slots__ = ("universe", "trees")

    def __init__(self, universe: LabelUniverse, trees: Iterable[SemiLabeledTree]):
        self.universe = universe
        self.trees = tuple(trees)
        for t in self.trees:
            if t.universe is not universe:
                raise ValueError("all trees must share the profile's universe")

    def __len__(self) -> int:
        return len(self.trees)

    def labels(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for t in self.trees:
            out |= t.labels()
        return out

    @property
    def size_m(self) -> int:
        """Total node + edge count over all trees."""
        return sum(2 * t.n_nodes - 1 for t in self.trees)

    @property
    def tau(self) -> int:
        """Sum of squared degrees over internal nodes (prior-work cost term)."""
        total = 0
        for t in self.trees:
            for v in range(t.n_nodes):
                if t.children[v]:
                    d = len(t.children[v]) + (0 if v == t.root else 1)
                    total += d * d
        return total

    def restrict(self, X: Iterable[int]) -> "Profile":
        """Per-tree restriction to X; trees missing X entirely are dropped."""
        want = set(X)
        out = []
        for t in self.trees:
            sub = want & t.labels()
            if sub:
                out.append(t.restrict(sub))
        return Profile(self.universe, out)


def add_distinct_labels(profile: Profile) -> Profile:
    """Attach a fresh synthetic label to every unlabeled node.

    Returns the same object when the profile is already fully labeled.
    Synthetic labels are assigned in (tree, preorder-position) order so the
    result is deterministic.
    """
    if all(t.is_fully_labeled() for t in profile.trees):
        return profile
    new_trees = []
    for t in profile.trees:
        if t.is_fully_labeled():
            new_trees.append(t)
            continue
        labels = [list(ls) for ls in t.node_labels]
        for v in t.preorder():
            if not labels[v]:
                labels[v] = [profile.universe.fresh().id]
        new_trees.append(SemiLabeledTree(profile.universe, t.parent, labels))
    return Profile(profile.universe, new_trees)
