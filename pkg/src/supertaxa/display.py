"""Display graph of a profile and position bookkeeping.

The display graph glues the profile's trees together at shared labels: one
node per label, one undirected edge per parent-child relation, duplicate
edges collapsed.  Positions are per-tree label sets; only the tests and the
reference engine materialize them (the fast engine keeps them implicit in
its per-component map fields).
"""

from __future__ import annotations

from dataclasses import dataclass

from .trees import Profile

Position = tuple[frozenset[int], ...]


@dataclass
class DisplayGraph:
    n_vertices: int  # size of the label-id space (universe size)
    labels: list[int]  # label ids present, sorted
    adj: list[list[int]]  # sorted, deduplicated neighbor lists
    k: list[int]  # number of trees containing each label
    roots: list[int]  # root label per tree
    occurrences: list[list[tuple[int, tuple[int, ...]]]]
    # occurrences[l] = [(tree_index, children label ids of l in that tree)]
    n_edges: int

    def children_in_tree(self, lab: int, tree_index: int) -> tuple[int, ...]:
        for i, kids in self.occurrences[lab]:
            if i == tree_index:
                return kids
        return ()

    def all_children(self, lab: int) -> list[int]:
        """Distinct child labels of lab across all trees, sorted."""
        out: set[int] = set()
        for _, kids in self.occurrences[lab]:
            out.update(kids)
        return sorted(out)

    def edge_list(self) -> list[tuple[int, int]]:
        out = []
        for u in self.labels:
            for v in self.adj[u]:
                if u < v:
                    out.append((u, v))
        return out


def build_display_graph(profile: Profile) -> DisplayGraph:
    """Build the display graph of a fully and singularly labeled profile."""
    n = len(profile.universe)
    adj: list[list[int]] = [[] for _ in range(n)]
    occurrences: list[list[tuple[int, tuple[int, ...]]]] = [[] for _ in range(n)]
    k = [0] * n
    roots = []
    for i, t in enumerate(profile.trees):
        if not t.is_fully_labeled():
            raise ValueError(f"tree {i} is not fully labeled")
        if not t.is_singularly_labeled():
            raise ValueError(f"tree {i} is not singularly labeled")
        node_lab = [ls[0] for ls in t.node_labels]
        roots.append(node_lab[t.root])
        for v in range(t.n_nodes):
            lv = node_lab[v]
            k[lv] += 1
            kids = tuple(node_lab[c] for c in t.children[v])
            occurrences[lv].append((i, kids))
            for c in kids:
                adj[lv].append(c)
                adj[c].append(lv)
    n_edges = 0
    for u in range(n):
        if adj[u]:
            adj[u] = sorted(set(adj[u]))
            n_edges += len(adj[u])
    labels = sorted(l for l in range(n) if k[l] > 0)
    return DisplayGraph(
        n_vertices=n,
        labels=labels,
        adj=adj,
        k=k,
        roots=roots,
        occurrences=occurrences,
        n_edges=n_edges // 2,
    )


def connected_components(graph: DisplayGraph) -> list[list[int]]:
    """Static label components, each sorted; components ordered by minimum."""
    seen: set[int] = set()
    comps = []
    for s in graph.labels:
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            u = stack.pop()
            for v in graph.adj[u]:
                if v not in seen:
                    seen.add(v)
                    comp.append(v)
                    stack.append(v)
        comps.append(sorted(comp))
    return comps


def initial_position(profile: Profile) -> Position:
    """One singleton per tree: the label of its root."""
    out = []
    for t in profile.trees:
        labs = t.node_labels[t.root]
        if not labs:
            raise ValueError("initial position needs fully labeled roots")
        out.append(frozenset(labs))
    return tuple(out)


def descendant_set(profile: Profile, U: Position, i: int) -> frozenset[int]:
    """Labels of tree i at-or-below U(i)."""
    t = profile.trees[i]
    out: set[int] = set()
    stack = [t.label_node[l] for l in U[i]]
    while stack:
        v = stack.pop()
        out.update(t.node_labels[v])
        stack.extend(t.children[v])
    return frozenset(out)


def descendants(profile: Profile, U: Position) -> frozenset[int]:
    out: frozenset[int] = frozenset()
    for i in range(len(profile.trees)):
        if U[i]:
            out |= descendant_set(profile, U, i)
    return out


def is_valid_position(profile: Profile, U: Position) -> bool:
    """Check (V1) sibling condition and (V2) descendant alignment."""
    if len(U) != len(profile.trees):
        return False
    desc_all = descendants(profile, U)
    for i, t in enumerate(profile.trees):
        if len(U[i]) >= 2:
            parents = {t.parent[t.label_node[l]] for l in U[i]}
            if len(parents) != 1 or -1 in parents:
                return False
        want = desc_all & t.labels()
        have = descendant_set(profile, U, i) if U[i] else frozenset()
        if have != want:
            return False
    return True
