"""Decremental dynamic connectivity over the display graph.

Two interchangeable backends sit behind one interface:

* :class:`NaiveConnectivity` — adjacency sets plus a breadth-first search on
  every deletion.  Simple, slow, used as the differential-testing twin and
  for small inputs.
* :class:`HdtConnectivity` — hierarchical spanning forests over Euler-tour
  treaps with edge levels and non-tree-edge promotion, giving amortized
  polylogarithmic deletions.  The heavy lifting lives in :mod:`._hdt`.

Components are referred to by integer handles.  A handle stays valid until
its component next splits; a split kills the old handle and mints one for
each side.  ``delete_edge(u, v)`` reports a split as ``Split(handle_u,
handle_v)`` where ``handle_u`` names the side containing ``u``.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, NamedTuple


class Split(NamedTuple):
    handle_u: int
    handle_v: int


class LabelSplit(NamedTuple):
    """One component split observed while deleting a label's child edges.

    ``nodes`` holds the vertices of the migration side: the smaller-weight
    side (ties broken toward the smaller minimum vertex id).
    """

    alpha: int
    handle_mig: int
    handle_keep: int
    weight_mig: int
    weight_keep: int
    size_mig: int
    size_keep: int
    ell_on_keep: bool
    nodes: "object"  # sequence of vertex ids


class StaleHandleError(KeyError):
    """Raised when a component handle is used after its component split."""


class NaiveConnectivity:
    """Reference implementation: recompute connectivity by search."""

    def __init__(self, n_vertices: int, edges: Iterable[tuple[int, int]]):
        self.n = n_vertices
        self._adj: list[set[int]] = [set() for _ in range(n_vertices)]
        for u, v in edges:
            if u == v:
                raise ValueError("self loops not supported")
            self._adj[u].add(v)
            self._adj[v].add(u)
        self._handle_of: list[int | None] = [None] * n_vertices
        self._members: dict[int, set[int]] = {}
        self._next = 0
        self._alive: set[int] = set()
        seen = [False] * n_vertices
        for s in range(n_vertices):
            if seen[s]:
                continue
            comp = self._bfs(s)
            h = self._mint(comp)
            for v in comp:
                seen[v] = True

    # -- internals ---------------------------------------------------------

    def _bfs(self, s: int) -> set[int]:
        comp = {s}
        q = deque([s])
        while q:
            u = q.popleft()
            for v in self._adj[u]:
                if v not in comp:
                    comp.add(v)
                    q.append(v)
        return comp

    def _mint(self, comp: set[int]) -> int:
        h = self._next
        self._next += 1
        self._members[h] = comp
        self._alive.add(h)
        for v in comp:
            self._handle_of[v] = h
        return h

    def _check(self, h: int) -> None:
        if h not in self._alive:
            raise StaleHandleError(h)

    # -- queries -----------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def component_of(self, u: int) -> int:
        h = self._handle_of[u]
        if h is None:
            raise KeyError(f"vertex {u} was deleted")
        return h

    def component_size(self, h: int) -> int:
        self._check(h)
        return len(self._members[h])

    def component_nodes(self, h: int) -> list[int]:
        self._check(h)
        return sorted(self._members[h])

    def component_min(self, h: int) -> int:
        self._check(h)
        return min(self._members[h])

    def same_component(self, u: int, v: int) -> bool:
        return self.component_of(u) == self.component_of(v)

    def num_components(self) -> int:
        return len(self._alive)

    def alive(self, h: int) -> bool:
        return h in self._alive

    # -- updates -----------------------------------------------------------

    def delete_edge(self, u: int, v: int) -> Split | None:
        if v not in self._adj[u]:
            raise ValueError(f"edge ({u}, {v}) not present")
        self._adj[u].discard(v)
        self._adj[v].discard(u)
        old = self.component_of(u)
        side_u = self._bfs(u)
        if v in side_u:
            return None
        side_v = self._members[old] - side_u
        self._alive.discard(old)
        del self._members[old]
        hu = self._mint(side_u)
        hv = self._mint(side_v)
        return Split(hu, hv)

    def delete_isolated_node(self, u: int) -> None:
        if self._adj[u]:
            raise ValueError(f"vertex {u} still has incident edges")
        h = self.component_of(u)
        if len(self._members[h]) != 1:
            raise ValueError(f"vertex {u} is not an isolated component")
        self._alive.discard(h)
        del self._members[h]
        self._handle_of[u] = None

    def delete_label(self, ell: int, children, weights, w_cur: int):
        """Delete every (ell, child) edge, then ell; report each split.

        Weight recomputation scans the smaller side by node count; the
        migration side is the smaller side by weight.  Returns the split
        events in order plus the handle that died with ell.
        """
        events = []
        for c in children:
            res = self.delete_edge(ell, c)
            if res is None:
                continue
            h_ell, h_other = res
            size_ell = self.component_size(h_ell)
            size_other = self.component_size(h_other)
            if size_ell <= size_other:
                w_ell = sum(weights[x] for x in self._members[h_ell])
                w_other = w_cur - w_ell
            else:
                w_other = sum(weights[x] for x in self._members[h_other])
                w_ell = w_cur - w_other
            key_ell = (w_ell, self.component_min(h_ell))
            key_other = (w_other, self.component_min(h_other))
            if key_ell < key_other:
                h_mig, h_keep = h_ell, h_other
                w_mig, w_keep = w_ell, w_other
                size_mig, size_keep = size_ell, size_other
                ell_on_keep = False
            else:
                h_mig, h_keep = h_other, h_ell
                w_mig, w_keep = w_other, w_ell
                size_mig, size_keep = size_other, size_ell
                ell_on_keep = True
            events.append(
                LabelSplit(
                    c, h_mig, h_keep, w_mig, w_keep, size_mig, size_keep,
                    ell_on_keep, self.component_nodes(h_mig),
                )
            )
            w_cur = w_ell
        killed = self.component_of(ell)
        self.delete_isolated_node(ell)
        return events, killed


class HdtConnectivity:
    """Hierarchical decremental connectivity (compiled core).

    Same contract as :class:`NaiveConnectivity`; see module docstring.
    """

    def __init__(self, n_vertices: int, edges: Iterable[tuple[int, int]]):
        import numpy as np

        from . import _hdt

        self._hdt = _hdt
        edges = list(edges)
        self.n = n_vertices
        m = len(edges)
        eid_of: dict[int, int] = {}
        eu = np.empty(m, dtype=np.int32)
        ev = np.empty(m, dtype=np.int32)
        for idx, (u, v) in enumerate(edges):
            if u == v:
                raise ValueError("self loops not supported")
            key = (u * n_vertices + v) if u < v else (v * n_vertices + u)
            if key in eid_of:
                raise ValueError("parallel edges not supported")
            eid_of[key] = idx
            eu[idx] = u
            ev[idx] = v
        self._eid_of = eid_of
        self._e_alive = np.zeros(m, dtype=bool)
        self._e_alive[:] = True
        self.state = _hdt.new_state(n_vertices, eu, ev)
        self._np = np

    def _key(self, u: int, v: int) -> int:
        return (u * self.n + v) if u < v else (v * self.n + u)

    def _eid(self, u: int, v: int) -> int:
        eid = self._eid_of.get(self._key(u, v), -1)
        if eid < 0 or not self._e_alive[eid]:
            raise ValueError(f"edge ({u}, {v}) not present")
        return eid

    # -- queries -----------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        eid = self._eid_of.get(self._key(u, v), -1)
        return eid >= 0 and bool(self._e_alive[eid])

    def component_of(self, u: int) -> int:
        h = self._hdt.component_of(self.state, u)
        if h < 0:
            raise KeyError(f"vertex {u} was deleted")
        return int(h)

    def component_size(self, h: int) -> int:
        size = self._hdt.component_size(self.state, h)
        if size < 0:
            raise StaleHandleError(h)
        return int(size)

    def component_nodes(self, h: int):
        size = self.component_size(h)
        out = self._np.empty(size, dtype=self._np.int32)
        self._hdt.component_nodes(self.state, h, out)
        return out

    def component_min(self, h: int) -> int:
        self.component_size(h)  # stale check
        return int(self._hdt.component_min(self.state, h))

    def same_component(self, u: int, v: int) -> bool:
        return self.component_of(u) == self.component_of(v)

    def num_components(self) -> int:
        return int(self._hdt.num_components(self.state))

    def alive(self, h: int) -> bool:
        return self._hdt.component_size(self.state, h) >= 0

    # -- updates -----------------------------------------------------------

    def delete_edge(self, u: int, v: int) -> Split | None:
        eid = self._eid(u, v)
        self._e_alive[eid] = False
        while True:
            st, ha, hb = self._hdt.delete_edge(self.state, eid)
            if st != self._hdt.NEED_GROW:
                break
            self.state = self._hdt.grow(self.state)
        if st != self._hdt.SPLIT:
            return None
        # ha is the side of the edge's stored u endpoint.
        if int(self.state.eu[eid]) == u:
            return Split(int(ha), int(hb))
        return Split(int(hb), int(ha))

    def delete_isolated_node(self, u: int) -> None:
        ok = self._hdt.delete_isolated_node(self.state, u)
        if ok != 0:
            raise ValueError(f"vertex {u} is not an isolated live vertex")

    def delete_label(self, ell: int, children, weights, w_cur: int):
        """Bulk form of delete_edge/delete_isolated_node for one label."""
        np = self._np
        eids = np.empty(len(children), dtype=np.int64)
        for i, c in enumerate(children):
            eids[i] = self._eid(ell, c)
            self._e_alive[eids[i]] = False
        events = []
        start = 0
        while True:
            evbuf = np.empty((len(children) - start + 1, 10), dtype=np.int64)
            nodebuf = np.empty(2 * w_cur + 66, dtype=np.int32)
            status, n_ev, _used, nxt, w_after, killed = self._hdt.delete_label(
                self.state, ell, eids, start, w_cur, weights, evbuf, nodebuf
            )
            for r in range(n_ev):
                off = int(evbuf[r, 8])
                ln = int(evbuf[r, 9])
                events.append(
                    LabelSplit(
                        int(evbuf[r, 0]), int(evbuf[r, 1]), int(evbuf[r, 2]),
                        int(evbuf[r, 3]), int(evbuf[r, 4]), int(evbuf[r, 5]),
                        int(evbuf[r, 6]), bool(evbuf[r, 7]),
                        nodebuf[off : off + ln],
                    )
                )
            if status == self._hdt.NEED_GROW:
                self.state = self._hdt.grow(self.state)
                start = int(nxt)
                w_cur = int(w_after)
                continue
            if status != 0:
                raise ValueError(f"vertex {ell} not isolated after deletions")
            return events, int(killed)


def make_index(n_vertices: int, edges, backend: str = "hdt"):
    if backend == "naive":
        return NaiveConnectivity(n_vertices, edges)
    if backend == "hdt":
        return HdtConnectivity(n_vertices, edges)
    raise ValueError(f"unknown connectivity backend {backend!r}")
