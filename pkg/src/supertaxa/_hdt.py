"""Compiled core of the hierarchical decremental-connectivity structure.

Layout
------
State is a named tuple of flat numpy arrays (kept rebindable so the wrapper
can grow pools without recompiling):

* ``P``    int32[12, cap] — Euler-tour treap entry pool.  Rows: parent, left,
  right, self-vertex (or -1), edge id (or -1), level-edge flag, nontree flag,
  and four subtree aggregates (self-loop count, level-edge count, nontree
  count, min vertex), plus the component id valid at level-0 roots.
* ``pri``  int64[cap] — treap priorities.
* per-edge arrays — endpoints, current level, tree flag, and doubly linked
  adjacency pointers for the per-(level, vertex) non-tree edge lists.
* ``AH``/``VL``  int32[L, n] — adjacency heads and self-loop entries.
* ``TA``/``TB``  int32[L, m] — the two tour entries of a tree edge per level.
* ``CR``/``CAL`` — component root entry and alive flag per handle.
* ``SC``   int64[8] — scalars: entry-pool top, free-list head and count,
  next component id, live component count.

Every forest ``F_i`` holds the edges of level >= i; deleting a tree edge
searches levels top-down, first promoting the smaller fragment's level-i
tree edges, then scanning its level-i non-tree edges for a replacement,
promoting the failures.  Component handles live on level-0 tree roots.
"""

from __future__ import annotations

from collections import namedtuple

import numpy as np
from numba import njit

NIL = -1
INF32 = 2**31 - 1

# P rows
PAR, LCH, RCH, SLF, EID, LEF, NTF, SNV, SLE, SNT, SMI, CMP = range(12)
# SC slots
S_TOP, S_FHEAD, S_NFREE, S_NCOMP, S_LIVE = range(5)

# delete_edge statuses
NO_SPLIT = 0
SPLIT = 2
NEED_GROW = 3

HdtState = namedtuple(
    "HdtState",
    [
        "P", "pri", "eu", "ev", "elvl", "etree",
        "nxu", "pvu", "nxv", "pvv", "AH", "VL", "TA", "TB",
        "CR", "CAL", "SC", "rng",
    ],
)


# -- treap primitives --------------------------------------------------------


@njit(cache=True)
def _rng_next(rng):
    x = rng[0]
    x ^= x >> np.uint64(12)
    x ^= x << np.uint64(25)
    x ^= x >> np.uint64(27)
    rng[0] = x
    return np.int64((x * np.uint64(0x2545F4914F6CDD1D)) >> np.uint64(1))


@njit(cache=True)
def _pull(P, e):
    snv = 0
    sle = P[LEF, e]
    snt = P[NTF, e]
    smi = INF32
    if P[SLF, e] >= 0:
        snv = 1
        smi = P[SLF, e]
    l = P[LCH, e]
    if l != NIL:
        snv += P[SNV, l]
        sle += P[SLE, l]
        snt += P[SNT, l]
        if P[SMI, l] < smi:
            smi = P[SMI, l]
    r = P[RCH, e]
    if r != NIL:
        snv += P[SNV, r]
        sle += P[SLE, r]
        snt += P[SNT, r]
        if P[SMI, r] < smi:
            smi = P[SMI, r]
    P[SNV, e] = snv
    P[SLE, e] = sle
    P[SNT, e] = snt
    P[SMI, e] = smi


@njit(cache=True)
def _update_up(P, e):
    while e != NIL:
        _pull(P, e)
        e = P[PAR, e]


@njit(cache=True)
def _find_root(P, e):
    while P[PAR, e] != NIL:
        e = P[PAR, e]
    return e


@njit(cache=True)
def _leftmost(P, e):
    while P[LCH, e] != NIL:
        e = P[LCH, e]
    return e


@njit(cache=True)
def _successor(P, e):
    if P[RCH, e] != NIL:
        return _leftmost(P, P[RCH, e])
    p = P[PAR, e]
    while p != NIL and P[RCH, p] == e:
        e = p
        p = P[PAR, p]
    return p


@njit(cache=True)
def _split(P, e, after):
    """Split the tree containing e at e.

    after=True: (prefix ending at e, suffix); else (prefix, suffix from e).
    Returns the two roots (either may be NIL).
    """
    p = P[PAR, e]
    if after:
        a = e
        b = P[RCH, e]
        P[RCH, e] = NIL
    else:
        a = P[LCH, e]
        b = e
        P[LCH, e] = NIL
    if a != NIL:
        P[PAR, a] = NIL
    if b != NIL:
        P[PAR, b] = NIL
    cur = e
    _pull(P, e)
    while p != NIL:
        gp = P[PAR, p]
        if P[LCH, p] == cur:
            # p and its right subtree lie after e.
            P[LCH, p] = b
            if b != NIL:
                P[PAR, b] = p
            _pull(P, p)
            b = p
        else:
            # p and its left subtree lie before e.
            P[RCH, p] = a
            if a != NIL:
                P[PAR, a] = p
            _pull(P, p)
            a = p
        cur = p
        p = gp
    if a != NIL:
        P[PAR, a] = NIL
    if b != NIL:
        P[PAR, b] = NIL
    return a, b


@njit(cache=True)
def _join(P, pri, a, b):
    """Concatenate tours a, b (roots); returns the new root."""
    if a == NIL:
        return b
    if b == NIL:
        return a
    if pri[a] >= pri[b]:
        root = a
    else:
        root = b
    slot = NIL
    slot_left = False
    while True:
        if a == NIL or b == NIL:
            rest = a if b == NIL else b
            if slot != NIL:
                if slot_left:
                    P[LCH, slot] = rest
                else:
                    P[RCH, slot] = rest
                if rest != NIL:
                    P[PAR, rest] = slot
                _update_up(P, slot)
            return root
        if pri[a] >= pri[b]:
            if slot != NIL:
                if slot_left:
                    P[LCH, slot] = a
                else:
                    P[RCH, slot] = a
                P[PAR, a] = slot
            slot = a
            slot_left = False
            a = P[RCH, a]
        else:
            if slot != NIL:
                if slot_left:
                    P[LCH, slot] = b
                else:
                    P[RCH, slot] = b
                P[PAR, b] = slot
            slot = b
            slot_left = True
            b = P[LCH, b]


@njit(cache=True)
def _new_entry(P, pri, SC, rng, selfv, eidv, lef, ntf):
    if SC[S_FHEAD] != NIL:
        e = SC[S_FHEAD]
        SC[S_FHEAD] = P[PAR, e]
        SC[S_NFREE] -= 1
    else:
        e = SC[S_TOP]
        SC[S_TOP] += 1
    P[PAR, e] = NIL
    P[LCH, e] = NIL
    P[RCH, e] = NIL
    P[SLF, e] = selfv
    P[EID, e] = eidv
    P[LEF, e] = lef
    P[NTF, e] = ntf
    P[CMP, e] = NIL
    pri[e] = _rng_next(rng)
    _pull(P, e)
    return e


@njit(cache=True)
def _free_entry(P, SC, e):
    P[PAR, e] = SC[S_FHEAD]
    SC[S_FHEAD] = e
    SC[S_NFREE] += 1


# -- forest-level operations --------------------------------------------------


@njit(cache=True)
def _ensure_vloop(P, pri, SC, rng, VL, lvl, v):
    e = VL[lvl, v]
    if e == NIL:
        e = _new_entry(P, pri, SC, rng, v, NIL, 0, 0)
        VL[lvl, v] = e
    return e


@njit(cache=True)
def _reroot(P, pri, vl):
    a, b = _split(P, vl, False)
    return _join(P, pri, b, a)


@njit(cache=True)
def _set_flag(P, row, e, val):
    if P[row, e] != val:
        P[row, e] = val
        _update_up(P, e)


@njit(cache=True)
def _link_tree(st, lvl, eid):
    P = st.P
    u = st.eu[eid]
    v = st.ev[eid]
    vu = _ensure_vloop(P, st.pri, st.SC, st.rng, st.VL, lvl, u)
    vv = _ensure_vloop(P, st.pri, st.SC, st.rng, st.VL, lvl, v)
    ru = _reroot(P, st.pri, vu)
    rv = _reroot(P, st.pri, vv)
    lef = 1 if st.elvl[eid] == lvl else 0
    e1 = _new_entry(P, st.pri, st.SC, st.rng, NIL, eid, lef, 0)
    e2 = _new_entry(P, st.pri, st.SC, st.rng, NIL, eid, lef, 0)
    st.TA[lvl, eid] = e1
    st.TB[lvl, eid] = e2
    t = _join(P, st.pri, ru, e1)
    t = _join(P, st.pri, t, rv)
    _join(P, st.pri, t, e2)


@njit(cache=True)
def _cut_tree(st, lvl, eid):
    P = st.P
    s1 = st.TA[lvl, eid]
    s2 = st.TB[lvl, eid]
    st.TA[lvl, eid] = NIL
    st.TB[lvl, eid] = NIL
    left, right = _split(P, s1, False)  # right begins with s1
    if s2 != NIL and left != NIL and _find_root(P, s2) == left:
        # s2 precedes s1 in the tour: left = A s2 Y, right = s1 Z
        a2, mm = _split(P, s2, False)
        h2, inner = _split(P, s2, True)
        h1, z = _split(P, s1, True)
        _join(P, st.pri, a2, z)
    else:
        # tour = A s1 Y s2 Z
        m1, z2 = _split(P, s2, False)
        h1, inner = _split(P, s1, True)
        h2, tail = _split(P, s2, True)
        _join(P, st.pri, left, tail)
    _free_entry(P, st.SC, s1)
    _free_entry(P, st.SC, s2)


@njit(cache=True)
def _adj_push(st, lvl, eid):
    u = st.eu[eid]
    v = st.ev[eid]
    vu = _ensure_vloop(st.P, st.pri, st.SC, st.rng, st.VL, lvl, u)
    vv = _ensure_vloop(st.P, st.pri, st.SC, st.rng, st.VL, lvl, v)

    old = st.AH[lvl, u]
    st.nxu[eid] = old
    st.pvu[eid] = NIL
    if old != NIL:
        if st.eu[old] == u:
            st.pvu[old] = eid
        else:
            st.pvv[old] = eid
    else:
        _set_flag(st.P, NTF, vu, 1)
    st.AH[lvl, u] = eid

    old = st.AH[lvl, v]
    st.nxv[eid] = old
    st.pvv[eid] = NIL
    if old != NIL:
        if st.eu[old] == v:
            st.pvu[old] = eid
        else:
            st.pvv[old] = eid
    else:
        _set_flag(st.P, NTF, vv, 1)
    st.AH[lvl, v] = eid


@njit(cache=True)
def _adj_remove_end(st, lvl, eid, w):
    if st.eu[eid] == w:
        nxt = st.nxu[eid]
        prv = st.pvu[eid]
    else:
        nxt = st.nxv[eid]
        prv = st.pvv[eid]
    if prv != NIL:
        if st.eu[prv] == w:
            st.nxu[prv] = nxt
        else:
            st.nxv[prv] = nxt
    else:
        st.AH[lvl, w] = nxt
    if nxt != NIL:
        if st.eu[nxt] == w:
            st.pvu[nxt] = prv
        else:
            st.pvv[nxt] = prv
    if st.AH[lvl, w] == NIL:
        _set_flag(st.P, NTF, st.VL[lvl, w], 0)


@njit(cache=True)
def _adj_remove(st, lvl, eid):
    _adj_remove_end(st, lvl, eid, st.eu[eid])
    _adj_remove_end(st, lvl, eid, st.ev[eid])


@njit(cache=True)
def _find_flagged(P, row_flag, row_sum, root):
    if root == NIL or P[row_sum, root] == 0:
        return NIL
    e = root
    while True:
        l = P[LCH, e]
        if l != NIL and P[row_sum, l] > 0:
            e = l
            continue
        if P[row_flag, e] > 0:
            return e
        e = P[RCH, e]


@njit(cache=True)
def _enum_selfloops(P, root, out):
    cnt = 0
    e = _leftmost(P, root)
    while e != NIL:
        if P[SLF, e] >= 0:
            out[cnt] = P[SLF, e]
            cnt += 1
        e = _successor(P, e)
    return cnt


# -- public operations --------------------------------------------------------


@njit(cache=True)
def _init(st, indptr, nbr, eidx):
    P = st.P
    n = st.VL.shape[1]
    visited = np.zeros(n, dtype=np.uint8)
    stack_v = np.empty(n + 1, dtype=np.int64)
    stack_p = np.empty(n + 1, dtype=np.int64)
    stack_e = np.empty(n + 1, dtype=np.int64)
    seq = np.empty(3 * n + 1, dtype=np.int64)
    cart = np.empty(3 * n + 1, dtype=np.int64)
    for s in range(n):
        if visited[s]:
            continue
        visited[s] = 1
        seq_len = 0
        e = _new_entry(P, st.pri, st.SC, st.rng, s, NIL, 0, 0)
        st.VL[0, s] = e
        seq[seq_len] = e
        seq_len += 1
        top = 0
        stack_v[0] = s
        stack_p[0] = indptr[s]
        stack_e[0] = NIL
        while top >= 0:
            v = stack_v[top]
            p = stack_p[top]
            advanced = False
            while p < indptr[v + 1]:
                eid2 = eidx[p]
                w = nbr[p]
                p += 1
                if visited[w] == 0:
                    visited[w] = 1
                    st.etree[eid2] = 1
                    e1 = _new_entry(P, st.pri, st.SC, st.rng, NIL, eid2, 1, 0)
                    st.TA[0, eid2] = e1
                    seq[seq_len] = e1
                    seq_len += 1
                    ew = _new_entry(P, st.pri, st.SC, st.rng, w, NIL, 0, 0)
                    st.VL[0, w] = ew
                    seq[seq_len] = ew
                    seq_len += 1
                    stack_p[top] = p
                    top += 1
                    stack_v[top] = w
                    stack_p[top] = indptr[w]
                    stack_e[top] = eid2
                    advanced = True
                    break
            if advanced:
                continue
            ein = stack_e[top]
            if ein != NIL:
                e2 = _new_entry(P, st.pri, st.SC, st.rng, NIL, ein, 1, 0)
                st.TB[0, ein] = e2
                seq[seq_len] = e2
                seq_len += 1
            top -= 1
        # Build the treap over seq[0:seq_len] (in-order seq, max-heap pri).
        sp = 0
        for idx in range(seq_len):
            x = seq[idx]
            last = NIL
            while sp > 0 and st.pri[cart[sp - 1]] < st.pri[x]:
                last = cart[sp - 1]
                sp -= 1
                _pull(P, last)
            P[LCH, x] = last
            if last != NIL:
                P[PAR, last] = x
            if sp > 0:
                P[RCH, cart[sp - 1]] = x
                P[PAR, x] = cart[sp - 1]
            cart[sp] = x
            sp += 1
        for i in range(sp - 1, -1, -1):
            _pull(P, cart[i])
        root = cart[0]
        h = st.SC[S_NCOMP]
        st.SC[S_NCOMP] += 1
        st.CR[h] = root
        st.CAL[h] = 1
        P[CMP, root] = h
        st.SC[S_LIVE] += 1
    # Non-tree edges enter the level-0 adjacency lists.
    m = st.eu.shape[0]
    for eid2 in range(m):
        if st.etree[eid2] == 0:
            _adj_push(st, 0, eid2)


@njit(cache=True)
def delete_edge(st, eid):
    """Returns (status, handle_of_eu_side, handle_of_ev_side)."""
    P = st.P
    SC = st.SC
    L = st.VL.shape[0]
    u = st.eu[eid]
    v = st.ev[eid]
    r0 = _find_root(P, st.VL[0, u])
    cap = P.shape[1]
    free = (cap - SC[S_TOP]) + SC[S_NFREE]
    if free < 4 * P[SNV, r0] + 4 * L + 64 or SC[S_NCOMP] + 2 > st.CR.shape[0]:
        return NEED_GROW, -1, -1
    h_old = P[CMP, r0]
    lvl0 = st.elvl[eid]
    if st.etree[eid] == 0:
        _adj_remove(st, lvl0, eid)
        return NO_SPLIT, -1, -1
    st.etree[eid] = 0
    for j in range(lvl0, -1, -1):
        _cut_tree(st, j, eid)
    reconnected = False
    for j in range(lvl0, -1, -1):
        ru = _find_root(P, st.VL[j, u])
        rv = _find_root(P, st.VL[j, v])
        if P[SNV, ru] > P[SNV, rv]:
            ru, rv = rv, ru
        if P[SNT, ru] == 0:
            # No level-j non-tree edge touches the smaller fragment, so no
            # replacement can exist here and nothing needs promoting.
            continue
        # Promote the smaller fragment's level-j tree edges to j+1.
        while True:
            ent = _find_flagged(P, LEF, SLE, ru)
            if ent == NIL:
                break
            f = P[EID, ent]
            _set_flag(P, LEF, st.TA[j, f], 0)
            _set_flag(P, LEF, st.TB[j, f], 0)
            st.elvl[f] = j + 1
            _link_tree(st, j + 1, f)
        # Scan its level-j non-tree edges for a replacement.
        while True:
            vle = _find_flagged(P, NTF, SNT, ru)
            if vle == NIL:
                break
            x = P[SLF, vle]
            g = st.AH[j, x]
            y = st.ev[g] if st.eu[g] == x else st.eu[g]
            if _find_root(P, st.VL[j, y]) == rv:
                _adj_remove(st, j, g)
                st.etree[g] = 1
                for t in range(j, -1, -1):
                    _link_tree(st, t, g)
                reconnected = True
                break
            _adj_remove(st, j, g)
            st.elvl[g] = j + 1
            _adj_push(st, j + 1, g)
        if reconnected:
            break
    if reconnected:
        nr = _find_root(P, st.VL[0, u])
        P[CMP, nr] = h_old
        st.CR[h_old] = nr
        return NO_SPLIT, -1, -1
    ru0 = _find_root(P, st.VL[0, u])
    rv0 = _find_root(P, st.VL[0, v])
    st.CAL[h_old] = 0
    ha = SC[S_NCOMP]
    SC[S_NCOMP] += 1
    hb = SC[S_NCOMP]
    SC[S_NCOMP] += 1
    st.CR[ha] = ru0
    st.CAL[ha] = 1
    P[CMP, ru0] = ha
    st.CR[hb] = rv0
    st.CAL[hb] = 1
    P[CMP, rv0] = hb
    SC[S_LIVE] += 1
    return SPLIT, ha, hb


@njit(cache=True)
def _sum_weight(P, root, kw):
    total = 0
    e = _leftmost(P, root)
    while e != NIL:
        if P[SLF, e] >= 0:
            total += kw[P[SLF, e]]
        e = _successor(P, e)
    return total


@njit(cache=True)
def delete_label(st, ell, eids, start, w_cur, kw, evbuf, nodebuf):
    """Delete edges eids[start:] around ell, then ell itself.

    For every deletion that splits ell's component, appends an event row
    [alpha, h_mig, h_keep, w_mig, w_keep, size_mig, size_keep, ell_on_keep,
    node_off, node_len] where the "mig" side is the smaller-weight side
    (ties broken toward the smaller minimum vertex) and nodebuf[node_off:
    node_off+node_len] holds its vertices.  w_cur is the weight of ell's
    component before eids[start].

    Returns (status, n_events, nodes_used, next_index, w_cur, killed_handle);
    status NEED_GROW means the caller must grow the pool and resume from
    next_index with the returned w_cur.
    """
    P = st.P
    n_ev = 0
    nodes_used = 0
    i = start
    while i < eids.shape[0]:
        eid = eids[i]
        status, ha, hb = delete_edge(st, eid)
        if status == NEED_GROW:
            return NEED_GROW, n_ev, nodes_used, i, w_cur, -1
        i += 1
        if status != SPLIT:
            continue
        # ha: side of the stored eu endpoint; find ell's side.
        r_ell = _find_root(P, st.VL[0, ell])
        h_ell = P[CMP, r_ell]
        h_other = hb if h_ell == ha else ha
        ra = st.CR[h_ell]
        rb = st.CR[h_other]
        alpha = st.ev[eid] if st.eu[eid] == ell else st.eu[eid]
        size_ell = P[SNV, ra]
        size_other = P[SNV, rb]
        # Recompute weights by scanning the smaller side by node count.
        if size_ell <= size_other:
            w_ell = _sum_weight(P, ra, kw)
            w_other = w_cur - w_ell
        else:
            w_other = _sum_weight(P, rb, kw)
            w_ell = w_cur - w_other
        # Migration side: smaller weight, ties toward smaller min vertex.
        if w_ell < w_other or (w_ell == w_other and P[SMI, ra] < P[SMI, rb]):
            h_mig, h_keep = h_ell, h_other
            w_mig, w_keep = w_ell, w_other
            size_mig, size_keep = size_ell, size_other
            r_mig = ra
            ell_on_keep = 0
        else:
            h_mig, h_keep = h_other, h_ell
            w_mig, w_keep = w_other, w_ell
            size_mig, size_keep = size_other, size_ell
            r_mig = rb
            ell_on_keep = 1
        cnt = _enum_selfloops(P, r_mig, nodebuf[nodes_used:])
        evbuf[n_ev, 0] = alpha
        evbuf[n_ev, 1] = h_mig
        evbuf[n_ev, 2] = h_keep
        evbuf[n_ev, 3] = w_mig
        evbuf[n_ev, 4] = w_keep
        evbuf[n_ev, 5] = size_mig
        evbuf[n_ev, 6] = size_keep
        evbuf[n_ev, 7] = ell_on_keep
        evbuf[n_ev, 8] = nodes_used
        evbuf[n_ev, 9] = cnt
        n_ev += 1
        nodes_used += cnt
        w_cur = w_ell
    killed = component_of(st, ell)
    ok = delete_isolated_node(st, ell)
    if ok != 0:
        return 1, n_ev, nodes_used, i, w_cur, -1
    return 0, n_ev, nodes_used, i, w_cur, killed


@njit(cache=True)
def delete_isolated_node(st, w):
    P = st.P
    L = st.VL.shape[0]
    vl0 = st.VL[0, w]
    if vl0 == NIL:
        return 1
    r0 = _find_root(P, vl0)
    if P[SNV, r0] != 1:
        return 1
    for j in range(L):
        if st.AH[j, w] != NIL:
            return 1
    h = P[CMP, r0]
    for j in range(L):
        e = st.VL[j, w]
        if e != NIL:
            st.VL[j, w] = NIL
            _free_entry(P, st.SC, e)
    st.CAL[h] = 0
    st.SC[S_LIVE] -= 1
    return 0


@njit(cache=True)
def component_of(st, w):
    vl0 = st.VL[0, w]
    if vl0 == NIL:
        return -1
    return st.P[CMP, _find_root(st.P, vl0)]


@njit(cache=True)
def component_size(st, h):
    if h < 0 or h >= st.SC[S_NCOMP] or st.CAL[h] == 0:
        return -1
    return st.P[SNV, st.CR[h]]


@njit(cache=True)
def component_min(st, h):
    return st.P[SMI, st.CR[h]]


@njit(cache=True)
def component_nodes(st, h, out):
    return _enum_selfloops(st.P, st.CR[h], out)


@njit(cache=True)
def num_components(st):
    return st.SC[S_LIVE]


# -- state construction and growth (plain Python) ------------------------------


def _levels(n: int) -> int:
    return max(2, int(n).bit_length() + 1)


def new_state(n: int, eu: np.ndarray, ev: np.ndarray) -> HdtState:
    m = len(eu)
    L = _levels(n)
    cap = 4 * n + 4 * m + 1024
    hcap = n + 2 * m + 64
    seed = 0x9E3779B97F4A7C15 ^ ((n * 2654435761 + m) & 0xFFFFFFFFFFFFFFFF)
    st = HdtState(
        P=np.full((12, cap), NIL, dtype=np.int32),
        pri=np.zeros(cap, dtype=np.int64),
        eu=eu.astype(np.int32),
        ev=ev.astype(np.int32),
        elvl=np.zeros(m, dtype=np.int32),
        etree=np.zeros(m, dtype=np.uint8),
        nxu=np.full(m, NIL, dtype=np.int32),
        pvu=np.full(m, NIL, dtype=np.int32),
        nxv=np.full(m, NIL, dtype=np.int32),
        pvv=np.full(m, NIL, dtype=np.int32),
        AH=np.full((L, n), NIL, dtype=np.int32),
        VL=np.full((L, n), NIL, dtype=np.int32),
        TA=np.full((L, m), NIL, dtype=np.int32),
        TB=np.full((L, m), NIL, dtype=np.int32),
        CR=np.full(hcap, NIL, dtype=np.int32),
        CAL=np.zeros(hcap, dtype=np.uint8),
        SC=np.zeros(8, dtype=np.int64),
        rng=np.array([seed or 0x9E3779B97F4A7C15], dtype=np.uint64),
    )
    st.SC[S_FHEAD] = NIL
    # CSR adjacency for the initial spanning-forest search.
    ends = np.concatenate((eu, ev)).astype(np.int64)
    others = np.concatenate((ev, eu)).astype(np.int64)
    eids = np.concatenate((np.arange(m), np.arange(m))).astype(np.int64)
    order = np.argsort(ends, kind="stable")
    nbr = others[order]
    eidx = eids[order]
    indptr = np.zeros(n + 1, dtype=np.int64)
    counts = np.bincount(ends, minlength=n)
    indptr[1:] = np.cumsum(counts)
    _init(st, indptr, nbr, eidx)
    return st


def grow(st: HdtState) -> HdtState:
    """Double the entry pool and the handle table."""
    old_cap = st.P.shape[1]
    cap = 2 * old_cap
    P = np.full((12, cap), NIL, dtype=np.int32)
    P[:, :old_cap] = st.P
    pri = np.zeros(cap, dtype=np.int64)
    pri[:old_cap] = st.pri
    old_h = st.CR.shape[0]
    hcap = 2 * old_h
    CR = np.full(hcap, NIL, dtype=np.int32)
    CR[:old_h] = st.CR
    CAL = np.zeros(hcap, dtype=np.uint8)
    CAL[:old_h] = st.CAL
    return st._replace(P=P, pri=pri, CR=CR, CAL=CAL)
