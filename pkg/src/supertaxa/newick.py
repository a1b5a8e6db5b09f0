"""Newick dialect with internal node labels.

Grammar::

    tree    := subtree ';'
    subtree := label | '(' subtree (',' subtree)* ')' [label]
    label   := atom ('+' atom)*

Atoms are bare words or single-quoted strings (embedded quotes doubled).
A ':' followed by a number is accepted after any subtree and discarded.
Multi-label nodes join their atoms with '+', which is therefore forbidden
inside atom text itself.

Profile files hold one tree per line; blank lines and lines starting with
'#' are ignored.  Equal label strings across lines denote the same taxon.
"""

from __future__ import annotations

from .trees import LabelUniverse, Profile, SemiLabeledTree, validate

_BARE_STOP = set("(),;:'+[]")


class NewickParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def parse_newick(text: str, universe: LabelUniverse | None = None) -> SemiLabeledTree:
    """Parse one Newick string into a semi-labeled tree.

    Unlabeled internal nodes are allowed (they can be filled later by
    full-labeling); unlabeled nodes with fewer than two children are a
    parse error, as are duplicate labels within the tree.
    """
    if universe is None:
        universe = LabelUniverse()
    s = text
    n = len(s)
    i = 0

    parents: list[int] = []
    labels: list[list[int]] = []
    positions: list[int] = []
    seen_labels: set[int] = set()

    def skip_ws(j: int) -> int:
        while j < n and s[j].isspace():
            j += 1
        return j

    def new_node(pos: int) -> int:
        parents.append(-1)
        labels.append([])
        positions.append(pos)
        return len(parents) - 1

    def read_atom(j: int) -> tuple[str, int]:
        j = skip_ws(j)
        if j < n and s[j] == "'":
            start = j
            j += 1
            out = []
            while True:
                if j >= n:
                    raise NewickParseError("unterminated quoted label", start)
                if s[j] == "'":
                    if j + 1 < n and s[j + 1] == "'":
                        out.append("'")
                        j += 2
                        continue
                    j += 1
                    break
                out.append(s[j])
                j += 1
            name = "".join(out)
            if not name:
                raise NewickParseError("empty quoted label", start)
            if "+" in name:
                raise NewickParseError("'+' not allowed inside label names", start)
            return name, j
        start = j
        while j < n and not s[j].isspace() and s[j] not in _BARE_STOP:
            j += 1
        if j == start:
            raise NewickParseError("expected a label", start)
        return s[start:j], j

    def read_label(node: int, j: int) -> int:
        while True:
            name, j = read_atom(j)
            lid = universe.intern(name).id
            if lid in seen_labels:
                raise NewickParseError(f"duplicate label {name!r} in tree", j)
            seen_labels.add(lid)
            labels[node].append(lid)
            j = skip_ws(j)
            if j < n and s[j] == "+":
                j += 1
                continue
            return j

    def skip_length(j: int) -> int:
        j = skip_ws(j)
        if j < n and s[j] == ":":
            j = skip_ws(j + 1)
            start = j
            while j < n and (s[j] in "+-.eE" or s[j].isdigit()):
                j += 1
            try:
                float(s[start:j])
            except ValueError:
                raise NewickParseError("malformed branch length", start) from None
            return j
        return j

    # Iterative descent; each open '(' pushes a frame of completed children.
    stack: list[list[int]] = []
    done: int | None = None  # completed top-level subtree
    expect_subtree = True

    while True:
        i = skip_ws(i)
        if i >= n:
            raise NewickParseError("missing ';'", n)
        ch = s[i]
        if expect_subtree:
            if ch == "(":
                stack.append([])
                i += 1
                continue
            node = new_node(i)
            i = read_label(node, i)
            i = skip_length(i)
            done = node
            expect_subtree = False
            continue
        # A subtree just finished.
        if ch == ",":
            if not stack:
                raise NewickParseError("',' outside parentheses", i)
            stack[-1].append(done)  # type: ignore[arg-type]
            done = None
            expect_subtree = True
            i += 1
            continue
        if ch == ")":
            if not stack:
                raise NewickParseError("unbalanced ')'", i)
            kids = stack.pop()
            kids.append(done)  # type: ignore[arg-type]
            node = new_node(i)
            for c in kids:
                parents[c] = node
            i += 1
            j = skip_ws(i)
            if j < n and s[j] not in ",);:":
                i = read_label(node, j)
            i = skip_length(i)
            done = node
            continue
        if ch == ";":
            if stack:
                raise NewickParseError("unbalanced '('", i)
            i += 1
            break
        raise NewickParseError(f"unexpected character {ch!r}", i)

    i = skip_ws(i)
    if i < n:
        raise NewickParseError("trailing text after ';'", i)

    assert done is not None
    tree = SemiLabeledTree(universe, parents, labels)
    bad = validate(tree)
    if bad is not None:
        raise NewickParseError(str(bad), positions[bad.node] if bad.node is not None else 0)
    return tree


def _quote_atom(name: str) -> str:
    # '#' is quoted so a written tree can never look like a comment line.
    safe = all(
        not c.isspace() and c not in _BARE_STOP and c not in '"#' for c in name
    )
    if name and safe:
        return name
    return "'" + name.replace("'", "''") + "'"


def write_newick(tree: SemiLabeledTree, strip_synthetic: bool = False) -> str:
    """Serialize deterministically: children ordered by the smallest label
    name in their subtree, node labels sorted and joined with '+'."""
    if strip_synthetic:
        from .trees import strip_synthetic as _strip

        tree = _strip(tree)

    uni = tree.universe
    n = tree.n_nodes
    min_name: list[str | None] = [None] * n
    for v in tree.postorder():
        best: str | None = min((uni.name(l) for l in tree.node_labels[v]), default=None)
        for c in tree.children[v]:
            m = min_name[c]
            if m is not None and (best is None or m < best):
                best = m
        min_name[v] = best

    def label_text(v: int) -> str:
        return "+".join(_quote_atom(uni.name(l)) for l in sorted(
            tree.node_labels[v], key=uni.name))

    out: list[str] = []
    # (node, next-child-cursor); children visited in min-name order.
    order = {
        v: sorted(tree.children[v], key=lambda c: (min_name[c] or "",))
        for v in range(n)
    }
    stack: list[tuple[int, int]] = [(tree.root, 0)]
    while stack:
        v, cursor = stack.pop()
        kids = order[v]
        if not kids:
            out.append(label_text(v))
            continue
        if cursor == 0:
            out.append("(")
        if cursor < len(kids):
            if cursor > 0:
                out.append(",")
            stack.append((v, cursor + 1))
            stack.append((kids[cursor], 0))
        else:
            out.append(")")
            out.append(label_text(v))
    out.append(";")
    return "".join(out)


def parse_profile_text(text: str, universe: LabelUniverse | None = None) -> Profile:
    """Parse a profile file body: one Newick line per tree."""
    if universe is None:
        universe = LabelUniverse()
    trees = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            trees.append(parse_newick(line, universe))
        except NewickParseError as exc:
            raise NewickParseError(f"line {lineno}: {exc}", exc.position) from None
    if not trees:
        raise NewickParseError("profile contains no trees", 0)
    return Profile(universe, trees)


def read_profile(path: str) -> Profile:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_profile_text(fh.read())


def write_profile_text(profile: Profile, strip_synthetic: bool = False) -> str:
    return "".join(
        write_newick(t, strip_synthetic=strip_synthetic) + "\n" for t in profile.trees
    )
