r"""Cluster pictures of root sets over a discretely valued field.

A cluster is a nonempty subset of the roots cut out by a disc
``{x : v(x - z) >= rho}``.  Equivalently (and this is how construction
works here): the whole root set is a cluster, every singleton is a
cluster, and the remaining clusters are the equivalence classes of the
relation ``v(r - r') >= theta`` as the threshold theta sweeps the finite
pairwise valuations.  The family is laminar because the valuation is
ultrametric.

Depths follow the minimum rule:

- depth d_s = min over pairs inside s of v(r - r')   (proper s only)
- relative depth delta_s = d_s - d_{P(s)} where P(s) is the parent

The picture is model dependent (it changes under Moebius maps); anything
model independent is computed downstream from the associated trees.

INPUT convention: roots are finite :class:`~hyperred.valfield.RootPair`
values over one backend.  A root at infinity is rejected here with a
remediation hint; the invariant-evaluation layer handles infinity natively
and does not need cluster pictures.
"""

from __future__ import annotations

from gmpy2 import mpq

from .errors import (
    DomainError,
    E_INFINITE_ROOT,
    E_NOT_SQUAREFREE,
    E_SINGLETON,
)
from .valfield import INF, RationalAtP, ValuedElement, rescale_common


class Cluster:
    """One cluster: member indices, depth, relative depth, tree links.

    ``depth`` is None for singletons (no pair to take a minimum over);
    ``relative_depth`` is None for the top cluster.
    """

    __slots__ = ("members", "depth", "relative_depth", "parent", "children")

    def __init__(self, members):
        self.members = frozenset(members)
        self.depth = None
        self.relative_depth = None
        self.parent = None          # index into ClusterPicture.clusters
        self.children = ()          # indices, set at build time

    @property
    def size(self):
        return len(self.members)

    def is_proper(self):
        return self.size > 1

    def is_even(self):
        return self.size % 2 == 0

    def is_odd(self):
        return self.size % 2 == 1

    def __repr__(self):
        d = "-" if self.depth is None else str(self.depth)
        return f"Cluster({sorted(self.members)}, depth={d})"


class ClusterPicture:
    """The laminar family of clusters of a finite root set, with depths."""

    def __init__(self, roots, clusters, top_index, valmatrix):
        self.roots = roots
        self.clusters = clusters
        self.top_index = top_index
        self._valmatrix = valmatrix
        self._index_of = {c.members: k for k, c in enumerate(clusters)}

    # -- queries -------------------------------------------------------

    @property
    def degree(self):
        return len(self.roots)

    @property
    def top(self):
        return self.clusters[self.top_index]

    def proper_clusters(self):
        return [c for c in self.clusters if c.is_proper()]

    def children_of(self, cluster):
        return [self.clusters[k] for k in cluster.children]

    def parent_of(self, cluster):
        if cluster.parent is None:
            return None
        return self.clusters[cluster.parent]

    def index_of(self, cluster):
        return self._index_of[cluster.members]

    def singleton(self, root_index):
        return self.clusters[self._index_of[frozenset([root_index])]]

    def smallest_containing(self, root_indices):
        """The smallest cluster containing all the given root indices."""
        want = frozenset(root_indices)
        best = None
        for c in self.clusters:
            if want <= c.members:
                if best is None or c.size < best.size:
                    best = c
        return best

    def is_ubereven(self, cluster):
        """Proper, even, and every child (singletons included) is even."""
        if not (cluster.is_proper() and cluster.is_even()):
            return False
        return all(self.clusters[k].is_even() for k in cluster.children)

    def odd_children_count(self, cluster):
        return sum(1 for k in cluster.children if self.clusters[k].is_odd())

    def pairwise_valuation(self, i, j):
        return self._valmatrix[i][j]

    # -- serialization ---------------------------------------------------

    def to_json(self):
        out = []
        for c in self.clusters:
            out.append({
                "members": sorted(c.members),
                "depth": None if c.depth is None else str(c.depth),
                "relative_depth": (None if c.relative_depth is None
                                   else str(c.relative_depth)),
            })
        return {"degree": self.degree, "clusters": out}

    def structure(self):
        """Canonical nested form: shape + depths, root labels forgotten."""
        def rec(idx):
            c = self.clusters[idx]
            if not c.is_proper():
                return ("S",)
            kids = sorted((rec(k) for k in c.children), key=_struct_key)
            d = c.depth if idx == self.top_index else c.relative_depth
            return ("C", mpq(d), tuple(kids))
        return rec(self.top_index)


def _struct_key(node):
    if node == ("S",):
        return (1, 0, 0, "")
    _, d, kids = node
    return (0, -sum(_leafcount(k) for k in kids), d, repr(node))


def _leafcount(node):
    if node == ("S",):
        return 1
    return sum(_leafcount(k) for k in node[2])


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

def _affine_values(roots):
    for r in roots:
        if r.is_infinity():
            raise DomainError(E_INFINITE_ROOT)
    xs = [r.affine() for r in roots]
    if xs and isinstance(xs[0], ValuedElement):
        xs, _ = rescale_common(xs)
    return xs


def build_cluster_picture(roots):
    """Build the cluster picture of a list of pairwise distinct finite roots.

    Single-linkage merging over the pairwise valuation matrix: for each
    threshold (a finite pairwise valuation, largest first) the classes of
    the relation v(r - r') >= theta are clusters.  d is tiny, so the
    O(#thresholds * d^2) sweep is plainly fast enough.
    """
    xs = _affine_values(roots)
    d = len(xs)
    if d < 2:
        raise DomainError("invalid input", "need at least two roots")
    val = [[INF] * d for _ in range(d)]
    for i in range(d):
        for j in range(i + 1, d):
            diff = xs[i].sub(xs[j])
            if diff.is_zero():
                raise DomainError(E_NOT_SQUAREFREE,
                                  f"roots {i} and {j} coincide")
            v = diff.valuation()
            val[i][j] = val[j][i] = v

    thresholds = sorted({val[i][j] for i in range(d) for j in range(i + 1, d)},
                        reverse=True)
    families = {frozenset([i]) for i in range(d)}
    families.add(frozenset(range(d)))
    for theta in thresholds:
        # union-find over pairs at valuation >= theta
        parent = list(range(d))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for i in range(d):
            for j in range(i + 1, d):
                if val[i][j] >= theta:
                    ra, rb = find(i), find(j)
                    if ra != rb:
                        parent[ra] = rb
        groups = {}
        for i in range(d):
            groups.setdefault(find(i), []).append(i)
        for g in groups.values():
            families.add(frozenset(g))

    clusters = [Cluster(m) for m in sorted(families, key=lambda s: (-len(s), sorted(s)))]
    for c in clusters:
        if c.is_proper():
            c.depth = min(val[i][j] for i in c.members for j in c.members if i < j)

    # parent = smallest strictly containing member of the family
    for k, c in enumerate(clusters):
        best = None
        for k2, c2 in enumerate(clusters):
            if c.members < c2.members:
                if best is None or c2.size < clusters[best].size:
                    best = k2
        c.parent = best
    for k, c in enumerate(clusters):
        c.children = tuple(k2 for k2, c2 in enumerate(clusters) if c2.parent == k)
    top_index = next(k for k, c in enumerate(clusters) if c.size == d)
    for c in clusters:
        if c.is_proper() and c.parent is not None:
            c.relative_depth = c.depth - clusters[c.parent].depth
    return ClusterPicture(list(roots), clusters, top_index, val)


# ---------------------------------------------------------------------------
# Distances and the discriminant valuation
# ---------------------------------------------------------------------------

def cluster_distance(cp, s, r):
    """delta(s, r): 0 on the diagonal, depth differences along nesting,
    and d_s + d_r - 2 d_lca across branches.  Proper clusters only."""
    if not s.is_proper() or not r.is_proper():
        raise DomainError(E_SINGLETON)
    if s.members == r.members:
        return mpq(0)
    if s.members < r.members:
        return mpq(s.depth - r.depth)
    if r.members < s.members:
        return mpq(r.depth - s.depth)
    lca = cp.smallest_containing(s.members | r.members)
    return mpq(s.depth + r.depth - 2 * lca.depth)


def disc_valuation(roots, leading, g):
    """(4g+2) * v(leading) + 2 * sum over pairs of v(r - r').

    The 16^g factor of the curve discriminant is a unit in odd residue
    characteristic and contributes nothing.
    """
    xs = _affine_values(roots)
    total = mpq(4 * g + 2) * mpq(leading.valuation()) if not leading.is_zero() else None
    if total is None:
        raise DomainError("invalid input", "zero leading coefficient")
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            diff = xs[i].sub(xs[j])
            if diff.is_zero():
                raise DomainError(E_NOT_SQUAREFREE)
            total += 2 * mpq(diff.valuation())
    return total


# ---------------------------------------------------------------------------
# ASCII rendering: nested parentheses with relative-depth subscripts
# ---------------------------------------------------------------------------

def _fmt_q(q):
    q = mpq(q)
    return str(q)


def render_ascii(cp):
    """Deterministic one-line rendering.

    Proper clusters become "(children)_reldepth" with singletons as filled
    dots; the top cluster is written as its children followed by
    " ; top <depth>" unless it has no proper subcluster, in which case the
    whole picture is a single "(●...●)_depth" group.
    """
    def inner(idx):
        c = cp.clusters[idx]
        propers = sorted((rec(k) for k in c.children
                          if cp.clusters[k].is_proper()), key=_render_key)
        n_single = sum(1 for k in c.children if not cp.clusters[k].is_proper())
        parts = propers + (["●" * n_single] if n_single else [])
        return " ".join(parts)

    def rec(idx):
        c = cp.clusters[idx]
        if not c.is_proper():
            return "●"
        return "(" + inner(idx) + ")_" + _fmt_q(c.relative_depth)

    top = cp.top
    if all(not cp.clusters[k].is_proper() for k in top.children):
        return "(" + "●" * top.size + ")_" + _fmt_q(top.depth)
    return inner(cp.top_index) + " ; top " + _fmt_q(top.depth)


def _render_key(s):
    # larger groups first, then by the rendered text (depth subscripts order)
    return (-s.count("●"), s)


def parse_ascii(text):
    """Parse a rendering back to canonical nested structure.

    Returns the same form as :meth:`ClusterPicture.structure`, enabling the
    round-trip law parse(render(cp)) == cp.structure().
    """
    text = text.strip()
    top_depth = None
    if ";" in text:
        body, _, tail = text.partition(";")
        tail = tail.strip()
        if not tail.startswith("top"):
            raise DomainError("invalid input", "expected '; top <depth>'")
        top_depth = mpq(tail[3:].strip())
        text = body.strip()

    pos = 0

    def parse_group():
        nonlocal pos
        if text[pos] == "●":
            pos += 1
            return ("S",)
        if text[pos] != "(":
            raise DomainError("invalid input", f"unexpected char {text[pos]!r}")
        pos += 1
        kids = []
        while True:
            while pos < len(text) and text[pos] == " ":
                pos += 1
            if pos >= len(text):
                raise DomainError("invalid input", "unbalanced parentheses")
            if text[pos] == ")":
                pos += 1
                break
            kids.append(parse_group())
        if pos >= len(text) or text[pos] != "_":
            raise DomainError("invalid input", "missing depth subscript")
        pos += 1
        start = pos
        while pos < len(text) and (text[pos].isdigit() or text[pos] in "-/"):
            pos += 1
        depth = mpq(text[start:pos])
        return ("C", depth, tuple(sorted(kids, key=_struct_key)))

    groups = []
    while pos < len(text):
        while pos < len(text) and text[pos] == " ":
            pos += 1
        if pos < len(text):
            groups.append(parse_group())

    if top_depth is None:
        if len(groups) != 1:
            raise DomainError("invalid input", "expected a single top group")
        return groups[0]
    return ("C", top_depth, tuple(sorted(groups, key=_struct_key)))
