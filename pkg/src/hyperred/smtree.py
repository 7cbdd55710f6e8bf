"""Stable model trees, BY trees, and dual graphs of special fibres.

The stable model tree of an even-degree hyperelliptic curve has one vertex
per proper cluster (with the top vertex removed when the top cluster splits
into exactly two children) and carries the singletons as labelled leaves
whose edges have no length.  A BY tree is the coloured companion object:
blue/yellow vertices with genera, blue/yellow edges with lengths.  The two
determine each other, and either determines the dual graph of the special
fibre of the relevant model.
"""

from __future__ import annotations

from gmpy2 import mpq

from .errors import DomainError, E_BAD_INPUT, E_NOT_SEMISTABLE, E_ODD_DEGREE

BLUE = "blue"
YELLOW = "yellow"


class StableModelTree:
    """Weighted tree on proper vertices plus labelled lengthless singletons.

    ``singletons[v]`` is the sorted tuple of root labels (1-based) attached
    to proper vertex ``v``; ``edges`` is a tuple of ``(u, v, length)`` with
    positive rational lengths.  The proper part must be a tree.
    """

    __slots__ = ("singletons", "edges")

    def __init__(self, singletons, edges):
        singletons = tuple(tuple(sorted(s)) for s in singletons)
        norm = []
        for (u, v, ln) in edges:
            ln = mpq(ln)
            if ln <= 0:
                raise DomainError(E_BAD_INPUT, detail="edge length must be positive")
            norm.append((min(u, v), max(u, v), ln))
        edges = tuple(norm)
        n = len(singletons)
        if n < 1:
            raise DomainError(E_BAD_INPUT, detail="no proper vertices")
        if len(edges) != n - 1:
            raise DomainError(E_BAD_INPUT, detail="proper part is not a tree")
        seen = set()
        stack = [0]
        adj = {v: [] for v in range(n)}
        for (u, v, _) in edges:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise DomainError(E_BAD_INPUT, detail="bad edge endpoints")
            adj[u].append(v)
            adj[v].append(u)
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(adj[v])
        if len(seen) != n:
            raise DomainError(E_BAD_INPUT, detail="proper part is not connected")
        labels = [s for grp in singletons for s in grp]
        d = len(labels)
        if sorted(labels) != list(range(1, d + 1)):
            raise DomainError(E_BAD_INPUT, detail="singleton labels must be 1..d")
        if d < 4 or d % 2 == 1:
            raise DomainError(E_BAD_INPUT, detail="need an even number >= 4 of singletons")
        self.singletons = singletons
        self.edges = edges

    @property
    def n(self):
        return len(self.singletons)

    @property
    def degree(self):
        return sum(len(s) for s in self.singletons)

    @property
    def genus(self):
        return (self.degree - 2) // 2

    def singleton_count(self, v):
        return len(self.singletons[v])

    def vertex_of_label(self, label):
        for v, grp in enumerate(self.singletons):
            if label in grp:
                return v
        raise DomainError(E_BAD_INPUT, detail=f"no singleton labelled {label}")

    def adjacency(self):
        adj = {v: [] for v in range(self.n)}
        for idx, (u, v, ln) in enumerate(self.edges):
            adj[u].append((v, idx, ln))
            adj[v].append((u, idx, ln))
        return adj

    def __repr__(self):
        parts = [f"v{v}({len(s)})" for v, s in enumerate(self.singletons)]
        es = [f"{u}-{v}:{ln}" for (u, v, ln) in self.edges]
        return f"StableModelTree([{' '.join(parts)}], [{', '.join(es)}])"


class BYTree:
    """Coloured weighted tree: vertices carry (colour, genus), edges carry
    (colour, length).  Yellow vertices have genus 0 and only yellow edges;
    blue edges join blue vertices."""

    __slots__ = ("vertices", "edges")

    def __init__(self, vertices, edges):
        vertices = tuple((c, int(g)) for (c, g) in vertices)
        norm = []
        for (u, v, c, ln) in edges:
            ln = mpq(ln)
            if ln <= 0:
                raise DomainError(E_BAD_INPUT, detail="edge length must be positive")
            norm.append((min(u, v), max(u, v), c, ln))
        edges = tuple(norm)
        n = len(vertices)
        if n < 1:
            raise DomainError(E_BAD_INPUT, detail="empty tree")
        if len(edges) != n - 1:
            raise DomainError(E_BAD_INPUT, detail="not a tree")
        adj = {v: [] for v in range(n)}
        for (u, v, c, _) in edges:
            adj[u].append(v)
            adj[v].append(u)
        seen, stack = set(), [0]
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(adj[v])
        if len(seen) != n:
            raise DomainError(E_BAD_INPUT, detail="not connected")
        for (c, g) in vertices:
            if c not in (BLUE, YELLOW):
                raise DomainError(E_BAD_INPUT, detail=f"bad vertex colour {c!r}")
            if g < 0:
                raise DomainError(E_BAD_INPUT, detail="negative genus")
            if c == YELLOW and g != 0:
                raise DomainError(E_BAD_INPUT, detail="inconsistent color/genus data")
        for (u, v, c, _) in edges:
            if c not in (BLUE, YELLOW):
                raise DomainError(E_BAD_INPUT, detail=f"bad edge colour {c!r}")
            if c == BLUE and (vertices[u][0] == YELLOW or vertices[v][0] == YELLOW):
                # an odd cluster has a blue parent edge, and uebereven
                # vertices only ever touch even clusters
                raise DomainError(E_BAD_INPUT, detail="inconsistent color/genus data")
        self.vertices = vertices
        self.edges = edges

    @property
    def n(self):
        return len(self.vertices)

    def colour(self, v):
        return self.vertices[v][0]

    def genus(self, v):
        return self.vertices[v][1]

    def adjacency(self):
        adj = {v: [] for v in range(self.n)}
        for idx, (u, v, c, ln) in enumerate(self.edges):
            adj[u].append((v, idx, c, ln))
            adj[v].append((u, idx, c, ln))
        return adj

    def __repr__(self):
        vs = [f"{c[0]}{g}" for (c, g) in self.vertices]
        es = [f"{u}-{v}:{c[0]}{ln}" for (u, v, c, ln) in self.edges]
        return f"BYTree([{' '.join(vs)}], [{', '.join(es)}])"


class DualGraph:
    """Dual graph of a special fibre: genus-labelled vertices and an edge
    multiset (self-loops allowed)."""

    __slots__ = ("genera", "edges")

    def __init__(self, genera, edges):
        self.genera = tuple(int(g) for g in genera)
        self.edges = tuple((min(u, v), max(u, v)) for (u, v) in edges)
        n = len(self.genera)
        adj = {v: set() for v in range(n)}
        for (u, v) in self.edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(E_BAD_INPUT, detail="bad edge endpoints")
            adj[u].add(v)
            adj[v].add(u)
        seen, stack = set(), [0] if n else []
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(adj[v])
        if len(seen) != n:
            raise DomainError(E_BAD_INPUT, detail="dual graph must be connected")

    @property
    def n(self):
        return len(self.genera)

    @property
    def b1(self):
        return len(self.edges) - self.n + 1

    def total_genus(self):
        return self.b1 + sum(self.genera)

    def __repr__(self):
        return f"DualGraph(genera={list(self.genera)}, edges={list(self.edges)})"


# -- construction from cluster pictures ---------------------------------


def stable_model_tree(cp):
    """Stable model tree of a cluster picture on an even number of roots.

    Proper clusters become vertices, singleton children become labelled
    leaves, edge lengths are relative depths.  If the top cluster is the
    disjoint union of exactly two children the top vertex is removed: two
    proper children get a single edge whose length is the sum of their
    relative depths; a singleton child just moves to the proper child.
    """
    d = cp.degree
    if d % 2 == 1:
        raise DomainError(E_ODD_DEGREE)
    if d < 4:
        raise DomainError(E_BAD_INPUT, detail="need at least four roots")
    clusters = cp.clusters
    top = cp.top_index

    drop_top = len(clusters[top].children) == 2
    vid = {}
    for k, c in enumerate(clusters):
        if c.is_proper() and not (drop_top and k == top):
            vid[k] = len(vid)

    singles = [[] for _ in vid]
    edges = []
    for k, c in enumerate(clusters):
        if k == top:
            continue
        par = c.parent
        if c.size == 1:
            label = next(iter(c.members)) + 1
            if drop_top and par == top:
                # the other child of the top absorbs the loose root
                sibling = [j for j in clusters[top].children if j != k][0]
                singles[vid[sibling]].append(label)
            else:
                singles[vid[par]].append(label)
        else:
            if drop_top and par == top:
                continue
            edges.append((vid[k], vid[par], c.relative_depth))
    if drop_top:
        kids = list(clusters[top].children)
        if all(clusters[j].is_proper() for j in kids):
            a, b = kids
            ln = clusters[a].relative_depth + clusters[b].relative_depth
            edges.append((vid[a], vid[b], ln))
    return StableModelTree(singles, edges)


# -- tree <-> BY conversions --------------------------------------------


def _rooted(adj, root, n):
    """BFS orientation: (order, parent, parent_edge) arrays."""
    parent = [None] * n
    pedge = [None] * n
    order = [root]
    seen = {root}
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for entry in adj[v]:
            w = entry[0]
            if w not in seen:
                seen.add(w)
                parent[w] = v
                pedge[w] = entry
                order.append(w)
    return order, parent, pedge


def by_from_smtree(t, root=None):
    """BY tree of a stable model tree, by rooting at a proper vertex.

    Subtree singleton totals give sizes; a vertex is yellow when it is even
    with every child even (no attached singletons, all child subtrees
    even); the genus comes from the odd-children count being 2g+1 or 2g+2;
    an edge is yellow with doubled length when the vertex it points to is
    even.  The result does not depend on the chosen root.
    """
    root = 0 if root is None else root
    n = t.n
    adj = t.adjacency()
    order, parent, pedge = _rooted(adj, root, n)

    size = [0] * n
    for v in reversed(order):
        size[v] = t.singleton_count(v)
        for (w, _, _) in adj[v]:
            if parent[w] == v:
                size[v] += size[w]

    verts = []
    for v in range(n):
        odd = t.singleton_count(v)
        child_sizes_even = True
        for (w, _, _) in adj[v]:
            if parent[w] == v:
                if size[w] % 2 == 1:
                    odd += 1
                    child_sizes_even = False
        uber = size[v] % 2 == 0 and t.singleton_count(v) == 0 and child_sizes_even
        genus = 0 if odd == 0 else (odd - 1) // 2
        verts.append((YELLOW if uber else BLUE, genus))

    edges = []
    for v in range(n):
        if parent[v] is None:
            continue
        _, _, ln = pedge[v]
        if size[v] % 2 == 0:
            edges.append((parent[v], v, YELLOW, 2 * ln))
        else:
            edges.append((parent[v], v, BLUE, ln))
    return BYTree(verts, edges)


def smtree_from_by(b, root=None):
    """Stable model tree of a BY tree, by rooting anywhere.

    With k_v the number of blue edges directed away from v, a blue vertex
    gets 2g(v)+2-k_v singletons at the root or below a yellow edge and
    2g(v)+1-k_v below a blue edge.  Yellow vertices get none: they have no
    odd children at all, so the odd-children count 2g+1/2g+2 bookkeeping
    that produces those formulas never applies to them.  Blue lengths are
    kept, yellow lengths halved.
    """
    root = 0 if root is None else root
    n = b.n
    adj = b.adjacency()
    order, parent, pedge = _rooted(adj, root, n)

    counts = []
    for v in range(n):
        if b.colour(v) == YELLOW:
            counts.append(0)
            continue
        k = 0
        for (w, _, c, _) in adj[v]:
            if parent[w] == v and c == BLUE:
                k += 1
        g = b.genus(v)
        if parent[v] is None:
            cnt = 2 * g + 2 - k
        elif pedge[v][2] == BLUE:
            cnt = 2 * g + 1 - k
        else:
            cnt = 2 * g + 2 - k
        if cnt < 0:
            raise DomainError(E_BAD_INPUT, detail="inconsistent color/genus data")
        counts.append(cnt)

    label = 1
    singles = []
    for v in range(n):
        singles.append(tuple(range(label, label + counts[v])))
        label += counts[v]
    edges = []
    for (u, v, c, ln) in b.edges:
        edges.append((u, v, ln if c == BLUE else ln / 2))
    return StableModelTree(singles, edges)


def is_potentially_good(obj):
    """Good reduction over some extension: a single proper cluster apart
    from at most one loose root, equivalently a star tree, equivalently a
    one-vertex BY tree."""
    if isinstance(obj, StableModelTree):
        return obj.n == 1
    if isinstance(obj, BYTree):
        return obj.n == 1
    d = obj.degree
    bound = d - 1  # 2g+1
    return all(c.size >= bound for c in obj.proper_clusters() if c.size < d)


# -- distances -----------------------------------------------------------


def tree_distance(t, v, w):
    """Sum of edge lengths on the path between proper vertices v and w."""
    if v == w:
        return mpq(0)
    adj = t.adjacency()
    order, parent, pedge = _rooted(adj, v, t.n)
    total = mpq(0)
    cur = w
    while cur != v:
        total += pedge[cur][2]
        cur = parent[cur]
    return total


def _path(t, a, b):
    """Vertex list and edge-index set of the path between proper vertices."""
    adj = t.adjacency()
    order, parent, pedge = _rooted(adj, a, t.n)
    verts = [b]
    eids = set()
    cur = b
    while cur != a:
        eids.add(pedge[cur][1])
        cur = parent[cur]
        verts.append(cur)
    return verts, eids


def path_relation(t, pair1, pair2):
    """Relation between the singleton-to-singleton paths C_ij and C_kl.

    Returns ("disjoint", distance), ("touch", 0) when the paths meet only
    in vertices, or ("shared", total shared length) when they run along
    common edges.  All four labels must be distinct.
    """
    i, j = pair1
    k, l = pair2
    if len({i, j, k, l}) != 4:
        raise DomainError(E_BAD_INPUT, detail="pairs must use four distinct singletons")
    a1, a2 = t.vertex_of_label(i), t.vertex_of_label(j)
    b1, b2 = t.vertex_of_label(k), t.vertex_of_label(l)
    v1, e1 = _path(t, a1, a2)
    v2, e2 = _path(t, b1, b2)
    common_e = e1 & e2
    if common_e:
        total = sum((t.edges[e][2] for e in common_e), mpq(0))
        return ("shared", total)
    if set(v1) & set(v2):
        return ("touch", mpq(0))
    best = None
    for x in v1:
        for y in v2:
            dxy = tree_distance(t, x, y)
            if best is None or dxy < best:
                best = dxy
    return ("disjoint", best)


def path_distance(t, pair1, pair2):
    """Distance between two singleton paths; 0 when they touch at a point,
    None when they share edges."""
    kind, value = path_relation(t, pair1, pair2)
    if kind == "shared":
        return None
    return value


def delta_K_sequence(t):
    """Levels (delta_n, K_n): the distinct proper-vertex distances in
    decreasing order, each with the number of unordered pairs-of-pairs of
    singletons whose paths realize it."""
    n = t.n
    if n < 2:
        return []
    dists = set()
    for v in range(n):
        for w in range(v + 1, n):
            dists.add(tree_distance(t, v, w))
    levels = sorted(dists, reverse=True)
    counts = {delta: 0 for delta in levels}

    labels = sorted(s for grp in t.singletons for s in grp)
    pairs = [(labels[i], labels[j]) for i in range(len(labels))
             for j in range(i + 1, len(labels))]
    for x in range(len(pairs)):
        for y in range(x + 1, len(pairs)):
            p, q = pairs[x], pairs[y]
            if set(p) & set(q):
                continue
            kind, value = path_relation(t, p, q)
            if kind == "disjoint":
                counts[value] += 1
    return [(delta, counts[delta]) for delta in levels]


# -- dual graphs ----------------------------------------------------------


def _doubled(b):
    """Doubling of a BY tree: one node per blue vertex, two per yellow;
    yellow edges in two copies (copy k between the k-th nodes, a blue
    endpoint serving both), blue edges once.  Lengths are halved.
    Returns (node genera, yellow-origin flags, edges (n1, n2, length))."""
    node_of = []
    genera = []
    from_yellow = []
    for v in range(b.n):
        if b.colour(v) == YELLOW:
            node_of.append((len(genera), len(genera) + 1))
            genera.extend([0, 0])
            from_yellow.extend([True, True])
        else:
            node_of.append((len(genera),))
            genera.append(b.genus(v))
            from_yellow.append(False)
    edges = []
    for (u, v, c, ln) in b.edges:
        half = mpq(ln) / 2
        if c == BLUE:
            edges.append((node_of[u][0], node_of[v][0], half))
        else:
            for k in (0, 1):
                nu = node_of[u][k] if len(node_of[u]) == 2 else node_of[u][0]
                nv = node_of[v][k] if len(node_of[v]) == 2 else node_of[v][0]
                edges.append((nu, nv, half))
    return genera, from_yellow, edges


def _chains(genera, from_yellow, edges):
    """Split the doubled graph into cores and maximal chains.

    A node is a core when it has positive genus, comes from a yellow
    vertex, or has degree != 2.  Chains run between cores through the
    remaining nodes; a chain may return to the core it started from, and a
    component with no core at all is a pure cycle.
    Returns (core ids, chains [(c1, c2, length)], cycles [length]).
    """
    nnodes = len(genera)
    incid = {v: [] for v in range(nnodes)}
    for eid, (u, v, ln) in enumerate(edges):
        incid[u].append((eid, v))
        incid[v].append((eid, u))
    cores = [v for v in range(nnodes)
             if genera[v] > 0 or from_yellow[v] or len(incid[v]) != 2]
    core_set = set(cores)
    used = set()
    chains = []
    for c in cores:
        for (eid, w) in incid[c]:
            if eid in used:
                continue
            used.add(eid)
            total = edges[eid][2]
            cur = w
            prev_eid = eid
            while cur not in core_set:
                (e1, w1), (e2, w2) = incid[cur]
                nxt = (e2, w2) if e1 == prev_eid else (e1, w1)
                used.add(nxt[0])
                total += edges[nxt[0]][2]
                prev_eid, cur = nxt[0], nxt[1]
            chains.append((c, cur, total))
    # each returning chain was found twice, once from each of its ends
    dedup = []
    seen_loop = {}
    for (a, bb, ln) in chains:
        if a == bb:
            key = (a, ln)
            seen_loop[key] = seen_loop.get(key, 0) + 1
        dedup.append((a, bb, ln))
    chains = []
    loop_budget = {k: v // 2 for k, v in seen_loop.items()}
    for (a, bb, ln) in dedup:
        if a == bb:
            if loop_budget[(a, ln)] > 0:
                loop_budget[(a, ln)] -= 1
                chains.append((a, bb, ln))
        else:
            chains.append((a, bb, ln))
    cycles = []
    for eid, (u, v, ln) in enumerate(edges):
        if eid in used:
            continue
        used.add(eid)
        total = ln
        prev_eid, cur = eid, v
        while cur != u:
            (e1, w1), (e2, w2) = incid[cur]
            nxt = (e2, w2) if e1 == prev_eid else (e1, w1)
            used.add(nxt[0])
            total += edges[nxt[0]][2]
            prev_eid, cur = nxt[0], nxt[1]
        cycles.append(total)
    return cores, chains, cycles


def dual_graph_potential_stable(t):
    """Dual graph of the special fibre of the potential stable model:
    the doubling of the BY tree with every chain collapsed to a single
    edge; a chain returning to its core keeps one interior vertex."""
    b = t if isinstance(t, BYTree) else by_from_smtree(t)
    if b.n == 1:
        return DualGraph([b.genus(0)], [])
    genera, from_yellow, edges = _doubled(b)
    cores, chains, cycles = _chains(genera, from_yellow, edges)
    out_id = {c: i for i, c in enumerate(cores)}
    out_gen = [genera[c] for c in cores]
    out_edges = []
    for (a, bb, _) in chains:
        if a == bb:
            x = len(out_gen)
            out_gen.append(0)
            out_edges.append((out_id[a], x))
            out_edges.append((out_id[a], x))
        else:
            out_edges.append((out_id[a], out_id[bb]))
    for _ in cycles:
        # no core at all only happens on one-cycle doublings; keep a bigon
        x, y = len(out_gen), len(out_gen) + 1
        out_gen.extend([0, 0])
        out_edges.append((x, y))
        out_edges.append((x, y))
    return DualGraph(out_gen, out_edges)


def dual_graph_min_regular(b):
    """Dual graph of the special fibre of the minimal regular model of a
    curve that is semistable over the base: the doubling of the BY tree
    with chains laid out as paths of unit edges.  Every chain total must
    be a positive integer."""
    if b.n == 1:
        return DualGraph([b.genus(0)], [])
    genera, from_yellow, edges = _doubled(b)
    cores, chains, cycles = _chains(genera, from_yellow, edges)
    out_id = {c: i for i, c in enumerate(cores)}
    out_gen = [genera[c] for c in cores]
    out_edges = []

    def as_int(ln):
        if ln.denominator != 1 or ln <= 0:
            raise DomainError(E_NOT_SEMISTABLE)
        return int(ln)

    for (a, bb, ln) in chains:
        L = as_int(ln)
        prev = out_id[a]
        for step in range(L - 1):
            x = len(out_gen)
            out_gen.append(0)
            out_edges.append((prev, x))
            prev = x
        out_edges.append((prev, out_id[bb]))
    for ln in cycles:
        L = as_int(ln)
        first = len(out_gen)
        out_gen.append(0)
        prev = first
        for step in range(L - 1):
            x = len(out_gen)
            out_gen.append(0)
            out_edges.append((prev, x))
            prev = x
        out_edges.append((prev, first))
    return DualGraph(out_gen, out_edges)


# -- canonical forms and isomorphism --------------------------------------


def _encode(n, adj, vkey, root):
    def rec(v, came_by):
        subs = []
        for entry in adj[v]:
            w, idx = entry[0], entry[1]
            if idx == came_by:
                continue
            subs.append((entry[2:], rec(w, idx)))
        subs.sort(key=repr)
        return (vkey(v), tuple(subs))

    return rec(root, None)


def smt_canonical(t):
    """Root-independent encoding: minimum over all roots of the rooted
    encoding with singleton counts as vertex keys and lengths as edge keys."""
    adj = {v: [(w, idx, ln) for (w, idx, ln) in entries]
           for v, entries in t.adjacency().items()}
    encs = [_encode(t.n, adj, t.singleton_count, r) for r in range(t.n)]
    return min(encs, key=repr)


def by_canonical(b):
    adj = {v: [(w, idx, c, ln) for (w, idx, c, ln) in entries]
           for v, entries in b.adjacency().items()}
    encs = [_encode(b.n, adj, lambda v: b.vertices[v], r) for r in range(b.n)]
    return min(encs, key=repr)


def smt_isomorphic(t1, t2):
    return smt_canonical(t1) == smt_canonical(t2)


def by_isomorphic(b1, b2):
    return by_canonical(b1) == by_canonical(b2)


# -- emission --------------------------------------------------------------


def _q(x):
    return str(mpq(x))


def smt_to_dot(t):
    lines = ["graph smtree {"]
    for v in range(t.n):
        lines.append(f'  v{v} [shape=circle label="{t.singleton_count(v)}"];')
    for (u, v, ln) in t.edges:
        lines.append(f'  v{u} -- v{v} [label="{_q(ln)}"];')
    for v, grp in enumerate(t.singletons):
        for s in grp:
            lines.append(f'  s{s} [shape=point label="s{s}"];')
            lines.append(f"  v{v} -- s{s} [style=dashed];")
    lines.append("}")
    return "\n".join(lines)


def by_to_dot(b):
    lines = ["graph bytree {"]
    for v in range(b.n):
        c, g = b.vertices[v]
        fill = "gold" if c == YELLOW else "lightblue"
        lines.append(f'  v{v} [shape=circle style=filled fillcolor={fill} label="{g}"];')
    for (u, v, c, ln) in b.edges:
        col = "gold" if c == YELLOW else "blue"
        lines.append(f'  v{u} -- v{v} [color={col} label="{_q(ln)}"];')
    lines.append("}")
    return "\n".join(lines)


def dual_to_dot(dg):
    lines = ["graph dual {"]
    for v in range(dg.n):
        lines.append(f'  v{v} [shape=circle label="{dg.genera[v]}"];')
    for (u, v) in dg.edges:
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines)


def smt_to_json(t):
    return {
        "singletons": [list(grp) for grp in t.singletons],
        "edges": [[u, v, _q(ln)] for (u, v, ln) in t.edges],
    }


def by_to_json(b):
    return {
        "vertices": [[c, g] for (c, g) in b.vertices],
        "edges": [[u, v, c, _q(ln)] for (u, v, c, ln) in b.edges],
    }


def dual_to_json(dg):
    return {
        "genera": list(dg.genera),
        "edges": [[u, v] for (u, v) in dg.edges],
        "b1": dg.b1,
    }
