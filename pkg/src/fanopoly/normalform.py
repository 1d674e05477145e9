"""Canonical form deciding unimodular equivalence of lattice polytopes.

The key is built in two stages.  First the facet-vertex pairing matrix is
maximized lexicographically (row-major) over independent row and column
permutations, which pins the admissible vertex orders purely in terms of
the face structure.  Second, for each maximizing vertex order the vertex
matrix is put into Hermite normal form (quotienting out the coordinate
choice), and the lexicographically largest result is the canonical matrix.

Two polytopes have equal canonical matrices iff they are unimodularly
equivalent: equality exhibits an explicit unimodular map, and any lattice
automorphism permutes facets and vertices, so both stages are invariant.

The permutation search branches only on value ties.  Tied rows that do not
refine the current column blocks commute with everything at their level,
so they are placed as one group; branches that a previously discovered
lattice automorphism maps to an explored sibling are pruned, and vertex
orders related by such an automorphism share their Hermite form, so only
one representative per orbit is ever reduced.  Internally the search works
with negated values (minimization), because row profiles only shrink as
blocks refine, which lets stale heap keys serve as upper bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from heapq import heapify, heappop, heappush, heapreplace

from .errors import ConsistencyError
from .linalg import adjugate_det, det, hnf_matrix, mat_vec, rank, vec_dot


@dataclass(frozen=True)
class NormalForm:
    """Canonical d x n vertex matrix plus the witnessing orders."""

    matrix: tuple[tuple[int, ...], ...]
    vertex_order: tuple[int, ...]
    facet_order: tuple[int, ...]


def pairing_matrix(p) -> tuple[tuple[int, ...], ...]:
    """Facet-vertex pairing rows <a_F, v>, facets in stored order."""
    verts = p.vertices
    return tuple(
        tuple(vec_dot(f.normal, v) for v in verts) for f in p.facets
    )


def normal_form(p) -> NormalForm:
    search = _CanonicalSearch(pairing_matrix(p), p.vertices, p.dim)
    search.run()
    best = None
    best_order = None
    best_rows = None
    for order, row_order in zip(search.best_orders, search.best_row_orders):
        mat = tuple(
            tuple(p.vertices[c][i] for c in order) for i in range(p.dim)
        )
        h = hnf_matrix(mat)
        if best is None or h > best:
            best, best_order, best_rows = h, order, row_order
    if best is None:
        raise ConsistencyError("canonical search produced no vertex order")
    return NormalForm(best, best_order, best_rows)


def is_isomorphic(p, q) -> bool:
    """Unimodular equivalence test via canonical-form equality."""
    if p.dim != q.dim or len(p.vertices) != len(q.vertices):
        return False
    if len(p.facets) != len(q.facets):
        return False
    return normal_form(p).matrix == normal_form(q).matrix


def dedupe(polytopes):
    """One representative per isomorphism class, first occurrences kept."""
    out = []
    seen = set()
    for p in polytopes:
        key = normal_form(p).matrix
        if key not in seen:
            seen.add(key)
            out.append(p)
    return out


class _CanonicalSearch:
    """Branch-and-bound minimization of the negated pairing matrix."""

    def __init__(self, rows, verts, d):
        self.rows = rows
        self.negrows = [tuple(-x for x in row) for row in rows]
        self.m = len(rows)
        self.n = len(rows[0]) if rows else 0
        self.verts = verts
        self.d = d
        self.rowindex = {row: i for i, row in enumerate(rows)}
        if len(self.rowindex) != self.m:
            raise ConsistencyError("pairing matrix has repeated rows")
        self.best_key = None  # negated flat matrix, smaller is better
        self.best_orders: list[tuple[int, ...]] = []
        self.best_row_orders: list[tuple[int, ...]] = []
        self.autos: list[tuple[int, ...]] = []
        self.colmaps: list[tuple[int, ...]] = []
        self._ref_cache: dict[tuple[int, ...], tuple] = {}
        self._bid = 0

    def run(self):
        if self.n == 0:
            raise ConsistencyError("empty pairing matrix")
        heap = []
        for r, negrow in enumerate(self.negrows):
            heap.append((tuple(sorted(negrow)), r, 0))
        heapify(heap)
        blocks = (tuple(range(self.n)),)
        self._dfs(None, (), frozenset(), heap, blocks, 0, self.n == 1, (), (), 0)

    # chain: linked list of placed row groups (tuples, matrix order);
    # groups: frozensets of rows whose internal order is irrelevant, used by
    # the stabilizer checks; stab: automorphisms preserving every placed
    # group; heap entries: (negated profile, row, blocks id); entries whose
    # blocks id is stale are upper bounds since profiles shrink on refining.
    def _dfs(self, chain, groups, placed_set, heap, blocks, bid, discrete, prefix, stab, nauto):
        rows = self.rows
        negrows = self.negrows
        best_key = self.best_key
        while True:
            if best_key is not None and prefix > best_key[: len(prefix)]:
                return
            if discrete:
                self._leaf(chain, placed_set, blocks, prefix)
                return
            profile = None
            ties = []
            while heap:
                negb, r, ebid = heap[0]
                if r in placed_set:
                    heappop(heap)
                    continue
                if profile is not None and negb > profile:
                    break
                if ebid != bid:
                    negp = _neg_profile(negrows[r], blocks)
                    if negp > negb:
                        heapreplace(heap, (negp, r, bid))
                        continue
                    negb = negp
                if profile is None:
                    profile = negb
                    ties.append(r)
                    heappop(heap)
                elif negb == profile:
                    ties.append(r)
                    heappop(heap)
                else:
                    break
            if profile is None:
                raise ConsistencyError("identical vertices survived into the search")
            for r in ties:
                heappush(heap, (profile, r, bid))
            nonref = []
            ref = []
            for r in ties:
                if _splits_blocks(rows[r], blocks):
                    ref.append(r)
                else:
                    nonref.append(r)
            if nonref:
                group = tuple(sorted(nonref))
                gset = frozenset(group)
                chain = (chain, group)
                groups = groups + (gset,)
                placed_set = placed_set | gset
                prefix = prefix + profile * len(group)
                stab = tuple(
                    g for g in stab if all(g[i] in gset for i in group)
                )
                if not ref:
                    continue
            if len(self.autos) > nauto:
                fresh = [
                    g
                    for g in self.autos[nauto:]
                    if all(all(g[i] in gr for i in gr) for gr in groups)
                ]
                if fresh:
                    stab = stab + tuple(fresh)
                nauto = len(self.autos)
            expanded: set[int] = set()
            child_prefix = prefix + profile
            for r in ref:
                if len(self.autos) > nauto:
                    fresh = [
                        g
                        for g in self.autos[nauto:]
                        if all(all(g[i] in gr for i in gr) for gr in groups)
                    ]
                    if fresh:
                        stab = stab + tuple(fresh)
                    nauto = len(self.autos)
                if any(g[r] in expanded for g in stab):
                    continue
                expanded.add(r)
                child_stab = tuple(g for g in stab if g[r] == r)
                new_blocks, child_discrete = _refine(blocks, rows[r])
                self._bid += 1
                self._dfs(
                    ((chain, (r,))),
                    groups + (frozenset((r,)),),
                    placed_set | {r},
                    list(heap),
                    new_blocks,
                    self._bid,
                    child_discrete,
                    child_prefix,
                    child_stab,
                    nauto,
                )
                best_key = self.best_key
            return

    def _leaf(self, chain, placed_set, blocks, prefix):
        order = tuple(b[0] for b in blocks)
        rows = self.rows
        items = []
        for i in range(self.m):
            if i in placed_set:
                continue
            row = rows[i]
            items.append((tuple([-row[c] for c in order]), i))
        items.sort()
        flat = list(prefix)
        for t, _ in items:
            flat.extend(t)
        key = tuple(flat)
        if self.best_key is None or key < self.best_key:
            self.best_key = key
            self.best_orders = [order]
            self.best_row_orders = [
                _chain_rows(chain) + tuple(i for _, i in items)
            ]
            return
        if key != self.best_key:
            return
        # a known automorphism explaining this order means its Hermite form
        # is already covered
        for ref in self.best_orders:
            for gamma in self.colmaps:
                if all(gamma[ref[j]] == order[j] for j in range(self.n)):
                    return
        for ref in self.best_orders:
            got = self._detect_auto(ref, order)
            if got is not None:
                self._register_auto(*got)
                return
        self.best_orders.append(order)
        self.best_row_orders.append(_chain_rows(chain) + tuple(i for _, i in items))

    def _register_auto(self, rowmap, colmap):
        if rowmap in self.autos:
            return
        self.autos.append(rowmap)
        self.colmaps.append(colmap)
        inv = [0] * self.m
        for i, j in enumerate(rowmap):
            inv[j] = i
        inv = tuple(inv)
        if inv not in self.autos:
            cinv = [0] * self.n
            for i, j in enumerate(colmap):
                cinv[j] = i
            self.autos.append(inv)
            self.colmaps.append(tuple(cinv))

    def _basis_positions(self, order):
        """Greedy positions whose vertices are linearly independent."""
        picked = []
        chosen = []
        for j, c in enumerate(order):
            trial = chosen + [self.verts[c]]
            if rank(tuple(trial)) == len(trial):
                chosen = trial
                picked.append(j)
                if len(picked) == self.d:
                    return picked
        raise ConsistencyError("vertex matrix is rank-deficient")

    def _detect_auto(self, ref, new):
        """Return the facet-row permutation if ref -> new is a lattice map."""
        data = self._ref_cache.get(ref)
        if data is None:
            positions = self._basis_positions(ref)
            w0 = tuple(
                tuple(self.verts[ref[j]][i] for j in positions)
                for i in range(self.d)
            )
            adj, d0 = adjugate_det(w0)
            data = (positions, adj, d0)
            self._ref_cache[ref] = data
        positions, adj, d0 = data
        d = self.d
        w1 = tuple(
            tuple(self.verts[new[j]][i] for j in positions) for i in range(d)
        )
        t = []
        for i in range(d):
            trow = []
            for k in range(d):
                num = sum(w1[i][l] * adj[l][k] for l in range(d))
                if num % d0:
                    return None
                trow.append(num // d0)
            t.append(tuple(trow))
        t = tuple(t)
        if abs(det(t)) != 1:
            return None
        for j in range(self.n):
            if mat_vec(t, self.verts[ref[j]]) != self.verts[new[j]]:
                return None
        gamma = [0] * self.n
        ginv = [0] * self.n
        for j in range(self.n):
            gamma[ref[j]] = new[j]
            ginv[new[j]] = ref[j]
        rowmap = []
        lookup = self.rowindex
        for row in self.rows:
            idx = lookup.get(tuple([row[ginv[c]] for c in range(self.n)]))
            if idx is None:
                return None
            rowmap.append(idx)
        return tuple(rowmap), tuple(gamma)


def _chain_rows(chain):
    groups = []
    node = chain
    while node is not None:
        node, group = node
        groups.append(group)
    out = []
    for group in reversed(groups):
        out.extend(group)
    return tuple(out)


def _neg_profile(negrow, blocks):
    """Negated best arrangement of the row's values under the blocks."""
    prof: list[int] = []
    append = prof.append
    extend = prof.extend
    for b in blocks:
        if len(b) == 1:
            append(negrow[b[0]])
        else:
            seg = [negrow[c] for c in b]
            seg.sort()
            extend(seg)
    return tuple(prof)


def _splits_blocks(row, blocks):
    for b in blocks:
        if len(b) > 1:
            v0 = row[b[0]]
            for c in b[1:]:
                if row[c] != v0:
                    return True
    return False


def _refine(blocks, row):
    """Refine blocks by a row's values; returns (blocks, all singletons)."""
    nb = []
    discrete = True
    for b in blocks:
        if len(b) == 1:
            nb.append(b)
            continue
        groups: dict[int, list[int]] = {}
        for c in b:
            groups.setdefault(row[c], []).append(c)
        if len(groups) == 1:
            nb.append(b)
            discrete = False
            continue
        for val in sorted(groups, reverse=True):
            part = tuple(groups[val])
            nb.append(part)
            if len(part) > 1:
                discrete = False
    return tuple(nb), discrete
