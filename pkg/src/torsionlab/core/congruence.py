"""Congruence closure on finite table algebras.

Used by the cokernel providers of the monoid-like families: the smallest
equivalence containing a set of seed pairs and compatible with every
operation table is computed by union-find with merge propagation.
"""

from __future__ import annotations

from itertools import product


class UnionFind:
    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


def congruence_closure(size, ops, pairs):
    """Partition of ``range(size)`` by the congruence generated by ``pairs``.

    ``ops`` is a list of (arity, table) with table a nested tuple; for each
    merged pair the closure substitutes both sides into every argument slot
    of every operation.  Returns the list of blocks sorted by least element.
    """
    uf = UnionFind(size)
    queue = [p for p in pairs if uf.union(*p)]
    while queue:
        a, b = queue.pop()
        for arity, table in ops:
            if arity == 1:
                if uf.find(table[a]) != uf.find(table[b]):
                    queue.append((table[a], table[b]))
                    uf.union(table[a], table[b])
            elif arity == 2:
                for c in range(size):
                    for lhs, rhs in ((table[a][c], table[b][c]),
                                     (table[c][a], table[c][b])):
                        if uf.find(lhs) != uf.find(rhs):
                            queue.append((lhs, rhs))
                            uf.union(lhs, rhs)
            else:
                # positions of the merged argument within full tuples
                for pos in range(arity):
                    for rest in product(range(size), repeat=arity - 1):
                        args_a = rest[:pos] + (a,) + rest[pos:]
                        args_b = rest[:pos] + (b,) + rest[pos:]
                        va, vb = _lookup(table, args_a), _lookup(table, args_b)
                        if uf.find(va) != uf.find(vb):
                            queue.append((va, vb))
                            uf.union(va, vb)
    blocks = {}
    for x in range(size):
        blocks.setdefault(uf.find(x), []).append(x)
    return sorted(blocks.values())


def _lookup(table, args):
    value = table
    for a in args:
        value = value[a]
    return value


def quotient_map(size, blocks):
    """Index map carrier -> block index, blocks sorted by least element."""
    cls = [0] * size
    for i, block in enumerate(blocks):
        for x in block:
            cls[x] = i
    return tuple(cls)


def quotient_table(table, arity, cls, blocks):
    """Induced operation table on the blocks; asserts well-definedness."""
    reps = [b[0] for b in blocks]
    if arity == 1:
        out = tuple(cls[table[r]] for r in reps)
        for i, block in enumerate(blocks):
            for x in block:
                assert cls[table[x]] == out[i], "relation is not a congruence"
        return out
    if arity == 2:
        out = tuple(tuple(cls[table[r][s]] for s in reps) for r in reps)
        for i, bi in enumerate(blocks):
            for j, bj in enumerate(blocks):
                for x in bi:
                    for y in bj:
                        assert cls[table[x][y]] == out[i][j], \
                            "relation is not a congruence"
        return out
    raise NotImplementedError("arity > 2 quotients are not needed here")
