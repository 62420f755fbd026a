"""Shared machinery for the commutative-monoid-like families.

Carriers are range(n); the binary operation is a nested tuple table and
the unit is stored explicitly.  Cokernels are quotients by a generated
congruence, pullbacks are element-wise fiber products, enumeration fills
tables by backtracking with incremental associativity pruning.
"""

from __future__ import annotations

from itertools import product

from ..core.congruence import congruence_closure, quotient_map, quotient_table
from ..core.family import Family
from ..core.objects import FinMorphism, FinObject, mk_tables
from ..errors import StructuralError

OP = "op"
UNIT = "unit"


def op_table(obj):
    return obj.table(OP)


def unit_of(obj):
    return obj.table(UNIT)


def make_monoid(family, table, unit, **extra):
    return FinObject(family, len(table), mk_tables(op=table, unit=unit, **extra))


def is_comm_monoid(table, unit, n):
    for i in range(n):
        if table[unit][i] != i or table[i][unit] != i:
            return False
        for j in range(n):
            if table[i][j] != table[j][i]:
                return False
            for k in range(n):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    return False
    return True


def permuted_table(table, perm):
    n = len(table)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[perm[i]][perm[j]] = perm[table[i][j]]
    return tuple(tuple(row) for row in out)


def restricted_table(table, elements):
    index = {x: i for i, x in enumerate(elements)}
    for x in elements:
        for y in elements:
            if table[x][y] not in index:
                raise StructuralError("subset not closed under the operation")
    return tuple(tuple(index[table[x][y]] for y in elements) for x in elements)


def comm_monoid_tables(n):
    """All commutative monoid tables on range(n) with unit 0.

    Backtracking over the upper triangle with associativity pruning on
    fully determined triples.
    """
    if n == 0:
        return
    table = [[None] * n for _ in range(n)]
    for i in range(n):
        table[0][i] = i
        table[i][0] = i
    cells = [(i, j) for i in range(1, n) for j in range(i, n)]

    def consistent(i, j):
        # check every associativity instance whose entries are all known
        for a in range(n):
            for b in range(n):
                ab = table[a][b]
                if ab is None:
                    continue
                for c in range(n):
                    bc = table[b][c]
                    if bc is None:
                        continue
                    left = table[ab][c]
                    right = table[a][bc]
                    if left is not None and right is not None and left != right:
                        return False
        return True

    def fill(pos):
        if pos == len(cells):
            yield tuple(tuple(row) for row in table)
            return
        i, j = cells[pos]
        for v in range(n):
            table[i][j] = v
            table[j][i] = v
            if consistent(i, j):
                yield from fill(pos + 1)
        table[i][j] = None
        table[j][i] = None

    yield from fill(0)


class MonoidLikeFamily(Family):
    """Base for cmon / omega / preordcmon: Z is the zero monoids."""

    hard_cap = 6

    def is_object(self, obj):
        if obj.family != self.name or obj.size == 0:
            return False
        table, unit = op_table(obj), unit_of(obj)
        if table is None or unit is None or len(table) != obj.size:
            return False
        return is_comm_monoid(table, unit, obj.size)

    def preserves(self, f):
        ta, tb = op_table(f.dom), op_table(f.cod)
        m = f.mapping
        if m[unit_of(f.dom)] != unit_of(f.cod):
            return False
        for i in range(f.dom.size):
            for j in range(i, f.dom.size):
                if m[ta[i][j]] != tb[m[i]][m[j]]:
                    return False
        return True

    # -- Z structure: zero monoids ------------------------------------

    def is_trivial(self, obj):
        return obj.size == 1

    def zero_object(self):
        return self.build(((0,),), 0)

    def coreflection(self, obj):
        zero = self.build_sub(obj, (unit_of(obj),))
        return FinMorphism(zero, obj, (unit_of(obj),))

    def reflection(self, obj):
        return FinMorphism(obj, self.zero_object(), (0,) * obj.size)

    # -- construction hooks --------------------------------------------

    def build(self, table, unit, **extra):
        raise NotImplementedError

    def build_sub(self, obj, elements):
        return self.restrict(obj, elements)

    def extra_ops(self, obj):
        """(arity, table) list beyond addition, for congruence closure."""
        return []

    def congruence_seeds(self, f):
        u = unit_of(f.cod)
        return [(v, u) for v in set(f.mapping)]

    def quotient(self, obj, blocks):
        cls = quotient_map(obj.size, blocks)
        table = quotient_table(op_table(obj), 2, cls, blocks)
        return self.build(table, cls[unit_of(obj)]), cls

    def cokernel(self, f):
        ops = [(2, op_table(f.cod))] + self.extra_ops(f.cod)
        blocks = congruence_closure(f.cod.size, ops, self.congruence_seeds(f))
        q_obj, cls = self.quotient(f.cod, blocks)
        return FinMorphism(f.cod, q_obj, cls)

    def fiber_product(self, f, g):
        pairs = sorted((x, y)
                       for x in range(f.dom.size)
                       for y in range(g.dom.size)
                       if f.mapping[x] == g.mapping[y])
        return self.fiber_from_pairs(f, g, pairs)

    def fiber_from_pairs(self, f, g, pairs):
        index = {p: i for i, p in enumerate(pairs)}
        ta, tb = op_table(f.dom), op_table(g.dom)
        table = tuple(tuple(index[(ta[x1][x2], tb[y1][y2])]
                            for (x2, y2) in pairs)
                      for (x1, y1) in pairs)
        unit = index[(unit_of(f.dom), unit_of(g.dom))]
        p_obj = self.build_fiber(f, g, pairs, table, unit)
        p1 = FinMorphism(p_obj, f.dom, tuple(x for x, _ in pairs))
        p2 = FinMorphism(p_obj, g.dom, tuple(y for _, y in pairs))
        return p1, p2

    def build_fiber(self, f, g, pairs, table, unit):
        return self.build(table, unit)

    # -- enumeration ----------------------------------------------------

    def subobject_candidates(self, obj):
        table = op_table(obj)
        unit = unit_of(obj)
        n = obj.size
        rest = [x for x in range(n) if x != unit]
        for bits in range(1 << len(rest)):
            subset = sorted([unit] + [rest[i] for i in range(len(rest))
                                      if bits >> i & 1])
            if all(table[x][y] in subset for x in subset for y in subset):
                if self.subset_admissible(obj, subset):
                    sub = self.build_sub(obj, tuple(subset))
                    yield FinMorphism(sub, obj, tuple(subset))

    def subset_admissible(self, obj, subset):
        return True

    # -- shortcut characterizations ------------------------------------

    def kernel_subset(self, f):
        u = unit_of(f.cod)
        return [x for x in range(f.dom.size) if f.mapping[x] == u]

    def is_normal_subset(self, obj, subset):
        table = op_table(obj)
        inside = set(subset)
        for x in inside:
            for y in range(obj.size):
                if table[x][y] in inside and y not in inside:
                    return False
        return True

    def classify_shortcut(self, f):
        table = op_table(f.dom)
        ker = self.kernel_subset(f)
        out = {"trivial_kernel": ker == [unit_of(f.dom)]}
        out["normal_mono"] = (f.is_injective()
                              and self.is_normal_subset(f.cod, f.image)
                              and self.image_admissible(f))
        if f.is_surjective():
            kset = ker
            ok = True
            for x in range(f.dom.size):
                for y in range(x + 1, f.dom.size):
                    if f.mapping[x] != f.mapping[y]:
                        continue
                    if not any(table[x][a] == table[y][b]
                               for a in kset for b in kset):
                        ok = False
                        break
                if not ok:
                    break
            out["normal_epi"] = ok
        else:
            out["normal_epi"] = False
        return out

    def image_admissible(self, f):
        """Extra image-side condition for normal monos (omega override)."""
        return True
