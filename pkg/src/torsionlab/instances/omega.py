"""Commutative Omega-monoids: extra operations distributing over addition.

The signature is a tuple of (name, arity) pairs; each extra operation must
be a monoid morphism in each variable separately.  Normal submonoids pick
up the absorbing clause: sigma(..., s, ...) lands in the submonoid as soon
as one argument does.
"""

from __future__ import annotations

from itertools import product

from ..core.objects import FinMorphism, FinObject, mk_tables
from ..errors import StructuralError
from .monoid_base import (MonoidLikeFamily, comm_monoid_tables, op_table,
                          permuted_table, restricted_table, unit_of)

DEFAULT_SIGNATURE = (("mul", 2),)


def extra_tables(obj):
    return obj.table("ops", ())


class OmegaFamily(MonoidLikeFamily):
    hard_cap = 4

    def __init__(self, signature=DEFAULT_SIGNATURE):
        super().__init__()
        self.signature = tuple(signature)
        suffix = ",".join(f"{nm}/{ar}" for nm, ar in self.signature)
        self.name = f"omega[{suffix}]" if suffix else "omega[]"

    def build(self, table, unit, ops=()):
        return FinObject(self.name, len(table),
                         mk_tables(op=table, unit=unit, ops=tuple(ops)))

    def is_object(self, obj):
        if not super().is_object(obj):
            return False
        ops = extra_tables(obj)
        if tuple((nm, ar) for nm, ar, _ in ops) != self.signature:
            return False
        add, unit = op_table(obj), unit_of(obj)
        for _, arity, table in ops:
            if not _is_multilinear(table, arity, add, unit, obj.size):
                return False
        return True

    def preserves(self, f):
        if not super().preserves(f):
            return False
        m = f.mapping
        for (_, arity, ta), (_, _, tb) in zip(extra_tables(f.dom),
                                              extra_tables(f.cod)):
            for args in product(range(f.dom.size), repeat=arity):
                if m[_lookup(ta, args)] != _lookup(tb, tuple(m[a] for a in args)):
                    return False
        return True

    def relabel(self, obj, perm):
        ops = tuple((nm, ar, _permute_op(tbl, ar, perm))
                    for nm, ar, tbl in extra_tables(obj))
        return self.build(permuted_table(op_table(obj), perm),
                          perm[unit_of(obj)], ops)

    def restrict(self, obj, elements):
        index = {x: i for i, x in enumerate(elements)}
        ops = []
        for nm, ar, tbl in extra_tables(obj):
            ops.append((nm, ar, _restrict_op(tbl, ar, elements, index)))
        return self.build(restricted_table(op_table(obj), elements),
                          index[unit_of(obj)], tuple(ops))

    def extra_ops(self, obj):
        return [(ar, tbl) for _, ar, tbl in extra_tables(obj)]

    def zero_object(self):
        ops = tuple((nm, ar, _constant_op(ar, 1, 0)) for nm, ar in self.signature)
        return self.build(((0,),), 0, ops)

    def quotient(self, obj, blocks):
        from ..core.congruence import quotient_map, quotient_table
        cls = quotient_map(obj.size, blocks)
        add = quotient_table(op_table(obj), 2, cls, blocks)
        ops = []
        for nm, ar, tbl in extra_tables(obj):
            ops.append((nm, ar, _quotient_op(tbl, ar, cls, blocks)))
        return self.build(add, cls[unit_of(obj)], tuple(ops)), cls

    def build_fiber(self, f, g, pairs, table, unit):
        index = {p: i for i, p in enumerate(pairs)}
        ops = []
        for (nm, ar, ta), (_, _, tb) in zip(extra_tables(f.dom),
                                            extra_tables(g.dom)):
            ops.append((nm, ar, _fiber_op(ta, tb, ar, pairs, index)))
        return self.build(table, unit, tuple(ops))

    def subset_admissible(self, obj, subset):
        inside = set(subset)
        for _, arity, tbl in extra_tables(obj):
            for args in product(subset, repeat=arity):
                if _lookup(tbl, args) not in inside:
                    return False
        return True

    def image_admissible(self, f):
        # absorbing clause: one argument in the image forces the value in
        inside = set(f.image)
        for _, arity, tbl in extra_tables(f.cod):
            for args in product(range(f.cod.size), repeat=arity):
                if any(a in inside for a in args) and _lookup(tbl, args) not in inside:
                    return False
        return True

    def enumerate_raw(self, bound):
        for n in range(1, bound + 1):
            for add in comm_monoid_tables(n):
                for ops in self._op_assignments(add, n):
                    yield self.build(add, 0, ops)

    def _op_assignments(self, add, n):
        choices = []
        for nm, arity in self.signature:
            tables = list(_multilinear_tables(add, 0, n, arity))
            choices.append([(nm, arity, t) for t in tables])
        for combo in product(*choices):
            yield tuple(combo)


def _lookup(table, args):
    value = table
    for a in args:
        value = value[a]
    return value


def _is_multilinear(table, arity, add, unit, n):
    for pos in range(arity):
        for rest in product(range(n), repeat=arity - 1):
            def at(v):
                args = rest[:pos] + (v,) + rest[pos:]
                return _lookup(table, args)
            if at(unit) != unit:
                return False
            for x in range(n):
                for y in range(n):
                    if at(add[x][y]) != add[at(x)][at(y)]:
                        return False
    return True


def _multilinear_tables(add, unit, n, arity):
    if arity == 1:
        endos = _additive_endos(add, unit, n)
        for e in endos:
            yield tuple(e)
        return
    if arity == 2:
        endos = _additive_endos(add, unit, n)
        zero_row = tuple(unit for _ in range(n))
        # sigma(x, -) is an additive endo for each x, and x -> sigma(x, -)
        # is itself additive with sigma(unit, -) = 0
        non_unit = [x for x in range(n) if x != unit]
        for rows in product(range(len(endos)), repeat=len(non_unit)):
            assign = {unit: zero_row}
            for x, ridx in zip(non_unit, rows):
                assign[x] = endos[ridx]
            ok = True
            for x in range(n):
                for y in range(n):
                    s = add[x][y]
                    if any(add[assign[x][c]][assign[y][c]] != assign[s][c]
                           for c in range(n)):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                yield tuple(assign[x] for x in range(n))
        return
    raise StructuralError("signatures above arity 2 are not supported")


def _additive_endos(add, unit, n):
    out = []
    for mapping in product(range(n), repeat=n):
        if mapping[unit] != unit:
            continue
        if all(mapping[add[x][y]] == add[mapping[x]][mapping[y]]
               for x in range(n) for y in range(x, n)):
            out.append(tuple(mapping))
    return out


def _permute_op(table, arity, perm):
    n = len(perm)
    if arity == 1:
        out = [0] * n
        for x in range(n):
            out[perm[x]] = perm[table[x]]
        return tuple(out)
    if arity == 2:
        out = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                out[perm[x]][perm[y]] = perm[table[x][y]]
        return tuple(tuple(r) for r in out)
    raise StructuralError("unsupported arity")


def _restrict_op(table, arity, elements, index):
    if arity == 1:
        return tuple(index[table[x]] for x in elements)
    if arity == 2:
        for x in elements:
            for y in elements:
                if table[x][y] not in index:
                    raise StructuralError("subset not closed under extra op")
        return tuple(tuple(index[table[x][y]] for y in elements)
                     for x in elements)
    raise StructuralError("unsupported arity")


def _quotient_op(table, arity, cls, blocks):
    from ..core.congruence import quotient_table
    return quotient_table(table, arity, cls, blocks)


def _fiber_op(ta, tb, arity, pairs, index):
    if arity == 1:
        return tuple(index[(ta[x], tb[y])] for (x, y) in pairs)
    if arity == 2:
        return tuple(tuple(index[(ta[x1][x2], tb[y1][y2])]
                           for (x2, y2) in pairs)
                     for (x1, y1) in pairs)
    raise StructuralError("unsupported arity")


def _constant_op(arity, n, value):
    if arity == 1:
        return tuple(value for _ in range(n))
    if arity == 2:
        return tuple(tuple(value for _ in range(n)) for _ in range(n))
    raise StructuralError("unsupported arity")
