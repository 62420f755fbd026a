"""Finite commutative monoids with Z = zero monoids."""

from __future__ import annotations

from ..core.objects import FinMorphism, FinObject, mk_tables
from .monoid_base import (MonoidLikeFamily, comm_monoid_tables, make_monoid,
                          op_table, permuted_table, restricted_table, unit_of)


class CMonFamily(MonoidLikeFamily):
    name = "cmon"

    def build(self, table, unit, **extra):
        return make_monoid(self.name, table, unit)

    def relabel(self, obj, perm):
        return self.build(permuted_table(op_table(obj), perm),
                          perm[unit_of(obj)])

    def restrict(self, obj, elements):
        index = {x: i for i, x in enumerate(elements)}
        return self.build(restricted_table(op_table(obj), elements),
                          index[unit_of(obj)])

    def enumerate_raw(self, bound):
        for n in range(1, bound + 1):
            for table in comm_monoid_tables(n):
                yield self.build(table, 0)


def cyclic(n):
    """Z/n as an object of the cmon family."""
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return make_monoid("cmon", table, 0)


def boolean_monoid():
    """({0,1}, max): the two-element idempotent monoid."""
    return make_monoid("cmon", ((0, 1), (1, 1)), 0)


def direct_sum(a, b, family="cmon"):
    pairs = [(x, y) for x in range(a.size) for y in range(b.size)]
    index = {p: i for i, p in enumerate(pairs)}
    ta, tb = op_table(a), op_table(b)
    table = tuple(tuple(index[(ta[x1][x2], tb[y1][y2])] for (x2, y2) in pairs)
                  for (x1, y1) in pairs)
    return make_monoid(family, table, index[(unit_of(a), unit_of(b))])
