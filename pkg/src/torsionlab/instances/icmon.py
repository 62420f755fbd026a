"""Inverse commutative monoids with Z = idempotent commutative monoids.

Multiplicative conventions: every x has a unique x' with xx'x = x and
x'xx' = x'.  The idempotent-part functor E is both left and right adjoint
to the inclusion of idempotent monoids, so the counit is the inclusion
E(M) -> M and the unit is x -> xx'.
"""

from __future__ import annotations

from ..core.objects import FinMorphism, FinObject
from .monoid_base import (MonoidLikeFamily, comm_monoid_tables, make_monoid,
                          op_table, permuted_table, restricted_table, unit_of)


def is_inverse(table, n):
    for x in range(n):
        if inverse_of(table, x, n) is None:
            return False
    return True


def inverse_of(table, x, n):
    for y in range(n):
        if table[table[x][y]][x] == x and table[table[y][x]][y] == y:
            return y
    return None


def idempotents(obj):
    table = op_table(obj)
    return tuple(x for x in range(obj.size) if table[x][x] == x)


class ICMonFamily(MonoidLikeFamily):
    name = "icmon"

    def build(self, table, unit, **extra):
        return make_monoid(self.name, table, unit)

    def is_object(self, obj):
        return (super().is_object(obj)
                and is_inverse(op_table(obj), obj.size))

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
                if is_inverse(table, n):
                    yield self.build(table, 0)

    # -- Z structure: idempotent monoids -------------------------------

    def is_trivial(self, obj):
        return len(idempotents(obj)) == obj.size

    def coreflection(self, obj):
        idem = idempotents(obj)
        return FinMorphism(self.restrict(obj, idem), obj, idem)

    def reflection(self, obj):
        table = op_table(obj)
        idem = idempotents(obj)
        index = {x: i for i, x in enumerate(idem)}
        mapping = tuple(index[table[x][inverse_of(table, x, obj.size)]]
                        for x in range(obj.size))
        return FinMorphism(obj, self.restrict(obj, idem), mapping)

    # -- cokernel: collapse the image onto idempotents -------------------

    def congruence_seeds(self, f):
        table = op_table(f.cod)
        return [(v, table[v][v]) for v in set(f.mapping)]

    def quotient(self, obj, blocks):
        q_obj, cls = super().quotient(obj, blocks)
        assert is_inverse(op_table(q_obj), q_obj.size)
        return q_obj, cls

    # finite commutative inverse monoids: submonoids are inverse-closed,
    # so the base subobject candidates are already correct

    def classify_shortcut(self, f):
        dom_idem, cod_idem = idempotents(f.dom), idempotents(f.cod)
        preimage = [x for x in range(f.dom.size)
                    if f.mapping[x] in set(cod_idem)]
        out = {"trivial_kernel": set(preimage) == set(dom_idem)}
        e_image = {f.mapping[x] for x in dom_idem}
        out["normal_epi"] = (f.is_surjective()
                             and len(e_image) == len(dom_idem)
                             and e_image == set(cod_idem))
        return out
