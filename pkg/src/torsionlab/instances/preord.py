"""Preordered commutative monoids (and the partially ordered variant).

The preorder is stored as the full sorted tuple of related pairs,
reflexive pairs included, and must be compatible with addition.  Z is the
zero monoids; cokernels are the monoid quotient with the generated order
(plus the poset reflection in the partially ordered family).
"""

from __future__ import annotations

from itertools import combinations

from ..core.congruence import congruence_closure, quotient_map
from ..core.objects import FinMorphism, FinObject, mk_tables
from ..errors import StructuralError
from .monoid_base import (MonoidLikeFamily, comm_monoid_tables, op_table,
                          permuted_table, restricted_table, unit_of)


def le_pairs(obj):
    return obj.table("le")


def leq(obj, x, y):
    return (x, y) in obj.table("le_set", frozenset(le_pairs(obj)))


def _closure_ops(pairs, n):
    rel = set(pairs) | {(x, x) for x in range(n)}
    changed = True
    while changed:
        changed = False
        for (a, b) in list(rel):
            for (c, d) in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    return rel


def _compatible(rel, table, n):
    for (x, y) in rel:
        for z in range(n):
            if (table[x][z], table[y][z]) not in rel:
                return False
    return True


class PreordCMonFamily(MonoidLikeFamily):
    name = "preordcmon"
    hard_cap = 4
    antisymmetric = False

    def build(self, table, unit, le=None):
        n = len(table)
        if le is None:
            le = tuple(sorted((x, x) for x in range(n)))
        return FinObject(self.name, n,
                         mk_tables(op=table, unit=unit, le=tuple(sorted(le))))

    def is_object(self, obj):
        if not super().is_object(obj):
            return False
        rel = set(le_pairs(obj))
        n = obj.size
        if any((x, x) not in rel for x in range(n)):
            return False
        for (a, b) in rel:
            for (c, d) in rel:
                if b == c and (a, d) not in rel:
                    return False
        if self.antisymmetric and any((y, x) in rel and x != y for (x, y) in rel):
            return False
        return _compatible(rel, op_table(obj), n)

    def preserves(self, f):
        if not super().preserves(f):
            return False
        cod_rel = set(le_pairs(f.cod))
        return all((f.mapping[x], f.mapping[y]) in cod_rel
                   for (x, y) in le_pairs(f.dom))

    def relabel(self, obj, perm):
        le = tuple(sorted((perm[x], perm[y]) for (x, y) in le_pairs(obj)))
        return self.build(permuted_table(op_table(obj), perm),
                          perm[unit_of(obj)], le)

    def restrict(self, obj, elements):
        index = {x: i for i, x in enumerate(elements)}
        le = tuple(sorted((index[x], index[y]) for (x, y) in le_pairs(obj)
                          if x in index and y in index))
        return self.build(restricted_table(op_table(obj), elements),
                          index[unit_of(obj)], le)

    def enumerate_raw(self, bound):
        for n in range(1, bound + 1):
            for table in comm_monoid_tables(n):
                for le in self._compatible_orders(table, n):
                    yield self.build(table, 0, le)

    def _compatible_orders(self, table, n):
        off_diag = [(x, y) for x in range(n) for y in range(n) if x != y]
        diag = [(x, x) for x in range(n)]
        for bits in range(1 << len(off_diag)):
            chosen = [off_diag[i] for i in range(len(off_diag)) if bits >> i & 1]
            rel = set(chosen) | set(diag)
            if any(b == c and (a, d) not in rel
                   for (a, b) in rel for (c, d) in rel):
                continue
            if self.antisymmetric and any((y, x) in rel and x != y
                                          for (x, y) in rel):
                continue
            if _compatible(rel, table, n):
                yield tuple(sorted(rel))

    # -- cokernel: monoid quotient plus generated order ------------------

    def cokernel(self, f):
        obj = f.cod
        blocks = congruence_closure(obj.size, [(2, op_table(obj))],
                                    self.congruence_seeds(f))
        cls = quotient_map(obj.size, blocks)
        m = len(blocks)
        rel = _closure_ops({(cls[x], cls[y]) for (x, y) in le_pairs(obj)}, m)
        if self.antisymmetric:
            return self._poset_reflect(obj, cls, blocks, rel)
        from ..core.congruence import quotient_table
        table = quotient_table(op_table(obj), 2, cls, blocks)
        q_obj = self.build(table, cls[unit_of(obj)], tuple(sorted(rel)))
        return FinMorphism(obj, q_obj, cls)

    def _poset_reflect(self, obj, cls, blocks, rel):
        from ..core.congruence import quotient_table
        m = len(blocks)
        cycles = [(a, b) for (a, b) in rel if (b, a) in rel and a != b]
        table = quotient_table(op_table(obj), 2, cls, blocks)
        if cycles:
            blocks2 = congruence_closure(m, [(2, table)], cycles)
            cls2 = quotient_map(m, blocks2)
            table = quotient_table(table, 2, cls2, blocks2)
            rel = _closure_ops({(cls2[a], cls2[b]) for (a, b) in rel},
                               len(blocks2))
            cls = tuple(cls2[c] for c in cls)
        q_obj = self.build(table, cls[unit_of(obj)], tuple(sorted(rel)))
        assert self.is_object(q_obj)
        return FinMorphism(obj, q_obj, cls)

    # -- shortcuts --------------------------------------------------------

    def classify_shortcut(self, f):
        ker = self.kernel_subset(f)
        out = {"trivial_kernel": ker == [unit_of(f.dom)]}
        out["normal_mono"] = (f.is_injective()
                              and self.is_normal_subset(f.cod, f.image)
                              and self._order_full(f))
        out["normal_epi"] = (self._cmon_normal_epi(f)
                             and self._order_lifting(f))
        return out

    def _order_full(self, f):
        # the image carries exactly the restricted order
        dom_rel = set(le_pairs(f.dom))
        cod_rel = set(le_pairs(f.cod))
        m = f.mapping
        for x in range(f.dom.size):
            for y in range(f.dom.size):
                if ((m[x], m[y]) in cod_rel) != ((x, y) in dom_rel):
                    return False
        return True

    def _cmon_normal_epi(self, f):
        if not f.is_surjective():
            return False
        table = op_table(f.dom)
        ker = self.kernel_subset(f)
        for x in range(f.dom.size):
            for y in range(x + 1, f.dom.size):
                if f.mapping[x] != f.mapping[y]:
                    continue
                if not any(table[x][a] == table[y][b] for a in ker for b in ker):
                    return False
        return True

    def _order_lifting(self, f):
        dom_rel = set(le_pairs(f.dom))
        m = f.mapping
        for (u, v) in le_pairs(f.cod):
            if not any(m[x] == u and m[y] == v for (x, y) in dom_rel):
                return False
        return True


class PosCMonFamily(PreordCMonFamily):
    name = "poscmon"
    antisymmetric = True

    def classify_shortcut(self, f):
        # roundtrip classification is authoritative here; only the
        # trivial-kernel shortcut is safely shared with the preorder case
        return {"trivial_kernel":
                self.kernel_subset(f) == [unit_of(f.dom)]}
