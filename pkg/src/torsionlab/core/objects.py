"""Finite concrete objects and structure-preserving maps.

Every object in every instance family is a finite carrier ``range(size)``
together with a tuple of named operation tables.  Tables only ever contain
ints, strings, nested tuples and (for arrow categories) nested FinObjects,
so objects are hashable and compare by value.  Morphisms are total maps of
carriers stored as index tuples; equality of morphisms is element-wise
equality of the map plus equal endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from ..errors import StructuralError


def mk_tables(**named) -> tuple:
    """Build the canonical (sorted) table tuple from keyword tables."""
    return tuple(sorted(named.items()))


@dataclass(frozen=True)
class FinObject:
    family: str
    size: int
    tables: tuple = ()
    _hash: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash((self.family, self.size, self.tables)))

    def __hash__(self):
        return self._hash

    def table(self, name, default=None):
        for key, value in self.tables:
            if key == name:
                return value
        return default

    @property
    def carrier(self) -> range:
        return range(self.size)

    def __repr__(self):
        return f"<{self.family}#{self.size}:{self._hash & 0xFFFFFF:06x}>"


@dataclass(frozen=True)
class FinMorphism:
    dom: FinObject
    cod: FinObject
    mapping: tuple
    _hash: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self):
        if len(self.mapping) != self.dom.size:
            raise StructuralError("mapping length does not match domain carrier")
        if any(not (0 <= v < self.cod.size) for v in self.mapping):
            raise StructuralError("mapping value outside codomain carrier")
        object.__setattr__(self, "_hash", hash((self.dom, self.cod, self.mapping)))

    def __hash__(self):
        return self._hash

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def then(self, other: "FinMorphism") -> "FinMorphism":
        """Diagrammatic composition: ``f.then(g)`` is f followed by g."""
        if self.cod != other.dom:
            raise StructuralError("endpoint mismatch in composition")
        return FinMorphism(self.dom, other.cod,
                           tuple(other.mapping[v] for v in self.mapping))

    @property
    def image(self) -> tuple:
        return tuple(sorted(set(self.mapping)))

    def is_injective(self) -> bool:
        return len(set(self.mapping)) == self.dom.size

    def is_surjective(self) -> bool:
        return len(set(self.mapping)) == self.cod.size

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def inverse_mapping(self) -> tuple:
        if not self.is_bijective():
            raise StructuralError("not bijective")
        inv = [0] * self.cod.size
        for x, y in enumerate(self.mapping):
            inv[y] = x
        return tuple(inv)

    def __repr__(self):
        return f"{self.dom!r}->{self.cod!r}{list(self.mapping)}"


def identity(obj: FinObject) -> FinMorphism:
    return FinMorphism(obj, obj, tuple(range(obj.size)))


def solve_through_mono(m: FinMorphism, f: FinMorphism):
    """The unique g with g;m = f, when ``m`` is an injective map.

    Returns the mapping tuple or None when ``f`` does not factor through
    the image of ``m`` set-theoretically.  Structure preservation must be
    checked by the caller.
    """
    if m.cod != f.cod:
        raise StructuralError("solve_through_mono: codomain mismatch")
    lookup = {}
    for x, y in enumerate(m.mapping):
        if y in lookup:
            raise StructuralError("solve_through_mono: m is not injective")
        lookup[y] = x
    out = []
    for v in f.mapping:
        if v not in lookup:
            return None
        out.append(lookup[v])
    return tuple(out)


def solve_through_epi(e: FinMorphism, f: FinMorphism):
    """The unique g with e;g = f, when ``e`` is a surjective map.

    Returns the mapping tuple or None when the assignment is inconsistent
    on some fiber of ``e``.
    """
    if e.dom != f.dom:
        raise StructuralError("solve_through_epi: domain mismatch")
    out = [None] * e.cod.size
    for x in range(e.dom.size):
        tgt = f.mapping[x]
        slot = e.mapping[x]
        if out[slot] is None:
            out[slot] = tgt
        elif out[slot] != tgt:
            return None
    if any(v is None for v in out):
        return None
    return tuple(out)
