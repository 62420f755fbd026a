"""The FinCategoryInstance abstraction.

A Family bundles one finite concrete category: object validity, the
structure-preservation predicate for maps, hom-set enumeration, the
distinguished trivial subcategory Z (triviality test, coreflection counit,
optional reflection unit), a cokernel provider, pullbacks by element-wise
fiber product, and object enumeration up to isomorphism.

All families are stateless apart from memo caches, and all constructed
data is immutable, so instances are safe to share across worker threads.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from itertools import permutations, product

from ..errors import BoundExceeded, StructuralError
from .objects import FinMorphism, FinObject, identity


class Family(ABC):
    name: str = "?"
    hard_cap = None  # family-specific bound ceiling; None = unchecked

    def __init__(self):
        self._hom_cache = {}
        self._enum_cache = {}
        self._iso_cache = {}
        self._canon_cache = {}

    # ------------------------------------------------------------------
    # structure hooks
    # ------------------------------------------------------------------

    @abstractmethod
    def is_object(self, obj: FinObject) -> bool:
        """Check the instance invariants of an object's tables."""

    @abstractmethod
    def preserves(self, f: FinMorphism) -> bool:
        """Structure preservation of a well-typed carrier map."""

    @abstractmethod
    def relabel(self, obj: FinObject, perm) -> FinObject:
        """Transport structure along a carrier permutation (new = perm[old])."""

    @abstractmethod
    def restrict(self, obj: FinObject, elements) -> FinObject:
        """Induced substructure on a closed, sorted element subset."""

    # ------------------------------------------------------------------
    # Z structure
    # ------------------------------------------------------------------

    @abstractmethod
    def is_trivial(self, obj: FinObject) -> bool:
        """Membership in the distinguished subcategory Z."""

    @abstractmethod
    def coreflection(self, obj: FinObject) -> FinMorphism:
        """The counit eps_B: Z(B) -> B of the mono-coreflection."""

    def reflection(self, obj: FinObject):
        """The unit eta_B: B -> R(B) of the reflection, or None."""
        return None

    # ------------------------------------------------------------------
    # providers
    # ------------------------------------------------------------------

    @abstractmethod
    def cokernel(self, f: FinMorphism) -> FinMorphism:
        """The relative cokernel q: cod(f) ->> Q."""

    @abstractmethod
    def fiber_product(self, f: FinMorphism, g: FinMorphism):
        """Pullback of a cospan: (p1: P -> dom f, p2: P -> dom g)."""

    def pullback(self, f, g):
        if f.cod != g.cod:
            raise StructuralError("pullback requires a cospan")
        return self.fiber_product(f, g)

    # ------------------------------------------------------------------
    # enumeration
    # ------------------------------------------------------------------

    @abstractmethod
    def enumerate_raw(self, bound):
        """Yield all objects within the bound, duplicates allowed."""

    @abstractmethod
    def subobject_candidates(self, obj: FinObject):
        """Inclusions of closed substructures, not necessarily normal."""

    def check_bound(self, bound):
        if self.hard_cap is not None and _bound_exceeds(bound, self.hard_cap):
            raise BoundExceeded(
                f"{self.name}: bound {bound!r} exceeds documented cap "
                f"{self.hard_cap!r}; rerun with a smaller bound")

    def enumerate(self, bound) -> tuple:
        """All objects up to isomorphism, deterministically ordered."""
        if bound in self._enum_cache:
            return self._enum_cache[bound]
        self.check_bound(bound)
        seen = {}
        for obj in self.enumerate_raw(bound):
            key = self.canonical_key(obj)
            if key not in seen:
                seen[key] = obj
        objs = tuple(obj for _, obj in sorted(seen.items()))
        self._enum_cache[bound] = objs
        return objs

    # ------------------------------------------------------------------
    # derived category structure
    # ------------------------------------------------------------------

    def identity(self, obj: FinObject) -> FinMorphism:
        return identity(obj)

    def compose(self, f: FinMorphism, g: FinMorphism) -> FinMorphism:
        return f.then(g)

    def is_map(self, f: FinMorphism) -> bool:
        return (self.is_object(f.dom) and self.is_object(f.cod)
                and self.preserves(f))

    def hom(self, a: FinObject, b: FinObject) -> tuple:
        key = (a, b)
        cached = self._hom_cache.get(key)
        if cached is None:
            cached = tuple(sorted(self.hom_raw(a, b),
                                  key=lambda f: f.mapping))
            self._hom_cache[key] = cached
        return cached

    def hom_raw(self, a, b):
        """Brute-force map filter; families may override with a smarter
        enumerator, which stays testable against this one."""
        return self.brute_hom(a, b)

    def brute_hom(self, a, b):
        out = []
        if a.size == 0:
            f = FinMorphism(a, b, ())
            return [f] if self.preserves(f) else []
        if b.size == 0:
            return []
        for mapping in product(range(b.size), repeat=a.size):
            f = FinMorphism(a, b, mapping)
            if self.preserves(f):
                out.append(f)
        return out

    def isomorphisms(self, a, b):
        key = (a, b)
        cached = self._iso_cache.get(key)
        if cached is not None:
            return cached
        isos = []
        if a.size == b.size:
            for f in self.hom(a, b):
                if f.is_bijective():
                    inv = FinMorphism(b, a, f.inverse_mapping())
                    if self.preserves(inv):
                        isos.append(f)
        isos = tuple(isos)
        self._iso_cache[key] = isos
        return isos

    def is_isomorphic(self, a, b):
        if a == b:
            return True
        if a.size != b.size:
            return False
        return self.canonical_key(a) == self.canonical_key(b)

    # ------------------------------------------------------------------
    # canonical forms
    # ------------------------------------------------------------------

    def canonical_key(self, obj: FinObject):
        """Hashable key constant on isomorphism classes.

        Default: minimum over all carrier permutations of the relabelled
        table encoding.  Fine for carriers up to ~7; composite families
        override with structured keys.
        """
        cached = self._canon_cache.get(obj)
        if cached is not None:
            return cached
        best = None
        for perm in permutations(range(obj.size)):
            enc = _encode(self.relabel(obj, perm))
            if best is None or enc < best:
                best = enc
        key = (obj.size, best)
        self._canon_cache[obj] = key
        return key

    # ------------------------------------------------------------------
    # optional shortcut characterizations
    # ------------------------------------------------------------------

    def classify_shortcut(self, f: FinMorphism) -> dict:
        """Family-specific membership tests, keyed by class name.

        Returns a dict over a subset of {"normal_mono", "normal_epi",
        "trivial_kernel"}; absent keys mean the family offers no shortcut
        for that class.
        """
        return {}

    # flags determined experimentally by the exactness engine
    declared_regular_epis = None  # None = unknown, decided by the flag law

    def __repr__(self):
        return f"Family({self.name})"


def _bound_exceeds(bound, cap):
    if isinstance(cap, tuple):
        return any(b > c for b, c in zip(bound, cap))
    return bound > cap


def _encode(obj: FinObject):
    return obj.tables


def sorted_pairs(pairs):
    return tuple(sorted(pairs))
