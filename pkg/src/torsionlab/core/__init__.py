from .objects import FinMorphism, FinObject, identity, mk_tables
from .family import Family
from . import ops

__all__ = ["FinObject", "FinMorphism", "identity", "mk_tables", "Family", "ops"]
