from enum import Enum
from json import JSONEncoder
from numbers import Integral

from semimod.algebra.pathmatrix import LatticePath, PathMatrix
from semimod.algebra.semigroup import GapCoord, NumericalSemigroup
from semimod.algebra.semimodule import LeanSet


class CustomEncoder(JSONEncoder):
    def default(self, obj):
        if isinstance(obj, NumericalSemigroup):
            return {"alpha": obj.alpha, "beta": obj.beta}
        if isinstance(obj, LeanSet):
            return list(obj.gens)
        if isinstance(obj, GapCoord):
            return [obj.a, obj.b]
        if isinstance(obj, PathMatrix):
            return obj.as_lists()
        if isinstance(obj, LatticePath):
            return str(obj)
        if isinstance(obj, Enum):
            return obj.value
        if isinstance(obj, (set, frozenset)):
            return sorted(obj)
        # pandas hands out numpy integers
        if isinstance(obj, Integral):
            return int(obj)
        # Let the base class default method raise the TypeError
        return JSONEncoder.default(self, obj)
