"""
Right multipliers of the special-pair induction, as elements of ZF.

For d = ∂_2 or ∂_3 and x = x1 (so dx = 0, d(y^x) = (dy)x):

    d[y, y^x] = (dy) p,   p = 1 + x y^-1 - (y^x)^-1 [y^x,y] - x [y^x,y]
    d[z, z^x] = (dz) q,   q likewise with z
    d[y, z]   = (dy) a + (dz) b,   a = 1 - z^-1 [z,y],   b = y^-1 - [z,y]
"""
from dataclasses import dataclass

from apps.free_words.services import Word, commutator, conjugate, identity, invert, multiply
from apps.fox_calculus.services import GroupRingElement


@dataclass(frozen=True)
class CaseMultipliers:
    p: GroupRingElement
    q: GroupRingElement
    a: GroupRingElement
    b: GroupRingElement


def conjugation_multiplier(y: Word, x: Word) -> GroupRingElement:
    """1 + x y^-1 - (y^x)^-1 [y^x,y] - x [y^x,y]."""
    yx = conjugate(y, x)
    bracket = commutator(yx, y)
    return GroupRingElement(
        [
            (1, identity(y.rank)),
            (1, multiply(x, invert(y))),
            (-1, multiply(invert(yx), bracket)),
            (-1, multiply(x, bracket)),
        ],
        rank=y.rank,
    )


def case_multipliers(y: Word, z: Word, x: Word) -> CaseMultipliers:
    bracket = commutator(z, y)
    a = GroupRingElement([(1, identity(y.rank)), (-1, multiply(invert(z), bracket))], rank=y.rank)
    b = GroupRingElement([(1, invert(y)), (-1, bracket)], rank=y.rank)
    return CaseMultipliers(
        p=conjugation_multiplier(y, x),
        q=conjugation_multiplier(z, x),
        a=a,
        b=b,
    )
