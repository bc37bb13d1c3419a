"""
Raw Fox derivative terms on letter tuples.

Convention: ∂_i(x_j) = δ_ij, ∂_i(e) = 0, ∂_i(gh) = ∂_i g + (∂_i h) g^{-1}.
Expanding over w = l_1 ... l_m with prefixes w_j = l_1 ... l_j:

    l_j = x_i       contributes  +(w_{j-1})^{-1}
    l_j = x_i^{-1}  contributes  -(w_j)^{-1}

This is the involution of the usual left derivative.
"""
from typing import List, Tuple

from utils.validators import LevelValidator

Letters = Tuple[int, ...]


def _inverse(letters: Letters) -> Letters:
    return tuple(-l for l in reversed(letters))


def raw_fox_terms(i: int, letters: Letters) -> List[Tuple[int, Letters]]:
    """
    Unmerged terms (coefficient, reduced letters) of ∂_i applied to a reduced word.

    Raises:
        ResourceCapExceeded: If the word is longer than CONCORDIA_MAX_TERMS
    """
    LevelValidator.validate_terms(len(letters))
    terms = []
    for j, letter in enumerate(letters):
        if letter == i:
            terms.append((1, _inverse(letters[:j])))
        elif letter == -i:
            terms.append((-1, _inverse(letters[:j + 1])))
    return terms
