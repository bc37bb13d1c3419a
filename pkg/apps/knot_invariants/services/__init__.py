"""
Knot invariant services.

Alexander polynomials and Arf invariants of Seifert matrices, Levine-Tristram
signatures and the rho invariant of Hermitian Laurent forms.
"""
from .laurent import LaurentPoly
from .forms import (
    FIGURE_EIGHT,
    LEFT_TREFOIL,
    FormLike,
    HermitianLaurentMatrix,
    SeifertMatrix,
    as_form,
    block_sum,
    connected_sum,
    lambda_J,
    lambda_J_flipped,
)
from .alexander import alexander_poly, arf
from .signature import (
    JumpSet,
    SignatureCalculator,
    SignatureProfile,
    SignatureSamples,
    chebyshev_form,
    jump_angles,
    lt_signature,
    rho_z,
    sample_signatures,
    signature_profile,
    sturm_root_count,
)

__all__ = [
    'LaurentPoly',
    'FIGURE_EIGHT',
    'LEFT_TREFOIL',
    'FormLike',
    'HermitianLaurentMatrix',
    'SeifertMatrix',
    'as_form',
    'block_sum',
    'connected_sum',
    'lambda_J',
    'lambda_J_flipped',
    'alexander_poly',
    'arf',
    'JumpSet',
    'SignatureCalculator',
    'SignatureProfile',
    'SignatureSamples',
    'chebyshev_form',
    'jump_angles',
    'lt_signature',
    'rho_z',
    'sample_signatures',
    'signature_profile',
    'sturm_root_count',
]
