"""Exact window-scale toolkit for Lie tori, their Chevalley involutions and EALAs."""

from .eala import (
    AffineCocycle,
    DSubalgebra,
    Dual,
    EalaAlgebra,
    SCDer,
    build_D,
    eala_axiom_checks,
    eala_build,
    is_D_invariant,
    is_pair_invariant,
    lift_involution,
    validate_cocycle,
)
from .involutions import Involution, chevalley, identity_map, verify_involution
from .jordan import HermitianMatrix, RedCliff
from .lie import (
    check_form,
    check_lie_torus,
    multiloop,
    multiloop_sl2,
    psl3_torus,
    simple_lie,
    sl2,
    sl_torus,
    tensor_torus,
    tits_B,
    tkk,
    tkk_C,
)
from .report import Report
from .scalars import Scalar, parse_scalar, root_of_unity
from .tori import Albert, CliffordJS, Hermitian, JordanPlus, Laurent, Octonion, Quantum, build_torus, quantum_torus
from .torus_checks import check_torus

__version__ = "0.1.0"

__all__ = [
    "AffineCocycle", "DSubalgebra", "Dual", "EalaAlgebra", "SCDer", "build_D", "eala_axiom_checks",
    "eala_build", "is_D_invariant", "is_pair_invariant", "lift_involution", "validate_cocycle",
    "Involution", "chevalley", "identity_map", "verify_involution", "HermitianMatrix", "RedCliff",
    "check_form", "check_lie_torus", "multiloop", "multiloop_sl2", "psl3_torus", "simple_lie", "sl2",
    "sl_torus", "tensor_torus", "tits_B", "tkk", "tkk_C", "Report", "Scalar", "parse_scalar",
    "root_of_unity", "Albert", "CliffordJS", "Hermitian", "JordanPlus", "Laurent", "Octonion",
    "Quantum", "build_torus", "quantum_torus", "check_torus",
]
