"""Centerless Lie tori: the shared framework, the constructions and the axiom checks."""

from .base import Atom, LieElement, LieTorus, OutsideComponent
from .checks import check_centroid, check_form, check_lie_torus, jacobiator
from .multiloop import MultiLoopTorus, multiloop, multiloop_sl2, sl2_example
from .psl3 import PSL3Torus, psl3_torus
from .simple import MatrixLie, load_table, simple_lie, sl2
from .sl import SLTorus, sl_torus
from .tensor import TensorTorus, tensor_torus
from .tits import TitsBTorus, tits_B
from .tkk import TKKTorus, tkk, tkk_C

__all__ = [
    "Atom", "LieElement", "LieTorus", "OutsideComponent",
    "check_centroid", "check_form", "check_lie_torus", "jacobiator",
    "MultiLoopTorus", "multiloop", "multiloop_sl2", "sl2_example",
    "PSL3Torus", "psl3_torus", "MatrixLie", "load_table", "simple_lie", "sl2",
    "SLTorus", "sl_torus", "TensorTorus", "tensor_torus", "TitsBTorus", "tits_B",
    "TKKTorus", "tkk", "tkk_C",
]
