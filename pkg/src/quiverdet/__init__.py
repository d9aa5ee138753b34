"""Exact Kempf-Lascoux-Weyman complexes for Kronecker quiver and 3-tensor determinantal varieties."""

from ._jit import NUMBA_ENABLED
from .bott import GrassmannianShape, bott, cohomology_Qdual_twist, cohomology_S_twist
from .characters import character, character_table, kronecker, kronecker_oracle
from .klw import KLWComplex, KroneckerSetting, complex, degree, dual_weight
from .partitions import conjugate, parse_partition, partitions
from .quiver import Quiver, euler_form, generic_hom_ext, kronecker_quiver
from .tensor import TensorSetting, codim_and_fiber, tensor_complex, tensor_degree

__version__ = "0.1.0"
