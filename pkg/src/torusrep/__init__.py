"""torusrep: exact quantum representations of the torus mapping class group."""

__version__ = "0.1.0"

from .cyclotomic import (CycNum, denominator_bound, embed_complex, galois,
                         in_subfield, lift, root_of_unity, sqrt_integer,
                         to_subfield)
from .extension import (LagLine, MERIDIAN, LONGITUDE, WeightedClass, act,
                        compose, wall_sigma)
from .matrix import RepMatrix
from .rep import (DenominatorProfile, denominator_profile, evaluate,
                  fig8_periods, group_closure, matrix_order, projective_order)
from .sl2z import (FIG8, GenWord, Mat2Z, S, T, decompose, dedekind_sum,
                   rademacher_phi)
from .theory import TheoryParams, quantum_integer, s_matrix, t_matrix, theory
