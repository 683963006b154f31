"""Exact partition enumeration, weighted bijections and q-series identity checking."""

from .bijections import (column_strip, column_unstrip, conjugate, jump_compose, jump_decompose,
                         psi_k, psi_k_inverse, vertical_blocks)
from .partitions import (D, DS, E, P, S, PartitionClass, enumerate_partitions, omega_sum,
                         omega_weight, render_ferrers, statistics)
from .qseries import (gaussian_poly, inverse_pochhammer, pochhammer, pochhammer_multi,
                      q_binomial, q_multinomial)
from .series import TruncatedSeries, VariableContext, extract_coefficient, substitute

__version__ = "0.1.0"

__all__ = [
    "D", "DS", "E", "P", "S", "PartitionClass", "TruncatedSeries", "VariableContext",
    "column_strip", "column_unstrip", "conjugate", "enumerate_partitions", "extract_coefficient",
    "gaussian_poly", "inverse_pochhammer", "jump_compose", "jump_decompose", "omega_sum",
    "omega_weight", "pochhammer", "pochhammer_multi", "psi_k", "psi_k_inverse", "q_binomial",
    "q_multinomial", "render_ferrers", "statistics", "substitute", "vertical_blocks",
]
