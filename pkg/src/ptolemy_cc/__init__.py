"""Generalized Caldero-Chapoton map for Ptolemy diagrams in type A."""

from .ccmap import (ExchangeSplit, RhoCalculator, RhoTable, clique_rho,
                    exchange_split, first_crossed_dissecting, rho, rho_sum,
                    rho_table)
from .diagram import (Cell, CellKind, ClosureViolation, Decomposition,
                      GuardError, PtolemyDiagram, StructureError, decompose,
                      enumerate_ptolemy, find_violation, ptolemy_closure,
                      validate)
from .frieze import (DiamondReport, FriezeBand, build_band,
                     diamond_determinants, render)
from .kernels import BACKEND
from .oracle import (StaircaseRectangle, composite_nonzero, count_subfunctors,
                     narayana_identity_check, staircase_count, support)
from .polygon import (Diagonal, Edge, PolygonError, crosses,
                      cyclic_weakly_ordered, normalize, suspend)

__version__ = "0.1.0"
