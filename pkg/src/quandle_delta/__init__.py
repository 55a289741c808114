"""Augmentation-ideal quotients of integral quandle rings."""

from .lattice import (
    Lattice,
    QuotientReport,
    SmithDecomposition,
    hnf,
    lattice_contains,
    lattice_equal,
    lattice_from_generators,
    quotient_invariants,
    snf,
)
from .quandle import Quandle, from_table, make_dihedral, make_trivial, right_translation
from .ring import (
    EVector,
    Mode,
    RingElement,
    augmentation,
    delta_power,
    delta_quotient,
    ebasis_product,
    from_ebasis,
    multiply,
    to_ebasis,
)

__version__ = "0.1.0"
