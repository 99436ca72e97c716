"""Reducible elementary representations of so(p,q): multiplet graphs,
classification of distinguished representations, and singular vectors
checked against a brute-force Verma module engine."""
from .classify import ClassificationReport, classify, weyl_dimension
from .multiplets import (
    Multiplet,
    main_multiplet,
    reduced_multiplet,
    singlet,
    special_reduced,
    validate_multiplet,
)
from .rootsys import AlgebraSpec, InputError, Root, build_algebra
from .signatures import ERNode, Signature

__version__ = "0.1.0"
