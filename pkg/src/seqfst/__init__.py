"""Subsequential transducers over sequentiable output structures."""

from .algebra import NATURAL, PRODUCT, RATIONAL, STRUCTURES, WORDS, Structure, get_structure
from .axioms import AxiomReport, check_axioms, check_derived_properties
from .builder import SampleTable, from_table, merge_equivalent, minimize, push_outputs
from .errors import (
    InvalidArgument,
    InvalidInputError,
    LemmaViolation,
    NormalizationFailure,
    NotAPrefixError,
    ParseError,
    SeqFSTError,
    SizeError,
)
from .fst import Transducer, delta_star, equivalent_bounded, lambda_star, output, run, trim, validate
from .replica import Replica, compute_classes, replicate

__version__ = "0.1.0"
