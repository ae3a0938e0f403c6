"""Numerical semigroup invariants: Wilf function, Eliahou number, concentration."""
from .core import (
    EmptySpec,
    GeneratorSpec,
    NonCoprime,
    NumericalSemigroup,
    NumericalSemigroupError,
    SpecParseError,
    TrivialSemigroup,
    ZeroGenerator,
    build,
    parse_spec,
)
from .invariants import (
    AperySet,
    BaseNotInSemigroup,
    InvariantReport,
    PartitionProfile,
    apery,
    concentration,
    delta,
    delta_via_apery,
    eta,
    generator_split,
    is_highly_dense,
    partition_profile,
    pseudo_frobenius,
    report,
)
from .wilf import BadParams, eliahou, mu, w_mq, wilf

__version__ = "0.1.0"
