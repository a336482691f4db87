"""Finite multisets with supernatural denominators and their dual finite MV-algebras."""

from .errors import (
    BoundaryMismatch,
    BudgetExceeded,
    CanonicalFormError,
    DenominatorViolation,
    DomainError,
    InternalError,
    NotPrimeError,
    PreconditionError,
    UnknownIdentifier,
)
from .supernat import INF, ONE, TOP, Supernatural, TopologyFamily, from_natural, join, leq, meet
from .multiset import (
    FiniteMultiset,
    MultisetArrow,
    check_arrow,
    classify,
    compose,
    enumerate_homs,
    identity,
    mk_dn,
    mk_point,
    mk_two,
    multiset,
)
from .mv import FiniteMVAlgebra, MVHomomorphism, chain, chain_product, enumerate_homs_bruteforce
from .duality import algebra_of, check_hom_bijection, dual_arrow
from .verify import CheckResult, run_check

__version__ = "0.1.0"
