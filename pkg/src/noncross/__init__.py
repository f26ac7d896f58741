"""Noncrossing partitions: lattice, shuffle arithmetic, Kreweras
complements, incidence coalgebras, and the simplicial picture.

The working objects are ``NoncrossingPartition`` instances; most users want
the lattice enumeration plus the partial product::

    >>> from noncross import NoncrossingPartition, compose, enumerate_ncp
    >>> a = NoncrossingPartition.parse("3: 1 2 | 3")
    >>> b = NoncrossingPartition.parse("3: 1 | 2 3")
    >>> print(compose(a, b))
    3: 1 2 3
    >>> compose(b, a) is None  # the product is partial
    True
    >>> len(enumerate_ncp(4))
    14
"""

from .backend import backend_name
from .errors import (
    BasisMismatchError,
    CrossingBlocksError,
    CrossingError,
    EmptyBlockError,
    InternalInvariantError,
    InvalidPartitionError,
    NoncrossError,
    NotACoverError,
    NotAdmissibleError,
    NotAMultichainError,
    NotCompleteError,
    NotCompletingError,
    NotDividingError,
    NotKPreservingError,
    OutOfBoundError,
    OutOfRangeError,
    OverlapError,
    ParseError,
    SizeMismatchError,
    TooLargeError,
    TooShallowError,
)
from .incidence import (
    Coalgebra,
    IncidenceFunction,
    LinCombo,
    convolve,
    cumulants_from_moments,
    delta_unit,
    divisibility_coalgebra,
    moebius,
    moments_from_cumulants,
    multiplicative_coalgebra,
    ncp_compose_coalgebra,
    ncp_interval_coalgebra,
    zeta,
)
from .kreweras import (
    complete_tuple,
    completing_to_tuple,
    compose,
    compose_many,
    kpreserving_to_tuple,
    kreweras,
    kreweras_order,
    multichain_to_tuple,
    relative_kreweras,
    tuple_to_completing,
    tuple_to_kpreserving,
    tuple_to_multichain,
)
from .lattice import (
    Interval,
    RelativeSublattice,
    count_ncp,
    divides,
    enumerate_ncp,
    interval_elements,
    iter_ncp,
    join,
    join_many,
    meet,
    meet_many,
    relative_sublattice,
)
from .partition import (
    NoncrossingPartition,
    Partition,
    concat,
    concat_many,
    empty,
    irreducible_components,
    is_irreducible,
    one,
    standardize,
    zero,
)
from .shuffle import (
    consecutive_blocks,
    enumerate_k_completing,
    is_admissible,
    is_admissible_tuple,
    is_k_completing,
    is_k_preserving,
    perfect_shuffle,
    power,
    root,
    shuffle_many,
)
from .simplicial import (
    SimplicialMap,
    TruncatedSimplicialSet,
    bar_of_integers,
    bar_of_ncp,
    check_iso,
    check_simplicial_identities,
    check_simplicial_map,
    check_two_segal,
    check_ulf,
    dec_map,
    integer_decalage_comparison,
    lower_decalage,
    ncp_decalage_comparison,
    nerve_of_divisibility,
    nerve_of_ncp,
)

__version__ = "0.1.0"

__all__ = [
    "BasisMismatchError",
    "Coalgebra",
    "CrossingBlocksError",
    "CrossingError",
    "EmptyBlockError",
    "IncidenceFunction",
    "InternalInvariantError",
    "Interval",
    "InvalidPartitionError",
    "LinCombo",
    "NoncrossError",
    "NoncrossingPartition",
    "NotACoverError",
    "NotAMultichainError",
    "NotAdmissibleError",
    "NotCompleteError",
    "NotCompletingError",
    "NotDividingError",
    "NotKPreservingError",
    "OutOfBoundError",
    "OutOfRangeError",
    "OverlapError",
    "ParseError",
    "Partition",
    "RelativeSublattice",
    "SimplicialMap",
    "SizeMismatchError",
    "TooLargeError",
    "TooShallowError",
    "TruncatedSimplicialSet",
    "backend_name",
    "bar_of_integers",
    "bar_of_ncp",
    "check_iso",
    "check_simplicial_identities",
    "check_simplicial_map",
    "check_two_segal",
    "check_ulf",
    "complete_tuple",
    "completing_to_tuple",
    "compose",
    "compose_many",
    "concat",
    "concat_many",
    "consecutive_blocks",
    "convolve",
    "count_ncp",
    "cumulants_from_moments",
    "dec_map",
    "delta_unit",
    "divides",
    "divisibility_coalgebra",
    "empty",
    "enumerate_k_completing",
    "enumerate_ncp",
    "integer_decalage_comparison",
    "interval_elements",
    "irreducible_components",
    "is_admissible",
    "is_admissible_tuple",
    "is_irreducible",
    "is_k_completing",
    "is_k_preserving",
    "iter_ncp",
    "join",
    "join_many",
    "kpreserving_to_tuple",
    "kreweras",
    "kreweras_order",
    "lower_decalage",
    "meet",
    "meet_many",
    "moebius",
    "moments_from_cumulants",
    "multichain_to_tuple",
    "multiplicative_coalgebra",
    "ncp_compose_coalgebra",
    "ncp_decalage_comparison",
    "ncp_interval_coalgebra",
    "nerve_of_divisibility",
    "nerve_of_ncp",
    "one",
    "perfect_shuffle",
    "power",
    "relative_kreweras",
    "relative_sublattice",
    "root",
    "shuffle_many",
    "standardize",
    "tuple_to_completing",
    "tuple_to_kpreserving",
    "tuple_to_multichain",
    "zero",
    "zeta",
]
