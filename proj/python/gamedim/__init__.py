"""Metric dimension of combinatorial game graphs."""

from ._core import (
    ArgumentError,
    BoundExceeded,
    DomainError,
    FormatError,
    GamedimError,
    GameGraph,
    bishops,
    canonical,
    doubly_resolving_dimension,
    fox_geese,
    from_dsl,
    greedy_resolving_set,
    hats,
    is_resolving,
    kings,
    metric_dimension,
    nim,
    product,
    signed_distances,
    simplest_dyadic,
    verify_theorems,
)

__all__ = [
    "ArgumentError",
    "BoundExceeded",
    "DomainError",
    "FormatError",
    "GamedimError",
    "GameGraph",
    "bishops",
    "canonical",
    "doubly_resolving_dimension",
    "fox_geese",
    "from_dsl",
    "greedy_resolving_set",
    "hats",
    "is_resolving",
    "kings",
    "metric_dimension",
    "nim",
    "product",
    "signed_distances",
    "simplest_dyadic",
    "verify_theorems",
]
