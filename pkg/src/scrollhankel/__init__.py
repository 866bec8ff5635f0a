"""Ideals generated by 2-minors of generic Hankel matrices indexed by closed graphs."""

from .closed_graphs import (
    ClosedGraph,
    combine,
    complete,
    enumerate_connected_closed,
    from_edges,
    from_facets,
    line,
    parse_graph_spec,
)
from .groebner import (
    GroebnerBasis,
    Ideal,
    MonomialIdeal,
    buchberger,
    contains,
    ideal_equal,
    initial_ideal,
    intersect,
    krull_dimension,
    radical_membership,
)
from .hankel import MinorSpec, ScrollGen, hankel_minor, pair_ideal, scroll_ideal, telescoping_decomposition
from .polynomial import (
    DEGREVLEX,
    LEX,
    QQ,
    MonomialOrder,
    Polynomial,
    PrimeField,
    RingSpec,
    normal_form,
    parse_polynomial,
    s_polynomial,
)

__version__ = "0.1.0"
