"""Graded sparsity matroids on hypergraphs, solved with pebble games."""
from .hypergraph import (
    Edge,
    GradedHypergraph,
    GradingMode,
    HypergraphError,
    SparsityParams,
    build,
    dumps,
    load,
    restrict_to_level,
    span,
)
from .pebble_game import PebbleGame, new_game
from .solver import (
    Component,
    NotGradedSparse,
    SolveReport,
    Status,
    components,
    decide,
    extend,
    extract,
    optimize,
    spanning,
)

__version__ = "0.1.0"
