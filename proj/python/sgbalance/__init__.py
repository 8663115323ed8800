"""Structural balance measures for signed directed networks.

The package evaluates balance at three levels:

* micro — triad census and the balanced-transitive-triad share ``T``
  (:func:`census`),
* meso — cohesiveness ``C`` and divisiveness ``D`` of a bipartition
  (:func:`meso`, :func:`meso_report`),
* macro — the frustration index ``L`` and its normalization ``F``
  (:func:`solve`, :func:`enumerate_optima`, :func:`lower_bound`,
  :func:`local_search`, :func:`normalized_F`).

Graphs are built from ``(source, target, sign)`` triples with signs in
``{+1, -1}`` (:func:`build_graph`) or ingested from edge-list CSV /
GML files (:func:`read_csv`, :func:`apply_sign_rule`, :func:`read_gml`).
Partitions cross the boundary as ``{node id: side}`` dicts with sides in
``{0, 1}``.
"""

from sgbalance._core import (
    BalanceError,
    SignedDigraph,
    apply_sign_rule,
    build_graph,
    census,
    clustering_coefficient,
    enumerate_optima,
    frustration_count,
    local_search,
    lower_bound,
    meso,
    meso_report,
    normalized_F,
    pearson,
    read_csv,
    read_gml,
    solve,
    switch,
    symmetrize,
)

__version__ = "1.0.0"

__all__ = [
    "BalanceError",
    "SignedDigraph",
    "apply_sign_rule",
    "build_graph",
    "census",
    "clustering_coefficient",
    "enumerate_optima",
    "frustration_count",
    "local_search",
    "lower_bound",
    "meso",
    "meso_report",
    "normalized_F",
    "pearson",
    "read_csv",
    "read_gml",
    "solve",
    "switch",
    "symmetrize",
    "__version__",
]
