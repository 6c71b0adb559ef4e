"""Chain graphs under the LWF and AMP Markov properties."""

from ._core import (
    ChainGraph,
    ChainGraphError,
    an_closure,
    at_closure,
    augmented,
    block_recursive_statements,
    certify,
    chain_components,
    co_closure,
    coincidence_witness,
    double_flags,
    enumerate_chain_graphs,
    enumerate_triples,
    equivalent,
    extended_subgraph,
    fingerprint_difference,
    flags,
    joint_covariance,
    lwf_amp_coincide,
    minimal_complexes,
    moral,
    separated,
    skeleton,
    spanned_subgraph,
)

__all__ = [
    "ChainGraph",
    "ChainGraphError",
    "an_closure",
    "at_closure",
    "augmented",
    "block_recursive_statements",
    "certify",
    "chain_components",
    "co_closure",
    "coincidence_witness",
    "double_flags",
    "enumerate_chain_graphs",
    "enumerate_triples",
    "equivalent",
    "extended_subgraph",
    "fingerprint_difference",
    "flags",
    "joint_covariance",
    "lwf_amp_coincide",
    "minimal_complexes",
    "moral",
    "separated",
    "skeleton",
    "spanned_subgraph",
]
