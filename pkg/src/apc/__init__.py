"""Alternating cycles in 2-edge-colored colored generalized sums of cycles."""

from apc.analysis import (
    check_hypotheses,
    find_good_cycles,
    find_good_pairs,
    parallel_partition,
    singular_vertices,
    verify_lemma4,
)
from apc.cgs import CgsInstance, Summand, build_cgs, generate_no_good_pair, generate_random
from apc.documents import dumps_instance, loads_instance
from apc.graph import BLUE, RED, ColoredGraph, CycleSeq, EdgeColor, is_alternating_cycle
from apc.oracle import brute_vertex_pancyclic, enumerate_alternating_cycles
from apc.synthesis import certify_vertex_pancyclic, merge_with_good_pair, pancyclic_cycle

__version__ = "0.1.0"

__all__ = [
    "BLUE",
    "RED",
    "CgsInstance",
    "ColoredGraph",
    "CycleSeq",
    "EdgeColor",
    "Summand",
    "brute_vertex_pancyclic",
    "build_cgs",
    "certify_vertex_pancyclic",
    "check_hypotheses",
    "dumps_instance",
    "enumerate_alternating_cycles",
    "find_good_cycles",
    "find_good_pairs",
    "generate_no_good_pair",
    "generate_random",
    "is_alternating_cycle",
    "loads_instance",
    "merge_with_good_pair",
    "pancyclic_cycle",
    "parallel_partition",
    "singular_vertices",
    "verify_lemma4",
]
