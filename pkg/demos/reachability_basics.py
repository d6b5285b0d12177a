"""
Temporal reachability from the ground up
========================================

A temporal graph is an undirected graph whose edges carry integer time
labels. A path is only usable if its labels never decrease along the way,
so reachability is a directional, time-sensitive notion even though every
single edge is symmetric.
"""

from tempo_ncg import (
    TemporalGraph,
    TimeEdge,
    earliest_arrivals,
    reach_set,
    validate_and_normalize_host,
)

# Four nodes on a line, but the labels force a detour: the direct chain
# a-b-c-d is not traversable left to right because 3 > 1 breaks at b-c.
graph = TemporalGraph(
    ["a", "b", "c", "d"],
    [
        TimeEdge("a", "b", 3),
        TimeEdge("b", "c", 1),
        TimeEdge("c", "d", 4),
        TimeEdge("a", "d", 2),
    ],
)

arrivals = earliest_arrivals(graph, "a")
print("earliest arrivals from a:", dict(arrivals.arrival))

# c is reachable, but only the long way around: a -(2)- d -(4)- c.
path = arrivals.path_to("c")
print("path to c:", [(e.u, e.v, e.label) for e in path])

# The reach set is everything with an arrival time.
print("reach of a:", sorted(reach_set(graph, "a")))
print("reach of b:", sorted(reach_set(graph, "b")))

# A host graph for the game must offer every pair at some label. Labels only
# matter through their relative order; normalization compresses them to
# 1..#distinct and is a no-op the second time.
complete = graph.with_time_edges([TimeEdge("a", "c", 9), TimeEdge("b", "d", 9)])
host = validate_and_normalize_host(complete, terminals=["a", "d"])
print("normalized labels:", sorted({e.label for e in host.graph.time_edges()}))
again = validate_and_normalize_host(host.graph, host.terminals)
print("stable under repetition:", again == host)
