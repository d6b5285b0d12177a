"""
How bad can stability get?
==========================

The social optimum is the minimum terminal spanner: the fewest time edges
that let every node reach every terminal. Equilibria can be forced well
above it. This script builds the ratio table, then shows the other side of
the coin: pruning any host down to a minimal spanner and assigning each
edge to a node that needs it always lands on a greedy equilibrium, and
doing that to the exact optimum costs nothing at all.
"""

from tempo_ncg import (
    EquilibriumKind,
    Verdict,
    build_poa_record,
    dense_cycle_instance,
    ge_from_minimal_spanner,
    hypercube_equilibrium,
    is_greedy_equilibrium,
    min_terminal_spanner,
    random_host,
    records_to_csv,
    scale_with_nonterminals,
    social_cost,
)

records = []

host1, profile1 = hypercube_equilibrium(1)
record, _ = build_poa_record("single-pair", host1, profile1)
records.append(record)

dense = dense_cycle_instance(2)
record, _ = build_poa_record("dense-cycle-x2", dense.host, dense.profile)
records.append(record)

cube_host, cube_profile = hypercube_equilibrium(3)
big_host, big_profile = scale_with_nonterminals(cube_host, cube_profile, 3)
record, _ = build_poa_record("scaled-hypercube", big_host, big_profile)
records.append(record)

# Each row verifies its equilibrium first and computes the optimum exactly
# where the search allows (all three do here; the scaled host even has a
# one-label spanning tree, settling its optimum at n-1 on the spot).
print(records_to_csv(records))

# The flip side: social cost at the best equilibrium. Prune any host to an
# inclusion-minimal spanner, give every edge to a node that loses a terminal
# without it, and the result is greedy-stable.
host = random_host(5, 3, seed=11, max_label=3)
optimum = min_terminal_spanner(host)
best = ge_from_minimal_spanner(optimum, host)
assert is_greedy_equilibrium(best, host).verdict is Verdict.EQUILIBRIUM
cost = social_cost(best, host)
print("optimum edges:", optimum.time_edge_count)
print("greedy equilibrium on the optimum, cost:", (cost.unreached_terminals, cost.edges_bought))
