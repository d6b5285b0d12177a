"""
A dense equilibrium family
==========================

Most equilibria here are sparse. This family is the counterweight: a cyclic
arrangement of 2x bags whose cross-bag paths are unique, forcing agents into
strategies of about x/2 edges each and the realized graph to about
sqrt(k)*k/2 edges total. Uniqueness is what makes it stable: there is
nothing cheaper to reroute through.
"""

from tempo_ncg import (
    EquilibriumKind,
    dense_cycle_instance,
    dense_cycle_lemma_checks,
    equilibrium_certificates,
    is_greedy_equilibrium,
    is_nash_equilibrium,
    realized_graph,
)

# The structural facts the stability argument rests on, checked per size:
# every node meets exactly x cross edges, paths to the opposite side and
# beyond are unique, and the paths partition the cross-edge set.
for x in (2, 4, 6):
    checks = dense_cycle_lemma_checks(x)
    print(
        f"x={x}: {checks.node_count} nodes, {checks.cycle_edge_count} cycle edges,"
        f" {checks.connected_edge_count} realized edges, all checks ok: {checks.all_ok}"
    )

# The smallest member is small enough for a full exact Nash verification.
small = dense_cycle_instance(2)
print("\nx=2 exact verdict:", is_nash_equilibrium(small.profile, small.host).verdict.value)

# x=4 already has 32 agents; the single-edge (greedy) check is instant and
# the full deviation check is left to the test suite's slow lane.
big = dense_cycle_instance(4)
print("x=4 greedy verdict:", is_greedy_equilibrium(big.profile, big.host).verdict.value)
print("x=4 realized edges:", realized_graph(big.profile, big.host).time_edge_count)

# Every verified equilibrium must also clear its size certificates: the
# lifetime bound always, the density bound in the local setting, the
# k(n-1) bound for global Nash profiles.
for name, certificate in equilibrium_certificates(
    small.profile, small.host, EquilibriumKind.NASH
).items():
    print(f"x=2 certificate {name}: {certificate.value} vs {certificate.bound} -> {certificate.holds}")
