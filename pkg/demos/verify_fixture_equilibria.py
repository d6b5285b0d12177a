"""
Verifying equilibria and sweeping ownerships
============================================

Agents sit on the nodes of a host graph and buy time edges. Everyone wants
to reach every terminal, and among strategies that do, cheaper is better.
A profile is a Nash equilibrium when no single agent can strictly improve
by switching strategies. The verifier is exact: a refutation comes with a
concrete better response, and an equilibrium verdict means the full
deviation space was covered.
"""

from tempo_ncg import Setting, is_nash_equilibrium, realized_graph, sweep_ownership
from tempo_ncg.fixtures import fig4_instance, fig5_left_instance, fig5_right_instance

# This profile realizes a minimal terminal spanner, yet it is not stable:
# the three-edge buyer v3 can replace everything with one early edge.
forced = fig4_instance()
report = is_nash_equilibrium(forced.profile, forced.host)
print("forced profile verdict:", report.verdict.value)
w = report.witness
print("better response for", w.agent, "->", sorted((e.u, e.v, e.label) for e in w.strategy))

# Worse: no way of assigning those five edges to buyers is stable. The sweep
# enumerates all 4^5 ownerships, filters the hopeless ones, and verifies the
# rest exactly.
target = realized_graph(forced.profile, forced.host)
sweep = sweep_ownership(forced.host, target, Setting.GLOBAL)
print(
    f"ownership sweep: {sweep.total_assignments} assignments, "
    f"{sweep.survivors} survivors, {sweep.equilibrium_count} equilibria"
)

# The two settings are genuinely different. This profile is stable when
# agents may buy any edge (global), but its realized graph supports no
# stable ownership under the incident-edges-only rule (local)...
left = fig5_left_instance()
print("\nglobal-setting profile:", is_nash_equilibrium(left.profile, left.host).verdict.value)
left_sweep = sweep_ownership(left.host, realized_graph(left.profile, left.host), Setting.LOCAL)
print("local ownerships of the same graph:", left_sweep.equilibrium_count, "equilibria")

# ...and this one is stable locally while its graph has no stable global
# ownership among 6^8 candidates.
right = fig5_right_instance()
print("\nlocal-setting profile:", is_nash_equilibrium(right.profile, right.host).verdict.value)
right_sweep = sweep_ownership(right.host, realized_graph(right.profile, right.host), Setting.GLOBAL)
print(
    f"global ownerships of the same graph: {right_sweep.survivors} survive "
    f"the pre-filter out of {right_sweep.total_assignments}, "
    f"{right_sweep.equilibrium_count} are equilibria"
)
