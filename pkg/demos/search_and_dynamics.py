"""
Finding equilibria instead of checking them
===========================================

Three ways to get an equilibrium in hand: run greedy dynamics until no
agent wants to add or drop a single edge, use a construction that is
guaranteed to work for its host class, or search the whole space on hosts
small enough to allow it. Instances travel as JSON files either way.
"""

from tempo_ncg import (
    InstanceFile,
    Setting,
    direct_terminal_profile,
    dumps_instance,
    greedy_dynamics,
    is_nash_equilibrium,
    lifetime2_tree_ne,
    loads_instance,
    random_host,
    realized_graph,
    two_terminal_ne,
)

# Start everyone with direct edges to all terminals and let agents take
# turns making single-edge improvements. The process settles quickly on
# small hosts, and the final silent round is a verified greedy equilibrium.
host = random_host(5, 2, seed=4, max_label=3)
start = direct_terminal_profile(host, Setting.GLOBAL)
result = greedy_dynamics(start, host, max_rounds=50)
print("dynamics converged:", result.converged, "after", result.rounds, "rounds")
print("final verdict:", result.report.verdict.value)
print("realized edges:", realized_graph(result.profile, host).time_edge_count)

# With exactly two terminals an equilibrium always exists and uses incident
# edges only, so one profile verifies in both settings.
profile = two_terminal_ne(host, Setting.LOCAL)
print("\ntwo-terminal profile:", is_nash_equilibrium(profile, host).verdict.value)

# Hosts whose labels stop at 2 always admit a spanning-tree equilibrium.
short_host = random_host(6, 3, seed=9, max_label=2)
tree_profile = lifetime2_tree_ne(short_host)
print("lifetime-2 tree edges:", realized_graph(tree_profile, short_host).time_edge_count)
print("tree verdict:", is_nash_equilibrium(tree_profile, short_host).verdict.value)

# Any host + profile pair round-trips through the canonical JSON format.
instance = InstanceFile(name="settled", host=host, profile=result.profile)
text = dumps_instance(instance)
print("\nserialized bytes:", len(text))
print("round trip intact:", loads_instance(text) == instance)
