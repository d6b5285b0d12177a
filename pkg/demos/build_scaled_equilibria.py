"""
Growing equilibria: products, satellites, extensions
====================================================

Small equilibria can be combined and grown without re-searching. The graph
product multiplies two equilibrium instances into one on the product node
set; satellite scaling pads an instance with non-terminals; and single-node
extensions add one terminal or non-terminal at a time. All outputs are
verified exactly here, not taken on faith.
"""

from tempo_ncg import (
    Setting,
    Verdict,
    extend_with_nonterminal,
    extend_with_terminal,
    graph_product,
    hypercube_equilibrium,
    is_nash_equilibrium,
    scale_with_nonterminals,
)

# One edge, two terminals, one buyer: the smallest equilibrium there is.
host1, profile1 = hypercube_equilibrium(1)
print("start:", host1.node_count, "nodes,", profile1.total_purchases(), "edge bought")

# The product of an instance with itself doubles the dimension. Iterating
# gives hypercubes: dimension d has d * 2^(d-1) bought edges, labels 1..d.
square_host, square_profile = graph_product(host1, profile1, host1, profile1)
print("squared:", square_host.node_count, "nodes,", square_profile.total_purchases(), "edges")
cube_host, cube_profile = hypercube_equilibrium(3)
print("cubed:", cube_host.node_count, "nodes,", cube_profile.total_purchases(), "edges")
print("cube verdict:", is_nash_equilibrium(cube_profile, cube_host).verdict.value)

# Scaling by c replaces every node with itself plus c-1 satellite
# non-terminals. Terminal count stays put while the node count triples,
# which is how sparse-optimum, dense-equilibrium gaps are manufactured.
big_host, big_profile = scale_with_nonterminals(cube_host, cube_profile, 3)
print(
    "\nscaled:", big_host.node_count, "nodes,",
    big_host.terminal_count, "terminals,",
    big_profile.total_purchases(), "edges bought",
)
assert is_nash_equilibrium(big_profile, big_host).verdict is Verdict.EQUILIBRIUM

# Extensions grow an equilibrium one node at a time. A non-terminal costs
# exactly one extra edge; a terminal costs at most two.
ext_host, ext_profile = extend_with_nonterminal(cube_host, cube_profile)
print(
    "\n+non-terminal:", ext_host.node_count, "nodes,",
    ext_profile.total_purchases(), "edges,",
    is_nash_equilibrium(ext_profile, ext_host).verdict.value,
)
t_host, t_profile = extend_with_terminal(cube_host, cube_profile)
print(
    "+terminal:", t_host.terminal_count, "terminals,",
    t_profile.total_purchases(), "edges,",
    is_nash_equilibrium(t_profile, t_host).verdict.value,
)
