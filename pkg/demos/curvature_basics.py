"""
Exact curvature on small graphs
===============================

Every number below is a Fraction; nothing is rounded.
"""

from fractions import Fraction

from ricciflat import curvature_report, kappa, kappa_p, mu, w1
from ricciflat.named import complete_graph, cycle_graph, petersen

# The lazy measure keeps mass p at the centre and spreads the rest evenly.
g = petersen()
print(mu(g, 0, Fraction(1, 4)))

# W1 comes with an optimal plan whose marginals are the two measures.
value, plan = w1(g, mu(g, 0, Fraction(1, 4)), mu(g, 1, Fraction(1, 4)))
print("W1 =", value)
for (s, t), mass in sorted(plan.items()):
    print(f"  {s} -> {t}: {mass}")

# Idleness 1 moves nothing, so kappa_p vanishes.
print("kappa_1 =", kappa_p(g, 0, 1, 1))

# The limiting curvature on regular graphs.
for name, h in [("C5", cycle_graph(5)), ("C8", cycle_graph(8)), ("K4", complete_graph(4))]:
    print(name, kappa(h, 0, 1))

# A full report, as the CLI prints it.
print(curvature_report(g).table())
