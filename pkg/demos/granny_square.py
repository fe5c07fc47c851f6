"""Granny knot versus square knot.

The two connected sums have isomorphic groups, so any count of plain
homomorphisms agrees. Tracking where m and m*l go separates them.
"""
from hkinv import chirality_table, connected_sum, enumerate_homs, mirror, parse_group, wirtinger
from hkinv.data import load_pd

a5 = parse_group("A5")
t = load_pd("3_1")
knots = {"granny": connected_sum(t, t), "square": connected_sum(t, mirror(t))}

for name, pd in knots.items():
    k = wirtinger(pd)
    n = len(enumerate_homs(k, a5, surjective_only=True))
    print(f"{name}: {len(pd)} crossings, {n} surjective classes, "
          f"table {chirality_table(k, a5)}")
