"""The right-handed trefoil and its mirror image are told apart by A5.

Both knots have the same single surjection onto A5 up to conjugacy, but the
image of the meridian times the preferred longitude has order 1 for one and
order 5 for the other.
"""
from hkinv import chirality_table, enumerate_homs, mirror, parse_group, wirtinger
from hkinv.data import load_pd

a5 = parse_group("A5")
right = load_pd("3_1")
left = mirror(right)

for name, pd in [("right trefoil", right), ("left trefoil", left)]:
    k = wirtinger(pd)
    print(f"{name}: {k.format().splitlines()[-1]}")
    for h in enumerate_homs(k, a5, surjective_only=True):
        m, l = h.selected_images
        print(f"  m -> {m}   l -> {l}   m*l -> {m * l}")
    print("  table:", chirality_table(k, a5))
