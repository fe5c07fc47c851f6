"""Finite-group invariants of the handcuff handlebody knot HK5_1.

Counts homomorphisms into A5, evaluates the G-index for both meridians and
the A5-image of meridians for HK5_1 and the four twisted versions obtained
by substituting the boundary elements.
"""
from hkinv import enumerate_homs, g_image, g_index, parse_group, substitute
from hkinv.data import load_presentation, load_rules

hk = load_presentation("HK5_1")
print(hk.format())

for spec in ("A5", "S4"):
    g = parse_group(spec)
    homs = enumerate_homs(hk, g)
    print(f"{spec}: {len(homs)} classes ({homs.raw_count} homomorphisms)")
    for role in ("m1", "m2"):
        print(f"  index for {role}: {g_index(hk, g, role, homs=homs)}")

a5 = parse_group("A5")
print("A5-image of meridians")
print(f"  {'HK5_1':6} {g_image(hk, a5).render(long=True)}")
for name, rule in load_rules("HK5_1").items():
    twisted = substitute(hk, rule)
    print(f"  {name:6} {g_image(twisted, a5).render(long=True)}")
