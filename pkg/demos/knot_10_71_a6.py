"""Chirality of 10_71 detected through A6.

Classes are taken up to conjugation in S6. Using the full automorphism group
of A6 instead merges some of them, which is shown at the end.
"""
import time

from hkinv import chirality_table, enumerate_homs, mirror, parse_group, wirtinger
from hkinv.data import load_pd

a6 = parse_group("A6")
pd = load_pd("10_71")
for name, d in [("10_71", pd), ("mirror", mirror(pd))]:
    t0 = time.perf_counter()
    k = wirtinger(d)
    homs = enumerate_homs(k, a6)
    t = chirality_table(k, a6, all_classes=True, homs=homs)
    print(f"{name}: {len(homs)} classes in {time.perf_counter() - t0:.1f}s")
    print(f"  by meridian order: {t.marginal()}")
    print(f"  table: {t}")

full = enumerate_homs(wirtinger(pd), a6.with_action("full"))
print(f"up to Aut(A6): {len(full)} classes")
