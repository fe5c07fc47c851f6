"""The backtracking search against exhaustive enumeration.

For small targets every assignment of generator images can be tested
directly. Both methods must produce the same classes with the same orbit
sizes.
"""
import time

from hkinv import brute_force_enumerate, enumerate_homs, parse_group, wirtinger
from hkinv.data import load_pd, load_presentation

cases = {"trefoil": wirtinger(load_pd("3_1")),
         "HK5_1 (3 generators)": load_presentation("HK5_1_appcontour")}
for spec in ("S3", "A4", "S4"):
    g = parse_group(spec)
    for name, p in cases.items():
        t0 = time.perf_counter()
        fast = enumerate_homs(p, g)
        t1 = time.perf_counter()
        slow = brute_force_enumerate(p, g)
        t2 = time.perf_counter()
        same = [h.images for h in fast] == [h.images for h in slow]
        print(f"{spec} {name:22} classes {len(fast):3}  homs {fast.raw_count:6}  "
              f"search {t1 - t0:.3f}s  brute {t2 - t1:.3f}s  agree={same}")
