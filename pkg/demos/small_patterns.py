"""Which small tournaments are locally forcing?

Walks through the two triangles by hand, then tallies verdicts over every
isomorphism class up to six vertices.
"""

from collections import Counter

from tourforce import Tournament, bundle, is_locally_forcing, necessary_conditions
from tourforce.tournament import enumerate_all

for name, H in (("cyclic triangle", Tournament.cyclic_triangle()), ("transitive triangle", Tournament.transitive(3))):
    b = bundle(H)
    print(f"{name}  ({H.code})")
    print(f"  p(x) = {b.p.to_text()}")
    print(f"  q(x) = {b.q.to_text()}")
    r = is_locally_forcing(H)
    print(f"  cliq={r.cliq_forcing} bip={r.bip_forcing} locally={r.locally_forcing} gcd degree={r.gcd_degree}")
    print()

print("h  classes  cliq  bip  locally  metric checks ok")
for h in range(3, 7):
    tally = Counter()
    for H in enumerate_all(h, up_to_iso=True):
        r = is_locally_forcing(H)
        tally["n"] += 1
        tally["cliq"] += r.cliq_forcing
        tally["bip"] += r.bip_forcing
        tally["loc"] += r.locally_forcing
        tally["ok"] += necessary_conditions(H).all_ok
    print(f"{h}  {tally['n']:7d}  {tally['cliq']:4d}  {tally['bip']:3d}  {tally['loc']:7d}  {tally['ok']:16d}")
