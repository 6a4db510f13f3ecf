"""Build Aut(S6) from the explicit outer automorphism and compare with brute force."""

import time
from collections import Counter

from gcgraph.aut import aut_group_bruteforce, is_closed, is_involutory, s6_automorphisms, s6_delta, s6_phi
from gcgraph.group import symmetric
from gcgraph.perm import cycle_type

G = symmetric(6)
phi, delta = s6_phi(G), s6_delta(G)
print("phi order", phi.order(), " delta order", delta.order())
for t in ("(12)", "(13)", "(14)", "(15)", "(16)"):
    x = G.element(t)
    print(f"  {t}: phi -> {G.label_of(phi(x))}, delta -> {G.label_of(delta(x))}")

t0 = time.perf_counter()
family = s6_automorphisms(G)
print(f"family: {len(set(family))} maps, closed={is_closed(G, family)} ({time.perf_counter() - t0:.1f}s)")
print("involutions in Aut(S6):", sum(is_involutory(a) for a in family))
print("orders of outer maps:", dict(sorted(Counter(a.order() for a in family[720:]).items())))

t0 = time.perf_counter()
brute = aut_group_bruteforce(G)
print(f"brute force: {len(brute)} maps, agree={set(brute) == set(family)} ({time.perf_counter() - t0:.1f}s)")

moved = Counter((cycle_type(G.elements[g]), cycle_type(G.elements[delta(g)])) for g in range(len(G)))
print("delta on cycle types:")
for (src, dst), k in sorted(moved.items()):
    if src != dst:
        print(f"  {src} -> {dst}  x{k}")
