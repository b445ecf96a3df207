#!/usr/bin/env python3
# Radius-t Hamming balls over binary words.  At radius 1 the invariants
# already reach their ceiling at word length 4: comatching number 4,
# with-intersection number 3, Helly number 4 (= 2^(t+1) and 2^(t+1) - 1).

from comatch import (
    comatching_number,
    comatching_with_intersection_number,
    gen_hamming_system,
    helly_number,
    minimal_empty_subfamilies,
)

for n, t in ((2, 0), (3, 1), (4, 1)):
    system = gen_hamming_system(n, t, q=2)
    ball = len(system.member_elements(0))
    tau, cert, _ = comatching_number(system)
    taup, _, _ = comatching_with_intersection_number(system)
    h = helly_number(system)
    minimal = minimal_empty_subfamilies(system)
    print(f"n={n} t={t}: {system.num_members} balls of size {ball}")
    print(f"  tau = {tau}, tau' = {taup}, h = {h}, minimal empty subfamilies: {len(minimal)}")
    pairs = [(system.ground[p], system.member_name(j)) for p, j in cert.pairs]
    print(f"  largest comatching: {pairs}")
    print()

# The size-4 pattern lives on two coordinates: centers 00,01,10,11 (padded
# with zeros) and each point is the center's complement on those bits.
system = gen_hamming_system(4, 1, 2)
member = {system.member_name(j): j for j in range(system.num_members)}
points = {"0000": "1100", "0100": "1000", "1000": "0100", "1100": "0000"}
for c, missed in points.items():
    ball = system.member_elements(member[f"B({c})"])
    inside = [p for p in points.values() if system.ground.index(p) in ball]
    print(f"B({c}) contains {sorted(inside)} and misses {missed}")
