#!/usr/bin/env python3
# Fractional intersection profiles: for each tuple size k, the fraction
# alpha of k-tuples of members with a common point, and the largest
# intersecting subfamily as a fraction beta of the family.  Families with
# bounded comatching number cannot have alpha high while beta stays low;
# the profile makes that trade-off visible on concrete systems.

from comatch import (
    comatching_number,
    fractional_helly_profile,
    gen_cycle_sharpness,
    gen_hamming_system,
)

for label, system in (
    ("cycle sharpness M=2", gen_cycle_sharpness(2)),
    ("cycle sharpness M=3", gen_cycle_sharpness(3)),
    ("hamming n=3 t=1", gen_hamming_system(3, 1, 2)),
):
    tau, _, _ = comatching_number(system)
    print(f"=== {label}: {system.num_members} members, tau = {tau}")
    for k in range(1, min(system.num_members, tau + 2) + 1):
        profile = fractional_helly_profile(system, k)
        print(
            f"  k={k}: {profile.intersecting_tuples} intersecting tuples, "
            f"alpha = {profile.alpha}, beta = {profile.beta}"
        )
    print()
