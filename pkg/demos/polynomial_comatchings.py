#!/usr/bin/env python3
# Comatchings from zero sets of degree-capped polynomials.  The vanishing
# pattern f_i(x_j) = 0 iff i != j forces the f_i to be linearly
# independent, so a comatching can never exceed the dimension C(D+d, d) of
# the polynomial space; at full size the constant 1 lies in their span,
# which rules out a common zero and caps the with-intersection variant one
# lower.  All arithmetic is exact rational.

from dataclasses import replace
from fractions import Fraction

from comatch import gen_poly_comatching, verify_poly_comatching
from comatch.constructions import evaluate_polynomial


def pretty(poly):
    parts = []
    for exps, coeff in poly:
        mono = "*".join(
            f"x{k + 1}^{e}" if e > 1 else f"x{k + 1}"
            for k, e in enumerate(exps)
            if e
        )
        parts.append(f"{coeff}" + (f"*{mono}" if mono else ""))
    return " + ".join(parts) or "0"


for d, cap in ((1, 1), (2, 1), (2, 2)):
    pc = gen_poly_comatching(d, cap)
    m = len(pc.polynomials)
    print(f"=== {d} variables, degree <= {cap}: m = C({cap}+{d},{d}) = {m}")
    for i, (poly, point) in enumerate(zip(pc.polynomials, pc.points)):
        values = [evaluate_polynomial(poly, q) for q in pc.points]
        print(f"  f{i + 1}({', '.join(str(x) for x in point)}) ... = {pretty(poly)}")
        assert values[i] != 0 and all(v == 0 for k, v in enumerate(values) if k != i)
    print(f"  verification: {verify_poly_comatching(pc).ok}")

    # Appending any claimed common zero triggers the span obstruction.
    with_common = replace(pc, common_point=tuple(Fraction(0) for _ in range(d)))
    verdict = verify_poly_comatching(with_common)
    print(f"  with a common point appended: ok={verdict.ok}")
    print(f"    first violation: {verdict.violations[0]}")
    print()
