"""Square-commuting class pairs over the listed negative permutation types.

For each group and each negative case the script lists the class pairs that
do square-commute.  Every such pair is then rechecked over all ``(s, t)`` in
an independent model, signed permutation matrices ``diag(signs) * P(sigma)``,
so the result does not rest on the package's composition code.

    python scripts/reproduce_square_commuting.py [--family B --rank 4]
"""

import argparse

from weylnichols.groups import GroupSpec, WeylElement
from weylnichols.squarecomm import (
    NEGATIVE_CASES,
    negative_case_pairs,
    sign_condition_table,
)


def matrix(x: WeylElement) -> tuple:
    """``diag((-1)^bits) * P(sigma)`` with ``P(sigma) e_j = e_{sigma(j)}``."""
    n = x.rank
    bits = x.bits
    rows = [[0] * n for _ in range(n)]
    for j in range(n):
        i = x.perm.images[j]
        rows[i][j] = -1 if bits[i] else 1
    return tuple(tuple(r) for r in rows)


def mul(a: tuple, b: tuple) -> tuple:
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def matrix_square_commute(c1, c2) -> bool:
    for s in c1.elements:
        ms = matrix(s)
        for t in c2.elements:
            mt = matrix(t)
            st, ts = mul(ms, mt), mul(mt, ms)
            if mul(st, st) != mul(ts, ts):
                return False
    return True


def report(spec: GroupSpec) -> None:
    print(f"{spec}, order {spec.order()}")
    for case, (t1, t2) in NEGATIVE_CASES.items():
        try:
            rows = negative_case_pairs(spec, case)
        except ValueError:
            continue
        commuting = [(a, b) for a, b, ok in rows if ok]
        print(f"  {case} types ({t1}) x ({t2}): {len(rows)} class pairs, {len(commuting)} square-commutative")
        for a, b in commuting:
            confirmed = matrix_square_commute(a, b)
            print(f"      {a.label():<26} x {b.label():<26} matrix model agrees: {confirmed}")
    if spec.rank % 2 == 0:
        table = sign_condition_table(spec.rank, spec.family)
        agree = all(sc == same for _, _, sc, same in table)
        print(f"  type 2^{spec.rank // 2}: square-commutative iff parities agree: {agree} ({len(table)} class pairs)")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--family", choices=["B", "D"], action="append")
    ap.add_argument("--rank", type=int, action="append")
    args = ap.parse_args()
    for family in args.family or ["B", "D"]:
        for rank in args.rank or [3, 4]:
            report(GroupSpec(family, rank))


if __name__ == "__main__":
    main()
