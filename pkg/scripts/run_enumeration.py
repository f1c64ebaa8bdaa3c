"""Tally verdicts over an exhaustive enumeration of small partial actions.

    python scripts/run_enumeration.py --monoid "g0(cyclic_group(2))" --max-carrier 3 --filter ideal

For every carrier of order up to --max-carrier (up to isomorphism) it
counts actions, local confluence, globalizability verdicts and any
disagreement between the rewriting check and the direct-definition oracle.
"""

import argparse
import collections
import time

from parwb import algebra_core as ac
from parwb import rewriting as rw
from parwb import workbench as wb
from parwb.criteria import build_report
from parwb.formats import monoid_from_json


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--monoid", default="one_zero()")
    p.add_argument("--max-carrier", type=int, default=3)
    p.add_argument("--filter", action="append", default=[], choices=wb.FILTERS)
    p.add_argument("--oracle-len", type=int, default=0, help="also run the direct oracle up to this length")
    args = p.parse_args()

    M = monoid_from_json(args.monoid)
    tally = collections.Counter()
    disagreements = []
    t = time.perf_counter()
    for n in range(1, args.max_carrier + 1):
        for X in ac.all_semigroups(n):
            for a in wb.enumerate_partial_actions(M, X, tuple(args.filter), cap=(M.n, args.max_carrier)):
                tally["actions"] += 1
                rep = build_report(a, confluence=False)
                tally["globalizable " + rep.globalizable.status] += 1
                conf = rw.is_locally_confluent(a).locally_confluent
                tally[f"locally_confluent {conf}"] += 1
                if args.oracle_len and wb.oracle_local_confluence(a, args.oracle_len, cap=10 ** 7) != conf:
                    disagreements.append(a.maps)
    for k in sorted(tally):
        print(f"{k:<32} {tally[k]}")
    if args.oracle_len:
        print(f"oracle disagreements           {len(disagreements)}")
    print(f"elapsed {time.perf_counter() - t:.1f} s")


if __name__ == "__main__":
    main()
