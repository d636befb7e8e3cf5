"""Check that the quasigroup fast decider gives the same verdict at every base point.

Samples random Latin squares of each order and reports how many were Abelian,
how many disagreed across base points, and how many disagreed with the oracle.
"""
import argparse

from abelham.constructors import random_latin_square
from abelham.oracles import abelian_oracle
from abelham.quasigroup import quasigroup_abelian_fast, square_root_spectrum


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--orders", type=int, nargs="+", default=[3, 4, 5, 6, 7])
    p.add_argument("--sample", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)
    bad_total = 0
    print("order,tables,abelian,base_disagreements,oracle_disagreements,nonuniform_spectrum")
    for n in args.orders:
        abelian = base_bad = oracle_bad = nonuniform = 0
        for k in range(args.sample):
            t = random_latin_square(n, args.seed * 1_000_003 + k)
            verdicts = {quasigroup_abelian_fast(t, a).value for a in range(n)}
            oracle = abelian_oracle(t)
            abelian += bool(oracle)
            base_bad += len(verdicts) > 1
            oracle_bad += verdicts != {oracle}
            nonuniform += not square_root_spectrum(t).uniform
        bad_total += base_bad + oracle_bad
        print(f"{n},{args.sample},{abelian},{base_bad},{oracle_bad},{nonuniform}")
    return 2 if bad_total else 0


if __name__ == "__main__":
    raise SystemExit(main())
