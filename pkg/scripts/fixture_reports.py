"""Write the full JSON analysis report for every named fixture and a few family members."""
import argparse
import json
import os

from abelham.analysis import analyze
from abelham.constructors import (
    FIXTURES,
    fixture_table,
    inflate,
    linear_quasigroup,
    multiplier,
    rect_band_product,
    zn,
)


def tables():
    for name in FIXTURES:
        yield name, fixture_table(name)
    yield "z12", zn(12)
    yield "rectband_z2_2x3", rect_band_product(zn(2), 2, 3)
    yield "inflated_rectband", inflate(rect_band_product(zn(2), 1, 2), {0: 1, 3: 2})
    yield "linear_z9_2_4_3", linear_quasigroup(zn(9), multiplier(9, 2), multiplier(9, 4), 3)


def main(argv=None) -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--out-dir", default="results/fixtures")
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)
    os.makedirs(args.out_dir, exist_ok=True)
    for name, t in tables():
        report = analyze(t, seed=args.seed)
        path = os.path.join(args.out_dir, f"{name}.json")
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
            fh.write("\n")
        ab, ham = report["abelian"], report["hamiltonian"]
        print(f"{name:20s} {report['classification']['kind']:10s} "
              f"abelian={ab['verdict']!s:5s} [{ab['route']}]  "
              f"hamiltonian={ham['verdict']!s:5s} [{ham['route']}]  consistent={report['consistent']}")


if __name__ == "__main__":
    main()
