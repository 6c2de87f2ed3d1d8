"""Partial sums of 2F1(1, 1; c; 1^r) on both sides of the convergence boundary.

The predicate says the series converges iff ``excess = 2 - c + (a/2)(r-1) < 0``.
For each (r, a) the denominator ``c`` is swept across the critical value and
the partial sums at a few degrees are printed next to the predicate and the
fitted shell exponent.

    python3 scripts/convergence_boundary.py --max-degree 160
"""

import argparse
from dataclasses import dataclass, field
from fractions import Fraction

from jackseries.hypergeo import SeriesParams, convergent_at_one, empirically_bounded, growth_exponent, partial_sums_at_one


@dataclass
class Config:
    ranks: tuple = (1, 2, 3)
    mults: tuple = (Fraction(1), Fraction(2), Fraction(4))
    offsets: tuple = field(default_factory=lambda: tuple(Fraction(v, 2) for v in (-1, 0, 1, 2)))
    max_degree: int = 160


def sweep(cfg: Config):
    for r in cfg.ranks:
        for a in cfg.mults if r > 1 else cfg.mults[:1]:
            critical = 2 + a / 2 * (r - 1)
            for off in cfg.offsets:
                p = SeriesParams((1, 1), (critical + off,), r, a)
                sums = partial_sums_at_one(p, cfg.max_degree)
                yield p, convergent_at_one(p), empirically_bounded(p, cfg.max_degree), growth_exponent(p, cfg.max_degree), sums


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-degree", type=int, default=160)
    cfg = Config(max_degree=ap.parse_args().max_degree)
    n = cfg.max_degree
    checkpoints = (n // 4, n // 2, n)
    print(f"{'r':>2} {'a':>4} {'c':>6} {'excess':>7} {'pred':>5} {'emp':>5} {'slope':>7} "
          + " ".join(f"{'S@' + str(k):>10}" for k in checkpoints))
    mismatches = 0
    for p, pred, emp, slope, sums in sweep(cfg):
        mismatches += pred != emp
        print(f"{p.r:>2} {str(p.a):>4} {str(p.beta[0]):>6} {str(p.excess):>7} {str(pred):>5} {str(emp):>5} {slope:7.3f} "
              + " ".join(f"{float(sums[k]):10.5f}" for k in checkpoints))
    print(f"predicate vs empirical disagreements: {mismatches}")


if __name__ == "__main__":
    main()
