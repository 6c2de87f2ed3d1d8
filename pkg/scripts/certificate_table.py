"""Norm squares of the branching certificates and how fast their tails decay.

For every certificate of the acceptance cases this prints the summed value,
the last shell at a few truncation degrees, the fitted shell exponent (which
should be close to ``excess - 1``) and the degree at which a power-law tail
would drop below the target tolerance.

    python3 scripts/certificate_table.py --degrees 60,120,240 --target 1e-10
"""

import argparse
import math
from dataclasses import dataclass

from jackseries.acceptance import CERTIFICATE_CASES
from jackseries.branching import certify, scan_restriction, scan_tensor
from jackseries.hypergeo import growth_exponent


@dataclass
class Config:
    degrees: tuple = (60, 120)
    target: float = 1e-10
    k_max: int = 8


def _scan(setting, hkind, l, r, nu, k_max):
    if setting == "tensor":
        return scan_tensor(l, r, nu, k_max)
    return scan_restriction(hkind, l, r, nu, k_max)


def rows(cfg: Config):
    top = max(cfg.degrees)
    for case in CERTIFICATE_CASES:
        for cert in _scan(*case, cfg.k_max):
            shells = {}
            for n in cfg.degrees:
                done = certify(cert, n, 0.0)
                shells[n] = done.norm_square.last_shell_magnitude
            slope = growth_exponent(cert.params, top)
            last = shells[top]
            if last < cfg.target:
                needed = top
            elif slope < 0:
                # shell(N) ~ last * (N / top)^slope
                needed = math.ceil(top * (cfg.target / last) ** (1 / slope))
            else:
                needed = math.inf
            yield cert, done.norm_square.value, shells, slope, needed


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degrees", default="60,120")
    ap.add_argument("--target", type=float, default=1e-10)
    args = ap.parse_args()
    cfg = Config(tuple(int(v) for v in args.degrees.split(",")), args.target)

    head = ["case", "nu", "k", "excess", "value"] + [f"shell@{n}" for n in cfg.degrees] + ["slope", "N needed"]
    print("  ".join(f"{h:>12}" for h in head))
    for cert, value, shells, slope, needed in rows(cfg):
        name = f"{cert.hkind}({cert.l},{cert.r})"
        cells = [name, str(cert.nu), str(cert.k), str(cert.params.excess), f"{float(value):.6g}"]
        cells += [f"{shells[n]:.2e}" for n in cfg.degrees]
        cells += [f"{slope:.3f}", f"{needed:.3g}" if math.isfinite(needed) else "inf"]
        print("  ".join(f"{c:>12}" for c in cells))


if __name__ == "__main__":
    main()
