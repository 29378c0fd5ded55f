"""Z[pi]/R and Z[pi - 1]/R for small groups in both parities of d - ell.

Each entry is computed twice: from the pairing g <-> g^-1, and by Smith
normal form on the full group basis with one relation row per element.
"""
import argparse
import time
from dataclasses import dataclass

from daxcalc.abelian import Presentation
from daxcalc.dax import ParityContext, relations_quotient_group
from daxcalc.groups import (cyclic_group, dihedral_group, elementary_abelian_group, klein_four_group,
                            quaternion_group, symmetric_group)


@dataclass
class Config:
    max_cyclic: int = 8
    ell: int = 2


def full_basis_quotient(ctx, spec, drop_identity):
    els = [g for g in spec.elements() if not (drop_identity and g == spec.identity)]
    index = {g: i for i, g in enumerate(els)}
    rows = []
    for g in els:
        v = [0] * len(els)
        v[index[g]] += 1
        v[index[spec.invert(g)]] -= ctx.sign
        rows.append(tuple(v))
    return Presentation(len(els), tuple(rows)).group()


def main(cfg: Config) -> int:
    groups = [cyclic_group(n) for n in range(2, cfg.max_cyclic + 1)]
    groups += [klein_four_group(), symmetric_group(3), dihedral_group(4), quaternion_group(),
               elementary_abelian_group(2, 3)]
    t0 = time.perf_counter()
    bad = 0
    for spec in groups:
        for d in (2 * cfg.ell + 1, 2 * cfg.ell + 2):
            ctx = ParityContext(cfg.ell, d)
            for drop in (False, True):
                a = relations_quotient_group(ctx, spec, drop)
                b = full_basis_quotient(ctx, spec, drop)
                bad += a != b
                base = "Z[pi - 1]/R" if drop else "Z[pi]/R"
                print(f"{spec.describe():10} eps={ctx.sign:+d}  {base:12} {str(a):28} {'' if a == b else 'MISMATCH ' + str(b)}")
    print(f"{bad} mismatches in {time.perf_counter() - t0:.2f} s")
    return 1 if bad else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-cyclic", type=int, default=Config.max_cyclic)
    p.add_argument("--ell", type=int, default=Config.ell)
    raise SystemExit(main(Config(**vars(p.parse_args()))))
