"""Print the extensions kernel >-> pi_(m-1) BO_(m-1) ->> pi_(m-1) BO for a range of m."""
import argparse
from dataclasses import dataclass

from daxcalc.frames import admits_extension, bo_extension, bo_middle_curated
from daxcalc.tables import UNKNOWN


@dataclass
class Config:
    top: int = 24


def main(cfg: Config):
    print(f"{'m':>3}  {'kernel':6}  {'cokernel':8}  {'middle':8}  {'split':7}  curated")
    for m in range(1, cfg.top + 1):
        ext = bo_extension(m)
        cur = bo_middle_curated(m)
        tag = "" if cur is UNKNOWN else f"{cur} ({'ok' if admits_extension(ext.kernel.group, cur, ext.cokernel) else 'BAD'})"
        middle = "?" if ext.middle is None else str(ext.middle)
        print(f"{m:>3}  {ext.kernel.value:6}  {str(ext.cokernel):8}  {middle:8}  {ext.split:7}  {tag}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--top", type=int, default=Config.top)
    main(Config(**vars(p.parse_args())))
