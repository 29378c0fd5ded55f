"""Run every catalogue case and print a pass/fail table."""
import argparse
from dataclasses import dataclass

from daxcalc.catalogue import catalogue_check


@dataclass
class Config:
    failures_only: bool = False


def main(cfg: Config) -> int:
    failed = 0
    for section, cases in catalogue_check():
        for c in cases:
            failed += not c.passed
            if cfg.failures_only and c.passed:
                continue
            mark = "pass" if c.passed else "FAIL"
            print(f"{mark:4}  {section:22}  {c.name:48}  {c.computed}  (expected {c.expected})")
    print(f"{failed} failures")
    return 1 if failed else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--failures-only", action="store_true")
    raise SystemExit(main(Config(**vars(p.parse_args()))))
