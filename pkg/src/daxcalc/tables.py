"""Curated homotopy-group tables shipped as checksummed text files.

Each data line is ``n m free_rank t1 t2 ...`` describing pi_n of the m-th
space of the table.  ``CALC_DATA_DIR`` overrides the directory.
"""
from __future__ import annotations

import hashlib
import os
from functools import lru_cache
from pathlib import Path

from .abelian import AbelianGroup

DATA_DIR = Path(__file__).with_name("data")


class TableError(RuntimeError):
    pass


class _Unknown:
    """Result for values outside the curated range; never a guess."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNKNOWN"

    def __str__(self):
        return "unknown"

    def __bool__(self):
        return False


UNKNOWN = _Unknown()


def data_dir() -> Path:
    return Path(os.environ.get("CALC_DATA_DIR") or DATA_DIR)


def _checksums(directory: Path) -> dict[str, str]:
    sums = directory / "SHA256SUMS"
    if not sums.exists():
        raise TableError(f"missing checksum file {sums}")
    out = {}
    for line in sums.read_text(encoding="utf-8").splitlines():
        if line.strip():
            digest, name = line.split()
            out[name.lstrip("*")] = digest
    return out


@lru_cache(maxsize=None)
def _load(directory: str, name: str) -> dict[tuple[int, int], AbelianGroup]:
    path = Path(directory) / name
    raw = path.read_bytes()
    expected = _checksums(Path(directory)).get(name)
    if expected is None:
        raise TableError(f"{name} is not listed in SHA256SUMS")
    if hashlib.sha256(raw).hexdigest() != expected:
        raise TableError(f"checksum mismatch for {path}")
    table = {}
    for lineno, line in enumerate(raw.decode("utf-8").splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = [int(x) for x in line.split()]
        if len(fields) < 3:
            raise TableError(f"{name}:{lineno}: expected 'n m rank [torsion...]'")
        n, m, rank, *torsion = fields
        if (n, m) in table:
            raise TableError(f"{name}:{lineno}: duplicate entry for ({n}, {m})")
        table[(n, m)] = AbelianGroup(rank, tuple(torsion))
    return table


def load_table(name: str) -> dict[tuple[int, int], AbelianGroup]:
    return _load(str(data_dir()), name)


def sphere_table() -> dict[tuple[int, int], AbelianGroup]:
    return load_table("sphere_groups.txt")


def orthogonal_table() -> dict[tuple[int, int], AbelianGroup]:
    return load_table("orthogonal_groups.txt")


def sphere_pi(n: int, m: int):
    """pi_n(S^m) as an :class:`AbelianGroup`, or ``UNKNOWN``.

    Rules outside the file: pi_n S^m = 0 for n < m; S^0 is discrete and S^1
    is aspherical.  pi_0 is a pointed set rather than a group, so pi_0 S^0
    is reported as unknown; pi_0 S^m = 0 for m >= 1.
    """
    if n < 0 or m < 0:
        raise ValueError("sphere_pi needs n, m >= 0")
    if m == 0:
        return AbelianGroup() if n >= 1 else UNKNOWN
    if n < m:
        return AbelianGroup()
    if m == 1:
        return AbelianGroup(1) if n == 1 else AbelianGroup()
    return sphere_table().get((n, m), UNKNOWN)


def orthogonal_pi(n: int, m: int):
    """pi_n(O_m) from the curated low-dimensional table, or ``UNKNOWN``."""
    return orthogonal_table().get((n, m), UNKNOWN)
