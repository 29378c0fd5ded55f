"""Case logic for homotopy groups of frame bundles and Stiefel manifolds.

Everything here is closed-form: coefficient groups Z_{k,d}, the first
nonvanishing Stiefel groups, the BO_{m-1} extensions, images of the
universal Euler class, and which frame-bundle extensions split.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .abelian import AbelianGroup
from .tables import UNKNOWN, orthogonal_pi, sphere_pi

HOPF_DIMS = (2, 4, 8)       # rank n bundles over S^n with odd Euler number exist only here
HOPF_ODD = (1, 3, 7)


class CoefficientGroup(str, Enum):
    Z = "Z"
    Z2 = "Z/2"
    ZERO = "0"

    @property
    def group(self) -> AbelianGroup:
        return {"Z": AbelianGroup(1), "Z/2": AbelianGroup(0, (2,)), "0": AbelianGroup()}[self.value]

    def __str__(self):
        return self.value


class EulerImage(str, Enum):
    ZERO = "0"
    TWO_Z = "2Z"
    Z = "Z"
    UNKNOWN = "unknown"

    def __str__(self):
        return self.value


class SwConstraint(str, Enum):
    FORCED_ZERO = "forced_zero"
    POSSIBLY_NONZERO = "possibly_nonzero"


class Splitting(str, Enum):
    YES_WITH_ETA = "yes_with_eta"
    YES_ABSTRACT = "yes_abstract"
    NO_GENERAL_RULE = "no_general_rule"


@dataclass(frozen=True)
class ExtensionShape:
    kernel: CoefficientGroup
    cokernel: AbelianGroup
    split: str                      # "yes" | "no" | "unknown"
    splitting_witness: str | None = None
    middle: AbelianGroup | None = None
    note: str = ""

    def __post_init__(self):
        if self.split == "yes" and not self.splitting_witness:
            raise ValueError("a split extension needs a witness")


def _check_range(lo: int, hi: int, what: str):
    if not lo <= hi:
        raise ValueError(what)


def z_kd(k: int, d: int) -> CoefficientGroup:
    """Z for d - k even, Z/2 for d - k odd."""
    _check_range(1, k, "need k >= 1")
    _check_range(k, d, "need k <= d")
    return CoefficientGroup.Z if (d - k) % 2 == 0 else CoefficientGroup.Z2


def z_ld_immersion(ell: int, d: int) -> CoefficientGroup:
    """Fiber coefficient of immersed ell-disks: Z for ell = 1 or d - ell even, else Z/2."""
    _check_range(1, ell, "need ell >= 1")
    _check_range(2 * ell, d, "need d - 2 ell >= 0")
    if ell == 1 or (d - ell) % 2 == 0:
        return CoefficientGroup.Z
    return CoefficientGroup.Z2


def stiefel_first(k: int, d: int) -> AbelianGroup:
    """pi_{d-k} V_k(R^d), generated by the fiber sphere: Z if k = 1 or d - k even, else Z/2.

    For k = d this is pi_0 O(d), a two-point set; the group answer is the
    one the Euler-class argument produces.
    """
    _check_range(1, k, "need k >= 1")
    _check_range(k, d, "need k <= d")
    if k == 1 or (d - k) % 2 == 0:
        return AbelianGroup(1)
    return AbelianGroup(0, (2,))


def stiefel_pi(n: int, k: int, d: int):
    """pi_n V_k(R^d) up to the first nonvanishing degree; ``UNKNOWN`` above it."""
    _check_range(0, n, "need n >= 0")
    if n <= d - k - 1:
        return AbelianGroup()
    if n == d - k:
        return stiefel_first(k, d)
    return UNKNOWN


def bo_kernel(m: int) -> CoefficientGroup:
    if m % 2:
        return CoefficientGroup.Z
    return CoefficientGroup.ZERO if m in HOPF_DIMS else CoefficientGroup.Z2


def bo_cokernel(m: int) -> AbelianGroup:
    """pi_{m-1} BO by Bott periodicity, indexed by m mod 8."""
    r = m % 8
    if r in (1, 5):
        return AbelianGroup(1)
    if r in (2, 3):
        return AbelianGroup(0, (2,))
    return AbelianGroup()


def bo_extension(m: int) -> ExtensionShape:
    """``kernel >-> pi_{m-1} BO_{m-1} ->> pi_{m-1} BO``."""
    if m < 1:
        raise ValueError("need m >= 1")
    kernel, coker = bo_kernel(m), bo_cokernel(m)
    if m == 1:
        # BO_0 is a point: the case values are formal and no extension is claimed
        return ExtensionShape(kernel, coker, "unknown", None, None,
                              "m = 1: pi_0 BO_0 is a point, entries are the formal case values")
    middle = None
    split, witness = "unknown", None
    if kernel is CoefficientGroup.ZERO:
        middle, split, witness = coker, "yes", "trivial kernel"
    elif coker.is_trivial:
        middle, split, witness = kernel.group, "yes", "trivial cokernel"
    elif coker.torsion == () and coker.free_rank:
        split, witness = "yes", "free cokernel"
    elif m % 8 == 2 and m > 2:
        split, witness = "yes", "Kervaire: pi_{m-1} BO_{m-1} = Z/2 x Z/2 for m - 1 = 1 mod 8"
    if split == "yes" and middle is None:
        middle = kernel.group.direct_sum(coker)
    return ExtensionShape(kernel, coker, split, witness, middle)


def admits_extension(kernel: AbelianGroup, middle: AbelianGroup, cokernel: AbelianGroup) -> bool:
    """Necessary conditions for ``kernel >-> middle ->> cokernel``: ranks add,
    the torsion of the kernel embeds in that of the middle, the middle's
    torsion order divides the product of the outer torsion orders, and the
    middle needs no more generators than the two ends together."""
    if middle.free_rank != kernel.free_rank + cokernel.free_rank:
        return False
    if middle.torsion_order % kernel.torsion_order:
        return False
    if (kernel.torsion_order * cokernel.torsion_order) % middle.torsion_order:
        return False
    return middle.min_generators <= kernel.min_generators + cokernel.min_generators


def bo_middle_curated(m: int):
    """pi_{m-1} BO_{m-1} = pi_{m-2} O_{m-1} from the curated table."""
    return orthogonal_pi(m - 2, m - 1) if m >= 2 else UNKNOWN


def euler_image(ell: int, d: int, boundary_nonempty: bool = False,
                spherical_sw_vanishes: str = "unknown") -> EulerImage:
    """Image of the universal Euler class ``pi_{d-ell} V_ell -> Z``.

    ``spherical_sw_vanishes`` is ``"yes"``, ``"no"`` or ``"unknown"`` and only
    matters when d - ell is 2, 4 or 8 (Hopf invariant one).
    """
    _check_range(0, ell, "need ell >= 0")
    _check_range(ell, d, "need ell <= d")
    if spherical_sw_vanishes not in ("yes", "no", "unknown"):
        raise ValueError("spherical_sw_vanishes must be yes, no or unknown")
    if (d - ell) % 2:
        return EulerImage.ZERO
    if ell == 0:
        # the fiber is the whole bundle; only a section (nonempty boundary) pins the answer
        return EulerImage.ZERO if boundary_nonempty else EulerImage.UNKNOWN
    if d - ell not in HOPF_DIMS:
        return EulerImage.TWO_Z
    return {"yes": EulerImage.TWO_Z, "no": EulerImage.Z, "unknown": EulerImage.UNKNOWN}[spherical_sw_vanishes]


def sw_possibly_nonzero(ell: int, d: int) -> bool:
    """Can w_{d-ell}(TX) be nonzero on spherical classes of a compact d-manifold?
    Only if d - ell is 2, 4 or 8 and d <= 2 ell (Wu formula)."""
    return (d - ell) in HOPF_DIMS and d <= 2 * ell


def tangent_sw_constraint(k: int, d: int) -> SwConstraint:
    """For the tangent bundle: is the Euler image of ``pi_{d-k+1} V_{k-1}(X)``
    forced to be 2Z?  Exceptions are exactly k = d-1 >= 3, k = d-3 >= 5, k = d-7 >= 9."""
    _check_range(2, k, "need k >= 2")
    _check_range(k, d, "need k <= d")
    if sw_possibly_nonzero(k - 1, d):
        return SwConstraint.POSSIBLY_NONZERO
    return SwConstraint.FORCED_ZERO


def eta_w(e_rel: int, w_value: int) -> int:
    """Splitting value ``(e_rel - W)/2``; needs ``e_rel = W (mod 2)``."""
    if (e_rel - w_value) % 2:
        raise ValueError("W is not an integral lift on this class: e_rel and W differ in parity")
    return (e_rel - w_value) // 2


def splitting_exists(k: int, d: int, context: str = "general") -> tuple[Splitting, str]:
    """Does ``Z_{k,d} >-> pi_{d-k} V_k(xi) ->> pi_{d-k} X`` split?

    ``context`` is ``"tangent_bundle_of_compact_manifold"`` or ``"general"``.
    Returns the verdict together with the rule that decided it.
    """
    _check_range(2, k, "need k >= 2")
    _check_range(k, d, "need k <= d")
    if context not in ("tangent_bundle_of_compact_manifold", "general"):
        raise ValueError(f"unknown context {context!r}")
    tangent = context == "tangent_bundle_of_compact_manifold"
    c = d - k
    if c % 2 == 0:
        if c not in HOPF_DIMS:
            return Splitting.YES_WITH_ETA, "W = 0: spherical w_{d-k} vanishes off ranks 2, 4, 8"
        if tangent and d > 2 * k:
            return Splitting.YES_WITH_ETA, "W = 0: Wu formula kills spherical w_{d-k} when d > 2k"
        if tangent and d == 2 * k:
            return Splitting.YES_WITH_ETA, "integral lift W from the intersection form (middle dimension)"
        return Splitting.NO_GENERAL_RULE, "splittings correspond to integral lifts W, which need not exist"
    if c not in HOPF_ODD:
        return Splitting.YES_ABSTRACT, "Z/2 splitting depending only on the bundle (no explicit formula)"
    if tangent and tangent_sw_constraint(k, d) is SwConstraint.FORCED_ZERO:
        return Splitting.YES_ABSTRACT, "tangent bundle: Euler image is 2Z, extension by Z/2 splits"
    return Splitting.NO_GENERAL_RULE, "d - k in {1, 3, 7}: no general rule"


def unit_sphere_bundle_pi(n: int, d: int, pi_n_X):
    """pi_n V_1(xi) = pi_n S^{d-1} ⊕ pi_n X over a manifold with nonempty boundary (n >= 1)."""
    if n < 1:
        raise ValueError("need n >= 1")
    s = sphere_pi(n, d - 1)
    if s is UNKNOWN or pi_n_X is UNKNOWN or pi_n_X is None:
        return UNKNOWN
    return s.direct_sum(pi_n_X)


def fiber_pi(n: int, loops: int, sphere_dim: int):
    """pi_n of Omega^loops S^sphere_dim = pi_{n+loops} S^sphere_dim."""
    return sphere_pi(n + loops, sphere_dim)
