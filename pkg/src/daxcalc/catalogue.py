"""Worked examples run through the pipeline and compared with their known answers."""
from __future__ import annotations

from dataclasses import dataclass

from .abelian import INFINITE, AbelianGroup
from .assembler import ExtensionReport, theorem_c_report
from .dax import ParityContext, SpanSpec, framing_count, relations_quotient_group
from .frames import fiber_pi, unit_sphere_bundle_pi, z_ld_immersion
from .groups import cyclic_group, dihedral_group, free_group, quaternion_group, trivial_group
from .ring import RingElement
from .tables import UNKNOWN, sphere_pi


@dataclass(frozen=True)
class CatalogueCase:
    name: str
    statement: str
    computed: str
    expected: str

    @property
    def passed(self) -> bool:
        return self.computed == self.expected


def _vanish(values) -> bool:
    return all(v is not UNKNOWN and v.is_trivial for v in values)


def light_bulb_arcs() -> list[CatalogueCase]:
    d, k = 3, 1
    # pi_1 and pi_0 of the fiber S^2 vanish, and the handle does not change pi_1 (1 <= d - k - 1)
    ok = _vanish([fiber_pi(1, k - 1, d - k), fiber_pi(0, k - 1, d - k)]) and 1 <= d - k - 1
    out = [CatalogueCase("light bulb, d = 3, k = 1", "pi_0 Emb_s(D^1, M) = pi_1 M",
                         "pi_1 M" if ok else "undetermined", "pi_1 M")]
    # M = D^1 x S^2 has M_G = D^3, so Emb_s ~ Omega S^2
    trivial = AbelianGroup()
    pi0 = unit_sphere_bundle_pi(1, d, trivial)
    pi1 = unit_sphere_bundle_pi(2, d, trivial)
    out.append(CatalogueCase("arcs in D^1 x S^2", "pi_0 = 0 and pi_1 = Z", f"{pi0}, {pi1}", "0, Z"))
    return out


def arcs_split() -> list[CatalogueCase]:
    """pi_n Emb_s(D^1, M) = pi_(n+1) S^(d-1) + pi_(n+1) M_G."""
    out = []
    m_g = AbelianGroup(0, (3,))   # sample pi_(n+1) M_G supplied by the user
    for d in range(4, 12):
        g = unit_sphere_bundle_pi(d - 1, d, m_g)
        out.append(CatalogueCase(f"arcs, d = {d}", f"pi_{d - 2} Emb_s(D^1, M) contains Z",
                                 str(g), str(AbelianGroup(1, (3,)))))
    for n in range(1, 6):
        g = unit_sphere_bundle_pi(n + 1, 2, m_g)
        out.append(CatalogueCase(f"arcs, d = 2, n = {n}", "pi_n Emb_s(D^1, M) = pi_(n+1) M_G", str(g), str(m_g)))
    g = unit_sphere_bundle_pi(1, 2, AbelianGroup(2))
    out.append(CatalogueCase("arcs, d = 2, n = 0", "Z x pi_1 M_G acts simply transitively on components",
                             str(g), str(AbelianGroup(3))))
    return out


def codimension_one() -> list[CatalogueCase]:
    """k = d - 1: the S^1 fiber terms vanish for n > 0, and for n = 0 once d >= 4."""
    out = []
    for d in range(3, 13):
        k = d - 1
        for n in range(0, 6):
            if n == 0 and d < 4:
                continue
            vals = [fiber_pi(n, k - 1, 1), fiber_pi(n, k, 1)]
            out.append(CatalogueCase(f"k = d - 1, d = {d}, n = {n}", "S^1 fiber terms vanish",
                                     "0" if _vanish(vals) else "nonzero", "0"))
    return out


def top_dimension() -> list[CatalogueCase]:
    """k = d: S^0 fiber terms vanish, so Diff(D^d) = Omega Emb(D^(d-1), M')."""
    out = []
    for d in range(2, 13):
        for n in range(0, 6):
            vals = [fiber_pi(n, d - 1, 0), fiber_pi(n, d, 0)]
            out.append(CatalogueCase(f"k = d = {d}, n = {n}", "S^0 fiber terms vanish",
                                     "0" if _vanish(vals) else "nonzero", "0"))
    return out


def foliation_equivalences() -> list[CatalogueCase]:
    """The foliation map is an equivalence for d = k and d = k + 1 >= 3, and a pi_0 bijection for d > 2k."""
    out = []
    for k in range(1, 12):
        for d in (k, k + 1):
            if d < 3 and d != k:
                continue
            vals = [fiber_pi(n, k, d - k) for n in range(0, 6)] + [fiber_pi(n, k - 1, d - k) for n in range(1, 6)]
            out.append(CatalogueCase(f"foliation equivalence, k = {k}, d = {d}", "fiber groups vanish",
                                     "0" if _vanish(vals) else "nonzero", "0"))
    for k in range(1, 8):
        for d in range(2 * k + 1, 2 * k + 6):
            vals = [sphere_pi(k, d - k), sphere_pi(k - 1, d - k)]
            out.append(CatalogueCase(f"pi_0 bijection, k = {k}, d = {d}", "pi_k and pi_(k-1) of S^(d-k) vanish",
                                     "0" if _vanish(vals) else "nonzero", "0"))
    return out


def framed_arcs() -> list[CatalogueCase]:
    """Framed arcs in a 3-manifold: two framings with a dual, countably many without."""
    out = []
    ctx = ParityContext(1, 3)
    for spec in (trivial_group(), cyclic_group(2), cyclic_group(5), dihedral_group(3), quaternion_group(),
                 free_group(1), free_group(2)):
        one = RingElement.basis(spec.identity)
        n = framing_count(ctx, spec, SpanSpec.of([one]))
        out.append(CatalogueCase(f"framings with a dual, pi = {spec.describe()}", "exactly two framings",
                                 str(n), "2"))
    for spec in (trivial_group(), free_group(1), free_group(2)):
        n = framing_count(ctx, spec, SpanSpec())
        out.append(CatalogueCase(f"framings without md^eps, pi = {spec.describe()}", "countably many framings",
                                 "countably many" if n is INFINITE else str(n), "countably many"))
    return out


def dual_kills_kernel() -> list[CatalogueCase]:
    """With a dual, md hits every g != 1, so the kernel over Z[pi - 1] is zero."""
    out = []
    for spec in (cyclic_group(2), cyclic_group(3), dihedral_group(4), quaternion_group()):
        for ell, d in ((2, 5), (2, 6), (3, 8), (3, 9)):
            md = SpanSpec.of([RingElement.basis(g) for g in spec.elements() if g != spec.identity])
            rep = theorem_c_report(ell, d, spec, md)
            got = str(rep.kernel) if isinstance(rep, ExtensionReport) else "diagnosis"
            out.append(CatalogueCase(f"dual kills kernel, pi = {spec.describe()}, ell = {ell}, d = {d}",
                                     "Z[pi - 1]/(R + md) = 0", got, "0"))
    return out


def immersion_coefficients() -> list[CatalogueCase]:
    """The immersion coefficient group is Z[pi]/R for trivial pi."""
    out = []
    for ell in range(1, 6):
        for d in range(2 * ell, 2 * ell + 5):
            got = relations_quotient_group(ParityContext(ell, d), trivial_group())
            out.append(CatalogueCase(f"immersion coefficient, ell = {ell}, d = {d}", "Z_(ell,d) = Z[1]/R",
                                     str(got), str(z_ld_immersion(ell, d).group)))
    return out


SECTIONS = (
    ("light bulb", light_bulb_arcs),
    ("arcs", arcs_split),
    ("codimension one", codimension_one),
    ("top dimension", top_dimension),
    ("foliation map", foliation_equivalences),
    ("framed arcs", framed_arcs),
    ("dual kernel", dual_kills_kernel),
    ("immersion coefficients", immersion_coefficients),
)


def catalogue_check() -> list[tuple[str, list[CatalogueCase]]]:
    return [(name, fn()) for name, fn in SECTIONS]
