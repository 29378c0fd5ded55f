import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import FINITE_16
from test_abelian import oracle_group
from daxcalc.abelian import AbelianGroup
from daxcalc.assembler import (Check, Diagnosis, ExtensionReport, ManifoldInput, ModuleData, ModuleError,
                               group_ring_injects, md_transfer_check, quotient_by_dual, theorem_c_report,
                               theorem_d_report, augmented_report)
from daxcalc.dax import SpanSpec
from daxcalc.groups import cyclic_group, free_group, quaternion_group, trivial_group
from daxcalc.ring import RingElement, parse_ring_element

TRIVIAL = trivial_group()
C2 = cyclic_group(2)
F1 = free_group(1)


def regular_module(spec) -> ModuleData:
    """Z[pi] as a left module over itself, basis indexed by the elements."""
    els = spec.elements()
    index = {g: i for i, g in enumerate(els)}
    n = len(els)
    actions = {}
    named = spec.generators or [(spec.labels[g], g) for g in els if g != spec.identity]
    for name, s in named:
        a = [[0] * n for _ in range(n)]
        for g in els:
            a[index[g]][index[spec.multiply(s, g)]] = 1
        actions[name] = a
    return ModuleData.build(n, (), actions)


def inp(d, k, pi=TRIVIAL, mod=None, G=(1,), **kw):
    mod = mod or ModuleData.build(len(G))
    return ManifoldInput(d=d, k=k, pi=pi, pi_dk=mod, G=tuple(G), lambda_UG_is_one=True, **kw)


def test_quotient_by_dual_examples():
    assert quotient_by_dual(inp(4, 2)).group == AbelianGroup()
    assert quotient_by_dual(inp(4, 2, G=(1, 0))).group == AbelianGroup(1)
    swap = ModuleData.build(2, (), {"g": [[0, 1], [1, 0]]})
    q = quotient_by_dual(inp(6, 2, C2, swap, (1, 0)))
    assert q.group == AbelianGroup() and q.orbit_size == 2 and not q.relative
    # the same answer from the full orbit fed to the sympy oracle
    assert oracle_group([[1, 0], [0, 1]], 2) == q.group


def test_quotient_by_dual_requires_attestation():
    with pytest.raises(ValueError):
        quotient_by_dual(ManifoldInput(4, 2, TRIVIAL, ModuleData.build(1), (1,)))


@pytest.mark.parametrize("spec", [g for g in FINITE_16 if g.is_finite], ids=lambda g: g.describe())
def test_regular_module_quotient_vanishes(spec):
    mod = regular_module(spec)
    G = [0] * mod.generators
    G[spec.elements().index(spec.identity)] = 1
    i = inp(6, 2, spec, mod, G)
    assert quotient_by_dual(i).group == AbelianGroup()
    assert group_ring_injects(i) is True


def test_free_group_dual_is_relative():
    swap = ModuleData.build(3, [(2, 2, 0)], {"a": [[0, 1, 0], [1, 0, 0], [0, 0, 1]]})
    q = quotient_by_dual(inp(6, 2, F1, swap, (1, 0, 0), orbit_bound=3))
    assert q.relative and q.orbit_bound == 3
    assert q.group == AbelianGroup(1)   # e1, e2 killed; Z/(2,2,0) leaves e3 free
    assert "relative" in str(q)


def test_inconsistent_actions_rejected():
    # g^2 = 1 but the matrix [[2]] squares to [[4]]
    with pytest.raises(ModuleError):
        ModuleData.build(1, (), {"g": [[2]]}).element_matrices(C2)
    assert ModuleData.build(1, (), {"g": [[-1]]}).element_matrices(C2)[1] == ((-1,),)
    bad = ModuleData.build(2, [(2, 0)], {"g": [[0, 1], [1, 0]]})
    with pytest.raises(ModuleError, match="relation lattice"):
        bad.element_matrices(C2)
    with pytest.raises(ModuleError, match="not a generator"):
        ModuleData.build(1, (), {"h": [[1]]}).element_matrices(C2)
    with pytest.raises(ModuleError, match="invertible"):
        ModuleData.build(1, (), {"a": [[2]]}).letter_matrices(F1)


def test_quaternion_sign_module():
    # i and j act by -1 on Z: a valid action since Q8 -> {+-1} kills k = ij twice
    Q = quaternion_group()
    mod = ModuleData.build(1, (), {"i": [[-1]], "j": [[-1]]})
    mats = mod.element_matrices(Q)
    assert mats[Q.parse("k")] == ((1,),)
    assert mats[Q.parse("i^2")] == ((1,),)


@pytest.mark.parametrize("d", range(4, 13))
@pytest.mark.parametrize("k", range(2, 11))
def test_trivial_pi_kernel_law(k, d):
    if not (k + 2 <= d <= 12) or (d - k) in (1, 3, 7):
        return
    covered = (d - k) % 2 == 0 or k == 2
    one = SpanSpec.of([RingElement.basis(())])
    rep = theorem_d_report(inp(d, k, md_eps_values=None if covered else one))
    if d - 2 * k < 0:
        assert isinstance(rep, Diagnosis) and [c.name for c in rep.failed] == ["d - 2k >= 0"]
        return
    assert isinstance(rep, ExtensionReport)
    assert rep.kernel == AbelianGroup()


def test_theorem_d_worked_cases():
    r1 = theorem_d_report(inp(4, 2))
    assert r1.kernel == AbelianGroup() and r1.cokernel == "Z ⊕ 0"
    r2 = theorem_d_report(inp(6, 2, C2, ModuleData.build(1, (), {"g": [[1]]})))
    # ell = 1 so R = 0; killing <1> leaves Z g
    assert r2.kernel == AbelianGroup(1) and r2.cokernel == "Z ⊕ 0"
    r3 = theorem_d_report(inp(5, 2))
    assert isinstance(r3, Diagnosis)
    assert [c.name for c in r3.failed] == ["d - k not in {1, 3, 7}"]


def test_theorem_d_md_eps_gate():
    # d - k odd with k >= 3 has no formula for md^eps
    rep = theorem_d_report(inp(9, 4))
    assert isinstance(rep, Diagnosis) and rep.failed[0].name == "md^eps resolved"
    one = SpanSpec.of([RingElement.basis(())])
    assert isinstance(theorem_d_report(inp(9, 4, md_eps_values=one)), ExtensionReport)


def test_theorem_d_w_checks():
    mod = ModuleData.build(2)
    ok = theorem_d_report(inp(8, 4, mod=mod, G=(1, 0), W_values=(0, 3)))
    assert isinstance(ok, ExtensionReport)
    bad = theorem_d_report(inp(8, 4, mod=mod, G=(1, 0), W_values=(1, 3)))
    assert isinstance(bad, Diagnosis) and [c.name for c in bad.failed] == ["W(G) = 0"]
    missing = theorem_d_report(inp(8, 4, mod=mod, G=(1, 0)))
    assert any("W not supplied" in n for n in missing.notes)


def test_md_transfer_cases_and_purity():
    g = parse_ring_element(C2, "g")
    md = SpanSpec.of([g])
    before = SpanSpec(md.generators)
    t = md_transfer_check(inp(6, 2, C2, ModuleData.build(1, (), {}), md_values=md))
    assert t.check.passed and t.source == "derived"
    assert t.md_eps_values.generators == (RingElement.basis(0), g)
    assert t.md_values == before == md
    explicit = SpanSpec.of([parse_ring_element(C2, "1 + g")])
    t = md_transfer_check(inp(9, 4, C2, ModuleData.build(1), md_values=md, md_eps_values=explicit))
    assert t.check.passed and t.source == "explicit" and t.md_eps_values is explicit
    t = md_transfer_check(inp(9, 4, C2, ModuleData.build(1), md_values=md))
    assert not t.check.passed and t.source == "missing"
    assert t.md_values == before


def test_extension_report_refuses_failed_checks():
    with pytest.raises(AssertionError):
        ExtensionReport("x", (Check("a", False),), AbelianGroup(), "m", "c")


@given(st.integers(1, 14), st.integers(1, 14), st.booleans(), st.sampled_from([None, (0,), (1,)]))
def test_reports_never_carry_failed_checks(k, d, attested, W):
    if k > d:
        return
    i = ManifoldInput(d, k, TRIVIAL, ModuleData.build(1), (1,), SpanSpec(),
                      SpanSpec.of([RingElement.basis(())]), W, attested)
    for rep in (theorem_d_report(i), theorem_c_report(k, d, TRIVIAL), augmented_report(k, d, TRIVIAL)):
        if isinstance(rep, ExtensionReport):
            assert all(c.passed for c in rep.validity)
        else:
            assert isinstance(rep, Diagnosis) and rep.failed


def test_theorem_c_examples():
    assert theorem_c_report(2, 7, TRIVIAL).kernel == AbelianGroup()
    rep = theorem_c_report(1, 4, F1)
    assert rep.kernel == "Z[pi - 1] (free abelian)"
    assert isinstance(theorem_c_report(2, 8, C2), ExtensionReport)
    sets = theorem_c_report(3, 6, C2)
    assert sets.kind == "sets (d = 2 ell)" and any("Hatcher-Quinn" in n for n in sets.notes)
    assert isinstance(theorem_c_report(2, 4, C2), Diagnosis)


def test_theorem_c_kernel_finite_example():
    # Z/3, ell = 2, d = 6 (eps = +1): Z[pi - 1]/R = Z (g ~ g^2); md = {g} kills it
    C3 = cyclic_group(3)
    assert theorem_c_report(2, 6, C3).kernel == AbelianGroup(1)
    assert theorem_c_report(2, 6, C3, SpanSpec.of([RingElement.basis(1)])).kernel == AbelianGroup()
    # eps = -1: g ~ -g^2, still Z
    assert theorem_c_report(2, 7, C3).kernel == AbelianGroup(1)


def test_augmented_examples():
    one = SpanSpec.of([RingElement.basis(())])
    rep = augmented_report(1, 5, TRIVIAL, md_eps_values=one)
    assert dict(rep.extras)["augmentations"] == 2
    rep = augmented_report(1, 5, TRIVIAL, md_eps_values=SpanSpec())
    assert dict(rep.extras)["augmentations"] == "infinite"
    assert dict(rep.cokernel_parts)["coefficient"] == "no general rule"   # d - ell = 4
    assert dict(augmented_report(1, 7, TRIVIAL, md_eps_values=one).cokernel_parts)["coefficient"] == "Z/2"
    odd = augmented_report(1, 4, TRIVIAL)
    assert dict(odd.cokernel_parts)["coefficient"] == "Z" and dict(odd.extras)["augmentations"] == "Z"
    six = augmented_report(1, 6, C2, SpanSpec.of([RingElement.basis(1)]))
    assert six.kernel == AbelianGroup() and six.kernel_case == "ell = 1: Z[pi - 1]/md"
    hopf = augmented_report(2, 6, TRIVIAL, md_eps_values=one)
    assert dict(hopf.cokernel_parts)["coefficient"] == "no general rule"
    assert isinstance(augmented_report(2, 6, TRIVIAL), Diagnosis)
    assert isinstance(augmented_report(3, 5, TRIVIAL), Diagnosis)
