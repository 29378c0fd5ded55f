import os

import hypothesis.strategies as st
from hypothesis import HealthCheck, settings

from daxcalc.dax import Trace
from daxcalc.groups import (cyclic_group, dihedral_group, elementary_abelian_group, free_group, klein_four_group,
                            quaternion_group, reduce_word, symmetric_group, trivial_group)
from daxcalc.ring import RingElement

# derandomized so repeated runs are byte-identical
settings.register_profile("ci", derandomize=True, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("dev", deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))


def small_groups(max_order=8):
    groups = [trivial_group(), cyclic_group(1)]
    groups += [cyclic_group(n) for n in range(2, max_order + 1)]
    groups += [klein_four_group(), symmetric_group(3), dihedral_group(4), quaternion_group(),
               elementary_abelian_group(2, 3)]
    if max_order >= 16:
        groups += [cyclic_group(n) for n in range(9, 17)]
        groups += [dihedral_group(n) for n in range(5, 9)] + [elementary_abelian_group(2, 4),
                                                               elementary_abelian_group(3, 2), symmetric_group(3)]
    return [g for g in groups if not g.is_finite or g.order <= max_order]


FINITE_8 = small_groups(8)
FINITE_16 = small_groups(16)


def words(spec, max_len=12):
    letter = st.tuples(st.integers(0, spec.rank - 1), st.sampled_from([1, -1]))
    return st.lists(letter, max_size=max_len).map(reduce_word)


def elements(spec, max_len=6):
    if spec.has_finite_order:
        return st.sampled_from(spec.elements())
    return words(spec, max_len)


def ring_elements(spec, max_terms=6, max_len=4):
    return st.lists(st.tuples(elements(spec, max_len), st.integers(-5, 5)), max_size=max_terms).map(RingElement)


def traces(spec, max_events=12, max_len=4):
    ev = st.tuples(st.sampled_from([1, -1]), elements(spec, max_len))
    return st.lists(ev, max_size=max_events).map(lambda e: Trace(tuple(e)))

