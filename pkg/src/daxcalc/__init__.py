"""Exact algebra for homotopy groups of spaces of embedded disks.

Group rings with the signed involution, Smith normal forms, Dax invariants
of double-point traces, frame-bundle case tables, and extension reports.
"""
from .abelian import AbelianGroup, IntMatrix, element_order, quotient_presentation, smith_normal_form
from .assembler import (Diagnosis, ExtensionReport, ManifoldInput, ModuleData, augmented_report,
                        quotient_by_dual, theorem_c_report, theorem_d_report)
from .dax import (ParityContext, SpanSpec, Trace, canonical_form, dax_of_trace, framing_count,
                  md_eps_from_md, md_image_quotient, relations_quotient_group)
from .groups import GroupSpec, cyclic_group, free_group, group_invert, group_multiply, table_group
from .ring import RingElement, ring_add, ring_involution

__version__ = "0.1.0"
