"""Entropy and mutual-information decompositions over partitioned
multipartite states, quantum-structure diagrams, and out-in symmetry checks.

The heavy lifting lives in the compiled ``_tangnet`` extension; this package
re-exports its surface.
"""

try:
    from ._tangnet import *  # noqa: F401,F403  (installed package layout)
    from ._tangnet import __doc__ as _core_doc  # noqa: F401
except ImportError:  # in-build layout: extension directly on PYTHONPATH
    from _tangnet import *  # noqa: F401,F403

__all__ = [
    "State",
    "TangnetError",
    "canonical_form",
    "classify",
    "conditional_mutual_info",
    "dimension_cap",
    "entropy",
    "enumerate_qubit_classes",
    "family_state",
    "multiworld_report",
    "mutual_info",
    "out_in_suite",
    "parse_state",
    "partition_diagram",
    "purity",
    "rabi_entanglement",
    "schmidt_coefficients",
    "set_dimension_cap",
    "slit_visibility",
    "structure_diagram",
    "structure_of",
]
