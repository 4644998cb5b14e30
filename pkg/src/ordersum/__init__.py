"""Sum-of-element-orders invariants for finite groups.

Two engines: a symbolic one for abelian groups (closed formulas on the
primary decomposition) and an explicit Cayley-table one that doubles as
its oracle.  A verification lab instantiates every structural statement
the library relies on, and the CLI front-ends all of it.
"""
from .abelian import (
    AbelianGroup,
    InvariantFactors,
    OrderType,
    PsiCollisionError,
    enumerate_abelian,
    from_invariant_factors,
    identify_by_psi,
    psi,
    to_invariant_factors,
)
from .explicit import (
    CayleyGroup,
    Subgroup,
    TableError,
    CapExceeded,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    elementary_abelian,
    from_abelian,
    is_lcm_group,
    parse_table_text,
    validate_table,
)
from .lab import SuiteConfig, VerdictReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "InvariantFactors",
    "OrderType",
    "PsiCollisionError",
    "enumerate_abelian",
    "from_invariant_factors",
    "identify_by_psi",
    "psi",
    "to_invariant_factors",
    "CayleyGroup",
    "Subgroup",
    "TableError",
    "CapExceeded",
    "cyclic",
    "dicyclic",
    "dihedral",
    "direct_product",
    "elementary_abelian",
    "from_abelian",
    "is_lcm_group",
    "parse_table_text",
    "validate_table",
    "SuiteConfig",
    "VerdictReport",
    "run_suite",
    "__version__",
]
