from .cyclic import FinCyclicExt, cyclic_ext_order, splitting_search
from .equivariant import (
    EquivariantSolution,
    EquivariantSystem,
    MiddleExtOrder,
    equivariant_hom,
    middle_parametrization,
    mukai_middle_ext_order,
    sample_root_reflections,
)
from .orders import MuKernel, master_order, master_order_table, mu_kernel
