from .operator import (  # noqa: F401
    ShiftApplication, ShiftTrace, shift, stabilize, is_stable, is_shift_fixed, potential)
from .precedence import (  # noqa: F401
    PrecedenceOrder, precedence_order, precedes, stable_closure_check)
from .enumeration import FamilyWalk, enumerate_stable, enumerate_all_hypergraphs  # noqa: F401
