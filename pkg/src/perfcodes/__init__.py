"""Perfect codes in circulant graphs of prime-power degree plus one.

The library works with residue sets of Z_n and answers existence,
construction, enumeration and counting questions for perfect codes in
Cay(Z_n, S) when |S| + 1 is a prime power.
"""

from .zmod import (
    InvalidInput,
    ResidueSet,
    Subgroup,
    difference_set,
    divisors,
    format_set,
    generates,
    is_inverse_closed,
    normalize,
    parse_set,
    parse_subgroup,
    project,
    subgroup_of_periods,
)
from .tiling import (
    enumerate_perfect_codes,
    find_perfect_code,
    is_direct_sum,
    is_perfect_code,
)
from .pyramidal import (
    AdmissibleSeries,
    check_T_conditions,
    decide_existence,
    is_pyramidal,
    longest_series,
)
from .lifts import (
    FamilySpec,
    FeasibleLift,
    enumerate_lifts,
    f_project,
    g_lift,
    g_project,
    generate_family,
)
from .codes import CodeRecipe, build_code, enumerate_recipes, lower_bound
from .counting import CountParams, count_enumerate, count_formula, gcd_excess

__version__ = "0.1.0"
