"""
The full acceptance battery behind `verify-all`. Each section sweeps one
family of statements and contributes a single Check listing the first
few counterexamples it met.
"""

import logging
from fractions import Fraction
from math import factorial, gcd

from chern import chern_to_character, newton_round_trip, verify_sigma_linear, verify_twist_formula
from extorder import cyclic_ext_order, master_order_table, mu_kernel, mukai_middle_ext_order, splitting_search
from intlat import discriminant_group, hilb_lattice
from intlat.discriminant import reduce_mod_two
from moduli import enumerate_pn, example7_report, expected_count
from monodromy import euler_number, residual_orthogonal_group, w_index

from .serializers import Check

logger = logging.getLogger(__name__)

MAX_SHOWN = 5


def _sweep(name, cases, mismatch):
    failures = []
    for case in cases:
        detail = mismatch(case)
        if detail is not None:
            failures.append({"case": case, "detail": detail})
            if len(failures) >= MAX_SHOWN:
                break
    logger.debug(f"{name}: {len(failures)} failures")
    return Check(name=name, expected=[], actual=failures, passed=not failures)


def _pn_count(n):
    count = len(enumerate_pn(n))
    return None if count == expected_count(n) else count


def _w_index(n):
    units = residual_orthogonal_group(n)
    if len(units) != 2 ** euler_number(n - 1):
        return f"|O(q)| = {len(units)}"
    expected = 1 if n <= 6 else 2 ** (euler_number(n - 1) - 1)
    index = w_index(n)
    return None if index == expected else f"index {index}"


def _hilb_discriminant(n):
    disc = discriminant_group(hilb_lattice(n))
    modulus = 2 * n - 2
    if list(disc.cyclic_orders) != [modulus]:
        return f"orders {list(disc.cyclic_orders)}"
    expected = reduce_mod_two(Fraction(-1, modulus))
    return None if disc.q_values[0] == expected else f"q = {disc.q_values[0]}"


def _example7(_):
    expected = {2: (-4, -5 % 12), 4: (4, -7 % 12)}
    for case in example7_report().cases:
        norm, multiplier = expected[case.degree]
        seen = (case.w0_norm, case.orientation, case.residual, case.in_w, case.ext_error is None)
        if seen != (norm, 1, multiplier, False, False):
            return f"degree {case.degree}: {seen}"
    return None


def _cyclic(pair):
    d, e = pair
    order = cyclic_ext_order(d, e)
    return None if splitting_search(d, e) == order else f"search disagrees with {order}"


def _master(n):
    table = master_order_table(n)
    low = [(i, order) for i, order in table if order < 3]
    if low:
        return f"orders below 3: {low}"
    modulus = 2 * n - 2
    wrong = [(i, order) for i, order in table if i >= 3 and order != modulus // gcd(i - 1, modulus)]
    return f"formula mismatch: {wrong}" if wrong else None


def _mukai_middle(n):
    result = mukai_middle_ext_order(n)
    if result.order != 2 * n - 2:
        return f"order {result.order}"
    return None if result.stabilized else "not stabilized"


def _character_leading(k):
    classes = chern_to_character(k)
    for i, value in enumerate(classes, start=1):
        coefficient = value.coefficient(value.ring.gen(f"c{i}"))
        if coefficient != Fraction((-1) ** (i - 1), factorial(i - 1)):
            return f"ch{i} leads with {coefficient}"
    return None


def _mu_kernel(n):
    kernel = mu_kernel(n)
    if n == 2:
        return None if kernel.integral and not kernel.trivial else "no kernel element"
    return None if kernel.trivial else "nontrivial kernel"


def battery(include_slow=True):
    """(name, cases, mismatch) for every section, slow ones last."""
    sections = [
        ("P_n count, 2 <= n <= 20000", range(2, 20001), _pn_count),
        ("W index, 2 <= n <= 20000", range(2, 20001), _w_index),
        ("genus-two reflections on Hilb(7)", [7], _example7),
        ("Hilb(n) discriminant forms, n <= 200", range(2, 201), _hilb_discriminant),
        ("cyclic orders match the splitting search, d, e <= 60", [(d, e) for d in range(1, 61) for e in range(1, 61)], _cyclic),
        ("master order formula, n <= 500", range(3, 501), _master),
        ("sigma-linear, 3 <= i <= 8", range(3, 9), lambda i: None if verify_sigma_linear(i) else "fails"),
        ("twist formula, 1 <= i <= 8", range(1, 9), lambda i: None if verify_twist_formula(i) else "fails"),
        ("character leading coefficients, k = 12", [12], _character_leading),
        ("Newton round trip to degree 24", [12], lambda k: None if newton_round_trip(k) else "fails"),
        ("mu kernel, 2 <= n <= 10", range(2, 11), _mu_kernel),
    ]
    if include_slow:
        sections.append(("Mukai middle extension order, n = 2, 3, 4", [2, 3, 4], _mukai_middle))
    return sections


def run_battery(include_slow=True):
    checks = []
    for name, cases, mismatch in battery(include_slow):
        logger.debug(f"Running {name}")
        checks.append(_sweep(name, cases, mismatch))
    logger.debug(f"verify-all: {sum(c.passed for c in checks)} of {len(checks)} sections passed")
    return checks
