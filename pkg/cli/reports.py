"""
One report builder per management command. Each takes the parsed options
and returns a Report; exceptions from the lattice packages propagate to
ReportCommand.handle.
"""

import logging
from fractions import Fraction
from math import factorial, prod

from chern import character_to_chern, chern_to_character, newton_round_trip, verify_sigma_linear, verify_twist_formula
from chern.serializers import ConversionModel, LemmaCheckModel
from extorder import cyclic_ext_order, master_order, mu_kernel, mukai_middle_ext_order
from extorder.serializers import ExtOrderModel
from intlat import Isometry, LatticeError, discriminant_group, hilb_lattice
from intlat.discriminant import reduce_mod_two
from intlat.serializers import IsometryModel
from moduli import count_nonbirational, enumerate_pn, example7_report as example7_cases, expected_count
from moduli.serializers import PnModel
from monodromy import (
    OrientedLattice,
    euler_number,
    hilb_degree,
    in_W,
    is_elementary_abelian,
    mu,
    residual_action,
    residual_orthogonal_group,
    w_index,
)

from .matrices import read_matrix
from .serializers import Check, Report
from .verify import run_battery

logger = logging.getLogger(__name__)

# (w0,w0) and the residual multiplier mod 12 of the genus-two reflections on Hilb(7)
EXAMPLE7_EXPECTED = {2: (-4, -5 % 12), 4: (4, -7 % 12)}


def _flag(name, value):
    return Check(name=name, expected=True, actual=bool(value), passed=bool(value))


def pn_report(args):
    entries = enumerate_pn(args.n)
    model = PnModel(n=args.n, entries=[e.as_pair() for e in entries], count=len(entries))
    return Report(
        command="pn",
        inputs={"n": args.n},
        outputs=model.model_dump(mode="json"),
        checks=[Check.equal("count is 2^(rho(n-1)-1)", expected_count(args.n), model.count)],
    )


def count_nonbirational_report(args):
    count = count_nonbirational(args.n)
    return Report(
        command="count-nonbirational",
        inputs={"n": args.n},
        outputs={"n": args.n, "count": count},
        checks=[Check.equal("count is 2^(rho(n-1)-1)", expected_count(args.n), count)],
    )


def windex_report(args):
    n = args.n
    units = residual_orthogonal_group(n)
    index = w_index(n)
    return Report(
        command="windex",
        inputs={"n": n},
        outputs={"n": n, "index": index, "residual_units": units},
        checks=[
            Check.equal("residual group order is 2^rho(n-1)", 2 ** euler_number(n - 1), len(units)),
            _flag("residual group is elementary abelian", is_elementary_abelian(units, 2 * n - 2)),
            Check.equal("index matches the prime count", expected_count(n), index),
        ],
    )


def residual_report(args):
    n = args.n
    units = residual_orthogonal_group(n)
    if args.matrix is None:
        return Report(
            command="residual",
            inputs={"n": n},
            outputs={"n": n, "modulus": 2 * n - 2, "residual_units": units},
            checks=[_flag("residual group is elementary abelian", is_elementary_abelian(units, 2 * n - 2))],
        )

    g = Isometry(hilb_lattice(n), read_matrix(args.matrix))
    action = residual_action(g.lattice, g)
    return Report(
        command="residual",
        inputs={"n": n, "matrix": str(args.matrix)},
        outputs={
            "n": n,
            "multiplier": action.multiplier,
            "signed": action.signed(),
            "modulus": action.modulus,
            "is_sign": action.is_sign(),
        },
        checks=[_flag("multiplier preserves the discriminant form", action.multiplier in units)],
    )


def in_w_report(args):
    lattice = args.lattice
    n = hilb_degree(lattice)
    g = Isometry(lattice, read_matrix(args.matrix))
    result = in_W(OrientedLattice.standard(lattice), g)
    outputs = {
        "lattice": lattice.label,
        "member": result.member,
        "orientation": result.orientation,
        "residual": result.residual.multiplier,
        "residual_signed": result.residual.signed(),
        "modulus": result.residual.modulus,
        "extension": IsometryModel.from_isometry(result.extension).model_dump() if result.extension else None,
    }
    checks = []
    if result.member:
        checks.append(_flag("extension restricts to the input", mu(result.extension, n) == g))
    return Report(command="in-w", inputs={"lattice": lattice.label, "matrix": str(args.matrix)}, outputs=outputs, checks=checks)


def example7_report(args):
    report = example7_cases()
    checks = []
    for case in report.cases:
        norm, multiplier = EXAMPLE7_EXPECTED[case.degree]
        label = f"degree {case.degree}"
        checks += [
            Check.equal(f"{label}: (w0,w0)", norm, case.w0_norm),
            _flag(f"{label}: reflection is an isometry", case.is_isometry),
            Check.equal(f"{label}: orientation preserving", 1, case.orientation),
            Check.equal(f"{label}: residual multiplier mod {case.modulus}", multiplier, case.residual),
            Check.equal(f"{label}: in W", False, case.in_w),
            _flag(f"{label}: no extension to the Mukai lattice", case.ext_error is not None),
        ]
    return Report(command="example7", inputs={"n": report.n}, outputs=report.model_dump(mode="json"), checks=checks)


def chern_report(args):
    if args.to_character is not None:
        k, direction = args.to_character, "chern-to-character"
        classes = chern_to_character(k)
        source, leading = "c", lambda i: Fraction((-1) ** (i - 1), factorial(i - 1))
    else:
        k, direction = args.to_chern, "character-to-chern"
        classes = character_to_chern(k)
        source, leading = "ch", lambda i: Fraction((-1) ** (i - 1) * factorial(i - 1))

    checks = []
    for i, value in enumerate(classes, start=1):
        coefficient = value.coefficient(value.ring.gen(f"{source}{i}"))
        checks.append(Check.equal(f"leading coefficient of degree {2 * i}", str(leading(i)), str(coefficient)))
    checks.append(_flag("Newton round trip", newton_round_trip(k)))

    model = ConversionModel(direction=direction, k=k, classes=[value.format() for value in classes])
    return Report(command="chern", inputs={"direction": direction, "k": k}, outputs=model.model_dump(), checks=checks)


def verify_report(args):
    lemma, i = args.lemma, args.i
    if lemma == "newton":
        holds = newton_round_trip(i)
        model = LemmaCheckModel(lemma=lemma, i=i, holds=holds, residual="0" if holds else "round trip differs")
    elif lemma == "sigma-linear":
        model = verify_sigma_linear(i).to_json()
    else:
        model = verify_twist_formula(i).to_json()
    return Report(
        command="verify",
        inputs={"lemma": lemma, "i": i},
        outputs=model.model_dump(),
        checks=[_flag(f"{lemma} holds for i={i}", model.holds)],
    )


def ext_order_report(args):
    n, i = args.n, args.i
    order = master_order(n, i)
    checks = [_flag("order is at least 3", order >= 3)]
    if i >= 3:
        modulus = 2 * n - 2
        checks.append(Check.equal("agrees with the cyclic extension order", modulus // cyclic_ext_order(modulus, i - 1), order))
    model = ExtOrderModel(n=n, i=i, order=order, method="formula", stabilized=True)
    return Report(command="ext-order", inputs={"n": n, "i": i}, outputs=model.model_dump(), checks=checks)


def mukai_middle_report(args):
    n = args.n
    result = mukai_middle_ext_order(n, generator_count=args.gens, seed=args.seed, batch=args.batch)
    return Report(
        command="mukai-middle",
        inputs={"n": n, "gens": result.generator_count, "seed": args.seed, "batch": args.batch},
        outputs=result.to_json().model_dump(),
        checks=[
            Check.equal("order is 2n-2", 2 * n - 2, result.order),
            _flag("generators stabilized", result.stabilized),
        ],
    )


def mu_kernel_report(args):
    kernel = mu_kernel(args.n)
    return Report(
        command="mu-kernel",
        inputs={"n": args.n},
        outputs=kernel.to_json().model_dump(),
        checks=[Check.equal("kernel is trivial", args.n != 2, kernel.trivial)],
    )


def discriminant_report(args):
    lattice = args.lattice
    disc = discriminant_group(lattice)
    checks = [Check.equal("group order is |det|", abs(lattice.det), prod(disc.cyclic_orders))]
    try:
        n = hilb_degree(lattice)
    except LatticeError:
        n = None
    if n is not None:
        modulus = 2 * n - 2
        checks += [
            Check.equal("cyclic of order 2n-2", [modulus], list(disc.cyclic_orders)),
            Check.equal("q(generator)", str(reduce_mod_two(Fraction(-1, modulus))), str(disc.q_values[0])),
        ]
    outputs = {"lattice": lattice.label, **disc.to_json().model_dump()}
    return Report(command="discriminant", inputs={"lattice": lattice.label}, outputs=outputs, checks=checks)


def verify_all_report(args):
    checks = run_battery(include_slow=not args.skip_slow)
    outputs = {check.name: check.passed for check in checks}
    return Report(command="verify-all", inputs={"skip_slow": args.skip_slow}, outputs=outputs, checks=checks)
