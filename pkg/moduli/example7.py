import logging

from intlat import LatVec, NotInWError, OutOfRangeError, hilb_lattice, is_isometry
from monodromy import OrientedLattice, ext_to_mukai, in_W, orientation_character, residual_action, signed_reflection

from .serializers import Example7Case, Example7Report

logger = logging.getLogger(__name__)

N = 7
DELTA = 22
DEGREES = (2, 4)


def polarization(lattice, degree):
    """h = e + (degree/2)·f in the first hyperbolic plane of the K3 summand."""
    if degree <= 0 or degree % 2:
        raise OutOfRangeError(f"Polarization degree must be positive and even, got {degree}")
    coords = [0] * lattice.rank
    coords[0], coords[1] = 1, degree // 2
    return LatVec(lattice, tuple(coords))


def genus_two_reflection(degree, n=N):
    """w0 = 2h + δ and the signed reflection f in it, on Hilb(n)."""
    lattice = hilb_lattice(n)
    delta = lattice.basis_vector(DELTA)
    w0 = 2 * polarization(lattice, degree) + delta
    return w0, signed_reflection(w0)


def _case(degree):
    w0, f = genus_two_reflection(degree)
    lattice = f.lattice
    oriented = OrientedLattice.standard(lattice)
    action = residual_action(lattice, f)
    membership = in_W(oriented, f)

    ext_error = None
    try:
        ext_to_mukai(f)
    except NotInWError as e:
        ext_error = str(e)
    logger.debug(f"Degree {degree}: (w0,w0) = {w0.norm}, residual {action.signed()} mod {action.modulus}")

    return Example7Case(
        degree=degree,
        w0=list(w0.coords),
        w0_norm=w0.norm,
        matrix=[list(row) for row in f.matrix],
        is_isometry=is_isometry(lattice, f.matrix),
        delta_image=list(f.apply(lattice.basis_vector(DELTA)).coords),
        orientation=orientation_character(oriented, f),
        residual=action.multiplier,
        residual_signed=action.signed(),
        modulus=action.modulus,
        in_w=membership.member,
        ext_error=ext_error,
    )


def example7_report():
    """The reflections in 2h + δ on Hilb(7) for polarizations of degree 2 and 4."""
    return Example7Report(n=N, cases=[_case(degree) for degree in DEGREES])
