import logging
from dataclasses import dataclass
from math import gcd

import numpy as np

from intlat import OutOfRangeError
from k3_project import settings

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FinCyclicExt:
    """0 -> dZ/deZ -> Z/deZ -> Z/dZ -> 0 with trivial group action."""

    d: int
    e: int

    def __post_init__(self):
        if self.d == 0:
            raise OutOfRangeError("Cyclic extensions need d != 0")

    @property
    def order(self):
        return gcd(self.d, self.e)


def cyclic_ext_order(d, e):
    """Order of the extension class of Z/dZ by dZ/deZ: gcd(d, e), and |d| when e = 0."""
    return FinCyclicExt(d, e).order


def splitting_search(d, e, limit=None):
    """
    Smallest k >= 1 for which multiplication by k on the subgroup dZ/deZ
    extends to a homomorphism Z/deZ -> dZ/deZ, found by enumerating every
    homomorphism. This is the order of the extension class.
    """
    limit = settings.SPLIT_SEARCH_LIMIT if limit is None else limit
    if d == 0:
        raise OutOfRangeError("Cyclic extensions need d != 0")
    d, e = abs(d), abs(e)
    if d * e > limit:
        raise OutOfRangeError(f"|d·e| = {d * e} exceeds the search limit {limit}")
    if e == 0:
        # the subgroup is dZ inside Z; φ(1) = t restricts to multiplication by d·t
        return d

    # φ(1) = t in Z/e restricts to multiplication by d·t on the subgroup
    restrictions = np.unique((d * np.arange(e, dtype=np.int64)) % e)
    positive = restrictions[restrictions > 0]
    k = int(positive.min()) if positive.size else e
    logger.debug(f"splitting search d={d}, e={e}: k = {k}")
    return k
