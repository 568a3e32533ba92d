import logging

import numpy as np

from intlat import InsufficientGeneratorsError, LatVec

from .reflections import _hyperbolic_planes

logger = logging.getLogger(__name__)


def _plane_completions(target, bound):
    """Pairs (a, b) with a·b = target and |a|, |b| <= bound."""
    values = range(-bound, bound + 1)
    if target == 0:
        return [(a, 0) for a in values] + [(0, b) for b in values if b]
    return [(a, target // a) for a in values if a and target % a == 0 and abs(target // a) <= bound]


def sample_roots(lattice, count, seed=None, bound=3, norm=-2, emphasis=()):
    """
    Seeded pseudo-random vectors of the given norm with coordinates in
    [-bound, bound], pairwise distinct up to sign.

    A few random coordinates are filled in first and the norm is then
    completed inside a hyperbolic plane through a·b = (norm - partial)/2.
    Coordinates listed in `emphasis` are included half of the time.
    Lattices without hyperbolic planes fall back to plain rejection
    sampling of sparse vectors.
    """
    rng = np.random.default_rng(seed)
    planes = _hyperbolic_planes(lattice)
    size = lattice.rank
    roots, seen = [], set()
    attempts, max_attempts = 0, 500 * count + 1000

    while len(roots) < count:
        attempts += 1
        if attempts > max_attempts:
            raise InsufficientGeneratorsError(
                f"Found only {len(roots)} of {count} vectors of norm {norm} in {lattice.label}"
            )
        coords = [0] * size
        if planes:
            i, j = planes[int(rng.integers(len(planes)))]
            others = [t for t in range(size) if t not in (i, j)]
            picked = [int(t) for t in rng.choice(others, size=int(rng.integers(1, 4)), replace=False)]
            for t in emphasis:
                if t not in picked and t not in (i, j) and rng.random() < 0.5:
                    picked.append(t)
            for t in picked:
                coords[t] = int(rng.integers(1, bound + 1)) * int(rng.choice((-1, 1)))
            partial = lattice.pairing(coords, coords)
            options = _plane_completions((norm - partial) // 2, bound)
            if (norm - partial) % 2 or not options:
                continue
            coords[i], coords[j] = options[int(rng.integers(len(options)))]
        else:
            picked = rng.choice(size, size=int(rng.integers(1, 4)), replace=False)
            for t in picked:
                coords[int(t)] = int(rng.integers(-1, 2))
            if lattice.pairing(coords, coords) != norm:
                continue

        key = tuple(coords)
        if not any(key) or key in seen or tuple(-c for c in key) in seen:
            continue
        seen.add(key)
        roots.append(LatVec(lattice, key))

    logger.debug(f"Sampled {count} vectors of norm {norm} in {lattice.label} after {attempts} attempts")
    return roots
