import itertools
import random
from fractions import Fraction

from unitarylm.foundation import WeylError
from unitarylm.bruhat.alcove import omega_power, simple_reflections
from unitarylm.weyl.context import LevelStructure
from unitarylm.weyl.embeddings import lift_cochar_gsp_to_gu

MAX_ATTEMPTS = 10000


def make_rng(seed):
    return random.Random(seed)


def random_dominant_mu(context, rng, band=3):
    """A random dominant cocharacter with entries in [0, band].

    GL draws N entries and sorts them. GSP draws x_1 ≥ ... ≥ x_m and then
    c in [x_1, 2x_m], rejecting draws where that range is empty, and
    returns (x_1, ..., x_m, c - x_m, ..., c - x_1). GU additionally
    rejects odd c and inserts c/2 in the middle.

    Args:
        context (GroupContext): The group context.
        rng (random.Random): The seeded generator.
        band (integer): Upper bound B of the entries.

    Returns:
        tuple

    Raises:
        WeylError: If no cocharacter is found after MAX_ATTEMPTS draws.
    """
    if context.kind == 'GL':
        return tuple(sorted((rng.randint(0, band) for _ in range(context.rank)), reverse=True))
    m = context.rank
    for _ in range(MAX_ATTEMPTS):
        head = sorted((rng.randint(0, band) for _ in range(m)), reverse=True)
        if head[0] > 2 * head[-1]:
            continue
        c = rng.randint(head[0], 2 * head[-1])
        if context.kind == 'GU' and c % 2:
            continue
        mu = tuple(head) + tuple(c - x for x in reversed(head))
        return lift_cochar_gsp_to_gu(mu) if context.kind == 'GU' else mu
    raise WeylError('No dominant cocharacter found in band [0, {}]'.format(band), band=band)


def random_element(context, rng, max_length, components=(0,)):
    """A product of at most `max_length` random simple reflections times τ^k."""
    simple = list(simple_reflections(context).values())
    w = omega_power(context, rng.choice(list(components)))
    for _ in range(rng.randint(0, max_length)):
        w = rng.choice(simple) * w
    return w


def random_rational_vector(rng, size, band=3, denominator=4):
    return tuple(Fraction(rng.randint(-band * denominator, band * denominator), denominator)
                 for _ in range(size))


def random_vector_in_v(context, rng, band=3, denominator=4):
    """A random rational vector with constant pairing sums x_j + x_{j*}."""
    n = context.ambient_dim
    head = random_rational_vector(rng, n // 2, band, denominator)
    c = Fraction(rng.randint(-band * denominator, band * denominator), denominator)
    middle = (c / 2,) if n % 2 else ()
    return head + middle + tuple(c - x for x in reversed(head))


def all_levels(context):
    """Every nonempty I ⊆ {0, ..., m}, ordered by size then lexicographically."""
    indices = range(context.rank + 1)
    levels = []
    for size in range(1, context.rank + 2):
        for subset in itertools.combinations(indices, size):
            levels.append(LevelStructure(context, subset))
    return levels


def theta_stable_subsets(m):
    """The proper subsets of GL(2m) simple reflection labels stable under j -> 2m-j mod 2m."""
    N = 2 * m
    orbits = sorted(set(tuple(sorted({j, (N - j) % N})) for j in range(N)))
    subsets = []
    for size in range(len(orbits) + 1):
        for chosen in itertools.combinations(orbits, size):
            labels = tuple(sorted(j for orbit in chosen for j in orbit))
            if len(labels) < N:
                subsets.append(labels)
    return subsets