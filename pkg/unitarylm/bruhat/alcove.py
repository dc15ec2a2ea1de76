from collections import OrderedDict
from fractions import Fraction
from functools import lru_cache

from unitarylm.foundation import FoundationObject, WeylError
from unitarylm.weyl.element import WeylElement, apply_perm, identity


@lru_cache(maxsize=None)
def _canonical_pairs(context):
    n = context.ambient_dim
    middle = context.middle
    pairs = []
    seen = set()
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if middle in (a, b):
                continue
            if context.kind != 'GL' and (context.star(b), context.star(a)) in seen:
                continue
            seen.add((a, b))
            pairs.append((a, b))
    return tuple(pairs)


@lru_cache(maxsize=None)
def _alcove_data(context):
    """Integer numerators and common denominator of the base point, the
    canonical root pairs, and the floor of every pair difference at the base point.
    """
    n = context.ambient_dim
    if context.kind == 'GU':
        m = context.rank
        N = 2 * m
        gsp = [-2 * (N - j) for j in range(1, N + 1)]
        numerators = tuple(gsp[:m] + [-(N - 1)] + gsp[m:])
        denominator = 2 * N
    else:
        numerators = tuple(-(n - j) for j in range(1, n + 1))
        denominator = n
    pairs = _canonical_pairs(context)
    floors = tuple((numerators[a - 1] - numerators[b - 1]) // denominator for a, b in pairs)
    return numerators, denominator, pairs, floors


def base_alcove_point(context):
    """A point in the interior of the base alcove.

    GL(N) and GSP(m) use p_j = -(N-j)/N; GU(m) inserts the middle
    coordinate (p_1 + p_{2m})/2 into the GSP(m) point.

    Args:
        context (GroupContext): The group context.

    Returns:
        tuple: Fractions.

    Examples:
        >>> unitarylm.bruhat.base_alcove_point(unitarylm.weyl.GroupContext.gu(1))
        (Fraction(-1, 2), Fraction(-1, 4), Fraction(0, 1))
    """
    numerators, denominator = _alcove_data(context)[:2]
    return tuple(Fraction(x, denominator) for x in numerators)


def in_base_alcove(context, point):
    """Whether a rational point lies strictly inside the base alcove.

    Args:
        context (GroupContext): The group context.
        point (sequence): Rational coordinates.

    Returns:
        boolean
    """
    pairs, floors = _alcove_data(context)[2:]
    for (a, b), floor in zip(pairs, floors):
        diff = Fraction(point[a - 1]) - Fraction(point[b - 1])
        if not floor < diff < floor + 1:
            return False
    return True


class Hyperplane(FoundationObject):
    """
    The affine root hyperplane x_a - x_b = level.

    For GSP and GU the pair (a, b) is the canonical representative of
    {(a, b), (b*, a*)}; on the fixed locus both equations cut out the same set.

    Args:
        context (GroupContext): The group context.
        a (integer): First index, 1-based.
        b (integer): Second index, greater than a.
        level (integer): The constant k.
    """
    def __init__(self, context, a, b, level):
        self.context = context
        self.a = a
        self.b = b
        self.level = level

    def reflection(self):
        return reflection(self.context, self.a, self.b, self.level)

    def text(self):
        return 'x{}-x{}={}'.format(self.a, self.b, self.level)

    def as_dict(self):
        return {'a': self.a, 'b': self.b, 'level': self.level}

    def __eq__(self, other):
        return isinstance(other, Hyperplane) and \
            (self.context, self.a, self.b, self.level) == (other.context, other.a, other.b, other.level)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.context, self.a, self.b, self.level))

    def __repr__(self):
        return '<Hyperplane {}>'.format(self.text())


def _scaled_image(w):
    numerators, denominator = _alcove_data(w.context)[:2]
    moved = apply_perm(w.perm, numerators)
    return [denominator * t + x for t, x in zip(w.trans, moved)]


def separating_hyperplanes(w):
    """The affine root hyperplanes separating the base alcove from w·(base alcove).

    Args:
        w (WeylElement): Any element.

    Returns:
        list: Hyperplane objects, ordered by pair then level.
    """
    denominator, pairs, floors = _alcove_data(w.context)[1:]
    image = _scaled_image(w)
    found = []
    for (a, b), floor in zip(pairs, floors):
        moved = (image[a - 1] - image[b - 1]) // denominator
        low, high = min(floor, moved), max(floor, moved)
        for level in range(low + 1, high + 1):
            found.append(Hyperplane(w.context, a, b, level))
    return found


def length(w):
    """The number of hyperplanes separating the base alcove from its image under w.

    Args:
        w (WeylElement): Any element.

    Returns:
        integer
    """
    denominator, pairs, floors = _alcove_data(w.context)[1:]
    image = _scaled_image(w)
    total = 0
    for (a, b), floor in zip(pairs, floors):
        total += abs((image[a - 1] - image[b - 1]) // denominator - floor)
    return total


def reflection(context, a, b, level):
    """The affine reflection across x_a - x_b = level.

    Args:
        context (GroupContext): The group context.
        a (integer): First index.
        b (integer): Second index, different from a.
        level (integer): The constant k.

    Returns:
        WeylElement

    Raises:
        WeylError: If the indices coincide or touch the fixed GU coordinate.
    """
    n = context.ambient_dim
    if a == b or not (1 <= a <= n and 1 <= b <= n) or context.middle in (a, b):
        raise WeylError('No root hyperplane for indices ({}, {}) in {}'.format(a, b, context),
                        a=a, b=b, context=str(context))
    perm = list(range(1, n + 1))
    trans = [0] * n

    def swap(i, j, k):
        perm[i - 1], perm[j - 1] = j, i
        trans[i - 1] += k
        trans[j - 1] -= k

    swap(a, b, level)
    if context.kind != 'GL' and b != context.star(a):
        swap(context.star(b), context.star(a), level)
    return WeylElement(context, perm, trans)


@lru_cache(maxsize=None)
def _simple_reflections(context):
    n = context.ambient_dim
    simple = OrderedDict()
    simple[0] = reflection(context, 1, n, -1)
    if context.kind == 'GL':
        for j in range(1, n):
            simple[j] = reflection(context, j, j + 1, 0)
        return simple
    m = context.rank
    for j in range(1, m):
        simple[j] = reflection(context, j, j + 1, 0)
    simple[m] = reflection(context, m, context.star(m), 0)
    return simple


def simple_reflections(context):
    """The simple affine reflections s_0, s_1, ... labelled by their index.

    GL(N) has s_0..s_{N-1}; GSP(m) and GU(m) have s_0..s_m, where s_0 is
    the reflection across x_1 - x_n = -1.

    Returns:
        OrderedDict: label -> WeylElement
    """
    return OrderedDict(_simple_reflections(context))


def omega_power(context, k):
    """τ^k for the generator τ of the length-zero subgroup Ω."""
    tau = context.omega_generator()
    if k < 0:
        tau = tau.inverse()
    result = identity(context)
    for _ in range(abs(k)):
        result = result * tau
    return result


def omega_decompose(w):
    """Splits w = w_a·ω with w_a in the affine Weyl group and ω of length zero.

    Args:
        w (WeylElement): Any element.

    Returns:
        tuple: (w_a, ω)
    """
    omega = omega_power(w.context, w.kottwitz())
    return w * omega.inverse(), omega
