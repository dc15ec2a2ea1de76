import itertools
import logging
import math

from unitarylm.foundation import FoundationObject, WeylError
from unitarylm.bruhat.alcove import length
from unitarylm.bruhat.order import downward_closure
from unitarylm.bruhat.parahoric import ParahoricSubgroup, min_length_rep
from unitarylm.permissibility.kr import (as_dominant, is_mu_permissible, to_gsp,
                                         translation_orbit, vertex_set)
from unitarylm.permissibility.naive import is_naively_permissible, is_wedge_permissible
from unitarylm.weyl.context import GroupContext, LevelStructure
from unitarylm.weyl.element import WeylElement, apply_perm, translation
from unitarylm.weyl.embeddings import lift_gsp_to_gu

logger = logging.getLogger(__name__)

VARIANTS = ('kr-gl', 'kr-gsp', 'naive', 'wedge')


def canonical_order(elements):
    """Sorts elements by (length, canonical text)."""
    return sorted(set(elements), key=lambda w: (length(w), w.text()))


def _parahorics(context, level, double):
    right = ParahoricSubgroup(context, level)
    return (right if double else None), right


def enumerate_admissible(context, mu, level, double=False):
    """The μ-admissible cosets, as minimal-length representatives.

    Computes the downward closure of {t_{σμ}} and projects it to W~/W_I
    (or W_I\\W~/W_I when `double` is set). GU is computed inside GSP and
    lifted back.

    Args:
        context (GroupContext): The group context.
        mu (DominantCochar or sequence): The cocharacter.
        level (LevelStructure): The level I.
        double (boolean): Project to double cosets.

    Returns:
        list: WeylElements in canonical order.
    """
    if context.kind == 'GU':
        gsp, mu_gsp, level_gsp = to_gsp(context, mu, level)
        return canonical_order(lift_gsp_to_gu(w) for w in enumerate_admissible(gsp, mu_gsp, level_gsp, double))
    left, right = _parahorics(context, level, double)
    closure = downward_closure(translation_orbit(context, mu))
    reps = canonical_order(min_length_rep(w, left, right) for w in closure)
    logger.info('Adm(%s) in %s, I=%s: %d of %d Iwahori elements', list(getattr(mu, 'entries', mu)),
                context, list(level.indices), len(reps), len(closure))
    return reps


def _lattice_points(context, lows, highs, kottwitz):
    n = context.ambient_dim
    ranges = [range(lo, hi + 1) for lo, hi in zip(lows, highs)]
    if context.kind == 'GL':
        for point in itertools.product(*ranges):
            if sum(point) == kottwitz:
                yield point
        return
    m = context.rank
    if context.kind == 'GSP':
        middle, pairing = (), kottwitz
    else:
        if kottwitz not in ranges[m]:
            return
        middle, pairing = (kottwitz,), 2 * kottwitz
    for head in itertools.product(*ranges[:m]):
        tail = tuple(pairing - x for x in reversed(head))
        if all(x in r for x, r in zip(tail, ranges[n - m:])):
            yield head + middle + tail


def _box(perm, vertices, low, high):
    """Per-coordinate bounds on λ so that λ + σa - a stays in [low, high] at every vertex."""
    shifts = [[p - q for p, q in zip(apply_perm(perm, a), a)] for a in vertices]
    lows, highs = [], []
    for j in range(len(perm)):
        lows.append(max(math.ceil(low - shift[j]) for shift in shifts))
        highs.append(min(math.floor(high - shift[j]) for shift in shifts))
    return lows, highs


def enumerate_candidates(context, level, vertices, low, high, kottwitz, test, double=False):
    """Exhaustive search of W~ for cosets passing `test`.

    For every σ in the finite Weyl group, λ ranges over the lattice points
    of the box forced by λ + σa - a ∈ [low, high]^n at the given vertices,
    in the Ω-component `kottwitz`.

    Returns:
        list: Minimal-length coset representatives in canonical order.
    """
    left, right = _parahorics(context, level, double)
    reps = set()
    examined = 0
    for perm in context.finite_weyl_group():
        lows, highs = _box(perm, vertices, low, high)
        if any(lo > hi for lo, hi in zip(lows, highs)):
            continue
        for point in _lattice_points(context, lows, highs, kottwitz):
            examined += 1
            w = WeylElement(context, perm, point, _trusted=True)
            if test(w):
                reps.add(min_length_rep(w, left, right))
    logger.debug('Examined %d candidates in %s, I=%s', examined, context, list(level.indices))
    return canonical_order(reps)


def enumerate_permissible(context, variant, level, mu=None, s=None, double=False):
    """Exhaustive enumeration of a permissible set.

    Args:
        context (GroupContext): The group context.
        variant (string): One of 'kr-gl', 'kr-gsp', 'naive', 'wedge'.
        level (LevelStructure): The level I.
        mu (DominantCochar or sequence): Needed by the KR variants.
        s (integer): Needed by 'wedge'.
        double (boolean): Project to double cosets.

    Returns:
        list: WeylElements in canonical order.

    Raises:
        WeylError: If the variant does not fit the context or a parameter is missing.
    """
    if variant not in VARIANTS:
        raise WeylError('Unknown permissibility variant {!r}'.format(variant), variant=variant)

    if variant.startswith('kr'):
        if mu is None:
            raise WeylError('The {} variant needs a cocharacter'.format(variant), variant=variant)
        expected = 'GL' if variant == 'kr-gl' else 'GSP'
        if context.kind == 'GU' and variant == 'kr-gsp':
            gsp, mu_gsp, level_gsp = to_gsp(context, mu, level)
            return canonical_order(
                lift_gsp_to_gu(w) for w in enumerate_permissible(gsp, variant, level_gsp, mu_gsp, double=double))
        if context.kind != expected:
            raise WeylError('The {} variant needs a {} context'.format(variant, expected), context=str(context))
        mu = as_dominant(context, mu)
        kottwitz = translation(context, mu.entries).kottwitz()
        return enumerate_candidates(
            context, level, vertex_set(context, level), min(mu.entries), max(mu.entries), kottwitz,
            lambda w: is_mu_permissible(w, mu, level), double)

    if context.kind == 'GL':
        raise WeylError('The {} variant needs a GU or GSP context'.format(variant), context=str(context))
    if variant == 'wedge':
        if s is None:
            raise WeylError('The wedge variant needs s', variant=variant)

        def test(w):
            return is_wedge_permissible(w, level, s)
    else:
        def test(w):
            return is_naively_permissible(w, level)
    return enumerate_candidates(context, level, naive_vertices(context, level), 0, 2,
                                naive_kottwitz(context), test, double)


def naive_vertices(context, level):
    return [context.omega(c) for c in level.residues()]


def naive_kottwitz(context):
    """Ω-component of naively permissible elements: Σλ = n forces it."""
    return 1 if context.kind == 'GU' else 2


class EnumerationResult(FoundationObject):
    """
    A canonically ordered set of coset representatives and the parameters
    that produced it.

    Args:
        context (GroupContext): The group context.
        set_kind (string): 'adm', 'perm-kr', 'naive', 'wedge' or 'spin'.
        level (LevelStructure): The level I.
        elements (iterable): WeylElements.
        mu (sequence): The cocharacter, when the set depends on one.
        s (integer): The signature parameter, when the set depends on one.
        double (boolean): Whether the representatives are for double cosets.
    """
    def __init__(self, context, set_kind, level, elements, mu=None, s=None, double=False):
        self.context = context
        self.set_kind = set_kind
        self.level = level
        self.elements = canonical_order(elements)
        self.mu = None if mu is None else list(getattr(mu, 'entries', mu))
        self.s = s
        self.double = double

    @property
    def cardinality(self):
        return len(self.elements)

    def texts(self):
        return [w.text() for w in self.elements]

    def as_dict(self):
        return {
            'group': self.context.kind,
            'm_or_N': self.context.rank,
            'mu': self.mu,
            's': self.s,
            'I': list(self.level.indices),
            'set': self.set_kind,
            'double': self.double,
            'cardinality': self.cardinality,
            'elements': self.texts()
        }

    @classmethod
    def from_dict(cls, payload):
        """Rebuilds a result from its as_dict() form."""
        context = GroupContext(payload['group'], payload['m_or_N'])
        level = LevelStructure(context, payload['I'])
        elements = [WeylElement.from_text(context, text) for text in payload['elements']]
        return cls(context, payload['set'], level, elements, payload.get('mu'), payload.get('s'),
                   payload.get('double', False))
