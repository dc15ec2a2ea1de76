from fractions import Fraction

from unitarylm.foundation import WeylError
from unitarylm.bruhat.order import bruhat_leq
from unitarylm.bruhat.parahoric import ParahoricSubgroup, min_length_rep
from unitarylm.permissibility.hull import DominantCochar, conv_hull_member_gl, conv_hull_member_gsp
from unitarylm.weyl.context import GroupContext
from unitarylm.weyl.element import translation, weyl_orbit
from unitarylm.weyl.embeddings import embed_cochar_gu_to_gsp, embed_gu_to_gsp


def as_dominant(context, mu):
    """Accepts a DominantCochar or any vector of its Weyl orbit."""
    if isinstance(mu, DominantCochar):
        if mu.context != context:
            mu = DominantCochar(context, mu.entries)
        return mu
    return DominantCochar.from_vector(context, mu)


def to_gsp(context, mu, level):
    """The GSP(m) counterparts of a GU(m) cocharacter and level."""
    gsp = GroupContext.gsp(context.rank)
    entries = mu.entries if isinstance(mu, DominantCochar) else tuple(mu)
    return gsp, DominantCochar.from_vector(gsp, embed_cochar_gu_to_gsp(entries)), level.transfer(gsp)


def vertex_set(context, level):
    """The vertices a at which w·a - a is tested.

    GSP: η_i = ((-1/2)^(i), 0^(2m-2i), (1/2)^(i)) for i in I.
    GL: ω_c for the residues c of the level.

    Returns:
        list: Rational vectors.

    Raises:
        WeylError: For GU contexts, which are handled through GSP.
    """
    if context.kind == 'GSP':
        m = context.rank
        half = Fraction(1, 2)
        return [tuple([-half] * i + [Fraction(0)] * (2 * m - 2 * i) + [half] * i) for i in level.indices]
    if context.kind == 'GL':
        return [context.omega(c) for c in level.residues()]
    raise WeylError('GU vertex sets are computed through the GSP embedding', context=str(context))


def translation_orbit(context, mu):
    """t_{σμ} for every distinct σμ, sorted by translation vector."""
    entries = mu.entries if isinstance(mu, DominantCochar) else tuple(mu)
    return [translation(context, v) for v in sorted(weyl_orbit(context, entries))]


def is_mu_permissible(w, mu, level):
    """Kottwitz-Rapoport μ-permissibility of the coset w·W_I.

    w must lie in the Ω-component of t_μ, and w·a - a must lie in the
    convex hull of the Weyl orbit of μ at every vertex of vertex_set.
    GU elements are tested through embed_gu_to_gsp.

    Args:
        w (WeylElement): Any element.
        mu (DominantCochar or sequence): The cocharacter.
        level (LevelStructure): The level I.

    Returns:
        boolean
    """
    context = w.context
    if context.kind == 'GU':
        gsp, mu_gsp, level_gsp = to_gsp(context, mu, level)
        return is_mu_permissible(embed_gu_to_gsp(w), mu_gsp, level_gsp)
    mu = as_dominant(context, mu)
    if w.kottwitz() != translation(context, mu.entries).kottwitz():
        return False
    member = conv_hull_member_gsp if context.kind == 'GSP' else conv_hull_member_gl
    for a in vertex_set(context, level):
        image = w.act(a)
        if not member(mu, [p - q for p, q in zip(image, a)]):
            return False
    return True


def is_mu_admissible(w, mu, level, double=False):
    """Whether W_I·w·W_I (or w·W_I) lies below some t_{σμ} in the Bruhat order.

    Args:
        w (WeylElement): Any element.
        mu (DominantCochar or sequence): The cocharacter.
        level (LevelStructure): The level I.
        double (boolean): Compare double cosets instead of right cosets.

    Returns:
        boolean
    """
    context = w.context
    if context.kind == 'GU':
        gsp, mu_gsp, level_gsp = to_gsp(context, mu, level)
        return is_mu_admissible(embed_gu_to_gsp(w), mu_gsp, level_gsp, double)
    w._checkSameContext(level)
    right = ParahoricSubgroup(context, level)
    left = right if double else None
    rep = min_length_rep(w, left, right)
    for t in translation_orbit(context, mu):
        if rep.kottwitz() != t.kottwitz():
            return False
        if bruhat_leq(rep, min_length_rep(t, left, right)):
            return True
    return False
