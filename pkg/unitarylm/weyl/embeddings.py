from unitarylm.foundation import LatticeError, WeylError
from unitarylm.weyl.context import GroupContext
from unitarylm.weyl.element import WeylElement


def _require(w, kind):
    if w.context.kind != kind:
        raise WeylError('Expected an element of a {} context, got {}'.format(kind, w.context),
                        context=str(w.context))


def embed_gu_to_gsp(w):
    """W~_GU(m) -> W~_GSP(m): drop coordinate m+1 and reindex.

    The image is the index-2 subgroup of elements with even Kottwitz invariant.

    Args:
        w (WeylElement): An element of a GU context.

    Returns:
        WeylElement
    """
    _require(w, 'GU')
    m = w.context.rank
    middle = m + 1

    def squeeze(j):
        return j if j < middle else j - 1

    perm = tuple(squeeze(image) for j, image in enumerate(w.perm, 1) if j != middle)
    trans = w.trans[:m] + w.trans[m + 1:]
    return WeylElement(GroupContext.gsp(m), perm, trans, _trusted=True)


def lift_gsp_to_gu(v):
    """Inverse of embed_gu_to_gsp on its image.

    Args:
        v (WeylElement): An element of a GSP context.

    Returns:
        WeylElement

    Raises:
        LatticeError: If the Kottwitz invariant of `v` is odd.
    """
    _require(v, 'GSP')
    c = v.kottwitz()
    if c % 2:
        raise LatticeError('Only elements with even Kottwitz invariant lift to GU', kottwitz=c)
    m = v.context.rank

    def spread(j):
        return j if j <= m else j + 1

    perm = tuple(spread(image) for image in v.perm[:m]) + (m + 1,) + \
        tuple(spread(image) for image in v.perm[m:])
    trans = v.trans[:m] + (c // 2,) + v.trans[m:]
    return WeylElement(GroupContext.gu(m), perm, trans, _trusted=True)


def embed_gsp_to_gl(w):
    """The inclusion W~_GSP(m) -> W~_GL(2m); the data is unchanged."""
    _require(w, 'GSP')
    return WeylElement(GroupContext.gl(w.context.ambient_dim), w.perm, w.trans, _trusted=True)


def restrict_gl_to_gsp(w, m):
    """The GSP(m) element with the same data as `w`, if there is one.

    Returns:
        WeylElement, or None when `w` is outside the embedded W~_GSP.
    """
    _require(w, 'GL')
    context = GroupContext.gsp(m)
    if not context.in_finite_weyl_group(w.perm) or not context.in_lattice(w.trans):
        return None
    return WeylElement(context, w.perm, w.trans, _trusted=True)


def embed_cochar_gu_to_gsp(mu):
    """(μ_1, ..., μ_n) -> μ with the middle coordinate m+1 removed."""
    mu = tuple(mu)
    m = len(mu) // 2
    return mu[:m] + mu[m + 1:]


def lift_cochar_gsp_to_gu(mu):
    """Inserts c(μ)/2 as the middle coordinate of a GSP cocharacter.

    Raises:
        LatticeError: If c(μ) is odd or μ is not in X_*.
    """
    mu = tuple(mu)
    m = len(mu) // 2
    c = GroupContext.gsp(m).pairing_sum(mu)
    if c is None or c % 2:
        raise LatticeError('Cocharacter {} does not lift to GU'.format(list(mu)), mu=list(mu))
    return mu[:m] + (c // 2,) + mu[m:]
