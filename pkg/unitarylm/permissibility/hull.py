from fractions import Fraction
from itertools import accumulate

from unitarylm.foundation import FoundationObject, LatticeError, WeylError


class DominantCochar(FoundationObject):
    """
    A dominant cocharacter μ = (n_1 ≥ ... ≥ n_N) of a group context.

    Args:
        context (GroupContext): The group context.
        entries (sequence): Integers, weakly decreasing.

    Returns:
        N/A

    Raises:
        LatticeError: If the entries are not weakly decreasing or not in the lattice.

    Examples:
        >>> mu = unitarylm.permissibility.DominantCochar(unitarylm.weyl.GroupContext.gsp(2), [2, 1, 1, 0])
        >>> mu.hull().prefix_sums
    """
    def __init__(self, context, entries):
        entries = tuple(entries)
        if len(entries) != context.ambient_dim:
            raise WeylError('Cocharacter must have {} entries'.format(context.ambient_dim), mu=list(entries))
        if any(a < b for a, b in zip(entries, entries[1:])):
            raise LatticeError('Cocharacter {} is not dominant'.format(list(entries)), mu=list(entries))
        context.check_lattice(entries)
        self.context = context
        self.entries = entries

    @classmethod
    def from_vector(cls, context, vector):
        """The dominant representative of the Weyl orbit of `vector`."""
        return cls(context, sorted(vector, reverse=True))

    @classmethod
    def rs(cls, context, s):
        """μ_{r,s} = (2^(s), 1^(n-2s), 0^(s)) for GU and GSP contexts.

        Raises:
            WeylError: If s is outside 0..m.
        """
        if context.kind == 'GL' or not 0 <= s <= context.rank:
            raise WeylError('s must lie in 0..m for a GU or GSP context', s=s, context=str(context))
        n = context.ambient_dim
        return cls(context, [2] * s + [1] * (n - 2 * s) + [0] * s)

    @property
    def pairing(self):
        """c(μ), the common value of n_j + n_{j*} (GSP and GU only)."""
        return self.context.pairing_sum(self.entries)

    def hull(self):
        return HullDescriptor(self)

    def as_dict(self):
        return {'mu': list(self.entries)}

    def __eq__(self, other):
        return isinstance(other, DominantCochar) and \
            (self.context, self.entries) == (other.context, other.entries)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.context, self.entries))

    def __repr__(self):
        return 'DominantCochar({}, {})'.format(self.context, list(self.entries))


class HullDescriptor(object):
    """Prefix sums n_1+...+n_i and suffix sums of the i smallest entries of μ."""

    def __init__(self, mu):
        self.mu = mu
        self.prefix_sums = tuple(accumulate(mu.entries))
        self.suffix_sums = tuple(accumulate(reversed(mu.entries)))
        self.total = self.prefix_sums[-1]


def _as_fractions(x):
    return [Fraction(v) for v in x]


def conv_hull_member_gl(mu, x):
    """Membership of x in Conv(S_N·μ).

    The sum of the i largest coordinates of x must not exceed
    n_1 + ... + n_i, with equality for i = N.

    Args:
        mu (DominantCochar): The dominant cocharacter.
        x (sequence): A rational vector of the same length.

    Returns:
        boolean
    """
    hull = mu.hull()
    x = sorted(_as_fractions(x), reverse=True)
    if len(x) != len(mu.entries):
        return False
    partial = list(accumulate(x))
    if partial[-1] != hull.total:
        return False
    return all(p <= bound for p, bound in zip(partial, hull.prefix_sums))


def conv_hull_member_gl_suffix(mu, x):
    """The lower-bound form of conv_hull_member_gl: the i smallest coordinates
    of x sum to at least the i smallest entries of μ.
    """
    hull = mu.hull()
    x = sorted(_as_fractions(x))
    if len(x) != len(mu.entries):
        return False
    partial = list(accumulate(x))
    if partial[-1] != hull.total:
        return False
    return all(p >= bound for p, bound in zip(partial, hull.suffix_sums))


def conv_hull_member_gsp(mu, x):
    """Membership of x in Conv(S_2m^*·μ) = Conv(S_2m·μ) ∩ V.

    x must lie in V with c(x) = c(μ); on V the top-i bounds for i ≤ m imply
    the remaining ones.

    Args:
        mu (DominantCochar): A dominant cocharacter of a GSP context.
        x (sequence): A rational vector of length 2m.

    Returns:
        boolean

    Raises:
        WeylError: If μ does not belong to a GSP context.
    """
    context = mu.context
    if context.kind != 'GSP':
        raise WeylError('conv_hull_member_gsp needs a GSP cocharacter', context=str(context))
    x = _as_fractions(x)
    if len(x) != context.ambient_dim or context.pairing_sum(x) != mu.pairing:
        return False
    partial = list(accumulate(sorted(x, reverse=True)))
    hull = mu.hull()
    return all(partial[i] <= hull.prefix_sums[i] for i in range(context.rank))
