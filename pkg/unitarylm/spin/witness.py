import logging

from unitarylm.foundation import FoundationObject, SpinPreconditionError, WeylError
from unitarylm.permissibility.enumeration import enumerate_candidates, naive_kottwitz, naive_vertices
from unitarylm.permissibility.naive import is_naively_permissible, mu_vectors
from unitarylm.spin.signs import perp, sigma_sign

logger = logging.getLogger(__name__)

STRICT = 'STRICT'
SELF_DUAL = 'SELF_DUAL'


class SpinWitness(FoundationObject):
    """
    The index sets, exponents and signs deciding the spin condition at one index.

    For a mirrored witness (index -i) the E-sets are the ⊥ of those computed
    from μ_i = 2 - μ_{-i}^*; q, q^⊥, the case and the signs carry over.

    Attributes:
        i (integer): The index in I.
        mirrored (boolean): Whether the witness is for -i.
        E_minus, E_plus, E_perp_minus, E_perp_plus (frozenset): n-element subsets of 1..2n.
        q, q_perp (integer): Odd exponents with q ≥ q_perp.
        sgn_minus, sgn_plus (integer): sgn(σ_{E_-}), sgn(σ_{E_+}).
        case (string): STRICT or SELF_DUAL.
        satisfied (boolean): Whether the spin condition holds at this index.
        target_sign (integer): The requested eigenvalue, or None.
        target_E (frozenset): In the SELF_DUAL case, the E_± whose f_E lies in
            the target eigenspace; None otherwise.
    """
    def __init__(self, i, mirrored, E_minus, E_plus, E_perp_minus, E_perp_plus,
                 q, q_perp, sgn_minus, sgn_plus, target_sign=None):
        self.i = i
        self.mirrored = mirrored
        self.E_minus = E_minus
        self.E_plus = E_plus
        self.E_perp_minus = E_perp_minus
        self.E_perp_plus = E_perp_plus
        self.q = q
        self.q_perp = q_perp
        self.sgn_minus = sgn_minus
        self.sgn_plus = sgn_plus
        self.case = STRICT if q > q_perp else SELF_DUAL
        self.satisfied = q > q_perp or (
            q == q_perp and E_minus == E_perp_minus and E_plus == E_perp_plus and sgn_plus == -sgn_minus)
        self.target_sign = target_sign
        self.target_E = None
        if target_sign is not None and self.case == SELF_DUAL and self.satisfied:
            self.target_E = E_plus if sgn_plus == target_sign else E_minus

    def as_dict(self):
        return {
            'i': -self.i if self.mirrored else self.i,
            'E_minus': sorted(self.E_minus),
            'E_plus': sorted(self.E_plus),
            'E_perp_minus': sorted(self.E_perp_minus),
            'E_perp_plus': sorted(self.E_perp_plus),
            'q': self.q,
            'q_perp': self.q_perp,
            'case': self.case,
            'sgn_minus': self.sgn_minus,
            'sgn_plus': self.sgn_plus,
            'satisfied': self.satisfied
        }

    def __repr__(self):
        return '<SpinWitness i={}{} {} satisfied={}>'.format(
            '-' if self.mirrored else '', self.i, self.case, self.satisfied)


def _check_preconditions(mu, i):
    n = len(mu)
    if n % 2 == 0:
        raise SpinPreconditionError('μ must have odd length n = 2m+1', inequality='n odd', n=n)
    m = n // 2
    if not 0 <= i <= m:
        raise SpinPreconditionError('Index {} outside 0..{}'.format(i, m), inequality='0 <= i <= m', i=i)
    if min(mu) < 0 or max(mu) > 2:
        raise SpinPreconditionError('Entries of μ must lie in [0, 2]', inequality='0 <= mu <= 2', mu=list(mu))
    if sum(mu) != n:
        raise SpinPreconditionError('Entries of μ must sum to n', inequality='sum(mu) = n', mu=list(mu))
    if mu[m] != 1:
        raise SpinPreconditionError('μ(m+1) must be 1', inequality='mu(m+1) = 1', mu=list(mu))


def _e_sets(mu, i):
    n = len(mu)
    m = n // 2

    def value(j):
        return mu[j - 1]

    core = set(j for j in range(1, i + 1) if value(j) == 0)
    core |= set(j for j in range(i + 1, m + 1) if value(j) in (0, 1))
    core |= set(j for j in range(m + 2, n + 1) if value(j) == 0)
    core |= set(n + j for j in range(1, i + 1) if value(j) in (0, 1))
    core |= set(n + j for j in range(i + 1, m + 1) if value(j) == 0)
    core |= set(n + j for j in range(m + 2, n + 1) if value(j) in (0, 1))
    return frozenset(core | {m + 1}), frozenset(core | {n + m + 1})


def spin_witness(mu_i, i, sign=None, mirror=False):
    """Evaluates the spin condition at index i (or -i when `mirror` is set).

    Args:
        mu_i (sequence): μ_i, or μ_{-i} when mirror is set, from a naively
            permissible face: 0 ≤ μ ≤ 2, Σμ = n, μ(m+1) = 1.
        i (integer): The index in 0..m.
        sign (integer): Optional target eigenvalue +1 or -1, normally (-1)^s.
        mirror (boolean): Treat mu_i as μ_{-i}.

    Returns:
        SpinWitness

    Raises:
        SpinPreconditionError: Naming the failing inequality.

    Examples:
        >>> w = unitarylm.spin.spin_witness((2, 1, 0), 1)
        >>> sorted(w.E_minus), w.case
        ([2, 3, 6], 'SELF_DUAL')
    """
    mu = tuple(mu_i)
    _check_preconditions(mu, i)
    if sign not in (None, 1, -1):
        raise SpinPreconditionError('Target sign must be +1 or -1', inequality='sign in {+1,-1}', sign=sign)
    if mirror:
        mu = tuple(2 - x for x in reversed(mu))
    n = len(mu)
    m = n // 2

    E_minus, E_plus = _e_sets(mu, i)
    perp_minus, perp_plus = perp(E_minus, n), perp(E_plus, n)
    q = 1 + 2 * sum(1 for j in range(i + 1, m + 1) if mu[j - 1] in (0, 1))
    q_perp = 1 + 2 * sum(1 for j in range(i + 1, m + 1) if mu[n - j] == 2)
    sgn_minus, sgn_plus = sigma_sign(E_minus), sigma_sign(E_plus)
    if mirror:
        E_minus, E_plus, perp_minus, perp_plus = perp_minus, perp_plus, E_minus, E_plus
    return SpinWitness(i, mirror, E_minus, E_plus, perp_minus, perp_plus,
                       q, q_perp, sgn_minus, sgn_plus, sign)


def spanners(mu_i):
    """Labels of the vectors spanning the fixed-point subspace encoded by μ_i.

    Coordinate j contributes e_j when μ_i(j) = 0, and πe_j when μ_i(j) is 0 or 1.

    Returns:
        set: ('e', j) and ('pi_e', j) labels.
    """
    labels = set()
    for j, value in enumerate(mu_i, 1):
        if value == 0:
            labels.add(('e', j))
        if value in (0, 1):
            labels.add(('pi_e', j))
    return labels


def pi_rank(mu_i):
    """Rank of π on the encoded subspace: coordinates carrying both e_j and πe_j, i.e. the zeros of μ_i."""
    labels = spanners(mu_i)
    return sum(1 for kind, j in labels if kind == 'e' and ('pi_e', j) in labels)


def is_spin_permissible(w, level, s):
    """Naive permissibility, the spin condition at every i and -i, and π-rank at most s.

    Args:
        w (WeylElement): An element of a GU context.
        level (LevelStructure): The level I.
        s (integer): The signature parameter.

    Returns:
        boolean

    Raises:
        WeylError: If w is not in a GU context or s is out of range.
    """
    context = w.context
    if context.kind != 'GU':
        raise WeylError('The spin condition is defined for GU contexts', context=str(context))
    if not 0 <= s <= context.rank:
        raise WeylError('s must lie in 0..{}'.format(context.rank), s=s)
    if not is_naively_permissible(w, level):
        return False
    n = context.ambient_dim
    sign = (-1) ** s
    vectors = mu_vectors(w, level)
    for i in level.indices:
        if not spin_witness(vectors[i], i, sign).satisfied:
            return False
        if not spin_witness(vectors[(-i) % n], i, sign, mirror=True).satisfied:
            return False
    return all(pi_rank(mu) <= s for mu in vectors.values())


def enumerate_spin_permissible(context, level, s, double=False):
    """All spin-permissible cosets of a GU context, by exhaustive search.

    Returns:
        list: Minimal-length representatives in canonical order.
    """
    return enumerate_candidates(context, level, naive_vertices(context, level), 0, 2,
                                naive_kottwitz(context), lambda w: is_spin_permissible(w, level, s), double)
