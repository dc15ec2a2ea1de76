from sympy.combinatorics import Permutation

from unitarylm.foundation import SpinPreconditionError


def _checked(E):
    E = frozenset(E)
    n = len(E)
    if n == 0 or any(not 1 <= e <= 2 * n for e in E):
        raise SpinPreconditionError('E must be an n-element subset of 1..2n', E=sorted(E))
    return E, n


def _sign(one_line):
    return Permutation([x - 1 for x in one_line]).signature()


def perp(E, n=None):
    """E^⊥ = (2n+1-E)^c inside {1, ..., 2n}.

    Args:
        E (iterable): A subset of 1..2n.
        n (integer): Defaults to |E|.

    Returns:
        frozenset
    """
    E = frozenset(E)
    n = len(E) if n is None else n
    return frozenset(range(1, 2 * n + 1)) - frozenset(2 * n + 1 - e for e in E)


def sigma_sign(E):
    """sgn(σ_E), where σ_E sends 1..n to E and n+1..2n to its complement, both increasing.

    Args:
        E (iterable): An n-element subset of 1..2n.

    Returns:
        integer: +1 or -1

    Raises:
        SpinPreconditionError: If E is not an n-element subset of 1..2n.

    Examples:
        >>> unitarylm.spin.sigma_sign({2, 3, 6})
        -1
    """
    E, n = _checked(E)
    complement = frozenset(range(1, 2 * n + 1)) - E
    return _sign(sorted(E) + sorted(complement))


def sigma_prime_sign(E):
    """sgn(σ′_E): 1..n go to 2n+1-E in decreasing order, n+1..2n to E^⊥ in increasing order."""
    E, n = _checked(E)
    mirrored = sorted((2 * n + 1 - e for e in E), reverse=True)
    return _sign(mirrored + sorted(perp(E, n)))
