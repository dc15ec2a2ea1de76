from collections import OrderedDict

from unitarylm.foundation import WeylError


def _require_face_context(w, level):
    if w.context.kind == 'GL':
        raise WeylError('Naive and wedge permissibility are defined for GU and GSP only',
                        context=str(w.context))
    w._checkSameContext(level)


def mu_vectors(w, level):
    """μ_c = w·ω_c - ω_c for every residue c of the level, in residue order.

    Args:
        w (WeylElement): An element of a GU or GSP context.
        level (LevelStructure): The level I.

    Returns:
        OrderedDict: residue -> integer vector
    """
    _require_face_context(w, level)
    context = w.context
    vectors = OrderedDict()
    for c in level.residues():
        omega = context.omega(c)
        vectors[c] = tuple(a - b for a, b in zip(w.act(omega), omega))
    return vectors


def is_naively_permissible(w, level):
    """0 ≤ μ_c ≤ 2 and Σμ_c = n (2m for GSP) at every residue c.

    Args:
        w (WeylElement): An element of a GU or GSP context.
        level (LevelStructure): The level I.

    Returns:
        boolean
    """
    n = w.context.ambient_dim
    for mu in mu_vectors(w, level).values():
        if sum(mu) != n or min(mu) < 0 or max(mu) > 2:
            return False
    return True


def is_wedge_permissible(w, level, s):
    """Naive permissibility plus at most s zero entries in every μ_c.

    Args:
        w (WeylElement): An element of a GU or GSP context.
        level (LevelStructure): The level I.
        s (integer): The signature parameter, 0 ≤ s ≤ m.

    Returns:
        boolean

    Raises:
        WeylError: If s is out of range.
    """
    if not 0 <= s <= w.context.rank:
        raise WeylError('s must lie in 0..{}'.format(w.context.rank), s=s)
    if not is_naively_permissible(w, level):
        return False
    return all(mu.count(0) <= s for mu in mu_vectors(w, level).values())
