"""An independent Bruhat order based on reduced words and the subword property.

It only shares the length function with unitarylm.bruhat.order and is used
to cross-check the covering-relation search on small groups.
"""
from unitarylm.bruhat.alcove import length, omega_decompose, simple_reflections
from unitarylm.weyl.element import identity


def reduced_word(w):
    """A reduced expression w = s_{i_1}···s_{i_k}·ω.

    Args:
        w (WeylElement): Any element.

    Returns:
        tuple: (list of simple reflection labels, ω)
    """
    simple = simple_reflections(w.context)
    labels = []
    current = w
    current_length = length(w)
    while current_length > 0:
        for label, s in simple.items():
            candidate = s * current
            if length(candidate) < current_length:
                labels.append(label)
                current = candidate
                current_length -= 1
                break
    return labels, current


def subword_interval(b):
    """All products of subwords of a reduced word of b, times its ω part."""
    labels, omega = reduced_word(b)
    simple = simple_reflections(b.context)
    products = {identity(b.context)}
    for label in labels:
        s = simple[label]
        products |= set(x * s for x in products)
    return frozenset(x * omega for x in products)


def subword_leq(a, b):
    """Bruhat order via the subword property."""
    a._checkSameContext(b)
    if omega_decompose(a)[1] != omega_decompose(b)[1]:
        return False
    return a in subword_interval(b)
