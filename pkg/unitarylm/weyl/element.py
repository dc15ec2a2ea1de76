import re

from sympy.utilities.iterables import multiset_permutations

from unitarylm.foundation import FoundationObject, LatticeError, WeylError

_TEXT_PATTERN = re.compile(r'^\s*perm=\[([-\d,\s]*)\];\s*trans=\[([-\d,\s]*)\]\s*$')


def apply_perm(perm, vector):
    """(σx)(σ(j)) = x(j), with σ in one-line notation.

    Args:
        perm (sequence): One-line permutation of 1..n.
        vector (sequence): The vector x.

    Returns:
        tuple
    """
    result = [None] * len(vector)
    for j, image in enumerate(perm):
        result[image - 1] = vector[j]
    return tuple(result)


def _invert_perm(perm):
    inverse = [0] * len(perm)
    for j, image in enumerate(perm):
        inverse[image - 1] = j + 1
    return tuple(inverse)


class WeylElement(FoundationObject):
    """
    An element t_λ·σ of an extended affine Weyl group, acting by x -> λ + σx.

    Args:
        context (GroupContext): The group the element belongs to.
        perm (sequence): σ in one-line notation, 1-indexed.
        trans (sequence): λ, an integer vector of the translation lattice.

    Returns:
        N/A

    Raises:
        LatticeError: If σ is not in the finite Weyl group or λ is not in the lattice.
        WeylError: If the lengths do not match the context.

    Examples:
        >>> w = unitarylm.weyl.WeylElement(unitarylm.weyl.GroupContext.gu(1), [3, 2, 1], [0, 0, 0])
        >>> w.act([-1, 0, 0])
    """
    def __init__(self, context, perm, trans, _trusted=False):
        perm = tuple(perm)
        trans = tuple(trans)
        if not _trusted:
            if len(perm) != context.ambient_dim or len(trans) != context.ambient_dim:
                raise WeylError(
                    'Element data must have length {}'.format(context.ambient_dim),
                    perm=list(perm), trans=list(trans))
            if not context.in_finite_weyl_group(perm):
                raise LatticeError(
                    'Permutation {} is not in the finite Weyl group of {}'.format(list(perm), context),
                    perm=list(perm))
            context.check_lattice(trans)
        self.context = context
        self.perm = perm
        self.trans = trans
        self._hash = hash((context, perm, trans))

    @classmethod
    def from_text(cls, context, text):
        """Parses the canonical text form `perm=[...];trans=[...]`.

        Args:
            context (GroupContext): The context to build the element in.
            text (string): The canonical text form.

        Returns:
            WeylElement

        Raises:
            WeylError: If the text is malformed.
        """
        match = _TEXT_PATTERN.match(text)
        if match is None:
            raise WeylError('Malformed element text {!r}'.format(text), text=text)
        perm, trans = ([int(x) for x in group.split(',') if x.strip()] for group in match.groups())
        return cls(context, perm, trans)

    def compose(self, other):
        """The product self·other, i.e. t_{λ_a + σ_a λ_b}·σ_aσ_b."""
        self._checkSameContext(other)
        perm = tuple(self.perm[image - 1] for image in other.perm)
        moved = apply_perm(self.perm, other.trans)
        trans = tuple(a + b for a, b in zip(self.trans, moved))
        return WeylElement(self.context, perm, trans, _trusted=True)

    __mul__ = compose

    def inverse(self):
        """t_{-σ⁻¹λ}·σ⁻¹"""
        perm = _invert_perm(self.perm)
        trans = tuple(-x for x in apply_perm(perm, self.trans))
        return WeylElement(self.context, perm, trans, _trusted=True)

    def act(self, vector):
        """The affine action x -> λ + σx on a rational vector.

        Args:
            vector (sequence): Integers or Fractions, length ambient_dim.

        Returns:
            tuple

        Raises:
            DimensionError: If the vector has the wrong length.
        """
        self._checkDimension(vector)
        moved = apply_perm(self.perm, vector)
        return tuple(a + b for a, b in zip(self.trans, moved))

    def kottwitz(self):
        """The integer labelling the W_a-coset (the Ω-component).

        Returns:
            integer: GL: Σλ. GSP: λ_1 + λ_{2m}. GU: λ_{m+1}.
        """
        kind = self.context.kind
        if kind == 'GL':
            return sum(self.trans)
        if kind == 'GSP':
            return self.trans[0] + self.trans[-1]
        return self.trans[self.context.rank]

    def is_translation(self):
        return self.perm == tuple(range(1, len(self.perm) + 1))

    def text(self):
        """The canonical text form `perm=[i1,...,iN];trans=[t1,...,tN]`."""
        return 'perm=[{}];trans=[{}]'.format(
            ','.join(str(x) for x in self.perm), ','.join(str(x) for x in self.trans))

    def as_dict(self):
        payload = self.context.as_dict()
        payload['element'] = self.text()
        return payload

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self._hash == other._hash and \
            (self.context, self.perm, self.trans) == (other.context, other.perm, other.trans)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return '<{} {}>'.format(self.context, self.text())


def identity(context):
    n = context.ambient_dim
    return WeylElement(context, range(1, n + 1), [0] * n, _trusted=True)


def compose(a, b):
    return a.compose(b)


def inverse(a):
    return a.inverse()


def affine_action(w, x):
    return w.act(x)


def translation(context, vector):
    """t_λ for λ in the translation lattice.

    Raises:
        LatticeError: If λ violates the lattice constraints.
    """
    n = context.ambient_dim
    return WeylElement(context, range(1, n + 1), vector)


def kottwitz_invariant(w):
    return w.kottwitz()


def weyl_orbit(context, mu):
    """The orbit of μ under the finite Weyl group, as a set of tuples.

    Raises:
        LatticeError: If μ is not in the translation lattice.
    """
    context.check_lattice(mu)
    if context.kind == 'GL':
        return set(tuple(x) for x in multiset_permutations(list(mu)))
    return set(apply_perm(perm, mu) for perm in context.finite_weyl_group())
