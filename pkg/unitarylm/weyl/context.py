import itertools
from functools import lru_cache

from unitarylm.foundation import FoundationObject, LatticeError, WeylError


class GroupContext(FoundationObject):
    """
    One of the three groups whose Iwahori-Weyl groups we work in.

    GL(N) acts on N coordinates, GSP(m) on 2m coordinates and GU(m) on
    n = 2m+1 coordinates. The context fixes the translation lattice, the
    finite Weyl group and, through the bruhat subpackage, the base alcove.

    Args:
        kind (string): One of 'GL', 'GSP', 'GU' (case insensitive).
        rank (integer): N for GL, m for GSP and GU.

    Returns:
        N/A

    Raises:
        WeylError: If the kind is unknown or the rank is not a positive integer.

    Examples:
        >>> ctx = unitarylm.weyl.GroupContext('GU', 1)
        >>> ctx.ambient_dim
    """
    KINDS = ('GL', 'GSP', 'GU')

    def __init__(self, kind, rank):
        kind = str(kind).upper()
        if kind not in self.KINDS:
            raise WeylError('Unknown group kind {!r}'.format(kind), kind=kind)
        if isinstance(rank, bool) or not isinstance(rank, int) or rank < 1:
            raise WeylError('Rank must be a positive integer, got {!r}'.format(rank), rank=rank)

        self.kind = kind
        self.rank = rank
        if kind == 'GL':
            self.ambient_dim = rank
        elif kind == 'GSP':
            self.ambient_dim = 2 * rank
        else:
            self.ambient_dim = 2 * rank + 1

    @classmethod
    def gl(cls, N):
        return cls('GL', N)

    @classmethod
    def gsp(cls, m):
        return cls('GSP', m)

    @classmethod
    def gu(cls, m):
        return cls('GU', m)

    @property
    def context(self):
        return self

    @property
    def period(self):
        """Period of the index set nZ ± I (n, 2m or N)."""
        return self.ambient_dim

    @property
    def middle(self):
        """The fixed coordinate m+1 of GU, None elsewhere."""
        if self.kind == 'GU':
            return self.rank + 1
        return None

    def star(self, j):
        """j* = n+1-j"""
        return self.ambient_dim + 1 - j

    def pairing_sum(self, vector):
        """The common value of x_j + x_{j*} for a vector of X_*, or None.

        Args:
            vector (sequence): An integer or rational vector.

        Returns:
            The common sum when all pairs agree (and, for GU, it equals
            2 x_{m+1}); None otherwise.
        """
        n = self.ambient_dim
        sums = set(vector[j] + vector[n - 1 - j] for j in range(n // 2))
        if self.kind == 'GU':
            sums.add(2 * vector[self.rank])
        if len(sums) > 1:
            return None
        if not sums:
            return 2 * vector[0]
        return sums.pop()

    def in_lattice(self, vector):
        """Whether `vector` lies in the translation lattice of the context.

        Args:
            vector (sequence): Integer vector of length ambient_dim.

        Returns:
            boolean
        """
        if len(vector) != self.ambient_dim:
            return False
        if any(isinstance(x, bool) or not isinstance(x, int) for x in vector):
            return False
        if self.kind == 'GL':
            return True
        return self.pairing_sum(vector) is not None

    def in_finite_weyl_group(self, perm):
        """Whether the one-line permutation `perm` lies in S_N or S_n^*.

        Args:
            perm (sequence): Images of 1..n.

        Returns:
            boolean
        """
        n = self.ambient_dim
        if sorted(perm) != list(range(1, n + 1)):
            return False
        if self.kind == 'GL':
            return True
        return all(perm[n - j] == n + 1 - perm[j - 1] for j in range(1, n + 1))

    def check_lattice(self, vector):
        """Raises LatticeError unless `vector` is in the translation lattice."""
        if not self.in_lattice(vector):
            raise LatticeError(
                'Vector {} is not in the translation lattice of {}'.format(list(vector), self),
                context=str(self), vector=list(vector))

    def finite_weyl_group(self):
        """All elements of S_N (GL) or S_n^* (GSP, GU), in lexicographic order.

        Returns:
            tuple: One-line permutations.
        """
        return _finite_weyl_group(self.kind, self.rank)

    def omega_generator(self):
        """The length-zero element generating the alcove stabilizer.

        Returns:
            WeylElement: GL: x -> (x_2,...,x_N,x_1+1). GSP: x -> (x_{m+1},...,x_{2m},x_1+1,...,x_m+1).
            GU: the central translation by (1,...,1).
        """
        from unitarylm.weyl.element import WeylElement

        n = self.ambient_dim
        if self.kind == 'GU':
            return WeylElement(self, range(1, n + 1), [1] * n)
        shift = 1 if self.kind == 'GL' else self.rank
        # output coordinate j reads input coordinate j+shift, wrapping with +1
        perm = [((j - 1 - shift) % n) + 1 for j in range(1, n + 1)]
        trans = [0] * (n - shift) + [1] * shift
        return WeylElement(self, perm, trans)

    def omega(self, i):
        """The standard vertex ω_i = ((-1)^(c), 0^(n-c)) - b·1 for i = b·n + c.

        Args:
            i (integer): Any integer index.

        Returns:
            tuple
        """
        b, c = divmod(i, self.period)
        return tuple([-1 - b] * c + [-b] * (self.ambient_dim - c))

    def as_dict(self):
        return {'group': self.kind, 'rank': self.rank}

    def __eq__(self, other):
        return isinstance(other, GroupContext) and (self.kind, self.rank) == (other.kind, other.rank)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.kind, self.rank))

    def __repr__(self):
        return '{}({})'.format(self.kind, self.rank)


@lru_cache(maxsize=None)
def _finite_weyl_group(kind, rank):
    if kind == 'GL':
        return tuple(itertools.permutations(range(1, rank + 1)))

    n = 2 * rank if kind == 'GSP' else 2 * rank + 1
    elements = []
    for base in itertools.permutations(range(1, rank + 1)):
        for flips in itertools.product((False, True), repeat=rank):
            perm = [0] * n
            for j in range(1, rank + 1):
                image = base[j - 1]
                if flips[j - 1]:
                    image = n + 1 - image
                perm[j - 1] = image
                perm[n - j] = n + 1 - image
            if kind == 'GU':
                perm[rank] = rank + 1
            elements.append(tuple(perm))
    return tuple(sorted(elements))


class LevelStructure(FoundationObject):
    """
    The level I of a parahoric: a nonempty subset of {0,...,m} for GSP and GU,
    or an explicit residue set inside {0,...,N-1} for GL.

    Args:
        context (GroupContext): The group the level belongs to.
        indices (iterable): The integers in I.

    Returns:
        N/A

    Raises:
        WeylError: If I is empty or has entries out of range.

    Examples:
        >>> level = unitarylm.weyl.LevelStructure(ctx, [0, 1])
        >>> level.residues()
    """
    def __init__(self, context, indices):
        indices = tuple(sorted(set(int(i) for i in indices)))
        upper = context.rank if context.kind != 'GL' else context.ambient_dim - 1
        if not indices:
            raise WeylError('A level structure needs at least one index', context=str(context))
        if indices[0] < 0 or indices[-1] > upper:
            raise WeylError(
                'Level indices {} out of range 0..{}'.format(list(indices), upper),
                context=str(context), indices=list(indices))
        self.context = context
        self.indices = indices

    @classmethod
    def iwahori(cls, context):
        """The Iwahori level (all indices)."""
        upper = context.rank if context.kind != 'GL' else context.ambient_dim - 1
        return cls(context, range(upper + 1))

    @classmethod
    def parse(cls, context, text):
        """Builds a level from text such as '0,2'."""
        try:
            indices = [int(part) for part in str(text).split(',') if part.strip()]
        except ValueError:
            raise WeylError('Cannot parse level {!r}'.format(text), text=text)
        return cls(context, indices)

    def is_iwahori(self):
        return self == LevelStructure.iwahori(self.context)

    def residues(self):
        """The residues of periodZ ± I modulo the period, sorted.

        For GL the stored residue set is returned unchanged.

        Returns:
            tuple
        """
        if self.context.kind == 'GL':
            return self.indices
        period = self.context.period
        found = set()
        for i in self.indices:
            found.add(i % period)
            found.add((-i) % period)
        return tuple(sorted(found))

    def transfer(self, context):
        """The same indices I as a level of another GU/GSP context of equal rank."""
        if context.kind == 'GL' or self.context.kind == 'GL' or context.rank != self.context.rank:
            raise WeylError('Cannot transfer {} to {}'.format(self, context), context=str(context))
        return LevelStructure(context, self.indices)

    def for_gl(self):
        """The ±I residue level inside GL(2m) for a GSP level.

        Returns:
            LevelStructure

        Raises:
            WeylError: If the level does not belong to a GSP context.
        """
        if self.context.kind != 'GSP':
            raise WeylError('Only GSP levels have a GL counterpart', context=str(self.context))
        return LevelStructure(GroupContext.gl(self.context.ambient_dim), self.residues())

    def as_dict(self):
        return {'I': list(self.indices)}

    def __eq__(self, other):
        return isinstance(other, LevelStructure) and \
            (self.context, self.indices) == (other.context, other.indices)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.context, self.indices))

    def __repr__(self):
        return 'LevelStructure({}, {})'.format(self.context, list(self.indices))
