from unitarylm.foundation import FaceError, FoundationObject


def _reverse(vector):
    return tuple(reversed(vector))


class FaceOfTypeI(FoundationObject):
    """
    A face of type I, stored on the residues of periodZ ± I.

    The lattice chain v_i for arbitrary integer i is recovered from the
    stored representatives through v_{i+period} = v_i - 1.

    Args:
        context (GroupContext): A GU or GSP context.
        level (LevelStructure): The level I.
        vectors (dict): residue -> integer vector, for every residue of the level.

    Returns:
        N/A

    Raises:
        FaceError: If the context is GL or the residues do not match the level.

    Examples:
        >>> face = unitarylm.faces.standard_face(ctx, level)
        >>> face.vector(3)
    """
    def __init__(self, context, level, vectors):
        if context.kind == 'GL':
            raise FaceError('Faces of type I are defined for GU and GSP only', context=str(context))
        self.context = context
        self._checkSameContext(level)
        residues = level.residues()
        if sorted(vectors) != list(residues):
            raise FaceError('Face vectors must be given exactly on the residues {}'.format(list(residues)),
                            residues=list(residues), given=sorted(vectors))
        self.level = level
        self.residues = residues
        self.vectors = dict((c, tuple(vectors[c])) for c in residues)
        for vector in self.vectors.values():
            self._checkDimension(vector)

    def vector(self, i):
        """v_i for any integer i in periodZ ± I.

        Raises:
            FaceError: If i is not congruent to a residue of the level.
        """
        b, c = divmod(i, self.context.period)
        if c not in self.vectors:
            raise FaceError('Index {} is not in the index set of the face'.format(i), index=i)
        return tuple(x - b for x in self.vectors[c])

    @property
    def d(self):
        """The level d read off v_0 + v_{-0}^* (or the first residue)."""
        c = self.residues[0]
        total = [a + b for a, b in zip(self.vector(c), _reverse(self.vector(-c)))]
        return total[0]

    def violations(self):
        """The facehood conditions this face violates.

        Returns:
            list: One dict per failure with a 'condition' key (F2, F3, F4, parity).
        """
        found = []
        period = self.context.period
        chain = list(self.residues) + [self.residues[0] + period]
        for i, j in zip(chain, chain[1:]):
            if any(a < b for a, b in zip(self.vector(i), self.vector(j))):
                found.append({'condition': 'F2', 'i': i, 'j': j})

        sums = dict((c, sum(self.vector(c)) + c) for c in chain)
        if len(set(sums.values())) > 1:
            found.append({'condition': 'F3', 'sums': dict((str(c), s - c) for c, s in sums.items())})

        d = self.d
        for c in self.residues:
            total = [a + b for a, b in zip(self.vector(c), _reverse(self.vector(-c)))]
            if any(x != d for x in total):
                found.append({'condition': 'F4', 'i': c, 'sum': total})

        if self.context.kind == 'GU' and d % 2:
            found.append({'condition': 'parity', 'd': d})
        return found

    def is_valid(self):
        return not self.violations()

    def validate(self):
        """Raises FaceError listing the failed conditions, if any."""
        found = self.violations()
        if found:
            raise FaceError('Not a face of type {}: {}'.format(list(self.level.indices), found),
                            violations=found)
        return self

    def as_dict(self):
        return {
            'I': list(self.level.indices),
            'd': self.d,
            'v': dict((str(c), list(v)) for c, v in self.vectors.items())
        }

    def __eq__(self, other):
        return isinstance(other, FaceOfTypeI) and \
            (self.level, self.vectors) == (other.level, other.vectors)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.level, tuple(sorted(self.vectors.items()))))

    def __repr__(self):
        return '<FaceOfTypeI {} I={} d={}>'.format(self.context, list(self.level.indices), self.d)


def standard_face(context, level):
    """The 0-face (ω_i)_i of type I.

    Args:
        context (GroupContext): A GU or GSP context.
        level (LevelStructure): The level I.

    Returns:
        FaceOfTypeI
    """
    vectors = dict((c, context.omega(c)) for c in level.residues())
    return FaceOfTypeI(context, level, vectors).validate()


def face_of(w, level):
    """The face w·(ω_i)_i.

    Args:
        w (WeylElement): An element of a GU or GSP context.
        level (LevelStructure): The level I.

    Returns:
        FaceOfTypeI
    """
    context = w.context
    vectors = dict((c, w.act(context.omega(c))) for c in level.residues())
    return FaceOfTypeI(context, level, vectors)
