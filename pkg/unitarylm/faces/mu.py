from unitarylm.foundation import FaceError, FoundationObject


class MuFamily(FoundationObject):
    """
    The vectors μ_i = v_i - ω_i of a face, on the residues of its level.

    Args:
        context (GroupContext): A GU or GSP context.
        level (LevelStructure): The level I.
        mu (dict): residue -> integer vector.
        d (integer): The level of the face.

    Returns:
        N/A
    """
    def __init__(self, context, level, mu, d):
        self.context = context
        self.level = level
        self.mu = dict((c, tuple(v)) for c, v in mu.items())
        self.d = d

    def at(self, i):
        """μ_i for any integer i (μ is periodic in i)."""
        c = i % self.context.period
        if c not in self.mu:
            raise FaceError('Index {} is not in the index set of the family'.format(i), index=i)
        return self.mu[c]

    def violations(self):
        found = []
        if len(set(sum(v) for v in self.mu.values())) > 1:
            found.append({'condition': 'sum', 'sums': dict((str(c), sum(v)) for c, v in self.mu.items())})
        for c in self.mu:
            total = [a + b for a, b in zip(self.at(c), reversed(self.at(-c)))]
            if any(x != self.d for x in total):
                found.append({'condition': 'duality', 'i': c, 'sum': total})
        middle = self.context.middle
        if middle is not None:
            for c, v in self.mu.items():
                if 2 * v[middle - 1] != self.d:
                    found.append({'condition': 'middle', 'i': c, 'value': v[middle - 1]})
        return found

    def as_dict(self):
        return {
            'I': list(self.level.indices),
            'd': self.d,
            'mu': dict((str(c), list(v)) for c, v in self.mu.items())
        }

    def __repr__(self):
        return '<MuFamily {} d={} {}>'.format(self.context, self.d, self.mu)


def mu_family(face):
    """μ_i = v_i - ω_i for a valid face.

    Args:
        face (FaceOfTypeI): The face.

    Returns:
        MuFamily

    Raises:
        FaceError: If the face fails F1-F4.
    """
    face.validate()
    context = face.context
    mu = {}
    for c in face.residues:
        mu[c] = tuple(a - b for a, b in zip(face.vector(c), context.omega(c)))
    return MuFamily(context, face.level, mu, face.d)


def pair_bands(n, i):
    """A_i = {1..i, i*..n} and B_i = {i+1..n-i}."""
    star = n + 1 - i
    a_set = set(range(1, i + 1)) | set(range(star, n + 1))
    b_set = set(range(i + 1, n - i + 1))
    return a_set, b_set


def check_basic_inequalities(family, level=None):
    """Checks the pair-sum bands every GU face satisfies.

    For i in I, with A_i = {1..i, i*..n} and B_i = {i+1..n-i}:
    μ_i(j) + μ_i(j*) lies in [d, d+1] on A_i and [d-1, d] on B_i, and
    μ_{-i}(j) + μ_{-i}(j*) lies in [d-1, d] on A_i and [d, d+1] on B_i.

    Args:
        family (MuFamily): The μ-vectors, possibly corrupted.
        level (LevelStructure): Defaults to the family's level.

    Returns:
        tuple: (boolean, list of violations). Each violation records the
        signed index i, the coordinate j, the pair sum and its allowed band.

    Raises:
        FaceError: If the family does not belong to a GU context.
    """
    context = family.context
    if context.kind != 'GU':
        raise FaceError('The basic inequalities concern GU faces', context=str(context))
    level = level or family.level
    n = context.ambient_dim
    d = family.d
    violations = []

    def check(index, vector, members, low, high):
        for j in sorted(members):
            total = vector[j - 1] + vector[n - j]
            if not low <= total <= high:
                violations.append({'i': index, 'j': j, 'sum': total, 'band': [low, high]})

    for i in level.indices:
        a_set, b_set = pair_bands(n, i)
        check(i, family.at(i), a_set, d, d + 1)
        check(i, family.at(i), b_set, d - 1, d)
        check(-i, family.at(-i), a_set, d - 1, d)
        check(-i, family.at(-i), b_set, d, d + 1)
    return not violations, violations


def is_self_dual(mu_i, d):
    """Whether μ + μ* = d·1, where μ*(j) = μ(j*)."""
    return all(a + b == d for a, b in zip(mu_i, reversed(mu_i)))
