from functools import lru_cache

from unitarylm.foundation import FoundationObject, WeylError
from unitarylm.bruhat.alcove import length, simple_reflections
from unitarylm.bruhat.order import bruhat_leq
from unitarylm.weyl.element import identity


@lru_cache(maxsize=None)
def _generated_subgroup(context, labels):
    simple = simple_reflections(context)
    generators = [simple[label] for label in labels]
    start = identity(context)
    seen = {start}
    frontier = [start]
    while frontier:
        following = []
        for w in frontier:
            for s in generators:
                v = w * s
                if v not in seen:
                    seen.add(v)
                    following.append(v)
        frontier = following
    return frozenset(seen)


class ParahoricSubgroup(FoundationObject):
    """
    The finite subgroup W_I generated by the simple reflections s_j with j not in I.

    It is computed as the set of simple reflections fixing every standard
    vertex ω_c for c among the residues of I. With no level the subgroup
    is trivial (the Iwahori case for coset arithmetic).

    Args:
        context (GroupContext): The group context.
        level (LevelStructure): The level I, or None.

    Returns:
        N/A

    Raises:
        ContextMismatchError: If the level belongs to another context.

    Examples:
        >>> ctx = unitarylm.weyl.GroupContext.gl(2)
        >>> W = unitarylm.bruhat.ParahoricSubgroup(ctx, unitarylm.weyl.LevelStructure(ctx, [0]))
        >>> W.labels
    """
    def __init__(self, context, level=None):
        self.context = context
        self.level = level
        if level is None:
            self.labels = ()
        else:
            self._checkSameContext(level)
            vertices = [context.omega(c) for c in level.residues()]
            self.labels = tuple(
                label for label, s in simple_reflections(context).items()
                if all(s.act(v) == v for v in vertices))
        simple = simple_reflections(context)
        self.generators = tuple(simple[label] for label in self.labels)

    @classmethod
    def from_labels(cls, context, labels):
        """The subgroup generated by an explicit proper set of simple reflections.

        Raises:
            WeylError: If a label is unknown or every simple reflection is requested.
        """
        simple = simple_reflections(context)
        labels = tuple(sorted(set(labels)))
        if any(label not in simple for label in labels) or len(labels) == len(simple):
            raise WeylError('Labels {} do not generate a finite parahoric of {}'.format(list(labels), context),
                            labels=list(labels))
        subgroup = cls(context)
        subgroup.labels = labels
        subgroup.generators = tuple(simple[label] for label in labels)
        return subgroup

    def elements(self):
        """All elements of W_I.

        Returns:
            frozenset
        """
        return _generated_subgroup(self.context, self.labels)

    def __contains__(self, w):
        return w in self.elements()

    def __len__(self):
        return len(self.elements())

    def as_dict(self):
        payload = self.context.as_dict()
        payload['generators'] = list(self.labels)
        return payload

    def __repr__(self):
        return '<ParahoricSubgroup {} s{}>'.format(self.context, list(self.labels))


def parahoric(context, level):
    return ParahoricSubgroup(context, level)


def min_length_rep(w, left=None, right=None):
    """The unique shortest element of W_left·w·W_right.

    Args:
        w (WeylElement): Any element.
        left (ParahoricSubgroup): Left factor, or None for the trivial group.
        right (ParahoricSubgroup): Right factor, or None for the trivial group.

    Returns:
        WeylElement
    """
    left_gens = left.generators if left is not None else ()
    right_gens = right.generators if right is not None else ()
    current = w
    current_length = length(w)
    improved = True
    while improved:
        improved = False
        for s in left_gens:
            candidate = s * current
            candidate_length = length(candidate)
            if candidate_length < current_length:
                current, current_length, improved = candidate, candidate_length, True
        for s in right_gens:
            candidate = current * s
            candidate_length = length(candidate)
            if candidate_length < current_length:
                current, current_length, improved = candidate, candidate_length, True
    return current


def bruhat_leq_cosets(a, b, left=None, right=None):
    """Bruhat order on (double) cosets through their minimal representatives."""
    return bruhat_leq(min_length_rep(a, left, right), min_length_rep(b, left, right))


def coset_elements(w, right):
    """The full right coset w·W_right."""
    return frozenset(w * x for x in right.elements())


def double_coset_elements(w, left, right):
    """The full double coset W_left·w·W_right."""
    return frozenset(u * x for u in left.elements() for x in coset_elements(w, right))
