import time
from collections import OrderedDict
from contextlib import contextmanager

from unitarylm.foundation import FoundationObject
from unitarylm.permissibility.enumeration import canonical_order

PASS = 'PASS'
FAIL = 'FAIL'

# claim -> label carried in reports
CLAIM_LABELS = OrderedDict([
    ('gu-equivalence', 'Thm-adm-iff-perm-I'),
    ('gsp-gl-intersection', 'Thm-adm-intersect'),
    ('perm-equals-adm', 'Prop-perm-adm'),
    ('steinberg-min-rep', 'Lemma-steinberg'),
    ('basic-inequalities', 'Lemma-basic-inequalities'),
    ('bruhat-oracle', 'Check-bruhat-oracle'),
    ('kr-containment', 'Check-kr-containment'),
    ('sign-suite', 'Lemma-sigma-signs'),
    ('spin-automatic', 'Lemma-spin-automatic')
])


class VerificationReport(FoundationObject):
    """
    The outcome of checking one claim at one parameter set.

    Args:
        claim (string): The claim identifier, e.g. 'gu-equivalence'.
        parameters (dict): The parameters the claim was checked at.
        lhs (list or boolean): Canonical texts of the left set, or a verdict.
        rhs (list or boolean): Canonical texts of the right set, or a verdict.
        verdict (string): PASS or FAIL.
        counterexample (dict): The first failure in canonical order, or None.
        cardinalities (dict): Sizes of every set that took part.
        seed (integer): The seed of any random draws, or None.
        elapsed_ms (integer): Wall-clock duration, or None when timing is off.
        label (string): Name the claim is reported under; looked up in CLAIM_LABELS when None.
    """
    def __init__(self, claim, parameters, lhs, rhs, verdict, counterexample=None,
                 cardinalities=None, seed=None, elapsed_ms=None, label=None):
        self.claim = claim
        self.label = label or CLAIM_LABELS.get(claim, claim)
        self.parameters = parameters
        self.lhs = lhs
        self.rhs = rhs
        self.verdict = verdict
        self.counterexample = counterexample
        self.cardinalities = cardinalities or OrderedDict()
        self.seed = seed
        self.elapsed_ms = elapsed_ms

    @property
    def passed(self):
        return self.verdict == PASS

    def as_dict(self):
        payload = {
            'claim': self.claim,
            'label': self.label,
            'parameters': self.parameters,
            'lhs': self.lhs,
            'rhs': self.rhs,
            'verdict': self.verdict,
            'counterexample': self.counterexample,
            'cardinalities': dict(self.cardinalities),
            'seed': self.seed
        }
        if self.elapsed_ms is not None:
            payload['elapsed_ms'] = self.elapsed_ms
        return payload

    def __repr__(self):
        return '<VerificationReport {} {} {}>'.format(self.claim, self.parameters, self.verdict)


def compare_sets(named_sets):
    """Checks that every named set of WeylElements is the same set.

    Args:
        named_sets (list): (name, iterable of WeylElement) pairs.

    Returns:
        tuple: (verdict, counterexample, cardinalities). The counterexample
        names the first element, in canonical order, missing from some set.
    """
    named_sets = [(name, frozenset(elements)) for name, elements in named_sets]
    cardinalities = OrderedDict((name, len(elements)) for name, elements in named_sets)
    union = frozenset().union(*[elements for _, elements in named_sets])
    for w in canonical_order(union):
        missing = [name for name, elements in named_sets if w not in elements]
        if missing:
            present = [name for name, elements in named_sets if w in elements]
            return FAIL, {'element': w.text(), 'in': present, 'missing_from': missing}, cardinalities
    return PASS, None, cardinalities


def check_subset(small_name, small, large_name, large):
    """Checks small ⊆ large; the counterexample is the first element of small outside large."""
    large = frozenset(large)
    cardinalities = OrderedDict([(small_name, len(set(small))), (large_name, len(large))])
    for w in canonical_order(small):
        if w not in large:
            return FAIL, {'element': w.text(), 'in': [small_name], 'missing_from': [large_name]}, cardinalities
    return PASS, None, cardinalities


@contextmanager
def stopwatch(enabled=True):
    """Yields a dict whose 'elapsed_ms' is filled in on exit (None when disabled)."""
    box = {'elapsed_ms': None}
    start = time.perf_counter()
    try:
        yield box
    finally:
        if enabled:
            box['elapsed_ms'] = int(round((time.perf_counter() - start) * 1000))


def texts(elements):
    return [w.text() for w in canonical_order(elements)]
