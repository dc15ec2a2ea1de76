import logging
import threading
from collections import OrderedDict

from unitarylm.bruhat.alcove import length, omega_power, separating_hyperplanes, simple_reflections

logger = logging.getLogger(__name__)


MAX_CLOSURES = 2048


class _ClosureCache(object):
    """In-memory downward closures, shared by all worker threads.

    Holds at most `max_entries` closures; the least recently used one is dropped first.
    """

    def __init__(self, max_entries=MAX_CLOSURES):
        self._lock = threading.Lock()
        self._closures = OrderedDict()
        self.max_entries = max_entries
        self.store = None

    def __len__(self):
        with self._lock:
            return len(self._closures)

    def get(self, key):
        with self._lock:
            closure = self._closures.get(key)
            if closure is not None:
                self._closures.move_to_end(key)
            return closure

    def put(self, key, closure):
        with self._lock:
            self._closures[key] = closure
            self._closures.move_to_end(key)
            while len(self._closures) > self.max_entries:
                self._closures.popitem(last=False)

    def clear(self):
        with self._lock:
            self._closures.clear()


_CACHE = _ClosureCache()


def configure_store(store):
    """Attaches an on-disk ClosureStore (or None to detach it)."""
    _CACHE.store = store


def clear_closure_cache():
    _CACHE.clear()


def covers_below(w):
    """The elements covered by w: r_H·w for separating H with length ℓ(w) - 1.

    Args:
        w (WeylElement): Any element.

    Returns:
        set
    """
    target = length(w) - 1
    found = set()
    for hyperplane in separating_hyperplanes(w):
        candidate = hyperplane.reflection() * w
        if length(candidate) == target:
            found.add(candidate)
    return found


def _search_down(seeds):
    seen = set(seeds)
    frontier = list(seeds)
    while frontier:
        following = []
        for w in frontier:
            for v in covers_below(w):
                if v not in seen:
                    seen.add(v)
                    following.append(v)
        frontier = following
    return frozenset(seen)


def downward_closure(seeds):
    """All elements lying below at least one seed in the Bruhat order.

    Closures are memoized per seed set, and mirrored to the configured
    ClosureStore when there is one.

    Args:
        seeds (iterable): WeylElements of one context.

    Returns:
        frozenset
    """
    key = frozenset(seeds)
    if not key:
        return key
    closure = _CACHE.get(key)
    if closure is not None:
        return closure

    context = next(iter(key)).context
    store = _CACHE.store
    if store is not None:
        closure = store.load(context, key)
    if closure is None:
        closure = _search_down(key)
        logger.debug('Closure of %d seed(s) in %s: %d elements', len(key), context, len(closure))
        if store is not None:
            store.save(context, key, closure)
    _CACHE.put(key, closure)
    return closure


def bruhat_leq(a, b):
    """Whether a ≤ b in the Bruhat order of the extended affine Weyl group.

    Elements in different Ω-components are incomparable.

    Args:
        a (WeylElement): The smaller candidate.
        b (WeylElement): The larger candidate.

    Returns:
        boolean

    Raises:
        ContextMismatchError: If a and b live in different contexts.
    """
    a._checkSameContext(b)
    if a == b:
        return True
    if a.kottwitz() != b.kottwitz() or length(a) >= length(b):
        return False
    return a in downward_closure([b])


def elements_up_to_length(context, max_length, components=(0,)):
    """Every element of length at most `max_length` in the given Ω-components.

    Args:
        context (GroupContext): The group context.
        max_length (integer): Largest length to include.
        components (iterable): Kottwitz invariants to enumerate.

    Returns:
        set
    """
    simple = list(simple_reflections(context).values())
    found = set()
    for k in components:
        layer = {omega_power(context, k)}
        found |= layer
        for current in range(max_length):
            following = set()
            for w in layer:
                for s in simple:
                    v = s * w
                    if length(v) == current + 1:
                        following.add(v)
            found |= following
            layer = following
    return found
