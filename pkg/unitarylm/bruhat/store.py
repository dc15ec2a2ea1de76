import hashlib
import json
import logging
import os

from unitarylm.foundation import CacheError, canonical_json
from unitarylm.weyl.element import WeylElement

logger = logging.getLogger(__name__)


def _digest(payload):
    return hashlib.sha256(canonical_json(payload).encode('utf-8')).hexdigest()


class ClosureStore(object):
    """
    An on-disk cache of Bruhat downward closures.

    Entries are keyed by (group, rank, Ω-components, seed texts) and carry a
    sha256 checksum of their element list. A corrupted or unreadable entry
    is dropped with a warning and recomputed by the caller.

    Args:
        directory (string): Where entries are written. Created on first save.

    Returns:
        N/A

    Examples:
        >>> store = unitarylm.bruhat.ClosureStore('/tmp/unitarylm-cache')
        >>> unitarylm.bruhat.configure_store(store)
    """
    def __init__(self, directory):
        self.directory = directory

    def _key(self, context, seeds):
        return {
            'group': context.kind,
            'rank': context.rank,
            'components': sorted(set(w.kottwitz() for w in seeds)),
            'seeds': sorted(w.text() for w in seeds)
        }

    def _path(self, key):
        return os.path.join(self.directory, 'closure-{}.json'.format(_digest(key)))

    def load(self, context, seeds):
        """The stored closure of `seeds`, or None on a miss or a bad entry.

        Returns:
            frozenset, or None
        """
        key = self._key(context, seeds)
        path = self._path(key)
        if not os.path.exists(path):
            return None
        try:
            with open(path, 'r') as handle:
                entry = json.load(handle)
            if entry.get('key') != key or entry.get('checksum') != _digest(entry['elements']):
                raise ValueError('checksum mismatch')
            return frozenset(WeylElement.from_text(context, text) for text in entry['elements'])
        except (OSError, ValueError, KeyError, TypeError) as exc:
            logger.warning('Discarding corrupted cache entry %s (%s); recomputing', path, exc)
            try:
                os.remove(path)
            except OSError:
                pass
            return None

    def save(self, context, seeds, closure):
        """Writes the closure of `seeds`.

        Raises:
            CacheError: If the cache directory cannot be written.
        """
        key = self._key(context, seeds)
        elements = sorted(w.text() for w in closure)
        entry = {'key': key, 'elements': elements, 'checksum': _digest(elements)}
        path = self._path(key)
        try:
            os.makedirs(self.directory, exist_ok=True)
            temporary = path + '.tmp'
            with open(temporary, 'w') as handle:
                handle.write(canonical_json(entry))
            os.replace(temporary, path)
        except OSError as exc:
            raise CacheError('Cannot write cache entry {}: {}'.format(path, exc),
                             path=path, reason=str(exc))
        logger.debug('Stored closure of %d seed(s) (%d elements) at %s', len(seeds), len(elements), path)

    def clear(self):
        """Removes every cache entry. Returns the number of files removed.

        Raises:
            CacheError: If an entry cannot be removed.
        """
        if not os.path.isdir(self.directory):
            return 0
        removed = 0
        for name in os.listdir(self.directory):
            if not (name.startswith('closure-') and name.endswith('.json')):
                continue
            try:
                os.remove(os.path.join(self.directory, name))
            except OSError as exc:
                raise CacheError('Cannot remove cache entry {}: {}'.format(name, exc),
                                 path=name, reason=str(exc))
            removed += 1
        return removed
