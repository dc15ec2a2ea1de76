import json
import logging

logger = logging.getLogger(__name__)


class WeylError(Exception):
    """Base error for everything raised by unitarylm.

    The keyword arguments passed at construction are kept in
    `error_details`, so callers (and the CLI) can report exactly which
    check failed.
    """
    def __init__(self, message, **details):
        super(WeylError, self).__init__(message)
        self.error_details = {'message': message}
        self.error_details.update(details)


class ContextMismatchError(WeylError):
    pass


class LatticeError(WeylError):
    pass


class DimensionError(WeylError):
    pass


class FaceError(WeylError):
    pass


class SpinPreconditionError(WeylError):
    pass


class ConfigError(WeylError):
    pass


class CacheError(WeylError):
    pass


def canonical_json(payload):
    """Serializes `payload` deterministically (sorted keys, fixed separators)."""
    return json.dumps(payload, sort_keys=True, separators=(',', ':'))


class FoundationObject(object):
    """
    Master class for the value objects that travel between subpackages.

    Subclasses implement `as_dict()`; this class supplies JSON export and
    the private consistency checks shared by all of them.
    """

    def as_dict(self):
        raise NotImplementedError

    def as_json(self):
        """The object as canonical JSON text.

        Returns:
            string
        """
        return canonical_json(self.as_dict())

    def _checkSameContext(self, other):
        """Checks that `other` lives in the same group context.
        This function should be considered private.

        Args:
            other (object): Anything with a `context` attribute.

        Raises:
            ContextMismatchError: If the contexts differ.
        """
        if self.context != other.context:
            raise ContextMismatchError(
                'Context mismatch: {} vs {}'.format(self.context, other.context),
                left=str(self.context), right=str(other.context))

    def _checkDimension(self, vector):
        """Checks that `vector` has one entry per ambient coordinate.
        This function should be considered private.

        Args:
            vector (sequence): The vector to check.

        Raises:
            DimensionError: If the length is wrong.
        """
        if len(vector) != self.context.ambient_dim:
            raise DimensionError(
                'Expected a vector of length {}, got {}'.format(self.context.ambient_dim, len(vector)),
                expected=self.context.ambient_dim, actual=len(vector))
