import logging
import os
from collections import OrderedDict

from unitarylm.foundation import ConfigError, FoundationObject, WeylError
from unitarylm.harness.claims import CLAIMS, resolve_claim
from unitarylm.weyl.context import GroupContext

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_FILE = 'unitarylm.cfg'
CACHE_ENV = 'UNITARYLM_CACHE_DIR'

COMMANDS = ('enumerate', 'verify', 'export', 'cache-clear')
SET_KINDS = ('adm', 'perm-kr', 'naive', 'wedge', 'spin')
FORMATS = ('json', 'csv', 'table')

DEFAULTS = OrderedDict([
    ('cache_dir', None),
    ('workers', 1),
    ('seed', 0),
    ('band', 3),
    ('gu_max_rank', 3),
    ('gl_max_rank', 2),
    ('steinberg_length', 6),
    ('random_mu_count', 20),
    ('samples', 1000),
    ('timing', True)
])

# key -> smallest accepted value
_INTEGER_KEYS = {
    'workers': 1,
    'seed': 0,
    'band': 0,
    'gu_max_rank': 1,
    'gl_max_rank': 1,
    'steinberg_length': 0,
    'random_mu_count': 0,
    'samples': 1
}

_TRUE = ('1', 'true', 'yes', 'on')
_FALSE = ('0', 'false', 'no', 'off')


def coerce_setting(key, value, source='flags'):
    """Converts a raw setting to its typed value.

    Args:
        key (string): One of the DEFAULTS keys.
        value (object): The raw value; strings come from the config file.
        source (string): Where the value came from, for error messages.

    Returns:
        The typed value.

    Raises:
        ConfigError: If the key is unknown or the value is out of range.
    """
    if key not in DEFAULTS:
        raise ConfigError('Unknown setting {!r} in {}'.format(key, source), key=key, source=source)
    if key == 'cache_dir':
        return None if value in (None, '') else str(value)
    if key == 'timing':
        if isinstance(value, bool):
            return value
        text = str(value).strip().lower()
        if text in _TRUE:
            return True
        if text in _FALSE:
            return False
        raise ConfigError('Setting timing expects a boolean, got {!r}'.format(value), key=key, source=source)
    try:
        number = int(value)
    except (TypeError, ValueError):
        raise ConfigError('Setting {} expects an integer, got {!r}'.format(key, value), key=key, source=source)
    if number < _INTEGER_KEYS[key]:
        raise ConfigError('Setting {} must be at least {}, got {}'.format(key, _INTEGER_KEYS[key], number),
                          key=key, source=source)
    return number


def read_config_file(path):
    """Parses a `key = value` file. Blank lines and lines starting with '#' are skipped.

    Args:
        path (string): The file to read.

    Returns:
        OrderedDict: The typed settings found in the file.

    Raises:
        ConfigError: If the file cannot be read or a line is malformed.
    """
    settings = OrderedDict()
    try:
        with open(path, 'r') as handle:
            lines = handle.readlines()
    except OSError as exc:
        raise ConfigError('Cannot read config file {}: {}'.format(path, exc), path=path)
    for number, line in enumerate(lines, 1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        if '=' not in line:
            raise ConfigError('{}:{}: expected key = value'.format(path, number), path=path, line=number)
        key, value = (part.strip() for part in line.split('=', 1))
        settings[key] = coerce_setting(key, value, source='{}:{}'.format(path, number))
    return settings


def layered_settings(config_path=None, environ=None, overrides=None):
    """Defaults, then the config file, then the environment, then explicit overrides.

    When `config_path` is None, `./unitarylm.cfg` is read if it exists.

    Args:
        config_path (string): An explicit config file.
        environ (dict): Defaults to os.environ.
        overrides (dict): Settings from flags; None values are ignored.

    Returns:
        OrderedDict
    """
    environ = os.environ if environ is None else environ
    settings = OrderedDict(DEFAULTS)
    if config_path is None and os.path.isfile(DEFAULT_CONFIG_FILE):
        config_path = DEFAULT_CONFIG_FILE
    if config_path is not None:
        settings.update(read_config_file(config_path))
        logger.debug('Read settings from %s', config_path)
    if environ.get(CACHE_ENV):
        settings['cache_dir'] = environ[CACHE_ENV]
    for key, value in (overrides or {}).items():
        if value is not None:
            settings[key] = coerce_setting(key, value)
    return settings


def parse_vector(text):
    """Parses '2,1,0' into (2, 1, 0)."""
    if text is None:
        return None
    try:
        return tuple(int(part) for part in str(text).split(',') if part.strip())
    except ValueError:
        raise ConfigError('Cannot parse vector {!r}'.format(text), text=text)


class RunConfig(FoundationObject):
    """
    Everything one CLI invocation needs.

    Args:
        command (string): 'enumerate', 'verify', 'export' or 'cache-clear'.
        settings (dict): The layered settings (see DEFAULTS).
        group (string): 'GL', 'GSP' or 'GU'.
        m (integer): The rank parameter (N for GL).
        s (integer): The signature parameter.
        indices (string): The level I, e.g. '0,1'. Defaults to the Iwahori level.
        mu (string): An explicit cocharacter, e.g. '2,1,0'.
        set_kind (string): 'adm', 'perm-kr', 'naive', 'wedge' or 'spin'.
        double (boolean): Project to double cosets.
        claim (string): A claim identifier or 'all'.
        output_format (string): 'json', 'csv' or 'table'.
        output (string): Output path; stdout when None.
        input_path (string): The JSON file read by 'export'.

    Returns:
        N/A

    Raises:
        ConfigError: If the combination of parameters is invalid.

    Examples:
        >>> config = RunConfig('enumerate', layered_settings(), group='GU', m=1, s=1, set_kind='wedge')
        >>> config.validate()
    """
    def __init__(self, command, settings=None, group=None, m=None, s=None, indices=None, mu=None,
                 set_kind=None, double=False, claim=None, output_format='json', output=None, input_path=None):
        self.command = command
        self.settings = OrderedDict(DEFAULTS if settings is None else settings)
        self.group = group.upper() if group else None
        self.m = m
        self.s = s
        self.indices = indices
        self.mu = parse_vector(mu) if isinstance(mu, str) else mu
        self.set_kind = set_kind
        self.double = double
        self.claim = claim
        self.output_format = output_format
        self.output = output
        self.input_path = input_path

    def group_context(self):
        return GroupContext(self.group, self.m)

    def validate(self):
        """Checks the parameter combination for the command.

        Raises:
            ConfigError: On the first problem found.
        """
        if self.command not in COMMANDS:
            raise ConfigError('Unknown command {!r}'.format(self.command), command=self.command)
        if self.output_format not in FORMATS:
            raise ConfigError('Unknown format {!r}'.format(self.output_format), format=self.output_format)
        if self.m is not None and self.m < 1:
            raise ConfigError('--m must be positive', m=self.m)
        if self.s is not None and self.s < 0:
            raise ConfigError('--s must be non-negative', s=self.s)
        if self.command == 'enumerate':
            self._checkEnumerate()
        elif self.command == 'verify':
            if self.claim is None:
                raise ConfigError('verify needs --claim')
            try:
                self.claim = resolve_claim(self.claim)
            except WeylError:
                raise ConfigError('Unknown claim {!r}; choose from {}'.format(self.claim, ', '.join(CLAIMS + ('all',))),
                                  claim=self.claim)
        elif self.command == 'export':
            if self.input_path is None:
                raise ConfigError('export needs --input')
        elif self.settings['cache_dir'] is None:
            raise ConfigError('cache-clear needs a cache directory (--cache-dir, {} or cache_dir)'.format(CACHE_ENV))
        return self

    def _checkEnumerate(self):
        """Parameter rules for 'enumerate'.
        This function should be considered private.
        """
        if self.group not in GroupContext.KINDS:
            raise ConfigError('enumerate needs --group GL, GSP or GU', group=self.group)
        if self.m is None:
            raise ConfigError('enumerate needs --m')
        if self.set_kind not in SET_KINDS:
            raise ConfigError('enumerate needs --set, one of {}'.format(', '.join(SET_KINDS)), set=self.set_kind)
        if self.mu is not None and self.set_kind not in ('adm', 'perm-kr'):
            raise ConfigError('--mu only applies to adm and perm-kr', set=self.set_kind)
        if self.s is not None and self.mu is not None:
            raise ConfigError('--s and --mu are mutually exclusive', s=self.s)
        if self.s is not None and self.set_kind == 'naive':
            raise ConfigError('--s does not apply to naive', set=self.set_kind)
        if self.set_kind in ('wedge', 'spin') and self.s is None:
            raise ConfigError('--set {} needs --s'.format(self.set_kind), set=self.set_kind)
        if self.set_kind in ('adm', 'perm-kr') and self.mu is None and self.s is None:
            raise ConfigError('--set {} needs --mu or --s'.format(self.set_kind), set=self.set_kind)
        if self.set_kind in ('adm', 'perm-kr') and self.mu is None and self.group == 'GL':
            raise ConfigError('GL needs an explicit --mu', group=self.group)
        if self.set_kind == 'spin' and self.group != 'GU':
            raise ConfigError('--set spin needs --group GU', group=self.group)
        if self.set_kind in ('naive', 'wedge') and self.group == 'GL':
            raise ConfigError('--set {} needs --group GU or GSP'.format(self.set_kind), group=self.group)
        if self.s is not None and self.s > self.m:
            raise ConfigError('--s must lie in 0..{}'.format(self.m), s=self.s)

    def as_dict(self):
        payload = OrderedDict([
            ('command', self.command),
            ('group', self.group),
            ('m', self.m),
            ('s', self.s),
            ('I', self.indices),
            ('mu', None if self.mu is None else list(self.mu)),
            ('set', self.set_kind),
            ('double', self.double),
            ('claim', self.claim),
            ('format', self.output_format),
            ('output', self.output),
            ('input', self.input_path)
        ])
        payload.update(self.settings)
        return payload

    def __repr__(self):
        return '<RunConfig {}>'.format(self.command)
