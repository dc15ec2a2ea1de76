from .config import RunConfig
from .config import layered_settings
from .config import read_config_file
from .export import render
from .main import main
from .main import run

__all__ = [
    'RunConfig',
    'layered_settings',
    'read_config_file',
    'render',
    'main',
    'run'
]
