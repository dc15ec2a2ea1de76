from .alcove import Hyperplane
from .alcove import base_alcove_point
from .alcove import in_base_alcove
from .alcove import separating_hyperplanes
from .alcove import length
from .alcove import reflection
from .alcove import simple_reflections
from .alcove import omega_power
from .alcove import omega_decompose
from .order import covers_below
from .order import downward_closure
from .order import bruhat_leq
from .order import elements_up_to_length
from .order import configure_store
from .order import clear_closure_cache
from .parahoric import ParahoricSubgroup
from .parahoric import parahoric
from .parahoric import min_length_rep
from .parahoric import bruhat_leq_cosets
from .parahoric import coset_elements
from .parahoric import double_coset_elements
from .oracle import reduced_word
from .oracle import subword_interval
from .oracle import subword_leq
from .store import ClosureStore

__all__ = [
    'Hyperplane',
    'base_alcove_point',
    'in_base_alcove',
    'separating_hyperplanes',
    'length',
    'reflection',
    'simple_reflections',
    'omega_power',
    'omega_decompose',
    'covers_below',
    'downward_closure',
    'bruhat_leq',
    'elements_up_to_length',
    'configure_store',
    'clear_closure_cache',
    'ParahoricSubgroup',
    'parahoric',
    'min_length_rep',
    'bruhat_leq_cosets',
    'coset_elements',
    'double_coset_elements',
    'reduced_word',
    'subword_interval',
    'subword_leq',
    'ClosureStore'
]
