from .signs import perp
from .signs import sigma_sign
from .signs import sigma_prime_sign
from .witness import STRICT
from .witness import SELF_DUAL
from .witness import SpinWitness
from .witness import spin_witness
from .witness import spanners
from .witness import pi_rank
from .witness import is_spin_permissible
from .witness import enumerate_spin_permissible

__all__ = [
    'perp',
    'sigma_sign',
    'sigma_prime_sign',
    'STRICT',
    'SELF_DUAL',
    'SpinWitness',
    'spin_witness',
    'spanners',
    'pi_rank',
    'is_spin_permissible',
    'enumerate_spin_permissible'
]
