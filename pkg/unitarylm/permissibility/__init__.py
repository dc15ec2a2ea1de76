from .hull import DominantCochar
from .hull import HullDescriptor
from .hull import conv_hull_member_gl
from .hull import conv_hull_member_gl_suffix
from .hull import conv_hull_member_gsp
from .naive import mu_vectors
from .naive import is_naively_permissible
from .naive import is_wedge_permissible
from .kr import vertex_set
from .kr import translation_orbit
from .kr import is_mu_permissible
from .kr import is_mu_admissible
from .enumeration import VARIANTS
from .enumeration import canonical_order
from .enumeration import enumerate_admissible
from .enumeration import enumerate_candidates
from .enumeration import enumerate_permissible
from .enumeration import EnumerationResult

__all__ = [
    'DominantCochar',
    'HullDescriptor',
    'conv_hull_member_gl',
    'conv_hull_member_gl_suffix',
    'conv_hull_member_gsp',
    'mu_vectors',
    'is_naively_permissible',
    'is_wedge_permissible',
    'vertex_set',
    'translation_orbit',
    'is_mu_permissible',
    'is_mu_admissible',
    'VARIANTS',
    'canonical_order',
    'enumerate_admissible',
    'enumerate_candidates',
    'enumerate_permissible',
    'EnumerationResult'
]
