from .context import GroupContext
from .context import LevelStructure
from .element import WeylElement
from .element import apply_perm
from .element import identity
from .element import compose
from .element import inverse
from .element import affine_action
from .element import translation
from .element import kottwitz_invariant
from .element import weyl_orbit
from .embeddings import embed_gu_to_gsp
from .embeddings import embed_gsp_to_gl
from .embeddings import lift_gsp_to_gu
from .embeddings import restrict_gl_to_gsp
from .embeddings import embed_cochar_gu_to_gsp
from .embeddings import lift_cochar_gsp_to_gu

__all__ = [
    'GroupContext',
    'LevelStructure',
    'WeylElement',
    'apply_perm',
    'identity',
    'compose',
    'inverse',
    'affine_action',
    'translation',
    'kottwitz_invariant',
    'weyl_orbit',
    'embed_gu_to_gsp',
    'embed_gsp_to_gl',
    'lift_gsp_to_gu',
    'restrict_gl_to_gsp',
    'embed_cochar_gu_to_gsp',
    'lift_cochar_gsp_to_gu'
]
