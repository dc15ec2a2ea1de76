from .face import FaceOfTypeI
from .face import standard_face
from .face import face_of
from .mu import MuFamily
from .mu import mu_family
from .mu import check_basic_inequalities
from .mu import is_self_dual
from .mu import pair_bands

__all__ = [
    'FaceOfTypeI',
    'standard_face',
    'face_of',
    'MuFamily',
    'mu_family',
    'check_basic_inequalities',
    'is_self_dual',
    'pair_bands'
]
