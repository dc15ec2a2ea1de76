from .report import PASS
from .report import FAIL
from .report import CLAIM_LABELS
from .report import VerificationReport
from .report import compare_sets
from .report import check_subset
from .sampling import make_rng
from .sampling import random_dominant_mu
from .sampling import random_element
from .sampling import all_levels
from .sampling import theta_stable_subsets
from .claims import CLAIMS
from .claims import CLAIM_ALIASES
from .claims import resolve_claim
from .claims import verify_equivalence_gu
from .claims import verify_adm_perm_intersect
from .claims import verify_perm_eq_adm
from .claims import verify_steinberg_lemma
from .claims import verify_basic_lemmas
from .claims import verify_bruhat_oracle
from .claims import verify_kr_containment
from .claims import verify_sign_suite
from .claims import verify_spin_automaticity
from .claims import plan_tasks
from .claims import run_suite

__all__ = [
    'PASS',
    'FAIL',
    'CLAIM_LABELS',
    'VerificationReport',
    'compare_sets',
    'check_subset',
    'make_rng',
    'random_dominant_mu',
    'random_element',
    'all_levels',
    'theta_stable_subsets',
    'CLAIMS',
    'CLAIM_ALIASES',
    'resolve_claim',
    'verify_equivalence_gu',
    'verify_adm_perm_intersect',
    'verify_perm_eq_adm',
    'verify_steinberg_lemma',
    'verify_basic_lemmas',
    'verify_bruhat_oracle',
    'verify_kr_containment',
    'verify_sign_suite',
    'verify_spin_automaticity',
    'plan_tasks',
    'run_suite'
]
