#Import the group contexts and elements
from unitarylm.weyl import GroupContext
from unitarylm.weyl import LevelStructure
from unitarylm.weyl import WeylElement
from unitarylm.weyl import translation
from unitarylm.weyl import embed_gu_to_gsp
from unitarylm.weyl import embed_gsp_to_gl

#Import the Bruhat engine
from unitarylm.bruhat import length
from unitarylm.bruhat import bruhat_leq
from unitarylm.bruhat import ParahoricSubgroup
from unitarylm.bruhat import min_length_rep

#Import faces
from unitarylm.faces import FaceOfTypeI
from unitarylm.faces import face_of
from unitarylm.faces import mu_family

#Import permissibility
from unitarylm.permissibility import DominantCochar
from unitarylm.permissibility import enumerate_admissible
from unitarylm.permissibility import enumerate_permissible
from unitarylm.permissibility import EnumerationResult

#Import spin
from unitarylm.spin import SpinWitness
from unitarylm.spin import spin_witness
from unitarylm.spin import enumerate_spin_permissible

#Import the harness
from unitarylm.harness import VerificationReport
from unitarylm.harness import plan_tasks
from unitarylm.harness import run_suite

#Utility
from unitarylm.foundation import WeylError

__all__ = [
    'GroupContext',
    'LevelStructure',
    'WeylElement',
    'translation',
    'embed_gu_to_gsp',
    'embed_gsp_to_gl',
    'length',
    'bruhat_leq',
    'ParahoricSubgroup',
    'min_length_rep',
    'FaceOfTypeI',
    'face_of',
    'mu_family',
    'DominantCochar',
    'enumerate_admissible',
    'enumerate_permissible',
    'EnumerationResult',
    'SpinWitness',
    'spin_witness',
    'enumerate_spin_permissible',
    'VerificationReport',
    'plan_tasks',
    'run_suite',
    'WeylError'
]
