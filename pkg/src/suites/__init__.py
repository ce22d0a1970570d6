from typing import Dict, Type

from .base import Check, SuiteParameters, TrialOutcome, VerificationSuite, digest
from .forms import Eq1Suite, LemmaWSuite, PerpSuite
from .flow import ClosedPathSuite, FlowPropertiesSuite, SpectralFlowSuite, Theorem1Suite
from .lagrangian import IdentitiesSuite, MaslovSuite, Theorem2Suite

SUITES: Dict[str, Type[VerificationSuite]] = {
    'eq1': Eq1Suite,
    'perp': PerpSuite,
    'sf': SpectralFlowSuite,
    'sfprops': FlowPropertiesSuite,
    'thm1': Theorem1Suite,
    'closed': ClosedPathSuite,
    'lemmaw': LemmaWSuite,
    'maslov': MaslovSuite,
    'thm2': Theorem2Suite,
    'identities': IdentitiesSuite,
}

__all__ = [
    "Check",
    "SuiteParameters",
    "TrialOutcome",
    "VerificationSuite",
    "digest",
    "Eq1Suite",
    "PerpSuite",
    "LemmaWSuite",
    "SpectralFlowSuite",
    "FlowPropertiesSuite",
    "Theorem1Suite",
    "ClosedPathSuite",
    "MaslovSuite",
    "Theorem2Suite",
    "IdentitiesSuite",
    "SUITES",
]
