from .decomposition import Decomposition, DescentStep, DescentTrace, Strategy, Term
from .reports import DecompositionCheck, EligibilityReport, HilbertVerificationReport, SuiteRecord, SuiteSummary
from .run_config import RunConfig

__all__ = [
    "Decomposition",
    "DescentStep",
    "DescentTrace",
    "Strategy",
    "Term",
    "DecompositionCheck",
    "EligibilityReport",
    "HilbertVerificationReport",
    "SuiteRecord",
    "SuiteSummary",
    "RunConfig",
]
