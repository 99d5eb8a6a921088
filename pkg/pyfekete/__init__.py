"""pyfekete: numerical verification of Mahler measure bounds for Fekete polynomials."""
from . import const
from .asymptotics import (
    CdeltaResult,
    c_delta,
    c_product,
    empirical_midpoint_fraction,
    envelope_constant,
    midpoint_ties,
    small_delta_bound,
)
from .certify import Certificate, CertificateSweep, build_certificate, certificate_sweep
from .circlezeros import (
    ArcReport,
    ArcSummary,
    HGrid,
    SieveChain,
    SieveCheck,
    arc_classify,
    circle_zero_angles,
    derivative_sieve_chain,
    h_eval,
    h_grid,
    large_sieve_check,
    locate_zeros,
    max_modulus,
    select_arc_parameters,
    sign_agreements,
)
from .dispatch import Dispatcher, ProgressEvent
from .error import (
    DomainError,
    ExactArithmeticError,
    FeketeError,
    NumericalFailureError,
    PreconditionError,
    SizeError,
)
from .mahler import (
    EnsembleResult,
    InequalityCheck,
    MahlerEstimate,
    RootSet,
    find_roots,
    littlewood_ensemble,
    m0_from_roots,
    m0_uniform,
    mq_uniform,
    product_bound_check,
    zero_product_bound_check,
)
from .numtheory import Prime, is_prime, legendre, primes_in_range
from .polybase import (
    ComplexSampleGrid,
    IntPolynomial,
    deflate_at_one,
    eval_roots_of_unity,
    fekete,
    random_littlewood,
    rudin_shapiro,
)
from .report import Finding, ReportTable, RunReport
from .runner import SuiteRunner

__all__ = [
    "ArcReport",
    "ArcSummary",
    "CdeltaResult",
    "Certificate",
    "CertificateSweep",
    "ComplexSampleGrid",
    "Dispatcher",
    "DomainError",
    "EnsembleResult",
    "ExactArithmeticError",
    "FeketeError",
    "Finding",
    "HGrid",
    "InequalityCheck",
    "IntPolynomial",
    "MahlerEstimate",
    "NumericalFailureError",
    "PreconditionError",
    "Prime",
    "ProgressEvent",
    "ReportTable",
    "RootSet",
    "RunReport",
    "SieveChain",
    "SieveCheck",
    "SizeError",
    "SuiteRunner",
    "arc_classify",
    "build_certificate",
    "c_delta",
    "c_product",
    "certificate_sweep",
    "circle_zero_angles",
    "const",
    "deflate_at_one",
    "derivative_sieve_chain",
    "empirical_midpoint_fraction",
    "envelope_constant",
    "eval_roots_of_unity",
    "fekete",
    "find_roots",
    "h_eval",
    "h_grid",
    "is_prime",
    "large_sieve_check",
    "legendre",
    "littlewood_ensemble",
    "locate_zeros",
    "m0_from_roots",
    "m0_uniform",
    "max_modulus",
    "midpoint_ties",
    "mq_uniform",
    "primes_in_range",
    "product_bound_check",
    "random_littlewood",
    "rudin_shapiro",
    "select_arc_parameters",
    "sign_agreements",
    "small_delta_bound",
    "zero_product_bound_check",
]
