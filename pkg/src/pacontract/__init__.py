"""Path-averaged contractions on b-metric spaces.

Finite spaces get exact class decisions (Banach, Kannan, path-averaged) with
minimal moduli and witnesses; general spaces get Picard iteration with an
a-posteriori checked error certificate.
"""

from .classify import (ClassificationReport, banach_modulus, classify_all, kannan_modulus,
                       pa_check_direct, pa_minimal_alpha)
from .generator import GeneratorSpec, census, enumerate_maps, make_space
from .mapping import NEVER, DeltaTrace, SelfMap, delta_trace, orbit
from .oracle import TheoremVerdict, brute_fixed_points, verify_theorem
from .solver import (ConvergenceCertificate, FixedPointResult, HypothesisError, IterationConfig,
                     picard_solve, verify_decay)
from .space import (FiniteBSpace, InputError, ValidationReport, minimal_coefficient,
                    validate_b_metric)

__version__ = "0.1.0"
