"""Classification of S^2-orbifold bundles over closed 2-orbifolds."""
from .actions import Action, dedup_actions, enumerate_actions, parse_action_literal
from .census import flat_census, hyperbolic_census
from .classification import classify, classify_all, wu_class
from .errors import OrbibundleError
from .presentation import presentation
from .signature import OrbifoldSignature, euler_characteristic, format_signature, parse_signature
from .validation import validate_bundle_base

__version__ = "0.1.0"

__all__ = [
    "Action",
    "OrbifoldSignature",
    "OrbibundleError",
    "classify",
    "classify_all",
    "dedup_actions",
    "enumerate_actions",
    "euler_characteristic",
    "flat_census",
    "format_signature",
    "hyperbolic_census",
    "parse_action_literal",
    "parse_signature",
    "presentation",
    "validate_bundle_base",
    "wu_class",
]
