"""Exact counts of elliptic curves of bounded degree in E^2 and E^3."""
from .bounds import BoundReport, census2_bound, census3_bound, nosarzewska_bound, overhagen_bound
from .census2 import (
    SurfaceClass,
    check_class2,
    class_from_lambda2,
    det_identity2,
    enumerate2,
    reconstruct2,
)
from .census3 import (
    ThreefoldClass,
    check_class3,
    class_from_lambda3,
    det_identity3,
    enumerate3,
    reconstruct3,
)
from .cm import NO_CM, CmParams, LatticeVector, NoCm, Polarization, bar, q2, qform, validate_cm
from .errors import CensusError
from .exterior import Bivector, content, is_elliptic_basis, quotient_content, wedge
from .kernels import BACKEND
from .oracle import OracleReport, oracle_compare, oracle_enumerate
from .ordinary import OrdinaryCurve, class_from_endomorphism_vector, enumerate_ordinary
from .records import CurveRecord, Kind

__all__ = [
    "BACKEND", "Bivector", "BoundReport", "CensusError", "CmParams", "CurveRecord", "Kind",
    "LatticeVector", "NO_CM", "NoCm", "OracleReport", "OrdinaryCurve", "Polarization",
    "SurfaceClass", "ThreefoldClass", "bar", "census2_bound", "census3_bound", "check_class2",
    "check_class3", "class_from_endomorphism_vector", "class_from_lambda2", "class_from_lambda3",
    "content", "det_identity2", "det_identity3", "enumerate2", "enumerate3", "enumerate_ordinary",
    "is_elliptic_basis", "nosarzewska_bound", "oracle_compare", "oracle_enumerate", "overhagen_bound",
    "q2", "qform", "quotient_content", "reconstruct2", "reconstruct3", "validate_cm", "wedge",
]
