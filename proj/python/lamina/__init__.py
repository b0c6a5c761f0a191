"""Rational laminations, external rays and tuning for polynomial Julia sets."""

import json

from . import _lamina
from ._lamina import (
    AngleParseError,
    DisconnectedJuliaSetError,
    ExtensionError,
    JsonFormatError,
    LaminationConsistencyError,
    LinkedLaminationError,
    PolynomialParseError,
    PullbackError,
    TuningError,
    co_land,
    factors_through as _factors_through,
    orbit_info,
    sigma,
    tuning_nu as _tuning_nu,
    tuning_p as _tuning_p,
)

__version__ = _lamina.__version__


def _enc(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def trace_ray(poly, angle, depth=30):
    return json.loads(_lamina.trace_ray(poly, angle, depth))


def land(poly, angle, depth=30, landing_tol=1e-6):
    return json.loads(_lamina.land(poly, angle, depth, landing_tol))


def build_lamination(poly, max_den=12, depth=30, threads=1):
    return json.loads(_lamina.build_lamination(poly, max_den, depth, threads))


def pullback_closure(lamination, generators, levels):
    return json.loads(_lamina.pullback_closure(_enc(lamination), generators, levels))


def check_unlinked(lamination):
    return json.loads(_lamina.check_unlinked(_enc(lamination)))


def check_invariant(lamination):
    return json.loads(_lamina.check_invariant(_enc(lamination)))


def quotient_model(lamination):
    return json.loads(_lamina.quotient_model(_enc(lamination)))


def tuning_p(tuning, angle):
    return _tuning_p(_enc(tuning), angle)


def tuning_nu(tuning, angle):
    return _tuning_nu(_enc(tuning), angle)


def verify_order_preserving(tuning, samples=100):
    return json.loads(_lamina.verify_order_preserving(_enc(tuning), samples))


def extend_model(sub_lamination, tuning, ambient):
    return json.loads(_lamina.extend_model(_enc(sub_lamination), _enc(tuning), _enc(ambient)))


def factors_through(extended, sub_lamination, tuning):
    return _factors_through(_enc(extended), _enc(sub_lamination), _enc(tuning))


def strategic_report(poly, tuning, samples=20, depth=30):
    return json.loads(_lamina.strategic_report(poly, _enc(tuning), samples, depth))


def render_svg(lamination):
    return _lamina.render_svg(_enc(lamination))
