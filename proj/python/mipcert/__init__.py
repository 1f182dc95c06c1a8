"""Exact verification of MIP optimality and infeasibility certificates.

Problems and certificates are passed as text in the MIPCERT format.
Rational values come back as fractions.Fraction.
"""

from fractions import Fraction

from . import _core
from ._core import CertError

__all__ = ["CertError", "verify", "certify", "oracle", "parse_problem"]


def _verdict(v):
    if v is None:
        return None
    value = None if v["value"] is None else Fraction(v["value"])
    return {"kind": v["kind"], "value": value}


def verify(certificate, problem=None):
    """Check a certificate; returns a dict with status, exit_code and verdict.

    `problem` is the problem text when the certificate does not embed one.
    """
    r = _core.verify(certificate, problem)
    r["verdict"] = _verdict(r["verdict"])
    return r


def certify(problem, sst=False, lex=False, cg=False, cover=False):
    """Solve a bounded pure-integer problem and return its certificate text."""
    r = _core.certify(problem, sst, lex, cg, cover)
    r["verdict"] = _verdict(r["verdict"])
    return r


def oracle(problem, max_points=10_000_000):
    """Brute-force optimum over the integer box of the core bounds."""
    r = _core.oracle(problem, max_points)
    r["verdict"] = _verdict(r["verdict"])
    if r["argmin"] is not None:
        r["argmin"] = [Fraction(x) for x in r["argmin"]]
    return r


def parse_problem(problem):
    """Parse and canonicalize a problem section."""
    return _core.parse_problem(problem)
