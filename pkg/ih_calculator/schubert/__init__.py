"""
Single-condition Schubert varieties with two strata.

This package holds the datum and its invariants, the closed IH formulas,
the registered IH routes with their runner, and the identity sweep.
"""
from __future__ import annotations

from .datum import (
    CaseTag,
    SchubertDatum,
    SchubertInvariants,
    codim_singular_locus,
    constraint_violations,
    invariants,
    is_small_pi,
    is_small_pi1,
    small_resolution_dimension,
    validate,
)
from .formulas import (
    h_resolution,
    ih_via_case_formula,
    ih_via_f3,
    to_two_strata_data,
)
from .identities import IdentityReport, verify_identities
from .runner import IHResult, RouteRunner, ih

__all__ = [
    'CaseTag',
    'SchubertDatum',
    'SchubertInvariants',
    'IHResult',
    'IdentityReport',
    'RouteRunner',
    'codim_singular_locus',
    'constraint_violations',
    'h_resolution',
    'ih',
    'ih_via_case_formula',
    'ih_via_f3',
    'invariants',
    'is_small_pi',
    'is_small_pi1',
    'small_resolution_dimension',
    'to_two_strata_data',
    'validate',
    'verify_identities',
]
