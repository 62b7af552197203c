"""Exact verification of dual quasi-bialgebras, quasi-Yetter-Drinfeld data,
quantum lines and their bosonizations over cyclotomic fields."""

from .cyclotomic import CycNum, field, mult_order, q_binom, root_of_unity
from .report import AxiomError, Report

__version__ = "0.1.0"

__all__ = ["CycNum", "field", "mult_order", "q_binom", "root_of_unity", "AxiomError", "Report"]
