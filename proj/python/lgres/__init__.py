"""Resolution prover for the loosely guarded fragment."""

from ._lgres import classify, clausify, lgc_check, query, run, sat

__all__ = ["classify", "clausify", "lgc_check", "query", "run", "sat"]
