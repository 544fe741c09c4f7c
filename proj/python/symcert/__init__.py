"""Exact symmetric-function inequalities and their certificates.

All rational inputs and outputs are ``fractions.Fraction``; ``int`` and
``"p/q"`` strings are also accepted. Floats are rejected.
"""

from ._core import (
    CertificateViolation,
    PreconditionError,
    RangeError,
    associated_cubic,
    cert_constants,
    cubic_discriminant,
    decomposition_residual,
    empirical_theta,
    find_counterexample,
    gen_maclaurin_chain,
    gen_nm_gap,
    lemma_scan,
    linear_combo_gap,
    liu_ren_gap,
    maclaurin_chain,
    means,
    newton_gap,
    quantitative_gap,
    reduce_to_three,
    remark_violation,
    report,
    sigma,
    sigma_naive,
    symbolic_check,
    theta_for,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
