"""Pretty Good Measurement for the Fourier-transformed noisy codeword ensemble.

The PGM on {QFT|psi_c> : c in C} is fixed by the norms n_s of the
f_hat-weighted superpositions over the shifted dual codes C_s^perp; with
Bernoulli noise n_s^2 = sum_t a_s(t) (w_perp/(q-1))^t (1 - w_perp)^(n-t).
"""

from typing import Optional

import numpy as np
from scipy.special import logsumexp, xlog1py, xlogy

from codes import CosetSpectraTable, LinearCode, coset_spectra
from noise import NoiseProfile
from qstate import noisy_symbol_state, product_state, qft_qudit
from utils.budget import check_budget
from utils.logging_config import get_logger, log_event

from .constants import NULL_SPACE_CUTOFF, PGM_ORACLE_BUDGET
from .exceptions import OracleFailure
from .types import PgmOracleResult, PgmSpectrum

logger = get_logger(__name__)


def log_dual_weight_terms(profile: NoiseProfile, n: int) -> np.ndarray:
    """log |f_hat(y)|^2 for |y| = t, t = 0..n."""
    t = np.arange(n + 1, dtype=np.float64)
    dual = profile.omega_perp
    return xlogy(t, dual / (profile.q - 1)) + xlog1py(n - t, -dual)


def pgm_spectrum_from_spectra(table: CosetSpectraTable, profile: NoiseProfile) -> PgmSpectrum:
    """n_s for every syndrome from precomputed coset weight enumerators."""
    code = table.code
    log_terms = log_dual_weight_terms(profile, code.n)
    weights = table.weights.astype(np.float64)
    with np.errstate(divide="ignore"):
        log_norms_sq = logsumexp(
            np.broadcast_to(log_terms, weights.shape), b=weights, axis=1
        )
    norms = np.where(table.nonempty, np.exp(0.5 * log_norms_sq), 0.0)
    return PgmSpectrum(q=code.q, n=code.n, k=code.k, rank=code.rank, omega=profile.omega, norms=norms)


def pgm_spectrum(
    code: LinearCode,
    profile: NoiseProfile,
    budget: Optional[int] = None,
    message_budget: Optional[int] = None,
) -> PgmSpectrum:
    if profile.q != code.q:
        raise ValueError(f"profile over q={profile.q} used with a code over q={code.q}")
    spectrum = pgm_spectrum_from_spectra(coset_spectra(code, budget=budget, message_budget=message_budget), profile)
    log_event(
        logger, "debug", "Computed PGM spectrum", event_type="pgm_spectrum",
        field=code.field.descriptor,
        extra={"n": code.n, "k": code.k, "omega": profile.omega, "p_pgm": spectrum.p_pgm},
    )
    return spectrum


def fourier_codeword_states(code: LinearCode, profile: NoiseProfile) -> np.ndarray:
    """Columns QFT|psi_c> for every distinct codeword c, in enumeration order."""
    field = code.field
    check_budget("PGM oracle dimension", code.q ** code.n, PGM_ORACLE_BUDGET)
    columns = []
    for c in code.codewords():
        qudits = [qft_qudit(noisy_symbol_state(field, profile, int(b))) for b in c]
        columns.append(product_state(qudits).amplitudes)
    return np.stack(columns, axis=1)


def pgm_dense_oracle(code: LinearCode, profile: NoiseProfile) -> PgmOracleResult:
    """PGM success by brute force on dense states.

    With A the matrix of states, rho = A A^dagger and the PGM vectors
    rho^{-1/2} A equal A (A^dagger A)^{-1/2}, so the eigendecomposition runs
    on the Gram matrix; eigenvalues below NULL_SPACE_CUTOFF * lambda_max span
    the null space and are dropped.
    """
    states = fourier_codeword_states(code, profile)
    gram = states.conj().T @ states
    eigenvalues, eigenvectors = np.linalg.eigh(gram)
    top = float(eigenvalues[-1])
    if not np.isfinite(top) or top <= 0:
        raise OracleFailure(f"Gram matrix has largest eigenvalue {top}")
    keep = eigenvalues > NULL_SPACE_CUTOFF * top
    basis = eigenvectors[:, keep]
    inverse_sqrt = (basis / np.sqrt(eigenvalues[keep])) @ basis.conj().T
    measurement = states @ inverse_sqrt
    overlaps = np.einsum("ic,ic->c", measurement.conj(), states)
    per_codeword = np.abs(overlaps) ** 2
    return PgmOracleResult(
        success=float(per_codeword.mean()),
        per_codeword=per_codeword,
        retained_rank=int(keep.sum()),
    )
