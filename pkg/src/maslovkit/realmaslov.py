"""Classical Maslov index of polynomial loops in the Lagrangian lines of R^2.

A loop is presented as (P(T), P'(T)) for a degree-m real polynomial P with
simple roots and P(0), P(1) != 0.  The Euclidean algorithm applied to the
pair produces a chain of m linear quotients ending in a nonzero constant
remainder; the quotients fill the diagonal of a tridiagonal form S(t) with
-1 off the diagonal, and the winding number of the loop is

    (1/2) * sign(S(1) + (-S(0)))

computed here by symmetric eigenvalue counts with a guard band.  Floating
point with relative tolerance 1e-9 is used throughout; the shipped example
involves 1/sqrt(2), so exact rational arithmetic is not an option.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateInput,
    DomainError,
    EndpointRoot,
    InternalInvariantViolation,
)

REL_TOL = 1e-9
GUARD_BAND = 1e-7


class RealPolynomial:
    """Dense real polynomial with lowest-degree-first coefficients."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        arr = np.atleast_1d(np.asarray(coefficients, dtype=float)).ravel()
        if arr.size == 0:
            arr = np.zeros(1)
        scale = np.max(np.abs(arr))
        if scale > 0:
            keep = arr.size
            while keep > 1 and abs(arr[keep - 1]) <= REL_TOL * scale:
                keep -= 1
            arr = arr[:keep]
        else:
            arr = np.zeros(1)
        self.coefficients = arr

    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return len(self.coefficients) == 1 and self.coefficients[0] == 0.0

    def __call__(self, t: float) -> float:
        return float(np.polyval(self.coefficients[::-1], t))

    def derivative(self) -> "RealPolynomial":
        c = self.coefficients
        if len(c) == 1:
            return RealPolynomial([0.0])
        return RealPolynomial([i * c[i] for i in range(1, len(c))])

    def scaled(self, factor: float) -> "RealPolynomial":
        return RealPolynomial(self.coefficients * factor)

    def __repr__(self):
        return f"RealPolynomial({self.coefficients.tolist()})"


@dataclass(frozen=True)
class ResidueSequence:
    """Euclidean chain data: m linear quotients plus the final constant.

    residues[:-1] are the quotients (each degree <= 1) and residues[-1] is
    the last nonzero remainder of the chain, a constant.  The companion
    product of the quotients applied to (constant, 0) reconstructs (P, P').
    """

    residues: tuple

    @property
    def size(self) -> int:
        return len(self.residues) - 1

    @property
    def terminal(self) -> float:
        return self.residues[-1].coefficients[0]


def sturm_residues(P: RealPolynomial) -> ResidueSequence:
    """Quotient chain of (P, P') for a simple-rooted P with live endpoints."""
    m = P.degree()
    if m < 1 or P.is_zero():
        raise DegenerateInput("the polynomial must have degree >= 1")
    scale = float(np.max(np.abs(P.coefficients)))
    for endpoint in (0.0, 1.0):
        if abs(P(endpoint)) <= REL_TOL * scale:
            raise EndpointRoot(f"P({endpoint:g}) vanishes within tolerance")
    chain = [P.coefficients[::-1].copy(), P.derivative().coefficients[::-1].copy()]
    quotients = []
    while True:
        num, den = chain[-2], chain[-1]
        if len(den) == 1 and den[0] == 0.0:
            raise DegenerateInput("zero divisor in the Euclidean chain")
        quo, rem = np.polydiv(num, den)
        if len(quo) - 1 != 1:
            raise DegenerateInput("irregular quotient degree in the chain")
        quotients.append(RealPolynomial(quo[::-1]))
        rem = -rem
        tiny = REL_TOL * max(1.0, float(np.max(np.abs(num))))
        rem = _trim_leading(rem, tiny)
        if rem is None:
            break
        if len(rem) != len(den) - 1:
            raise DegenerateInput("irregular degree drop in the chain")
        chain.append(rem)
    if len(quotients) != m:
        raise DegenerateInput(
            "chain terminated early: repeated roots or degenerate leading terms"
        )
    terminal = chain[-1]
    if len(terminal) != 1:
        raise DegenerateInput("repeated roots: the chain does not end in a constant")
    return ResidueSequence(tuple(quotients) + (RealPolynomial([terminal[0]]),))


def _trim_leading(arr: np.ndarray, tiny: float):
    """Drop leading (highest-degree) coefficients below tiny; None if all do."""
    k = 0
    while k < len(arr) and abs(arr[k]) <= tiny:
        k += 1
    if k == len(arr):
        return None
    return arr[k:]


def residue_signature_form(seq: ResidueSequence, t: float) -> np.ndarray:
    """Tridiagonal matrix with the quotients at t on the diagonal, -1 off it."""
    m = seq.size
    S = np.zeros((m, m))
    for i in range(m):
        S[i, i] = seq.residues[i](t)
    for i in range(m - 1):
        S[i, i + 1] = -1.0
        S[i + 1, i] = -1.0
    return S


def _signature(M: np.ndarray) -> int:
    if M.size == 0:
        return 0
    eigs = np.linalg.eigvalsh(M)
    guard = GUARD_BAND * max(1.0, float(np.max(np.abs(eigs))))
    if np.any(np.abs(eigs) < guard):
        raise DegenerateInput("eigenvalue inside the guard band; signature unsafe")
    return int(np.sum(eigs > 0) - np.sum(eigs < 0))


def real_maslov(P: RealPolynomial) -> int:
    """Winding number of the loop (P, P'): half the signature of S(1)+(-S(0))."""
    seq = sturm_residues(P)
    m = seq.size
    S1 = residue_signature_form(seq, 1.0)
    S0 = residue_signature_form(seq, 0.0)
    big = np.zeros((2 * m, 2 * m))
    big[:m, :m] = S1
    big[m:, m:] = -S0
    sig = _signature(big)
    if sig % 2:
        raise InternalInvariantViolation("odd signature for a closed loop")
    return sig // 2


def linearization_residual(
    P: RealPolynomial, seq: ResidueSequence, samples: int = 20
) -> float:
    """Max relative error of the companion-product factorization of (P, P')."""
    dP = P.derivative()
    worst = 0.0
    for t in np.linspace(0.0, 1.0, samples):
        v = np.array([seq.terminal, 0.0])
        for k in range(seq.size, 0, -1):
            q = seq.residues[k - 1](t)
            v = np.array([q * v[0] - v[1], v[0]])
        target = np.array([P(t), dP(t)])
        denom = max(1.0, float(np.max(np.abs(target))))
        worst = max(worst, float(np.max(np.abs(v - target))) / denom)
    return worst


def paper_example_polynomial() -> RealPolynomial:
    """Cubic loop preset of winding number one: 4u^3 - 6u^2 + 1 at u = T + 1/sqrt(2)."""
    s = 1.0 / np.sqrt(2.0)
    return RealPolynomial([2 * s - 2, 6 - 12 * s, 12 * s - 6, 4.0])


PRESETS = {"paper-example": paper_example_polynomial}


def preset_polynomial(name: str) -> RealPolynomial:
    if name not in PRESETS:
        raise DomainError(f"unknown preset {name!r}; available: {sorted(PRESETS)}")
    return PRESETS[name]()
