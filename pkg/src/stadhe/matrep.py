"""Faithful C(4) matrix representation of the complexified algebra.

This is the brute-force oracle for the blade-table kernel: ``rep`` maps
(complex) multivectors to 4x4 complex matrices through the standard
Pauli-block gamma matrices

    g0 -> diag(1, 1, -1, -1),   gi -> [[0, -sigma_i], [sigma_i, 0]],

and ``unrep`` inverts it by solving against the 16 blade images (they span
C(4), so the map is an algebra isomorphism).  The module also carries the
primitive idempotent f = 1/2(1+g0) 1/2(1+i g1 g2), the associated minimal
left ideal of column spinors, and the column-form Dirac equation, so the
spinor-field machinery can be cross-checked in both languages.
"""

from __future__ import annotations

import numpy as np

from .algebra import (
    METRIC,
    Multivector,
    gamma,
    geometric_product,
    reverse,
)
from .errors import NotEven

_SIGMA = [
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
]

GAMMA_MAT = np.zeros((4, 4, 4), dtype=complex)
GAMMA_MAT[0] = np.diag([1, 1, -1, -1]).astype(complex)
for _i in range(3):
    GAMMA_MAT[_i + 1, :2, 2:] = -_SIGMA[_i]
    GAMMA_MAT[_i + 1, 2:, :2] = _SIGMA[_i]

GAMMA_MAT_UP = np.array([METRIC[mu] * GAMMA_MAT[mu] for mu in range(4)])


def _blade_matrices() -> np.ndarray:
    mats = np.zeros((16, 4, 4), dtype=complex)
    for b in range(16):
        m = np.eye(4, dtype=complex)
        for mu in range(4):
            if b & (1 << mu):
                m = m @ GAMMA_MAT[mu]
        mats[b] = m
    return mats


BLADE_MAT = _blade_matrices()
# Solving M = sum_i c_i BLADE_MAT[i] for c: flatten blade images into a 16x16
# basis matrix and invert once (the trace-pairing Gram route, done directly).
_BASIS_FLAT = BLADE_MAT.reshape(16, 16).T
_BASIS_INV = np.linalg.inv(_BASIS_FLAT)


def rep(a: Multivector) -> np.ndarray:
    """Matrix image, shape (..., 4, 4); linear and multiplicative."""
    return np.einsum("...i,iuv->...uv", a.coeffs, BLADE_MAT)


def unrep(m: np.ndarray) -> Multivector:
    """Inverse of ``rep``; returns a complex-coefficient Multivector."""
    m = np.asarray(m, dtype=complex)
    flat = m.reshape(m.shape[:-2] + (16,))
    return Multivector(np.einsum("ij,...j->...i", _BASIS_INV, flat))


def unrep_real(m: np.ndarray, tol: float = 1e-10) -> Multivector:
    """unrep constrained to the real algebra; raises if imaginary parts remain."""
    mv = unrep(m)
    drift = float(np.max(np.abs(mv.coeffs.imag))) if np.iscomplexobj(mv.coeffs) else 0.0
    if drift > tol:
        raise ValueError(f"matrix is not in the real algebra (imag {drift:.3e})")
    return mv.re


# -- idempotents and the minimal ideal ---------------------------------------

def make_idempotent_f() -> Multivector:
    """f = 1/2(1+g0) 1/2(1+i g1 g2); rep(f) = diag(1,0,0,0)."""
    g12 = geometric_product(gamma[1], gamma[2])
    left = (Multivector.scalar(1.0) + gamma[0]) * 0.5
    right = (Multivector.scalar(1.0) + g12 * 1j) * 0.5
    return geometric_product(left, right)


def conjugate_idempotents() -> list[Multivector]:
    """The four primitive idempotents 1/2(1 +/- g0) 1/2(1 +/- i g1 g2); they sum to 1."""
    g12 = geometric_product(gamma[1], gamma[2])
    out = []
    for s0 in (1.0, -1.0):
        for s12 in (1.0, -1.0):
            left = (Multivector.scalar(1.0) + gamma[0] * s0) * 0.5
            right = (Multivector.scalar(1.0) + g12 * (1j * s12)) * 0.5
            out.append(geometric_product(left, right))
    return out


def reverse_star_idempotent() -> Multivector:
    """The row-ideal generator 1/2(1 - i g2 g1) 1/2(1+g0) (= conj of reverse(f))."""
    g21 = geometric_product(gamma[2], gamma[1])
    left = (Multivector.scalar(1.0) - g21 * 1j) * 0.5
    right = (Multivector.scalar(1.0) + gamma[0]) * 0.5
    return geometric_product(left, right)


# -- ideal (column) spinors ----------------------------------------------------

def ideal_from_dhs(phi: Multivector) -> np.ndarray:
    """Column spinor (psi_1..psi_4) of phi*f, shape (..., 4).

    Right multiplication by f keeps only the first matrix column, so the
    column of rep(phi) is the whole content.  Requires even phi.
    """
    if not phi.is_even():
        raise NotEven("ideal spinors are built from even multivectors")
    return rep(phi)[..., :, 0]


def matrix_from_column(psi: np.ndarray) -> np.ndarray:
    """The 4x4 matrix of the even representative rebuilt from its column.

    Pattern (columns built from psi entries and conjugates):
        [psi1 -psi2* psi3  psi4*]
        [psi2  psi1* psi4 -psi3*]
        [psi3  psi4* psi1 -psi2*]
        [psi4 -psi3* psi2  psi1*]
    """
    psi = np.asarray(psi, dtype=complex)
    p1, p2, p3, p4 = (psi[..., i] for i in range(4))
    c = np.conj
    rows = [
        [p1, -c(p2), p3, c(p4)],
        [p2, c(p1), p4, -c(p3)],
        [p3, c(p4), p1, -c(p2)],
        [p4, -c(p3), p2, c(p1)],
    ]
    return np.stack([np.stack(r, axis=-1) for r in rows], axis=-2)


def dhs_from_ideal(psi: np.ndarray, tol: float = 1e-10) -> Multivector:
    """Even real multivector whose ideal column is ``psi`` (inverse of ideal_from_dhs)."""
    return unrep_real(matrix_from_column(psi), tol=tol)


def dirac_conjugate_column(psi: np.ndarray) -> np.ndarray:
    """Row spinor psi^dagger gamma_0 of a column spinor, shape (..., 4)."""
    return np.einsum("...u,uv->...v", np.conj(psi), GAMMA_MAT[0])


def dirac_column_residual(psi: np.ndarray, dpsi: np.ndarray, m: float) -> np.ndarray:
    """i gamma^mu d_mu psi - m psi for a column spinor with derivative stack dpsi[mu]."""
    kin = np.einsum("muv,m...v->...u", GAMMA_MAT_UP, np.asarray(dpsi, dtype=complex))
    return 1j * kin - m * np.asarray(psi, dtype=complex)


def dirac_conjugate_residual(psi: np.ndarray, dpsi: np.ndarray, m: float) -> np.ndarray:
    """i (d_mu psibar) gamma^mu + m psibar for the Dirac-conjugate row spinor."""
    row = dirac_conjugate_column(psi)
    drow = np.stack([dirac_conjugate_column(dpsi[mu]) for mu in range(4)])
    kin = np.einsum("m...u,muv->...v", drow, GAMMA_MAT_UP)
    return 1j * kin + m * row


def rep_phase_of_rotation(theta):
    """Ideal-column phase picked up by exp(theta g2 g1): e^{+i theta}.

    Fixed against rep once and recorded; the rest-frame wave
    exp(-m t g2 g1) therefore maps to the standard e^{-i m t} column.
    """
    return np.exp(1j * np.asarray(theta))


def phi_r_clifford(phi: Multivector) -> Multivector:
    """Row-ideal element f~* reverse(phi); matches psi^dagger gamma_0 under rep."""
    return geometric_product(reverse_star_idempotent(), reverse(phi))
