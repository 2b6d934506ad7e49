"""Real Clifford algebra Cl(1,3) over a bitmask blade basis.

Blade indexing: basis blade ``b`` (0..15) is the ordered product of the
generators gamma_mu for every set bit mu of ``b``, factors in ascending
index order, e.g. ``0b0011 = g0 g1``.  The metric is eta = diag(+1,-1,-1,-1),
so ``g0^2 = +1`` and ``gk^2 = -1``.  Index raising is a sign flip:
``gamma^0 = gamma_0``, ``gamma^k = -gamma_k``.

Coefficients live in a trailing axis of length 16 of a numpy array, so a
Multivector can hold a single element (shape ``(16,)``) or a whole field
sampled on a grid (shape ``(..., 16)``); every operation broadcasts.
Products are evaluated through dense structure tensors built once from the
anticommutation relations, which keeps blade signs exact (integer table) and
lets numpy carry the batch work.

Conventions fixed here and used everywhere downstream:

* ``G21 = g2 g1`` - the phase bivector of the Dirac-Hestenes equation
  (squares to -1, commutes with g0 and g3).
* ``G012 = G21 g0 = g2 g1 g0`` - the trivector that converts the equation
  into bilinear form (squares to -1).
* ``G5 = gamma^0 gamma^1 gamma^2 gamma^3 = -g0 g1 g2 g3`` - the volume
  element (squares to -1, commutes with even elements, anticommutes with
  vectors).

The descending order of ``G012`` and the raised-index volume element are not
arbitrary: they are the unique choices under which the bilinear identities
verified in the test-suite close with the signs used by the balance laws.
"""

from __future__ import annotations

import numpy as np

from .errors import NonScalarSquare, NotEven, SingularSpinor

METRIC = np.array([1.0, -1.0, -1.0, -1.0])

_GRADE = np.array([bin(b).count("1") for b in range(16)], dtype=np.int64)

# Reversion sign (-1)^{r(r-1)/2} per blade grade.
_REVERSE_SIGN = np.array([(-1) ** (r * (r - 1) // 2) for r in _GRADE], dtype=np.float64)

_BLADE_NAMES = [
    "1", "g0", "g1", "g01", "g2", "g02", "g12", "g012",
    "g3", "g03", "g13", "g013", "g23", "g023", "g123", "g5",
]


def _blade_product(a: int, b: int) -> tuple[float, int]:
    """Sign and blade index of the geometric product of two basis blades."""
    sign = 1.0
    # Count transpositions needed to merge b's factors into a's factor list.
    for mu in range(4):
        if b & (1 << mu):
            higher = a >> (mu + 1)
            sign *= (-1.0) ** bin(higher).count("1")
            if a & (1 << mu):
                sign *= METRIC[mu]
            a ^= 1 << mu
    return sign, a


def _build_tables():
    gp = np.zeros((16, 16, 16))
    wedge = np.zeros((16, 16, 16))
    lcon = np.zeros((16, 16, 16))
    rcon = np.zeros((16, 16, 16))
    for i in range(16):
        for j in range(16):
            sign, k = _blade_product(i, j)
            gp[i, j, k] = sign
            r, s, t = _GRADE[i], _GRADE[j], _GRADE[k]
            if t == r + s:
                wedge[i, j, k] = sign
            if r <= s and t == s - r:
                lcon[i, j, k] = sign
            if s <= r and t == r - s:
                rcon[i, j, k] = sign
    return gp, wedge, lcon, rcon


_GP, _WEDGE, _LCON, _RCON = _build_tables()

# scalar_product(a, b) = <reverse(a) b>_0 reduces to a weighted dot product.
_SP_WEIGHT = _REVERSE_SIGN * np.array([_GP[i, i, 0] for i in range(16)])

_GRADE_MASK = [(_GRADE == k).astype(np.float64) for k in range(5)]
_EVEN_MASK = (_GRADE % 2 == 0)
_ODD_MASK = ~_EVEN_MASK


class Multivector:
    """Element (or array of elements) of Cl(1,3).

    ``coeffs`` has shape ``(..., 16)``; leading axes are batch axes.  Values
    are treated as immutable: operations always allocate fresh arrays.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = np.asarray(coeffs)
        if coeffs.shape[-1:] != (16,):
            raise ValueError("Multivector coefficients must have trailing axis 16")
        if not np.issubdtype(coeffs.dtype, np.complexfloating):
            coeffs = coeffs.astype(np.float64, copy=False)
        self.coeffs = coeffs

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, shape=()):
        return cls(np.zeros(tuple(shape) + (16,)))

    @classmethod
    def scalar(cls, value):
        value = np.asarray(value)
        out = np.zeros(value.shape + (16,), dtype=np.result_type(value, np.float64))
        out[..., 0] = value
        return cls(out)

    @classmethod
    def basis_blade(cls, index: int, value=1.0):
        out = np.zeros(16, dtype=np.result_type(np.asarray(value), np.float64))
        out[index] = value
        return cls(out)

    @classmethod
    def from_vector_components(cls, comps):
        """Grade-1 element sum_mu comps[..., mu] * gamma_mu (lowered basis)."""
        comps = np.asarray(comps)
        out = np.zeros(comps.shape[:-1] + (16,), dtype=np.result_type(comps, np.float64))
        for mu in range(4):
            out[..., 1 << mu] = comps[..., mu]
        return cls(out)

    # -- shape/bookkeeping -------------------------------------------------

    @property
    def shape(self):
        return self.coeffs.shape[:-1]

    def __getitem__(self, key):
        return Multivector(self.coeffs[key])

    def broadcast_to(self, shape):
        return Multivector(np.broadcast_to(self.coeffs, tuple(shape) + (16,)))

    @property
    def re(self):
        return Multivector(self.coeffs.real)

    @property
    def im(self):
        return Multivector(self.coeffs.imag)

    def conj(self):
        return Multivector(self.coeffs.conj())

    # -- ring structure ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        return Multivector(self.coeffs + other.coeffs)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return Multivector(self.coeffs - other.coeffs)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self):
        return Multivector(-self.coeffs)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        return Multivector(self.coeffs * np.asarray(other)[..., None])

    def __rmul__(self, other):
        if isinstance(other, Multivector):  # pragma: no cover - dispatch quirk
            return geometric_product(other, self)
        return Multivector(np.asarray(other)[..., None] * self.coeffs)

    def __truediv__(self, other):
        return Multivector(self.coeffs / np.asarray(other)[..., None])

    def __xor__(self, other):
        return wedge(self, _coerce(other))

    def __invert__(self):
        return reverse(self)

    # -- grade machinery ----------------------------------------------------

    def grade(self, k: int) -> "Multivector":
        if not 0 <= k <= 4:
            raise ValueError(f"grade index {k} outside 0..4")
        return Multivector(self.coeffs * _GRADE_MASK[k])

    def even(self) -> "Multivector":
        return Multivector(self.coeffs * _EVEN_MASK)

    def odd(self) -> "Multivector":
        return Multivector(self.coeffs * _ODD_MASK)

    def is_even(self) -> bool:
        return not np.any(self.coeffs[..., _ODD_MASK])

    def scalar_part(self):
        return self.coeffs[..., 0]

    def pseudoscalar_part(self):
        """Coefficient along G5 (note G5 = -g0123, so the blade coeff flips)."""
        return -self.coeffs[..., 15]

    def vector_components(self):
        """Components n^mu of the grade-1 part in the lowered basis."""
        return np.stack([self.coeffs[..., 1 << mu] for mu in range(4)], axis=-1)

    def norm(self):
        """Euclidean norm of the 16 coefficients (sign-definite bookkeeping norm)."""
        return np.sqrt(np.sum(np.abs(self.coeffs) ** 2, axis=-1))

    # -- display -------------------------------------------------------------

    def __repr__(self):
        if self.shape:
            return f"Multivector(batch {self.shape})"
        terms = []
        for i, name in enumerate(_BLADE_NAMES):
            c = self.coeffs[i]
            if c != 0:
                terms.append(f"{c}*{name}" if name != "1" else f"{c}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def _coerce(x) -> Multivector:
    if isinstance(x, Multivector):
        return x
    return Multivector.scalar(x)


# -- products ---------------------------------------------------------------

def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    return Multivector(np.einsum("...i,...j,ijk->...k", a.coeffs, b.coeffs, _GP))


def wedge(a: Multivector, b: Multivector) -> Multivector:
    return Multivector(np.einsum("...i,...j,ijk->...k", a.coeffs, b.coeffs, _WEDGE))


def left_contract(a: Multivector, b: Multivector) -> Multivector:
    """a lrcorner b: grade s-r part of each homogeneous product, zero for r > s."""
    return Multivector(np.einsum("...i,...j,ijk->...k", a.coeffs, b.coeffs, _LCON))


def right_contract(a: Multivector, b: Multivector) -> Multivector:
    """a llcorner b: grade r-s part, zero for r < s."""
    return Multivector(np.einsum("...i,...j,ijk->...k", a.coeffs, b.coeffs, _RCON))


def scalar_product(a: Multivector, b: Multivector):
    """<reverse(a) b>_0 - symmetric, vanishes across distinct grades."""
    return np.einsum("...i,...i,i->...", a.coeffs, b.coeffs, _SP_WEIGHT)


def grade_projection(a: Multivector, k: int) -> Multivector:
    return a.grade(k)


def reverse(a: Multivector) -> Multivector:
    return Multivector(a.coeffs * _REVERSE_SIGN)


def commutator(a: Multivector, b: Multivector) -> Multivector:
    return Multivector(0.5 * (geometric_product(a, b).coeffs - geometric_product(b, a).coeffs))


# -- exponentials and inverses ----------------------------------------------

def exp_commuting_square(a: Multivector, tol: float = 1e-12) -> Multivector:
    """Closed-form exponential for elements whose square is a scalar.

    cos/sin for a^2 < 0, cosh/sinh for a^2 > 0, 1 + a at a^2 = 0.  Raises
    NonScalarSquare when a^2 carries non-scalar content above ``tol``
    (relative to its magnitude); callers then fall back to exp_series.
    """
    sq = geometric_product(a, a)
    lam = sq.scalar_part()
    rest = np.sqrt(np.maximum(sq.norm() ** 2 - np.abs(lam) ** 2, 0.0))
    scale = np.maximum(np.abs(lam), 1.0)
    if np.any(rest > tol * scale):
        raise NonScalarSquare(
            f"square has non-scalar part of magnitude {float(np.max(rest)):.3e}"
        )
    lam = np.real(lam)
    r = np.sqrt(np.abs(lam))
    small = r < 1e-30
    rs = np.where(small, 1.0, r)
    cos_part = np.where(lam < 0, np.cos(r), np.cosh(r))
    sin_over = np.where(lam < 0, np.sin(rs) / rs, np.sinh(rs) / rs)
    sin_over = np.where(small, 1.0, sin_over)
    out = a.coeffs * sin_over[..., None]
    out[..., 0] = out[..., 0] + cos_part
    return Multivector(out)


def exp_series(a: Multivector, order: int = 24) -> Multivector:
    """Truncated power series exponential (fallback for general arguments)."""
    term = Multivector.scalar(np.ones(a.shape))
    acc = term
    for n in range(1, order + 1):
        term = geometric_product(term, a) / n
        acc = acc + term
    return acc


def invertible_density(phi: Multivector):
    """(a, b, rho) with phi*reverse(phi) = a + b*G5 and rho = sqrt(a^2 + b^2)."""
    pr = geometric_product(phi, reverse(phi))
    a = np.real(pr.scalar_part())
    b = np.real(pr.pseudoscalar_part())
    return a, b, np.hypot(a, b)


def invert_spinor(phi: Multivector, rho_min: float = 1e-12) -> Multivector:
    """Inverse of an even multivector via phi^-1 = reverse(phi) (phi reverse(phi))^-1.

    phi*reverse(phi) = a + b*G5 inverts in closed form since G5^2 = -1.
    """
    if not phi.is_even():
        raise NotEven("invert_spinor requires an even multivector")
    a, b, rho = invertible_density(phi)
    if np.any(rho < rho_min):
        raise SingularSpinor(f"min |phi phi~| = {float(np.min(rho)):.3e} below {rho_min}")
    inv_factor = (Multivector.scalar(a) - G5 * b) / (rho ** 2)
    return geometric_product(reverse(phi), inv_factor)


# -- fixed elements -----------------------------------------------------------

ONE = Multivector.scalar(1.0)
gamma = tuple(Multivector.basis_blade(1 << mu) for mu in range(4))
gamma_up = tuple(Multivector.basis_blade(1 << mu, METRIC[mu]) for mu in range(4))

G21 = geometric_product(gamma[2], gamma[1])
G012 = geometric_product(G21, gamma[0])
G5 = geometric_product(
    geometric_product(gamma_up[0], gamma_up[1]),
    geometric_product(gamma_up[2], gamma_up[3]),
)

BLADE_NAMES = tuple(_BLADE_NAMES)
GRADE_OF_BLADE = _GRADE.copy()


def blade_string(a: Multivector, digits: int = 12) -> str:
    """Stable textual form used in reports, e.g. ``3.0*g01 - 1.0*g5``."""
    if a.shape:
        raise ValueError("blade_string renders single elements only")
    terms = []
    for i, name in enumerate(_BLADE_NAMES):
        c = complex(a.coeffs[i]) if np.iscomplexobj(a.coeffs) else float(a.coeffs[i])
        if c == 0:
            continue
        if isinstance(c, complex) and c.imag:
            text = f"({c.real:.{digits}g}{c.imag:+.{digits}g}j)"
        else:
            text = f"{float(np.real(c)):.{digits}g}"
        terms.append(text if name == "1" else f"{text}*{name}")
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out
