"""Steady-state covariance matrix of the two-cavity system.

The state of the four modes (mechanical 1 and 2, optical 1 and 2) is
Gaussian and fully described by the symmetric 8x8 covariance matrix of
the quadrature vector

    u = (Xm1, Ym1, Xm2, Ym2, Xo1, Yo1, Xo2, Yo2),

with X = (a^dag + a)/sqrt(2), Y = i(a^dag - a)/sqrt(2), so the vacuum
variance is 1/2 and [X, Y] = i.  The symplectic form in this ordering is
the block-diagonal Omega = diag([[0, 1], [-1, 0]], ...); it is defined
once here (``symplectic_form``) and reused everywhere, since every sign
convention downstream depends on it.

The matrix is assembled in closed form from six generating entries
(a1, a2, c1..c4); no inversion or integration is involved.  The
independent numerical reconstruction lives in ``lyapunov`` and is the
only other path to the same matrix.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .reduction import ReducedParams

#: Row/column labels of the global covariance matrix, in order.
QUADRATURE_ORDER = ("Xm1", "Ym1", "Xm2", "Ym2", "Xo1", "Yo1", "Xo2", "Yo2")

# Slices of the four modes in the global ordering.
_MODE_SLICES = {
    "m1": slice(0, 2),
    "m2": slice(2, 4),
    "o1": slice(4, 6),
    "o2": slice(6, 8),
}


class Subsystem(enum.Enum):
    """The four bipartitions of the two-cavity system."""

    MM = "mm"             # mechanical 1 + mechanical 2
    OO = "oo"             # optical 1 + optical 2
    HYBRID_LOCAL = "hl"   # mechanical 1 + its own optical mode
    HYBRID_CROSS = "hc"   # mechanical 1 + the other cavity's optical mode

    @classmethod
    def from_name(cls, name: str) -> "Subsystem":
        try:
            return cls(name.lower())
        except ValueError:
            valid = ", ".join(s.value for s in cls)
            raise ValueError(f"invalid bipartition {name!r}; expected one of {valid}")


#: Mode pair extracted for each bipartition.
_SUBSYSTEM_MODES = {
    Subsystem.MM: ("m1", "m2"),
    Subsystem.OO: ("o1", "o2"),
    Subsystem.HYBRID_LOCAL: ("m1", "o1"),
    Subsystem.HYBRID_CROSS: ("m1", "o2"),
}


@dataclass(frozen=True)
class CovarianceEntries:
    """The six independent entries generating the global covariance matrix.

    ``a1`` and ``a2`` are the mechanical and optical single-mode variances;
    ``c1``/``c2`` the mechanical-mechanical and optical-optical cross
    correlations, ``c3``/``c4`` the local and crossed hybrid ones.  All are
    dimensionless (vacuum variance 1/2).  ``c3`` is the only entry that can
    change sign (thermal vs squeezing dominated).
    """

    a1: float
    a2: float
    c1: float
    c2: float
    c3: float
    c4: float


@dataclass(frozen=True, eq=False)
class TwoModeCovariance:
    """4x4 covariance matrix of one bipartition, in block form.

    Layout is ``[[A, C], [C^T, B]]`` in the basis (X1, Y1, X2, Y2) of the
    two selected modes.  For every bipartition produced here the blocks
    are diagonal 2x2 matrices, which the measure computations exploit for
    numerically exact determinants.
    """

    a_block: np.ndarray
    b_block: np.ndarray
    c_block: np.ndarray
    tag: Subsystem

    def matrix(self) -> np.ndarray:
        return np.block([[self.a_block, self.c_block],
                         [self.c_block.T, self.b_block]])

    @property
    def blocks_diagonal(self) -> bool:
        return all(
            block[0, 1] == 0.0 and block[1, 0] == 0.0
            for block in (self.a_block, self.b_block, self.c_block)
        )

    @property
    def det_a(self) -> float:
        return _det2(self.a_block)

    @property
    def det_b(self) -> float:
        return _det2(self.b_block)

    @property
    def det_c(self) -> float:
        return _det2(self.c_block)

    @property
    def det_sigma(self) -> float:
        """Determinant of the full 4x4 matrix.

        With diagonal blocks the X and Y sectors decouple, so the
        determinant factors exactly into two 2x2 determinants; this avoids
        the rounding noise of a generic 4x4 determinant near pure states.
        """
        if self.blocks_diagonal:
            det_x = (self.a_block[0, 0] * self.b_block[0, 0]
                     - self.c_block[0, 0] ** 2)
            det_y = (self.a_block[1, 1] * self.b_block[1, 1]
                     - self.c_block[1, 1] ** 2)
            return float(det_x * det_y)
        return float(np.linalg.det(self.matrix()))


def _det2(block: np.ndarray) -> float:
    return float(block[0, 0] * block[1, 1] - block[0, 1] * block[1, 0])


def cm_entries(p: ReducedParams) -> CovarianceEntries:
    """Evaluate the six closed-form covariance entries.

    All six share the denominator ``2 (1 + alpha)(1 + beta)``; the
    numerators mix the squeezed-light moments (through cosh 2r, sinh 2r)
    with the thermal occupation.
    """
    ch = math.cosh(2.0 * p.r)
    sh = math.sinh(2.0 * p.r)
    therm = 2.0 * p.n_th + 1.0
    den = 2.0 * (1.0 + p.alpha) * (1.0 + p.beta)
    root_ab = math.sqrt(p.alpha * p.beta)
    return CovarianceEntries(
        a1=(p.beta * ch + therm * (1.0 + p.alpha + p.alpha * p.beta)) / den,
        c1=p.beta * sh / den,
        a2=(ch * (1.0 + p.alpha + p.beta) + therm * p.alpha * p.beta) / den,
        c2=sh * (1.0 + p.alpha + p.beta) / den,
        c3=root_ab * (ch - therm) / den,
        c4=root_ab * sh / den,
    )


def assemble_global(e: CovarianceEntries) -> np.ndarray:
    """Populate the 8x8 covariance matrix from its generating entries.

    The sign pattern is fixed: X-sector cross correlations enter with +,
    the Y-sector partners with the opposite sign for c1, c2, c4 and the
    same sign for c3.
    """
    s = np.zeros((8, 8))
    s[_MODE_SLICES["m1"], _MODE_SLICES["m1"]] = e.a1 * np.eye(2)
    s[_MODE_SLICES["m2"], _MODE_SLICES["m2"]] = e.a1 * np.eye(2)
    s[_MODE_SLICES["o1"], _MODE_SLICES["o1"]] = e.a2 * np.eye(2)
    s[_MODE_SLICES["o2"], _MODE_SLICES["o2"]] = e.a2 * np.eye(2)

    def put(a: str, b: str, x: float, y: float) -> None:
        block = np.diag([x, y])
        s[_MODE_SLICES[a], _MODE_SLICES[b]] = block
        s[_MODE_SLICES[b], _MODE_SLICES[a]] = block

    put("m1", "m2", e.c1, -e.c1)
    put("o1", "o2", e.c2, -e.c2)
    put("m1", "o1", e.c3, +e.c3)
    put("m2", "o2", e.c3, +e.c3)
    put("m1", "o2", e.c4, -e.c4)
    put("m2", "o1", e.c4, -e.c4)
    return s


def extract_subsystem(sigma: np.ndarray, tag: Subsystem) -> TwoModeCovariance:
    """Cut the 4x4 covariance matrix of one bipartition out of the global one."""
    if not isinstance(tag, Subsystem):
        tag = Subsystem.from_name(str(tag))
    first, second = _SUBSYSTEM_MODES[tag]
    return TwoModeCovariance(
        a_block=np.array(sigma[_MODE_SLICES[first], _MODE_SLICES[first]]),
        b_block=np.array(sigma[_MODE_SLICES[second], _MODE_SLICES[second]]),
        c_block=np.array(sigma[_MODE_SLICES[first], _MODE_SLICES[second]]),
        tag=tag,
    )


def global_covariance(p: ReducedParams) -> np.ndarray:
    """Closed-form global covariance matrix for the given knobs."""
    return assemble_global(cm_entries(p))


def symplectic_form(n_modes: int = 4) -> np.ndarray:
    """Block-diagonal symplectic form matching the (X1, Y1, X2, Y2, ...) ordering."""
    return np.kron(np.eye(n_modes), np.array([[0.0, 1.0], [-1.0, 0.0]]))


def symplectic_eigenvalues(sigma: np.ndarray) -> np.ndarray:
    """Symplectic spectrum of a covariance matrix (ascending).

    The symplectic eigenvalues are the positive eigenvalues of
    ``i Omega sigma``; a state is physical iff all are >= 1/2.
    """
    n = sigma.shape[0] // 2
    ev = np.linalg.eigvals(1j * symplectic_form(n) @ sigma)
    pos = np.sort(ev.real[ev.real > 0])
    if pos.size != n:
        raise ValueError("covariance matrix has a degenerate symplectic spectrum")
    return pos
