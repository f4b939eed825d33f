"""Concrete Jordan-algebra operations on Hermitian matrices over R and C.

Spectral data is produced by a self-contained cyclic Jacobi diagonalization;
complex Hermitian matrices go through the standard real 2q x 2q symmetric
embedding A + iB -> [[A, -B], [B, A]], which is an algebra isomorphism onto
the commutant of the symplectic form, so eigenvalues come out doubled and
matrix square roots can be read back off the blocks.  This keeps everything
dependency-free and reproducible at the ranks we care about (q <= 3).
"""

from __future__ import annotations

import numpy as np

from .cone import ConeStructure, cone_structure

HERMITIAN_TOL = 1e-12
BOUNDARY_TOL = 1e-12  # membership tolerance for the open cone / open unit cell
JACOBI_TOL = 1e-13


def jacobi_eigh(a, tol=JACOBI_TOL, max_sweeps=100):
    """Cyclic Jacobi diagonalization of a real symmetric matrix.

    Returns (eigenvalues in decreasing order, orthogonal matrix of column
    eigenvectors).  Sweeps stop when the off-diagonal Frobenius norm drops
    below tol times the matrix norm.
    """
    A = np.array(a, dtype=float)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("square matrix required")
    V = np.eye(n)
    norm = np.sqrt(np.sum(A * A))
    if norm == 0.0:
        return np.zeros(n), V
    for _ in range(max_sweeps):
        off = np.sqrt(max(np.sum(A * A) - np.sum(np.diag(A) ** 2), 0.0))
        if off <= tol * norm:
            break
        for p in range(n - 1):
            for r in range(p + 1, n):
                apq = A[p, r]
                if abs(apq) <= tol * norm / n:
                    continue
                theta = (A[r, r] - A[p, p]) / (2.0 * apq)
                t = np.sign(theta) if theta != 0 else 1.0
                t = t / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rot_p = c * A[:, p] - s * A[:, r]
                rot_r = s * A[:, p] + c * A[:, r]
                A[:, p], A[:, r] = rot_p, rot_r
                rot_p = c * A[p, :] - s * A[r, :]
                rot_r = s * A[p, :] + c * A[r, :]
                A[p, :], A[r, :] = rot_p, rot_r
                rot_p = c * V[:, p] - s * V[:, r]
                rot_r = s * V[:, p] + c * V[:, r]
                V[:, p], V[:, r] = rot_p, rot_r
    w = np.diag(A).copy()
    order = np.argsort(-w, kind="stable")
    return w[order], V[:, order]


def _embed(h):
    """Real symmetric image of a complex Hermitian matrix."""
    a, b = h.real, h.imag
    return np.block([[a, -b], [b, a]])


def _eigh_hermitian(h):
    """Decreasing eigenvalues of a Hermitian matrix (real or complex)."""
    if np.iscomplexobj(h):
        w, _ = jacobi_eigh(_embed(h))
        # the embedding doubles every eigenvalue; average adjacent pairs
        return 0.5 * (w[0::2] + w[1::2])
    w, _ = jacobi_eigh(h)
    return w


class ConeElement:
    """Hermitian q x q matrix over R or C with cached spectral data.

    The constructor rejects matrices that are not Hermitian within
    HERMITIAN_TOL (relative to scale) and symmetrizes the remaining noise.
    """

    __slots__ = ("_m", "field", "q", "_spectrum")

    def __init__(self, matrix, field=None):
        m = np.asarray(matrix)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("square matrix required")
        scale = max(1.0, float(np.max(np.abs(m))) if m.size else 0.0)
        if np.max(np.abs(m - m.conj().T)) > HERMITIAN_TOL * scale:
            raise ValueError("matrix is not Hermitian")
        if field is None:
            field = "C" if np.iscomplexobj(m) else "R"
        field = str(field).upper()
        if field == "R":
            if np.iscomplexobj(m):
                if np.max(np.abs(m.imag)) > HERMITIAN_TOL * scale:
                    raise ValueError("complex entries in a real cone element")
                m = m.real
            m = np.asarray(m, dtype=float)
        elif field == "C":
            m = np.asarray(m, dtype=complex)
        else:
            raise ValueError(f"field must be 'R' or 'C', got {field!r}")
        m = (m + m.conj().T) / 2
        m.flags.writeable = False
        self._m = m
        self.field = field
        self.q = m.shape[0]
        self._spectrum = None

    @classmethod
    def from_spectrum(cls, spectrum, field="R"):
        """Diagonal element with the given (not necessarily sorted) spectrum."""
        d = np.diag(np.asarray(spectrum, dtype=float))
        if str(field).upper() == "C":
            d = d.astype(complex)
        return cls(d, field)

    @classmethod
    def identity(cls, q, field="R"):
        return cls.from_spectrum([1.0] * q, field)

    @property
    def matrix(self) -> np.ndarray:
        return self._m

    @property
    def cone(self) -> ConeStructure:
        return cone_structure(self.field, self.q)

    @property
    def spectrum(self) -> tuple:
        """Eigenvalues in decreasing order (cached)."""
        if self._spectrum is None:
            self._spectrum = tuple(float(v) for v in _eigh_hermitian(self._m))
        return self._spectrum

    @property
    def trace(self) -> float:
        return float(np.real(np.trace(self._m)))

    @property
    def det(self) -> float:
        out = 1.0
        for v in self.spectrum:
            out *= v
        return out

    def __repr__(self):
        return f"ConeElement(field={self.field}, q={self.q}, spectrum={self.spectrum})"


def eigenvalues(x: ConeElement) -> np.ndarray:
    """Decreasing eigenvalue vector of x."""
    return np.array(x.spectrum)


def det_trace(x: ConeElement) -> tuple:
    """(product of eigenvalues, sum of eigenvalues)."""
    return x.det, x.trace


def quad_rep(x: ConeElement, y: ConeElement) -> ConeElement:
    """Quadratic representation applied to y: the matrix product x y x."""
    if x.q != y.q:
        raise ValueError("size mismatch")
    m = x.matrix @ y.matrix @ x.matrix
    field = "C" if (x.field == "C" or y.field == "C") else "R"
    return ConeElement((m + m.conj().T) / 2, field)


def sqrt_psd(x: ConeElement) -> ConeElement:
    """Positive semidefinite square root via spectral decomposition.

    Eigenvalues above -BOUNDARY_TOL are clamped to zero; anything more
    negative means the input is indefinite and raises ValueError.
    """
    scale = max(1.0, abs(x.spectrum[0]) if x.q else 1.0)
    if x.spectrum[-1] < -BOUNDARY_TOL * scale:
        raise ValueError(f"indefinite input: smallest eigenvalue {x.spectrum[-1]}")
    if x.field == "R":
        w, v = jacobi_eigh(x.matrix)
        root = v @ np.diag(np.sqrt(np.clip(w, 0.0, None))) @ v.T
        return ConeElement((root + root.T) / 2, "R")
    # complex: take the square root inside the real embedding and read back
    # the blocks (the embedding is an algebra isomorphism, so the psd root
    # stays inside its image)
    w, v = jacobi_eigh(_embed(x.matrix))
    s = v @ np.diag(np.sqrt(np.clip(w, 0.0, None))) @ v.T
    q = x.q
    c = (s[:q, :q] + s[q:, q:]) / 2
    d = (s[q:, :q] - s[:q, q:]) / 2
    return ConeElement(c + 1j * d, "C")


def in_omega_e(x: ConeElement, tol=BOUNDARY_TOL) -> bool:
    """Strict membership in the open unit cell {0 < x < identity}."""
    return x.spectrum[-1] > tol and x.spectrum[0] < 1.0 - tol


def in_open_cone(x: ConeElement, tol=BOUNDARY_TOL) -> bool:
    return x.spectrum[-1] > tol


def in_closed_cone(x: ConeElement, tol=BOUNDARY_TOL) -> bool:
    return x.spectrum[-1] >= -tol
