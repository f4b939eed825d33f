"""Jack polynomials, normalized so the weight-k family sums to the k-th trace power.

The monomial expansion of each polynomial is produced by the classical
Laplace-Beltrami recurrence: writing C_lam = sum_{mu <= lam} c_{lam,mu} m_mu
(dominance order), the off-diagonal coefficients satisfy

    c_{lam,mu} = (2/alpha) / (rho(lam) - rho(mu))
                 * sum (mu_i - mu_j + 2t) c_{lam, nu(i,j,t)},

where rho(kappa) = sum_i kappa_i (kappa_i - 1 - (2/alpha)(i-1)), and nu(i,j,t)
is mu with t moved from part j to an earlier part i, re-sorted, restricted to
mu < nu <= lam.  The top coefficient is fixed by the trace-power normalization
and equals alpha^k k! / prod_{cells} (alpha (arm+1) + leg).

With a Fraction alpha the table is exact; with a float alpha the same
recurrence runs in floats (it only adds and divides positive quantities, so it
is stable to roughly #ops * machine epsilon).  Tables are memoized per
(rank, alpha) and safe for concurrent readers; insertion is serialized.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .errors import CapExceededError
from .partitions import (
    Partition,
    enumerate_partitions,
    monomial_at_ones,
    monomial_orbit,
)
from .sympoly import JACK, MONOMIAL, SymPolynomial

DEFAULT_DEGREE_CAP = 8
DEFAULT_RANK_CAP = 3


def _rho(lam, alpha):
    two_over = 2 / (1 * alpha) if not isinstance(alpha, Fraction) else Fraction(2) / alpha
    return sum(p * (p - 1 - two_over * i) for i, p in enumerate(lam))


def _top_coefficient(lam, alpha):
    """Leading m_lam coefficient: alpha^k k! / prod(alpha (arm+1) + leg).

    Computed as an interleaved product of ratios so float tables cannot
    overflow before cancelling.
    """
    denoms = [alpha * (lam.arm(i, j) + 1) + lam.leg(i, j) for i, j in lam.cells()]
    value = alpha / alpha  # one, in alpha's arithmetic
    for i, den in enumerate(denoms, start=1):
        value = value * (alpha * i) / den
    return value


def _expand(lam, alpha, q):
    """Monomial coefficient dict of the Jack polynomial indexed by lam."""
    k = lam.weight
    rho_top = _rho(lam, alpha)
    coeffs = {lam: _top_coefficient(lam, alpha)}
    two_over = (Fraction(2) if isinstance(alpha, Fraction) else 2.0) / alpha
    for mu in enumerate_partitions(k, q):
        if mu == lam or not lam.dominates(mu):
            continue
        muv = mu.padded(q)
        total = 0
        for j in range(1, q):
            for i in range(j):
                for t in range(1, muv[j] + 1):
                    moved = list(muv)
                    moved[i] += t
                    moved[j] -= t
                    nu = Partition(sorted(moved, reverse=True))
                    c_nu = coeffs.get(nu)
                    if c_nu is not None:
                        total += (muv[i] - muv[j] + 2 * t) * c_nu
        if total:
            coeffs[mu] = two_over * total / (rho_top - _rho(mu, alpha))
    return {m: c for m, c in coeffs.items() if c != 0}


class JackTable:
    """Memoized monomial expansions for one (rank, alpha) pair.

    degree_cap guards the cost of exact expansions; exceeding it raises
    CapExceededError rather than silently truncating.  The cap can be raised
    after construction.
    """

    def __init__(self, q, alpha, degree_cap=DEFAULT_DEGREE_CAP, rank_cap=DEFAULT_RANK_CAP):
        if q < 1:
            raise ValueError("rank must be >= 1")
        if q > rank_cap:
            raise CapExceededError(f"rank {q} exceeds configured rank cap {rank_cap}")
        if not alpha > 0:
            raise ValueError("alpha must be positive")
        self.q = q
        self.alpha = alpha
        self.degree_cap = degree_cap
        self.exact = isinstance(alpha, (Fraction, int))
        self._coeffs = {}
        self._mono_to_jack = {}
        self._lock = threading.Lock()

    def raise_cap(self, degree_cap):
        if degree_cap > self.degree_cap:
            self.degree_cap = degree_cap

    def _check(self, weight):
        if weight > self.degree_cap:
            raise CapExceededError(
                f"degree {weight} exceeds configured degree cap {self.degree_cap}"
            )

    def coeffs(self, lam):
        """Monomial coefficient map of the Jack polynomial for lam."""
        lam = Partition(lam)
        if lam.length > self.q:
            raise ValueError(f"partition {tuple(lam)} too long for rank {self.q}")
        self._check(lam.weight)
        got = self._coeffs.get(lam)
        if got is None:
            with self._lock:
                got = self._coeffs.get(lam)
                if got is None:
                    got = _expand(lam, self.alpha, self.q)
                    self._coeffs[lam] = got
        return got

    def at_ones(self, lam):
        """Value at (1, ..., 1); strictly positive."""
        return sum(c * monomial_at_ones(mu, self.q) for mu, c in self.coeffs(lam).items())

    def eval(self, lam, xi):
        """Value at the point xi; exact when the table and xi are exact."""
        xi = tuple(xi)
        powers = [{0: 1} for _ in range(self.q)]
        total = 0
        for mu, c in self.coeffs(lam).items():
            mono = 0
            for expo in monomial_orbit(mu, self.q):
                term = 1
                for i, e in enumerate(expo):
                    if e:
                        p = powers[i].get(e)
                        if p is None:
                            p = xi[i] ** e
                            powers[i][e] = p
                        term = term * p
                mono += term
            total += c * mono
        return total

    def monomial_in_jack(self, weight):
        """Expansion of each m_mu of given weight in the Jack basis.

        Returns {mu: {lam: coefficient}}.  Solved by back-substitution along
        the reverse-lex order, which linearly extends dominance.
        """
        self._check(weight)
        got = self._mono_to_jack.get(weight)
        if got is not None:
            return got
        parts = enumerate_partitions(weight, self.q)
        table = {lam: self.coeffs(lam) for lam in parts}
        result = {}
        for mu in parts:
            b = {}
            for pos, lam in enumerate(parts):
                val = 1 if lam == mu else 0
                for prev in parts[:pos]:
                    c = table[prev].get(lam)
                    if c is not None and prev in b:
                        val = val - b[prev] * c
                if val != 0:
                    b[lam] = val / table[lam][lam]
            result[mu] = b
        with self._lock:
            self._mono_to_jack[weight] = result
        return result


_REGISTRY = {}
_REGISTRY_LOCK = threading.Lock()


def jack_table(q, alpha, degree_cap=None, rank_cap=DEFAULT_RANK_CAP) -> JackTable:
    """Shared JackTable for (q, alpha); exact iff alpha is a Fraction or int."""
    if isinstance(alpha, int):
        alpha = Fraction(alpha)
    key = (q, alpha, isinstance(alpha, Fraction))
    with _REGISTRY_LOCK:
        table = _REGISTRY.get(key)
        if table is None:
            table = JackTable(q, alpha, degree_cap or DEFAULT_DEGREE_CAP, rank_cap)
            _REGISTRY[key] = table
        if degree_cap is not None:
            table.raise_cap(degree_cap)
    return table


# ---------------------------------------------------------------------------
# module-level operations
# ---------------------------------------------------------------------------


def jack_expand_monomial(lam, alpha, q, degree_cap=None) -> SymPolynomial:
    """Monomial-basis expansion of the Jack polynomial indexed by lam.

    Coefficients are exact for Fraction alpha; they vanish outside the
    dominance cone below lam and are all nonnegative.
    """
    lam = Partition(lam)
    table = jack_table(q, alpha, degree_cap)
    return SymPolynomial(q, dict(table.coeffs(lam)), MONOMIAL)


def jack_eval(lam, alpha, xi, degree_cap=None):
    """Value of the Jack polynomial at the point xi."""
    xi = tuple(xi)
    table = jack_table(len(xi), alpha, degree_cap)
    return table.eval(Partition(lam), xi)


def jack_at_ones(lam, alpha, q, degree_cap=None):
    """Jack polynomial at the identity point (1, ..., 1)."""
    return jack_table(q, alpha, degree_cap).at_ones(Partition(lam))


def basis_convert(poly: SymPolynomial, target: str, alpha=None, degree_cap=None) -> SymPolynomial:
    """Re-express a polynomial in the other basis; round trips are exact.

    Monomial -> Jack is a triangular solve per homogeneous weight; Jack ->
    monomial just expands.  alpha is taken from the polynomial when converting
    out of the Jack basis.
    """
    if target not in (MONOMIAL, JACK):
        raise ValueError(f"unknown basis {target!r}")
    if poly.basis == target:
        return poly
    if poly.basis == JACK:
        table = jack_table(poly.q, poly.alpha, degree_cap or max(poly.degree, 1))
        out = {}
        for lam, c in poly.coeffs.items():
            for mu, cm in table.coeffs(lam).items():
                out[mu] = out.get(mu, 0) + c * cm
        return SymPolynomial(poly.q, out, MONOMIAL)
    if alpha is None:
        raise ValueError("monomial -> jack conversion requires alpha")
    table = jack_table(poly.q, alpha, degree_cap or max(poly.degree, 1))
    out = {}
    for mu, c in poly.coeffs.items():
        for lam, b in table.monomial_in_jack(mu.weight)[mu].items():
            out[lam] = out.get(lam, 0) + c * b
    return SymPolynomial(poly.q, out, JACK, table.alpha)
