"""Symmetric polynomials in q eigenvalue variables, stored over partitions.

A polynomial is a finite coefficient map Partition -> coefficient in a declared
basis: either monomial symmetric functions m_lam, or the Jack basis normalized
so that the weight-k Jack polynomials sum to the k-th power of the trace.
Coefficients may be exact (Fraction / int) or floats; arithmetic preserves
whatever the inputs use.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .partitions import Partition, enumerate_partitions, monomial_orbit

MONOMIAL = "monomial"
JACK = "jack"


class SymPolynomial:
    """Symmetric polynomial given by a coefficient map over partitions."""

    __slots__ = ("q", "basis", "alpha", "coeffs")

    def __init__(self, q, coeffs, basis=MONOMIAL, alpha=None):
        if basis not in (MONOMIAL, JACK):
            raise ValueError(f"unknown basis {basis!r}")
        if basis == JACK and alpha is None:
            raise ValueError("jack basis requires alpha")
        self.q = int(q)
        self.basis = basis
        self.alpha = alpha
        clean = {}
        for lam, c in coeffs.items():
            lam = Partition(lam)
            if lam.length > self.q:
                raise ValueError(f"partition {tuple(lam)} too long for rank {q}")
            if c != 0:
                clean[lam] = clean.get(lam, 0) + c
        self.coeffs = {k: v for k, v in clean.items() if v != 0}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, q, basis=MONOMIAL, alpha=None):
        return cls(q, {}, basis, alpha)

    @classmethod
    def one(cls, q, basis=MONOMIAL, alpha=None):
        return cls(q, {Partition(): Fraction(1)}, basis, alpha)

    @classmethod
    def monomial(cls, lam, q):
        """The single monomial symmetric polynomial m_lam."""
        return cls(q, {Partition(lam): Fraction(1)})

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return max((lam.weight for lam in self.coeffs), default=0)

    def __eq__(self, other):
        return (
            isinstance(other, SymPolynomial)
            and self.q == other.q
            and self.basis == other.basis
            and (self.basis != JACK or self.alpha == other.alpha)
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.q, self.basis, frozenset(self.coeffs.items())))

    def __repr__(self):
        terms = ", ".join(f"{tuple(l)}: {c}" for l, c in sorted(self.coeffs.items()))
        return f"SymPolynomial(q={self.q}, {self.basis}, {{{terms}}})"

    def _check_compatible(self, other):
        if self.q != other.q:
            raise ValueError("rank mismatch")
        if self.basis != other.basis or (self.basis == JACK and self.alpha != other.alpha):
            raise ValueError("basis mismatch")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        self._check_compatible(other)
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SymPolynomial(self.q, out, self.basis, self.alpha)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return SymPolynomial(
            self.q, {lam: c * v for lam, v in self.coeffs.items()}, self.basis, self.alpha
        )

    def __mul__(self, other):
        """Exact product; defined in the monomial basis only."""
        self._check_compatible(other)
        if self.basis != MONOMIAL:
            raise ValueError("multiplication is defined in the monomial basis")
        q = self.q
        acc = {}
        for lam, a in self.coeffs.items():
            for mu, b in other.coeffs.items():
                ab = a * b
                for s in monomial_orbit(lam, q):
                    for t in monomial_orbit(mu, q):
                        comp = tuple(x + y for x, y in zip(s, t))
                        acc[comp] = acc.get(comp, 0) + ab
        # the product is symmetric, so m-coefficients are read off at the
        # sorted-descending representative of each orbit
        out = {}
        for comp, c in acc.items():
            if all(comp[i] >= comp[i + 1] for i in range(q - 1)):
                out[Partition(comp)] = c
        return SymPolynomial(q, out, MONOMIAL)

    # -- evaluation --------------------------------------------------------

    def evaluate(self, xi):
        """Value at the point xi (length-q sequence; exact if xi is exact)."""
        xi = tuple(xi)
        if len(xi) != self.q:
            raise ValueError(f"expected {self.q} variables, got {len(xi)}")
        if self.basis == JACK:
            from .jack import jack_eval

            return sum(
                c * jack_eval(lam, self.alpha, xi) for lam, c in self.coeffs.items()
            )
        total = 0
        for lam, c in self.coeffs.items():
            total += c * monomial_value(lam, xi)
        return total


def monomial_value(lam, xi):
    """m_lam evaluated at the point xi."""
    xi = tuple(xi)
    total = 0
    for expo in monomial_orbit(Partition(lam), len(xi)):
        term = 1
        for x, e in zip(xi, expo):
            if e:
                term = term * x**e
        total += term
    return total


def power_of_trace(k: int, q: int) -> SymPolynomial:
    """(x_1 + ... + x_q)^k in the monomial basis (multinomial coefficients)."""
    coeffs = {}
    for lam in enumerate_partitions(k, q):
        c = Fraction(factorial(k))
        for p in lam:
            c /= factorial(p)
        coeffs[lam] = c
    return SymPolynomial(q, coeffs, MONOMIAL)


def determinant_poly(q: int) -> SymPolynomial:
    """The determinant of x as a symmetric polynomial: m_(1,...,1)."""
    return SymPolynomial.monomial((1,) * q, q)


def determinant_complement_poly(q: int) -> SymPolynomial:
    """det(identity - x) expanded by elementary symmetric functions.

    Equals sum_j (-1)^j e_j(xi), and e_j = m_(1^j) in the monomial basis.
    """
    coeffs = {Partition((1,) * j): Fraction((-1) ** j) for j in range(q + 1)}
    return SymPolynomial(q, coeffs, MONOMIAL)
