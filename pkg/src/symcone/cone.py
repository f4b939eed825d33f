"""Structure constants of the symmetric matrix cones and their scalar special functions.

Covers the cones of positive definite Hermitian q x q matrices over the reals
(Peirce constant d=1) and the complex numbers (d=2): the cone gamma and beta
functions, generalized Pochhammer symbols, pole sets, and the Wallach-set
membership predicates.  Half-integer inputs are recognized exactly, so the
discrete predicates never depend on float noise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, pi

import scipy.special

from .errors import PoleError
from .partitions import Partition

MEMBERSHIP_TOL = 1e-12  # float tolerance for the discrete set predicates


def as_exact(x):
    """Ints, Fractions and floats become exact Fractions; complex stays complex.

    Floats are dyadic rationals, so Fraction(x) is an exact representation,
    not an approximation.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        if x != x or x in (float("inf"), float("-inf")):
            raise ValueError(f"cannot exactify {x}")
        return Fraction(x)
    if isinstance(x, complex):
        if x.imag == 0:
            return Fraction(x.real)
        return x
    raise TypeError(f"unsupported numeric type {type(x)!r}")


@dataclass(frozen=True)
class ConeStructure:
    """Field tag and rank, with the derived structure constants.

    d is the Peirce constant (1 for R, 2 for C), n the real dimension
    q + d q(q-1)/2, mu0 = d(q-1)/2 the convergence threshold of the cone
    integrals, and alpha = 2/d the Jack parameter of the spherical
    polynomials.
    """

    field: str
    q: int

    def __post_init__(self):
        if self.field not in ("R", "C"):
            raise ValueError(f"field must be 'R' or 'C', got {self.field!r}")
        if self.q < 1:
            raise ValueError("rank must be >= 1")

    @property
    def d(self) -> int:
        return 1 if self.field == "R" else 2

    @property
    def n(self) -> int:
        return self.q + self.d * self.q * (self.q - 1) // 2

    @property
    def mu0(self) -> Fraction:
        return Fraction(self.d * (self.q - 1), 2)

    @property
    def alpha(self) -> Fraction:
        return Fraction(2, self.d)

    @property
    def dim_over_rank(self) -> Fraction:
        """n/q = mu0 + 1, the exponent shift in the cone measures."""
        return Fraction(self.n, self.q)

    def pochhammer_shift(self, j: int) -> Fraction:
        """d/2 * j, the argument shift of the j-th gamma/Pochhammer factor."""
        return Fraction(self.d * j, 2)


def cone_structure(field: str, q: int) -> ConeStructure:
    """Normalizing constructor; accepts lowercase field tags."""
    return ConeStructure(str(field).upper(), int(q))


# ---------------------------------------------------------------------------
# gamma and beta functions of the cone
# ---------------------------------------------------------------------------


def _is_nonpositive_integer(w) -> bool:
    if isinstance(w, complex):
        if abs(w.imag) > MEMBERSHIP_TOL:
            return False
        w = w.real
    if isinstance(w, Fraction):
        return w.denominator == 1 and w <= 0
    r = round(w)
    return abs(w - r) <= MEMBERSHIP_TOL and r <= 0


def gamma_cone(z, cone: ConeStructure):
    """Cone gamma function: (2 pi)^((n-q)/2) times a product of classical gammas.

    The j-th factor is Gamma(z - d/2 (j-1)); a pole in any factor raises
    PoleError naming it.  Relative accuracy is that of the classical gamma
    (Lanczos-type, ~1e-14).
    """
    args = []
    for j in range(cone.q):
        w = (as_exact(z) if not isinstance(z, complex) or z.imag == 0 else z) - cone.pochhammer_shift(j)
        if _is_nonpositive_integer(w):
            raise PoleError(
                f"gamma_cone pole: factor j={j + 1} has argument {w}, a nonpositive integer",
                where=(j + 1, w),
            )
        args.append(w)
    value = (2 * pi) ** ((cone.n - cone.q) / 2)
    for w in args:
        warg = complex(w) if isinstance(z, complex) else float(w)
        value = value * scipy.special.gamma(warg)
    return value


def beta_cone(z, w, cone: ConeStructure):
    """Cone beta function Gamma(z) Gamma(w) / Gamma(z + w); symmetric in (z, w)."""
    zw = z + w
    return gamma_cone(z, cone) * gamma_cone(w, cone) / gamma_cone(zw, cone)


def gamma_poles(cone: ConeStructure, lo, hi) -> list:
    """All poles of the cone gamma function in the closed window [lo, hi].

    The pole set is the half-integer lattice {0, d/2, ..., (q-1)d/2} shifted
    down by the nonnegative integers.
    """
    lo, hi = as_exact(lo), as_exact(hi)
    poles = set()
    for j in range(cone.q):
        top = cone.pochhammer_shift(j)
        m = top - lo  # pole at top - m for integer m >= 0
        if m < 0:
            continue
        for mm in range(floor(m) + 1):
            p = top - mm
            if lo <= p <= hi:
                poles.add(p)
    return sorted(poles)


def pochhammer_gen(mu, lam, cone: ConeStructure):
    """Generalized Pochhammer symbol: product over rows of shifted rising factorials.

    Row j contributes (mu - d/2 (j-1))_{lam_j}.  Exact (Fraction) for rational
    mu; zero factors are allowed and yield an exact zero, callers must test.
    """
    lam = Partition(lam)
    if lam.length > cone.q:
        raise ValueError(f"partition {tuple(lam)} too long for rank {cone.q}")
    if not isinstance(mu, complex) or mu.imag == 0:
        mu = as_exact(mu)
    value = mu - mu + 1  # one, in mu's arithmetic
    for j, p in enumerate(lam):
        base = mu - cone.pochhammer_shift(j)
        for i in range(p):
            value = value * (base + i)
    return value


def rising(x, n: int):
    """Classical rising factorial x (x+1) ... (x+n-1); for negative n the
    reciprocal product 1 / ((x-1)(x-2)...(x+n))."""
    if n >= 0:
        value = x - x + 1
        for i in range(n):
            value = value * (x + i)
        return value
    value = x - x + 1
    for i in range(1, -n + 1):
        value = value * (x - i)
    return 1 / value


def falling(x, n: int):
    """Classical falling factorial x (x-1) ... (x-n+1), n >= 0."""
    if n < 0:
        raise ValueError("falling factorial needs n >= 0")
    value = x - x + 1
    for i in range(n):
        value = value * (x - i)
    return value


# ---------------------------------------------------------------------------
# Wallach predicates
# ---------------------------------------------------------------------------


def _lattice_member(nu, cone: ConeStructure) -> bool:
    """Membership in the half-integer lattice {0, d/2, ..., (q-1)d/2}."""
    if isinstance(nu, complex):
        if abs(nu.imag) > MEMBERSHIP_TOL:
            return False
        nu = nu.real
    nu = as_exact(nu)
    for j in range(cone.q):
        p = cone.pochhammer_shift(j)
        if nu == p or abs(nu - p) <= MEMBERSHIP_TOL:
            return True
    return False


def wallach_contains(nu, cone: ConeStructure) -> bool:
    """Membership in the Wallach set: the lattice points union (mu0, infinity).

    This is exactly the parameter set on which the extended beta distribution
    is a positive measure (for d in {1, 2}).
    """
    if isinstance(nu, complex):
        if abs(nu.imag) > MEMBERSHIP_TOL:
            return False
        nu = nu.real
    if _lattice_member(nu, cone):
        return True
    return as_exact(nu) > cone.mu0


def complex_wallach_contains(nu, cone: ConeStructure) -> bool:
    """Membership in the complex-measure parameter set: lattice union {Re > mu0}."""
    if _lattice_member(nu, cone):
        return True
    re = nu.real if isinstance(nu, complex) else nu
    return as_exact(re) > cone.mu0


def extension_level(nu, cone: ConeStructure) -> int:
    """Smallest k >= 0 with Re(nu) > mu0 - k."""
    re = as_exact(nu.real if isinstance(nu, complex) else nu)
    k = 0
    while not re > cone.mu0 - k:
        k += 1
        if k > 10_000:
            raise ValueError(f"nu={nu} too far left of the cone parameter range")
    return k


@dataclass(frozen=True)
class BetaParams:
    """Index pair (mu, nu) of a beta measure plus its extension level k.

    k records which half-plane {Re nu > mu0 - k} the parameter nu sits in;
    the hypothesis predicates say which theorems about the extended measure
    apply for this (mu, k).
    """

    mu: object
    nu: object
    k: int

    def in_halfplane(self, cone: ConeStructure) -> bool:
        re = self.nu.real if isinstance(self.nu, complex) else self.nu
        return as_exact(re) > cone.mu0 - self.k

    def density_regime(self, cone: ConeStructure) -> bool:
        """Both real parts above mu0: the measure has an ordinary density."""
        re_mu = self.mu.real if isinstance(self.mu, complex) else self.mu
        re_nu = self.nu.real if isinstance(self.nu, complex) else self.nu
        return as_exact(re_mu) > cone.mu0 and as_exact(re_nu) > cone.mu0

    def extension_hypothesis_ok(self, cone: ConeStructure) -> bool:
        """Re mu > mu0 + k q + 1: the distributional extension exists."""
        re = self.mu.real if isinstance(self.mu, complex) else self.mu
        return as_exact(re) > cone.mu0 + self.k * cone.q + 1

    def dichotomy_hypothesis_ok(self, cone: ConeStructure) -> bool:
        """Real mu > mu0 + k q + 3/2: the positivity dichotomy applies (d in {1,2})."""
        if isinstance(self.mu, complex) and self.mu.imag != 0:
            return False
        re = self.mu.real if isinstance(self.mu, complex) else self.mu
        return as_exact(re) > cone.mu0 + self.k * cone.q + Fraction(3, 2)


def beta_params(mu, nu, cone: ConeStructure, k: int | None = None) -> BetaParams:
    """Bundle (mu, nu) with a validated extension level (minimal if omitted)."""
    if not isinstance(mu, complex):
        mu = as_exact(mu)
    if not isinstance(nu, complex):
        nu = as_exact(nu)
    if k is None:
        k = extension_level(nu, cone)
    params = BetaParams(mu, nu, int(k))
    if not params.in_halfplane(cone):
        raise ValueError(f"nu={nu} is not in the half-plane Re > mu0 - k = {cone.mu0 - k}")
    return params
