"""Groundstate Q-polynomials of the XXZ chain at Delta = -1/2.

For each boundary condition (periodic with L = 2n+1, twisted by pi/3 with
L = 2n, reflecting with L = 2n) the groundstate Bethe roots are the zeros
of a polynomial Q_n whose coefficients are, up to sign, elementary
symmetric function values.  This module builds those coefficient lists
exactly from closed-form binomial sums, evaluates the equivalent closed
rational forms, and verifies the recursion, special values and the
binomial summation identities behind the closed forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .exact import QINV, Cyclo, Poly, falling_binom, gen_binom

__all__ = [
    "Boundary",
    "QPolynomial",
    "elem_periodic",
    "elem_twisted",
    "elem_reflecting",
    "q_rational_eval",
    "check_recursion_periodic",
    "q_at_qinv",
    "qinv_product_value",
    "check_special_values",
    "verify_hyp_identity",
    "hyp_failures",
    "chebyshev_expand",
]


class Boundary(str, Enum):
    PERIODIC = "periodic"
    TWISTED = "twisted"
    REFLECTING = "reflecting"

    def chain_length(self, n: int) -> int:
        """System size L paired with n Bethe roots."""
        if self is Boundary.PERIODIC:
            return 2 * n + 1
        return 2 * n


@dataclass(frozen=True)
class QPolynomial:
    """Q_n for one boundary condition, held as its e-values.

    The coefficient of w^{n-l} in Q_n(w) is (-1)^l e_l.  For the
    reflecting boundary the variable is wt = w + 1/w and the e-values are
    elementary symmetric functions of wt_1..wt_n.
    """

    boundary: Boundary
    n: int
    evalues: tuple

    def __post_init__(self):
        if len(self.evalues) != self.n + 1:
            raise ValueError("need e_0..e_n")
        if self.evalues[0] != 1:
            raise ValueError("e_0 must be 1")
        if self.boundary is Boundary.PERIODIC and self.evalues[self.n] != 1:
            raise ValueError("periodic e_n must be 1 (Q_n(0) = (-1)^n)")

    def poly(self) -> Poly:
        """Monic polynomial, coefficients lowest degree first."""
        n = self.n
        coeffs = [Fraction(0)] * (n + 1)
        for l, e in enumerate(self.evalues):
            coeffs[n - l] = (-1) ** l * e
        return Poly(coeffs)

    def __call__(self, w):
        return self.poly()(w)


def elem_periodic(n: int) -> QPolynomial:
    """Exact e-values at the periodic groundstate roots (L = 2n+1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return QPolynomial(Boundary.PERIODIC, 0, (Fraction(1),))
    c = gen_binom(n - Fraction(1, 3), n)
    third = Fraction(1, 3)
    ev = []
    for l in range(n + 1):
        tot = Fraction(0)
        for p in range(l // 3 + 1):
            tot += (
                gen_binom(2 * n - 3 * p + l, 2 * n)
                * gen_binom(n - third, n - p)
                * gen_binom(n + third, p)
                - gen_binom(2 * n - 3 * p + l - 1, 2 * n)
                * gen_binom(n - third, p)
                * gen_binom(n + third, n - p)
            )
        ev.append(tot / c)
    return QPolynomial(Boundary.PERIODIC, n, tuple(ev))


def elem_twisted(n: int) -> QPolynomial:
    """Exact e-values at the twisted (phi = pi/3) groundstate roots (L = 2n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    c = gen_binom(n - Fraction(1, 3), n)
    third = Fraction(1, 3)
    two_thirds = Fraction(2, 3)
    ev = []
    for l in range(n + 1):
        tot = Fraction(0)
        for p in range(l // 3 + 2):
            tot += (
                gen_binom(2 * n - 3 * p + l - 1, 2 * n - 1)
                * gen_binom(n - third, n - p)
                * gen_binom(n - two_thirds, p)
                - gen_binom(2 * n - 3 * p + l + 1, 2 * n - 1)
                * gen_binom(n - third, p - 1)
                * gen_binom(n - two_thirds, n - p)
            )
        ev.append(tot / c)
    return QPolynomial(Boundary.TWISTED, n, tuple(ev))


def _reflect_weight(n: int, k: int, positive: bool) -> Fraction:
    """Coefficient of the w^{+-(3k+1)} pair in the reflecting rational form."""
    if positive:
        return gen_binom(2 * n + Fraction(2, 3), n - k) * gen_binom(
            2 * n - Fraction(2, 3), n + k
        )
    return gen_binom(2 * n + Fraction(2, 3), n + k) * gen_binom(
        2 * n - Fraction(2, 3), n - k
    )


def elem_reflecting(n: int) -> QPolynomial:
    """Exact e-values of wt_1..wt_n at the reflecting groundstate roots.

    Extracted from the closed rational form: each (w^{3k+1} - w^{-3k-1})
    divided by (w - 1/w) is a Chebyshev-like polynomial
    sum_a (-1)^a binom(j-a, a) wt^{j-2a} of degree j = 3k (or 3k-2 for the
    mirrored term), and (2 + wt)^{-2n} expands as a descending series
    sum_m (-2)^m binom(2n-1+m, 2n-1) wt^{-2n-m}.  Only finitely many
    (k, a, m) triples land on each nonnegative power of wt, and the
    negative powers cancel identically since Q_n is a polynomial (checked
    against exact interpolation of the rational form in the tests).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    c = gen_binom(2 * n - Fraction(2, 3), 2 * n)
    ev = []
    for p in range(n + 1):
        tot = Fraction(0)
        for k in range(n + 1):
            sgn = (-1) ** (n + k)
            for a in range(3 * k // 2 + 1):
                m = p - 2 * a - 3 * (n - k)
                if m < 0:
                    continue
                tot += (
                    sgn
                    * _reflect_weight(n, k, True)
                    * (-1) ** a
                    * gen_binom(3 * k - a, a)
                    * Fraction(-2) ** m
                    * gen_binom(2 * n - 1 + m, 2 * n - 1)
                )
            if k >= 1:
                for a in range((3 * k - 2) // 2 + 1):
                    m = p - 2 * a - 3 * (n - k) - 2
                    if m < 0:
                        continue
                    tot -= (
                        sgn
                        * _reflect_weight(n, k, False)
                        * (-1) ** a
                        * gen_binom(3 * k - 2 - a, a)
                        * Fraction(-2) ** m
                        * gen_binom(2 * n - 1 + m, 2 * n - 1)
                    )
        ev.append((-1) ** p * tot / c)
    return QPolynomial(Boundary.REFLECTING, n, tuple(ev))


def elem_for(boundary: Boundary, n: int) -> QPolynomial:
    boundary = Boundary(boundary)
    if boundary is Boundary.PERIODIC:
        return elem_periodic(n)
    if boundary is Boundary.TWISTED:
        return elem_twisted(n)
    return elem_reflecting(n)


def q_rational_eval(boundary: Boundary, n: int, w):
    """Evaluate the closed rational form of Q_n at an exact point w.

    Works over any exact field containing the coefficients (Fraction, or
    Cyclo for points in Q(q)).  Poles: w = -1 for periodic and twisted;
    w in {0, 1, -1} for reflecting.
    """
    boundary = Boundary(boundary)
    third = Fraction(1, 3)
    if boundary is Boundary.PERIODIC:
        den = (1 + w) ** (2 * n + 1)
        if den == 0:
            raise ZeroDivisionError("w = -1 is a pole of the periodic rational form")
        c = gen_binom(n - third, n)
        tot = 0
        for k in range(n + 1):
            coef = (-1) ** k * gen_binom(n - third, k) * gen_binom(n + third, n - k)
            # w^{3k+1}((-1)^n + w^{3n-6k-1}) expanded so w = 0 is regular
            tot = tot + coef * ((-1) ** n * w ** (3 * k + 1) + w ** (3 * n - 3 * k))
        return tot / den / c
    if boundary is Boundary.TWISTED:
        den = (1 + w) ** (2 * n)
        if den == 0:
            raise ZeroDivisionError("w = -1 is a pole of the twisted rational form")
        c = gen_binom(n - third, n)
        two_thirds = Fraction(2, 3)
        tot = 0
        for k in range(n + 1):
            tot = tot + (-1) ** k * gen_binom(n - two_thirds, n - k) * (
                (-1) ** n * gen_binom(n - third, k) * w ** (3 * k)
                - gen_binom(n - third, k - 1) * w ** (3 * n - 3 * k + 2)
            )
        return tot / den / c
    # reflecting
    if w == 0 or w == 1 or w == -1:
        raise ZeroDivisionError("w in {0, 1, -1} is a pole of the reflecting rational form")
    c = gen_binom(2 * n - Fraction(2, 3), 2 * n)
    winv = 1 / w
    den = (w - winv) * (2 + w + winv) ** (2 * n)
    tot = 0
    for k in range(-n, n + 1):
        tot = tot + (
            (-1) ** (n + k)
            * _reflect_weight(n, abs(k), k >= 0)
            * (w ** (3 * k + 1) - w ** (-3 * k - 1))
        )
    return tot / den / c


def check_recursion_periodic(n: int) -> bool:
    """Exact polynomial identity
    (w+1)^2 (3n+2) Q_{n+1} = 3 (w^3-1)(2n+1) Q_n - (w^2-w+1)^2 (3n+1) Q_{n-1}
    with all three polynomials built independently from their e-values."""
    if n < 1:
        raise ValueError("n must be >= 1")
    qm = elem_periodic(n - 1).poly()
    qn = elem_periodic(n).poly()
    qp = elem_periodic(n + 1).poly()
    one = Fraction(1)
    wp1 = Poly([one, one])
    w3m1 = Poly([-one, 0, 0, one])
    ww1 = Poly([one, -one, one])
    lhs = wp1 * wp1 * qp.scale(3 * n + 2)
    rhs = w3m1 * qn.scale(3 * (2 * n + 1)) - ww1 * ww1 * qm.scale(3 * n + 1)
    return lhs == rhs


def q_at_qinv(n: int) -> Cyclo:
    """q^{2n} Q_n(1/q) for the periodic Q, evaluated exactly in Q(q)."""
    qp = elem_periodic(n)
    return Cyclo(0, 1) ** (2 * n) * qp.poly()(QINV)


def qinv_product_value(n: int) -> Fraction:
    """The simple product 2^n prod (2j-1)/(3j-1) that q^{2n} Q_n(1/q) equals."""
    out = Fraction(2) ** n
    for j in range(1, n + 1):
        out *= Fraction(2 * j - 1, 3 * j - 1)
    return out


def check_special_values(n: int) -> bool:
    """Q_n(0) = (-1)^n, the q^{2n} Q_n(1/q) product formula, and the
    corollary prod (1 + z_j + z_j^2) = (3/4)^n prod ((3j-1)/(2j-1))^2.

    The corollary follows because 1 + z + z^2 = -3 q w / (q w - 1)^2 under
    the variable change, so the product over the roots collapses to
    3^n / (q^{2n} Q_n(1/q))^2 using e_n = 1.
    """
    qp = elem_periodic(n)
    if qp.poly()(Fraction(0)) != (-1) ** n:
        return False
    s = q_at_qinv(n)
    if not s.is_rational or s.rational() != qinv_product_value(n):
        return False
    lhs = Fraction(3) ** n / s.rational() ** 2
    rhs = Fraction(3, 4) ** n
    for j in range(1, n + 1):
        rhs *= Fraction(3 * j - 1, 2 * j - 1) ** 2
    return lhs == rhs


def _hyp_binom(convention: str):
    if convention == "generalized":
        return falling_binom
    if convention == "truncating":
        return gen_binom
    raise ValueError(f"unknown convention {convention!r}")


def verify_hyp_identity(
    which: int,
    n: int,
    s: int,
    *,
    convention: str = "generalized",
    variant: str = "corrected",
) -> bool:
    """Exact check of the two binomial summation identities that collapse
    the infinite tails in the Q-coefficient derivations.

    Identity 1:
      sum_p binom(3p-n+s, 2n)   binom(n-1/3, p)     binom(n+1/3, n-p)
    = sum_p binom(3p-n+s-1, 2n) binom(n-1/3, n-p)   binom(n+1/3, p)

    Identity 2 (variant="corrected", lower index 2n-1):
      sum_p binom(3p-n+s, 2n-1)   binom(n-1/3, p)     binom(n-2/3, n-p)
    = sum_p binom(3p-n+s+2, 2n-1) binom(n-1/3, n-p-1) binom(n-2/3, p)

    variant="printed" uses lower index 2n in identity 2 instead; that
    reading fails for every s (already at n = 0) and is kept only so the
    failure can be reported.  convention selects how integer-top binomials
    treat negative tops: "generalized" (falling factorial, the convention
    under which identity 1 holds for all 0 <= s <= 3n) or "truncating"
    (the module-wide gen_binom rule, under which identity 1 fails for
    s <= n).
    """
    if which not in (1, 2):
        raise ValueError("which must be 1 or 2")
    B = _hyp_binom(convention)
    third = Fraction(1, 3)
    two_thirds = Fraction(2, 3)
    if which == 1:
        lhs = sum(
            B(3 * p - n + s, 2 * n) * B(n - third, p) * B(n + third, n - p)
            for p in range(n + 1)
        )
        rhs = sum(
            B(3 * p - n + s - 1, 2 * n) * B(n - third, n - p) * B(n + third, p)
            for p in range(n + 1)
        )
        return lhs == rhs
    if variant == "corrected":
        bot = 2 * n - 1
    elif variant == "printed":
        bot = 2 * n
    else:
        raise ValueError(f"unknown variant {variant!r}")
    lhs = sum(
        B(3 * p - n + s, bot) * B(n - third, p) * B(n - two_thirds, n - p)
        for p in range(n + 1)
    )
    rhs = sum(
        B(3 * p - n + s + 2, bot) * B(n - third, n - p - 1) * B(n - two_thirds, p)
        for p in range(n + 1)
    )
    return lhs == rhs


def hyp_failures(
    which: int,
    max_n: int,
    *,
    convention: str = "generalized",
    variant: str = "corrected",
):
    """All (n, s) pairs with 0 <= s <= 3n, n <= max_n where the identity
    fails under the given convention and variant."""
    return [
        (n, s)
        for n in range(max_n + 1)
        for s in range(3 * n + 1)
        if not verify_hyp_identity(which, n, s, convention=convention, variant=variant)
    ]


def chebyshev_expand(n: int) -> Poly:
    """Polynomial in wt with sum_p (-1)^p binom(n-p, p) wt^{n-2p}; at
    wt = w + 1/w it equals (w^{n+1} - w^{-n-1}) / (w - 1/w)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    coeffs = [Fraction(0)] * (n + 1)
    for p in range(n // 2 + 1):
        coeffs[n - 2 * p] = (-1) ** p * gen_binom(n - p, p)
    return Poly(coeffs)
