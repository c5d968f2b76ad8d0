"""Dense univariate polynomials with arbitrary-precision integer coefficients.

Coefficients are stored in ascending order, ``coeffs[k]`` multiplying ``x**k``.
Products use schoolbook multiplication for small operands and Karatsuba
splitting above :data:`KARATSUBA_CUTOFF` terms.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

KARATSUBA_CUTOFF = 512


def _trim(coeffs: list) -> list:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _add(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return out


def _sub(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return out


def _schoolbook(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _karatsuba(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if min(len(a), len(b)) <= KARATSUBA_CUTOFF:
        return _schoolbook(a, b)
    half = max(len(a), len(b)) // 2
    a0, a1 = a[:half], a[half:]
    b0, b1 = b[:half], b[half:]
    if not a1 or not b1:
        # unbalanced: split only the longer operand
        if not a1:
            lo, hi = _karatsuba(a, b0), _karatsuba(a, b1)
        else:
            lo, hi = _karatsuba(a0, b), _karatsuba(a1, b)
        out = [0] * (len(a) + len(b) - 1)
        for i, c in enumerate(lo):
            out[i] += c
        for i, c in enumerate(hi):
            out[i + half] += c
        return out
    z0 = _karatsuba(a0, b0)
    z2 = _karatsuba(a1, b1)
    z1 = _sub(_sub(_karatsuba(_add(a0, a1), _add(b0, b1)), z0), z2)
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(z0):
        out[i] += c
    for i, c in enumerate(z1):
        out[i + half] += c
    for i, c in enumerate(z2):
        out[i + 2 * half] += c
    return out


class IntPolynomial:
    """Immutable polynomial over the integers."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        self.coeffs: tuple[int, ...] = tuple(_trim(cs))

    @classmethod
    def x(cls) -> "IntPolynomial":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPolynomial.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if self.degree > 8:
            return f"IntPolynomial(<degree {self.degree}>)"
        return f"IntPolynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' if mono else ''}{mono}"
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    @staticmethod
    def _coerce(other) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial.constant(other)
        raise TypeError(f"cannot combine IntPolynomial with {type(other).__name__}")

    def __add__(self, other) -> "IntPolynomial":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return IntPolynomial(_add(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "IntPolynomial":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return IntPolynomial(_sub(self.coeffs, other.coeffs))

    def __rsub__(self, other) -> "IntPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return IntPolynomial(_karatsuba(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        if k < 0:
            raise ValueError("negative exponent")
        result, base = IntPolynomial.constant(1), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def reflect(self) -> "IntPolynomial":
        """Return ``p(-x)``."""
        return IntPolynomial(-c if k % 2 else c for k, c in enumerate(self.coeffs))

    def even_part(self) -> "IntPolynomial":
        return IntPolynomial(c if k % 2 == 0 else 0 for k, c in enumerate(self.coeffs))

    def odd_part(self) -> "IntPolynomial":
        return IntPolynomial(c if k % 2 else 0 for k, c in enumerate(self.coeffs))

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def __call__(self, x):
        """Horner evaluation; exact for ``int`` and ``Fraction`` arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Fraction) -> int:
        v = self(x)
        return (v > 0) - (v < 0)


# -- Sturm sequences (used for exact real-root isolation of small polynomials) --


def _poly_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    while len(a) >= len(b) and a:
        factor = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[i + shift] -= factor * c
        a.pop()
        _trim(a)
    return a


def sturm_chain(p: IntPolynomial) -> list[list[Fraction]]:
    """Sturm sequence of ``p`` with exact rational coefficients."""
    if p.degree < 1:
        raise ValueError("Sturm chain needs a non-constant polynomial")
    chain = [[Fraction(c) for c in p.coeffs], [Fraction(c) for c in p.derivative().coeffs]]
    while True:
        r = _poly_rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return chain


def _sign_variations(chain: list[list[Fraction]], x: Fraction) -> int:
    signs = []
    for q in chain:
        acc = Fraction(0)
        for c in reversed(q):
            acc = acc * x + c
        if acc:
            signs.append(acc > 0)
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def count_real_roots(chain: list[list[Fraction]], a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots in the half-open interval ``(a, b]``."""
    return _sign_variations(chain, Fraction(a)) - _sign_variations(chain, Fraction(b))


def largest_real_root(
    p: IntPolynomial, rel_bits: int = 64
) -> tuple[Fraction, Fraction]:
    """Bracket ``(lo, hi]`` around the largest real root of ``p``.

    Bisection keeps exactly one root above ``lo`` (counted by the Sturm chain)
    until ``hi - lo <= |hi| * 2**-rel_bits``.
    """
    chain = sturm_chain(p)
    lead = abs(p.coeffs[-1])
    # Cauchy bound on the modulus of every root
    hi = Fraction(1) + Fraction(max(abs(c) for c in p.coeffs[:-1]), lead)
    lo = -hi
    if count_real_roots(chain, lo, hi) == 0:
        raise ValueError("polynomial has no real roots")
    scale = Fraction(1, 2**rel_bits)
    while hi - lo > abs(hi) * scale:
        if count_real_roots(chain, lo, hi) == 1 and p.sign_at(lo) * p.sign_at(hi) < 0:
            break
        mid = (lo + hi) / 2
        if count_real_roots(chain, mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
    # isolated simple root: plain sign bisection on p
    s_hi = p.sign_at(hi)
    while hi - lo > abs(hi) * scale:
        mid = (lo + hi) / 2
        s = p.sign_at(mid)
        if s == 0:
            return mid, mid
        if s == s_hi:
            hi = mid
        else:
            lo = mid
    return lo, hi
