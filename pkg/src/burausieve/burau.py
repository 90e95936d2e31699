"""Braid words and their reduced Burau matrices.

Words live in the central product of the three-strand braid group with the
scalar matrices <t*id>; the alphabet is {s1, s2, s1^-1, s2^-1, T, T^-1}
with T the scalar generator.  Words are never normalized: equality of
group elements is decided on Burau images, which is faithful for braids.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactalg import FieldElem, IntPoly

# letter codes: +-1 = s1, +-2 = s2, +-3 = T
_LETTER_NAMES = {1: "s1", -1: "s1^-1", 2: "s2", -2: "s2^-1", 3: "T", -3: "T^-1"}
_NAME_LETTERS = {v: k for k, v in _LETTER_NAMES.items()}
_BASE_NAMES = {"s1": 1, "s2": 2, "T": 3}


@dataclass(frozen=True)
class BraidWord:
    """A word over {s1, s2, T} and inverses; bdeg is its degree image."""

    letters: tuple = ()

    @staticmethod
    def identity():
        return BraidWord(())

    @staticmethod
    def parse(text):
        """Parse 's1 s2^-1 T' style text; exponents expand, e.g. 's1^3'."""
        letters = []
        for tok in text.split():
            if tok in ("e", "id"):
                continue
            base, _, exp_s = tok.partition("^")
            if base not in _BASE_NAMES:
                raise ValueError(f"unknown braid letter {tok!r}")
            exp = int(exp_s) if exp_s else 1
            code = _BASE_NAMES[base]
            letters.extend([code if exp > 0 else -code] * abs(exp))
        return BraidWord(tuple(letters))

    def __str__(self):
        if not self.letters:
            return "e"
        return " ".join(_LETTER_NAMES[c] for c in self.letters)

    def __mul__(self, other):
        return BraidWord(self.letters + other.letters)

    def inverse(self):
        return BraidWord(tuple(-c for c in reversed(self.letters)))

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return BraidWord(self.letters * n)

    def bdeg(self):
        """Degree homomorphism: s1, s2 count 1, the scalar T counts 2."""
        return sum((2 if abs(c) == 3 else 1) * (1 if c > 0 else -1)
                   for c in self.letters)


def bdeg(word):
    return word.bdeg()


@dataclass(frozen=True)
class BurauMatrix:
    """A 2x2 matrix of integer Laurent polynomials, row-major."""

    a: IntPoly
    b: IntPoly
    c: IntPoly
    d: IntPoly

    @staticmethod
    def identity():
        one, zero = IntPoly.one(), IntPoly.zero()
        return BurauMatrix(one, zero, zero, one)

    @staticmethod
    def scalar(shift):
        """The scalar matrix t^shift * id."""
        s, zero = IntPoly.t(shift), IntPoly.zero()
        return BurauMatrix(s, zero, zero, s)

    def __mul__(self, other):
        return BurauMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def det(self):
        return self.a * self.d - self.b * self.c

    def apply(self, vec):
        """Multiply a column vector (pair of IntPoly) on the left."""
        x, y = vec
        return (self.a * x + self.b * y, self.c * x + self.d * y)


_GEN_MATRICES = {
    1: BurauMatrix(IntPoly((-1,), 1), IntPoly.one(), IntPoly.zero(), IntPoly.one()),
    -1: BurauMatrix(IntPoly((-1,), -1), IntPoly((1,), -1), IntPoly.zero(), IntPoly.one()),
    2: BurauMatrix(IntPoly.one(), IntPoly.zero(), IntPoly.t(), IntPoly((-1,), 1)),
    -2: BurauMatrix(IntPoly.one(), IntPoly.zero(), IntPoly.one(), IntPoly((-1,), -1)),
    3: BurauMatrix.scalar(1),
    -3: BurauMatrix.scalar(-1),
}


def to_burau(word):
    """Product of the generator matrices of the word, over Z[t, t^-1]."""
    m = BurauMatrix.identity()
    for c in word.letters:
        m = m * _GEN_MATRICES[c]
    return m


def sigma1_power(l):
    """sigma1^l for l >= 0: [(-t)^l, ((-t)^l - 1)/(-t - 1); 0, 1]."""
    if l < 0:
        raise ValueError("negative power not needed here")
    # sum_{m<l} (-t)^m
    coeffs = [(-1) ** m for m in range(l)]
    return BurauMatrix(
        IntPoly(((-1) ** l,), l), IntPoly(coeffs),
        IntPoly.zero(), IntPoly.one(),
    )


# modular projections: Burau at t = -1, modulo +-id

_MOD_GENS = {
    1: (1, 1, 0, 1),
    -1: (1, -1, 0, 1),
    2: (1, 0, -1, 1),
    -2: (1, 0, 1, 1),
    3: (-1, 0, 0, -1),
    -3: (-1, 0, 0, -1),
}


def modular_projection(word):
    """Image in PSL(2, Z): integer matrix at t = -1, sign-normalized."""
    a, b, c, d = 1, 0, 0, 1
    for g in word.letters:
        e, f, g2, h = _MOD_GENS[g]
        a, b, c, d = a * e + b * g2, a * f + b * h, c * e + d * g2, c * f + d * h
    for x in (a, b, c, d):
        if x:
            if x < 0:
                a, b, c, d = -a, -b, -c, -d
            break
    return (a, b, c, d)


@dataclass(frozen=True)
class SpecMatrix:
    """A 2x2 matrix over a finite field (a specialized Burau image)."""

    a: FieldElem
    b: FieldElem
    c: FieldElem
    d: FieldElem

    @staticmethod
    def identity(spec):
        one, zero = spec.one(), spec.zero()
        return SpecMatrix(one, zero, zero, one)

    def __mul__(self, other):
        return SpecMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def det(self):
        return self.a * self.d - self.b * self.c

    def inverse(self):
        det = self.det()
        if det.is_zero:
            raise ZeroDivisionError("singular matrix")
        inv = det.inverse()
        return SpecMatrix(self.d * inv, -self.b * inv, -self.c * inv, self.a * inv)

    def is_identity(self):
        spec = self.a.spec
        return (self.a == spec.one() and self.d == spec.one()
                and self.b.is_zero and self.c.is_zero)


def specialize(m, spec):
    """Evaluate a BurauMatrix entrywise at xi = class of t."""
    xi = spec.gen()
    return SpecMatrix(m.a.evaluate(xi), m.b.evaluate(xi),
                      m.c.evaluate(xi), m.d.evaluate(xi))


def specialize_word(word, spec):
    return specialize(to_burau(word), spec)


def power(m, n):
    """Fast exponentiation of a SpecMatrix; negative n inverts first."""
    if n < 0:
        return power(m.inverse(), -n)
    result = SpecMatrix.identity(m.a.spec)
    base = m
    while n:
        if n & 1:
            result = result * base
        base = base * base
        n >>= 1
    return result
