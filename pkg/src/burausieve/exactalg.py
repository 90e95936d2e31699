"""Exact arithmetic foundation.

Integer Laurent polynomials, resultants, cyclotomic polynomials, prime
fields and their finite extensions presented as polynomial quotients,
and polynomial factorization over F_p.  Everything here is exact: integer
coefficients are arbitrary precision, and field elements are reduced
residues, so results can be compared bit for bit.
"""

from __future__ import annotations

import random
from functools import lru_cache

import sympy


# ---------------------------------------------------------------------------
# integer (Laurent) polynomials


class IntPoly:
    """A Laurent polynomial in Z[t, t^-1].

    Stored as a shift exponent plus a dense coefficient tuple (ascending
    powers), so the value is t**shift * sum(coeffs[i] * t**i).  Canonical
    form: the zero polynomial is (shift=0, coeffs=()); otherwise both the
    first and the last stored coefficient are nonzero.
    """

    __slots__ = ("coeffs", "shift")

    def __init__(self, coeffs=(), shift=0):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        lead_zeros = 0
        while lead_zeros < len(coeffs) and coeffs[lead_zeros] == 0:
            lead_zeros += 1
        if lead_zeros == len(coeffs):
            object.__setattr__(self, "coeffs", ())
            object.__setattr__(self, "shift", 0)
        else:
            object.__setattr__(self, "coeffs", tuple(coeffs[lead_zeros:]))
            object.__setattr__(self, "shift", shift + lead_zeros)

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    # -- constructors

    @staticmethod
    def zero():
        return IntPoly()

    @staticmethod
    def one():
        return IntPoly((1,))

    @staticmethod
    def t(exp=1):
        return IntPoly((1,), shift=exp)

    @staticmethod
    def const(c):
        return IntPoly((c,))

    @staticmethod
    def from_text(text):
        return parse_poly(text)

    # -- structure

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        """Largest exponent with nonzero coefficient; None for zero."""
        if not self.coeffs:
            return None
        return self.shift + len(self.coeffs) - 1

    @property
    def valuation(self):
        """Smallest exponent with nonzero coefficient; None for zero."""
        if not self.coeffs:
            return None
        return self.shift

    def coefficient(self, exp):
        i = exp - self.shift
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def poly_part(self):
        """Coefficients of the shift-cleared ordinary polynomial."""
        return self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    # -- arithmetic

    def __add__(self, other):
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        lo = min(self.shift, other.shift)
        hi = max(self.shift + len(self.coeffs), other.shift + len(other.coeffs))
        out = [0] * (hi - lo)
        for i, c in enumerate(self.coeffs):
            out[self.shift - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.shift - lo + i] += c
        return IntPoly(out, lo)

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs], self.shift)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = IntPoly.const(other)
        if self.is_zero or other.is_zero:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out, self.shift + other.shift)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of an IntPoly")
        result = IntPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shifted(self, k):
        return IntPoly(self.coeffs, self.shift + k)

    def evaluate(self, x):
        """Evaluate at a FieldElem (negative shifts use the inverse)."""
        acc = x.spec.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + x.spec.from_int(c)
        if self.shift:
            acc = acc * x ** self.shift
        return acc

    def reduce_mod(self, p):
        """Shift-cleared coefficients reduced into 0..p-1."""
        return _fp_trim(tuple(c % p for c in self.coeffs))

    # -- comparisons and text

    def __eq__(self, other):
        return (isinstance(other, IntPoly) and self.coeffs == other.coeffs
                and self.shift == other.shift)

    def __hash__(self):
        return hash((self.coeffs, self.shift))

    def __str__(self):
        return poly_text(self.coeffs, self.shift)

    def __repr__(self):
        return f"IntPoly({self})"


def poly_text(coeffs, shift=0):
    """Canonical text form: descending powers, '^' exponents, no '*'."""
    if not coeffs:
        return "0"
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        e = shift + i
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if e == 0:
            body = str(c)
        else:
            var = "t" if e == 1 else f"t^{e}"
            body = var if c == 1 else f"{c}{var}"
        terms.append((sign, body))
    first_sign, first_body = terms[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        text += sign + body
    return text


def parse_poly(text):
    """Parse the canonical text form back into an IntPoly (exact round trip)."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return IntPoly()
    # split into signed terms
    terms = []
    i = 0
    while i < len(s):
        sign = 1
        if s[i] == "+":
            i += 1
        elif s[i] == "-":
            sign = -1
            i += 1
        j = i
        while j < len(s) and s[j] not in "+-":
            # a '-' directly after '^' is part of a negative exponent
            if s[j] == "^" and j + 1 < len(s) and s[j + 1] == "-":
                j += 2
                continue
            j += 1
        term = s[i:j]
        if not term:
            raise ValueError(f"malformed polynomial text: {text!r}")
        terms.append((sign, term))
        i = j
    coeffs = {}
    for sign, term in terms:
        if "t" in term:
            coef_s, _, rest = term.partition("t")
            coef = int(coef_s) if coef_s else 1
            if rest.startswith("^"):
                exp = int(rest[1:])
            elif rest == "":
                exp = 1
            else:
                raise ValueError(f"malformed term {term!r} in {text!r}")
        else:
            coef = int(term)
            exp = 0
        coeffs[exp] = coeffs.get(exp, 0) + sign * coef
    if not coeffs:
        return IntPoly()
    lo = min(coeffs)
    hi = max(coeffs)
    dense = [coeffs.get(e, 0) for e in range(lo, hi + 1)]
    return IntPoly(dense, lo)


# ---------------------------------------------------------------------------
# cyclotomic polynomials and resultants


@lru_cache(maxsize=None)
def cyclotomic(N):
    """The N-th cyclotomic polynomial over Z (monic, degree phi(N))."""
    if N < 1:
        raise ValueError("cyclotomic order must be >= 1")
    if N == 1:
        return IntPoly((-1, 1))
    # divide t^N - 1 by the cyclotomics of all proper divisors
    num = IntPoly([-1] + [0] * (N - 1) + [1])
    for d in range(1, N):
        if N % d == 0:
            num = _exact_div(num, cyclotomic(d))
    return num


def _exact_div(f, g):
    """Exact division in Z[t] (raises if not exact)."""
    fc = list(f.poly_part())
    gc = list(g.poly_part())
    if not gc:
        raise ZeroDivisionError("division by zero polynomial")
    out = [0] * (len(fc) - len(gc) + 1)
    for i in range(len(out) - 1, -1, -1):
        q, r = divmod(fc[i + len(gc) - 1], gc[-1])
        if r:
            raise ValueError("division is not exact")
        out[i] = q
        for j, c in enumerate(gc):
            fc[i + j] -= q * c
    if any(fc):
        raise ValueError("division is not exact")
    return IntPoly(out, (f.shift - g.shift))


def substitute_neg(f):
    """f(-t), sign-normalized so the leading coefficient is positive."""
    coeffs = [c if (f.shift + i) % 2 == 0 else -c
              for i, c in enumerate(f.coeffs)]
    if coeffs and coeffs[-1] < 0:
        coeffs = [-c for c in coeffs]
    return IntPoly(coeffs, f.shift)


def resultant(f, g):
    """Resultant over Z of the shift-cleared parts of f and g.

    Computed by the subresultant PRS, so it is exact for arbitrary integer
    coefficients.  Zero iff the inputs share a nonconstant factor over Q.
    """
    if f.is_zero or g.is_zero:
        raise ValueError("resultant of a zero polynomial")
    return _resultant_z(f.poly_part(), g.poly_part())


def _deg(c):
    return len(c) - 1


def _content(c):
    g = 0
    for x in c:
        g = _gcd_int(g, x)
    return g if g else 1


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _prem(a, b):
    """Pseudo-remainder: lc(b)^(da-db+1) * a modulo b, in Z[t]."""
    a = list(a)
    da, db = _deg(a), _deg(b)
    lb = b[-1]
    for i in range(da - db, -1, -1):
        top = a[i + db]
        for j in range(len(a)):
            a[j] *= lb
        if top:
            for j in range(db + 1):
                a[i + j] -= top * b[j]
        a[i + db] = 0
    while a and a[-1] == 0:
        a.pop()
    return a


def _resultant_z(a, b):
    # subresultant PRS with content extraction
    a, b = list(a), list(b)
    s = 1
    if _deg(a) < _deg(b):
        if _deg(a) % 2 == 1 and _deg(b) % 2 == 1:
            s = -s
        a, b = b, a
    if _deg(b) < 0:
        raise ValueError("resultant of a zero polynomial")
    if _deg(a) == 0:
        return 1
    if _deg(b) == 0:
        return s * b[0] ** _deg(a)
    ca, cb = _content(a), _content(b)
    a = [x // ca for x in a]
    b = [x // cb for x in b]
    scale = ca ** _deg(b) * cb ** _deg(a)
    g = h = 1
    while True:
        da, db = _deg(a), _deg(b)
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            s = -s
        r = _prem(a, b)
        if not r:
            return 0
        a = b
        denom = g * h ** delta
        b = [x // denom for x in r]
        g = a[-1]
        h = _int_pow_div(g, delta, h)
        if _deg(b) == 0:
            break
    da = _deg(a)
    h = _int_pow_div(b[0], da, h)
    return s * scale * h


def _int_pow_div(g, delta, h):
    """h <- g^delta / h^(delta-1), exact by the subresultant theory."""
    if delta == 0:
        return h
    num = g ** delta
    den = h ** (delta - 1)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("subresultant invariant violated")
    return q


# ---------------------------------------------------------------------------
# dense polynomials over F_p (coefficient tuples, ascending powers)


def _fp_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _fp_add(a, b, p):
    n = max(len(a), len(b))
    return _fp_trim([( (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                     for i in range(n)])


def _fp_sub(a, b, p):
    n = max(len(a), len(b))
    return _fp_trim([( (a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                     for i in range(n)])


def _fp_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _fp_trim(out)


def _fp_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError
    a = list(a)
    inv = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    for i in range(len(q) - 1, -1, -1):
        c = (a[i + len(b) - 1] * inv) % p
        q[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] = (a[i + j] - c * y) % p
    return _fp_trim(q), _fp_trim(a[:len(b) - 1])


def _fp_mod(a, b, p):
    return _fp_divmod(a, b, p)[1]


def _fp_gcd(a, b, p):
    while b:
        a, b = b, _fp_mod(a, b, p)
    return _fp_monic(a, p)


def _fp_monic(a, p):
    if not a or a[-1] == 1:
        return _fp_trim(a)
    inv = pow(a[-1], p - 2, p)
    return _fp_trim([(c * inv) % p for c in a])


def _fp_pow_mod(a, n, mod, p):
    r = (1,)
    a = _fp_mod(a, mod, p)
    while n:
        if n & 1:
            r = _fp_mod(_fp_mul(r, a, p), mod, p)
        a = _fp_mod(_fp_mul(a, a, p), mod, p)
        n >>= 1
    return r


def _fp_deriv(a, p):
    return _fp_trim([(i * a[i]) % p for i in range(1, len(a))])


def fp_is_irreducible(coeffs, p):
    """Rabin irreducibility test for a polynomial over F_p."""
    f = _fp_monic(tuple(c % p for c in coeffs), p)
    d = _deg(f)
    if d < 1:
        return False
    if d == 1:
        return True
    t = (0, 1)
    # t^(p^d) == t mod f
    x = t
    for _ in range(d):
        x = _fp_pow_mod(x, p, f, p)
    if _fp_sub(x, t, p):
        return False
    for r in sorted({q for q, _ in sympy.factorint(d).items()}):
        x = t
        for _ in range(d // r):
            x = _fp_pow_mod(x, p, f, p)
        if _deg(_fp_gcd(_fp_sub(x, t, p), f, p)) != 0:
            return False
    return True


def _fp_pth_root(f, p):
    # over F_p the p-th power map fixes coefficients, so f(t)=g(t^p) -> g
    return _fp_trim(tuple(f[i] for i in range(0, len(f), p)))


def _fp_squarefree_parts(f, p):
    """Yield (monic squarefree factor, multiplicity) pairs."""
    f = _fp_monic(f, p)
    if _deg(f) == 0:
        return
    df = _fp_deriv(f, p)
    if not df:
        for g, m in _fp_squarefree_parts(_fp_pth_root(f, p), p):
            yield g, m * p
        return
    c = _fp_gcd(f, df, p)
    w = _fp_divmod(f, c, p)[0]
    i = 1
    while _deg(w) > 0:
        y = _fp_gcd(w, c, p)
        z = _fp_divmod(w, y, p)[0]
        if _deg(z) > 0:
            yield _fp_monic(z, p), i
        w = y
        c = _fp_divmod(c, y, p)[0]
        i += 1
    if _deg(c) > 0:
        for g, m in _fp_squarefree_parts(_fp_pth_root(c, p), p):
            yield g, m * p


def _fp_distinct_degree(f, p):
    """Split a squarefree monic f into (product, factor degree) pieces."""
    out = []
    rest = f
    h = (0, 1)
    d = 0
    while _deg(rest) > 0 and _deg(rest) >= 2 * (d + 1):
        d += 1
        h = _fp_pow_mod(h, p, rest, p)
        g = _fp_gcd(_fp_sub(h, (0, 1), p), rest, p)
        if _deg(g) > 0:
            out.append((g, d))
            rest = _fp_divmod(rest, g, p)[0]
            h = _fp_mod(h, rest, p)
    if _deg(rest) > 0:
        out.append((rest, _deg(rest)))
    return out


def _fp_equal_degree(f, d, p, rng):
    """Cantor-Zassenhaus split of a product of irreducibles of degree d."""
    n = _deg(f)
    if n == d:
        return [f]
    while True:
        u = _fp_trim([rng.randrange(p) for _ in range(n)])
        if _deg(u) < 1:
            continue
        g = _fp_gcd(u, f, p)
        if 0 < _deg(g) < n:
            pass
        elif p == 2:
            # trace map over F_{2^d}
            v = u
            tr = u
            for _ in range(d - 1):
                v = _fp_mod(_fp_mul(v, v, p), f, p)
                tr = _fp_add(tr, v, p)
            g = _fp_gcd(tr, f, p)
        else:
            e = (p ** d - 1) // 2
            v = _fp_pow_mod(u, e, f, p)
            g = _fp_gcd(_fp_sub(v, (1,), p), f, p)
        if 0 < _deg(g) < n:
            left = _fp_equal_degree(g, d, p, rng)
            right = _fp_equal_degree(_fp_divmod(f, g, p)[0], d, p, rng)
            return left + right


def fp_factor(coeffs, p):
    """Complete monic irreducible factorization over F_p.

    Returns a sorted list of (coefficient tuple, multiplicity) pairs; the
    input equals its leading coefficient times the product of the factors.
    """
    f = _fp_trim(tuple(c % p for c in coeffs))
    if not f:
        raise ValueError("factoring the zero polynomial")
    f = _fp_monic(f, p)
    rng = random.Random(0x5EED)
    found = {}
    for sq, mult in _fp_squarefree_parts(f, p):
        for prod, d in _fp_distinct_degree(sq, p):
            for irr in _fp_equal_degree(prod, d, p, rng):
                found[irr] = found.get(irr, 0) + mult
    return sorted(found.items(),
                  key=lambda kv: (len(kv[0]), tuple(reversed(kv[0]))))


def factor_over_prime(f, p):
    """Irreducible factors of f mod p, as a sorted multiset of IntPoly.

    The product of the returned monic polynomials times the leading unit of
    f mod p reproduces f mod p (Laurent shifts are units and are dropped).
    """
    if not sympy.isprime(p):
        raise ValueError(f"{p} is not prime")
    coeffs = f.reduce_mod(p)
    if not coeffs:
        raise ValueError("polynomial vanishes mod p")
    out = []
    for fac, mult in fp_factor(coeffs, p):
        out.extend([IntPoly(fac)] * mult)
    return out


# ---------------------------------------------------------------------------
# finite fields


class FieldSpec:
    """The field F_p[t]/(modulus) with its verified presentation.

    The modulus must be monic irreducible over F_p and distinct from t, so
    the class of t is an invertible generator of the presentation.
    """

    def __init__(self, p, modulus):
        if not sympy.isprime(p):
            raise ValueError(f"{p} is not prime")
        if isinstance(modulus, str):
            modulus = parse_poly(modulus)
        if isinstance(modulus, IntPoly):
            if modulus.is_zero or modulus.valuation < 0:
                raise ValueError("modulus must be an ordinary polynomial")
            coeffs = tuple(modulus.coefficient(e) % p
                           for e in range(modulus.degree + 1))
        else:
            coeffs = tuple(c % p for c in modulus)
        coeffs = _fp_trim(coeffs)
        if _deg(coeffs) < 1:
            raise ValueError("modulus must have degree >= 1")
        if coeffs[-1] != 1:
            raise ValueError("modulus must be monic")
        if coeffs[0] == 0:
            raise ValueError("modulus t is rejected: the root must be invertible")
        if not fp_is_irreducible(coeffs, p):
            raise ValueError(f"modulus {poly_text(coeffs)} is reducible over F_{p}")
        self.p = p
        self.modulus = coeffs
        self.degree = _deg(coeffs)
        self.order = p ** self.degree
        self._ops = None

    def __eq__(self, other):
        return (isinstance(other, FieldSpec) and self.p == other.p
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        return f"FieldSpec(p={self.p}, modulus={poly_text(self.modulus)})"

    @property
    def min_poly(self):
        return IntPoly(self.modulus)

    def element(self, coeffs):
        return FieldElem(self, coeffs)

    def from_int(self, n):
        return FieldElem(self, (n % self.p,))

    def zero(self):
        return FieldElem(self, ())

    def one(self):
        return FieldElem(self, (1,))

    def gen(self):
        """The class of t (the root xi of the modulus)."""
        return FieldElem(self, (0, 1))

    def elements(self):
        """All field elements, in lexicographic coefficient order."""
        from itertools import product
        for coeffs in product(range(self.p), repeat=self.degree):
            yield FieldElem(self, coeffs)

    def ops(self):
        if self._ops is None:
            self._ops = _FieldOps(self)
        return self._ops


class FieldElem:
    """An element of a FieldSpec, always reduced modulo the modulus."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec, coeffs):
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        c = tuple(x % spec.p for x in coeffs)
        if _deg(c) >= spec.degree:
            c = _fp_mod(c, spec.modulus, spec.p)
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "coeffs", _fp_trim(c))

    def __setattr__(self, name, value):
        raise AttributeError("FieldElem is immutable")

    @property
    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        other = self._coerce(other)
        return FieldElem(self.spec, _fp_add(self.coeffs, other.coeffs, self.spec.p))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return FieldElem(self.spec, _fp_sub(self.coeffs, other.coeffs, self.spec.p))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return FieldElem(self.spec, _fp_mul(self.coeffs, other.coeffs, self.spec.p))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElem(self.spec, tuple(-c for c in self.coeffs))

    def inverse(self):
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero")
        # extended Euclid in F_p[t]
        p = self.spec.p
        r0, r1 = self.spec.modulus, self.coeffs
        s0, s1 = (), (1,)
        while r1:
            q, r = _fp_divmod(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, _fp_sub(s0, _fp_mul(q, s1, p), p)
        inv_lead = pow(r0[0], p - 2, p)
        return FieldElem(self.spec, tuple((c * inv_lead) % p for c in s0))

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.spec.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.spec != self.spec:
                raise ValueError("field mismatch")
            return other
        if isinstance(other, int):
            return self.spec.from_int(other)
        raise TypeError(f"cannot combine FieldElem with {type(other).__name__}")

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.spec.from_int(other)
        return (isinstance(other, FieldElem) and self.spec == other.spec
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.spec.p, self.spec.modulus, self.coeffs))

    def __str__(self):
        return poly_text(self.coeffs) if self.coeffs else "0"

    def __repr__(self):
        return f"FieldElem({self}, {self.spec!r})"


def element_order(x):
    """Least n >= 1 with x^n = 1, by descending through the group order."""
    if x.is_zero:
        raise ValueError("order of zero")
    n = x.spec.order - 1
    for q in sympy.factorint(n):
        while n % q == 0 and x ** (n // q) == x.spec.one():
            n //= q
    return n


# ---------------------------------------------------------------------------
# integer-coded field operations for tight enumeration loops


class _FieldOps:
    """Field arithmetic on integer codes (base-p packed coefficients).

    Used by the coset enumeration, where elements are dictionary keys and
    FieldElem objects would dominate the runtime.
    """

    def __init__(self, spec):
        self.spec = spec
        p, d = spec.p, spec.degree
        self.q = spec.order
        self.zero = 0
        self.one = 1
        self.xi = self.encode(spec.gen())
        if d == 1:
            self.add = lambda a, b: (a + b) % p
            self.neg = lambda a: (-a) % p
            self.mul = lambda a, b: (a * b) % p
            self.inv = lambda a: pow(a, p - 2, p)
        else:
            self._build_tables()

    def encode(self, elem):
        v = 0
        coeffs = elem.coeffs
        for i in range(self.spec.degree - 1, -1, -1):
            v = v * self.spec.p + (coeffs[i] if i < len(coeffs) else 0)
        return v

    def decode(self, code):
        p = self.spec.p
        out = []
        for _ in range(self.spec.degree):
            code, r = divmod(code, p)
            out.append(r)
        return FieldElem(self.spec, out)

    def _build_tables(self):
        p, d, q = self.spec.p, self.spec.degree, self.q
        # discrete exp/log tables over a multiplicative generator
        gen_code = None
        for cand in range(2, q):
            elem = self.decode(cand)
            if element_order(elem) == q - 1:
                gen_code = cand
                break
        exp_t = [0] * (q - 1)
        log_t = [0] * q
        cur = self.decode(gen_code)
        acc = self.spec.one()
        for i in range(q - 1):
            code = self.encode(acc)
            exp_t[i] = code
            log_t[code] = i
            acc = acc * cur
        digits = []
        for code in range(q):
            ds = []
            c = code
            for _ in range(d):
                c, r = divmod(c, p)
                ds.append(r)
            digits.append(tuple(ds))

        def add(a, b):
            da, db = digits[a], digits[b]
            v = 0
            for i in range(d - 1, -1, -1):
                v = v * p + (da[i] + db[i]) % p
            return v

        def neg(a):
            da = digits[a]
            v = 0
            for i in range(d - 1, -1, -1):
                v = v * p + (-da[i]) % p
            return v

        def mul(a, b):
            if a == 0 or b == 0:
                return 0
            return exp_t[(log_t[a] + log_t[b]) % (q - 1)]

        def inv(a):
            if a == 0:
                raise ZeroDivisionError
            return exp_t[(-log_t[a]) % (q - 1)]

        self.add, self.neg, self.mul, self.inv = add, neg, mul, inv

    def pow(self, a, n):
        if n < 0:
            return self.pow(self.inv(a), -n)
        r = 1
        while n:
            if n & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            n >>= 1
        return r
