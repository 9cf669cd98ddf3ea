"""Exact scalar arithmetic in cyclotomic fields Q(zeta_N).

Values are represented on the power basis 1, zeta, ..., zeta^(d-1) where
d = deg Phi_N (Euler phi of N), with integer coordinates over a common
positive denominator, always fully reduced.  Canonical form means equality
of values is equality of coefficient vectors; hash agrees with Fraction for
rational-valued elements so mixed dict keys behave.

Rationals embed into any Q(zeta_N); two elements of *different* cyclotomic
orders can only meet if one of them is rational-valued (then it is promoted).
Anything else raises OrderMismatchError — no silent compositum.

Also provides the q-combinatorics used throughout: q-integers (n)_xi,
q-factorials, Gaussian binomials, the balanced quantum integers [n]_q, and
quadratic Gauss sums.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import reduce

Rational = Fraction  # the exact rational scalar type


class OrderMismatchError(ValueError):
    """Two irrational cyclotomics of different orders met in one operation."""


# ---------------------------------------------------------------------------
# cyclotomic polynomials
# ---------------------------------------------------------------------------

_PHI_CACHE: dict[int, tuple[int, ...]] = {}


def _poly_divexact(num, den):
    # exact division of integer polynomials, low-to-high coefficients
    num = list(num)
    dn = len(den) - 1
    while den[dn] == 0:
        dn -= 1
    out = [0] * (len(num) - dn)
    for k in range(len(num) - dn - 1, -1, -1):
        c = num[k + dn]
        if c % den[dn]:
            raise ArithmeticError("non-exact polynomial division")
        c //= den[dn]
        out[k] = c
        if c:
            for i in range(dn + 1):
                num[k + i] -= c * den[i]
    if any(num[: dn]):
        raise ArithmeticError("non-exact polynomial division")
    return out


def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, low to high, monic."""
    if n < 1:
        raise ValueError("order must be >= 1")
    if n in _PHI_CACHE:
        return _PHI_CACHE[n]
    if n == 1:
        poly = (-1, 1)
    else:
        num = [0] * (n + 1)
        num[0], num[n] = -1, 1  # x^n - 1
        for d in range(1, n):
            if n % d == 0:
                num = _poly_divexact(num, cyclotomic_polynomial(d))
        poly = tuple(num)
    _PHI_CACHE[n] = poly
    return poly


_POWTAB_CACHE: dict[int, list[tuple[int, ...]]] = {}


def _powtab(order):
    """Coordinate rows of zeta^k on the power basis, k = 0 .. 2d-2."""
    if order in _POWTAB_CACHE:
        return _POWTAB_CACHE[order]
    phi = cyclotomic_polynomial(order)
    d = len(phi) - 1
    rows = []
    cur = [0] * d
    cur[0] = 1
    rows.append(tuple(cur))
    for _ in range(2 * d - 2):
        nxt = [0] * d
        top = cur[d - 1]
        for i in range(d - 1):
            nxt[i + 1] = cur[i]
        if top:
            for i in range(d):
                nxt[i] -= top * phi[i]  # zeta^d = -(phi_0 + ... + phi_{d-1} z^{d-1})
        rows.append(tuple(nxt))
        cur = nxt
    _POWTAB_CACHE[order] = rows
    return rows


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


# ---------------------------------------------------------------------------
# field elements
# ---------------------------------------------------------------------------


class Cyclotomic:
    """An element of Q(zeta_order) in canonical form."""

    __slots__ = ("order", "num", "den")

    def __init__(self, order, num, den=1, _normalized=False):
        if _normalized:
            self.order = order
            self.num = num
            self.den = den
            return
        d = euler_phi(order)
        vec = list(num) + [0] * (d - len(num))
        if len(vec) != d:
            raise ValueError("coefficient vector longer than the basis")
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            den = -den
            vec = [-v for v in vec]
        g = reduce(math.gcd, vec, den)
        if g > 1:
            den //= g
            vec = [v // g for v in vec]
        if not any(vec):
            den = 1
        self.order = order
        self.num = tuple(vec)
        self.den = den

    # -- constructors -------------------------------------------------------

    @staticmethod
    def from_rational(value, order=1):
        f = Fraction(value)
        d = euler_phi(order)
        num = [0] * d
        num[0] = f.numerator
        return Cyclotomic(order, num, f.denominator)

    @staticmethod
    def zero(order=1):
        return Cyclotomic.from_rational(0, order)

    @staticmethod
    def one(order=1):
        return Cyclotomic.from_rational(1, order)

    # -- structure ----------------------------------------------------------

    def is_rational(self):
        return not any(self.num[1:])

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError("not a rational value: %s" % self)
        return Fraction(self.num[0], self.den)

    def is_zero(self):
        return not any(self.num)

    def __bool__(self):
        return any(self.num)

    # -- coercion -----------------------------------------------------------

    def _pair(self, other):
        if isinstance(other, Cyclotomic):
            if other.order == self.order:
                return self, other
            if other.is_rational():
                return self, Cyclotomic.from_rational(other.as_fraction(), self.order)
            if self.is_rational():
                return Cyclotomic.from_rational(self.as_fraction(), other.order), other
            raise OrderMismatchError(
                "cannot mix Q(zeta_%d) with Q(zeta_%d)" % (self.order, other.order)
            )
        if isinstance(other, (int, Fraction)):
            return self, Cyclotomic.from_rational(other, self.order)
        return None

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        g = math.gcd(a.den, b.den)
        la, lb = b.den // g, a.den // g
        vec = [x * la + y * lb for x, y in zip(a.num, b.num)]
        return Cyclotomic(a.order, vec, a.den * la)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, tuple(-v for v in self.num), self.den, _normalized=True)

    def __sub__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        n = len(a.num)
        conv = [0] * (2 * n - 1)
        for i, ai in enumerate(a.num):
            if ai:
                for j, bj in enumerate(b.num):
                    if bj:
                        conv[i + j] += ai * bj
        vec = conv[:n]
        tab = None
        for k in range(n, 2 * n - 1):
            ck = conv[k]
            if ck:
                if tab is None:
                    tab = _powtab(a.order)
                row = tab[k]
                for i in range(n):
                    if row[i]:
                        vec[i] += ck * row[i]
        return Cyclotomic(a.order, vec, a.den * b.den)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse via extended Euclid mod Phi_order."""
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(zeta_%d)" % self.order)
        if self.is_rational():
            return Cyclotomic.from_rational(1 / self.as_fraction(), self.order)
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        a = [Fraction(v, self.den) for v in self.num]
        # invariants: r0 = s0*a mod phi, r1 = s1*a mod phi
        r0, r1 = phi, list(a)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            while r1 and not r1[-1]:
                r1.pop()
            if len(r1) == 1:
                inv = 1 / r1[0]
                coeffs = [c * inv for c in s1]
                den = reduce(math.lcm, (c.denominator for c in coeffs), 1)
                vec = [int(c * den) for c in coeffs]
                return Cyclotomic(self.order, vec, den)
            q, rem = _poly_divmod(r0, r1)
            snew = _poly_sub(s0, _poly_mul(q, s1))
            r0, r1 = r1, rem
            s0, s1 = s1, snew

    def __truediv__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = Cyclotomic.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.as_fraction() == other
        if isinstance(other, Cyclotomic):
            if other.order == self.order:
                return self.num == other.num and self.den == other.den
            if self.is_rational() and other.is_rational():
                return self.as_fraction() == other.as_fraction()
            if self.is_rational() != other.is_rational():
                return False
            raise OrderMismatchError(
                "cannot compare Q(zeta_%d) with Q(zeta_%d)" % (self.order, other.order)
            )
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self.num[0], self.den))
        return hash((self.order, self.num, self.den))

    def __repr__(self):
        return format_scalar(self)


def _poly_divmod(a, b):
    a = list(a)
    db = len(b) - 1
    while b[db] == 0:
        db -= 1
    q = [Fraction(0)] * max(len(a) - db, 1)
    for k in range(len(a) - db - 1, -1, -1):
        c = a[k + db] / b[db]
        q[k] = c
        if c:
            for i in range(db + 1):
                a[k + i] -= c * b[i]
    return q, a[:db]


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    for i, y in enumerate(b):
        a[i] -= y
    return a


def root_of_unity(order: int, k: int = 1) -> Cyclotomic:
    """zeta_order ** k as an exact element of Q(zeta_order)."""
    k %= order
    d = euler_phi(order)
    if k < d:
        vec = [0] * d
        vec[k] = 1
        return Cyclotomic(order, vec)
    if k <= 2 * d - 2:
        return Cyclotomic(order, list(_powtab(order)[k]))
    if d == 1:  # order 1 or 2
        return Cyclotomic(order, [1 if order == 1 else (-1) ** k])
    zeta = Cyclotomic(order, [0, 1] + [0] * (d - 2))
    return zeta ** k


def promote(value, order: int):
    """Embed an int/Fraction (or rational-valued Cyclotomic) into Q(zeta_order)."""
    if isinstance(value, Cyclotomic):
        if value.order == order:
            return value
        return Cyclotomic.from_rational(value.as_fraction(), order)
    return Cyclotomic.from_rational(value, order)


# ---------------------------------------------------------------------------
# q-combinatorics
# ---------------------------------------------------------------------------


def q_int(n: int, xi):
    """(n)_xi = 1 + xi + ... + xi^(n-1)."""
    if n < 0:
        raise ValueError("q_int needs n >= 0")
    total = xi ** 0 * 0
    for i in range(n):
        total = total + xi ** i
    return total


def q_factorial(n: int, xi):
    """(n)_xi! = (n)_xi (n-1)_xi ... (1)_xi, empty product for n = 0."""
    total = xi ** 0
    for i in range(1, n + 1):
        total = total * q_int(i, xi)
    return total


def q_binomial(n: int, k: int, xi):
    """Gaussian binomial (n choose k)_xi via factorials."""
    if not 0 <= k <= n:
        return xi ** 0 * 0
    return q_factorial(n, xi) / (q_factorial(k, xi) * q_factorial(n - k, xi))


def balanced_q_int(n: int, q):
    """[n]_q = (q^n - q^-n)/(q - q^-1); [0]_q = 0."""
    if n == 0:
        return q ** 0 * 0
    return (q ** n - q ** (-n)) / (q - q ** (-1))


def balanced_q_factorial(n: int, q):
    """[n]_q! = [n]_q [n-1]_q ... [1]_q, with [0]_q! = 1."""
    total = q ** 0
    for i in range(1, n + 1):
        total = total * balanced_q_int(i, q)
    return total


def gauss_sum(p: int, q, m: int):
    """sum_{i=0}^{p-1} q^(m i^2); guaranteed nonzero for the uses here."""
    total = q ** 0 * 0
    for i in range(p):
        total = total + q ** (m * i * i)
    if not total:
        raise ArithmeticError("vanishing Gauss sum: p=%d m=%d" % (p, m))
    return total


# ---------------------------------------------------------------------------
# textual scalar syntax
# ---------------------------------------------------------------------------
#
#   expr   := term (('+'|'-') term)*
#   term   := factor (('*'|'/') factor)*
#   factor := '-'* atom ('^' ('-'? INT))?
#   atom   := INT | 'q' '(' INT ',' INT ')' | '(' expr ')'
#
# q(N,k) denotes zeta_N^k.  This grammar is shared by the DSL matrix
# literals, module files and JSON report serialization.

_SCALAR_TOKEN = re.compile(r"\s*(\d+|[qQ]|\^|\(|\)|,|\*|/|\+|-)")


def _tokenize_scalar(text):
    pos, out = 0, []
    while pos < len(text):
        m = _SCALAR_TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ValueError("bad scalar syntax at %r" % text[pos:])
            break
        out.append(m.group(1))
        pos = m.end()
    return out


class _ScalarParser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ValueError("scalar syntax: expected %r, got %r" % (expected, tok))
        self.pos += 1
        return tok

    def expr(self):
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.factor()
            if op == "*":
                value = value * rhs
            else:
                value = Fraction(value) / rhs if isinstance(value, int) and isinstance(rhs, int) \
                    else value / rhs
        return value

    def factor(self):
        sign = 1
        while self.peek() == "-":
            self.take()
            sign = -sign
        value = self.atom()
        if self.peek() == "^":
            self.take()
            esign = 1
            if self.peek() == "-":
                self.take()
                esign = -1
            e = esign * int(self.take())
            if isinstance(value, int):
                value = Fraction(value)
            value = value ** e
        return sign * value

    def atom(self):
        tok = self.peek()
        if tok == "(":
            self.take()
            value = self.expr()
            self.take(")")
            return value
        if tok in ("q", "Q"):
            self.take()
            self.take("(")
            n = int(self.take())
            self.take(",")
            k = int(self.take())
            self.take(")")
            return root_of_unity(n, k)
        if tok is not None and tok.isdigit():
            return int(self.take())
        raise ValueError("scalar syntax: unexpected %r" % tok)


def parse_scalar(text: str):
    """Parse the textual scalar syntax; returns int, Fraction or Cyclotomic."""
    parser = _ScalarParser(_tokenize_scalar(text))
    value = parser.expr()
    if parser.peek() is not None:
        raise ValueError("trailing scalar input: %r" % parser.tokens[parser.pos:])
    return value


def _format_fraction(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    return "%d/%d" % (f.numerator, f.denominator)


def format_scalar(value) -> str:
    """Canonical text for a scalar; parse_scalar(format_scalar(v)) == v."""
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return _format_fraction(value)
    if not isinstance(value, Cyclotomic):
        raise TypeError("not a scalar: %r" % (value,))
    if value.is_rational():
        return _format_fraction(value.as_fraction())
    parts = []
    for k, coeff in enumerate(value.num):
        if not coeff:
            continue
        c = Fraction(coeff, value.den)
        if k == 0:
            body = _format_fraction(abs(c))
        else:
            mon = "q(%d,%d)" % (value.order, k)
            body = mon if abs(c) == 1 else "%s*%s" % (_format_fraction(abs(c)), mon)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)
