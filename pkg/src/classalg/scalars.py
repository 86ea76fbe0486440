"""Exact scalar arithmetic: rationals with a cyclotomic extension.

A scalar is an ``int``, a ``Fraction`` (the fast path used by all
combinatorial code), or a :class:`Cyc` living in the m-th cyclotomic
field.  Every ``Cyc`` is kept in a canonical reduced form: coefficients
of 1, z, ..., z^(phi(m)-1) modulo the m-th cyclotomic polynomial, with
the conductor m minimized.  Rational values are always unwrapped to
``Fraction``, so equality and hashing behave uniformly.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd


def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod(num, den):
    num = [Fraction(x) for x in num]
    q = [Fraction(0)] * max(0, len(num) - len(den) + 1)
    inv_lead = Fraction(1) / Fraction(den[-1])
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1] * inv_lead
        if c:
            q[i] = c
            for j, d in enumerate(den):
                num[i + j] -= c * d
    return q, _poly_trim(num)


@lru_cache(maxsize=None)
def cyclotomic_poly(m):
    """Coefficients (ascending) of the m-th cyclotomic polynomial."""
    if m == 1:
        return (-1, 1)
    num = [Fraction(-1)] + [Fraction(0)] * (m - 1) + [Fraction(1)]
    for d in range(1, m):
        if m % d == 0:
            num, r = _poly_divmod(num, [Fraction(c) for c in cyclotomic_poly(d)])
            assert not r
    return tuple(int(c) for c in num)


def _divisors(m):
    return sorted(d for d in range(1, m + 1) if m % d == 0)


@lru_cache(maxsize=None)
def _phi(m):
    return len(cyclotomic_poly(m)) - 1


@lru_cache(maxsize=None)
def _power_vec(m, k):
    """z_m^k reduced mod Phi_m, as a coefficient tuple of length phi(m)."""
    phi = _phi(m)
    p = [Fraction(0)] * (k % m) + [Fraction(1)]
    _, r = _poly_divmod(p, [Fraction(c) for c in cyclotomic_poly(m)])
    r = list(r) + [Fraction(0)] * (phi - len(r))
    return tuple(r[:phi])


def _solve_columns(cols, target):
    """Solve sum_j y_j * cols[j] = target exactly; None if inconsistent."""
    nrows = len(target)
    ncols = len(cols)
    aug = [[cols[j][i] for j in range(ncols)] + [target[i]] for i in range(nrows)]
    pivots = []
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, nrows) if aug[r][col]), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = Fraction(1) / aug[row][col]
        aug[row] = [v * inv for v in aug[row]]
        for r in range(nrows):
            if r != row and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
        if row == nrows:
            break
    for r in range(row, nrows):
        if aug[r][ncols]:
            return None
    y = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        y[col] = aug[r][ncols]
    return y


def _make(m, vec):
    """Canonicalize a coefficient vector in Q(zeta_m); unwrap rationals."""
    vec = tuple(Fraction(v) for v in vec)
    if m == 1:
        return vec[0] if vec else Fraction(0)
    if all(v == 0 for v in vec[1:]):
        return vec[0]
    for d in _divisors(m):
        if d == m or d == 1:
            continue
        cols = [_power_vec(m, (m // d) * j) for j in range(_phi(d))]
        y = _solve_columns(cols, vec)
        if y is not None:
            return Cyc(d, tuple(y))
    return Cyc(m, vec)


class Cyc:
    """An element of the m-th cyclotomic field in canonical form.

    Immutable; interoperates with ``int`` and ``Fraction`` in arithmetic.
    """

    __slots__ = ("m", "coeffs")

    def __init__(self, m, coeffs):
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in coeffs))

    def __setattr__(self, *a):
        raise AttributeError("Cyc is immutable")

    def _lift(self, m):
        """Coefficient vector of self in Q(zeta_m), self.m | m."""
        step = m // self.m
        out = [Fraction(0)] * _phi(m)
        for k, c in enumerate(self.coeffs):
            if c:
                for i, v in enumerate(_power_vec(m, step * k)):
                    out[i] += c * v
        return out

    def __add__(self, other):
        other = _as_cyc(other)
        if other is None:
            return NotImplemented
        m = self.m * other.m // gcd(self.m, other.m)
        a, b = self._lift(m), other._lift(m)
        return _make(m, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.m, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = _as_cyc(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _as_cyc(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        other = _as_cyc(other)
        if other is None:
            return NotImplemented
        m = self.m * other.m // gcd(self.m, other.m)
        a, b = self._lift(m), other._lift(m)
        prod = _poly_mul(list(a), list(b))
        _, r = _poly_divmod(prod, [Fraction(c) for c in cyclotomic_poly(m)])
        r = list(r) + [Fraction(0)] * (_phi(m) - len(r))
        return _make(m, r)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse via the extended Euclidean algorithm."""
        phi = [Fraction(c) for c in cyclotomic_poly(self.m)]
        a = list(self.coeffs)
        _poly_trim(a)
        if not a:
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        # extended gcd of a and Phi_m over Q[x]
        r0, r1 = phi, a
        s0, s1 = [Fraction(0)], [Fraction(1)]
        t0 = [Fraction(1)]
        del t0
        while r1:
            q, r = _poly_divmod(r0, r1)
            s = [Fraction(0)] * max(len(s0), len(_poly_mul(q, s1)) or 1)
            qs1 = _poly_mul(q, s1)
            s = [Fraction(0)] * max(len(s0), len(qs1))
            for i, v in enumerate(s0):
                s[i] += v
            for i, v in enumerate(qs1):
                s[i] -= v
            _poly_trim(s)
            r0, r1, s0, s1 = r1, r, s1, s
        # r0 = gcd (a nonzero constant since Phi_m is irreducible)
        if len(r0) != 1:
            raise ArithmeticError("cyclotomic gcd not constant")
        inv = [c / r0[0] for c in s0]
        _, rr = _poly_divmod(inv, phi)
        rr = list(rr) + [Fraction(0)] * (_phi(self.m) - len(rr))
        return _make(self.m, rr)

    def __truediv__(self, other):
        o = _as_cyc(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _as_cyc(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def conjugate(self):
        """Galois conjugate sending zeta to zeta^{-1}."""
        out = [Fraction(0)] * _phi(self.m)
        for k, c in enumerate(self.coeffs):
            if c:
                for i, v in enumerate(_power_vec(self.m, (-k) % self.m)):
                    out[i] += c * v
        return _make(self.m, out)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return False  # canonical Cyc is never rational
        if isinstance(other, Cyc):
            return self.m == other.m and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.m, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return scalar_to_string(self)


def _rational_cyc(x):
    return Cyc(1, (Fraction(x),))


def _as_cyc(x):
    if isinstance(x, Cyc):
        return x
    if isinstance(x, (int, Fraction)):
        return _rational_cyc(x)
    return None


def zeta(m, k=1):
    """The primitive m-th root of unity zeta_m^k, canonicalized."""
    return _make(m, _power_vec(m, k))


def conjugate(x):
    """zeta -> zeta^{-1} conjugation; identity on rationals."""
    if isinstance(x, Cyc):
        return x.conjugate()
    return Fraction(x)


def inverse(x):
    if isinstance(x, Cyc):
        return x.inverse()
    return Fraction(1) / Fraction(x)


def scalar_to_string(x):
    """Exact string form; rationals as 'p/q', z denotes zeta_conductor."""
    if isinstance(x, (int, Fraction)):
        return str(Fraction(x))
    parts = []
    for k, c in enumerate(x.coeffs):
        if not c:
            continue
        if k == 0:
            parts.append(str(c))
        else:
            mono = f"z{x.m}" + (f"^{k}" if k > 1 else "")
            if c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
    if not parts:
        return "0"
    s = parts[0]
    for p in parts[1:]:
        s += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return s


_TERM_RE = re.compile(
    r"^\s*(?P<coef>[+-]?\d+(?:/\d+)?)?\s*"
    r"(?P<star>\*)?\s*"
    r"(?:z(?P<cond>\d*)(?:\^(?P<pow>\d+))?)?\s*$"
)


class ScalarParseError(ValueError):
    pass


def scalar_from_string(text, conductor=1):
    """Parse expressions like '3/2*z5^2 - 1' into an exact scalar.

    `z` (or `z<m>` with m equal to the declared conductor) denotes the
    primitive conductor-th root of unity.
    """
    text = text.strip()
    if not text:
        raise ScalarParseError("empty scalar expression")
    # split on top-level + and -, keeping signs
    terms = re.findall(r"[+-]?[^+-]+|[+-](?=[+-])", text.replace(" ", ""))
    total = Fraction(0)
    for term in terms:
        sign = 1
        while term and term[0] in "+-":
            if term[0] == "-":
                sign = -sign
            term = term[1:]
        m = _TERM_RE.match(term)
        if not m or (m.group("coef") is None and m.group("cond") is None and not term):
            raise ScalarParseError(f"cannot parse term {term!r}")
        has_z = "z" in term
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if has_z:
            cond = m.group("cond")
            if cond and int(cond) != conductor:
                raise ScalarParseError(
                    f"root z{cond} does not match declared conductor {conductor}"
                )
            k = int(m.group("pow") or 1)
            total = total + sign * coef * zeta(conductor, k)
        else:
            if m.group("coef") is None:
                raise ScalarParseError(f"cannot parse term {term!r}")
            total = total + sign * coef
    return total
