r"""Exact arithmetic in discretely valued fields, and homogeneous root pairs.

Two interchangeable backends implement the same element protocol
(``add/sub/mul/div``, ``valuation``, ``is_zero``, ``unit_coeff``):

- :class:`ValuedElement`: a rational function in a formal variable tau over
  the Gaussian rationals Q(i), where tau is an e-th root of the uniformizer
  pi.  Valuations are exact rationals normalized so v(pi) = 1, v(tau) = 1/e,
  v(i) = 0 and v(0) = +infinity.  No truncation ever happens: valuations of
  sums are exact, which the downstream valuation identities require.
- :class:`RationalAtP`: an exact rational carrying an odd prime p, with the
  p-adic valuation.

Roots of polynomials are handled projectively as :class:`RootPair` values
(alpha : beta), where a finite root x is (1 : x) and the root at infinity is
(0 : 1).  The fundamental bilinear form is ``pair_bracket(i, j)`` =
alpha_j*beta_i - alpha_i*beta_j, which degenerates to x_i - x_j on finite
monic pairs and stays finite at infinity.

Polynomials in tau are plain dicts {exponent: GaussRat} holding nonzero
coefficients only; the module-level ``pdict_*`` helpers operate on them and
are reused by the heavier orbit-sum evaluation elsewhere.
"""

from __future__ import annotations

from gmpy2 import mpq

from .errors import DomainError, E_DIV_ZERO, E_RAMIFICATION

INF = float("inf")

_MPQ_ZERO = mpq(0)
_MPQ_ONE = mpq(1)


# ---------------------------------------------------------------------------
# Gaussian rationals
# ---------------------------------------------------------------------------

class GaussRat:
    """An element a + b*i of Q(i), with exact rational a, b."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is type(_MPQ_ZERO) else mpq(re)
        self.im = im if type(im) is type(_MPQ_ZERO) else mpq(im)

    def __add__(self, other):
        return GaussRat(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return GaussRat(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __mul__(self, other):
        a, b, c, d = self.re, self.im, other.re, other.im
        if b == 0 and d == 0:
            return GaussRat(a * c, _MPQ_ZERO)
        return GaussRat(a * c - b * d, a * d + b * c)

    def __truediv__(self, other):
        a, b, c, d = self.re, self.im, other.re, other.im
        n = c * c + d * d
        if n == 0:
            raise DomainError(E_DIV_ZERO)
        if b == 0 and d == 0:
            return GaussRat(a / c, _MPQ_ZERO)
        return GaussRat((a * c + b * d) / n, (b * c - a * d) / n)

    def __eq__(self, other):
        if not isinstance(other, GaussRat):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def conj(self):
        return GaussRat(self.re, -self.im)

    def __repr__(self):
        return format_gauss(self)


G_ZERO = GaussRat(0)
G_ONE = GaussRat(1)
G_I = GaussRat(0, 1)


def parse_rat(s):
    """Parse a decimal-free rational string "a/b" (or "a") to mpq."""
    s = s.strip()
    if "/" in s:
        a, b = s.split("/")
        return mpq(int(a), int(b))
    return mpq(int(s))


def parse_gauss(s):
    """Parse "a/b", "c/d*i", "i", "-i", or "a/b+c/d*i" (also with '-')."""
    s = s.replace(" ", "")
    if not s:
        raise DomainError("invalid input", "empty rational string")
    # split into at most two signed terms, keeping signs
    terms = []
    start = 0
    for k in range(1, len(s)):
        if s[k] in "+-" and s[k - 1] not in "+-/*":
            terms.append(s[start:k])
            start = k
    terms.append(s[start:])
    re = _MPQ_ZERO
    im = _MPQ_ZERO
    for t in terms:
        if t.endswith("i"):
            body = t[:-1]
            if body.endswith("*"):
                body = body[:-1]
            if body in ("", "+"):
                im += 1
            elif body == "-":
                im -= 1
            else:
                im += parse_rat(body)
        else:
            re += parse_rat(t)
    return GaussRat(re, im)


def format_gauss(g):
    if g.im == 0:
        return str(g.re)
    if g.re == 0:
        if g.im == 1:
            return "i"
        if g.im == -1:
            return "-i"
        return f"{g.im}*i"
    sign = "+" if g.im > 0 else "-"
    mag = abs(g.im)
    istr = "i" if mag == 1 else f"{mag}*i"
    return f"{g.re}{sign}{istr}"


# ---------------------------------------------------------------------------
# Sparse polynomials in tau: dict {exponent: GaussRat}, zero coeffs absent
# ---------------------------------------------------------------------------

def pdict_is_zero(f):
    return not f

def pdict_valuation(f):
    """Lowest exponent with nonzero coefficient; INF for the zero poly."""
    return min(f) if f else INF

def pdict_degree(f):
    return max(f) if f else -1

def pdict_add(f, g):
    out = dict(f)
    for e, c in g.items():
        s = out.get(e)
        if s is None:
            out[e] = c
        else:
            s = s + c
            if s.is_zero():
                del out[e]
            else:
                out[e] = s
    return out

def pdict_neg(f):
    return {e: -c for e, c in f.items()}

def pdict_sub(f, g):
    return pdict_add(f, pdict_neg(g))

def pdict_scale(f, c):
    if c.is_zero():
        return {}
    return {e: k * c for e, k in f.items()}

def pdict_mul(f, g, trunc=None):
    """Product; exponents >= trunc are dropped when trunc is given."""
    if not f or not g:
        return {}
    out = {}
    if trunc is None:
        for e1, c1 in f.items():
            for e2, c2 in g.items():
                e = e1 + e2
                p = c1 * c2
                s = out.get(e)
                if s is None:
                    out[e] = p
                else:
                    s = s + p
                    if s.is_zero():
                        del out[e]
                    else:
                        out[e] = s
        return out
    for e1, c1 in f.items():
        if e1 >= trunc:
            continue
        for e2, c2 in g.items():
            e = e1 + e2
            if e >= trunc:
                continue
            p = c1 * c2
            s = out.get(e)
            if s is None:
                out[e] = p
            else:
                s = s + p
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
    return out

def pdict_pow(f, k, trunc=None):
    out = {0: G_ONE}
    base = dict(f)
    while k:
        if k & 1:
            out = pdict_mul(out, base, trunc)
        k >>= 1
        if k:
            base = pdict_mul(base, base, trunc)
    return out

def pdict_trunc(f, n):
    return {e: c for e, c in f.items() if e < n}

def pdict_shift(f, k):
    return {e + k: c for e, c in f.items()}

def pdict_eq(f, g):
    return f == g

def pdict_const(c):
    if isinstance(c, GaussRat):
        return {} if c.is_zero() else {0: c}
    c = GaussRat(c)
    return {} if c.is_zero() else {0: c}


def _dense(f):
    n = pdict_degree(f)
    arr = [G_ZERO] * (n + 1)
    for e, c in f.items():
        arr[e] = c
    return arr

def _dense_trim(a):
    while a and a[-1].is_zero():
        a.pop()
    return a

def _dense_divmod(a, b):
    """Exact-field division with remainder over Q(i)."""
    a = list(a)
    _dense_trim(a)
    if not b:
        raise DomainError(E_DIV_ZERO)
    q = [G_ZERO] * max(0, len(a) - len(b) + 1)
    lb = b[-1]
    while len(a) >= len(b):
        k = len(a) - len(b)
        c = a[-1] / lb
        q[k] = c
        for i2, bc in enumerate(b):
            if not bc.is_zero():
                a[i2 + k] = a[i2 + k] - c * bc
        _dense_trim(a)
        if not a:
            break
    return q, a

def _dense_gcd(a, b):
    a = _dense_trim(list(a))
    b = _dense_trim(list(b))
    while b:
        _, r = _dense_divmod(a, b)
        a, b = b, r
    if a:
        la = a[-1]
        a = [c / la for c in a]
    return a

def _pdict_from_dense(arr):
    return {e: c for e, c in enumerate(arr) if not c.is_zero()}

def pdict_gcd(f, g):
    return _pdict_from_dense(_dense_gcd(_dense(f), _dense(g)))

def pdict_divexact(f, g):
    q, r = _dense_divmod(_dense(f), _dense(g))
    if r:
        raise DomainError("invalid input", "inexact polynomial division")
    return _pdict_from_dense(q)


# ---------------------------------------------------------------------------
# ValuedElement: exact rational functions in tau, v(tau) = 1/e
# ---------------------------------------------------------------------------

class ValuedElement:
    """An exact element num/den of Q(i)(tau) with ramification index e.

    Stored in reduced form: gcd(num, den) = 1 and the lowest-order
    coefficient of den is 1.  Reduction is idempotent, so structural
    equality is semantic equality (at equal e).
    """

    __slots__ = ("num", "den", "e")

    def __init__(self, num, den=None, e=1, _canonical=False):
        if den is None:
            den = {0: G_ONE}
        if _canonical:
            self.num, self.den, self.e = num, den, e
            return
        num = {k: c for k, c in num.items() if not c.is_zero()}
        den = {k: c for k, c in den.items() if not c.is_zero()}
        if pdict_is_zero(den):
            raise DomainError(E_DIV_ZERO, "zero denominator")
        if pdict_is_zero(num):
            self.num, self.den, self.e = {}, {0: G_ONE}, e
            return
        g = pdict_gcd(num, den)
        if pdict_degree(g) > 0 or pdict_valuation(g) > 0:
            num = pdict_divexact(num, g)
            den = pdict_divexact(den, g)
        lead = den[pdict_valuation(den)]
        if lead != G_ONE:
            inv = G_ONE / lead
            num = pdict_scale(num, inv)
            den = pdict_scale(den, inv)
            den[pdict_valuation(den)] = G_ONE
        self.num, self.den, self.e = num, den, e

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(e=1):
        return ValuedElement({}, {0: G_ONE}, e, _canonical=True)

    @staticmethod
    def one(e=1):
        return ValuedElement({0: G_ONE}, {0: G_ONE}, e, _canonical=True)

    @staticmethod
    def constant(c, e=1):
        return ValuedElement(pdict_const(c), None, e)

    @staticmethod
    def tau(e):
        """The formal e-th root of the uniformizer; valuation 1/e."""
        return ValuedElement({1: G_ONE}, {0: G_ONE}, e, _canonical=True)

    @staticmethod
    def pi(e=1):
        return ValuedElement({e: G_ONE}, {0: G_ONE}, e, _canonical=True)

    @staticmethod
    def i_unit(e=1):
        return ValuedElement({0: G_I}, {0: G_ONE}, e, _canonical=True)

    @staticmethod
    def from_pairs(num_pairs, den_pairs=None, e=1):
        """Build from [[exponent, coeff-string], ...] lists (JSON schema)."""
        num = {}
        for ex, c in num_pairs:
            g = parse_gauss(c) if isinstance(c, str) else GaussRat(c)
            if not g.is_zero():
                num[int(ex)] = g
        den = {0: G_ONE}
        if den_pairs:
            den = {}
            for ex, c in den_pairs:
                g = parse_gauss(c) if isinstance(c, str) else GaussRat(c)
                if not g.is_zero():
                    den[int(ex)] = g
        return ValuedElement(num, den, e)

    def to_pairs(self):
        num = [[e, format_gauss(c)] for e, c in sorted(self.num.items())]
        den = [[e, format_gauss(c)] for e, c in sorted(self.den.items())]
        return {"num": num, "den": den}

    # -- protocol ----------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, ValuedElement):
            raise DomainError("invalid input", "mixed element types")
        if other.e != self.e:
            raise DomainError(E_RAMIFICATION,
                              f"e={self.e} vs e={other.e}; rescale first")

    def add(self, other):
        self._check(other)
        num = pdict_add(pdict_mul(self.num, other.den),
                        pdict_mul(other.num, self.den))
        return ValuedElement(num, pdict_mul(self.den, other.den), self.e)

    def sub(self, other):
        self._check(other)
        num = pdict_sub(pdict_mul(self.num, other.den),
                        pdict_mul(other.num, self.den))
        return ValuedElement(num, pdict_mul(self.den, other.den), self.e)

    def mul(self, other):
        self._check(other)
        return ValuedElement(pdict_mul(self.num, other.num),
                             pdict_mul(self.den, other.den), self.e)

    def div(self, other):
        self._check(other)
        if other.is_zero():
            raise DomainError(E_DIV_ZERO)
        return ValuedElement(pdict_mul(self.num, other.den),
                             pdict_mul(self.den, other.num), self.e)

    def neg(self):
        return ValuedElement(pdict_neg(self.num), dict(self.den), self.e,
                             _canonical=True)

    __add__ = add
    __sub__ = sub
    __mul__ = mul
    __truediv__ = div
    __neg__ = neg

    def is_zero(self):
        return not self.num

    def valuation(self):
        """Exact valuation in units of v(pi) = 1; INF for 0."""
        if not self.num:
            return INF
        v = pdict_valuation(self.num) - pdict_valuation(self.den)
        return mpq(v, self.e)

    def unit_coeff(self):
        """Leading coefficient: the coefficient of tau^(e*valuation)."""
        if not self.num:
            return G_ZERO
        return self.num[pdict_valuation(self.num)] / self.den[pdict_valuation(self.den)]

    def rescale(self, new_e):
        """Reinterpret at a finer ramification index (new_e multiple of e)."""
        if new_e == self.e:
            return self
        if new_e % self.e:
            raise DomainError(E_RAMIFICATION,
                              f"cannot rescale e={self.e} to e={new_e}")
        k = new_e // self.e
        return ValuedElement(pdict_shift_scaleexp(self.num, k),
                             pdict_shift_scaleexp(self.den, k),
                             new_e, _canonical=True)

    def __eq__(self, other):
        if not isinstance(other, ValuedElement):
            return NotImplemented
        if self.e != other.e:
            e = lcm(self.e, other.e)
            a, b = self.rescale(e), other.rescale(e)
            return a.num == b.num and a.den == b.den
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((frozenset(self.num.items()), frozenset(self.den.items()), self.e))

    def __repr__(self):
        def side(f):
            if not f:
                return "0"
            var = "pi" if self.e == 1 else "tau"
            terms = []
            for ex in sorted(f):
                c = format_gauss(f[ex])
                if ex == 0:
                    terms.append(c)
                else:
                    head = "" if c == "1" else f"({c})*"
                    terms.append(f"{head}{var}^{ex}" if ex != 1 else f"{head}{var}")
            return " + ".join(terms)
        if self.den == {0: G_ONE}:
            return side(self.num)
        return f"({side(self.num)})/({side(self.den)})"


def pdict_shift_scaleexp(f, k):
    return {e * k: c for e, c in f.items()}


def lcm(a, b):
    from math import gcd
    return a // gcd(a, b) * b


def rescale_common(elements):
    """Rescale a collection of ValuedElements to their lcm ramification."""
    es = {x.e for x in elements}
    e = 1
    for v in es:
        e = lcm(e, v)
    return [x.rescale(e) for x in elements], e


# ---------------------------------------------------------------------------
# RationalAtP: exact rationals with the p-adic valuation
# ---------------------------------------------------------------------------

def _padic_val(q, p):
    if q == 0:
        return INF
    n, d = q.numerator, q.denominator
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    while d % p == 0:
        d //= p
        v -= 1
    return v


class RationalAtP:
    """An exact rational with valuation at a fixed odd prime p."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        if p < 3 or p % 2 == 0:
            raise DomainError("invalid input", "p must be an odd prime >= 3")
        self.value = value if type(value) is type(_MPQ_ZERO) else mpq(value)
        self.p = p

    def _check(self, other):
        if not isinstance(other, RationalAtP) or other.p != self.p:
            raise DomainError("invalid input", "mixed primes or element types")

    def add(self, other):
        self._check(other)
        return RationalAtP(self.value + other.value, self.p)

    def sub(self, other):
        self._check(other)
        return RationalAtP(self.value - other.value, self.p)

    def mul(self, other):
        self._check(other)
        return RationalAtP(self.value * other.value, self.p)

    def div(self, other):
        self._check(other)
        if other.value == 0:
            raise DomainError(E_DIV_ZERO)
        return RationalAtP(self.value / other.value, self.p)

    def neg(self):
        return RationalAtP(-self.value, self.p)

    __add__ = add
    __sub__ = sub
    __mul__ = mul
    __truediv__ = div
    __neg__ = neg

    def is_zero(self):
        return self.value == 0

    def valuation(self):
        return _padic_val(self.value, self.p)

    def unit_coeff(self):
        """The p-free part value / p^valuation (exact rational)."""
        if self.value == 0:
            return _MPQ_ZERO
        v = self.valuation()
        return self.value / mpq(self.p) ** v

    def __eq__(self, other):
        if not isinstance(other, RationalAtP):
            return NotImplemented
        return self.p == other.p and self.value == other.value

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"{self.value}@p{self.p}"


# ---------------------------------------------------------------------------
# Homogeneous root pairs and Moebius maps
# ---------------------------------------------------------------------------

class RootPair:
    """A projective root (alpha : beta); x = beta/alpha, infinity = (0 : 1)."""

    __slots__ = ("alpha", "beta")

    def __init__(self, alpha, beta):
        if alpha.is_zero() and beta.is_zero():
            raise DomainError("invalid input", "(0 : 0) is not a point")
        self.alpha = alpha
        self.beta = beta

    @staticmethod
    def finite(x):
        one = _one_like(x)
        return RootPair(one, x)

    @staticmethod
    def infinity(exemplar):
        """The root at infinity, typed like the given element."""
        one = _one_like(exemplar)
        zero = one.sub(one)
        return RootPair(zero, one)

    def is_infinity(self):
        return self.alpha.is_zero()

    def affine(self):
        if self.is_infinity():
            raise DomainError("invalid input", "infinity has no affine value")
        return self.beta.div(self.alpha)

    def projectively_equal(self, other):
        # cross-multiplication; no normalization needed
        return self.alpha.mul(other.beta) == self.beta.mul(other.alpha)

    def __repr__(self):
        return f"({self.alpha!r} : {self.beta!r})"


def _one_like(x):
    if isinstance(x, ValuedElement):
        return ValuedElement.one(x.e)
    if isinstance(x, RationalAtP):
        return RationalAtP(1, x.p)
    raise DomainError("invalid input", "unknown element type")


def pair_bracket(i, j):
    """alpha_j*beta_i - alpha_i*beta_j; x_i - x_j on finite monic pairs."""
    return j.alpha.mul(i.beta).sub(i.alpha.mul(j.beta))


class MoebiusMap:
    """x -> (a*x + b)/(c*x + d) with ad - bc != 0."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a, self.b, self.c, self.d = a, b, c, d
        if self.det().is_zero():
            raise DomainError("invalid input", "degenerate Moebius map")

    @staticmethod
    def from_ints(a, b, c, d, e=1):
        mk = lambda n: ValuedElement.constant(n, e)
        return MoebiusMap(mk(a), mk(b), mk(c), mk(d))

    def det(self):
        return self.a.mul(self.d).sub(self.b.mul(self.c))

    def inverse(self):
        return MoebiusMap(self.d, self.b.neg(), self.c.neg(), self.a)

    def __repr__(self):
        return f"x -> (({self.a!r})x + ({self.b!r}))/(({self.c!r})x + ({self.d!r}))"


def apply_moebius(m, r):
    """Image of a projective pair: (alpha : beta) -> (c*beta + d*alpha : a*beta + b*alpha).

    No per-pair normalization is performed, so the exact identity
    pair_bracket(m(r), m(s)) = det(m) * pair_bracket(r, s) holds on the nose.
    """
    alpha = m.c.mul(r.beta).add(m.d.mul(r.alpha))
    beta = m.a.mul(r.beta).add(m.b.mul(r.alpha))
    return RootPair(alpha, beta)
