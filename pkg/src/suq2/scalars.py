"""Exact coefficient arithmetic for the engine.

A :class:`Scalar` is a rational function in two commuting indeterminates
``q`` and ``qb`` with Gaussian-rational coefficients.  ``qb`` is an
independent indeterminate, not syntactic sugar for a conjugate: conjugation
is the ring involution that swaps ``q`` with ``qb`` and negates the imaginary
unit.  Every identity the engine checks is therefore an exact polynomial
identity in two variables, valid for all complex specialisations at once.

Representation: numerator and denominator are Laurent polynomials stored as
``{(q_exp, qb_exp): GaussianRational}`` dicts.  After construction, a Scalar
is canonical: monomial factors are absorbed into the (Laurent) numerator, the
denominator is a genuine polynomial with zero minimum exponent in each
variable, numerator and denominator share no polynomial factor, and the
denominator's lexicographically leading coefficient is one.  Equality of
Scalars is structural equality of canonical forms.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import PoleError, ZeroDivisorError


class GaussianRational:
    """A complex number with rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __add__(self, other):
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __truediv__(self, other):
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisorError()
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def __eq__(self, other):
        return (
            isinstance(other, GaussianRational)
            and self.re == other.re
            and self.im == other.im
        )

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(self.re, self.im)

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"


_GR_ZERO = GaussianRational(0)
_GR_ONE = GaussianRational(1)


def _coerce_gr(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    raise TypeError(f"cannot use {type(value).__name__} as a coefficient")


# ---------------------------------------------------------------------------
# Laurent-polynomial helpers.  A polynomial is a dict {(a, b): GaussianRational}
# with no zero values; {} is the zero polynomial.
# ---------------------------------------------------------------------------


def _padd(f, g):
    out = dict(f)
    for k, c in g.items():
        s = out.get(k, _GR_ZERO) + c
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s
    return out


def _pneg(f):
    return {k: -c for k, c in f.items()}


def _pmul(f, g):
    out = {}
    for (a1, b1), c1 in f.items():
        for (a2, b2), c2 in g.items():
            k = (a1 + a2, b1 + b2)
            s = out.get(k, _GR_ZERO) + c1 * c2
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
    return out


def _pshift(f, da, db):
    return {(a + da, b + db): c for (a, b), c in f.items()}


def _pconj(f):
    """Swap the two variables and conjugate every coefficient."""
    return {(b, a): c.conjugate() for (a, b), c in f.items()}


def _plead(f):
    """Leading (key, coefficient) under lexicographic key order."""
    k = max(f)
    return k, f[k]


# -- univariate helpers (dict {exp: GaussianRational}) ----------------------


def _u_lead(f):
    e = max(f)
    return e, f[e]


def _u_clear(f):
    """Scale a Fraction-coefficient polynomial to Gaussian-integer pairs."""
    scale = 1
    for c in f.values():
        scale = scale * c.re.denominator // math.gcd(scale, c.re.denominator)
        scale = scale * c.im.denominator // math.gcd(scale, c.im.denominator)
    return {
        e: (int(c.re * scale), int(c.im * scale)) for e, c in f.items()
    }


def _gi_gcd(u, v):
    """Euclidean gcd in the Gaussian integers (nearest-integer division)."""
    while v != (0, 0):
        a, b = u
        c, d = v
        n = c * c + d * d
        re, im = a * c + b * d, b * c - a * d
        qr = (2 * re + n) // (2 * n)
        qi = (2 * im + n) // (2 * n)
        u, v = v, (a - qr * c + qi * d, b - qr * d - qi * c)
    return u


def _gi_divexact(u, v):
    a, b = u
    c, d = v
    n = c * c + d * d
    re, im = a * c + b * d, b * c - a * d
    if re % n or im % n:
        raise ArithmeticError("inexact Gaussian-integer division")
    return (re // n, im // n)


def _zi_primitive(f):
    """Divide out the full Gaussian-integer content (up to a unit)."""
    g = (0, 0)
    for pair in f.values():
        g = _gi_gcd(g, pair)
        if g[0] * g[0] + g[1] * g[1] == 1:
            return f
    if g == (0, 0) or g[0] * g[0] + g[1] * g[1] == 1:
        return f
    return {e: _gi_divexact(pair, g) for e, pair in f.items()}


def _zi_prem(f, g):
    """Pseudo-remainder over the Gaussian integers in one variable."""
    ge = max(g)
    gc = g[ge]
    while f and max(f) >= ge:
        fe = max(f)
        fc = f[fe]
        shift = fe - ge
        out = {}
        for e, (a, b) in f.items():
            out[e] = (a * gc[0] - b * gc[1], a * gc[1] + b * gc[0])
        for e, (c, d) in g.items():
            k = e + shift
            sub = (fc[0] * c - fc[1] * d, fc[0] * d + fc[1] * c)
            cur = out.get(k, (0, 0))
            val = (cur[0] - sub[0], cur[1] - sub[1])
            if val == (0, 0):
                out.pop(k, None)
            else:
                out[k] = val
        f = out
    return f


def _zi_gcd(fz, gz):
    """Primitive pseudo-remainder gcd of Gaussian-integer-pair polynomials."""
    while gz:
        r = _zi_prem(fz, gz) if fz else {}
        fz, gz = gz, _zi_primitive(r) if r else {}
    return fz


def _zi_to_monic(fz):
    if not fz:
        return {}
    lc = GaussianRational(*fz[max(fz)])
    return {e: GaussianRational(a, b) / lc for e, (a, b) in fz.items()}


def _u_gcd(f, g):
    """Monic gcd of two univariate polynomials over the Gaussian rationals.

    Computed as a primitive pseudo-remainder sequence over the Gaussian
    integers to keep coefficient growth polynomial; the single division back
    to a monic form happens only at the end.
    """
    fz = _zi_primitive(_u_clear(f)) if f else {}
    gz = _zi_primitive(_u_clear(g)) if g else {}
    return _zi_to_monic(_zi_gcd(fz, gz))


# -- bivariate gcd via content/primitive-part recursion ----------------------


def _to_recursive(f):
    """{(a,b): c} -> {a: {b: c}} (coefficients are polynomials in qb)."""
    out = {}
    for (a, b), c in f.items():
        out.setdefault(a, {})[b] = c
    return out


def _from_recursive(r):
    return {(a, b): c for a, coeffs in r.items() for b, c in coeffs.items()}


def _content(r):
    """Gcd over qb of all q-coefficients of a recursive poly.

    Chained entirely over the Gaussian integers; a constant intermediate
    short-circuits to the trivial content.
    """
    cz = None
    for coeffs in r.values():
        pz = _zi_primitive(_u_clear(coeffs))
        cz = pz if cz is None else _zi_gcd(cz, pz)
        if cz and max(cz) == 0:
            return {0: _GR_ONE}
    return _zi_to_monic(cz or {})


# -- all-integer bivariate machinery (coefficients are Gaussian-integer pairs)


def _zi_mul(f, g):
    out = {}
    for e1, (a, b) in f.items():
        for e2, (c, d) in g.items():
            k = e1 + e2
            cur = out.get(k, (0, 0))
            val = (cur[0] + a * c - b * d, cur[1] + a * d + b * c)
            if val == (0, 0):
                out.pop(k, None)
            else:
                out[k] = val
    return out


def _zi_sub(f, g):
    out = dict(f)
    for e, (a, b) in g.items():
        cur = out.get(e, (0, 0))
        val = (cur[0] - a, cur[1] - b)
        if val == (0, 0):
            out.pop(e, None)
        else:
            out[e] = val
    return out


def _zi_divexact(f, g):
    """Exact univariate division over the Gaussian integers."""
    f = dict(f)
    ge = max(g)
    c, d = g[ge]
    norm = c * c + d * d
    out = {}
    while f:
        fe = max(f)
        a, b = f[fe]
        re, im = (a * c + b * d), (b * c - a * d)
        if re % norm or im % norm:
            raise ArithmeticError("inexact Gaussian-integer division")
        qc = (re // norm, im // norm)
        out[fe - ge] = qc
        step = {e + fe - ge: v for e, v in _zi_mul({0: qc}, g).items()}
        f = _zi_sub(f, step)
    return out


def _r_clear(r):
    """Fraction-coefficient recursive poly -> Gaussian-integer recursive poly."""
    scale = 1
    for coeffs in r.values():
        for c in coeffs.values():
            scale = scale * c.re.denominator // math.gcd(scale, c.re.denominator)
            scale = scale * c.im.denominator // math.gcd(scale, c.im.denominator)
    return {
        a: {e: (int(c.re * scale), int(c.im * scale)) for e, c in coeffs.items()}
        for a, coeffs in r.items()
    }


def _rzi_content(rz):
    cz = None
    for coeffs in rz.values():
        pz = _zi_primitive(coeffs)
        cz = dict(pz) if cz is None else _zi_gcd(cz, pz)
        if cz and max(cz) == 0:
            return {0: (1, 0)}
    return cz or {}


def _rzi_primitive(rz, cont):
    if cont == {0: (1, 0)}:
        return {a: dict(coeffs) for a, coeffs in rz.items()}
    return {a: _zi_divexact(coeffs, cont) for a, coeffs in rz.items()}


def _rzi_prem(f, g):
    ga = max(g)
    gl = g[ga]
    f = {a: dict(c) for a, c in f.items()}
    while f:
        fa = max(f)
        if fa < ga:
            break
        fl = f[fa]
        scaled = {a: _zi_mul(c, gl) for a, c in f.items()}
        step = {a + fa - ga: _zi_mul(c, fl) for a, c in g.items()}
        out = {}
        for a in set(scaled) | set(step):
            coeffs = _zi_sub(scaled.get(a, {}), step.get(a, {}))
            if coeffs:
                out[a] = coeffs
        f = out
    return f


def _u_eval(f, alpha):
    """Evaluate a univariate polynomial at a rational point."""
    total = _GR_ZERO
    for e, c in f.items():
        total = total + c * GaussianRational(alpha**e)
    return total


def _specialize(r, alpha):
    """qb := alpha on a recursive poly; univariate result in q."""
    out = {}
    for a, coeffs in r.items():
        v = _u_eval(coeffs, alpha)
        if not v.is_zero():
            out[a] = v
    return out


def _qb_only(f):
    """View a q-degree-zero bivariate poly as univariate in qb."""
    return {b: c for (a, b), c in f.items()}


def _pgcd(f, g):
    """Gcd of two bivariate polynomials, normalised to lex-leading coeff one."""
    if not f:
        base = dict(g)
    elif not g:
        base = dict(f)
    elif len(f) == 1 or len(g) == 1:
        # a monomial shares no factor with a min-shifted polynomial
        base = None
    elif f == g:
        base = dict(f)
    else:
        base = _pgcd_nontrivial(f, g)
    if base is None:
        return {(0, 0): _GR_ONE}
    _, lc = _plead(base)
    return {k: c / lc for k, c in base.items()}


def _pgcd_nontrivial(f, g):
    rf, rg = _to_recursive(f), _to_recursive(g)
    qdeg_f, qdeg_g = max(rf), max(rg)
    # q-degree-zero inputs reduce to univariate gcds in qb
    if qdeg_f == 0 or qdeg_g == 0:
        uf = _qb_only(f) if qdeg_f == 0 else _content(rf)
        ug = _qb_only(g) if qdeg_g == 0 else _content(rg)
        h = _u_gcd(uf, ug)
        return {(0, b): c for b, c in h.items()}
    # fast path: specialize qb at a point keeping both leading q-coefficients
    # alive; a trivial univariate gcd there proves the full gcd has q-degree
    # zero, hence equals the gcd of the two contents.
    lead_f, lead_g = rf[qdeg_f], rg[qdeg_g]
    for alpha in (2, 3, 5, 7, 11):
        if _u_eval(lead_f, alpha).is_zero() or _u_eval(lead_g, alpha).is_zero():
            continue
        h = _u_gcd(_specialize(rf, alpha), _specialize(rg, alpha))
        if h == {0: _GR_ONE}:
            c = _u_gcd(_content(rf), _content(rg))
            return {(0, b): v for b, v in c.items()}
        break
    # general case: primitive pseudo-remainder sequence over the Gaussian
    # integers (all-integer arithmetic; one conversion at the end)
    fz, gz = _r_clear(rf), _r_clear(rg)
    cf, cg = _rzi_content(fz), _rzi_content(gz)
    pf, pg = _rzi_primitive(fz, cf), _rzi_primitive(gz, cg)
    while pg:
        r = _rzi_prem(pf, pg)
        if not r:
            pf = pg
            break
        pf, pg = pg, _rzi_primitive(r, _rzi_content(r))
    ccont = _zi_gcd(cf, cg)
    result = {}
    for a, coeffs in pf.items():
        for b, (x, y) in _zi_mul(coeffs, ccont).items():
            result[(a, b)] = GaussianRational(x, y)
    return result


def _pdivexact(f, g):
    """Exact bivariate division under lex order; g must divide f."""
    f = dict(f)
    (ga, gb), gc = _plead(g)
    out = {}
    while f:
        (fa, fb), fc = _plead(f)
        da, db = fa - ga, fb - gb
        c = fc / gc
        out[(da, db)] = c
        f = _padd(f, _pmul({(da, db): -c}, g))
    return out


def _peval(f, qv, qbv):
    total = 0j
    for (a, b), c in f.items():
        total += complex(c) * (qv**a) * (qbv**b)
    return total


# ---------------------------------------------------------------------------
# Scalar
# ---------------------------------------------------------------------------


class Scalar:
    """An exact rational function in ``q`` and ``qb``, canonical on creation."""

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, num, den=None):
        if den is None:
            den = {(0, 0): _GR_ONE}
        if not den:
            raise ZeroDivisorError()
        num, den = _canonical(num, den)
        self._num = num
        self._den = den
        self._hash = None

    # -- constructors --------------------------------------------------------

    @staticmethod
    def from_int(n):
        return Scalar({} if n == 0 else {(0, 0): GaussianRational(n)})

    @staticmethod
    def gaussian(re, im=0):
        c = GaussianRational(re, im)
        return Scalar({} if c.is_zero() else {(0, 0): c})

    @staticmethod
    def monomial(q_exp, qb_exp, coeff=1):
        c = _coerce_gr(coeff)
        return Scalar({} if c.is_zero() else {(q_exp, qb_exp): c})

    @staticmethod
    def zero():
        return _ZERO

    @staticmethod
    def one():
        return _ONE

    @staticmethod
    def q():
        return _Q

    @staticmethod
    def qbar():
        return _QBAR

    @staticmethod
    def zeta():
        """The unimodular ratio q / qb."""
        return _ZETA

    @staticmethod
    def imag_unit():
        return _I

    # -- predicates ----------------------------------------------------------

    def is_zero(self):
        return not self._num

    def is_one(self):
        return self._num == {(0, 0): _GR_ONE} and self._den == {(0, 0): _GR_ONE}

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _coerce(value):
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return Scalar({} if value == 0 else {(0, 0): GaussianRational(value)})
        return NotImplemented

    def __add__(self, other):
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        num = _padd(_pmul(self._num, other._den), _pmul(other._num, self._den))
        return Scalar(num, _pmul(self._den, other._den))

    __radd__ = __add__

    def __sub__(self, other):
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        s = Scalar.__new__(Scalar)
        s._num = _pneg(self._num)
        s._den = self._den
        s._hash = None
        return s

    def __mul__(self, other):
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(_pmul(self._num, other._num), _pmul(self._den, other._den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisorError()
        return Scalar(_pmul(self._num, other._den), _pmul(self._den, other._num))

    def __rtruediv__(self, other):
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisorError()
        return Scalar(dict(self._den), dict(self._num))

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n == 0:
            return _ONE
        base = self if n > 0 else self.inverse()
        out = _ONE
        for _ in range(abs(n)):
            out = out * base
        return out

    def conjugate(self):
        """Ring involution: swap q with qb and negate the imaginary unit."""
        return Scalar(_pconj(self._num), _pconj(self._den))

    # -- evaluation -----------------------------------------------------------

    def evaluate(self, qval):
        """Specialise q -> qval, qb -> conj(qval); complex result."""
        qv = complex(qval)
        if qv == 0:
            raise PoleError("pole-at-q: q must be nonzero")
        qbv = qv.conjugate()
        den = _peval(self._den, qv, qbv)
        if abs(den) < 1e-12:
            raise PoleError()
        return _peval(self._num, qv, qbv) / den

    # -- comparison / hashing --------------------------------------------------

    def __eq__(self, other):
        other = Scalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(
                (frozenset(self._num.items()), frozenset(self._den.items()))
            )
        return self._hash

    # -- rendering -------------------------------------------------------------

    def render(self):
        """Canonical ASCII form, parseable by the expression front-end."""
        if self.is_zero():
            return "0"
        num = _poly_str(self._num)
        if self._den == {(0, 0): _GR_ONE}:
            return num
        den = _poly_str(self._den)
        if len(self._num) > 1 or num.startswith("-"):
            num = f"({num})"
        if len(self._den) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    def render_unicode(self):
        return self.render().replace("qb", "q̄")

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Scalar({self.render()!r})"

    def is_monomial(self):
        return len(self._num) == 1 and self._den == {(0, 0): _GR_ONE}


def _canonical(num, den):
    if not num:
        return {}, {(0, 0): _GR_ONE}
    na = min(a for a, _ in num)
    nb = min(b for _, b in num)
    da = min(a for a, _ in den)
    db = min(b for _, b in den)
    n_poly = _pshift(num, -na, -nb)
    d_poly = _pshift(den, -da, -db)
    g = _pgcd(n_poly, d_poly)
    if g != {(0, 0): _GR_ONE}:
        n_poly = _pdivexact(n_poly, g)
        d_poly = _pdivexact(d_poly, g)
    _, lc = _plead(d_poly)
    if not (lc.re == 1 and lc.im == 0):
        n_poly = {k: c / lc for k, c in n_poly.items()}
        d_poly = {k: c / lc for k, c in d_poly.items()}
    n_poly = _pshift(n_poly, na - da, nb - db)
    return n_poly, d_poly


# -- rendering helpers --------------------------------------------------------


def _frac_str(fr):
    return str(fr)


def _gr_str(c):
    """Coefficient text; second component tells whether it is a sum."""
    if c.im == 0:
        return _frac_str(c.re), False
    if c.re == 0:
        if c.im == 1:
            return "i", False
        if c.im == -1:
            return "-i", False
        return f"{_frac_str(c.im)}*i", False
    im = "i" if c.im == 1 else ("-i" if c.im == -1 else f"{_frac_str(c.im)}*i")
    joiner = "" if im.startswith("-") else "+"
    return f"{_frac_str(c.re)}{joiner}{im}", True


def _mono_str(key):
    a, b = key
    parts = []
    if a == 1:
        parts.append("q")
    elif a != 0:
        parts.append(f"q^{a}")
    if b == 1:
        parts.append("qb")
    elif b != 0:
        parts.append(f"qb^{b}")
    return "*".join(parts)


def _poly_str(poly):
    chunks = []
    for key in sorted(poly, reverse=True):
        c = poly[key]
        mono = _mono_str(key)
        cs, is_sum = _gr_str(c)
        if is_sum:
            cs = f"({cs})"
        if mono:
            if cs == "1":
                text = mono
            elif cs == "-1":
                text = f"-{mono}"
            else:
                text = f"{cs}*{mono}"
        else:
            text = cs
        chunks.append(text)
    out = chunks[0]
    for text in chunks[1:]:
        if text.startswith("-"):
            out += f" - {text[1:]}"
        else:
            out += f" + {text}"
    return out


_ZERO = Scalar({})
_ONE = Scalar({(0, 0): _GR_ONE})
_Q = Scalar({(1, 0): _GR_ONE})
_QBAR = Scalar({(0, 1): _GR_ONE})
_ZETA = Scalar({(1, -1): _GR_ONE})
_I = Scalar({(0, 0): GaussianRational(0, 1)})
