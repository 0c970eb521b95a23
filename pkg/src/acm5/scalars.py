"""Scalar tower for exact coframe computations.

Three kinds of coefficients appear throughout the library:

* exact rationals (``fractions.Fraction``), the default;
* elements of a trigonometric ring: rational combinations of sin/cos of
  integer-frequency combinations of two abstract phases ``f`` and ``g``,
  with products reduced exactly by the product-to-sum identities;
* binary64 floats, used only for cross-checking exact results against a
  relative tolerance of ``FLOAT_RTOL``.

Rationals embed into the trig ring as the frequency-zero cosine component
and results collapse back to ``Fraction`` whenever they are constant, so
identities such as ``sin(f)**2 + cos(f)**2 == 1`` hold on the nose.
Floats never mix with exact scalars; attempting to do so raises
:class:`~acm5.errors.ModeMismatchError`.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ExtensionOverflowError, ModeMismatchError

FLOAT_RTOL = 1e-9

# Trig atoms are keyed ("c"|"s", m, n) for cos/sin of m*f + n*g, normalized
# so that the first nonzero frequency is positive and sin(0) never appears.


def _norm_atom(kind, m, n, coef):
    if m == 0 and n == 0:
        if kind == "s":
            return None, None
        return ("c", 0, 0), coef
    if m < 0 or (m == 0 and n < 0):
        m, n = -m, -n
        if kind == "s":
            coef = -coef
    return (kind, m, n), coef


class TrigScalar:
    """Exact element of the two-phase trigonometric ring."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        clean = {}
        for (kind, m, n), coef in coeffs.items():
            coef = Fraction(coef)
            key, coef = _norm_atom(kind, m, n, coef)
            if key is None:
                continue
            acc = clean.get(key, Fraction(0)) + coef
            if acc:
                clean[key] = acc
            elif key in clean:
                del clean[key]
        self.coeffs = clean

    # -- constructors -------------------------------------------------
    @staticmethod
    def const(q):
        return TrigScalar({("c", 0, 0): Fraction(q)})

    @staticmethod
    def atom(kind, m, n, coef=1):
        return TrigScalar({(kind, m, n): Fraction(coef)})

    # -- predicates ---------------------------------------------------
    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return all(k == ("c", 0, 0) for k in self.coeffs)

    def constant_part(self):
        return self.coeffs.get(("c", 0, 0), Fraction(0))

    # -- ring operations ----------------------------------------------
    def __add__(self, other):
        if not isinstance(other, (TrigScalar, int, Fraction)):
            return NotImplemented
        other = _lift(other)
        merged = dict(self.coeffs)
        for k, v in other.coeffs.items():
            acc = merged.get(k, Fraction(0)) + v
            if acc:
                merged[k] = acc
            elif k in merged:
                del merged[k]
        out = TrigScalar.__new__(TrigScalar)
        out.coeffs = merged
        return out

    __radd__ = __add__

    def __neg__(self):
        out = TrigScalar.__new__(TrigScalar)
        out.coeffs = {k: -v for k, v in self.coeffs.items()}
        return out

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, (TrigScalar, int, Fraction)):
            return NotImplemented
        other = _lift(other)
        out = {}

        def put(kind, m, n, coef):
            key, coef = _norm_atom(kind, m, n, coef)
            if key is None:
                return
            acc = out.get(key, Fraction(0)) + coef
            if acc:
                out[key] = acc
            elif key in out:
                del out[key]

        half = Fraction(1, 2)
        for (k1, m1, n1), c1 in self.coeffs.items():
            for (k2, m2, n2), c2 in other.coeffs.items():
                c = c1 * c2 * half
                sm, sn = m1 + m2, n1 + n2
                dm, dn = m1 - m2, n1 - n2
                if k1 == "c" and k2 == "c":
                    put("c", dm, dn, c)
                    put("c", sm, sn, c)
                elif k1 == "s" and k2 == "s":
                    put("c", dm, dn, c)
                    put("c", sm, sn, -c)
                elif k1 == "s" and k2 == "c":
                    put("s", sm, sn, c)
                    put("s", dm, dn, c)
                else:  # cos * sin
                    put("s", sm, sn, c)
                    put("s", dm, dn, -c)
        res = TrigScalar.__new__(TrigScalar)
        res.coeffs = out
        return res

    __rmul__ = __mul__

    def deriv_terms(self):
        """Chain-rule data: list of (factor, m, n) with d(self) = sum factor*(m*df + n*dg)."""
        out = []
        for (kind, m, n), coef in self.coeffs.items():
            if m == 0 and n == 0:
                continue
            if kind == "s":
                out.append((collapse(TrigScalar.atom("c", m, n, coef)), m, n))
            else:
                out.append((collapse(TrigScalar.atom("s", m, n, -coef)), m, n))
        return out

    # -- misc ----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, TrigScalar):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_part() == other
        return NotImplemented

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"TrigScalar({fmt_scalar(self)!r})"


def _lift(x):
    if isinstance(x, TrigScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return TrigScalar.const(x)
    if isinstance(x, float):
        raise ModeMismatchError("cannot mix float scalars with the trig ring")
    raise TypeError(f"not a scalar: {x!r}")


def collapse(x):
    """Return a Fraction when a trig scalar is actually constant."""
    if isinstance(x, TrigScalar) and x.is_constant():
        return x.constant_part()
    return x


# ---------------------------------------------------------------------------
# facade over Fraction | int | float | TrigScalar


def smode(x):
    if isinstance(x, float):
        return "float"
    if isinstance(x, (int, Fraction, TrigScalar)):
        return "exact"
    raise TypeError(f"not a scalar: {x!r}")


def sadd(a, b):
    if isinstance(a, TrigScalar) or isinstance(b, TrigScalar):
        return collapse(_lift(a) + _lift(b))
    return a + b


def smul(a, b):
    if isinstance(a, TrigScalar) or isinstance(b, TrigScalar):
        return collapse(_lift(a) * _lift(b))
    return a * b


def sneg(a):
    return -a


def sdiv(a, b):
    if isinstance(b, TrigScalar):
        b = collapse(b)
        if isinstance(b, TrigScalar):
            raise ExtensionOverflowError("division by a non-constant trig scalar")
    if isinstance(a, TrigScalar):
        return collapse(a * TrigScalar.const(Fraction(1) / Fraction(b)))
    if isinstance(a, float) or isinstance(b, float):
        return a / b
    return Fraction(a) / Fraction(b)


def sis_zero(x, tol_scale=1.0):
    if isinstance(x, float):
        return abs(x) <= FLOAT_RTOL * max(1.0, tol_scale)
    if isinstance(x, TrigScalar):
        return x.is_zero()
    return x == 0


def rat(x):
    """Coerce to Fraction, accepting 'p/q' strings."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not rational: {x!r}")


def _fmt_freq(m, n):
    parts = []
    if m:
        parts.append("f" if m == 1 else f"{m}f")
    if n:
        sign = "+" if n > 0 and parts else ""
        parts.append(sign + ("g" if n == 1 else "-g" if n == -1 else f"{n}g"))
    return "".join(parts)


def fmt_scalar(x):
    """Human/serialization-friendly rendering; rationals as 'p/q'."""
    if isinstance(x, float):
        return repr(x)
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    parts = []
    for (kind, m, n), coef in sorted(x.coeffs.items()):
        if (kind, m, n) == ("c", 0, 0):
            parts.append(fmt_scalar(coef))
            continue
        fn = "cos" if kind == "c" else "sin"
        at = f"{fn}({_fmt_freq(m, n)})"
        if coef == 1:
            parts.append(at)
        elif coef == -1:
            parts.append(f"-{at}")
        else:
            parts.append(f"{fmt_scalar(coef)}*{at}")
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"


SIN_F = TrigScalar.atom("s", 1, 0)
COS_F = TrigScalar.atom("c", 1, 0)
SIN_G = TrigScalar.atom("s", 0, 1)
COS_G = TrigScalar.atom("c", 0, 1)
