"""Exterior algebra over a declared symbol set.

A coframe declares five orthonormal metric symbols (always stored under the
ids 0..4, named e1..e5 by convention) and optionally auxiliary 1-form
symbols (ids 5 and up).  Forms are dictionaries from strictly increasing id
tuples to scalar coefficients; all operations are pure.

Conventions, fixed once and used everywhere:

* (a ^ b)(X, Y) = a(X) b(Y) - a(Y) b(X) for 1-forms; general evaluation of a
  monomial on frame vectors is the permutation determinant (no 1/k! weights).
* The volume form is e1^e2^e3^e4^e5; the star of a monomial is the signed
  complementary monomial with sign fixed by m ^ star(m) = volume.
* The exterior derivative extends the generator table by linearity and the
  graded Leibniz rule; trig coefficients differentiate through declared
  df/dg rules.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import (
    MissingDerivationError,
    ModeMismatchError,
    SchemaError,
    UnsupportedSymbolError,
)
from .scalars import (
    TrigScalar,
    fmt_scalar,
    sadd,
    sis_zero,
    smul,
    sneg,
)

METRIC_IDS = (0, 1, 2, 3, 4)


def _coerce(c):
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, (Fraction, float, TrigScalar)):
        return c
    raise TypeError(f"bad coefficient: {c!r}")


@dataclass(frozen=True, eq=False)
class Form:
    degree: int
    terms: Mapping[tuple, object]

    def __post_init__(self):
        for idx, c in self.terms.items():
            if len(idx) != self.degree or list(idx) != sorted(set(idx)):
                raise ValueError(f"bad multi-index {idx} for degree {self.degree}")
            if sis_zero(c) and not isinstance(c, float):
                raise ValueError("zero coefficient stored")

    # -- queries --------------------------------------------------------
    @property
    def mode(self):
        for c in self.terms.values():
            if isinstance(c, float):
                return "float"
        return "exact"

    def is_zero(self, tol_scale=1.0):
        return all(sis_zero(c, tol_scale) for c in self.terms.values())

    def coefficient(self, idx):
        return self.terms.get(tuple(idx), Fraction(0))

    def symbols_used(self):
        out = set()
        for idx in self.terms:
            out.update(idx)
        return out

    def max_abs(self):
        """Largest |numeric coefficient|; used to scale float tolerances."""
        m = 0.0
        for c in self.terms.values():
            if isinstance(c, TrigScalar):
                m = max(m, max((abs(float(v)) for v in c.coeffs.values()), default=0.0))
            else:
                m = max(m, abs(float(c)))
        return m

    def evaluate(self, *ids):
        """Value on frame directions given by 0-based symbol ids."""
        if len(ids) != self.degree:
            raise ValueError("wrong number of arguments")
        if len(set(ids)) != len(ids):
            return Fraction(0)
        key = tuple(sorted(ids))
        c = self.terms.get(key)
        if c is None:
            return Fraction(0)
        return smul(c, _perm_sign(ids))

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        if self.degree != other.degree and self.terms and other.terms:
            raise ValueError("degree mismatch")
        _check_modes(self, other)
        terms = dict(self.terms)
        for idx, c in other.terms.items():
            acc = sadd(terms.get(idx, Fraction(0)), c)
            if sis_zero(acc) and not isinstance(acc, float):
                terms.pop(idx, None)
            else:
                terms[idx] = acc
        return Form(max(self.degree, other.degree), terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Form(self.degree, {i: sneg(c) for i, c in self.terms.items()})

    def scale(self, s):
        s = _coerce(s)
        if sis_zero(s) and not isinstance(s, float):
            return Form(self.degree, {})
        out = {}
        for idx, c in self.terms.items():
            v = smul(s, c)
            if not sis_zero(v) or isinstance(v, float):
                out[idx] = v
        return Form(self.degree, out)

    def __rmul__(self, s):
        return self.scale(s)

    def __eq__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return (self - other).is_zero()

    def __repr__(self):
        return f"Form({render_form(self)!r})"


def form(degree, terms=None):
    """Normalizing Form constructor; accepts int coefficients and drops zeros."""
    out = {}
    for idx, c in (terms or {}).items():
        c = _coerce(c)
        if sis_zero(c) and not isinstance(c, float):
            continue
        idx = tuple(idx)
        out[idx] = c
    return Form(degree, out)


def zero_form(degree=0):
    return Form(degree, {})


def e(i):
    """Metric coframe leg, 1-based: e(1) .. e(5)."""
    if not 1 <= i <= 5:
        raise ValueError("metric index out of range")
    return Form(1, {(i - 1,): Fraction(1)})


def _perm_sign(ids):
    ids = list(ids)
    sign = 1
    for i in range(len(ids)):
        for j in range(i + 1, len(ids)):
            if ids[i] > ids[j]:
                sign = -sign
    return Fraction(sign)


def _merge(i1, i2):
    """Concatenate-sort two disjoint sorted index tuples; returns (tuple, sign)."""
    out = []
    sign = 1
    a, b = list(i1), list(i2)
    ia = ib = 0
    while ia < len(a) and ib < len(b):
        if a[ia] < b[ib]:
            out.append(a[ia])
            ia += 1
        else:
            sign *= (-1) ** (len(a) - ia)
            out.append(b[ib])
            ib += 1
    out.extend(a[ia:])
    out.extend(b[ib:])
    return tuple(out), sign


def _check_modes(a, b):
    if a.mode != b.mode and a.terms and b.terms:
        raise ModeMismatchError("mixed exact and float forms")


def wedge(a, b):
    """Exterior product; graded-anticommutative, zero above degree 6."""
    _check_modes(a, b)
    deg = a.degree + b.degree
    if deg > 6:
        return zero_form(deg)
    out = {}
    for i1, c1 in a.terms.items():
        for i2, c2 in b.terms.items():
            if set(i1) & set(i2):
                continue
            idx, sign = _merge(i1, i2)
            v = smul(smul(c1, c2), Fraction(sign))
            acc = sadd(out.get(idx, Fraction(0)), v)
            if sis_zero(acc) and not isinstance(acc, float):
                out.pop(idx, None)
            else:
                out[idx] = acc
    return Form(deg, out)


def wedge_all(forms):
    acc = None
    for f in forms:
        acc = f if acc is None else wedge(acc, f)
    return acc if acc is not None else form(0, {(): 1})



def hodge(a, coframe=None):
    """Hodge star on metric-symbol forms, relative to the declared orientation."""
    vol_sign = Fraction(1)
    if coframe is not None:
        vol_sign = _perm_sign(coframe.orientation)
    out = {}
    for idx, c in a.terms.items():
        if any(i not in METRIC_IDS for i in idx):
            raise UnsupportedSymbolError("star is defined on metric symbols only")
        comp = tuple(i for i in METRIC_IDS if i not in idx)
        sign = _perm_sign(idx + comp) * vol_sign
        out_idx = comp
        v = smul(c, sign)
        acc = sadd(out.get(out_idx, Fraction(0)), v)
        if sis_zero(acc) and not isinstance(acc, float):
            out.pop(out_idx, None)
        else:
            out[out_idx] = acc
    return Form(5 - a.degree, out)


def interior(i, a):
    """Contraction of the first slot with the frame vector e_i (1-based)."""
    if not 1 <= i <= 5:
        raise ValueError("frame index out of range")
    sym = i - 1
    if a.degree == 0:
        return zero_form(0)
    out = {}
    for idx, c in a.terms.items():
        if sym not in idx:
            continue
        pos = idx.index(sym)
        rest = idx[:pos] + idx[pos + 1 :]
        v = smul(c, Fraction((-1) ** pos))
        acc = sadd(out.get(rest, Fraction(0)), v)
        if sis_zero(acc) and not isinstance(acc, float):
            out.pop(rest, None)
        else:
            out[rest] = acc
    return Form(a.degree - 1, out)


# ---------------------------------------------------------------------------
# coframe data


@dataclass(frozen=True)
class Symbol:
    name: str
    kind: str  # "metric" | "auxiliary"
    index: int | None = None  # 1..5 for metric symbols


@dataclass(frozen=True)
class TrigRules:
    df: Form | None = None
    dg: Form | None = None


@dataclass(frozen=True)
class CoframeData:
    """Symbols, generator derivatives, orientation, optional phase rules."""

    symbols: tuple
    d_table: Mapping[int, Form]
    orientation: tuple = METRIC_IDS
    trig_rules: TrigRules | None = None

    def __post_init__(self):
        metric = [s for s in self.symbols if s.kind == "metric"]
        if len(metric) != 5 or [s.index for s in self.symbols[:5]] != [1, 2, 3, 4, 5]:
            raise SchemaError("need exactly five metric symbols e1..e5 first")
        names = [s.name for s in self.symbols]
        if len(set(names)) != len(names):
            raise SchemaError("symbol names must be unique")
        nsym = len(self.symbols)
        if sorted(self.orientation) != list(METRIC_IDS):
            raise SchemaError("orientation must permute the metric symbols")
        for sid in range(nsym):
            if sid not in self.d_table:
                raise SchemaError(f"d-table misses symbol {names[sid]}")
            val = self.d_table[sid]
            if any(i >= nsym for i in val.symbols_used()):
                raise SchemaError("d-table uses undeclared symbols")

    @property
    def n_symbols(self):
        return len(self.symbols)

    @property
    def aux_ids(self):
        return tuple(range(5, len(self.symbols)))

    def name_of(self, sid):
        return self.symbols[sid].name

    def id_of(self, name):
        for sid, s in enumerate(self.symbols):
            if s.name == name:
                return sid
        raise KeyError(name)

    def with_trig_rules(self, df=None, dg=None):
        return CoframeData(self.symbols, self.d_table, self.orientation, TrigRules(df, dg))

    def mode(self):
        for f in self.d_table.values():
            if f.mode == "float":
                return "float"
        return "exact"


def standard_symbols(auxiliary=()):
    syms = [Symbol(f"e{i}", "metric", i) for i in range(1, 6)]
    syms.extend(Symbol(name, "auxiliary") for name in auxiliary)
    return tuple(syms)


def coframe(d_table_by_name, auxiliary=(), orientation=None, trig_rules=None):
    """Build CoframeData from a name-keyed generator table.

    Symbols missing from the table get d = 0.
    """
    syms = standard_symbols(auxiliary)
    names = {s.name: i for i, s in enumerate(syms)}
    table = {}
    for name, f in d_table_by_name.items():
        if name not in names:
            raise SchemaError(f"unknown symbol {name!r}")
        table[names[name]] = f
    for sid in range(len(syms)):
        table.setdefault(sid, zero_form(2))
    orient = METRIC_IDS if orientation is None else tuple(names[n] for n in orientation)
    return CoframeData(tuple(syms), table, orient, trig_rules)


def abelian_coframe():
    return coframe({})


def ext_d(a, c):
    """Exterior derivative from the generator table, by linearity and Leibniz."""
    nsym = c.n_symbols
    if any(i >= nsym for i in a.symbols_used()):
        raise UnsupportedSymbolError("form uses symbols outside the coframe")
    unit = 1.0 if (a.mode == "float" or c.mode() == "float") else Fraction(1)
    result = zero_form(a.degree + 1)
    for idx, coef in a.terms.items():
        # d(coefficient) ^ monomial for non-constant (trig) coefficients
        if isinstance(coef, TrigScalar) and not coef.is_constant():
            rules = c.trig_rules
            if rules is None:
                raise MissingDerivationError("trig coefficient without df/dg rules")
            mono = Form(len(idx), {idx: unit})
            for factor, m, n in coef.deriv_terms():
                phase = zero_form(1)
                if m:
                    if rules.df is None:
                        raise MissingDerivationError("df rule required")
                    phase = phase + rules.df.scale(m)
                if n:
                    if rules.dg is None:
                        raise MissingDerivationError("dg rule required")
                    phase = phase + rules.dg.scale(n)
                result = result + wedge(phase, mono).scale(factor)
        # Leibniz over the monomial
        for pos, sym in enumerate(idx):
            dsym = c.d_table[sym]
            if dsym.is_zero():
                continue
            before = idx[:pos]
            after = idx[pos + 1 :]
            sign = Fraction((-1) ** pos)
            piece = wedge(
                Form(len(before), {before: unit}) if before else Form(0, {(): unit}),
                wedge(dsym, Form(len(after), {after: unit}) if after else Form(0, {(): unit})),
            )
            result = result + piece.scale(smul(coef, sign))
    return result


@dataclass(frozen=True)
class DSquaredReport:
    residuals: Mapping[str, Form]
    ok: bool

    @property
    def failing(self):
        return [name for name, f in self.residuals.items() if not f.is_zero()]


def d_squared_zero(c, tol_scale=1.0):
    """d(d(symbol)) for every generator; integrable iff all vanish."""
    residuals = {}
    ok = True
    for sid in range(c.n_symbols):
        gen = Form(1, {(sid,): Fraction(1)})
        r = ext_d(ext_d(gen, c), c)
        residuals[c.name_of(sid)] = r
        if not r.is_zero(tol_scale):
            ok = False
    return DSquaredReport(residuals, ok)


def render_form(f, names=None):
    """Readable rendering like '-2*e1^e3 + 4/3*e2^e4'."""
    if not f.terms:
        return "0"

    def nm(i):
        if names is not None:
            return names[i]
        return f"e{i + 1}" if i < 5 else f"a{i + 1}"

    parts = []
    for idx in sorted(f.terms):
        c = f.terms[idx]
        mono = "^".join(nm(i) for i in idx) if idx else "1"
        cs = fmt_scalar(c)
        if isinstance(c, TrigScalar) and len(c.coeffs) > 1:
            cs = f"({cs})"
        if cs == "1" and idx:
            parts.append(mono)
        elif cs == "-1" and idx:
            parts.append(f"-{mono}")
        else:
            parts.append(f"{cs}*{mono}" if idx else cs)
    return " + ".join(parts).replace("+ -", "- ")
