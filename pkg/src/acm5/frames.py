"""Connection-level frame machinery.

Connection forms follow the convention w[i][j](X) = g(nabla_X e_i, e_j),
under which the first structure equation for a torsion-free metric
connection on a left-invariant orthonormal coframe reads

    d e_i = sum_j w[i][j] ^ e_j.

The Levi-Civita forms of a pure 5-symbol coframe come from the closed-form
antisymmetrized combination of structure constants; coframes that involve
auxiliary symbols are handled by a direct linear solve of the structure
equation, which has a unique antisymmetric solution whenever one exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from . import linalg
from .errors import RankError, UnsupportedSymbolError
from .exterior import (
    METRIC_IDS,
    CoframeData,
    Form,
    ext_d,
    form,
    wedge,
    wedge_all,
    zero_form,
)
from .scalars import TrigScalar


@dataclass(frozen=True)
class ConnectionForms:
    """Antisymmetric 5x5 matrix of connection 1-forms."""

    omega: tuple  # 5x5 tuple of degree-1 Forms

    def __post_init__(self):
        for i in range(5):
            for j in range(5):
                if not (self.omega[i][j] + self.omega[j][i]).is_zero():
                    raise ValueError("connection forms must be antisymmetric")

    def entry(self, i, j):
        """1-based access: entry(1, 2) is the form paired with (e1, e2)."""
        return self.omega[i - 1][j - 1]


def connection_forms(entries):
    """Build ConnectionForms from a {(i, j): Form} dict, 1-based upper pairs."""
    grid = [[zero_form(1) for _ in range(5)] for _ in range(5)]
    for (i, j), f in entries.items():
        grid[i - 1][j - 1] = grid[i - 1][j - 1] + f
        grid[j - 1][i - 1] = grid[j - 1][i - 1] - f
    return ConnectionForms(tuple(tuple(row) for row in grid))


@dataclass(frozen=True)
class PointwiseFrameData:
    """Free pointwise values w[i][j](e_k) of an antisymmetric connection.

    Purely algebraic input for randomized identity tests; no integrability
    is implied or required.
    """

    values: tuple  # 5x5x5, values[i][j][k] = w(i,j) evaluated on e_k

    def __post_init__(self):
        v = self.values
        for i in range(5):
            for j in range(5):
                for k in range(5):
                    if v[i][j][k] != -v[j][i][k]:
                        raise ValueError("pointwise data must be antisymmetric in (i, j)")

    def induced_d_table(self):
        """Generator 2-forms from the first structure equation."""
        out = {}
        for i in range(5):
            terms = {}
            for a in range(5):
                for b in range(a + 1, 5):
                    c = self.values[i][b][a] - self.values[i][a][b]
                    if c:
                        terms[(a, b)] = c
            out[f"e{i + 1}"] = form(2, terms)
        return out


def pointwise_from_upper(upper):
    """Fill a full antisymmetric cube from {(i, j, k): value}, 1-based, i < j."""
    cube = [[[Fraction(0)] * 5 for _ in range(5)] for _ in range(5)]
    for (i, j, k), v in upper.items():
        cube[i - 1][j - 1][k - 1] = Fraction(v)
        cube[j - 1][i - 1][k - 1] = -Fraction(v)
    return PointwiseFrameData(tuple(tuple(tuple(r) for r in m) for m in cube))


def _pure_metric_rational(c: CoframeData):
    for sid in METRIC_IDS:
        f = c.d_table[sid]
        if any(i not in METRIC_IDS for i in f.symbols_used()):
            return False
        if any(isinstance(v, TrigScalar) for v in f.terms.values()):
            return False
    return True


def koszul_connection(c: CoframeData) -> ConnectionForms:
    """Levi-Civita connection forms of a pure 5-symbol left-invariant coframe.

    2 w[b][c](e_a) = de_a(e_b, e_c) + de_b(e_a, e_c) - de_c(e_a, e_b).
    """
    if not _pure_metric_rational(c):
        raise UnsupportedSymbolError(
            "closed-form solve needs a metric-only constant coframe; "
            "verify a supplied table instead"
        )
    d = [c.d_table[i] for i in range(5)]
    half = Fraction(1, 2)
    entries = {}
    for b in range(5):
        for cc in range(b + 1, 5):
            terms = {}
            for a in range(5):
                v = (
                    d[a].evaluate(b, cc)
                    + d[b].evaluate(a, cc)
                    - d[cc].evaluate(a, b)
                ) * half
                if v:
                    terms[(a,)] = v
            entries[(b + 1, cc + 1)] = form(1, terms)
    return connection_forms(entries)


def connection_from_structure(c: CoframeData) -> ConnectionForms:
    """Solve the first structure equation for antisymmetric connection forms.

    Works for constant-coefficient coframes that may involve auxiliary
    symbols; the solution, when it exists, is unique by the usual
    Christoffel symmetry argument extended to the enlarged symbol space.
    """
    nsym = c.n_symbols
    pairs = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    unknown = {(p, s): k for k, (p, s) in enumerate((p, s) for p in pairs for s in range(nsym))}
    monos = [(s, t) for s in range(nsym) for t in range(s + 1, nsym)]
    rows, rhs = [], []
    for i in range(5):
        de = c.d_table[i]
        for mono in monos:
            row = [Fraction(0)] * len(unknown)
            # sum_j w[i][j] ^ e_j with w[i][j] = sum_s x[(i,j),s] * s
            for j in range(5):
                if j == i:
                    continue
                p, sign_ij = ((i, j), 1) if i < j else ((j, i), -1)
                for s in range(nsym):
                    if s == j:
                        continue
                    pair = (min(s, j), max(s, j))
                    if pair != mono:
                        continue
                    sign = 1 if s < j else -1
                    row[unknown[(p, s)]] += Fraction(sign_ij * sign)
            rows.append(row)
            rhs.append(de.coefficient(mono))
    try:
        sol = linalg.solve_unique(rows, rhs)
    except ValueError as exc:
        raise RankError(f"structure equation has no unique solution: {exc}") from exc
    entries = {}
    for p in pairs:
        terms = {}
        for s in range(nsym):
            v = sol[unknown[(p, s)]]
            if v:
                terms[(s,)] = v
        entries[(p[0] + 1, p[1] + 1)] = form(1, terms)
    return connection_forms(entries)


@dataclass(frozen=True)
class FirstStructureReport:
    residuals: Mapping[str, Form]
    ok: bool

    @property
    def failing(self):
        return [n for n, f in self.residuals.items() if not f.is_zero()]


def verify_first_structure(c: CoframeData, omega: ConnectionForms, tol_scale=1.0):
    """Residuals de_i - sum_j w[i][j] ^ e_j per metric generator."""
    residuals = {}
    ok = True
    for i in range(5):
        acc = c.d_table[i]
        for j in range(5):
            acc = acc - wedge(omega.omega[i][j], form(1, {(j,): 1}))
        residuals[c.name_of(i)] = acc
        if not acc.is_zero(tol_scale):
            ok = False
    return FirstStructureReport(residuals, ok)


# ---------------------------------------------------------------------------
# canonical 6-dimensional algebras and frame-change certificates


@dataclass(frozen=True)
class CanonicalAlgebra:
    """A 6-generator Lie coframe given by its structure table dg_i = sum c^i_(jk) g_j ^ g_k."""

    tag: str
    d_coeffs: Mapping[int, Mapping[tuple, Fraction]]


def _cyclic(block, coef3):
    """su(2)/sl(2)-type block on (i, j, k): dg_i = -g_j^g_k, dg_j = -g_k^g_i,
    dg_k = coef3 g_i^g_j, stored over sorted monomials."""
    i, j, k = block
    return {
        i: {(j, k): Fraction(-1)},
        j: {(i, k): Fraction(1)},
        k: {(i, j): Fraction(coef3)},
    }


def canonical_algebra(tag: str) -> CanonicalAlgebra:
    """Catalog of target algebras used by the group-identification certificates.

    sl2+sl2 is normalized with dg_3 = 2 g_1 ^ g_2 per block so that all
    certificate frames stay inside the rational/trig scalar tower.
    """
    if tag == "abelian6":
        table = {i: {} for i in range(6)}
    elif tag == "su2+su2":
        table = {**_cyclic((0, 1, 2), -1), **_cyclic((3, 4, 5), -1)}
    elif tag == "sl2+sl2":
        table = {**_cyclic((0, 1, 2), 2), **_cyclic((3, 4, 5), 2)}
    elif tag == "heis5+R":
        table = {i: {} for i in range(6)}
        table[4] = {(0, 1): Fraction(2), (2, 3): Fraction(2)}
    else:
        raise KeyError(f"unknown algebra tag {tag!r}")
    return CanonicalAlgebra(tag, table)


@dataclass(frozen=True)
class FrameChange:
    """Six new 1-forms, ordered to match the target algebra's generators."""

    new_forms: tuple  # 6 Forms over the source coframe symbols


def frame_change_verify(c: CoframeData, fc: FrameChange, target: CanonicalAlgebra, tol_scale=1.0):
    """Check d(new_i) = sum c^i_(jk) new_j ^ new_k exactly.

    Comparing both sides in the source basis is equivalent to re-expressing
    d(new_i) through the new basis because the new forms are verified to be
    linearly independent first (top wedge nonzero).
    """
    if c.n_symbols != 6:
        raise UnsupportedSymbolError("frame changes are defined on 6-symbol coframes")
    if len(fc.new_forms) != 6:
        raise ValueError("need six new forms")
    top = wedge_all(fc.new_forms)
    if top.is_zero(tol_scale):
        raise RankError("new forms are linearly dependent")
    for i in range(6):
        lhs = ext_d(fc.new_forms[i], c)
        rhs = zero_form(2)
        for (j, k), coef in target.d_coeffs.get(i, {}).items():
            rhs = rhs + wedge(fc.new_forms[j], fc.new_forms[k]).scale(coef)
        if not (lhs - rhs).is_zero(tol_scale):
            return False
    return True
