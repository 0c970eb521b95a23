"""The adapted almost contact metric structure and its first-order invariants.

The frame is adapted: the fundamental 2-form is e1^e2 + e3^e4, the Reeb
form is e5, and the endomorphism is fixed by phi(e1) = -e2, phi(e2) = e1,
phi(e3) = -e4, phi(e4) = e3, phi(e5) = 0, which is the unique choice with
Phi(X, Y) = g(X, phi(Y)).

Everything here is pointwise multilinear algebra driven by connection
values w[i][j](e_k).  Auxiliary symbols appearing in connection entries are
tracked as independent linear channels; operations that must produce
numbers verify that every channel cancels and raise SymbolicResidueError
otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ACM5Error,
    AmbiguityError,
    NotGeneralizedQuasiSasakiError,
    SymbolicResidueError,
    UnsupportedSymbolError,
)
from .exterior import METRIC_IDS, Form, form, hodge, interior, wedge, zero_form
from .frames import ConnectionForms, PointwiseFrameData
from .scalars import TrigScalar, sadd, sis_zero, smul

XI = 4  # 0-based id of the Reeb direction e5

PHI = form(2, {(0, 1): 1, (2, 3): 1})
ETA = form(1, {(4,): 1})
F = form(2, {(0, 1): 1, (2, 3): -1})
Z1 = form(2, {(0, 2): 1, (1, 3): -1})
Z2 = form(2, {(0, 3): 1, (1, 2): 1})
Y1 = form(2, {(0, 2): 1, (1, 3): 1})
Y2 = form(2, {(0, 3): 1, (1, 2): -1})
L24 = tuple(form(2, {(i, 4): 1}) for i in range(4))

# phi matrix: PHI_MAT[i][j] = Phi(e_i, e_j); phi(v)_i = sum_j PHI_MAT[i][j] v_j
PHI_MAT = tuple(
    tuple(PHI.evaluate(i, j) for j in range(5)) for i in range(5)
)


@dataclass(frozen=True)
class AdaptedStructure:
    Phi: Form
    eta: Form
    phi_matrix: tuple
    xi: int  # frame index of the Reeb vector, 1-based


ADAPTED = AdaptedStructure(PHI, ETA, PHI_MAT, 5)

LAMBDA2_BASES = {
    1: (PHI,),
    2: (Z1, Z2),
    3: (F, Y1, Y2),
    4: L24,
}


def inner_form(a: Form, b: Form):
    """Monomial inner product: the wedge monomials are orthonormal."""
    acc = Fraction(0)
    small, large = (a.terms, b.terms) if len(a.terms) <= len(b.terms) else (b.terms, a.terms)
    for idx, c in small.items():
        d = large.get(idx)
        if d is not None:
            acc = sadd(acc, smul(c, d))
    return acc


def _require_metric_2form(beta: Form):
    if beta.degree != 2:
        raise ValueError("need a 2-form")
    if any(i not in METRIC_IDS for i in beta.symbols_used()):
        raise UnsupportedSymbolError("auxiliary symbols have no type decomposition")


def lambda2_project(beta: Form, part: int) -> Form:
    """Orthogonal projection onto the four 2-form types (1: span of the
    fundamental form, 2: primitive phi-anti-invariant, 3: the rest of the
    stabilizer algebra, 4: forms containing the Reeb leg)."""
    _require_metric_2form(beta)
    if part not in LAMBDA2_BASES:
        raise ValueError("part must be 1..4")
    out = zero_form(2)
    for b in LAMBDA2_BASES[part]:
        coef = smul(inner_form(beta, b), Fraction(1) / inner_form(b, b))
        out = out + b.scale(coef)
    return out


def project_u2_complement(beta: Form) -> Form:
    return lambda2_project(beta, 2) + lambda2_project(beta, 4)


def project_u2(beta: Form) -> Form:
    return lambda2_project(beta, 1) + lambda2_project(beta, 3)


def phi_pullback(beta: Form) -> Form:
    """The 2-form (X, Y) -> beta(phi X, phi Y)."""
    _require_metric_2form(beta)
    terms = {}
    for a in range(5):
        for b in range(a + 1, 5):
            v = Fraction(0)
            for u in range(5):
                if PHI_MAT[u][a] == 0:
                    continue
                for w in range(5):
                    if PHI_MAT[w][b] == 0:
                        continue
                    v = sadd(v, smul(smul(PHI_MAT[u][a], PHI_MAT[w][b]), beta.evaluate(u, w)))
            if not sis_zero(v) or isinstance(v, float):
                terms[(a, b)] = v
    return Form(2, terms)


def phi_invariance_type(beta: Form, tol_scale=1.0):
    """+1, -1 or 0 according to beta(phi., phi.) = +beta, -beta or 0."""
    t = phi_pullback(beta)
    if t.is_zero(tol_scale):
        return 0
    if (t - beta).is_zero(tol_scale):
        return 1
    if (t + beta).is_zero(tol_scale):
        return -1
    raise AmbiguityError("2-form mixes invariance types")


# ---------------------------------------------------------------------------
# trilinear tensors, antisymmetric in the last two slots


@dataclass(frozen=True, eq=False)
class Tensor3:
    values: tuple  # 5x5x5 nested tuples

    def get(self, i, j, k):
        """1-based access."""
        return self.values[i - 1][j - 1][k - 1]

    def is_zero(self, tol_scale=1.0):
        return all(
            sis_zero(v, tol_scale) for m in self.values for r in m for v in r
        )

    def __add__(self, other):
        return Tensor3(
            tuple(
                tuple(
                    tuple(sadd(a, b) for a, b in zip(ra, rb))
                    for ra, rb in zip(ma, mb)
                )
                for ma, mb in zip(self.values, other.values)
            )
        )

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, s):
        return Tensor3(
            tuple(
                tuple(tuple(smul(s, v) for v in r) for r in m) for m in self.values
            )
        )

    def __eq__(self, other):
        if not isinstance(other, Tensor3):
            return NotImplemented
        return (self - other).is_zero()

    def inner(self, other):
        acc = Fraction(0)
        for ma, mb in zip(self.values, other.values):
            for ra, rb in zip(ma, mb):
                for a, b in zip(ra, rb):
                    acc = sadd(acc, smul(a, b))
        return acc

    def norm_sq(self):
        return self.inner(self)

    def is_antisymmetric_last_two(self, tol_scale=1.0):
        v = self.values
        return all(
            sis_zero(sadd(v[i][j][k], v[i][k][j]), tol_scale)
            for i in range(5)
            for j in range(5)
            for k in range(5)
        )

    def is_totally_skew(self, tol_scale=1.0):
        v = self.values
        return self.is_antisymmetric_last_two(tol_scale) and all(
            sis_zero(sadd(v[i][j][k], v[j][i][k]), tol_scale)
            for i in range(5)
            for j in range(5)
            for k in range(5)
        )

    def component_form(self, i):
        """The 2-form of the (1-based) first-slot direction i."""
        terms = {}
        for a in range(5):
            for b in range(a + 1, 5):
                c = self.values[i - 1][a][b]
                if not sis_zero(c) or isinstance(c, float):
                    terms[(a, b)] = c
        return Form(2, terms)


def t3_from_func(fn):
    return Tensor3(
        tuple(
            tuple(tuple(fn(i, j, k) for k in range(5)) for j in range(5))
            for i in range(5)
        )
    )


ZERO3 = t3_from_func(lambda i, j, k: Fraction(0))


def t3_from_form3(rho: Form) -> Tensor3:
    return t3_from_func(lambda i, j, k: rho.evaluate(i, j, k))


def form2_matrix(beta: Form):
    return tuple(tuple(beta.evaluate(i, j) for j in range(5)) for i in range(5))


def theta(beta: Form) -> Tensor3:
    """The totally skew tensor carrying the star of a 2-form."""
    _require_metric_2form(beta)
    return t3_from_form3(hodge(beta))


def vartheta(beta: Form) -> Tensor3:
    """3 eta (x) beta minus the star of beta, as a trilinear tensor."""
    _require_metric_2form(beta)
    star = hodge(beta)
    return t3_from_func(
        lambda i, j, k: sadd(
            smul(Fraction(3) if i == XI else Fraction(0), beta.evaluate(j, k)),
            smul(Fraction(-1), star.evaluate(i, j, k)),
        )
    )


def pr_w(a: Tensor3) -> Tensor3:
    """Project each first-slot 2-form onto the complement of the stabilizer algebra."""
    comps = [project_u2_complement(a.component_form(i)) for i in range(1, 6)]
    return t3_from_func(lambda i, j, k: comps[i].evaluate(j, k))


# ---------------------------------------------------------------------------
# connection values with auxiliary channels


@dataclass(frozen=True)
class FrameConnection:
    """Pointwise connection values w[i][j](e_k), plus one constant matrix per
    auxiliary symbol tracking its (unknown) frame values linearly."""

    base: tuple  # 5x5x5
    channels: tuple  # ((aux_id, 5x5 matrix), ...)

    def channel_items(self):
        return self.channels


def _empty_cube():
    return [[[Fraction(0)] * 5 for _ in range(5)] for _ in range(5)]


def frame_connection(source) -> FrameConnection:
    if isinstance(source, FrameConnection):
        return source
    if isinstance(source, PointwiseFrameData):
        return FrameConnection(source.values, ())
    if isinstance(source, ConnectionForms):
        cube = _empty_cube()
        chans = {}
        for i in range(5):
            for j in range(5):
                f = source.omega[i][j]
                for (sid,), coef in f.terms.items():
                    if isinstance(coef, TrigScalar):
                        raise UnsupportedSymbolError("trig-valued connection entries are out of scope")
                    if sid in METRIC_IDS:
                        for k in range(5):
                            if sid == k:
                                cube[i][j][k] = coef
                    else:
                        chans.setdefault(sid, [[Fraction(0)] * 5 for _ in range(5)])
                        chans[sid][i][j] = coef
        base = tuple(tuple(tuple(r) for r in m) for m in cube)
        channels = tuple(
            (sid, tuple(tuple(r) for r in mat)) for sid, mat in sorted(chans.items())
        )
        return FrameConnection(base, channels)
    raise TypeError(f"cannot build frame connection from {source!r}")


def _mu(matrix):
    """Action of a so(5) element on the fundamental form:
    mu(C)(a, b) = sum_i C[i][a] Phi(i, b) - C[i][b] Phi(i, a)."""
    out = [[Fraction(0)] * 5 for _ in range(5)]
    for a in range(5):
        for b in range(5):
            acc = Fraction(0)
            for i in range(5):
                acc = sadd(acc, smul(matrix[i][a], PHI_MAT[i][b]))
                acc = sadd(acc, smul(Fraction(-1), smul(matrix[i][b], PHI_MAT[i][a])))
            out[a][b] = acc
    return out


def _matrix_is_zero(m, tol_scale=1.0):
    return all(sis_zero(v, tol_scale) for r in m for v in r)


def _require_channels_stabilize_phi(fc: FrameConnection, what, tol_scale=1.0):
    for sid, mat in fc.channel_items():
        if not _matrix_is_zero(_mu(mat), tol_scale):
            raise SymbolicResidueError(
                f"auxiliary symbol id {sid} leaves a residue in {what}"
            )


def _require_channels_fix_xi(fc: FrameConnection, what, tol_scale=1.0):
    for sid, mat in fc.channel_items():
        if any(not sis_zero(mat[XI][a], tol_scale) for a in range(5)):
            raise SymbolicResidueError(
                f"auxiliary symbol id {sid} leaves a residue in {what}"
            )


# -- base-path tensors -------------------------------------------------------


def nabla_xi_matrix(fc: FrameConnection, tol_scale=1.0):
    """NX[k][a] = g(nabla_{e_k} xi, e_a)."""
    _require_channels_fix_xi(fc, "nabla xi", tol_scale)
    w = fc.base
    return tuple(tuple(w[XI][a][k] for a in range(5)) for k in range(5))


def d_eta_form(fc: FrameConnection, tol_scale=1.0) -> Form:
    nx = nabla_xi_matrix(fc, tol_scale)
    terms = {}
    for a in range(5):
        for b in range(a + 1, 5):
            v = sadd(nx[a][b], smul(Fraction(-1), nx[b][a]))
            if not sis_zero(v) or isinstance(v, float):
                terms[(a, b)] = v
    return Form(2, terms)


def xi_is_killing(fc: FrameConnection, tol_scale=1.0):
    nx = nabla_xi_matrix(fc, tol_scale)
    return all(
        sis_zero(sadd(nx[a][b], nx[b][a]), tol_scale)
        for a in range(5)
        for b in range(5)
    )


def nabla_phi(source, tol_scale=1.0) -> Tensor3:
    """(nabla_X Phi)(Y, Z) from connection values; the stabilizer part of the
    connection drops out, and auxiliary channels are required to cancel.

    Computed from the full connection 2-forms and, independently, from
    their projection to the complement of the stabilizer; both paths must
    agree by equivariance and are asserted equal.
    """
    fc = frame_connection(source)
    _require_channels_stabilize_phi(fc, "nabla Phi", tol_scale)
    w = fc.base

    def np_full(k, a, b):
        acc = Fraction(0)
        for i in range(5):
            acc = sadd(acc, smul(w[i][a][k], PHI_MAT[i][b]))
            acc = sadd(acc, smul(Fraction(-1), smul(w[i][b][k], PHI_MAT[i][a])))
        return acc

    full = t3_from_func(np_full)

    gammas = [project_u2_complement(_omega_form(w, k)) for k in range(5)]

    def np_gamma(k, a, b):
        acc = Fraction(0)
        for i in range(5):
            acc = sadd(acc, smul(gammas[k].evaluate(i, a), PHI_MAT[i][b]))
            acc = sadd(acc, smul(Fraction(-1), smul(gammas[k].evaluate(i, b), PHI_MAT[i][a])))
        return acc

    via_gamma = t3_from_func(np_gamma)
    if not (full - via_gamma).is_zero(tol_scale):
        raise ACM5Error("internal consistency: the two derivative paths disagree")
    return full


def _omega_form(w, k) -> Form:
    terms = {}
    for i in range(5):
        for j in range(i + 1, 5):
            v = w[i][j][k]
            if not sis_zero(v) or isinstance(v, float):
                terms[(i, j)] = v
    return Form(2, terms)


def d_phi_tensor(np: Tensor3) -> Tensor3:
    v = np.values
    return t3_from_func(
        lambda a, b, c: sadd(
            sadd(v[a][b][c], smul(Fraction(-1), v[b][a][c])), v[c][a][b]
        )
    )


def nijenhuis(source, tol_scale=1.0) -> Tensor3:
    """Nijenhuis tensor, computed through the derivative of the fundamental
    form and cross-checked against the covariant commutator expression."""
    fc = frame_connection(source)
    np = nabla_phi(fc, tol_scale).values
    nx = nabla_xi_matrix(fc, tol_scale)
    deta = tuple(
        tuple(sadd(nx[a][b], smul(Fraction(-1), nx[b][a])) for b in range(5))
        for a in range(5)
    )
    P = PHI_MAT

    def n_via_np(x, y, z):
        acc = Fraction(0)
        for u in range(5):
            if P[u][y] != 0:
                acc = sadd(acc, smul(P[u][y], np[u][x][z]))
            if P[u][z] != 0:
                acc = sadd(acc, smul(Fraction(-1), smul(P[u][z], np[u][x][y])))
            if P[u][x] != 0:
                acc = sadd(acc, smul(P[u][x], sadd(np[y][u][z], smul(Fraction(-1), np[z][u][y]))))
        if x == XI:
            for u in range(5):
                if P[u][z] != 0:
                    acc = sadd(acc, smul(P[u][z], np[y][XI][u]))
                if P[u][y] != 0:
                    acc = sadd(acc, smul(Fraction(-1), smul(P[u][y], np[z][XI][u])))
        return acc

    first = t3_from_func(n_via_np)

    # covariant path: g(X, [phi, phi](Y, Z)) + eta(X) d eta(Y, Z)
    # nf[a][b][c] = component c of (nabla_{e_a} phi)(e_b) = np[a][c][b]
    def cov(x, y, z):
        acc = Fraction(0)
        for u in range(5):
            if P[u][y] != 0:
                acc = sadd(acc, smul(P[u][y], np[u][x][z]))
            if P[u][z] != 0:
                acc = sadd(acc, smul(Fraction(-1), smul(P[u][z], np[u][x][y])))
        # + g(x, phi((nabla_Z phi)(Y) - (nabla_Y phi)(Z)))
        for u in range(5):
            if P[x][u] == 0:
                continue
            acc = sadd(
                acc,
                smul(P[x][u], sadd(np[z][u][y], smul(Fraction(-1), np[y][u][z]))),
            )
        if x == XI:
            acc = sadd(acc, deta[y][z])
        return acc

    second = t3_from_func(cov)
    if not (first - second).is_zero(tol_scale):
        raise ACM5Error("internal consistency: Nijenhuis expressions disagree")
    return first


def gamma_form(source, tol_scale=1.0) -> Form:
    """The 2-form gamma(X, Y) = dPhi(xi, phi X, Y) = N(phi X, phi Y, xi).

    Defined on generalized quasi-Sasaki structures; both expressions are
    evaluated and must agree.
    """
    fc = frame_connection(source)
    if not predicates(fc, tol_scale).generalized_quasi_sasaki:
        raise NotGeneralizedQuasiSasakiError("structure is not generalized quasi-Sasaki")
    np = nabla_phi(fc, tol_scale)
    dphi = d_phi_tensor(np).values
    nij = nijenhuis(fc, tol_scale).values
    P = PHI_MAT
    terms = {}
    for x in range(5):
        for y in range(x + 1, 5):
            v1 = Fraction(0)
            for u in range(5):
                if P[u][x] != 0:
                    v1 = sadd(v1, smul(P[u][x], dphi[XI][u][y]))
            v2 = Fraction(0)
            for u in range(5):
                if P[u][x] == 0:
                    continue
                for w in range(5):
                    if P[w][y] == 0:
                        continue
                    v2 = sadd(v2, smul(smul(P[u][x], P[w][y]), nij[u][w][XI]))
            if not sis_zero(sadd(v1, smul(Fraction(-1), v2)), tol_scale):
                raise NotGeneralizedQuasiSasakiError("gamma expressions disagree")
            if not sis_zero(v1) or isinstance(v1, float):
                terms[(x, y)] = v1
    return Form(2, terms)


def covariant_derivative_form(fc: FrameConnection, alpha: Form, k: int) -> Form:
    """(nabla_{e_k} alpha) for a metric-symbol form, from the base values.

    nabla acts as a derivation, replacing each monomial slot s by
    sum_j w[s][j](e_k) e_j.
    """
    w = fc.base
    out = zero_form(alpha.degree)
    for idx, coef in alpha.terms.items():
        for pos, sym in enumerate(idx):
            for j in range(5):
                v = w[sym][j][k]
                if sis_zero(v) and not isinstance(v, float):
                    continue
                new = list(idx)
                new[pos] = j
                sign = _sort_sign(new)
                if sign == 0:
                    continue
                mono = tuple(sorted(new))
                out = out + Form(alpha.degree, {mono: smul(coef, smul(Fraction(sign), v))})
    return out


def _sort_sign(ids):
    ids = list(ids)
    if len(set(ids)) != len(ids):
        return 0
    sign = 1
    for i in range(len(ids)):
        for j in range(i + 1, len(ids)):
            if ids[i] > ids[j]:
                sign = -sign
    return sign


def codifferential(alpha: Form, source, tol_scale=1.0) -> Form:
    """delta alpha = - sum_i e_i . nabla_{e_i} alpha."""
    if any(i not in METRIC_IDS for i in alpha.symbols_used()):
        raise UnsupportedSymbolError("codifferential needs a metric-symbol form")
    if alpha.degree == 0:
        return zero_form(0)
    fc = frame_connection(source)
    for sid, mat in fc.channel_items():
        if not _channel_kills_form(mat, alpha, tol_scale):
            raise SymbolicResidueError(
                f"auxiliary symbol id {sid} leaves a residue in the codifferential"
            )
    out = zero_form(alpha.degree - 1)
    for i in range(5):
        na = covariant_derivative_form(fc, alpha, i)
        out = out - interior(i + 1, na)
    return out


def _channel_kills_form(mat, alpha: Form, tol_scale=1.0):
    """True when the constant so(5) channel acts trivially on the form."""
    acted = zero_form(alpha.degree)
    for idx, coef in alpha.terms.items():
        for pos, sym in enumerate(idx):
            for j in range(5):
                v = mat[sym][j]
                if sis_zero(v):
                    continue
                new = list(idx)
                new[pos] = j
                sign = _sort_sign(new)
                if sign == 0:
                    continue
                mono = tuple(sorted(new))
                acted = acted + Form(alpha.degree, {mono: smul(coef, smul(Fraction(sign), v))})
    return acted.is_zero(tol_scale)


def d_form_via_connection(fc: FrameConnection, alpha: Form, tol_scale=1.0) -> Form:
    """d alpha = sum_i e_i ^ nabla_{e_i} alpha (valid for torsion-free values)."""
    for sid, mat in fc.channel_items():
        if not _channel_kills_form(mat, alpha, tol_scale):
            raise SymbolicResidueError(
                f"auxiliary symbol id {sid} leaves a residue in the differential"
            )
    out = zero_form(alpha.degree + 1)
    for i in range(5):
        na = covariant_derivative_form(fc, alpha, i)
        out = out + wedge(form(1, {(i,): 1}), na)
    return out


@dataclass(frozen=True)
class Predicates:
    normal: bool
    semi_cosymplectic: bool
    almost_cosymplectic: bool
    cosymplectic: bool
    quasi_sasaki: bool
    nearly_cosymplectic: bool
    quasi_cosymplectic: bool
    generalized_quasi_sasaki: bool
    xi_killing: bool

    def as_dict(self):
        return {
            "normal": self.normal,
            "semi_cosymplectic": self.semi_cosymplectic,
            "almost_cosymplectic": self.almost_cosymplectic,
            "cosymplectic": self.cosymplectic,
            "quasi_sasaki": self.quasi_sasaki,
            "nearly_cosymplectic": self.nearly_cosymplectic,
            "quasi_cosymplectic": self.quasi_cosymplectic,
            "generalized_quasi_sasaki": self.generalized_quasi_sasaki,
            "xi_killing": self.xi_killing,
        }


def predicates(source, tol_scale=1.0) -> Predicates:
    """All named structure predicates, each from its defining tensor equation."""
    fc = frame_connection(source)
    np = nabla_phi(fc, tol_scale)
    npv = np.values
    nij = nijenhuis(fc, tol_scale)
    nijv = nij.values
    dphi = d_phi_tensor(np)
    dphiv = dphi.values
    deta = d_eta_form(fc, tol_scale)
    killing = xi_is_killing(fc, tol_scale)
    nx = nabla_xi_matrix(fc, tol_scale)
    P = PHI_MAT

    normal = nij.is_zero(tol_scale)
    delta_eta = Fraction(0)
    for i in range(5):
        delta_eta = sadd(delta_eta, smul(Fraction(-1), nx[i][i]))
    delta_phi = [Fraction(0)] * 5
    for b in range(5):
        acc = Fraction(0)
        for i in range(5):
            acc = sadd(acc, smul(Fraction(-1), npv[i][i][b]))
        delta_phi[b] = acc
    semi = sis_zero(delta_eta, tol_scale) and all(sis_zero(v, tol_scale) for v in delta_phi)
    almost = dphi.is_zero(tol_scale) and deta.is_zero(tol_scale)
    nearly = all(
        sis_zero(sadd(npv[a][c][b], npv[b][c][a]), tol_scale)
        for a in range(5)
        for b in range(5)
        for c in range(5)
    )

    def quasi_cos_lhs(a, b, c):
        # g((nabla_a phi) e_b, e_c) + g((nabla_{phi a} phi)(phi e_b), e_c)
        acc = npv[a][c][b]
        for u in range(5):
            if P[u][a] == 0:
                continue
            for w in range(5):
                if P[w][b] == 0:
                    continue
                acc = sadd(acc, smul(smul(P[u][a], P[w][b]), npv[u][c][w]))
        return acc

    def quasi_cos_rhs(a, b, c):
        if b != XI:
            return Fraction(0)
        acc = Fraction(0)
        for u in range(5):
            if P[u][a] == 0:
                continue
            acc = sadd(acc, smul(P[u][a], nx[u][c]))
        return acc

    quasi_cos = all(
        sis_zero(sadd(quasi_cos_lhs(a, b, c), smul(Fraction(-1), quasi_cos_rhs(a, b, c))), tol_scale)
        for a in range(5)
        for b in range(5)
        for c in range(5)
    )

    horiz = range(4)
    gqs = (
        killing
        and all(
            sis_zero(nijv[x][y][z], tol_scale) and sis_zero(dphiv[x][y][z], tol_scale)
            for x in horiz
            for y in horiz
            for z in horiz
        )
    )
    almost_and_normal = normal and almost
    quasi = normal and dphi.is_zero(tol_scale)
    return Predicates(
        normal=normal,
        semi_cosymplectic=semi,
        almost_cosymplectic=almost,
        cosymplectic=almost_and_normal,
        quasi_sasaki=quasi,
        nearly_cosymplectic=nearly,
        quasi_cosymplectic=quasi_cos,
        generalized_quasi_sasaki=gqs,
        xi_killing=killing,
    )
