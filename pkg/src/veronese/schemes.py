"""Zero-dimensional subschemes of P^m and their degree-d interpolation data.

Four component kinds are supported:

* ``Reduced``       a single rational point;
* ``Jet``           a connected curvilinear component of degree k, stored as
                    the first k coefficient vectors of a parametrized smooth
                    curve germ c(t) = c0 + c1 t + ... (c0 != 0, c1 independent
                    of c0); the scheme is the length-k divisor at t = 0;
* ``FatPoint``      the (k-1)-st infinitesimal neighborhood of a point, cut
                    out by the k-th power of the point's ideal;
* ``TwoThreePoint`` the degree 2m+1 scheme attached to a point Q on a line L,
                    cut out by (I_Q)^3 + (I_L)^2; it sits between the double
                    and the triple point of Q.

Jets make spans computable in exact arithmetic: the rows spanned by the
degree-d image of a length-k jet are the t^0..t^(k-1) coefficients of
(c(t) . x)^d.  Conditions matrices collect the dual functionals (point
evaluation, jet coefficient extraction, derivatives at fat points), and
h1 = degree - rank measures the failure to impose independent conditions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .errors import InputError, UnsupportedComponentError
from .forms import (
    LinearForm,
    MultiIndex,
    monomial_basis,
    multinomial,
    power_expand,
    rat_from_str,
    rat_to_str,
)
from .rationalla import QMatrix, _q, kernel_basis, membership_solve, rank_exact

Vector = Tuple[Fraction, ...]


def _vec(xs: Sequence) -> Vector:
    return tuple(_q(x) for x in xs)


def _dependent(u: Sequence[Fraction], v: Sequence[Fraction]) -> bool:
    return rank_exact(QMatrix.from_rows([u, v])) <= 1


def _proportional(u: Sequence[Fraction], v: Sequence[Fraction]) -> bool:
    """Projective equality of nonzero vectors."""
    return _dependent(u, v)


@dataclass(frozen=True)
class Reduced:
    point: Vector

    def __post_init__(self):
        if all(c == 0 for c in self.point):
            raise InputError("reduced point must be nonzero")

    @property
    def support(self) -> Vector:
        return self.point

    def degree(self, m: int) -> int:
        return 1


@dataclass(frozen=True)
class Jet:
    curve: tuple[Vector, ...]

    def __post_init__(self):
        if len(self.curve) < 2:
            raise InputError("jet needs length >= 2 (use Reduced for length 1)")
        c0, c1 = self.curve[0], self.curve[1]
        if all(c == 0 for c in c0):
            raise InputError("jet support c0 must be nonzero")
        if _dependent(c0, c1):
            raise InputError("jet needs c1 independent of c0 (smooth germ)")

    @property
    def length(self) -> int:
        return len(self.curve)

    @property
    def support(self) -> Vector:
        return self.curve[0]

    def degree(self, m: int) -> int:
        return self.length


@dataclass(frozen=True)
class FatPoint:
    point: Vector
    multiplicity: int

    def __post_init__(self):
        if all(c == 0 for c in self.point):
            raise InputError("fat point support must be nonzero")
        if self.multiplicity < 2:
            raise InputError("fat point multiplicity must be >= 2")

    @property
    def support(self) -> Vector:
        return self.point

    def degree(self, m: int) -> int:
        return comb(m + self.multiplicity - 1, m)


@dataclass(frozen=True)
class TwoThreePoint:
    point: Vector
    direction: Vector

    def __post_init__(self):
        if all(c == 0 for c in self.point):
            raise InputError("support must be nonzero")
        if _dependent(self.point, self.direction):
            raise InputError("line direction must be independent of the point")

    @property
    def support(self) -> Vector:
        return self.point

    def degree(self, m: int) -> int:
        return 2 * m + 1


Component = Union[Reduced, Jet, FatPoint, TwoThreePoint]


@dataclass(frozen=True)
class SchemeSpec:
    """A disjoint union of components in P^m (supports pairwise distinct).

    The empty scheme is allowed; residual splitting produces it naturally.
    """

    m: int
    components: tuple[Component, ...]

    def __post_init__(self):
        if self.m < 1:
            raise InputError("ambient dimension m must be >= 1")
        for i, comp in enumerate(self.components):
            vecs = comp.curve if isinstance(comp, Jet) else (comp.support,)
            if isinstance(comp, TwoThreePoint):
                vecs = (comp.point, comp.direction)
            for v in vecs:
                if len(v) != self.m + 1:
                    raise InputError(
                        f"component {i}: coordinate length {len(v)} != m+1"
                    )
        sups = [c.support for c in self.components]
        for i in range(len(sups)):
            for j in range(i + 1, len(sups)):
                if _proportional(sups[i], sups[j]):
                    raise InputError(f"components {i} and {j} share a support")


@dataclass(frozen=True)
class Hyperplane:
    coeffs: Vector

    def __post_init__(self):
        if all(c == 0 for c in self.coeffs):
            raise InputError("hyperplane must be nonzero")

    @property
    def m(self) -> int:
        return len(self.coeffs) - 1

    def contains(self, point: Sequence[Fraction]) -> bool:
        return sum(a * b for a, b in zip(self.coeffs, point)) == 0


def scheme_degree(Z: SchemeSpec) -> int:
    return sum(c.degree(Z.m) for c in Z.components)


# ---------------------------------------------------------------------------
# truncated power series in the jet parameter t


def _tmul(a: List[Fraction], b: List[Fraction], cap: int) -> List[Fraction]:
    out = [Fraction(0)] * cap
    for i, ai in enumerate(a):
        if ai == 0 or i >= cap:
            continue
        for j, bj in enumerate(b):
            if i + j >= cap:
                break
            if bj != 0:
                out[i + j] += ai * bj
    return out


def _monomial_on_curve(beta: MultiIndex, curve: Sequence[Vector], cap: int):
    """Coefficients of t^0..t^(cap-1) in prod_i (coordinate_i(t))^beta_i."""
    out = [Fraction(0)] * cap
    out[0] = Fraction(1)
    for i, b in enumerate(beta):
        if b == 0:
            continue
        coord = [cv[i] for cv in curve]
        for _ in range(b):
            out = _tmul(out, coord, cap)
    return out


def _jet_span_block(m: int, curve: Sequence[Vector], length: int, d: int):
    """First `length` span rows of a jet: [t^j] (c(t).x)^d for j < length."""
    basis = monomial_basis(m, d)
    rows = [[Fraction(0)] * len(basis) for _ in range(length)]
    for col, alpha in enumerate(basis):
        mult = multinomial(d, alpha)
        tp = _monomial_on_curve(alpha, curve, length)
        for j in range(length):
            if tp[j] != 0:
                rows[j][col] = mult * tp[j]
    return rows


def _jet_condition_block(m: int, curve: Sequence[Vector], length: int, d: int):
    """Functionals F -> [t^j] F(c(t)) for j < length, as rows over the basis."""
    basis = monomial_basis(m, d)
    rows = [[Fraction(0)] * len(basis) for _ in range(length)]
    for col, beta in enumerate(basis):
        tp = _monomial_on_curve(beta, curve, length)
        for j in range(length):
            rows[j][col] = tp[j]
    return rows


def _span_block(m: int, comp: Component, d: int):
    if isinstance(comp, Reduced):
        return [list(power_expand(LinearForm(m, comp.point), d).coeffs)]
    if isinstance(comp, Jet):
        return _jet_span_block(m, comp.curve, comp.length, d)
    raise UnsupportedComponentError(
        f"span is defined for curvilinear components only, got {type(comp).__name__}"
    )


def span_matrix(Z: SchemeSpec, d: int) -> QMatrix:
    """Rows spanning the degree-d image of a curvilinear scheme."""
    if d < 1:
        raise InputError("span_matrix needs d >= 1")
    ncols = comb(Z.m + d, Z.m)
    rows: list = []
    for comp in Z.components:
        rows.extend(_span_block(Z.m, comp, d))
    if not rows:
        return QMatrix(0, ncols, ())
    return QMatrix.from_rows(rows)


def _chart_index(point: Vector) -> int:
    best, best_abs = 0, abs(point[0])
    for i, c in enumerate(point):
        if abs(c) > best_abs:
            best, best_abs = i, abs(c)
    return best


def _fat_condition_block(m: int, point: Vector, k: int, d: int):
    """Derivative functionals of order < k at the point, taken in the affine
    chart where the largest coordinate is normalized to 1."""
    chart = _chart_index(point)
    pt = tuple(c / point[chart] for c in point)
    basis = monomial_basis(m, d)
    rows = []
    # gamma ranges over exponents on the m non-chart variables, |gamma| < k.
    for j in range(k):
        for gam_red in monomial_basis(m - 1, j) if m >= 1 else ():
            gamma = list(gam_red[:chart]) + [0] + list(gam_red[chart:])
            row = []
            for beta in basis:
                if any(b < g for b, g in zip(beta, gamma)):
                    row.append(Fraction(0))
                    continue
                fac = 1
                for b, g in zip(beta, gamma):
                    for s in range(g):
                        fac *= b - s
                val = Fraction(fac)
                for p, b, g in zip(pt, beta, gamma):
                    if b - g:
                        val *= p ** (b - g)
                row.append(val)
            rows.append(row)
    return rows


def _directional_row(m: int, d: int, dirs: Sequence[Vector], point: Vector):
    """Functional F -> (D_{u1} ... D_{ur} F)(point) over the degree-d basis."""
    basis = monomial_basis(m, d)
    row = []
    for beta in basis:
        poly: Dict[MultiIndex, Fraction] = {beta: Fraction(1)}
        for u in dirs:
            nxt: Dict[MultiIndex, Fraction] = {}
            for e, c in poly.items():
                for i, ui in enumerate(u):
                    if ui == 0 or e[i] == 0:
                        continue
                    e2 = tuple(x - (1 if idx == i else 0) for idx, x in enumerate(e))
                    nxt[e2] = nxt.get(e2, Fraction(0)) + c * e[i] * ui
            poly = nxt
        val = Fraction(0)
        for e, c in poly.items():
            v = c
            for p, a in zip(point, e):
                if a:
                    v *= p**a
            val += v
        row.append(val)
    return row


def _complete_basis(m: int, vectors: List[Vector]) -> List[Vector]:
    """Greedily extend given independent vectors to a basis of K^(m+1)
    using standard basis vectors, in index order."""
    chosen = list(vectors)
    for i in range(m + 1):
        if len(chosen) == m + 1:
            break
        e = tuple(Fraction(int(j == i)) for j in range(m + 1))
        if rank_exact(QMatrix.from_rows(chosen + [e])) > len(chosen):
            chosen.append(e)
    if len(chosen) != m + 1:
        raise InputError("could not complete to a basis")
    return chosen


def _two_three_condition_block(m: int, comp: TwoThreePoint, d: int):
    """The 2m+1 functionals dual to the local quotient basis of
    (I_Q)^3 + (I_L)^2 in coordinates adapted to (Q, line through Q)."""
    Q, V = comp.point, comp.direction
    basis_vs = _complete_basis(m, [Q, V])
    ws = basis_vs[2:]
    functionals: List[tuple] = [(), (V,), (V, V)]
    for w in ws:
        functionals.append((w,))
        functionals.append((V, w))
    return [_directional_row(m, d, dirs, Q) for dirs in functionals]


def conditions_matrix(Z: SchemeSpec, d: int) -> QMatrix:
    """Linear functionals on degree-d forms cutting out the forms through Z.

    One block per component: evaluation for reduced points, jet coefficient
    extraction, derivatives of order < k for fat points, and the adapted
    derivative functionals for (2,3)-points.
    """
    if d < 1:
        raise InputError("conditions_matrix needs d >= 1")
    ncols = comb(Z.m + d, Z.m)
    rows: list = []
    for comp in Z.components:
        if isinstance(comp, Reduced):
            basis = monomial_basis(Z.m, d)
            row = []
            for beta in basis:
                v = Fraction(1)
                for p, b in zip(comp.point, beta):
                    if b:
                        v *= p**b
                row.append(v)
            rows.append(row)
        elif isinstance(comp, Jet):
            rows.extend(_jet_condition_block(Z.m, comp.curve, comp.length, d))
        elif isinstance(comp, FatPoint):
            rows.extend(_fat_condition_block(Z.m, comp.point, comp.multiplicity, d))
        elif isinstance(comp, TwoThreePoint):
            rows.extend(_two_three_condition_block(Z.m, comp, d))
        else:  # pragma: no cover
            raise UnsupportedComponentError(type(comp).__name__)
    if not rows:
        return QMatrix(0, ncols, ())
    return QMatrix.from_rows(rows)


def h1(Z: SchemeSpec, d: int) -> int:
    """Superabundance of the degree-d interpolation problem: deg - rank."""
    return scheme_degree(Z) - rank_exact(conditions_matrix(Z, d))


def _component_caps(Z: SchemeSpec) -> list[int]:
    caps = []
    for comp in Z.components:
        if isinstance(comp, Reduced):
            caps.append(1)
        elif isinstance(comp, Jet):
            caps.append(comp.length)
        else:
            raise UnsupportedComponentError(
                "subscheme enumeration needs curvilinear components"
            )
    return caps


def proper_subscheme_choices(Z: SchemeSpec) -> list[tuple[int, ...]]:
    """Truncation-length tuples for every proper subscheme of a curvilinear
    scheme, the full scheme excluded; count = prod(k_i + 1) - 1."""
    caps = _component_caps(Z)
    out: list[tuple[int, ...]] = [()]
    for cap in caps:
        out = [c + (a,) for c in out for a in range(cap + 1)]
    full = tuple(caps)
    return [c for c in out if c != full]


def proper_subscheme_spans(Z: SchemeSpec, d: int) -> list[QMatrix]:
    """Span matrix of each proper subscheme (jets truncate row by row)."""
    if d < 1:
        raise InputError("proper_subscheme_spans needs d >= 1")
    ncols = comb(Z.m + d, Z.m)
    blocks = [_span_block(Z.m, comp, d) for comp in Z.components]
    out = []
    for choice in proper_subscheme_choices(Z):
        rows: list = []
        for block, a in zip(blocks, choice):
            rows.extend(block[:a])
        out.append(QMatrix.from_rows(rows) if rows else QMatrix(0, ncols, ()))
    return out


def hyperplane_basis(H: Hyperplane) -> QMatrix:
    """Deterministic m x (m+1) matrix whose rows span the hyperplane."""
    vecs = kernel_basis(QMatrix.from_rows([H.coeffs]))
    return QMatrix.from_rows(vecs)


def _trace_coordinates(K: QMatrix, point: Vector) -> Vector:
    c = membership_solve(K, point)
    if c is None:  # pragma: no cover - callers check containment first
        raise InputError("point does not lie on the hyperplane")
    return tuple(c)


def residual_trace_split(
    Z: SchemeSpec, H: Hyperplane
) -> tuple[SchemeSpec, SchemeSpec]:
    """Split Z into its residual with respect to H and its trace on H.

    Components off H move unchanged into the residual.  A reduced point on H
    disappears from the residual; a fat point of multiplicity k on H drops to
    multiplicity k-1 (a reduced point when k-1 = 1).  The trace collects the
    components supported on H, re-expressed in intrinsic coordinates of
    H = P^(m-1): reduced points stay reduced, fat points keep their
    multiplicity.  Jets and (2,3)-points meeting H are not handled.
    """
    if H.m != Z.m:
        raise InputError("hyperplane/scheme ambient mismatch")
    if Z.m < 2:
        raise InputError("residual split needs m >= 2")
    K = hyperplane_basis(H)
    res: list[Component] = []
    tra: list[Component] = []
    for i, comp in enumerate(Z.components):
        on_h = H.contains(comp.support)
        if not on_h:
            res.append(comp)
            continue
        if isinstance(comp, Reduced):
            tra.append(Reduced(_trace_coordinates(K, comp.point)))
        elif isinstance(comp, FatPoint):
            k = comp.multiplicity
            if k - 1 == 1:
                res.append(Reduced(comp.point))
            else:
                res.append(FatPoint(comp.point, k - 1))
            tpt = _trace_coordinates(K, comp.point)
            tra.append(FatPoint(tpt, k))
        else:
            raise UnsupportedComponentError(
                f"component {i} ({type(comp).__name__}) meets the hyperplane"
            )
    return SchemeSpec(Z.m, tuple(res)), SchemeSpec(Z.m - 1, tuple(tra))


def castelnuovo_check(Z: SchemeSpec, H: Hyperplane, d: int) -> bool:
    """Exactness self-test: h1(Z, d) <= h1(Res_H Z, d-1) + h1(Z on H, d).

    The inequality is a theorem (long exact sequence of the residual
    sequence), so this must return True on every valid input.
    """
    if d < 2:
        raise InputError("castelnuovo_check needs d >= 2")
    res, tra = residual_trace_split(Z, H)
    return h1(Z, d) <= h1(res, d - 1) + h1(tra, d)


def lgp_check(Z: SchemeSpec) -> bool:
    """Linearly general position: every hyperplane meets Z in degree <= m.

    Checked exactly by requiring every degree-(m+1) subscheme (truncation
    choices across components) to be linearly independent in degree 1.
    """
    caps = _component_caps(Z)
    m = Z.m
    target = m + 1
    if sum(caps) < target:
        return True
    blocks = []
    for comp in Z.components:
        if isinstance(comp, Reduced):
            blocks.append([list(comp.point)])
        else:
            blocks.append([list(v) for v in comp.curve])

    def rec(i: int, remaining: int, rows: list) -> bool:
        if remaining == 0:
            return rank_exact(QMatrix.from_rows(rows)) == target
        if i == len(blocks):
            return True
        lo = max(0, remaining - sum(caps[i + 1 :]))
        hi = min(caps[i], remaining)
        for a in range(lo, hi + 1):
            if not rec(i + 1, remaining - a, rows + blocks[i][:a]):
                return False
        return True

    return rec(0, target, [])


def reparametrize_jet(jet: Jet, u, v) -> Jet:
    """Replace the jet parameter t by u*t + v*t^2 (u != 0), truncated to the
    jet length.  The underlying scheme, hence the span row space, is
    unchanged."""
    u, v = _q(u), _q(v)
    if u == 0:
        raise InputError("reparametrization needs u != 0")
    k = jet.length
    phi = [Fraction(0), u, v]
    power = [Fraction(1)] + [Fraction(0)] * (k - 1)
    new_coords = [[Fraction(0)] * k for _ in range(len(jet.curve[0]))]
    for j, cj in enumerate(jet.curve):
        if j > 0:
            power = _tmul(power, phi, k)
        for i, ci in enumerate(cj):
            if ci == 0:
                continue
            for s in range(k):
                new_coords[i][s] += ci * power[s]
    curve = tuple(
        tuple(new_coords[i][s] for i in range(len(new_coords))) for s in range(k)
    )
    return Jet(curve)


# ---------------------------------------------------------------------------
# random configurations (explicit generator, integer coordinates in [-B, B])


def random_vector(rng: random.Random, m: int, bound: int) -> Vector:
    while True:
        v = tuple(Fraction(rng.randint(-bound, bound)) for _ in range(m + 1))
        if any(c != 0 for c in v):
            return v


def random_reduced(rng: random.Random, m: int, bound: int) -> Reduced:
    return Reduced(random_vector(rng, m, bound))


def random_jet_on_line(
    rng: random.Random, m: int, bound: int, length: int
) -> Jet:
    """Length-k jet on a random line: c(t) = Q + t V with V independent of Q."""
    while True:
        q = random_vector(rng, m, bound)
        v = random_vector(rng, m, bound)
        if not _dependent(q, v):
            break
    zero = tuple(Fraction(0) for _ in range(m + 1))
    return Jet((q, v) + (zero,) * (length - 2))


def random_jet_on_conic(rng: random.Random, m: int, bound: int, length: int = 3) -> Jet:
    """Jet on a parametrized smooth conic c(t) = Q + t V + t^2 W with
    Q, V, W linearly independent (a non-collinear germ)."""
    if length < 2:
        raise InputError("jets need length >= 2")
    while True:
        q = random_vector(rng, m, bound)
        v = random_vector(rng, m, bound)
        w = random_vector(rng, m, bound)
        if rank_exact(QMatrix.from_rows([q, v, w])) == 3:
            break
    zero = tuple(Fraction(0) for _ in range(m + 1))
    curve = (q, v, w)[:length] + (zero,) * max(0, length - 3)
    return Jet(curve)


def random_fat_point(rng: random.Random, m: int, bound: int, k: int) -> FatPoint:
    return FatPoint(random_vector(rng, m, bound), k)


def random_two_three(rng: random.Random, m: int, bound: int) -> TwoThreePoint:
    while True:
        q = random_vector(rng, m, bound)
        v = random_vector(rng, m, bound)
        if not _dependent(q, v):
            return TwoThreePoint(q, v)


def random_hyperplane(rng: random.Random, m: int, bound: int) -> Hyperplane:
    return Hyperplane(random_vector(rng, m, bound))


def random_point_on_hyperplane(
    rng: random.Random, H: Hyperplane, bound: int
) -> Vector:
    K = hyperplane_basis(H)
    while True:
        coeffs = [Fraction(rng.randint(-bound, bound)) for _ in range(K.rows)]
        pt = tuple(
            sum(c * K.entries[i * K.cols + j] for i, c in enumerate(coeffs))
            for j in range(K.cols)
        )
        if any(x != 0 for x in pt):
            return pt


def assemble_scheme(m: int, components: Sequence[Component], max_tries: int = 64):
    """SchemeSpec from components, or None when supports collide."""
    try:
        return SchemeSpec(m, tuple(components))
    except InputError:
        return None


def random_scheme(
    rng: random.Random,
    m: int,
    max_degree: int,
    bound: int = 50,
    kinds: Sequence[str] = ("reduced", "jet", "fat"),
) -> SchemeSpec:
    """Random mixed scheme of total degree <= max_degree, distinct supports."""
    while True:
        components: list[Component] = []
        budget = max_degree
        degree_used = 0
        while budget >= 1:
            options = ["reduced"] if "reduced" in kinds else []
            if "jet" in kinds and budget >= 2:
                options.append("jet")
            if "fat" in kinds and comb(m + 1, m) <= budget:
                options.append("fat")
            if "two_three" in kinds and 2 * m + 1 <= budget:
                options.append("two_three")
            if not options:
                break
            kind = rng.choice(options)
            if kind == "reduced":
                comp: Component = random_reduced(rng, m, bound)
            elif kind == "jet":
                length = rng.randint(2, budget)
                if length >= 3 and rng.random() < 0.5:
                    comp = random_jet_on_conic(rng, m, bound, length)
                else:
                    comp = random_jet_on_line(rng, m, bound, length)
            elif kind == "fat":
                kmax = 2
                while comb(m + kmax, m) <= budget:
                    kmax += 1
                comp = random_fat_point(rng, m, bound, rng.randint(2, kmax))
            else:
                comp = random_two_three(rng, m, bound)
            components.append(comp)
            degree_used += comp.degree(m)
            budget = max_degree - degree_used
            if rng.random() < 0.25:
                break
        if not components:
            continue
        spec = assemble_scheme(m, components)
        if spec is not None:
            return spec


# ---------------------------------------------------------------------------
# JSON round-trip


def _component_to_json(comp: Component) -> dict:
    if isinstance(comp, Reduced):
        return {"kind": "reduced", "point": [rat_to_str(c) for c in comp.point]}
    if isinstance(comp, Jet):
        return {
            "kind": "jet",
            "curve": [[rat_to_str(c) for c in v] for v in comp.curve],
        }
    if isinstance(comp, FatPoint):
        return {
            "kind": "fat",
            "point": [rat_to_str(c) for c in comp.point],
            "multiplicity": comp.multiplicity,
        }
    if isinstance(comp, TwoThreePoint):
        return {
            "kind": "two_three",
            "point": [rat_to_str(c) for c in comp.point],
            "direction": [rat_to_str(c) for c in comp.direction],
        }
    raise UnsupportedComponentError(type(comp).__name__)


def scheme_to_json(Z: SchemeSpec) -> dict:
    return {"m": Z.m, "components": [_component_to_json(c) for c in Z.components]}


def _component_from_json(i: int, obj: dict) -> Component:
    try:
        kind = obj["kind"]
        if kind == "reduced":
            return Reduced(_vec([rat_from_str(str(x)) for x in obj["point"]]))
        if kind == "jet":
            return Jet(
                tuple(
                    _vec([rat_from_str(str(x)) for x in v]) for v in obj["curve"]
                )
            )
        if kind == "fat":
            return FatPoint(
                _vec([rat_from_str(str(x)) for x in obj["point"]]),
                int(obj["multiplicity"]),
            )
        if kind == "two_three":
            return TwoThreePoint(
                _vec([rat_from_str(str(x)) for x in obj["point"]]),
                _vec([rat_from_str(str(x)) for x in obj["direction"]]),
            )
        raise InputError(f"unknown component kind {kind!r}")
    except (KeyError, TypeError, InputError) as e:
        raise InputError(f"component {i}: {e}") from None


def scheme_from_json(obj: dict) -> SchemeSpec:
    try:
        m = int(obj["m"])
        comps = obj["components"]
    except (KeyError, TypeError) as e:
        raise InputError(f"malformed scheme JSON: {e}") from None
    if not isinstance(comps, list) or not comps:
        raise InputError("scheme JSON needs a non-empty components list")
    return SchemeSpec(m, tuple(_component_from_json(i, c) for i, c in enumerate(comps)))
