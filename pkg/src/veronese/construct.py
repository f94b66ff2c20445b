"""Constructions of points in named strata and machine-checkable certificates.

Every certificate is a list of claims, each backed by exact rank
computations; a certificate only exists when all of its claims passed.
Border ranks are certified through the uniqueness criterion (twice the
scheme degree at most d+1) or through the line-intersection criterion
(degree at most 2 on every line), and cross-checked against catalecticant
flattening ranks.  Rank upper bounds are certified by explicit power-sum
decompositions that re-expand, with zero tolerance, to the target form.
Rank lower bounds beyond flattening are out of scope by design.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import List, Optional, Sequence

from .errors import (
    CertificateRefused,
    InputError,
    InternalInconsistency,
    ResampleExhausted,
)
from .forms import (
    Form,
    LinearForm,
    apply_diff,
    catalecticant_matrix,
    form_to_json,
    monomial_basis,
    power_expand,
    product_expand,
    rat_to_str,
)
from .rationalla import (
    QMatrix,
    in_row_space,
    kernel_basis,
    membership_solve,
    rank_exact,
)
from .schemes import (
    FatPoint,
    Jet,
    Reduced,
    SchemeSpec,
    TwoThreePoint,
    conditions_matrix,
    h1,
    lgp_check,
    proper_subscheme_spans,
    random_fat_point,
    random_jet_on_conic,
    random_jet_on_line,
    random_reduced,
    random_two_three,
    random_vector,
    scheme_degree,
    scheme_to_json,
    span_matrix,
)
from .strata import StratumLabel, sigma_stratum_dim

MAX_ATTEMPTS = 64


# ---------------------------------------------------------------------------
# certificates and decomposition records


@dataclass(frozen=True)
class Claim:
    statement: str
    ranks: tuple[int, ...]
    passed: bool


@dataclass(frozen=True)
class Certificate:
    kind: str  # border_rank | rank_upper | uniqueness | dimension
    value: Optional[int]
    claims: tuple[Claim, ...]
    scheme: Optional[SchemeSpec] = None
    seed: Optional[int] = None

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.claims)


PURE_POWER = "L^d"
TANGENT_SHAPE = "L^(d-1)M"
QUADRIC_SHAPE = "L^(d-2)Q"


@dataclass(frozen=True)
class Summand:
    shape: str
    coeff: Fraction
    linear: LinearForm
    second: Optional[LinearForm] = None
    quadric: Optional[Form] = None

    def expand(self, d: int) -> Form:
        if self.shape == PURE_POWER:
            return power_expand(self.linear, d).scale(self.coeff)
        if self.shape == TANGENT_SHAPE:
            if self.second is None:
                raise InputError("tangent summand needs a second linear form")
            return product_expand([(self.linear, d - 1), (self.second, 1)]).scale(
                self.coeff
            )
        if self.shape == QUADRIC_SHAPE:
            if self.quadric is None or self.quadric.d != 2:
                raise InputError("quadric summand needs a degree-2 form")
            return product_expand([(self.linear, d - 2), (self.quadric, 1)]).scale(
                self.coeff
            )
        raise InputError(f"unknown summand shape {self.shape!r}")


@dataclass(frozen=True)
class DecompositionRecord:
    """An exact identity target = sum of summands; verified on construction."""

    m: int
    d: int
    summands: tuple[Summand, ...]
    target: Form

    def __post_init__(self):
        if not self.summands:
            raise InputError("decomposition needs at least one summand")
        if self.expand() != self.target:
            raise InputError("decomposition does not re-expand to its target")

    def expand(self) -> Form:
        total = Form(self.m, self.d, (Fraction(0),) * comb(self.m + self.d, self.m))
        for s in self.summands:
            total = total + s.expand(self.d)
        return total

    @property
    def size(self) -> int:
        return len(self.summands)


def flattening_rank(P: Form) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Max catalecticant rank over a = 1..floor(d/2); a border-rank lower bound."""
    per_a = []
    best = 0
    for a in range(1, P.d // 2 + 1):
        r = rank_exact(catalecticant_matrix(P, a))
        per_a.append((a, r))
        best = max(best, r)
    return best, tuple(per_a)


# ---------------------------------------------------------------------------
# small helpers


def _nonzero_int(rng: random.Random, bound: int) -> int:
    while True:
        v = rng.randint(-bound, bound)
        if v != 0:
            return v


def _distinct_nonzero_ints(rng: random.Random, count: int, bound: int) -> list[int]:
    population = [v for v in range(-bound, bound + 1) if v != 0]
    if count > len(population):
        raise InputError("bound too small for the requested point count")
    return rng.sample(population, count)


def _point_on_line(Q0, V, z) -> tuple[Fraction, ...]:
    return tuple(q + Fraction(z) * v for q, v in zip(Q0, V))


def _combine_rows(S: QMatrix, coeffs: Sequence[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * S.cols
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        base = i * S.cols
        for j in range(S.cols):
            out[j] += c * S.entries[base + j]
    return out


def _intersect_spans(A: QMatrix, B: QMatrix) -> list[tuple[list[Fraction], list[Fraction]]]:
    """rowspace(A) & rowspace(B) via the kernel of the stacked rows.

    Returns (relation, vector) pairs: the relation x satisfies
    x[:rA] . A = -x[rA:] . B and the vector is x[:rA] . A itself.
    """
    stacked = A.stack(B)
    vectors = []
    for x in kernel_basis(stacked.transpose()):
        v = _combine_rows(A, x[: A.rows])
        if any(c != 0 for c in v):
            vectors.append((x, v))
    return vectors


def _exclusion_claim(Z: SchemeSpec, d: int, P: Form) -> Claim:
    spans = proper_subscheme_spans(Z, d)
    bad = sum(1 for S in spans if in_row_space(S, P.coeffs))
    return Claim(
        f"target lies outside all {len(spans)} proper subscheme spans",
        (len(spans),),
        bad == 0,
    )


def _require(claims: List[Claim], claim: Claim) -> None:
    claims.append(claim)
    if not claim.passed:
        raise CertificateRefused(claim.statement, claim.ranks)


# ---------------------------------------------------------------------------
# binary forms: apolar kernels, squarefree tests, explicit decompositions


def _binary_coeff_list(h: Form) -> list[Fraction]:
    """Coefficients c_j of y0^(r-j) y1^j, j = 0..r."""
    if h.m != 1:
        raise InputError("binary form expected")
    return list(h.coeffs)


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_deriv(p: list[Fraction]) -> list[Fraction]:
    return [p[i] * i for i in range(1, len(p))]


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = a[:]
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and any(c != 0 for c in a):
        if a[-1] == 0:
            a.pop()
            continue
        shift = len(a) - len(b)
        factor = a[-1] / b[-1]
        q[shift] = factor
        for i, c in enumerate(b):
            a[shift + i] -= factor * c
        a.pop()
    return _poly_trim(q), _poly_trim(a)


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _poly_trim(a[:]), _poly_trim(b[:])
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _dehomogenize(h: Form) -> tuple[list[Fraction], int]:
    """Return (p, a) with h = y0^a * homogenization of p(z), z = y1/y0."""
    c = _binary_coeff_list(h)
    p = _poly_trim(c[:])
    return p, h.d - (len(p) - 1)


def _binary_squarefree(h: Form) -> bool:
    p, y0_mult = _dehomogenize(h)
    if not p:
        return False
    if y0_mult >= 2:
        return False
    g = _poly_gcd(p, _poly_deriv(p))
    return len(g) <= 1


def _binary_gcd_squarefree(forms: Sequence[Form]) -> bool:
    """Is the gcd of the given binary forms squarefree?"""
    polys, y0_mults = [], []
    for h in forms:
        p, a = _dehomogenize(h)
        polys.append(p)
        y0_mults.append(a)
    if min(y0_mults) >= 2:
        return False
    g = polys[0]
    for p in polys[1:]:
        g = _poly_gcd(g, p)
        if len(g) <= 1:
            return True
    gg = _poly_gcd(g, _poly_deriv(g))
    return len(gg) <= 1


def _rational_roots(p: list[Fraction]) -> Optional[list[Fraction]]:
    """All roots with multiplicity when p splits over Q, else None."""
    p = _poly_trim(p[:])
    if len(p) <= 1:
        return []
    roots = []
    while p[0] == 0 and len(p) > 1:
        roots.append(Fraction(0))
        p = p[1:]
    denom = 1
    for c in p:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    ip = [int(c * denom) for c in p]
    while len(ip) > 1:
        a0, an = ip[0], ip[-1]
        if a0 == 0:
            roots.append(Fraction(0))
            ip = ip[1:]
            continue
        found = None
        for pdiv in _divisors(abs(a0)):
            for qdiv in _divisors(abs(an)):
                for sign in (1, -1):
                    cand = Fraction(sign * pdiv, qdiv)
                    if _int_poly_eval(ip, cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            return None
        ip = _int_poly_deflate(ip, found)
        roots.append(found)
    return roots


def _divisors(n: int) -> list[int]:
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def _int_poly_eval(p: list[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _int_poly_deflate(p: list[int], root: Fraction) -> list[int]:
    """Divide by (q z - p_num) after scaling; returns integer coefficients."""
    frac = [Fraction(c) for c in p]
    quot, rem = _poly_divmod(frac, [-root, Fraction(1)])
    assert not rem
    denom = 1
    for c in quot:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    return [int(c * denom) for c in quot]


def _binary_projective_roots(h: Form) -> Optional[list[tuple[Fraction, Fraction]]]:
    """Distinct projective roots (a : b) when h is squarefree and splits
    over the rationals; None otherwise."""
    if not _binary_squarefree(h):
        return None
    p, y0_mult = _dehomogenize(h)
    roots = _rational_roots(p)
    if roots is None:
        return None
    pts = [(Fraction(1), z) for z in roots]
    if y0_mult == 1:
        pts.append((Fraction(0), Fraction(1)))
    if len(pts) != h.d or len(set(pts)) != len(pts):
        return None
    return pts


def _apolar_kernel(f: Form, r: int) -> list[Form]:
    """Degree-r forms h with h(d/dx) f = 0, as a deterministic basis."""
    rows = [apply_diff(gamma, f).coeffs for gamma in monomial_basis(1, r)]
    K = QMatrix.from_rows(rows)
    return [Form(1, r, tuple(v)) for v in kernel_basis(K.transpose())]


def _kernel_candidates(basis: Sequence[Form]):
    """Deterministic stream of nonzero elements of the span of `basis`."""
    for h in basis:
        yield h
    n = len(basis)
    for i in range(n):
        for j in range(i + 1, n):
            yield Form(1, basis[0].d, tuple(a + b for a, b in zip(basis[i].coeffs, basis[j].coeffs)))
            yield Form(1, basis[0].d, tuple(a - b for a, b in zip(basis[i].coeffs, basis[j].coeffs)))
    head = basis[: min(n, 4)]
    for coeffs in itertools.product(range(-3, 4), repeat=len(head)):
        if all(c == 0 for c in coeffs):
            continue
        acc = [Fraction(0)] * (basis[0].d + 1)
        for c, h in zip(coeffs, head):
            if c:
                acc = [x + c * y for x, y in zip(acc, h.coeffs)]
        if any(x != 0 for x in acc):
            yield Form(1, basis[0].d, tuple(acc))


def _squarefree_in_kernel(basis: Sequence[Form]) -> Optional[Form]:
    """A squarefree element of the span, or None when provably none exists.

    A single generator is tested directly.  For systems of dimension >= 2
    whose gcd has a repeated factor no element can be squarefree; otherwise
    a squarefree element exists and a bounded deterministic search finds one.
    """
    if not basis:
        return None
    if len(basis) == 1:
        return basis[0] if _binary_squarefree(basis[0]) else None
    if not _binary_gcd_squarefree(basis):
        return None
    count = 0
    for cand in _kernel_candidates(basis):
        if _binary_squarefree(cand):
            return cand
        count += 1
        if count > 20000:  # pragma: no cover
            break
    raise InternalInconsistency(
        "kernel should contain a squarefree form but the search found none"
    )


@dataclass(frozen=True)
class SylvesterResult:
    rank: int
    decomposition: Optional[DecompositionRecord]
    apolar: Form
    # True/False once a decomposition was requested; None when only the
    # rank was computed
    splits_over_rationals: Optional[bool]


def _split_decomposition(f: Form, roots) -> Optional[DecompositionRecord]:
    lins = [LinearForm.make([a, b]) for a, b in roots]
    rows = QMatrix.from_rows([power_expand(L, f.d).coeffs for L in lins])
    sol = membership_solve(rows, f.coeffs)
    if sol is None:
        return None
    summands = tuple(
        Summand(PURE_POWER, c, L) for c, L in zip(sol, lins) if c != 0
    )
    if len(summands) != len(lins):
        return None
    return DecompositionRecord(1, f.d, summands, f)


def _search_rational_decomposition(f: Form, r: int) -> Optional[DecompositionRecord]:
    """Look for r distinct small rational points on the line spanning f."""
    values = [0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5]
    candidates: list[list[tuple[Fraction, Fraction]]] = []
    for subset in itertools.combinations(values, r):
        candidates.append([(Fraction(1), Fraction(z)) for z in subset])
    for subset in itertools.combinations(values, r - 1):
        candidates.append(
            [(Fraction(0), Fraction(1))]
            + [(Fraction(1), Fraction(z)) for z in subset]
        )
    for tries, pts in enumerate(candidates):
        if tries > 2000:
            break
        rows = QMatrix.from_rows(
            [power_expand(LinearForm.make([a, b]), f.d).coeffs for a, b in pts]
        )
        if rank_exact(rows) != r:
            continue
        sol = membership_solve(rows, f.coeffs)
        if sol is None or any(c == 0 for c in sol):
            continue
        summands = tuple(
            Summand(PURE_POWER, c, LinearForm.make([a, b]))
            for c, (a, b) in zip(sol, pts)
        )
        return DecompositionRecord(1, f.d, summands, f)
    return None


def sylvester_binary(f: Form, want_decomposition: bool = True) -> SylvesterResult:
    """Waring rank of a binary form with an explicit decomposition when a
    witness apolar form with distinct rational roots can be found.

    The rank is the least r whose apolar kernel contains a squarefree form
    (squarefreeness decided exactly via gcd with the derivative).  When no
    splitting witness is found the rank is returned with a squarefree apolar
    form as a field-extension marker.
    """
    if f.m != 1:
        raise InputError("sylvester_binary needs a binary form")
    if f.is_zero():
        raise InputError("zero form has no rank")
    d = f.d
    if d == 1:
        L = LinearForm(1, f.coeffs)
        rec = DecompositionRecord(1, 1, (Summand(PURE_POWER, Fraction(1), L),), f)
        return SylvesterResult(1, rec, f, True)
    for r in range(1, d + 1):
        kernel = _apolar_kernel(f, r)
        if not kernel:
            continue
        witness = _squarefree_in_kernel(kernel)
        if witness is None:
            continue
        if not want_decomposition:
            return SylvesterResult(r, None, witness, None)
        roots = _binary_projective_roots(witness)
        if roots is not None:
            rec = _split_decomposition(f, roots)
            if rec is not None:
                return SylvesterResult(r, rec, witness, True)
        for cand in _kernel_candidates(kernel):
            roots = _binary_projective_roots(cand)
            if roots is not None:
                rec = _split_decomposition(f, roots)
                if rec is not None:
                    return SylvesterResult(r, rec, cand, True)
        rec = _search_rational_decomposition(f, r)
        if rec is not None:
            return SylvesterResult(r, rec, witness, True)
        return SylvesterResult(r, None, witness, False)
    raise InternalInconsistency("binary rank search exceeded degree bound")


# ---------------------------------------------------------------------------
# border-rank certification


def _candidate_lines(Z: SchemeSpec) -> list[QMatrix]:
    """Lines that could meet Z in degree >= 3: through support pairs and
    tangent to jets.  Each line is returned as the matrix of its two
    spanning points."""
    spans = []
    pts = [c.support for c in Z.components]
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            spans.append(QMatrix.from_rows([pts[i], pts[j]]))
    for c in Z.components:
        if isinstance(c, Jet):
            spans.append(QMatrix.from_rows([c.curve[0], c.curve[1]]))
    return spans


def _line_degree(Z: SchemeSpec, line: QMatrix) -> int:
    """Degree of the scheme-theoretic intersection of a curvilinear Z with a
    line given by two spanning points."""
    forms = kernel_basis(line)  # linear forms vanishing on the line
    total = 0
    for comp in Z.components:
        if isinstance(comp, Reduced):
            if all(
                sum(f * x for f, x in zip(form, comp.point)) == 0 for form in forms
            ):
                total += 1
        elif isinstance(comp, Jet):
            orders = []
            for form in forms:
                vals = [
                    sum(f * x for f, x in zip(form, cv)) for cv in comp.curve
                ]
                order = comp.length
                for s, v in enumerate(vals):
                    if v != 0:
                        order = s
                        break
                orders.append(order)
            total += min(orders)
        else:
            raise InputError("line degree needs curvilinear components")
    return total


def line_condition(Z: SchemeSpec) -> bool:
    """deg(Z and L) <= 2 for every line L through the components of Z."""
    return all(_line_degree(Z, line) <= 2 for line in _candidate_lines(Z))


def certify_border_rank(P: Form, Z: SchemeSpec, d: int) -> Certificate:
    """Certify the border rank of P against a curvilinear scheme Z.

    Claims, in order: the scheme imposes independent conditions; P lies in
    its span; P avoids every proper subscheme span; when twice the degree is
    at most d+1 (or the line-intersection criterion applies) the scheme is
    the unique minimal one and the border rank equals its degree; the
    flattening rank agrees.  Any failed check raises CertificateRefused; a
    flattening disagreement raises InternalInconsistency.
    """
    if P.m != Z.m or P.d != d:
        raise InputError("form and scheme live in different spaces")
    t = scheme_degree(Z)
    claims: List[Claim] = []
    S = span_matrix(Z, d)
    superab = h1(Z, d)
    _require(
        claims,
        Claim(
            f"scheme of degree {t} imposes independent conditions in degree {d} (h1 = 0)",
            (rank_exact(S), superab),
            superab == 0 and rank_exact(S) == t,
        ),
    )
    sol = membership_solve(S, P.coeffs)
    _require(
        claims,
        Claim("target form lies in the span of the scheme", (S.rows,), sol is not None),
    )
    _require(claims, _exclusion_claim(Z, d, P))

    regime = 2 * t <= d + 1
    if regime:
        claims.append(
            Claim(
                f"border rank = {t}: unique minimal scheme "
                f"(uniqueness criterion 2*{t} <= {d}+1)",
                (t,),
                True,
            )
        )
    else:
        f1_ok = Z.m >= 2 and t <= d and line_condition(Z)
        if f1_ok:
            claims.append(
                Claim(
                    f"border rank = {t}: unique minimal scheme "
                    "(line-intersection criterion: degree <= 2 on every line)",
                    (t,),
                    True,
                )
            )
        else:
            claims.append(
                Claim(
                    f"membership only: border rank <= {t} "
                    "(uniqueness regime 2t <= d+1 not met)",
                    (t,),
                    True,
                )
            )
    fr, per_a = flattening_rank(P)
    if fr > t:
        raise InternalInconsistency(
            f"flattening rank {fr} exceeds certified degree {t}"
        )
    if regime:
        if fr != t:
            raise InternalInconsistency(
                f"flattening rank {fr} != scheme degree {t} in the uniqueness regime"
            )
        claims.append(
            Claim(
                f"flattening cross-check: max catalecticant rank = {t}",
                tuple(r for _, r in per_a),
                True,
            )
        )
    else:
        claims.append(
            Claim(
                f"flattening lower bound {fr} <= {t}",
                tuple(r for _, r in per_a),
                True,
            )
        )
    return Certificate("border_rank", t, tuple(claims), scheme=Z)


# ---------------------------------------------------------------------------
# constructors


def construct_stratum_point(
    m: int,
    d: int,
    label: StratumLabel,
    seed: int,
    bound: int = 50,
    non_collinear: bool = False,
) -> tuple[SchemeSpec, Form, Certificate]:
    """A random curvilinear scheme with the label's component degrees and a
    generic point of its span, certified.

    Jets sit on random lines; with ``non_collinear`` the degree-3 components
    sit on random smooth conics instead.  The border rank claim is certified
    when twice the degree is at most d+1, otherwise the certificate is
    membership-only.
    """
    if m < 2 or d < 3:
        raise InputError("construct_stratum_point needs m >= 2, d >= 3")
    t = label.t
    if t < 2:
        raise InputError("label must have total degree >= 2")
    if any(p > d for p in label.parts):
        raise InputError("label parts must be <= d")
    if t > d + 1:
        raise InputError("total degree beyond d+1 can never be independent")
    rng = random.Random(seed)
    for _ in range(MAX_ATTEMPTS):
        comps = []
        for p in label.parts:
            if p == 1:
                comps.append(random_reduced(rng, m, bound))
            elif p == 3 and non_collinear:
                comps.append(random_jet_on_conic(rng, m, bound, 3))
            else:
                comps.append(random_jet_on_line(rng, m, bound, p))
        try:
            Z = SchemeSpec(m, tuple(comps))
        except InputError:
            continue
        S = span_matrix(Z, d)
        if rank_exact(S) != t:
            continue
        lam = [Fraction(_nonzero_int(rng, bound)) for _ in range(t)]
        P = Form(m, d, tuple(_combine_rows(S, lam)))
        fr, per_a = flattening_rank(P)
        regime = 2 * t <= d + 1
        if regime and fr != t:
            continue
        claims: List[Claim] = [
            Claim(
                f"scheme of degree {t} imposes independent conditions (h1 = 0)",
                (t, h1(Z, d)),
                h1(Z, d) == 0,
            )
        ]
        sol = membership_solve(S, P.coeffs)
        claims.append(
            Claim(
                "target lies in the span with all coefficients nonzero",
                (t,),
                sol is not None and all(c != 0 for c in sol),
            )
        )
        claims.append(_exclusion_claim(Z, d, P))
        if regime:
            e1_flag = t <= (d - 1) // 2
            claims.append(
                Claim(
                    f"border rank = {t}: unique minimal scheme "
                    f"(criterion 2t <= d+1{'; strict uniqueness regime' if e1_flag else ''})",
                    (t,),
                    True,
                )
            )
            claims.append(
                Claim(
                    f"flattening cross-check: max catalecticant rank = {t}",
                    tuple(r for _, r in per_a),
                    fr == t,
                )
            )
            if label.is_trivial():
                claims.append(
                    Claim(
                        f"symmetric rank = {t} (reduced scheme: upper bound by "
                        "construction, lower bound by flattening)",
                        (fr,),
                        fr == t,
                    )
                )
        else:
            claims.append(
                Claim(
                    f"membership only: border rank <= {t} (2t > d+1)", (t,), True
                )
            )
            claims.append(
                Claim(f"flattening lower bound {fr} <= {t}", (fr,), fr <= t)
            )
        if non_collinear:
            dominating = []
            ok = True
            for comp in Z.components:
                if isinstance(comp, Jet) and comp.length == 3:
                    dominating.append(FatPoint(comp.support, 3))
                else:
                    dominating.append(comp)
            try:
                Zdom = SchemeSpec(m, tuple(dominating))
                ok = h1(Zdom, d) == 0
            except InputError:
                ok = False
            claims.append(
                Claim(
                    "dominating scheme (triple points over degree-3 jets) has h1 = 0",
                    (),
                    ok,
                )
            )
        if not all(c.passed for c in claims):
            continue
        cert = Certificate("border_rank", t, tuple(claims), scheme=Z, seed=seed)
        return Z, P, cert
    raise ResampleExhausted("construct_stratum_point kept hitting degenerate samples")


def construct_line_jet(
    m: int, d: int, t1: int, s1: int, seed: int, bound: int = 50
) -> tuple[SchemeSpec, Form, DecompositionRecord, Certificate]:
    """Point spanned by a degree-t1 jet on a line together with s1 general
    points; certifies border rank t1 + s1 and exhibits an exact power-sum
    decomposition of size d + 2 + s1 - t1.

    The decomposition keeps the s1 points and replaces the jet part by
    d + 2 - t1 points of the line, found by intersecting the jet span with
    the span of explicitly chosen rational points of the line.
    """
    if m < 2:
        raise InputError("ambient P^m with m >= 2 required")
    if not (2 <= t1 and 2 * t1 <= d):
        raise InputError("jet degree t1 must satisfy 2 <= t1 <= d/2")
    if not (0 <= s1 and 2 * s1 <= d):
        raise InputError("extra point count s1 must satisfy 0 <= s1 <= d/2")
    rng = random.Random(seed)
    n_line = d + 2 - t1
    for _ in range(MAX_ATTEMPTS):
        Q0 = random_vector(rng, m, bound)
        V = random_vector(rng, m, bound)
        if rank_exact(QMatrix.from_rows([Q0, V])) != 2:
            continue
        zero = tuple(Fraction(0) for _ in range(m + 1))
        jet = Jet((Q0, V) + (zero,) * (t1 - 2))
        pts = []
        ok = True
        for _ in range(s1):
            p = random_vector(rng, m, bound)
            if rank_exact(QMatrix.from_rows([Q0, V, p])) != 3:
                ok = False
                break
            pts.append(Reduced(p))
        if not ok:
            continue
        try:
            Z = SchemeSpec(m, (jet,) + tuple(pts))
        except InputError:
            continue

        zs = _distinct_nonzero_ints(rng, n_line, bound)
        line_pts = [_point_on_line(Q0, V, z) for z in zs]
        A_rows = QMatrix.from_rows(
            [power_expand(LinearForm(m, p), d).coeffs for p in line_pts]
        )
        J_rows = span_matrix(SchemeSpec(m, (jet,)), d)
        if rank_exact(A_rows) != n_line or rank_exact(J_rows) != t1:
            continue
        inter = _intersect_spans(A_rows, J_rows)
        if len(inter) != 1:
            continue
        x, qvec = inter[0]
        alphas = x[:n_line]
        betas = [-b for b in x[n_line:]]
        if any(a == 0 for a in alphas) or any(b == 0 for b in betas):
            continue
        Qpt = Form(m, d, tuple(qvec))

        full_jet = Jet((Q0, V) + (zero,) * (d - 1))
        full_rows = span_matrix(SchemeSpec(m, (full_jet,)), d)
        S1_rows = (
            QMatrix.from_rows(
                [power_expand(LinearForm(m, r.point), d).coeffs for r in pts]
            )
            if pts
            else QMatrix(0, full_rows.cols, ())
        )
        dim_claim_rank = rank_exact(full_rows.stack(S1_rows))

        cs = [Fraction(_nonzero_int(rng, bound))]
        P_vec = [cs[0] * c for c in Qpt.coeffs]
        for r in pts:
            c = Fraction(_nonzero_int(rng, bound))
            cs.append(c)
            row = power_expand(LinearForm(m, r.point), d).coeffs
            P_vec = [a + c * b for a, b in zip(P_vec, row)]
        P = Form(m, d, tuple(P_vec))

        t = t1 + s1
        claims: List[Claim] = []
        claims.append(
            Claim(
                f"scheme jet({t1}) + {s1} points imposes independent conditions",
                (t, h1(Z, d)),
                h1(Z, d) == 0,
            )
        )
        S = span_matrix(Z, d)
        sol = membership_solve(S, P.coeffs)
        claims.append(
            Claim(
                "target lies in the span with all coefficients nonzero",
                (t,),
                sol is not None and all(c != 0 for c in sol),
            )
        )
        claims.append(_exclusion_claim(Z, d, P))
        claims.append(
            Claim(
                f"line span plus points has the expected dimension {d}+{s1}",
                (dim_claim_rank,),
                dim_claim_rank == d + 1 + s1,
            )
        )
        claims.append(
            Claim(
                f"border rank = {t1}+{s1} (non-reduced divisor on the line; "
                "hypotheses verified exactly)",
                (t,),
                True,
            )
        )
        summands = [
            Summand(PURE_POWER, cs[0] * a, LinearForm(m, p))
            for a, p in zip(alphas, line_pts)
        ]
        for c, r in zip(cs[1:], pts):
            summands.append(Summand(PURE_POWER, c, LinearForm(m, r.point)))
        try:
            record = DecompositionRecord(m, d, tuple(summands), P)
        except InputError:
            continue
        r_val = d + 2 + s1 - t1
        claims.append(
            Claim(
                f"decomposition of size {r_val} re-expands exactly to the target",
                (record.size,),
                record.size == r_val,
            )
        )
        claims.append(
            Claim(
                f"symmetric rank = {r_val} = d+2+s1-t1 (upper bound exhibited; "
                "equality by the non-reduced line criterion)",
                (r_val,),
                True,
            )
        )
        budget = t + r_val <= 3 * d - 2
        claims.append(
            Claim(f"budget: b + r = {t + r_val} <= 3d-2 = {3 * d - 2}", (), budget)
        )
        gamma = membership_solve(full_rows, Qpt.coeffs)
        sylv_ok = False
        sylv_rank = -1
        if gamma is not None:
            g = Form(1, d, tuple(gamma[j] * comb(d, j) for j in range(d + 1)))
            res = sylvester_binary(g, want_decomposition=False)
            sylv_rank = res.rank
            sylv_ok = res.rank == d + 2 - t1
        claims.append(
            Claim(
                f"binary rank cross-check on the line: {sylv_rank} = d+2-t1",
                (sylv_rank,),
                sylv_ok,
            )
        )
        if not all(c.passed for c in claims):
            continue
        cert = Certificate("rank_upper", r_val, tuple(claims), scheme=Z, seed=seed)
        return Z, P, record, cert
    raise ResampleExhausted("construct_line_jet kept hitting degenerate samples")


def construct_tangent_plus_points(
    m: int, d: int, t: int, seed: int, bound: int = 50
) -> tuple[SchemeSpec, Form, DecompositionRecord, Certificate]:
    """Point spanned by a tangent vector (length-2 jet) and t-2 points in
    linearly general position; certifies border rank t and a decomposition
    of size d + t - 2.

    The rank value rests on the linearly-general-position theorem for
    m >= 3; for m = 2 the decomposition is still verified exactly but the
    rank equality claim is tagged as outside the theorem hypotheses.
    """
    if m < 2:
        raise InputError("ambient P^m with m >= 2 required")
    if d < 5 or not (3 <= t <= d):
        raise InputError("need d >= 5 and 3 <= t <= d")
    rng = random.Random(seed)
    for _ in range(MAX_ATTEMPTS):
        Q0 = random_vector(rng, m, bound)
        V = random_vector(rng, m, bound)
        if rank_exact(QMatrix.from_rows([Q0, V])) != 2:
            continue
        jet = Jet((Q0, V))
        pts = []
        ok = True
        for _ in range(t - 2):
            p = random_vector(rng, m, bound)
            if rank_exact(QMatrix.from_rows([Q0, V, p])) != 3:
                ok = False
                break
            pts.append(Reduced(p))
        if not ok:
            continue
        try:
            Z = SchemeSpec(m, (jet,) + tuple(pts))
        except InputError:
            continue
        if not lgp_check(Z):
            continue

        zs = _distinct_nonzero_ints(rng, d, bound)
        line_pts = [_point_on_line(Q0, V, z) for z in zs]
        B_rows = QMatrix.from_rows(
            [power_expand(LinearForm(m, p), d).coeffs for p in line_pts]
        )
        J_rows = span_matrix(SchemeSpec(m, (jet,)), d)
        if rank_exact(B_rows) != d:
            continue
        inter = _intersect_spans(B_rows, J_rows)
        if len(inter) != 1:
            continue
        x, qvec = inter[0]
        alphas = x[:d]
        betas = [-b for b in x[d:]]
        if any(a == 0 for a in alphas) or any(b == 0 for b in betas):
            continue
        Qjet = Form(m, d, tuple(qvec))

        mus = []
        P_vec = list(Qjet.coeffs)
        for r in pts:
            c = Fraction(_nonzero_int(rng, bound))
            mus.append(c)
            row = power_expand(LinearForm(m, r.point), d).coeffs
            P_vec = [a + c * b for a, b in zip(P_vec, row)]
        P = Form(m, d, tuple(P_vec))

        claims: List[Claim] = []
        claims.append(
            Claim("scheme is in linearly general position", (), lgp_check(Z))
        )
        claims.append(
            Claim(
                "scheme imposes independent conditions (h1 = 0)",
                (t, h1(Z, d)),
                h1(Z, d) == 0,
            )
        )
        S = span_matrix(Z, d)
        sol = membership_solve(S, P.coeffs)
        claims.append(
            Claim(
                "target lies in the span with all coefficients nonzero",
                (t,),
                sol is not None and all(c != 0 for c in sol),
            )
        )
        claims.append(_exclusion_claim(Z, d, P))
        regime = 2 * t <= d + 1
        if regime:
            claims.append(
                Claim(
                    f"border rank = {t} (uniqueness criterion 2t <= d+1)", (t,), True
                )
            )
        else:
            claims.append(
                Claim(
                    f"border rank upper bound {t} (membership; 2t > d+1)", (t,), True
                )
            )
        # normal form: the jet part is L^(d-1) M exactly
        M_form = LinearForm(
            m,
            tuple(
                betas[0] * q + d * betas[1] * v for q, v in zip(Q0, V)
            ),
        )
        normal = product_expand([(LinearForm(m, Q0), d - 1), (M_form, 1)])
        claims.append(
            Claim(
                "jet part equals L^(d-1) M exactly (normal form verified)",
                (),
                normal == Qjet,
            )
        )
        summands = [
            Summand(PURE_POWER, a, LinearForm(m, p))
            for a, p in zip(alphas, line_pts)
        ]
        for c, r in zip(mus, pts):
            summands.append(Summand(PURE_POWER, c, LinearForm(m, r.point)))
        try:
            record = DecompositionRecord(m, d, tuple(summands), P)
        except InputError:
            continue
        r_val = d + t - 2
        claims.append(
            Claim(
                f"decomposition of size {r_val} re-expands exactly to the target",
                (record.size,),
                record.size == r_val,
            )
        )
        if m >= 3:
            claims.append(
                Claim(
                    f"symmetric rank = {r_val} = d+t-2 (linearly general position "
                    "criterion, m >= 3)",
                    (r_val,),
                    True,
                )
            )
        else:
            claims.append(
                Claim(
                    f"symmetric rank <= {r_val} (m = 2 outside theorem hypotheses; "
                    "upper bound verified exactly)",
                    (r_val,),
                    True,
                )
            )
        budget = t + r_val <= 3 * d - 2
        claims.append(
            Claim(f"budget: b + r = {t + r_val} <= 3d-2 = {3 * d - 2}", (), budget)
        )
        if not all(c.passed for c in claims):
            continue
        cert = Certificate("rank_upper", r_val, tuple(claims), scheme=Z, seed=seed)
        return Z, P, record, cert
    raise ResampleExhausted(
        "construct_tangent_plus_points kept hitting degenerate samples"
    )


def _conic_jet(curve_c, tau, length):
    """Length-k jet of the parametrized conic at parameter value tau."""
    c0, c1, c2 = curve_c
    q = tuple(a + Fraction(tau) * b + Fraction(tau) ** 2 * c for a, b, c in zip(c0, c1, c2))
    dq = tuple(b + 2 * Fraction(tau) * c for b, c in zip(c1, c2))
    if length == 1:
        return Reduced(q)
    vecs = [q, dq]
    if length >= 3:
        vecs.append(tuple(c2))
        zero = tuple(Fraction(0) for _ in c0)
        vecs.extend([zero] * (length - 3))
    return Jet(tuple(vecs))


def construct_conic_double(
    d: int, a_parts: Sequence[int], b_parts: Sequence[int], seed: int, bound: int = 20
) -> tuple[SchemeSpec, SchemeSpec, Form, Certificate]:
    """Two divisors A, B on a smooth plane conic with deg A + deg B = 2d+2
    whose degree-d spans meet in exactly one point P.

    Certifies that the intersection is a single point (Grassmann rank
    check), that P avoids every proper subscheme span of both divisors, and
    reports the border rank min(deg A, deg B).
    """
    a_parts = tuple(int(p) for p in a_parts)
    b_parts = tuple(int(p) for p in b_parts)
    if d < 3:
        raise InputError("need d >= 3")
    deg_a, deg_b = sum(a_parts), sum(b_parts)
    if deg_a + deg_b != 2 * d + 2:
        raise InputError("divisor degrees must sum to 2d+2")
    if min(deg_a, deg_b) < 1 or any(p < 1 for p in a_parts + b_parts):
        raise InputError("divisor parts must be positive")
    rng = random.Random(seed)
    m = 2
    for _ in range(MAX_ATTEMPTS):
        cols = [
            tuple(Fraction(rng.randint(-bound, bound)) for _ in range(3))
            for _ in range(3)
        ]
        if rank_exact(QMatrix.from_rows(cols)) != 3:
            continue
        taus = rng.sample(range(-bound, bound + 1), len(a_parts) + len(b_parts))
        try:
            comps_a = tuple(
                _conic_jet(cols, tau, k)
                for tau, k in zip(taus[: len(a_parts)], a_parts)
            )
            comps_b = tuple(
                _conic_jet(cols, tau, k)
                for tau, k in zip(taus[len(a_parts) :], b_parts)
            )
            A = SchemeSpec(m, comps_a)
            B = SchemeSpec(m, comps_b)
        except InputError:
            continue
        SA, SB = span_matrix(A, d), span_matrix(B, d)
        rA, rB = rank_exact(SA), rank_exact(SB)
        stacked_rank = rank_exact(SA.stack(SB))
        if rA != deg_a or rB != deg_b or stacked_rank != 2 * d + 1:
            continue
        inter = _intersect_spans(SA, SB)
        if len(inter) != 1:
            continue
        _, pvec = inter[0]
        P = Form(m, d, tuple(pvec))
        claims: List[Claim] = [
            Claim(f"first divisor of degree {deg_a} is linearly independent", (rA,), rA == deg_a),
            Claim(f"second divisor of degree {deg_b} is linearly independent", (rB,), rB == deg_b),
            Claim(
                f"joint span has rank 2d+1 = {2 * d + 1}, so the spans meet in "
                "exactly one point (Grassmann)",
                (stacked_rank,),
                stacked_rank == 2 * d + 1,
            ),
        ]
        ex_a = _exclusion_claim(A, d, P)
        ex_b = _exclusion_claim(B, d, P)
        claims.append(Claim("(first divisor) " + ex_a.statement, ex_a.ranks, ex_a.passed))
        claims.append(Claim("(second divisor) " + ex_b.statement, ex_b.ranks, ex_b.passed))
        bval = min(deg_a, deg_b)
        claims.append(
            Claim(
                f"border rank = min(deg A, deg B) = {bval} "
                "(divisors on a projectively normal conic)",
                (bval,),
                True,
            )
        )
        if not all(c.passed for c in claims):
            continue
        cert = Certificate("border_rank", bval, tuple(claims), scheme=A, seed=seed)
        return A, B, P, cert
    raise ResampleExhausted("construct_conic_double kept hitting degenerate samples")


# ---------------------------------------------------------------------------
# Terracini dimensions of secant and tangential joins


def terracini_expected(m: int, d: int, kind: str, t: int) -> int:
    """Expected dimension of the join, capped at the ambient dimension."""
    N = comb(m + d, m) - 1
    if kind == "secant":
        return min(N, t * (m + 1) - 1)
    if kind == "tau":
        return min(N, t * (m + 1) - 2)
    if kind == "osculating2":
        return min(N, comb(m + 3, m) + (t - 1) * (m + 1) - 1)
    raise InputError(f"unknown join kind {kind!r}")


def terracini_dim(
    m: int, d: int, kind: str, t: int, seed: int, bound: int = 50
) -> tuple[int, Certificate]:
    """Dimension of a secant or tangential join computed by interpolation.

    The infinitesimal scheme is: t double points for the t-secant variety;
    one (2,3)-point plus t-2 double points for the join of the tangent
    developable with the (t-2)-secant variety; one quadruple point plus t-1
    double points for the join of the second osculating variety with the
    (t-1)-secant variety.  The dimension is degree - 1 - h1.
    """
    if m < 2 or d < 3:
        raise InputError("terracini_dim needs m >= 2, d >= 3")
    N = comb(m + d, m) - 1
    expected = terracini_expected(m, d, kind, t)
    rng = random.Random(seed)
    if kind == "secant":
        if t < 1:
            raise InputError("secant needs t >= 1")
        mk = lambda: [random_fat_point(rng, m, bound, 2) for _ in range(t)]
    elif kind == "tau":
        if t < 2:
            raise InputError("tau needs t >= 2")
        if not (m + 1) * (t - 2) + 2 * m < N:
            raise InputError("tangential join does not fit: (m+1)(t-2)+2m >= N")
        mk = lambda: [random_two_three(rng, m, bound)] + [
            random_fat_point(rng, m, bound, 2) for _ in range(t - 2)
        ]
    else:
        if t < 1:
            raise InputError("osculating2 needs t >= 1")
        mk = lambda: [random_fat_point(rng, m, bound, 4)] + [
            random_fat_point(rng, m, bound, 2) for _ in range(t - 1)
        ]

    for _ in range(MAX_ATTEMPTS):
        try:
            Z = SchemeSpec(m, tuple(mk()))
        except InputError:
            continue
        deg = scheme_degree(Z)
        if deg > comb(m + d, m):
            raise InputError("infinitesimal scheme does not fit in degree d")
        sup = h1(Z, d)
        dim = deg - 1 - sup
        claims = [
            Claim(f"infinitesimal scheme degree {deg}, h1 = {sup}", (deg - sup,), True),
            Claim(
                f"dimension {dim} matches the expected dimension {expected}",
                (dim,),
                dim == expected,
            ),
        ]
        if kind == "tau":
            dominating = [
                FatPoint(c.support, 3) if isinstance(c, TwoThreePoint) else c
                for c in Z.components
            ]
            Zdom = SchemeSpec(m, tuple(dominating))
            sup_dom = h1(Zdom, d)
            agrees = (sup_dom != 0) or dim == t * (m + 1) - 2
            claims.append(
                Claim(
                    "triple-point route agrees: h1 of the dominating scheme is "
                    f"{sup_dom}, forcing the same dimension when zero",
                    (sup_dom,),
                    agrees,
                )
            )
        cert = Certificate("dimension", dim, tuple(claims), scheme=Z, seed=seed)
        if cert.all_passed:
            return dim, cert
    raise ResampleExhausted(f"terracini_dim({kind}) kept hitting degenerate samples")


def gamma_dims(m: int, d: int, t: int, seed: int, bound: int = 50) -> dict:
    """Dimensions of the three largest special families inside the t-secant
    variety: tangent-vector configurations (codimension 1), two tangent
    vectors (codimension 2), and non-collinear degree-3 germs (codimension 2).

    Each dimension is computed by interpolation on the matching
    infinitesimal scheme and cross-checked against the closed stratum
    dimension formula.
    """
    if m < 2 or d < 4 or t < 3:
        raise InputError("gamma_dims needs m >= 2, d >= 4, t >= 3")
    alpha = comb(m + d - 1, m) // (m + 1)
    beta = comb(m + d - 2, m) // (m + 1)
    if t > alpha - 1:
        raise InputError(f"t must be <= alpha-1 = {alpha - 1}")
    if t >= 4 and t > alpha - 2:
        raise InputError(f"t must be <= alpha-2 = {alpha - 2} for the double-tangent family")
    if t > beta - 1:
        raise InputError(f"t must be <= beta-1 = {beta - 1}")
    rng = random.Random(seed)
    dim_sigma, _ = terracini_dim(m, d, "secant", t, rng.randrange(1 << 30), bound)
    report: dict = {
        "m": m,
        "d": d,
        "t": t,
        "alpha": alpha,
        "beta": beta,
        "dim_sigma": dim_sigma,
        "seed": seed,
        "families": {},
        "all_passed": True,
    }

    def stamp(name, dim, expected_label, codim_expected, extra_checks):
        expected = sigma_stratum_dim(m, StratumLabel.make(expected_label))
        entry = {
            "dim": dim,
            "stratum_dim_formula": expected,
            "codim_in_sigma": dim_sigma - dim,
            "codim_expected": codim_expected,
            "checks": extra_checks
            + [
                {"statement": "dimension matches the stratum formula", "passed": dim == expected},
                {
                    "statement": f"codimension in the secant variety is {codim_expected}",
                    "passed": dim_sigma - dim == codim_expected,
                },
            ],
        }
        if not all(c["passed"] for c in entry["checks"]):
            report["all_passed"] = False
        report["families"][name] = entry

    # tangent vector + t-2 points
    dim1, cert1 = terracini_dim(m, d, "tau", t, rng.randrange(1 << 30), bound)
    stamp(
        "tangent_vector",
        dim1,
        (2,) + (1,) * (t - 2),
        1,
        [{"statement": c.statement, "passed": c.passed} for c in cert1.claims],
    )

    # two tangent vectors + t-4 points
    if t >= 4:
        for _ in range(MAX_ATTEMPTS):
            try:
                comps = [random_two_three(rng, m, bound) for _ in range(2)] + [
                    random_fat_point(rng, m, bound, 2) for _ in range(t - 4)
                ]
                Z2 = SchemeSpec(m, tuple(comps))
            except InputError:
                continue
            sup2 = h1(Z2, d)
            dim2 = scheme_degree(Z2) - 1 - sup2
            dom = [
                FatPoint(c.support, 3) if isinstance(c, TwoThreePoint) else c
                for c in Z2.components
            ]
            sup_dom = h1(SchemeSpec(m, tuple(dom)), d)
            checks = [
                {"statement": f"h1 of the infinitesimal scheme is {sup2}", "passed": sup2 == 0},
                {
                    "statement": f"triple-point dominating scheme has h1 = {sup_dom}",
                    "passed": sup_dom == 0,
                },
            ]
            stamp("double_tangent", dim2, (2, 2) + (1,) * (t - 4), 2, checks)
            break
    else:
        report["families"]["double_tangent"] = {"skipped": "needs t >= 4"}

    # non-collinear degree-3 germ + t-3 points, via one quadruple point
    for _ in range(MAX_ATTEMPTS):
        try:
            comps = [random_fat_point(rng, m, bound, 4)] + [
                random_fat_point(rng, m, bound, 2) for _ in range(t - 3)
            ]
            Z3 = SchemeSpec(m, tuple(comps))
        except InputError:
            continue
        sup3 = h1(Z3, d)
        dim3 = m * t + t - 3
        checks = [
            {
                "statement": "quadruple-point scheme imposes independent conditions "
                f"(h1 = {sup3}), so the family has the expected dimension",
                "passed": sup3 == 0,
            }
        ]
        stamp("noncollinear_triple", dim3, (3,) + (1,) * (t - 3), 2, checks)
        break
    return report


# ---------------------------------------------------------------------------
# JSON encoders


def claim_to_json(c: Claim) -> dict:
    return {"statement": c.statement, "ranks": list(c.ranks), "passed": c.passed}


def certificate_to_json(cert: Certificate) -> dict:
    out = {
        "kind": cert.kind,
        "value": cert.value,
        "claims": [claim_to_json(c) for c in cert.claims],
        "seed": cert.seed,
    }
    if cert.scheme is not None:
        out["scheme"] = scheme_to_json(cert.scheme)
    return out


def summand_to_json(s: Summand) -> dict:
    out = {
        "shape": s.shape,
        "coeff": rat_to_str(s.coeff),
        "linear": [rat_to_str(c) for c in s.linear.coeffs],
    }
    if s.second is not None:
        out["second"] = [rat_to_str(c) for c in s.second.coeffs]
    if s.quadric is not None:
        out["quadric"] = form_to_json(s.quadric)
    return out


def decomposition_to_json(rec: DecompositionRecord) -> dict:
    return {
        "m": rec.m,
        "d": rec.d,
        "size": rec.size,
        "summands": [summand_to_json(s) for s in rec.summands],
        "target": form_to_json(rec.target),
    }
