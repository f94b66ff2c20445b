"""Degree-d homogeneous forms in m+1 variables over exact rationals.

A projective point of the ambient space P^N, N = C(m+d, m) - 1, IS a form:
its coordinates are the coefficients of a degree-d form in the fixed
graded-lexicographic monomial order.  The degree-d power embedding of a
point Q of P^m is realized concretely by ``power_expand`` applied to the
linear form with Q's homogeneous coordinates.

The monomial order is global and serialized artifacts record it ("grlex"),
so coefficient vectors are comparable across runs and implementations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Dict, Iterable, Sequence, Tuple

from .errors import InputError
from .rationalla import QMatrix, _q

MultiIndex = Tuple[int, ...]


@lru_cache(maxsize=None)
def monomial_basis(m: int, d: int) -> tuple[MultiIndex, ...]:
    """All degree-d exponent vectors on m+1 variables, descending lex.

    The first element is (d, 0, ..., 0) and the last (0, ..., 0, d);
    length C(m+d, m).
    """
    if m < 0 or d < 0:
        raise InputError("monomial_basis needs m >= 0, d >= 0")

    def gen(nvars: int, deg: int):
        if nvars == 1:
            yield (deg,)
            return
        for e in range(deg, -1, -1):
            for rest in gen(nvars - 1, deg - e):
                yield (e,) + rest

    basis = tuple(gen(m + 1, d))
    assert len(basis) == comb(m + d, m)
    return basis


@lru_cache(maxsize=None)
def monomial_index(m: int, d: int) -> dict[MultiIndex, int]:
    return {alpha: i for i, alpha in enumerate(monomial_basis(m, d))}


def multinomial(d: int, alpha: MultiIndex) -> int:
    out = factorial(d)
    for a in alpha:
        out //= factorial(a)
    return out


@dataclass(frozen=True)
class LinearForm:
    """Nonzero linear form c_0 x_0 + ... + c_m x_m."""

    m: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.m + 1:
            raise InputError("linear form needs m+1 coefficients")
        if all(c == 0 for c in self.coeffs):
            raise InputError("linear form must be nonzero")

    @classmethod
    def make(cls, coeffs: Sequence) -> "LinearForm":
        cs = tuple(_q(c) for c in coeffs)
        return cls(len(cs) - 1, cs)

    def to_form(self) -> "Form":
        return Form(self.m, 1, self.coeffs)


@dataclass(frozen=True)
class Form:
    """Coefficient vector of a degree-d form, graded-lex monomial order."""

    m: int
    d: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != comb(self.m + self.d, self.m):
            raise InputError(
                f"form needs C({self.m}+{self.d},{self.m}) coefficients, "
                f"got {len(self.coeffs)}"
            )

    @classmethod
    def from_dict(cls, m: int, d: int, terms: Dict[MultiIndex, Fraction]) -> "Form":
        idx = monomial_index(m, d)
        coeffs = [Fraction(0)] * len(idx)
        for alpha, c in terms.items():
            coeffs[idx[alpha]] += c
        return cls(m, d, tuple(coeffs))

    @classmethod
    def from_coeffs(cls, m: int, d: int, coeffs: Sequence) -> "Form":
        return cls(m, d, tuple(_q(c) for c in coeffs))

    def coeff(self, alpha: MultiIndex) -> Fraction:
        return self.coeffs[monomial_index(self.m, self.d)[alpha]]

    def terms(self) -> Dict[MultiIndex, Fraction]:
        basis = monomial_basis(self.m, self.d)
        return {a: c for a, c in zip(basis, self.coeffs) if c != 0}

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other: "Form") -> "Form":
        if (self.m, self.d) != (other.m, other.d):
            raise InputError("form degree/variable mismatch in +")
        return Form(self.m, self.d, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Form") -> "Form":
        if (self.m, self.d) != (other.m, other.d):
            raise InputError("form degree/variable mismatch in -")
        return Form(self.m, self.d, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, s) -> "Form":
        s = _q(s)
        return Form(self.m, self.d, tuple(s * c for c in self.coeffs))


def power_expand(L: LinearForm, d: int) -> Form:
    """L^d by multinomial expansion; the degree-d embedding of the point L."""
    if d < 1:
        raise InputError("power_expand needs d >= 1")
    coeffs = []
    for alpha in monomial_basis(L.m, d):
        c = Fraction(multinomial(d, alpha))
        for ci, ai in zip(L.coeffs, alpha):
            if ai:
                c *= ci**ai
        coeffs.append(c)
    return Form(L.m, d, tuple(coeffs))


def _mul_dicts(a: Dict[MultiIndex, Fraction], b: Dict[MultiIndex, Fraction]):
    out: Dict[MultiIndex, Fraction] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, Fraction(0)) + ca * cb
    return {e: c for e, c in out.items() if c != 0}


def product_expand(factors: Iterable[tuple]) -> Form:
    """Exact product of (form_or_linear, exponent) factors.

    Supports the shapes L^(d-1)*M and L^(d-2)*Q used by explicit
    normal-form decompositions.  All factors must share the same m.
    """
    factors = list(factors)
    if not factors:
        raise InputError("product_expand needs at least one factor")
    m = None
    acc: Dict[MultiIndex, Fraction] = {}
    total = 0
    for obj, e in factors:
        if e < 0:
            raise InputError("negative exponent")
        f = obj.to_form() if isinstance(obj, LinearForm) else obj
        if not isinstance(f, Form):
            raise InputError(f"not a form: {obj!r}")
        if m is None:
            m = f.m
            acc = {(0,) * (m + 1): Fraction(1)}
        elif f.m != m:
            raise InputError("mixed variable counts in product")
        fd = f.terms()
        for _ in range(e):
            acc = _mul_dicts(acc, fd)
        total += e * f.d
    return Form.from_dict(m, total, acc)


def apply_diff(alpha: MultiIndex, F: Form) -> Form:
    """Partial derivative d^alpha F, a form of degree d - |alpha|."""
    order = sum(alpha)
    if len(alpha) != F.m + 1:
        raise InputError("multi-index length mismatch")
    if order > F.d:
        raise InputError("derivative order exceeds degree")
    out: Dict[MultiIndex, Fraction] = {}
    for beta, c in zip(monomial_basis(F.m, F.d), F.coeffs):
        if c == 0:
            continue
        if any(b < a for b, a in zip(beta, alpha)):
            continue
        fac = 1
        for b, a in zip(beta, alpha):
            for k in range(a):
                fac *= b - k
        e = tuple(b - a for b, a in zip(beta, alpha))
        out[e] = out.get(e, Fraction(0)) + c * fac
    return Form.from_dict(F.m, F.d - order, out)


def evaluate(F: Form, point: Sequence) -> Fraction:
    pt = [_q(x) for x in point]
    if len(pt) != F.m + 1:
        raise InputError("point length mismatch")
    total = Fraction(0)
    for alpha, c in zip(monomial_basis(F.m, F.d), F.coeffs):
        if c == 0:
            continue
        v = c
        for x, a in zip(pt, alpha):
            if a:
                v *= x**a
        total += v
    return total


def catalecticant_matrix(F: Form, a: int) -> QMatrix:
    """Contraction pairing of degree-a differential operators against F.

    Rows are indexed by the degree-a monomial basis (as operators), columns
    by the degree-(d-a) basis.  Its rank is a lower bound for the border
    rank of F and never exceeds the size of any power-sum decomposition.
    """
    if not 1 <= a <= F.d - 1:
        raise InputError("catalecticant needs 1 <= a <= d-1")
    rows = [apply_diff(gamma, F).coeffs for gamma in monomial_basis(F.m, a)]
    return QMatrix.from_rows(rows)


def substitute(F: Form, images: Sequence[LinearForm]) -> Form:
    """F with x_i replaced by images[i]; an exact linear change of variables."""
    if len(images) != F.m + 1:
        raise InputError("need m+1 substitution images")
    m_new = images[0].m
    if any(L.m != m_new for L in images):
        raise InputError("substitution images must share the variable count")
    out: Dict[MultiIndex, Fraction] = {}
    lin_dicts = [L.to_form().terms() for L in images]
    for alpha, c in zip(monomial_basis(F.m, F.d), F.coeffs):
        if c == 0:
            continue
        acc = {(0,) * (m_new + 1): Fraction(1)}
        for ld, a in zip(lin_dicts, alpha):
            for _ in range(a):
                acc = _mul_dicts(acc, ld)
        for e, v in acc.items():
            out[e] = out.get(e, Fraction(0)) + c * v
    return Form.from_dict(m_new, F.d, out)


# Canonical rational strings ("p/q" in lowest terms, q > 0; integers drop
# the "/1") used by every JSON interface in the package.

def rat_to_str(x: Fraction) -> str:
    return str(Fraction(x))


def rat_from_str(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"bad rational literal {s!r}: {e}") from None


def form_to_json(F: Form) -> dict:
    return {
        "m": F.m,
        "d": F.d,
        "coeffs": [rat_to_str(c) for c in F.coeffs],
        "order": "grlex",
    }


def form_from_json(obj: dict) -> Form:
    try:
        m, d = int(obj["m"]), int(obj["d"])
        coeffs = [rat_from_str(str(c)) for c in obj["coeffs"]]
        order = obj.get("order", "grlex")
    except (KeyError, TypeError) as e:
        raise InputError(f"malformed form JSON: {e}") from None
    if order != "grlex":
        raise InputError(f"unsupported monomial order {order!r}")
    return Form.from_coeffs(m, d, coeffs)
