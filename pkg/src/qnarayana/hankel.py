"""Hankel matrices, fraction-free determinants, and J-fraction machinery.

The determinant engine is the classical fraction-free elimination over an
integral domain: cross-multiply, then divide by the previous pivot, every
division provably exact in Z[t].  A cofactor-expansion determinant is kept
alongside as an independent oracle for small dimensions, and the two are
never merged.

J-fraction side: a series f with constant term 1 is peeled level by level
via f = 1/(1 - s*z - t*z^2*f'), working over the rational-function field
because the intermediate reciprocals genuinely live there.  A ``JFraction``
holding diagonal coefficients s_0..s_d and subdiagonal coefficients
t_0..t_{d-1} reconstructs the series exactly through order 2d+1; the
subdiagonal coefficients alone determine every Hankel determinant through
the double product ``hankel_product_formula``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactalg import (
    Polynomial,
    RationalFunction,
    TruncatedSeries,
    poly_exact_div,
    ring_one_like,
)
from .narayana import TVAR, PolySequence, binomial, c_poly, poly_sequence


@dataclass(frozen=True)
class PolyMatrix:
    """Square matrix of polynomials sharing one variable."""

    entries: tuple[tuple[Polynomial, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        if n == 0:
            raise ValueError("empty matrix")
        var = self.entries[0][0].var
        for row in self.entries:
            if len(row) != n:
                raise ValueError("matrix is not square")
            for p in row:
                if p.var != var:
                    raise ValueError("matrix entries must share one variable")

    @property
    def dim(self) -> int:
        return len(self.entries)


def hankel_matrix(seq: PolySequence, n: int, shift: int) -> PolyMatrix:
    """The n x n matrix with entry (i, j) = seq[i + j + shift]."""
    if shift not in (0, 1):
        raise ValueError("shift must be 0 or 1")
    if n < 1:
        raise ValueError("dimension must be >= 1")
    top = 2 * (n - 1) + shift
    if len(seq.entries) <= top:
        raise ValueError(f"sequence too short: need entries up to index {top}, have {len(seq.entries)}")
    return PolyMatrix(tuple(tuple(seq.entries[i + j + shift] for j in range(n)) for i in range(n)))


def det_bareiss(m: PolyMatrix) -> Polynomial:
    """Exact determinant by fraction-free elimination.

    A zero pivot triggers a row-swap search down the column with sign
    tracking; if the whole column below is zero the determinant is zero.
    """
    n = m.dim
    var = m.entries[0][0].var
    a = [list(row) for row in m.entries]
    sign = 1
    prev = Polynomial.one(var)
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Polynomial.zero(var)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = poly_exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    return a[n - 1][n - 1] if sign == 1 else -a[n - 1][n - 1]


_COFACTOR_DIM_LIMIT = 6


def det_cofactor(m: PolyMatrix) -> Polynomial:
    """Laplace expansion along the first row; independent oracle, dim <= 6."""
    if m.dim > _COFACTOR_DIM_LIMIT:
        raise ValueError(f"cofactor expansion is guarded to dim <= {_COFACTOR_DIM_LIMIT}")
    return _det_cofactor(m.entries)


def _det_cofactor(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = Polynomial.zero(rows[0][0].var)
    for j, top in enumerate(rows[0]):
        if not top:
            continue
        minor = tuple(row[:j] + row[j + 1:] for row in rows[1:])
        term = top * _det_cofactor(minor)
        total = total - term if j % 2 else total + term
    return total


@dataclass(frozen=True)
class HankelRow:
    n: int
    determinant: Polynomial
    expected: Polynomial
    match: bool


_TABLE_FAMILIES = ("narayana_poly", "small_c")


def expected_hankel(family: str, shift: int, n: int) -> Polynomial:
    """The predicted determinant: t^binom(n,2), signed for the shifted c family."""
    if family not in _TABLE_FAMILIES:
        raise ValueError(f"no expected values for family {family!r}")
    e = binomial(n, 2)
    coeff = -1 if family == "small_c" and shift == 1 and e % 2 else 1
    return Polynomial.monomial(TVAR, e, coeff)


def hankel_table(family: str, shift: int, max_n: int) -> list[HankelRow]:
    """Determinants against predictions for n = 1..max_n."""
    if family not in _TABLE_FAMILIES:
        raise ValueError(f"unknown table family {family!r} (expected one of {_TABLE_FAMILIES})")
    if shift not in (0, 1):
        raise ValueError("shift must be 0 or 1")
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    seq = poly_sequence(family, 2 * max_n - 1 + shift)
    rows = []
    for n in range(1, max_n + 1):
        det = det_bareiss(hankel_matrix(seq, n, shift))
        expected = expected_hankel(family, shift, n)
        rows.append(HankelRow(n, det, expected, det == expected))
    return rows


def hankel_table_csv(family: str, shift: int, rows: list[HankelRow]) -> str:
    lines = ["n,shift,family,determinant,expected,match"]
    for row in rows:
        lines.append(f"{row.n},{shift},{family},{row.determinant},{row.expected},{str(row.match).lower()}")
    return "\n".join(lines) + "\n"


_RATFUN_TAGS = {
    "smallc": c_poly,
    "smallg": lambda n: c_poly(n + 1),
}


def ratfun_series(tag: str, order: int) -> TruncatedSeries:
    """smallc/smallg prefix lifted to rational-function coefficients."""
    if tag not in _RATFUN_TAGS:
        raise ValueError(f"unknown series tag {tag!r} (expected one of {tuple(_RATFUN_TAGS)})")
    if order < 0:
        raise ValueError("order must be >= 0")
    coeff = _RATFUN_TAGS[tag]
    return TruncatedSeries([RationalFunction(coeff(n)) for n in range(order + 1)], order)


@dataclass(frozen=True)
class JFraction:
    """Diagonal coefficients s and subdiagonal coefficients t_coeffs.

    Always one more s than t (the innermost level has no subdiagonal term);
    depth counts the subdiagonal coefficients.  ``terminated`` marks an
    extraction that hit a zero subdiagonal coefficient and stopped early:
    in that case the fraction is finite and reproduces its series exactly.
    """

    s: tuple[RationalFunction, ...]
    t_coeffs: tuple[RationalFunction, ...]
    terminated: bool = False

    def __post_init__(self):
        if len(self.s) != len(self.t_coeffs) + 1 and (self.s or self.t_coeffs):
            raise ValueError("need exactly one more diagonal than subdiagonal coefficient")
        if any(t.is_zero() for t in self.t_coeffs):
            raise ValueError("subdiagonal coefficients must be nonzero")

    @property
    def depth(self) -> int:
        return len(self.t_coeffs)


def jfraction_extract(series: TruncatedSeries, depth: int) -> JFraction:
    """Peel depth levels off a series with constant term 1.

    Level k: s_k is the z coefficient of 1 - 1/f, t_k the z^2 coefficient
    of the remainder, and the next level is (1 - 1/f - s_k z)/(t_k z^2).
    Returns s_0..s_depth and t_0..t_{depth-1}; a zero t_k stops early with
    the truncated depth and ``terminated`` set.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    first = series.coeffs[0]
    if not (isinstance(first, RationalFunction) and first.is_one()):
        raise ValueError("series constant term must be the rational function 1")
    if series.order < 2 * depth + 2:
        raise ValueError(f"order {series.order} too small for depth {depth} (need >= {2 * depth + 2})")
    one = ring_one_like(first)
    diag, sub = [], []
    f = series
    for k in range(depth + 1):
        h = TruncatedSeries.constant(one, f.order) - f.invert()
        s_k = h.coeffs[1]
        diag.append(s_k)
        if k == depth:
            break
        r = h - TruncatedSeries.from_coeffs([one - one, s_k], f.order)
        t_k = r.coeffs[2]
        if t_k.is_zero():
            return JFraction(tuple(diag), tuple(sub), terminated=True)
        sub.append(t_k)
        f = r.shift_down(2).scale(t_k.reciprocal())
    return JFraction(tuple(diag), tuple(sub))


def jfraction_to_series(jf: JFraction, order: int) -> TruncatedSeries:
    """Evaluate the nested fraction bottom-up, truncated at the given order.

    With depth d the result agrees with the source series through z^(2d+1);
    an empty fraction is the constant series 1.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    if not jf.s:
        return TruncatedSeries.constant(RationalFunction.one(TVAR), order)
    one = ring_one_like(jf.s[0])
    zero = one - one
    ones = TruncatedSeries.constant(one, order)
    f = (ones - TruncatedSeries.from_coeffs([zero, jf.s[-1]], order)).invert()
    for k in range(len(jf.t_coeffs) - 1, -1, -1):
        level = ones - TruncatedSeries.from_coeffs([zero, jf.s[k]], order) - f.shift_up(2).scale(jf.t_coeffs[k])
        f = level.invert()
    return f


def hankel_product_formula(t_seq, n: int):
    """The double product over the subdiagonal coefficients, prod_{j=1}^{n-1} prod_{k=0}^{j-1} t_k.

    For a constant subdiagonal tau this collapses to tau^binom(n,2).
    Needs t_0..t_{n-2}; the n = 1 product is empty and equals 1.
    """
    if n < 1:
        raise ValueError("dimension must be >= 1")
    t_seq = tuple(t_seq)
    if len(t_seq) < n - 1:
        raise ValueError(f"need {n - 1} subdiagonal coefficients, have {len(t_seq)}")
    acc = ring_one_like(t_seq[0]) if t_seq else RationalFunction.one(TVAR)
    for j in range(1, n):
        for k in range(j):
            acc = acc * t_seq[k]
    return acc
