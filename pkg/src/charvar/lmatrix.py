"""Matrices over the Laurent polynomial ring: rank, minors, Smith form.

Rank at a rational character evaluates first and eliminates over Q
(fraction-free Bareiss).  Rank at the generic point eliminates over the
fraction field with Laurent-polynomial pivots: cross-multiplication,
exact division by the previous pivot to control entry growth, and
unit-content stripping (rational content and monomial factors are units
here, so stripping preserves exact divisibility up to units).

The univariate ring Q[t, t^-1] is a PID; ``smith_univariate`` diagonalizes
with a divisibility chain and records the four transformation matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import NotUnivariate, TooManyMinors, VariableCountMismatch
from .intlinalg import rational_rank
from .laurent import Character, LaurentPolynomial

DEFAULT_MINOR_CEILING = 20000


class LaurentMatrix:
    __slots__ = ("nvars", "rows", "cols", "entries")

    def __init__(self, nvars: int, rows: int, cols: int, entries):
        self.nvars = nvars
        self.rows = rows
        self.cols = cols
        ents = tuple(tuple(row) for row in entries)
        if len(ents) != rows or any(len(r) != cols for r in ents):
            raise ValueError("entry grid does not match the declared shape")
        for row in ents:
            for p in row:
                if p.nvars != nvars:
                    raise VariableCountMismatch(
                        f"entry with {p.nvars} variables in a {nvars}-variable matrix")
        self.entries = ents

    @classmethod
    def from_rows(cls, nvars: int, rows) -> "LaurentMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        return cls(nvars, len(rows), ncols, rows)

    @classmethod
    def zeros(cls, nvars: int, rows: int, cols: int) -> "LaurentMatrix":
        z = LaurentPolynomial.zero(nvars)
        return cls(nvars, rows, cols, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, nvars: int, n: int) -> "LaurentMatrix":
        one = LaurentPolynomial.one(nvars)
        z = LaurentPolynomial.zero(nvars)
        return cls(nvars, n, n, [[one if i == j else z for j in range(n)]
                                 for i in range(n)])

    def transpose(self) -> "LaurentMatrix":
        return LaurentMatrix(self.nvars, self.cols, self.rows,
                             [[self.entries[i][j] for i in range(self.rows)]
                              for j in range(self.cols)])

    def __matmul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        z = LaurentPolynomial.zero(self.nvars)
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = z
                for k in range(self.cols):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if a.terms and b.terms:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return LaurentMatrix(self.nvars, self.rows, other.cols, out)

    def map_entries(self, fn, nvars: int | None = None) -> "LaurentMatrix":
        return LaurentMatrix(self.nvars if nvars is None else nvars,
                             self.rows, self.cols,
                             [[fn(p) for p in row] for row in self.entries])

    def substitute_exponents(self, matrix) -> "LaurentMatrix":
        return self.map_entries(lambda p: p.substitute_exponents(matrix),
                                nvars=len(matrix))

    def evaluate(self, character: Character) -> list[list[Fraction]]:
        return [[p.evaluate(character) for p in row] for row in self.entries]

    def is_zero(self) -> bool:
        return all(p.is_zero() for row in self.entries for p in row)

    def __eq__(self, other) -> bool:
        return (isinstance(other, LaurentMatrix)
                and (self.nvars, self.rows, self.cols) == (other.nvars, other.rows, other.cols)
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.nvars, self.rows, self.cols, self.entries))

    def to_text_rows(self, names=None) -> list[list[str]]:
        return [[p.to_text(names) for p in row] for row in self.entries]

    def __repr__(self) -> str:
        return f"LaurentMatrix({self.rows}x{self.cols}, {self.nvars} vars)"


def rank_at(matrix: LaurentMatrix, character: Character) -> int:
    """Rank of the evaluated matrix at a rational character, or the rank
    over the fraction field at the generic point.  The generic rank bounds
    every pointwise rank from above and is attained on a nonempty Zariski
    open set."""
    if character.is_generic:
        return generic_rank(matrix)
    return rational_rank(matrix.evaluate(character))


def generic_rank(matrix: LaurentMatrix) -> int:
    rows = [list(r) for r in matrix.entries]
    nr, nc = matrix.rows, matrix.cols
    if nr == 0 or nc == 0:
        return 0
    one = LaurentPolynomial.one(matrix.nvars)
    prev = one
    rank = 0
    for col in range(nc):
        pivot = None
        for r in range(rank, nr):
            p = rows[r][col]
            if p.terms and (pivot is None or len(p.terms) < len(rows[pivot][col].terms)):
                pivot = r
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][col]
        top = rows[rank]
        for r in range(rank + 1, nr):
            f = rows[r][col]
            new_row = [rows[r][j] * p - f * top[j] for j in range(nc)]
            if not prev.is_one():
                divided = [q.exact_divide(prev) for q in new_row]
                if all(d is not None for d in divided):
                    new_row = divided
            rows[r] = _strip_row_units(new_row)
        prev = p
        rank += 1
        if rank == min(nr, nc):
            break
    return rank


def _strip_row_units(row):
    """Divide a whole row by its common unit factor (rational content and
    monomial floor); preserves the row space exactly."""
    nonzero = [p for p in row if p.terms]
    if not nonzero:
        return row
    content = nonzero[0].content()
    for p in nonzero[1:]:
        c = p.content()
        content = Fraction(_gcd_frac(content, c))
    floor = list(nonzero[0].monomial_floor())
    for p in nonzero[1:]:
        for i, x in enumerate(p.monomial_floor()):
            if x < floor[i]:
                floor[i] = x
    if content == 1 and not any(floor):
        return row
    shift = tuple(-x for x in floor)
    return [p.shift(shift).scale(1 / content) if p.terms else p for p in row]


def _gcd_frac(a: Fraction, b: Fraction) -> Fraction:
    from math import gcd
    num = gcd(a.numerator, b.numerator)
    den = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
    return Fraction(num, den)


def minors(matrix: LaurentMatrix, k: int,
           ceiling: int = DEFAULT_MINOR_CEILING) -> list[LaurentPolynomial]:
    """All k x k minors as exact determinants.  k = 0 gives [1] (the empty
    determinant).  Raises TooManyMinors when the combinatorial count
    exceeds the ceiling."""
    if k < 0:
        raise ValueError("minor size must be >= 0")
    if k == 0:
        return [LaurentPolynomial.one(matrix.nvars)]
    if k > min(matrix.rows, matrix.cols):
        raise ValueError(f"no {k}x{k} minors in a {matrix.rows}x{matrix.cols} matrix")
    count = comb(matrix.rows, k) * comb(matrix.cols, k)
    if count > ceiling:
        raise TooManyMinors(count, ceiling)
    out = []
    for row_idx in combinations(range(matrix.rows), k):
        for col_idx in combinations(range(matrix.cols), k):
            sub = [[matrix.entries[i][j] for j in col_idx] for i in row_idx]
            out.append(determinant(sub, matrix.nvars))
    return out


def determinant(entries, nvars: int) -> LaurentPolynomial:
    """Exact determinant by Laplace expansion with subset memoization."""
    k = len(entries)
    if k == 0:
        return LaurentPolynomial.one(nvars)
    zero = LaurentPolynomial.zero(nvars)
    prev = {(): LaurentPolynomial.one(nvars)}
    for i in range(k):
        cur: dict[tuple[int, ...], LaurentPolynomial] = {}
        for used, val in prev.items():
            if val.is_zero():
                continue
            position = 0
            for j in range(k):
                if position < len(used) and used[position] == j:
                    position += 1
                    continue
                entry = entries[i][j]
                if not entry.terms:
                    continue
                new_used = tuple(sorted(used + (j,)))
                sign = -1 if (i + new_used.index(j)) % 2 else 1
                term = val * entry
                if sign < 0:
                    term = -term
                cur[new_used] = cur.get(new_used, zero) + term
        prev = cur
    full = tuple(range(k))
    return prev.get(full, zero)


# -- univariate polynomial division and Smith normal form -------------------


def univariate_divmod(f: LaurentPolynomial, g: LaurentPolynomial):
    """Quotient and remainder with span(remainder) < span(divisor), after
    stripping unit monomials.  Both inputs univariate, g nonzero."""
    if g.is_zero():
        raise ZeroDivisionError("univariate division by zero")
    if f.is_zero():
        return f, f
    a, _ = f.exponent_range(0)
    b, _ = g.exponent_range(0)
    fc = _coeff_list(f.shift((-a,)))
    gc = _coeff_list(g.shift((-b,)))
    qc = [Fraction(0)] * max(len(fc) - len(gc) + 1, 0)
    rc = list(fc)
    while len(rc) >= len(gc) and any(rc):
        while rc and rc[-1] == 0:
            rc.pop()
        if len(rc) < len(gc):
            break
        shift = len(rc) - len(gc)
        factor = rc[-1] / gc[-1]
        qc[shift] = factor
        for i, c in enumerate(gc):
            rc[shift + i] -= factor * c
        rc.pop()
    quotient = _from_coeffs(qc).shift((a - b,))
    remainder = _from_coeffs(rc).shift((a,))
    return quotient, remainder


def _coeff_list(p: LaurentPolynomial) -> list[Fraction]:
    _, hi = p.exponent_range(0)
    out = [Fraction(0)] * (hi + 1)
    for (e,), c in p.terms.items():
        out[e] = c
    return out


def _from_coeffs(coeffs) -> LaurentPolynomial:
    return LaurentPolynomial(1, {(i,): c for i, c in enumerate(coeffs) if c})


@dataclass(frozen=True)
class SmithFormUnivariate:
    """Diagonalization U*M*V = D over Q[t, t^-1] with a divisibility chain.

    The matrix is read as a module presentation: ``cols`` generators subject
    to ``rows`` relations, so the cokernel is Lambda^free_rank plus one
    torsion summand Lambda/(f) per invariant factor f.  Invariant factors
    are monic with nonzero constant term.  M = Uinv*D*Vinv reconstructs the
    input exactly.
    """

    invariant_factors: tuple[LaurentPolynomial, ...]
    free_rank: int
    diagonal: LaurentMatrix
    u: LaurentMatrix
    v: LaurentMatrix
    uinv: LaurentMatrix
    vinv: LaurentMatrix

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def torsion_dimension(self) -> int:
        """Q-dimension of the torsion part: sum of factor degree spans."""
        return sum(f.degree_span(0) for f in self.invariant_factors)

    def nontrivial_factors(self) -> tuple[LaurentPolynomial, ...]:
        return tuple(f for f in self.invariant_factors if not f.is_unit())


def smith_univariate(matrix: LaurentMatrix) -> SmithFormUnivariate:
    if matrix.nvars != 1:
        raise NotUnivariate(f"matrix has {matrix.nvars} variables")
    nr, nc = matrix.rows, matrix.cols
    m = [list(row) for row in matrix.entries]
    zero = LaurentPolynomial.zero(1)
    one = LaurentPolynomial.one(1)
    u = _ident_grid(nr)
    uinv = _ident_grid(nr)
    v = _ident_grid(nc)
    vinv = _ident_grid(nc)

    def row_add(dst, src, q):
        # row_dst += q * row_src
        for j in range(nc):
            m[dst][j] = m[dst][j] + q * m[src][j]
        for j in range(nr):
            u[dst][j] = u[dst][j] + q * u[src][j]
        for i in range(nr):
            uinv[i][src] = uinv[i][src] - q * uinv[i][dst]

    def row_swap(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]
        for r in range(nr):
            uinv[r][i], uinv[r][j] = uinv[r][j], uinv[r][i]

    def row_scale(i, unit):
        inv = _unit_inverse(unit)
        for j in range(nc):
            m[i][j] = m[i][j] * unit
        for j in range(nr):
            u[i][j] = u[i][j] * unit
        for r in range(nr):
            uinv[r][i] = uinv[r][i] * inv

    def col_add(dst, src, q):
        for i in range(nr):
            m[i][dst] = m[i][dst] + q * m[i][src]
        for i in range(nc):
            v[i][dst] = v[i][dst] + q * v[i][src]
        for j in range(nc):
            vinv[src][j] = vinv[src][j] - q * vinv[dst][j]

    def col_swap(i, j):
        for r in range(nr):
            m[r][i], m[r][j] = m[r][j], m[r][i]
        for r in range(nc):
            v[r][i], v[r][j] = v[r][j], v[r][i]
        vinv[i], vinv[j] = vinv[j], vinv[i]

    s = 0
    while s < min(nr, nc):
        pos = _min_span_entry(m, s, nr, nc)
        if pos is None:
            break
        if pos[0] != s:
            row_swap(s, pos[0])
        if pos[1] != s:
            col_swap(s, pos[1])
        while True:
            # clear column s below the pivot
            progressed = True
            while progressed:
                progressed = False
                for i in range(s + 1, nr):
                    if m[i][s].terms:
                        q, r = univariate_divmod(m[i][s], m[s][s])
                        row_add(i, s, -q)
                        if r.terms:
                            row_swap(s, i)
                            progressed = True
                for j in range(s + 1, nc):
                    if m[s][j].terms:
                        q, r = univariate_divmod(m[s][j], m[s][s])
                        col_add(j, s, -q)
                        if r.terms:
                            col_swap(s, j)
                            progressed = True
            # enforce divisibility of the remaining block by the pivot
            offender = None
            for i in range(s + 1, nr):
                for j in range(s + 1, nc):
                    if m[i][j].terms:
                        _, r = univariate_divmod(m[i][j], m[s][s])
                        if r.terms:
                            offender = i
                            break
                if offender is not None:
                    break
            if offender is None:
                break
            row_add(s, offender, one)
        monic = m[s][s].monic_univariate()
        unit = _unit_quotient(monic, m[s][s])
        if not unit.is_one():
            row_scale(s, unit)
        s += 1

    factors = tuple(m[i][i] for i in range(min(nr, nc)) if m[i][i].terms)
    return SmithFormUnivariate(
        invariant_factors=factors,
        free_rank=nc - len(factors),
        diagonal=LaurentMatrix(1, nr, nc, m),
        u=LaurentMatrix(1, nr, nr, u),
        v=LaurentMatrix(1, nc, nc, v),
        uinv=LaurentMatrix(1, nr, nr, uinv),
        vinv=LaurentMatrix(1, nc, nc, vinv),
    )


def _ident_grid(n: int):
    one = LaurentPolynomial.one(1)
    zero = LaurentPolynomial.zero(1)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def _min_span_entry(m, s, nr, nc):
    best = None
    best_key = None
    for i in range(s, nr):
        for j in range(s, nc):
            if m[i][j].terms:
                key = (m[i][j].degree_span(0), len(m[i][j].terms))
                if best_key is None or key < best_key:
                    best, best_key = (i, j), key
    return best


def _unit_inverse(unit: LaurentPolynomial) -> LaurentPolynomial:
    ((e,), c), = [(k, v) for k, v in unit.terms.items()]
    return LaurentPolynomial(1, {(-e,): 1 / c})


def _unit_quotient(target: LaurentPolynomial, source: LaurentPolynomial) -> LaurentPolynomial:
    """The unit u with source * u = target, for associate polynomials."""
    (et, ct) = target.leading()
    (es, cs) = source.leading()
    return LaurentPolynomial(1, {tuple(a - b for a, b in zip(et, es)): ct / cs})
