"""Finite group presentations, abelianizations, and maps onto Z^m."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NotSurjective, RelatorNotKilled, ZeroMap
from .intlinalg import mat_mul, mat_vec, smith_normal_form
from .words import Word


@dataclass(frozen=True)
class Presentation:
    """A finite presentation <generators | relators>.

    ``tags`` carries catalog metadata set only by the construction helpers
    (asphericity, curve Euler characteristic, product factor data); parsed
    user input never has tags.
    """

    generators: tuple[str, ...]
    relators: tuple[Word, ...]
    tags: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("generator names must be distinct")
        n = len(self.generators)
        for r in self.relators:
            if r.max_generator() >= n:
                raise ValueError("relator uses an undeclared generator")

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def exponent_matrix(self) -> list[list[int]]:
        """Relators x generators matrix of total exponents."""
        return [list(r.exponent_vector(self.ngens)) for r in self.relators]

    def describe(self) -> str:
        gens = ", ".join(self.generators)
        rels = "; ".join(r.to_text(self.generators) for r in self.relators)
        return f"<{gens} | {rels}>" if rels else f"<{gens} | >"


@dataclass(frozen=True)
class AbelianData:
    """H_1 of a presentation: free rank, torsion chain, and the projection
    Z^n -> Z^m onto the free part together with an integer section of it."""

    torsion_free_rank: int
    torsion_invariants: tuple[int, ...]
    projection: tuple[tuple[int, ...], ...]  # m x n
    section: tuple[tuple[int, ...], ...]  # n x m, projection @ section = I

    def project(self, vec) -> tuple[int, ...]:
        return tuple(mat_vec([list(r) for r in self.projection], list(vec)))


@dataclass(frozen=True)
class EpimorphismToZm:
    """A surjection G -> Z^m recorded by generator images."""

    target_rank: int
    images: tuple[tuple[int, ...], ...]  # one vector in Z^m per generator

    def of_word(self, w: Word) -> tuple[int, ...]:
        out = [0] * self.target_rank
        for g, e in w.syllables:
            img = self.images[g]
            for l in range(self.target_rank):
                out[l] += e * img[l]
        return tuple(out)

    def is_zero(self) -> bool:
        return all(all(x == 0 for x in img) for img in self.images)


def abelianize(presentation: Presentation) -> AbelianData:
    """Smith normal form of the relator exponent lattice.

    For presentations tagged as direct products the projection is assembled
    blockwise from the factors, so that character coordinates line up with
    the tensor chain model; this agrees with the Smith route up to a
    unimodular change of coordinates.
    """
    factors = presentation.tags.get("factors")
    if factors:
        return _abelianize_product(factors)
    n = presentation.ngens
    # columns of A are the relator exponent vectors
    a = [[r.exponent_vector(n)[i] for r in presentation.relators]
         for i in range(n)]
    d, u, _v, uinv, _vinv = smith_normal_form(a)
    diag = [d[i][i] for i in range(min(n, len(presentation.relators)))]
    k = sum(1 for x in diag if x)
    torsion = tuple(x for x in diag if x > 1)
    projection = tuple(tuple(u[i]) for i in range(k, n))
    section = tuple(tuple(uinv[i][k:n]) for i in range(n))
    return AbelianData(n - k, torsion, projection, section)


def _abelianize_product(factors) -> AbelianData:
    datas = [abelianize(f) for f in factors]
    m = sum(d.torsion_free_rank for d in datas)
    n = sum(len(f.generators) for f in factors)
    projection = [[0] * n for _ in range(m)]
    section = [[0] * m for _ in range(n)]
    row = col = 0
    for f, d in zip(factors, datas):
        for i in range(d.torsion_free_rank):
            for j in range(f.ngens):
                projection[row + i][col + j] = d.projection[i][j]
        for j in range(f.ngens):
            for i in range(d.torsion_free_rank):
                section[col + j][row + i] = d.section[j][i]
        row += d.torsion_free_rank
        col += f.ngens
    torsion = _merge_torsion([d.torsion_invariants for d in datas])
    return AbelianData(m, torsion,
                       tuple(tuple(r) for r in projection),
                       tuple(tuple(r) for r in section))


def _merge_torsion(chains) -> tuple[int, ...]:
    entries = [x for chain in chains for x in chain]
    if not entries:
        return ()
    diag = [[entries[i] if i == j else 0 for j in range(len(entries))]
            for i in range(len(entries))]
    d, *_ = smith_normal_form(diag)
    return tuple(d[i][i] for i in range(len(entries)) if d[i][i] > 1)


def validate_epimorphism(presentation: Presentation, images) -> EpimorphismToZm:
    """Check that generator images define a genuine surjection G -> Z^m.

    Raises RelatorNotKilled, ZeroMap, or NotSurjective.  When the image is a
    finite-index sublattice, the NotSurjective error carries the rational
    re-coordinatizing matrix the caller can compose with to restore
    surjectivity.
    """
    images = tuple(tuple(v) for v in images)
    if len(images) != presentation.ngens:
        raise ValueError("need one image vector per generator")
    ranks = {len(v) for v in images}
    if len(ranks) != 1:
        raise ValueError("image vectors have mixed lengths")
    m = ranks.pop()
    if m < 1:
        raise ValueError("target rank must be >= 1")
    nu = EpimorphismToZm(m, images)
    if nu.is_zero():
        raise ZeroMap("every generator maps to zero")
    for idx, r in enumerate(presentation.relators):
        if any(nu.of_word(r)):
            raise RelatorNotKilled(idx)
    # image lattice: columns are the generator images
    lattice = [[images[i][l] for i in range(presentation.ngens)] for l in range(m)]
    d, u, _v, _uinv, _vinv = smith_normal_form(lattice)
    diag = [d[i][i] for i in range(min(m, presentation.ngens))]
    if len(diag) < m or 0 in diag:
        raise NotSurjective(f"images span a rank-{sum(1 for x in diag if x)} "
                            f"sublattice of Z^{m}")
    if any(x != 1 for x in diag):
        recoord = [[Fraction(u[i][j], diag[i]) for j in range(m)] for i in range(m)]
        raise NotSurjective(
            "images span a finite-index proper sublattice of Z^"
            f"{m} (index {_prod(diag)})", recoordinatize=recoord)
    return nu


def _prod(xs) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


def induced_on_free_part(nu: EpimorphismToZm, abelian: AbelianData):
    """The integer matrix nubar with nubar o projection = images.

    Exists and is unique because Z^m is torsion-free, so nu factors through
    the free part of H_1.  Returned as a target_rank x torsion_free_rank
    matrix of ints.
    """
    n = len(abelian.section)
    images = [[nu.images[i][l] for i in range(n)] for l in range(nu.target_rank)]
    section = [list(r) for r in abelian.section]
    nubar = mat_mul(images, section)
    check = mat_mul(nubar, [list(r) for r in abelian.projection])
    if check != images:
        raise ValueError("map does not factor through the free part of H_1")
    return nubar
