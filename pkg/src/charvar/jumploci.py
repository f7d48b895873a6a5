"""Membership in the homology jump loci and fullness decisions.

The depth-t locus in degree one is, away from the trivial character, the
zero set of the (n - t)-minors of the Alexander matrix.  Fullness of a
locus is decided by exact symbolic generic rank, never by sampling alone:
the locus is closed, so it fills the torus exactly when the generic Betti
number already jumps, and sampling only corroborates the verdict.  The
trivial character and the order-2 character are checked explicitly in
every verdict.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .complexes import TwistedComplex, tensor_complex, twisted_betti
from .constructions import GroupModel, build_model
from .errors import UnsupportedDegree
from .fox import alexander_matrix
from .intlinalg import integer_rank
from .laurent import GENERIC, Character, LaurentPolynomial
from .lmatrix import DEFAULT_MINOR_CEILING, minors
from .presentations import Presentation, abelianize
from .sampling import sample_character


@dataclass(frozen=True)
class JumpLocusQuery:
    degree: int
    depth: int
    presentation: Presentation
    complex: TwistedComplex
    character: Character

    @classmethod
    def build(cls, presentation: Presentation, degree: int, depth: int,
              character: Character, model: GroupModel | None = None) -> "JumpLocusQuery":
        model = model or build_model(presentation)
        return cls(degree, depth, presentation, model.complex, character)


def in_variety(query: JumpLocusQuery) -> bool:
    """Whether the character lies in the degree-s depth-t jump locus,
    i.e. b_s at the character is at least t."""
    if query.character.is_generic:
        raise ValueError("membership queries need a rational character")
    s = query.degree
    if s < 0 or s > query.complex.top:
        raise UnsupportedDegree(f"degree {s} outside the complex (top "
                                f"{query.complex.top})")
    if s >= 2 and not query.presentation.tags.get("aspherical", False):
        raise UnsupportedDegree(
            "degree >= 2 jump loci need an aspherical chain model; "
            "this presentation only certifies degrees <= 1")
    profile = twisted_betti(query.complex, query.character)
    return profile.betti[s] >= query.depth


@dataclass(frozen=True)
class V1Ideal:
    generators: tuple[LaurentPolynomial, ...]
    minor_size: int
    zero_ideal: bool
    unit_ideal: bool
    trivial_character_b1: int
    by_shape: bool

    def to_json_dict(self) -> dict:
        return {
            "generators": [g.to_text() for g in self.generators],
            "minor_size": self.minor_size,
            "zero_ideal": self.zero_ideal,
            "unit_ideal": self.unit_ideal,
            "trivial_character_b1": self.trivial_character_b1,
            "zero_ideal_by_shape": self.by_shape,
        }


def v1_ideal(presentation: Presentation, depth: int = 1,
             ceiling: int = DEFAULT_MINOR_CEILING) -> V1Ideal:
    """Generators of the determinantal ideal cutting out the depth-t locus
    in degree one, away from the trivial character.

    Size-(n-t) minors of the Alexander matrix vanish exactly where the
    matrix rank drops to n-1-t, i.e. where b_1 >= t for a nontrivial
    character.  At the trivial character b_1 = n - rank(exponent matrix),
    reported separately.  When n - t exceeds the matrix dimensions there
    are no minors and the ideal is zero (locus is everything); when
    n - t <= 0 no character can jump that far and the ideal is the unit
    ideal.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    abelian = abelianize(presentation)
    alex = alexander_matrix(presentation, abelian)
    n = presentation.ngens
    k = n - depth
    trivial_b1 = n - integer_rank(presentation.exponent_matrix())
    if k <= 0:
        return V1Ideal((LaurentPolynomial.one(alex.nvars),), k,
                       zero_ideal=False, unit_ideal=True,
                       trivial_character_b1=trivial_b1, by_shape=True)
    if k > min(alex.rows, alex.cols):
        return V1Ideal((), k, zero_ideal=True, unit_ideal=False,
                       trivial_character_b1=trivial_b1, by_shape=True)
    gens = []
    seen = set()
    for g in minors(alex, k, ceiling):
        if g.is_zero():
            continue
        normal = g.unit_normal()
        if normal not in seen:
            seen.add(normal)
            gens.append(normal)
    gens.sort(key=lambda p: p.to_text())
    return V1Ideal(tuple(gens), k, zero_ideal=not gens, unit_ideal=False,
                   trivial_character_b1=trivial_b1, by_shape=False)


@dataclass(frozen=True)
class FullnessVerdict:
    """Outcome of a fullness decision.

    ``status`` distinguishes a definite negative ("not_full") from a
    hypothesis the method cannot settle ("not_concluded"); the sufficiency
    route through factors is one-directional.
    """

    is_full: bool
    status: str  # "full" | "not_full" | "not_concluded"
    method: str | None
    witness: dict = field(default_factory=dict)
    reason: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "is_full": self.is_full,
            "status": self.status,
            "method": self.method,
            "witness": self.witness,
            "reason": self.reason,
        }


def generic_betti_in_degree(complex_: TwistedComplex, degree: int) -> int:
    """b_degree at the generic point, computed from just the two adjacent
    ranks (the full generic profile of a large tensor model is far more
    expensive than the one degree a fullness decision needs)."""
    if degree < 0 or degree > complex_.top:
        raise UnsupportedDegree(f"degree {degree} outside the complex")
    from .lmatrix import rank_at as _rank
    r_here = _rank(complex_.differential(degree), GENERIC) if degree >= 1 else 0
    d_next = complex_.differential(degree + 1)
    r_next = _rank(d_next, GENERIC) if d_next is not None else 0
    return complex_.ranks[degree] - r_here - r_next


def _special_point_checks(complex_: TwistedComplex, degree: int) -> list[dict]:
    """Betti numbers in the target degree at the trivial character and the
    order-2 character with every coordinate -1."""
    points = [("trivial", Character.trivial(complex_.nvars))]
    if complex_.nvars:
        points.append(("order2-all-minus",
                       Character((Fraction(-1),) * complex_.nvars)))
    out = []
    for label, rho in points:
        betti = twisted_betti(complex_, rho).betti
        out.append({"point": label,
                    "character": rho.describe(),
                    "betti": list(betti),
                    "b_degree": betti[degree] if degree <= len(betti) - 1 else 0})
    return out


def is_full_v1(presentation: Presentation,
               model: GroupModel | None = None) -> FullnessVerdict:
    """Does the degree-one depth-one locus fill the whole torus?

    Curve groups with negative Euler characteristic are full with no
    elimination: the twisted Euler characteristic is character-independent
    and forces b_1 > 0 everywhere.  Otherwise decide by exact generic rank;
    since every rank only drops on closed sets, b_1 is minimized at the
    generic point and the generic value settles the question in both
    directions.
    """
    chi = presentation.tags.get("curve_chi")
    model = model or build_model(presentation)
    if chi is not None and chi < 0:
        specials = _special_point_checks(model.complex, 1)
        assert all(p["b_degree"] >= 1 for p in specials)
        return FullnessVerdict(True, "full", "euler-curve",
                               witness={"chi": chi, "special_points": specials})
    generic_b1 = generic_betti_in_degree(model.complex, 1)
    specials = _special_point_checks(model.complex, 1)
    witness = {"generic_b1": generic_b1, "special_points": specials}
    if generic_b1 >= 1:
        assert all(p["b_degree"] >= 1 for p in specials)
        return FullnessVerdict(True, "full", "generic-rank", witness=witness)
    return FullnessVerdict(False, "not_full", "generic-rank", witness=witness,
                           reason="generic b_1 = 0, so the locus misses a "
                                  "nonempty open set")


def is_full_vr_product(factors, r: int, seed: int = 0,
                       spot_samples: int = 3) -> FullnessVerdict:
    """Sufficiency route for a product: if every factor's degree-one locus
    is full, the degree-r locus of the product fills its torus (the r-fold
    tensor of jumping classes survives).  A non-full factor leaves the
    question open, not answered."""
    factors = tuple(factors)
    if r != len(factors):
        raise ValueError(f"degree r={r} must equal the number of factors "
                         f"({len(factors)})")
    verdicts = [is_full_v1(f) for f in factors]
    factor_witness = [v.to_json_dict() for v in verdicts]
    for i, v in enumerate(verdicts):
        if not v.is_full:
            return FullnessVerdict(
                False, "not_concluded", "kunneth-product",
                witness={"factors": factor_witness},
                reason=f"factor {i + 1} not full; the product criterion "
                       f"is sufficient only")
    models = [build_model(f) for f in factors]
    cx = models[0].complex
    for part in models[1:]:
        cx = tensor_complex(cx, part.complex)
    rng = random.Random(seed)
    samples = []
    for _ in range(spot_samples):
        rho = sample_character(rng, cx.nvars, box=3)
        betti = twisted_betti(cx, rho).betti
        samples.append({"character": rho.describe(),
                        "betti": list(betti), "b_r": betti[r]})
    specials = _special_point_checks(cx, r)
    assert all(s["b_r"] >= 1 for s in samples)
    assert all(p["b_degree"] >= 1 for p in specials)
    return FullnessVerdict(True, "full", "kunneth-product", witness={
        "factors": factor_witness,
        "spot_checks": samples,
        "special_points": specials,
        "seed": seed,
    })
