"""Index-2 subgroup presentations by Reidemeister-Schreier rewriting.

For a surjection nu: G -> Z, the preimage of 2Z has index 2; its ordinary
first Betti number must equal the sum of the twisted first Betti numbers of
G at the two characters factoring through Z/2.  That identity is an
independent consistency check on the whole Fox-calculus pipeline, which is
why it is computed here from scratch with no Laurent machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complexes import presentation_complex, twisted_betti
from .intlinalg import integer_rank
from .laurent import Character, pullback_character
from .presentations import EpimorphismToZm, Presentation, abelianize, induced_on_free_part
from .words import Word


@dataclass(frozen=True)
class CoverReport:
    subgroup: Presentation
    b1_cover: int
    b1_trivial_character: int
    b1_order2_character: int
    consistent: bool

    def to_json_dict(self) -> dict:
        return {
            "subgroup_generators": list(self.subgroup.generators),
            "subgroup_relators": [r.to_text(self.subgroup.generators)
                                  for r in self.subgroup.relators],
            "b1_cover": self.b1_cover,
            "b1_trivial_character": self.b1_trivial_character,
            "b1_order2_character": self.b1_order2_character,
            "consistent": self.consistent,
        }


def index_two_subgroup(presentation: Presentation, nu: EpimorphismToZm) -> Presentation:
    """Presentation of nu^-1(2Z) on the Schreier generators.

    Transversal {1, x0} with x0 any generator of odd image; the trivial
    Schreier pair (1, x0) is discarded, leaving 2n - 1 generators and one
    rewritten relator per relator and coset.
    """
    if nu.target_rank != 1:
        raise ValueError("index-two construction needs a map onto Z")
    parity = [abs(nu.images[i][0]) % 2 for i in range(presentation.ngens)]
    if 1 not in parity:
        raise ValueError("no generator has odd image; map is not onto Z")
    odd = parity.index(1)

    # Schreier generator table: gens[(coset, generator)] -> subgroup index
    names: list[str] = []
    table: dict[tuple[int, int], int | None] = {}
    for coset in (0, 1):
        for g in range(presentation.ngens):
            if coset == 0 and g == odd:
                table[(coset, g)] = None  # the trivial Schreier generator
            else:
                table[(coset, g)] = len(names)
                names.append(f"{presentation.generators[g]}_c{coset}")

    def rewrite(word: Word, start_coset: int) -> Word:
        out = Word.identity()
        coset = start_coset
        for g, step in word.letters():
            if step == 1:
                idx = table[(coset, g)]
                coset ^= parity[g]
                if idx is not None:
                    out = out * Word.generator(idx)
            else:
                coset ^= parity[g]
                idx = table[(coset, g)]
                if idx is not None:
                    out = out * Word.generator(idx, -1)
        return out

    relators = []
    for r in presentation.relators:
        for coset in (0, 1):
            rewritten = rewrite(r, coset)
            if not rewritten.is_identity():
                relators.append(rewritten)
    return Presentation(tuple(names), tuple(relators))


def finite_cover_oracle(presentation: Presentation, nu: EpimorphismToZm) -> CoverReport:
    """Check b_1(index-2 subgroup) = b_1(G, trivial) + b_1(G, order-2).

    The left side is ordinary homology of the Reidemeister-Schreier
    presentation; the right side evaluates the twisted chain complex at the
    two characters pulled back from Z -> {+1, -1}.
    """
    subgroup = index_two_subgroup(presentation, nu)
    exponents = subgroup.exponent_matrix()
    b1_cover = subgroup.ngens - integer_rank(exponents)

    abelian = abelianize(presentation)
    nubar = induced_on_free_part(nu, abelian)
    cx = presentation_complex(presentation, abelian)
    b1 = {}
    for value in (Fraction(1), Fraction(-1)):
        rho = pullback_character(nubar, Character((value,)), cx.nvars)
        b1[value] = twisted_betti(cx, rho).betti[1]
    return CoverReport(
        subgroup=subgroup,
        b1_cover=b1_cover,
        b1_trivial_character=b1[Fraction(1)],
        b1_order2_character=b1[Fraction(-1)],
        consistent=b1_cover == b1[Fraction(1)] + b1[Fraction(-1)],
    )
