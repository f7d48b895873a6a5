"""Catalog of groups and spaces: surface groups, free groups, direct
products, right-angled Artin groups with their one-vertex-per-circle cube
complexes, flag complexes, and the branched-cover numerology for products
of curves over an elliptic base.

Constructors attach catalog tags (asphericity, curve Euler characteristic,
product factor data, defining graph).  Parsed user presentations never get
tags: asphericity is undecidable in general, so only the catalog asserts it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .complexes import TwistedComplex, presentation_complex, tensor_complex
from .errors import GenusTooSmall, PresentationSyntaxError
from .intlinalg import integer_rank
from .laurent import LaurentPolynomial
from .lmatrix import LaurentMatrix
from .presentations import AbelianData, EpimorphismToZm, Presentation, abelianize
from .words import Word, commutator


# -- graphs ------------------------------------------------------------------


@dataclass(frozen=True)
class Graph:
    nverts: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        for u, v in self.edges:
            if u == v:
                raise ValueError("loops are not allowed")
            if not (0 <= u < self.nverts and 0 <= v < self.nverts):
                raise ValueError("edge endpoint out of range")
            if u > v:
                raise ValueError("edges must be stored as sorted pairs")

    @classmethod
    def from_edges(cls, nverts: int, edges) -> "Graph":
        return cls(nverts, frozenset(tuple(sorted(e)) for e in edges))

    def adjacent(self, u: int, v: int) -> bool:
        return tuple(sorted((u, v))) in self.edges

    def is_connected(self) -> bool:
        if self.nverts == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in range(self.nverts):
                if v not in seen and self.adjacent(u, v):
                    seen.add(v)
                    stack.append(v)
        return len(seen) == self.nverts

    def cliques(self) -> list[list[tuple[int, ...]]]:
        """All cliques grouped by size, starting with the empty clique."""
        by_size: list[list[tuple[int, ...]]] = [[()]]
        current = [(v,) for v in range(self.nverts)]
        while current:
            by_size.append(current)
            bigger = []
            for clique in current:
                for v in range(clique[-1] + 1, self.nverts):
                    if all(self.adjacent(u, v) for u in clique):
                        bigger.append(clique + (v,))
            current = bigger
        return by_size


def parse_graph_text(text: str) -> Graph:
    """Edge-list format: a ``v N`` line then ``e I J`` lines; # comments."""
    nverts = None
    edges = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "v" and len(parts) == 2:
            nverts = int(parts[1])
        elif parts[0] == "e" and len(parts) == 3:
            if nverts is None:
                raise PresentationSyntaxError("e before v", line_no, 1)
            edges.append((int(parts[1]), int(parts[2])))
        else:
            raise PresentationSyntaxError(f"bad graph line {line!r}", line_no, 1)
    if nverts is None:
        raise PresentationSyntaxError("missing v line", 1, 1)
    return Graph.from_edges(nverts, edges)


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def edgeless_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])


def octahedron_graph() -> Graph:
    """Complete tripartite on parts {0,1}, {2,3}, {4,5}: the join of three
    2-point sets, whose right-angled Artin group is F_2 x F_2 x F_2."""
    parts = [(0, 1), (2, 3), (4, 5)]
    edges = [(u, v) for a, b in combinations(parts, 2) for u in a for v in b]
    return Graph.from_edges(6, edges)


# -- simplicial complexes ------------------------------------------------------


@dataclass(frozen=True)
class SimplicialComplex:
    facets: tuple[tuple[int, ...], ...]

    def simplices(self) -> list[list[tuple[int, ...]]]:
        """All simplices grouped by dimension (0-simplices first)."""
        seen: set[tuple[int, ...]] = set()
        for facet in self.facets:
            for size in range(1, len(facet) + 1):
                seen.update(combinations(facet, size))
        if not seen:
            return []
        top = max(len(s) for s in seen)
        return [sorted(s for s in seen if len(s) == d + 1) for d in range(top)]


def flag_complex(graph: Graph) -> SimplicialComplex:
    """Simplices are the cliques of the graph; facets the maximal ones."""
    cliques = [c for group in graph.cliques()[1:] for c in group]
    clique_set = set(cliques)
    facets = [c for c in cliques
              if not any(set(c) < set(d) for d in clique_set if len(d) > len(c))]
    return SimplicialComplex(tuple(sorted(facets)))


def reduced_homology(complex_: SimplicialComplex) -> tuple[int, ...]:
    """Reduced rational Betti numbers by boundary-matrix ranks, with the
    empty simplex providing the augmentation."""
    by_dim = complex_.simplices()
    if not by_dim:
        return ()
    index = [{s: i for i, s in enumerate(group)} for group in by_dim]
    ranks = [0] * (len(by_dim) + 1)
    # augmentation: every vertex maps to the empty simplex
    ranks[0] = 1 if by_dim[0] else 0
    for d in range(1, len(by_dim)):
        rows, cols = len(by_dim[d - 1]), len(by_dim[d])
        grid = [[0] * cols for _ in range(rows)]
        for j, simplex in enumerate(by_dim[d]):
            for i in range(len(simplex)):
                face = simplex[:i] + simplex[i + 1:]
                grid[index[d - 1][face]][j] = -1 if i % 2 else 1
        ranks[d] = integer_rank(grid)
    return tuple(len(by_dim[d]) - ranks[d] - ranks[d + 1]
                 for d in range(len(by_dim)))


# -- catalog groups ------------------------------------------------------------


def surface_group(genus: int) -> Presentation:
    """<a_1,b_1,...,a_g,b_g | [a_1,b_1]...[a_g,b_g]>, the fundamental group
    of the closed orientable surface; aspherical, chi = 2 - 2g."""
    if genus < 1:
        raise GenusTooSmall("surface groups need genus >= 1")
    names = []
    for i in range(1, genus + 1):
        names += [f"a{i}", f"b{i}"]
    relator = Word.identity()
    for i in range(genus):
        relator = relator * commutator(Word.generator(2 * i), Word.generator(2 * i + 1))
    return Presentation(tuple(names), (relator,), tags={
        "name": f"surface_genus_{genus}",
        "aspherical": True,
        "curve_chi": 2 - 2 * genus,
    })


def punctured_surface_group(genus: int, punctures: int) -> Presentation:
    """Free group of rank 2g + n - 1: the fundamental group of the genus-g
    surface with n >= 1 punctures; chi = 2 - 2g - n."""
    if punctures < 1:
        raise ValueError("need at least one puncture")
    names = []
    for i in range(1, genus + 1):
        names += [f"a{i}", f"b{i}"]
    names += [f"p{i}" for i in range(1, punctures)]
    return Presentation(tuple(names), (), tags={
        "name": f"punctured_surface_{genus}_{punctures}",
        "aspherical": True,
        "curve_chi": 2 - 2 * genus - punctures,
    })


def free_group(rank: int) -> Presentation:
    """F_rank as a thrice-punctured-sphere-style curve group."""
    return punctured_surface_group(0, rank + 1)


def direct_product(factors) -> Presentation:
    """Union of the factor presentations plus commutators between
    generators of distinct factors.  Homology computations use the tensor
    product of the factor chain models, not this presentation's 2-complex."""
    factors = tuple(factors)
    if len(factors) < 2:
        raise ValueError("a direct product needs at least two factors")
    names = []
    offsets = []
    for j, f in enumerate(factors, start=1):
        offsets.append(len(names))
        names += [f"{g}_f{j}" for g in f.generators]
    relators = []
    for off, f in zip(offsets, factors):
        for r in f.relators:
            relators.append(Word((g + off, e) for g, e in r.syllables))
    for (off_a, fa), (off_b, fb) in combinations(zip(offsets, factors), 2):
        for i in range(fa.ngens):
            for j in range(fb.ngens):
                relators.append(commutator(Word.generator(off_a + i),
                                           Word.generator(off_b + j)))
    return Presentation(tuple(names), tuple(relators), tags={
        "name": " x ".join(f.tags.get("name", "?") for f in factors),
        "factors": factors,
        "aspherical": all(f.tags.get("aspherical", False) for f in factors),
    })


def raag(graph: Graph) -> Presentation:
    """One generator per vertex, one commuting relation per edge."""
    names = tuple(f"v{i}" for i in range(graph.nverts))
    relators = tuple(commutator(Word.generator(u), Word.generator(v))
                     for u, v in sorted(graph.edges))
    return Presentation(names, relators, tags={
        "name": f"raag_{graph.nverts}v_{len(graph.edges)}e",
        "aspherical": True,
        "graph": graph,
    })


@dataclass(frozen=True)
class BestvinaBradyData:
    presentation: Presentation
    nu: EpimorphismToZm
    connected: bool


def bestvina_brady(graph: Graph) -> BestvinaBradyData:
    """The Artin group of the graph with the map sending every generator
    to 1 in Z.  A disconnected graph is flagged: the kernel is then not
    even finitely generated for trivial reasons."""
    presentation = raag(graph)
    nu = EpimorphismToZm(1, tuple((1,) for _ in range(graph.nverts)))
    return BestvinaBradyData(presentation, nu, graph.is_connected())


def raag_chain_model(graph: Graph) -> TwistedComplex:
    """Cellular chain complex of the clique cube complex over the full
    character torus (one variable per vertex): the degree-k summand is free
    on the k-cliques, and the boundary of a cube cell weights each deleted
    vertex by t_v - 1 with simplicial signs."""
    cliques = graph.cliques()
    m = graph.nverts
    ranks = tuple(len(group) for group in cliques)
    diffs = []
    zero = LaurentPolynomial.zero(m)
    one = LaurentPolynomial.one(m)
    for k in range(1, len(cliques)):
        index = {c: i for i, c in enumerate(cliques[k - 1])}
        grid = [[zero] * ranks[k] for _ in range(ranks[k - 1])]
        for col, clique in enumerate(cliques[k]):
            for i, v in enumerate(clique):
                face = clique[:i] + clique[i + 1:]
                weight = LaurentPolynomial.variable(v, m) - one
                if i % 2:
                    weight = -weight
                row = index[face]
                grid[row][col] = grid[row][col] + weight
        diffs.append(LaurentMatrix(m, ranks[k - 1], ranks[k], grid))
    return TwistedComplex(m, ranks, tuple(diffs))


def raag_complex(graph: Graph) -> TwistedComplex:
    """The chain model pushed through the all-ones map to Z: rank in
    degree k equals the number of k-cliques, entries live in one variable."""
    ones = [[1] * graph.nverts]
    return raag_chain_model(graph).specialize(ones)


# -- chain models ---------------------------------------------------------------


@dataclass(frozen=True)
class GroupModel:
    """A presentation with the chain complex used for its homology.

    ``aspherical`` records whether every degree of the complex computes
    group homology; otherwise only degrees <= 1 do, and degree-2 values are
    homology of the presentation 2-complex.
    """

    presentation: Presentation
    abelian: AbelianData
    complex: TwistedComplex
    aspherical: bool


def build_model(presentation: Presentation) -> GroupModel:
    abelian = abelianize(presentation)
    tags = presentation.tags
    if "factors" in tags:
        parts = [build_model(f) for f in tags["factors"]]
        cx = parts[0].complex
        for part in parts[1:]:
            cx = tensor_complex(cx, part.complex)
    elif "graph" in tags:
        cx = raag_chain_model(tags["graph"])
    else:
        cx = presentation_complex(presentation, abelian)
    return GroupModel(presentation, abelian, cx,
                      bool(tags.get("aspherical", False)))


# -- pencil numerology ----------------------------------------------------------


@dataclass(frozen=True)
class PencilData:
    """Every integer the branched-cover pencil construction determines.

    r double covers of an elliptic curve with genus list g_1..g_r give a
    product X with an isolated-singularity pencil to the base curve; the
    critical points are the tuples of ramification points and the fiber
    has dimension r - 1.
    """

    factors: int
    genus: tuple[int, ...]
    branch_sizes: tuple[int, ...]
    ramification_sizes: tuple[int, ...]
    critical_points: int
    euler_x: int
    fiber_dimension: int
    finiteness_verdict: str | None
    flags: tuple[str, ...]

    def riemann_hurwitz_audit(self) -> list[dict]:
        """chi(C) = 2*chi(E) - sum over ramification points of (e_p - 1)
        with chi(E) = 0 and e_p = 2 throughout: 2 - 2g = -(2g - 2)."""
        audit = []
        for g, b in zip(self.genus, self.branch_sizes):
            left = 2 - 2 * g
            right = 2 * 0 - b * (2 - 1)
            audit.append({"genus": g, "chi_curve": left, "branch_points": b,
                          "rh_left": left, "rh_right": right,
                          "ok": left == right})
        return audit

    def homotopy_module_note(self) -> dict | None:
        """For r >= 3: the first nonvanishing higher homotopy group of the
        fiber is a free module over the fiber group ring, with one
        generator per critical point and per deck translate (a Z^2 of
        them); the fiber group has cohomological dimension >= r."""
        if self.factors < 3:
            return None
        return {
            "module": f"free over the group ring, rank index set = "
                      f"{self.critical_points} x Z^2",
            "critical_points": self.critical_points,
            "deck_group": "Z^2",
            "cohomological_dimension_lower_bound": self.factors,
        }

    def to_json_dict(self) -> dict:
        out = {
            "factors": self.factors,
            "genus": list(self.genus),
            "branch_sizes": list(self.branch_sizes),
            "ramification_sizes": list(self.ramification_sizes),
            "critical_points": self.critical_points,
            "euler_x": self.euler_x,
            "fiber_dimension": self.fiber_dimension,
            "finiteness_verdict": self.finiteness_verdict,
            "flags": list(self.flags),
            "riemann_hurwitz_audit": self.riemann_hurwitz_audit(),
        }
        note = self.homotopy_module_note()
        if note is not None:
            out["homotopy_module_note"] = note
        return out


def pencil_numerology(genus_list) -> PencilData:
    genus = tuple(int(g) for g in genus_list)
    if len(genus) < 2:
        raise ValueError("need at least two factors")
    if any(g < 2 for g in genus):
        raise GenusTooSmall("every factor needs genus >= 2 "
                            "(a smaller genus leaves no branch points)")
    branch = tuple(2 * g - 2 for g in genus)
    critical = 1
    euler = 1
    for g in genus:
        critical *= 2 * g - 2
        euler *= 2 - 2 * g
    r = len(genus)
    if r >= 3:
        verdict = f"F_{r - 1} but not FP_{r}"
        flags = ()
    else:
        verdict = None
        flags = ("fiber dimension 1: the fiber-group identification "
                 "needs total dimension >= 3, so no finiteness verdict",)
    return PencilData(
        factors=r, genus=genus, branch_sizes=branch,
        ramification_sizes=branch, critical_points=critical, euler_x=euler,
        fiber_dimension=r - 1, finiteness_verdict=verdict, flags=flags)


def branch_monodromy_check(genus: int, alpha_images, torus_images=None) -> bool:
    """Valid double-cover datum: every small loop around a branch point
    maps to 1 in Z/2 and the single relation (the loop classes sum to
    zero) is respected.  The images of the base torus classes are
    unconstrained.  |B| = 2g - 2 forces the sum to vanish automatically."""
    if genus < 2:
        raise GenusTooSmall("branch data needs genus >= 2")
    values = [int(x) % 2 for x in alpha_images]
    if len(values) != 2 * genus - 2:
        raise ValueError(f"expected {2 * genus - 2} branch classes, "
                         f"got {len(values)}")
    return all(v == 1 for v in values) and sum(values) % 2 == 0
