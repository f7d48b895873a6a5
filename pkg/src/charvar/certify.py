"""Non-finiteness certificates for kernels of maps onto Z^m.

The criterion is one-directional: when the degree-r depth-one jump locus
fills the whole character torus and the map to Z^m is nontrivial, the
kernel has infinite-dimensional rational homology in some degree <= r, is
not of type FP_r, and (finiteness properties being invariants of
commensurability up to finite kernels) is not commensurable to any FP_r
group.  Nothing is ever concluded in the other direction.

Certificates name the principles they rest on as self-contained
mathematical statements so the chain of reasoning is auditable from the
certificate alone.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from . import __version__
from .complexes import KernelHomologyReport, kernel_homology_univariate, twisted_betti
from .constructions import GroupModel, build_model
from .errors import FullnessNotEstablished, TrivialNu, UnsupportedDegree
from .jumploci import (FullnessVerdict, _special_point_checks,
                       generic_betti_in_degree, is_full_v1, is_full_vr_product)
from .laurent import pullback_character
from .presentations import (EpimorphismToZm, Presentation, induced_on_free_part,
                            validate_epimorphism)
from .sampling import box_for_trial, sample_character

CONCLUSION_HOMOLOGY = "H_leq_r_infinite"
CONCLUSION_NOT_FP = "not_FP_r"
CONCLUSION_NOT_COMMENSURABLE = "not_commensurable_FP_r"

CITATIONS = (
    {
        "id": "full-locus-kills-finiteness",
        "statement": "if the degree-r depth-1 homology jump locus of G fills "
                     "the whole character torus and nu: G -> Z^m is a "
                     "nontrivial homomorphism, then the kernel of nu has "
                     "infinite-dimensional rational homology in degrees <= r",
        "supports": [CONCLUSION_HOMOLOGY, CONCLUSION_NOT_FP],
    },
    {
        "id": "fp-needs-finite-homology",
        "statement": "a group of type FP_r has finitely generated homology "
                     "in every degree <= r",
        "supports": [CONCLUSION_NOT_FP],
    },
    {
        "id": "fp-commensurability-invariance",
        "statement": "type FP_n passes to and from finite-index subgroups and "
                     "through quotients by FP_infinity kernels, so it is "
                     "invariant under commensurability up to finite kernels",
        "supports": [CONCLUSION_NOT_COMMENSURABLE],
    },
    {
        "id": "product-locus-fullness",
        "statement": "for a product of r groups whose degree-1 depth-1 loci "
                     "fill their tori, the degree-r depth-1 locus of the "
                     "product fills its torus (tensor of jumping classes)",
        "supports": ["fullness"],
    },
    {
        "id": "generic-rank-openness",
        "statement": "ranks of Laurent-matrix evaluations drop only on a "
                     "proper closed subvariety, so twisted Betti numbers are "
                     "minimized at the generic point and a generic jump "
                     "forces a jump at every character",
        "supports": ["fullness"],
    },
)


@dataclass(frozen=True)
class Certificate:
    group: str
    nu_images: tuple[tuple[int, ...], ...]
    nu_target_rank: int
    degree: int
    status: str  # "certified" | "not-established"
    conclusions: tuple[str, ...]
    evidence: dict
    citations: tuple[dict, ...]
    seed: int
    failed_hypothesis: str | None = None
    tool_version: str = __version__

    def to_json_dict(self) -> dict:
        return {
            "group": self.group,
            "nu": {"target_rank": self.nu_target_rank,
                   "images": [list(v) for v in self.nu_images]},
            "r": self.degree,
            "status": self.status,
            "conclusions": list(self.conclusions),
            "evidence": self.evidence,
            "citations": [dict(c) for c in self.citations],
            "failed_hypothesis": self.failed_hypothesis,
            "seed": self.seed,
            "tool_version": self.tool_version,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2)


def certify_non_fp(presentation: Presentation, nu: EpimorphismToZm, r: int,
                   strategy: str = "auto", seed: int = 0,
                   require: bool = False) -> Certificate:
    """Run the full pipeline: validate nu, establish fullness of the
    degree-r locus by the requested strategy, and emit the certificate.

    Returns a no-conclusion report when fullness cannot be established
    (or raises FullnessNotEstablished if ``require``).  Never claims the
    kernel IS of type FP_r.
    """
    if r < 1:
        raise ValueError("degree r must be >= 1")
    try:
        nu = validate_epimorphism(presentation, nu.images)
    except Exception as exc:
        from .errors import ZeroMap
        if isinstance(exc, ZeroMap):
            raise TrivialNu("the map to Z^m is trivial") from exc
        raise
    if strategy == "auto":
        strategy = ("kunneth-product" if "factors" in presentation.tags
                    else "generic-rank")

    verdict = _establish_fullness(presentation, r, strategy, seed)
    group_name = presentation.tags.get("name", presentation.describe())
    if verdict.is_full:
        return Certificate(
            group=group_name,
            nu_images=nu.images, nu_target_rank=nu.target_rank, degree=r,
            status="certified",
            conclusions=(CONCLUSION_HOMOLOGY, CONCLUSION_NOT_FP,
                         CONCLUSION_NOT_COMMENSURABLE),
            evidence={"fullness": verdict.to_json_dict()},
            citations=CITATIONS, seed=seed)
    if require:
        raise FullnessNotEstablished(verdict.reason or "fullness not established")
    return Certificate(
        group=group_name,
        nu_images=nu.images, nu_target_rank=nu.target_rank, degree=r,
        status="not-established", conclusions=(),
        evidence={"fullness": verdict.to_json_dict()},
        citations=CITATIONS, seed=seed,
        failed_hypothesis=f"V^{r}_1 = T not established: "
                          f"{verdict.reason or verdict.status}")


def _establish_fullness(presentation: Presentation, r: int, strategy: str,
                        seed: int) -> FullnessVerdict:
    if strategy == "kunneth-product":
        factors = presentation.tags.get("factors")
        if not factors:
            raise ValueError("kunneth-product strategy needs a presentation "
                             "tagged as a direct product")
        return is_full_vr_product(factors, r, seed=seed)
    if strategy != "generic-rank":
        raise ValueError(f"unknown strategy {strategy!r}")
    model = build_model(presentation)
    if r >= 2 and not model.aspherical:
        raise UnsupportedDegree(
            "degree >= 2 fullness needs an aspherical chain model; "
            "only catalog groups carry that certainty")
    if r == 1:
        return is_full_v1(presentation, model)
    if r > model.complex.top:
        return FullnessVerdict(
            False, "not_concluded", "generic-rank",
            reason=f"chain model stops in degree {model.complex.top} < r={r}")
    generic_b = generic_betti_in_degree(model.complex, r)
    specials = _special_point_checks(model.complex, r)
    witness = {f"generic_b{r}": generic_b, "special_points": specials}
    if generic_b >= 1:
        assert all(p["b_degree"] >= 1 for p in specials)
        return FullnessVerdict(True, "full", "generic-rank", witness=witness)
    return FullnessVerdict(False, "not_full", "generic-rank", witness=witness,
                           reason=f"generic b_{r} = 0")


@dataclass(frozen=True)
class ProbeReport:
    """Sampled twisted Betti profiles at characters pulled back through nu.

    Under the certificate's hypotheses no pullback character can have an
    all-zero profile in degrees <= r; conversely, if the kernel had
    finite-dimensional homology through degree r, almost every sample
    would vanish.  ``vanishing_count`` counts all-zero profiles.
    """

    trials: int
    degree: int
    vanishing_count: int
    samples: tuple[dict, ...]
    seed: int
    box_schedule: str

    def to_json_dict(self) -> dict:
        return {
            "trials": self.trials,
            "r": self.degree,
            "vanishing_count": self.vanishing_count,
            "samples": list(self.samples),
            "seed": self.seed,
            "box_schedule": self.box_schedule,
        }


def generic_vanishing_probe(presentation: Presentation, nu: EpimorphismToZm,
                            r: int, trials: int = 100, seed: int = 0,
                            model: GroupModel | None = None) -> ProbeReport:
    """Sample rational characters of the target torus, pull back through
    nu, and record the twisted Betti numbers in degrees <= r.  The trivial
    character is never sampled; boxes start at {-2..2} and double every
    batch of 16 trials.  Deterministic under a fixed seed."""
    if trials < 1:
        raise ValueError("need at least one trial")
    nu = validate_epimorphism(presentation, nu.images)
    model = model or build_model(presentation)
    if r > model.complex.top:
        raise UnsupportedDegree(f"degree r={r} outside the chain model "
                                f"(top {model.complex.top})")
    nubar = induced_on_free_part(nu, model.abelian)
    rng = random.Random(seed)
    samples = []
    vanishing = 0
    for trial in range(trials):
        rho = sample_character(rng, nu.target_rank, box_for_trial(trial))
        pulled = pullback_character(nubar, rho, model.complex.nvars)
        betti = twisted_betti(model.complex, pulled).betti[:r + 1]
        is_zero = all(b == 0 for b in betti)
        vanishing += is_zero
        samples.append({"rho": rho.describe(), "betti": list(betti),
                        "vanishing": is_zero})
    return ProbeReport(trials=trials, degree=r, vanishing_count=vanishing,
                       samples=tuple(samples), seed=seed,
                       box_schedule="coordinates in {-B..B}\\{0}, B=2 "
                                    "doubling every 16 trials")


@dataclass(frozen=True)
class KernelReport:
    """Exact kernel homology over Z (univariate case) with the scope of
    validity and an optional cross-check against a certificate."""

    homology: KernelHomologyReport
    top_degree: int
    degree2_scope: str
    crosscheck: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        out = self.homology.to_json_dict()
        out["degrees"] = out["degrees"][:self.top_degree + 1]
        out["degree2_scope"] = self.degree2_scope
        if self.crosscheck:
            out["crosscheck"] = self.crosscheck
        return out


def kernel_report_univariate(presentation: Presentation, nu: EpimorphismToZm,
                             top_degree: int = 2,
                             certificate: Certificate | None = None) -> KernelReport:
    """Per-degree structure of the kernel's homology via the Smith normal
    form over the one-variable ring; exact verdicts, no sampling."""
    from .errors import NotUnivariate
    nu = validate_epimorphism(presentation, nu.images)
    if nu.target_rank != 1:
        raise NotUnivariate("exact kernel homology needs a map onto Z")
    model = build_model(presentation)
    nubar = induced_on_free_part(nu, model.abelian)
    univariate = model.complex.specialize(nubar)
    homology = kernel_homology_univariate(univariate)
    scope = ("group homology in every degree (aspherical model)"
             if model.aspherical else
             "group homology in degrees <= 1; degree 2 is homology of the "
             "presentation 2-complex")
    crosscheck = {}
    if certificate is not None and certificate.status == "certified":
        r = certificate.degree
        infinite = [e.degree for e in homology.entries
                    if e.degree <= min(r, len(homology.entries) - 1)
                    and e.infinite_dimensional]
        crosscheck = {
            "certificate_r": r,
            "infinite_degrees_leq_r": infinite,
            "consistent": bool(infinite),
        }
    return KernelReport(homology=homology,
                        top_degree=min(top_degree, univariate.top),
                        degree2_scope=scope, crosscheck=crosscheck)
