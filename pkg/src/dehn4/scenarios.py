"""Named obstruction scenarios wired through the library modules.

Each scenario reproduces one case analysis as a deterministic report: a
computed trace (operation, inputs, output per step), hypothesis flags for
imported facts (each with a mandatory provenance string, rendered apart
from computed steps), a verdict, and citations.

Scenarios:
  sphere-lens          no topological ball bounded by the separating
                       sphere between lens-space summands (quadratic
                       residue criterion)
  sphere-smooth-h      no smooth ball: hyperbolic intersection form vs a
                       Rokhlin-invariant-1 summand
  sphere-smooth-e8h    no smooth ball: E8+H splits only two ways, both
                       excluded by cited facts
  torus-solid          no embedded solid torus: every zero self-linking
                       curve class on the torus is algebraically
                       non-slice
  torus-top-vs-smooth  topological solid torus exists (Alexander
                       polynomial one) but no smooth one (Stein +
                       slice-Bennequin)
  twist-extension      every boundary twist along the torus extends, yet
                       no smooth solid torus (torus-knot orbit classes)
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import forms, legendrian, linking, seifert, surgery, twists
from .linking import canonical_class
from .seifert import Knot, SliceTag


class Verdict(Enum):
    OBSTRUCTED = "Obstructed"
    NOT_OBSTRUCTED = "NotObstructed"
    EXTENDS = "Extends"
    MIXED = "Mixed"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class HypothesisFlag:
    """An imported (not computed) fact, always carrying its provenance."""

    name: str
    value: bool
    provenance: str

    def __post_init__(self):
        if not self.provenance:
            raise ValueError(f"hypothesis flag {self.name!r} is missing its provenance")


@dataclass(frozen=True)
class TraceStep:
    operation: str
    inputs: dict
    output: object

    def prefixed(self, prefix: str) -> "TraceStep":
        return TraceStep(f"{prefix}.{self.operation}", self.inputs, self.output)


@dataclass(frozen=True)
class Report:
    scenario: "Scenario"
    trace: tuple[TraceStep, ...]
    verdict: Verdict
    detail: dict | None = None
    citations: tuple[str, ...] = ()


SCENARIO_NAMES = (
    "sphere-lens",
    "sphere-smooth-h",
    "sphere-smooth-e8h",
    "torus-solid",
    "torus-top-vs-smooth",
    "twist-extension",
)


@dataclass(frozen=True)
class Scenario:
    name: str
    p: int | None = None
    q: int | None = None
    n: int | None = None
    knot_j: Knot | None = None
    knot_k: Knot | None = None
    flags: tuple[HypothesisFlag, ...] = ()

    def flag(self, name: str) -> HypothesisFlag | None:
        for f in self.flags:
            if f.name == name:
                return f
        return None

    def parameters(self) -> dict:
        out: dict = {}
        if self.p is not None:
            out["p"] = self.p
        if self.q is not None:
            out["q"] = self.q
        if self.n is not None:
            out["n"] = self.n
        if self.knot_j is not None:
            out["knot_j"] = self.knot_j.name
        if self.knot_k is not None:
            out["knot_k"] = self.knot_k.name
        return out


class ScenarioError(ValueError):
    pass


_ROKHLIN_P = "Rokhlin invariant of the Poincare homology sphere is 1 (classical)"
_ROKHLIN_PP = (
    "Rokhlin invariants add under connected sum, so the double of the "
    "Poincare sphere has invariant 0 (classical)"
)
_DONALDSON = (
    "a smooth filling of the Poincare sphere with intersection form E8 would "
    "close up against the E8-plumbing to a definite E8+E8 manifold, "
    "contradicting Donaldson's diagonalization theorem"
)
_FS_ACYCLIC = (
    "Fintushel-Stern: the double of the Poincare sphere bounds no acyclic "
    "smooth 4-manifold"
)
_GABAI_SOLID_TORUS = (
    "surgery on a knot in a solid torus meeting a meridional disk once is "
    "never a solid torus and leaves the boundary incompressible "
    "(Gabai; Bing-Martin)"
)
_GABAI_ZERO_SURGERY = (
    "Gabai: zero-framed surgery on a nontrivial knot is irreducible"
)
_FREEDMAN_ALEX_ONE = (
    "Freedman: a knot with Alexander polynomial one is topologically slice"
)
_GOMPF_MERIDIAN = (
    "Gompf: the twist along the meridional class of the torus extends over "
    "the contractible 4-manifold (infinite-order cork construction)"
)
_ORBIT_ISOTOPY = (
    "a twist along the orbit class of the circle action on a torus-knot "
    "exterior is isotopic to the identity rel boundary"
)
_SIGNATURE_OBSTRUCTS = (
    "a nonzero knot signature obstructs sliceness in a homology ball "
    "(computed from any Seifert matrix)"
)
_FOX_MILNOR_CITE = (
    "Fox-Milnor: a slice knot's Alexander polynomial factors as f(t)f(1/t)"
)
_HOSTE_CITE = (
    "Hoste's surgery formula for linking numbers of homologically trivial "
    "curves: lk_Y = lk_S3 - a.B^(-1).b^T"
)
_LENS_QR_CITE = (
    "a lens space L(p,q) bounds a simply connected topological 4-manifold "
    "with b2 = 1 iff +q or -q is a quadratic residue mod p (linking form "
    "1/p vs +-q/p)"
)
_EVEN_FORM_CLASSIFICATION = (
    "classification of indefinite even unimodular forms: every class is "
    "a*E8 + b*H (Milnor-Husemoller)"
)
_ROKHLIN_CONGRUENCE = (
    "an even (spin) filling of a homology sphere with Rokhlin invariant rho "
    "has signature congruent to 8*rho mod 16"
)
_STEIN_CONDITION_CITE = (
    "a 2-handlebody is Stein iff each 2-handle is attached along a "
    "Legendrian curve with framing tb - 1 (Eliashberg; Gompf)"
)
_SLICE_BENNEQUIN_CITE = (
    "slice-Bennequin inequality in a Stein domain: tb + |rot| <= 2g - 1 "
    "(Akbulut-Matveyev; Lisca-Matic)"
)
_EMBEDDING_CRITERION = (
    "embedding criterion: a separating torus bounds an embedded solid torus "
    "once some homologically essential curve on it is slice with the torus "
    "framing and the corresponding surgered manifold is irreducible "
    "(ambient 2-handle plus 3-handle attachment)"
)
_FREEDMAN_CONTRACTIBLE = (
    "the boundary of the surgery presentation is a homology sphere, so the "
    "torus extends at least to a map of a solid torus"
)


def _default_flags(name: str, n: int | None, knot_k: Knot | None) -> tuple[HypothesisFlag, ...]:
    if name == "sphere-smooth-h":
        return (
            HypothesisFlag("rho-y1", True, _ROKHLIN_P),
            HypothesisFlag("rho-y2", True, _ROKHLIN_P),
        )
    if name == "sphere-smooth-e8h":
        return (
            HypothesisFlag("rho-y1", True, _ROKHLIN_P),
            HypothesisFlag("rho-y2", False, _ROKHLIN_PP),
            HypothesisFlag("no-e8-filling-y1", True, _DONALDSON),
            HypothesisFlag("no-acyclic-filling-y2", True, _FS_ACYCLIC),
        )
    if name == "torus-solid":
        compressible = (
            knot_k is not None and knot_k.matrix.size == 0 and n == 0
        )
        return (
            HypothesisFlag("torus-incompressible", not compressible, _GABAI_SOLID_TORUS),
        )
    if name == "torus-top-vs-smooth":
        return (
            HypothesisFlag("torus-incompressible", True, _GABAI_SOLID_TORUS),
            HypothesisFlag("surgered-manifold-irreducible", True, _GABAI_ZERO_SURGERY),
            HypothesisFlag("alexander-one-slice", True, _FREEDMAN_ALEX_ONE),
        )
    return ()


_TWIST_FLAGS = (
    HypothesisFlag("meridian-twist-extends", True, _GOMPF_MERIDIAN),
    HypothesisFlag("orbit-twist-extends", True, _ORBIT_ISOTOPY),
)


def build_scenario(
    name: str,
    p: int | None = None,
    q: int | None = None,
    n: int | None = None,
    knot_j=None,
    knot_k=None,
    flags: tuple[HypothesisFlag, ...] | None = None,
) -> Scenario:
    """Fill in per-scenario defaults and check required parameters."""
    if name not in SCENARIO_NAMES:
        raise ScenarioError(
            f"unknown scenario {name!r}; expected one of {', '.join(SCENARIO_NAMES)}"
        )
    kj = seifert.knot_from_spec(knot_j) if knot_j is not None else None
    kk = seifert.knot_from_spec(knot_k) if knot_k is not None else None

    if name == "sphere-lens":
        p = 5 if p is None else p
        q = 2 if q is None else q
        scen = Scenario(name, p=p, q=q, flags=flags or ())
    elif name in ("sphere-smooth-h", "sphere-smooth-e8h"):
        scen = Scenario(name, flags=flags if flags is not None else _default_flags(name, n, kk))
    elif name == "torus-solid":
        kj = kj or seifert.knot_from_spec("left-trefoil")
        kk = kk or seifert.knot_from_spec("left-trefoil")
        n = 1 if n is None else n
        scen = Scenario(
            name,
            n=n,
            knot_j=kj,
            knot_k=kk,
            flags=flags if flags is not None else _default_flags(name, n, kk),
        )
    elif name == "torus-top-vs-smooth":
        kj = kj or seifert.knot_from_spec("left-trefoil")
        kk = kk or seifert.knot_from_spec("whitehead-double-positive")
        n = 0 if n is None else n
        scen = Scenario(
            name,
            n=n,
            knot_j=kj,
            knot_k=kk,
            flags=flags if flags is not None else _default_flags(name, n, kk),
        )
    else:  # twist-extension
        p = 2 if p is None else p
        q = 3 if q is None else q
        scen = Scenario(
            name, p=p, q=q, flags=_TWIST_FLAGS if flags is None else tuple(flags)
        )
    return scen


def standard_torus_presentation(n: int) -> surgery.SurgeryPresentation:
    """The two-component presentation carrying the boundary torus.

    One dotted component, one n-framed component linking it once; the
    torus basis curves alpha (meridional, linking the dotted component)
    and beta (longitudinal, linking the framed component) carry the
    standard pushoff data lk(alpha, beta+) = 0, lk(beta, alpha+) = 1.
    """
    return surgery.parse_presentation(
        "\n".join(
            [
                "component L1 dotted",
                f"component L2 framed {n}",
                "lk L1 L2 1",
                "curve alpha lk ( 1 0 ) self 0",
                "curve beta lk ( 0 1 ) self 0",
                "pushoff alpha beta 0 1",
            ]
        )
    )


def run_scenario(scenario: Scenario) -> Report:
    """Deterministic report for a validated scenario."""
    for flag in scenario.flags:
        if not flag.provenance:
            raise ScenarioError(f"flag {flag.name!r} lacks provenance")
    if scenario.name == "sphere-lens":
        return _run_sphere_lens(scenario)
    if scenario.name == "sphere-smooth-h":
        return _run_sphere_smooth(scenario, forms.EvenFormClass(0, 1), exclusions=False)
    if scenario.name == "sphere-smooth-e8h":
        return _run_sphere_smooth(scenario, forms.EvenFormClass(1, 1), exclusions=True)
    if scenario.name == "torus-solid":
        return _run_torus_solid(scenario)
    if scenario.name == "torus-top-vs-smooth":
        return _run_torus_top_vs_smooth(scenario)
    if scenario.name == "twist-extension":
        return _run_twist_extension(scenario)
    raise ScenarioError(f"unknown scenario {scenario.name!r}")


def _verdict_dict(v: seifert.SliceVerdict) -> dict:
    out: dict = {"tag": v.tag.value}
    if v.signature is not None:
        out["signature"] = v.signature
    if v.fox_milnor is not None:
        fm = v.fox_milnor
        out["fox_milnor"] = {
            "passed": fm.passed,
            "factor": str(fm.factor) if fm.factor is not None else None,
            "failure": (
                {"kind": fm.failure.kind, "detail": fm.failure.detail}
                if fm.failure is not None
                else None
            ),
        }
    if v.note:
        out["note"] = v.note
    return out


def _run_sphere_lens(s: Scenario) -> Report:
    p, q = s.p, s.q
    trace = [
        TraceStep(
            "homology-splitting-argument",
            {"p": p, "q": q},
            "a topological ball bounded by the separating sphere would split "
            "the manifold as a boundary-connected sum of two simply connected "
            "fillings; relative second homology is torsion-free, so each side "
            "is a b2 = 1 filling of a lens space",
        )
    ]
    residues = forms.quadratic_residues(p)
    bounds = forms.lens_qr_bounding(p, q)
    q_res = q % p in residues
    mq_res = (p - q) % p in residues
    trace.append(
        TraceStep(
            "lens_qr_bounding",
            {"p": p, "q": q},
            {
                "bounds_b2_one_filling": bounds,
                "quadratic_residues_mod_p": list(residues),
                "q_is_residue": q_res,
                "minus_q_is_residue": mq_res,
            },
        )
    )
    verdict = Verdict.NOT_OBSTRUCTED if bounds else Verdict.OBSTRUCTED
    detail = None
    if not bounds:
        detail = {
            "conclusion": "no topologically embedded ball",
            "witness": f"neither {q % p} nor {(p - q) % p} is a quadratic residue mod {p}",
        }
    return Report(
        scenario=s,
        trace=tuple(trace),
        verdict=verdict,
        detail=detail,
        citations=(_LENS_QR_CITE,),
    )


def _run_sphere_smooth(s: Scenario, total: forms.EvenFormClass, exclusions: bool) -> Report:
    rho1 = 1 if _flag_value(s, "rho-y1", True) else 0
    rho2 = 1 if _flag_value(s, "rho-y2", True) else 0
    c1 = forms.rohlin_constraint(rho1)
    c2 = forms.rohlin_constraint(rho2)
    trace = [
        TraceStep("rohlin_constraint", {"side": 1, "rho": rho1}, str(c1)),
        TraceStep("rohlin_constraint", {"side": 2, "rho": rho2}, str(c2)),
    ]
    pairs = forms.enumerate_even_splittings(total, c1, c2)
    trace.append(
        TraceStep(
            "enumerate_even_splittings",
            {"total": str(total), "side1": str(c1), "side2": str(c2)},
            {"count": len(pairs), "splittings": [[str(a), str(b)] for a, b in pairs]},
        )
    )
    citations = [_ROKHLIN_CONGRUENCE, _EVEN_FORM_CLASSIFICATION]
    if not exclusions:
        verdict = Verdict.OBSTRUCTED if not pairs else Verdict.NOT_OBSTRUCTED
        detail = (
            {"conclusion": "no smoothly embedded ball", "witness": "empty splitting enumeration"}
            if not pairs
            else None
        )
        return Report(s, tuple(trace), verdict, detail, tuple(citations))

    rows = []
    survivors = 0
    for a, b in pairs:
        excluded_by = None
        if a == forms.EvenFormClass(1, 0) and _flag_value(s, "no-e8-filling-y1", False):
            excluded_by = "no-e8-filling-y1"
        elif b == forms.EvenFormClass(0, 0) and _flag_value(s, "no-acyclic-filling-y2", False):
            excluded_by = "no-acyclic-filling-y2"
        if excluded_by is None:
            survivors += 1
        rows.append({"splitting": [str(a), str(b)], "excluded_by": excluded_by})
    trace.append(TraceStep("exclude_splittings", {"count": len(pairs)}, rows))
    citations += [_DONALDSON, _FS_ACYCLIC]
    if survivors == 0:
        return Report(
            s,
            tuple(trace),
            Verdict.OBSTRUCTED,
            {
                "conclusion": "no smoothly embedded ball",
                "witness": "every splitting in the enumeration is excluded",
            },
            tuple(citations),
        )
    return Report(s, tuple(trace), Verdict.NOT_OBSTRUCTED, None, tuple(citations))


def _flag_value(s: Scenario, name: str, default: bool) -> bool:
    flag = s.flag(name)
    return flag.value if flag is not None else default


def _class_knot(s: Scenario, cls: tuple[int, int]) -> Knot | None:
    """Knot carrying the algebraic concordance class of a zero class.

    cls is canonicalized up to sign, so both (0, 1) and (1, n) are
    compared through canonical_class; a sign flip reverses the curve,
    which does not move the algebraic obstructions.
    """
    j, k, n = s.knot_j, s.knot_k, s.n
    if cls == canonical_class(0, 1):
        return Knot(f"-({j.name})", seifert.concordance_inverse(j.matrix))
    if cls == canonical_class(1, n):
        if n == 0:
            return Knot(k.name, k.matrix)
        cable = seifert.parallel_cable(j.matrix, n)
        return Knot(
            f"{k.name} # cable({j.name}; {n})",
            seifert.connected_sum(k.matrix, cable),
        )
    return None


def _torus_pipeline(s: Scenario) -> tuple[list[TraceStep], linking.ZeroClasses]:
    """Shared head of the torus scenarios: presentation through zero classes."""
    pres = standard_torus_presentation(s.n)
    trace = [
        TraceStep(
            "parse_presentation",
            {"n": s.n},
            {"text": surgery.serialize_presentation(pres)},
        )
    ]
    b = surgery.boundary_linking_matrix(pres)
    trace.append(TraceStep("boundary_linking_matrix", {}, [list(r) for r in b]))
    hom = linking.first_homology(b)
    trace.append(
        TraceStep(
            "first_homology",
            {"matrix": [list(r) for r in b]},
            {"group": str(hom), "is_homology_sphere": hom.is_homology_sphere},
        )
    )
    basis = pres.torus_basis("alpha", "beta")
    form = linking.self_linking_form(b, basis)
    trace.append(
        TraceStep(
            "self_linking_form",
            {"basis": ["alpha", "beta"]},
            {"coefficients": [form.a, form.b, form.c], "form": str(form)},
        )
    )
    zc = linking.zero_classes(form)
    trace.append(
        TraceStep(
            "zero_classes",
            {"form": str(form)},
            {"classes": [list(c) for c in zc.classes], "all_classes": zc.all_classes},
        )
    )
    return trace, zc


def _run_torus_solid(s: Scenario) -> Report:
    trace, zc = _torus_pipeline(s)
    all_obstructed = True
    notes = []
    for cls in zc.classes:
        knot = _class_knot(s, cls)
        if knot is None:
            all_obstructed = False
            notes.append(f"class {cls} has no modeled representative")
            continue
        trace.append(
            TraceStep(
                "curve_class_knot",
                {"class": list(cls)},
                {"knot": knot.name, "genus": knot.matrix.genus},
            )
        )
        verdict = seifert.algebraic_slice_verdict(knot.matrix)
        trace.append(
            TraceStep(
                "algebraic_slice_verdict",
                {"class": list(cls), "knot": knot.name},
                _verdict_dict(verdict),
            )
        )
        if verdict.tag is SliceTag.UNKNOWN:
            all_obstructed = False
            notes.append(f"class {list(cls)} carries no algebraic obstruction")
    if zc.all_classes:
        all_obstructed = False
        notes.append("the self-linking form vanishes identically")
    citations = (
        _FREEDMAN_CONTRACTIBLE,
        _HOSTE_CITE,
        _SIGNATURE_OBSTRUCTS,
        _FOX_MILNOR_CITE,
    )
    if all_obstructed and zc.classes:
        detail = {
            "conclusion": "no embedded solid torus",
            "witness": "every zero self-linking class is algebraically non-slice",
        }
        return Report(s, tuple(trace), Verdict.OBSTRUCTED, detail, citations)
    return Report(
        s,
        tuple(trace),
        Verdict.INCONCLUSIVE,
        {"notes": notes} if notes else None,
        citations,
    )


def _run_torus_top_vs_smooth(s: Scenario) -> Report:
    trace, zc = _torus_pipeline(s)
    citations = [
        _HOSTE_CITE,
        _FREEDMAN_ALEX_ONE,
        _GABAI_ZERO_SURGERY,
        _EMBEDDING_CRITERION,
        _STEIN_CONDITION_CITE,
        _SLICE_BENNEQUIN_CITE,
        _SIGNATURE_OBSTRUCTS,
    ]
    notes = []

    # --- topological side: the (1, n) class bounds a topological disk ---
    alpha_class = canonical_class(1, s.n)
    alpha_knot = _class_knot(s, alpha_class)
    topological_ok = alpha_class in zc.classes and alpha_knot is not None
    if alpha_knot is not None:
        delta = seifert.alexander_polynomial(alpha_knot.matrix)
        trace.append(
            TraceStep(
                "alexander_polynomial",
                {"class": list(alpha_class), "knot": alpha_knot.name},
                str(delta),
            )
        )
        if not delta.is_one():
            topological_ok = False
            notes.append("Alexander polynomial of the surgery curve is not 1")
    if not _flag_value(s, "alexander-one-slice", False) or not _flag_value(
        s, "surgered-manifold-irreducible", False
    ):
        topological_ok = False
        notes.append("a hypothesis flag for the embedding criterion is unset")
    trace.append(
        TraceStep(
            "solid_torus_embedding_criterion",
            {
                "class_nonzero": alpha_class in zc.classes,
                "topologically_slice": topological_ok,
                "irreducible": _flag_value(s, "surgered-manifold-irreducible", False),
            },
            {"topological_solid_torus": topological_ok},
        )
    )

    # --- smooth side: Stein structure plus slice-Bennequin kills alpha ---
    fronts = legendrian.load_named_fronts()
    framings = legendrian.stein_framings()
    handles = [
        (name, framings[name], fronts[name]) for name in sorted(framings)
    ]
    stein_ok, checks = legendrian.stein_condition(handles)
    trace.append(
        TraceStep(
            "stein_condition",
            {"handles": [[c.name, c.framing] for c in checks]},
            {
                "stein": stein_ok,
                "checks": [
                    {"name": c.name, "framing": c.framing, "tb": c.tb, "ok": c.satisfied}
                    for c in checks
                ],
            },
        )
    )
    alpha_front = fronts["alpha"]
    tb_a, rot_a = legendrian.tb(alpha_front), legendrian.rot(alpha_front)
    trace.append(
        TraceStep("tb_rot", {"front": "alpha"}, {"tb": tb_a, "rot": rot_a})
    )
    genus_bound = legendrian.slice_bennequin_genus_bound(tb_a, rot_a)
    trace.append(
        TraceStep(
            "slice_bennequin_genus_bound",
            {"tb": tb_a, "rot": rot_a},
            {"genus_lower_bound": genus_bound},
        )
    )
    alpha_smooth_dead = stein_ok and genus_bound >= 1
    if not alpha_smooth_dead:
        notes.append("slice-Bennequin does not obstruct the surgery curve")

    beta_knot = _class_knot(s, (0, 1))
    beta_verdict = seifert.algebraic_slice_verdict(beta_knot.matrix)
    trace.append(
        TraceStep(
            "algebraic_slice_verdict",
            {"class": [0, 1], "knot": beta_knot.name},
            _verdict_dict(beta_verdict),
        )
    )
    beta_dead = beta_verdict.tag is not SliceTag.UNKNOWN
    if not beta_dead:
        notes.append("the longitudinal class carries no algebraic obstruction")

    smooth_obstructed = alpha_smooth_dead and beta_dead and set(zc.classes) == {
        (0, 1),
        alpha_class,
    }

    if topological_ok and smooth_obstructed:
        return Report(
            s,
            tuple(trace),
            Verdict.MIXED,
            {"topological": "yes", "smooth": "no"},
            tuple(citations),
        )
    if topological_ok:
        return Report(
            s,
            tuple(trace),
            Verdict.EXTENDS,
            {"topological": "yes", "smooth": "undetermined", "notes": notes},
            tuple(citations),
        )
    return Report(
        s, tuple(trace), Verdict.INCONCLUSIVE, {"notes": notes}, tuple(citations)
    )


def _run_twist_extension(s: Scenario) -> Report:
    p, q = s.p, s.q
    orbit = twists.seifert_orbit_class(p, q)
    trace = [
        TraceStep("seifert_orbit_class", {"p": p, "q": q}, str(orbit)),
    ]
    ab = twists.to_alpha_beta(orbit)
    trace.append(TraceStep("to_alpha_beta", {"class": str(orbit)}, str(ab)))
    meridian = twists.TwistClass((1, 0), twists.TwistBasis.ALPHA_BETA)
    subgroup = twists.extension_subgroup([meridian, ab])
    trace.append(
        TraceStep(
            "extension_subgroup",
            {"generators": [list(meridian.vector), list(ab.vector)]},
            {
                "rows": [list(r) for r in subgroup.rows],
                "rank": subgroup.rank,
                "index": subgroup.index,
            },
        )
    )
    all_extend = (
        subgroup.is_full
        and _flag_value(s, "meridian-twist-extends", False)
        and _flag_value(s, "orbit-twist-extends", False)
    )

    companion = build_scenario(
        "torus-solid",
        n=-1,
        knot_j={"torus": [p, q]},
        knot_k="unknot",
    )
    companion_report = run_scenario(companion)
    trace.extend(step.prefixed("companion") for step in companion_report.trace)
    citations = (
        _GOMPF_MERIDIAN,
        _ORBIT_ISOTOPY,
        _HOSTE_CITE,
        _SIGNATURE_OBSTRUCTS,
    )
    if all_extend and companion_report.verdict is Verdict.OBSTRUCTED:
        return Report(
            s,
            tuple(trace),
            Verdict.MIXED,
            {"twists_extend": "yes", "smooth_solid_torus": "no"},
            citations,
        )
    if all_extend:
        return Report(
            s,
            tuple(trace),
            Verdict.EXTENDS,
            {"twists_extend": "yes", "smooth_solid_torus": "undetermined"},
            citations,
        )
    return Report(
        s,
        tuple(trace),
        Verdict.INCONCLUSIVE,
        {"notes": [f"extension subgroup has index {subgroup.index}"]},
        citations,
    )
