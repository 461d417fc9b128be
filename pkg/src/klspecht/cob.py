"""Change of basis from Specht vectors to the KL basis of M^J, and its certification.

Several conventions are left open by the construction (which KL side,
how a tabloid is read as a coset representative, which matrix is meant,
signs, the direction of the Bruhat cone and which element leads each
column).  A :class:`ConventionProfile` fixes all of them; the
certification sweeps the whole finite profile space.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import asdict, dataclass, field
from typing import Iterable, Sequence

from .heckemod import SIDES, KLTable, ModuleVector, ParabolicContext, kl_table, parabolic_context
from .laurent import ZERO, LaurentPoly
from .shapes import MAP_VARIANTS, Composition, Tableau, check_bijection, composition_to_J, tableau_to_coset_rep
from .specht import ORIENTATIONS, CMatrix, TabloidCombo, c_matrix, support_violations

A_VARIANTS = ("p_version", "m_version")
SIGN_MODES = ("strict", "up_to_sign")
LEADING = ("map", "extremal")


class EmbeddingError(ValueError):
    """A tabloid's representative is not a minimal coset representative."""


@dataclass(frozen=True, order=True)
class ConventionProfile:
    kl_side: str = "positive"
    map_variant: str = "inverse-top"
    a_variant: str = "p_version"
    sign_mode: str = "strict"
    orientation: str = "as_printed"
    leading: str = "map"

    def __post_init__(self):
        for name, allowed in (
            ("kl_side", SIDES),
            ("map_variant", MAP_VARIANTS),
            ("a_variant", A_VARIANTS),
            ("sign_mode", SIGN_MODES),
            ("orientation", ORIENTATIONS),
            ("leading", LEADING),
        ):
            if getattr(self, name) not in allowed:
                raise ValueError(f"{name} must be one of {allowed}, got {getattr(self, name)!r}")

    @property
    def label(self) -> str:
        return "/".join(asdict(self).values())


def all_profiles(map_variants: Sequence[str] = MAP_VARIANTS) -> list[ConventionProfile]:
    return [
        ConventionProfile(*combo)
        for combo in itertools.product(SIDES, map_variants, A_VARIANTS, SIGN_MODES, ORIENTATIONS, LEADING)
    ]


def embed(v: TabloidCombo, ctx: ParabolicContext, map_variant: str) -> ModuleVector:
    """Send each tabloid ``{R}`` to ``M_{w_R}``."""
    acc: dict[int, LaurentPoly] = {}
    for R, c in v.items():
        if composition_to_J(R.shape) != ctx.J:
            raise EmbeddingError(f"shape {R.shape} does not match J={ctx.J}")
        w = tableau_to_coset_rep(R, map_variant)
        if w not in ctx.index:
            raise EmbeddingError(f"{w} (from {map_variant}) is not a minimal coset representative")
        k = ctx.index[w]
        acc[k] = acc.get(k, ZERO) + c
    return ModuleVector(ctx, acc)


@dataclass
class AMatrix:
    """Integer matrix ``entries[x][t]`` over ``D_J x Std(shape)``."""

    shape: Composition
    profile: ConventionProfile
    ctx: ParabolicContext = field(repr=False)
    cols: list[Tableau]
    entries: list[list[int]]

    def column(self, t: int) -> dict[int, int]:
        return {x: row[t] for x, row in enumerate(self.entries) if row[t]}


def _embedded_columns(cm: CMatrix, ctx: ParabolicContext, variant: str) -> list[ModuleVector]:
    return [embed(cm.column(t), ctx, variant) for t in range(len(cm.cols))]


def a_matrix(shape: Composition, profile: ConventionProfile, cm: CMatrix | None = None) -> AMatrix:
    """Evaluate the change-of-basis coefficients at q = 1 after exact arithmetic.

    ``p_version`` expands the embedded Specht vector in the KL basis;
    ``m_version`` forms ``sum_R c_{R,T} m_{x, w_R}`` (each tabloid sent to
    the KL element of its representative, read in the standard basis).
    """
    cm = c_matrix(shape) if cm is None else cm
    ctx = parabolic_context(shape.type, composition_to_J(shape))
    kl = kl_table(shape.type, ctx.J, profile.kl_side)
    n = len(ctx)
    entries = [[0] * len(cm.cols) for _ in range(n)]
    for t, v in enumerate(_embedded_columns(cm, ctx, profile.map_variant)):
        # p_version: coefficient of KL_x in sum_y c_y M_y is sum_y p[x][y] c_y
        # m_version: coefficient of M_x in sum_y c_y KL_y is sum_y m[x][y] c_y
        table = kl.p if profile.a_variant == "p_version" else kl.m
        for x in range(n):
            acc = ZERO
            for y, c in v.items():
                if table[x][y]:
                    acc = acc + table[x][y] * c
            entries[x][t] = acc.eval_at_one()
    return AMatrix(shape, profile, ctx, list(cm.cols), entries)


@dataclass
class CertResult:
    passed: bool
    violations: list[dict]
    diagonal: dict[str, int]
    leading: dict[str, str]

    def to_json(self) -> dict:
        return asdict(self)


def _leading(A: AMatrix, t: int) -> int | None:
    prof = A.profile
    if prof.leading == "map":
        w = tableau_to_coset_rep(A.cols[t], prof.map_variant)
        return A.ctx.index.get(w)
    support = list(A.column(t))
    for s in support:
        if prof.orientation == "as_printed" and all(A.ctx.leq(x, s) for x in support):
            return s
        if prof.orientation == "reversed" and all(A.ctx.leq(s, x) for x in support):
            return s
    return None


def check_unitriangular(A: AMatrix) -> CertResult:
    """Unit leading coefficient and support inside the Bruhat cone of the leading element."""
    prof = A.profile
    reps = A.ctx.reps
    violations: list[dict] = []
    diagonal: dict[str, int] = {}
    leading: dict[str, str] = {}
    seen: dict[int, int] = {}
    for t, T in enumerate(A.cols):
        tname = str(tableau_to_coset_rep(T, "inverse-top"))
        s = _leading(A, t)
        if s is None:
            violations.append({"kind": "no_leading", "T": tname})
            continue
        leading[tname] = str(reps[s])
        if s in seen:
            violations.append({"kind": "duplicate_leading", "x": str(reps[s]), "T": tname})
        seen[s] = t
        value = A.entries[s][t]
        diagonal[tname] = value
        if value != 1 and not (prof.sign_mode == "up_to_sign" and value == -1):
            violations.append({"kind": "diagonal", "x": str(reps[s]), "T": tname, "value": value})
        for x, a in A.column(t).items():
            inside = A.ctx.leq(x, s) if prof.orientation == "as_printed" else A.ctx.leq(s, x)
            if not inside:
                violations.append({"kind": "support", "x": str(reps[x]), "T": tname, "value": a})
    return CertResult(not violations, violations, diagonal, leading)


def instance_key(shape: Composition) -> str:
    return str(shape)


@dataclass
class DiscoveryReport:
    instances: list[str]
    results: dict[str, dict[str, dict]]  # profile label -> instance -> {"pass", "support", "violations", ...}

    def passing(self, label: str) -> list[str]:
        return [i for i, r in self.results[label].items() if r["pass"]]

    @property
    def surviving(self) -> list[str]:
        return [label for label in self.results if len(self.passing(label)) == len(self.instances)]

    @property
    def surviving_strict(self) -> list[str]:
        return [label for label in self.surviving if "/strict/" in label]

    @property
    def preferred(self) -> list[str]:
        return self.surviving_strict or self.surviving

    def support_orientations(self) -> dict[str, list[str]]:
        """Per map variant, the orientations under which every instance has Specht support inside the Bruhat cone."""
        out: dict[str, list[str]] = {}
        for label, per in self.results.items():
            prof = profile_from_label(label)
            if all(r["support"] for r in per.values()):
                out.setdefault(prof.map_variant, [])
                if prof.orientation not in out[prof.map_variant]:
                    out[prof.map_variant].append(prof.orientation)
        return {k: sorted(v) for k, v in sorted(out.items())}

    def to_json(self, full: bool = False) -> dict:
        results = {}
        for label, per in self.results.items():
            results[label] = {
                "passing": self.passing(label),
                "support_passing": [i for i, r in per.items() if r["support"]],
                "instances": {
                    i: {k: v for k, v in r.items() if full or k != "violations"} for i, r in per.items()
                },
            }
        return {
            "instances": self.instances,
            "surviving": self.surviving,
            "surviving_strict": self.surviving_strict,
            "preferred": self.preferred,
            "support_orientations": self.support_orientations(),
            "profiles": results,
        }

    def dumps(self, full: bool = False) -> str:
        return json.dumps(self.to_json(full), indent=1, sort_keys=True)

    def summary(self) -> str:
        lines = [f"{len(self.instances)} instances, {len(self.results)} profiles"]
        width = max(len(label) for label in self.results) if self.results else 10
        for label in self.results:
            n = len(self.passing(label))
            mark = "*" if label in self.surviving else " "
            lines.append(f"{mark} {label.ljust(width)}  {n}/{len(self.instances)}")
        lines.append(f"surviving: {len(self.surviving)} (strict: {len(self.surviving_strict)})")
        return "\n".join(lines)


def profile_from_label(label: str) -> ConventionProfile:
    return ConventionProfile(*label.split("/"))


def evaluate(shape: Composition, profile: ConventionProfile, cm: CMatrix | None = None) -> dict:
    """One cell of the discovery grid."""
    cm = c_matrix(shape) if cm is None else cm
    bijective, _ = check_bijection(shape, profile.map_variant)
    if not bijective:
        return {
            "pass": False,
            "support": False,
            "diagonal": {},
            "violations": [{"kind": "map_not_bijective", "variant": profile.map_variant}],
        }
    cert = check_unitriangular(a_matrix(shape, profile, cm))
    support = not support_violations(cm, profile.map_variant, profile.orientation)
    return {"pass": cert.passed, "support": support, "diagonal": cert.diagonal, "violations": cert.violations}


def discover_conventions(
    instances: Sequence[Composition], profiles: Iterable[ConventionProfile] | None = None
) -> DiscoveryReport:
    profiles = sorted(all_profiles() if profiles is None else profiles)
    instances = list(instances)
    results = {p.label: {instance_key(s): evaluate(s, p) for s in instances} for p in profiles}
    return DiscoveryReport([instance_key(s) for s in instances], results)


def certification_instances(max_d_a: int = 4, max_d_b: int = 2) -> list[Composition]:
    from .shapes import partitions

    out = [c for d in range(1, max_d_a + 1) for c in partitions("A", d)]
    out += [c for d in range(1, max_d_b + 1) for c in partitions("B", d)]
    return out
