"""End-to-end computation of frieze varieties: orbit, recurrence,
per-residue parametrization, implicitization and deduplication."""

from __future__ import annotations

import json
import os
from math import gcd
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .errors import InvalidAutomorphism, NoRecurrenceFound, NotAcyclic, NotAffine, PeriodMismatch, StructureViolation
from .implicitize import ImplicitResult, implicitize, resolve_order, x_names
from .parametrize import ComponentParametrization, fit_component, samples_needed
from .polyring import GroebnerBasis, MonomialOrder, MultiPoly, groebner, is_groebner
from .quiver import Quiver, affine_type, delta_vector
from .recurrence import (
    RecurrenceResult,
    UPoly,
    annihilates,
    classify_trace,
    min_char_poly,
    period_form,
    poly_lcm,
    trace_for_period,
)
from .scalars import QQ, format_scalar
from .seeds import AutomorphismSpec, FriezeOrbit, PointSeed, as_point, orbit, validate_spec

HORIZON_ENV = "FRIEZE_LAB_HORIZON"
MAX_HORIZON = 1024


@dataclass
class Options:
    order: str | Sequence[str] | None = "anchor"
    anchor: int | None = None  # defaults to the lowest extending vertex
    horizon: int | None = None
    period: int | None = None  # force a multiple of the detected period
    threads: int = 1
    coordinates: Sequence[int] | None = None  # coordinates used for recurrence detection


@dataclass
class Component:
    t: int
    residues: list[int]
    dim: int
    param: ComponentParametrization | None = None
    result: ImplicitResult | None = None
    points: list[tuple] | None = None

    @property
    def basis(self) -> GroebnerBasis | None:
        return self.result.basis if self.result else None

    def to_dict(self) -> dict:
        d: dict = {"t": self.t, "residues": self.residues, "dim": self.dim}
        if self.points is not None:
            d["points"] = [[format_scalar(x) for x in p] for p in self.points]
        if self.param is not None:
            d["parametrization"] = self.param.to_dict()
        if self.result is not None:
            d["generators"] = self.result.basis.texts()
            d["geometry"] = self.result.geometry
            d["smooth"] = self.result.smooth
        return d


@dataclass
class FriezeVarietyReport:
    quiver: Quiver
    spec: AutomorphismSpec
    point: tuple
    kind: str  # finite | curve | line | signed_line
    m: int
    modulus: int  # number of residue classes actually parametrized
    components: list[Component]
    recurrence: RecurrenceResult | None = None
    ranking: tuple[str, ...] = ()
    orbit: FriezeOrbit | None = field(default=None, repr=False)
    coordinates: tuple[int, ...] = ()

    @property
    def component_count(self) -> int:
        return len(self.components)

    @property
    def c(self):
        return self.recurrence.c if self.recurrence else None

    def component_of_residue(self, t: int) -> Component:
        r = t % self.modulus
        for comp in self.components:
            if r in comp.residues:
                return comp
        raise KeyError(r)

    def to_dict(self) -> dict:
        rec = self.recurrence
        return {
            "quiver": self.quiver.to_dict(),
            "spec": self.spec.to_dict(),
            "point": [format_scalar(x) for x in self.point],
            "kind": self.kind,
            "m": self.m,
            "modulus": self.modulus,
            "c": None if rec is None else format_scalar(rec.c),
            "d": None if rec is None else rec.d,
            "rho": None if rec is None or rec.rho is None else format_scalar(rec.rho),
            "charpoly": None if rec is None else rec.charpoly.to_text(),
            "order": list(self.ranking),
            "component_count": self.component_count,
            "components": [c.to_dict() for c in self.components],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def default_horizon(hint: int | None) -> int:
    env = os.environ.get(HORIZON_ENV)
    if env:
        return max(int(env), 1)
    return 4 * hint + 4 if hint else 32


def recurrence_vertices(q: Quiver) -> list[int] | None:
    """Vertices whose frieze sequences satisfy a linear recurrence.

    These are the i with (D delta)_i minimal, i.e. the extending vertices;
    weighting by the symmetrizer matters for valued quivers, where the
    kernel vector delta is an orbit sum of the unfolded one.
    """
    try:
        delta, _ = delta_vector(q)
    except (NotAffine, NotAcyclic):
        return None
    w = [d * x for d, x in zip(q.D, delta)]
    g = gcd(*w)
    return [i + 1 for i, x in enumerate(w) if x == g]


def _affine_info(q: Quiver):
    ext = recurrence_vertices(q)
    if ext is None:
        return None, None
    at = affine_type(q)
    return ext, (at.period_hint if at else None)


def _find_repeat(orb: FriezeOrbit) -> int | None:
    seen = {}
    for t, p in enumerate(orb.points):
        if p in seen:
            return t
        seen[p] = t
    return None


def detect_recurrence(orb: FriezeOrbit, coords: Sequence[int], horizon: int) -> RecurrenceResult:
    """Joint minimal recurrence of the given coordinates, growing the orbit
    until a recurrence is certified on held-out samples."""
    T = max(horizon, 8)
    while True:
        orb.extend(T)
        held = max(4, (T + 1) // 5)
        total: UPoly | None = None
        ok = True
        for i in coords:
            seq = orb.coordinate(i)
            prefix = seq[: len(seq) - held]
            try:
                p = min_char_poly(prefix, (len(prefix) - 1) // 2)
            except NoRecurrenceFound:
                ok = False
                break
            if not annihilates(p, seq):
                ok = False
                break
            total = p if total is None else poly_lcm(total, p)
        if ok and total is not None and all(annihilates(total, orb.coordinate(i)) for i in coords):
            pf = period_form(total)
            if pf is not None:
                m, c = pf
                if 2 * m + held <= len(orb.points):
                    return RecurrenceResult.build(total, m, c)
        if T >= MAX_HORIZON:
            raise NoRecurrenceFound(f"no period-form recurrence within {T} orbit steps")
        T = min(2 * T, MAX_HORIZON)


def _fit_and_implicitize(args):
    orb, t, rec, mode, ranking = args
    p = fit_component(orb, t, rec, mode)
    return p, implicitize(p, ranking)


def dedup_components(comps: list[Component]) -> list[Component]:
    """Merge residues with identical reduced bases; the equal residues must
    form cosets of a subgroup of Z/m."""
    m = len(comps)
    if m == 0:
        return comps
    keyed = [tuple(c.result.basis.texts()) if c.result else tuple(map(tuple, c.points or [])) for c in comps]
    k = next((s for s in range(1, m) if keyed[s] == keyed[0]), m)
    if m % k:
        raise StructureViolation(f"X_0 = X_{k} but {k} does not divide {m}")
    for t in range(m):
        if keyed[t] != keyed[(t + k) % m]:
            raise StructureViolation(f"X_0 = X_{k} yet X_{t} != X_{(t + k) % m}")
    for s in range(k):
        for u in range(s + 1, k):
            if keyed[s] == keyed[u]:
                raise StructureViolation(f"X_{s} = X_{u} breaks the shift pattern")
    out = []
    for s in range(k):
        c = comps[s]
        out.append(Component(c.t, list(range(s, m, k)), c.dim, c.param, c.result, c.points))
    return out


def _point_component(t: int, pt: tuple, ranking) -> Component:
    n = len(pt)
    xs = x_names(n)
    o = MonomialOrder.lex(xs, ranking)
    G = groebner([MultiPoly.var(xs, x) - c for x, c in zip(xs, pt)], o)
    return Component(t, [t], 0, None, ImplicitResult(G, 0, "point_set", "yes"), [pt])


def compute_frieze_variety(q: Quiver, spec: AutomorphismSpec, a: Sequence, options: Options | None = None) -> FriezeVarietyReport:
    opts = options or Options()
    if validate_spec(spec, q) == "invalid":
        raise InvalidAutomorphism(f"{spec} does not induce a cluster automorphism")
    point = as_point(a)
    ext, hint = _affine_info(q)
    anchor = opts.anchor or (ext[0] if ext else 1)
    ranking = resolve_order(q.n, opts.order, anchor)
    orb = orbit(PointSeed(q, point), spec, 0, check=False)

    # finite orbits: an exact repeat proves the variety is a point set
    orb.extend(max(64, 8 * (hint or 0)))
    rep = _find_repeat(orb)
    if rep is not None:
        return _finite_report(q, spec, point, orb, rep, ranking)

    coords = list(opts.coordinates or ext or range(1, q.n + 1))
    rec = detect_recurrence(orb, coords, opts.horizon or default_horizon(hint))
    if opts.period:
        if opts.period % rec.m:
            raise PeriodMismatch(f"forced period {opts.period} is not a multiple of the detected period {rec.m}")
        c = trace_for_period(rec.charpoly, opts.period)
        rec = RecurrenceResult.build(rec.charpoly, opts.period, c)
    kind = classify_trace(rec.c)
    if kind == "finite":
        orb.extend(12 * rec.m + 1)
        rep = _find_repeat(orb)
        if rep is None:  # pragma: no cover - a root of unity forces a repeat
            raise StructureViolation("trace is a root-of-unity value but the orbit does not close")
        return _finite_report(q, spec, point, orb, rep, ranking)

    fit_rec, mode = rec, None
    if kind == "signed_line":
        # (-1)^j alternation: residues mod 2m are plain polynomial families
        fit_rec = RecurrenceResult(rec.charpoly, 2 * rec.m, QQ(2))
        mode = "poly"
    M = fit_rec.m
    orb.extend(M * (samples_needed() + 1))
    jobs = [(orb, t, fit_rec, mode, ranking) for t in range(M)]
    if opts.threads and opts.threads > 1:
        with ProcessPoolExecutor(max_workers=opts.threads) as ex:
            results = list(ex.map(_fit_and_implicitize, jobs))
    else:
        results = [_fit_and_implicitize(j) for j in jobs]
    comps = [Component(t, [t], res.dim, p, res) for t, (p, res) in enumerate(results)]
    comps = dedup_components(comps)
    return FriezeVarietyReport(
        q, spec, point, kind, rec.m, M, comps, rec, ranking, orb, tuple(coords)
    )


def _finite_report(q, spec, point, orb: FriezeOrbit, rep: int, ranking) -> FriezeVarietyReport:
    pts = orb.points[:rep]
    comps = [_point_component(t, p, ranking) for t, p in enumerate(pts)]
    del orb.points[rep:]
    return FriezeVarietyReport(q, spec, point, "finite", rep, rep, comps, None, ranking, orb)


@dataclass
class VerificationRecord:
    checked_points: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_report(report: FriezeVarietyReport, extra_horizon: int = 10) -> VerificationRecord:
    """Re-check a report on orbit points beyond those used to build it."""
    rec = VerificationRecord()
    orb = report.orbit
    if orb is None:
        orb = orbit(PointSeed(report.quiver, report.point), report.spec, 0)
    start = len(orb.points)
    orb.extend(start + extra_horizon - 1)
    xs = x_names(report.quiver.n)
    if report.kind == "finite":
        allowed = {p for c in report.components for p in (c.points or [])}
        for t in range(start, len(orb.points)):
            rec.checked_points += 1
            if orb.points[t] not in allowed:
                rec.failures.append(f"point {t} leaves the finite orbit")
        return rec
    for comp in report.components:
        if not is_groebner(comp.result.basis):
            rec.failures.append(f"component t={comp.t}: basis fails Buchberger's criterion")
    for t in range(start, len(orb.points)):
        comp = report.component_of_residue(t)
        pt = dict(zip(xs, orb.points[t]))
        rec.checked_points += 1
        for g in comp.result.basis.gens:
            if g.evaluate(pt) != 0:
                rec.failures.append(f"point {t} is not on component t={comp.t}: {g.to_text(comp.result.basis.order)} != 0")
                break
    r = report.recurrence
    if r is not None and r.kind == "curve":
        m, c = r.m, r.c
        for i in report.coordinates:
            seq = orb.coordinate(i)
            for t in range(max(0, start - 2 * m), len(seq) - 2 * m):
                if seq[t + 2 * m] - c * seq[t + m] + seq[t] != 0:
                    rec.failures.append(f"coordinate {i}: period relation fails at {t}")
                    break
    return rec


def membership_failures(G: GroebnerBasis, points: Sequence[tuple]) -> list[int]:
    xs = G.vars
    bad = []
    for idx, p in enumerate(points):
        pt = dict(zip(xs, p))
        if any(g.evaluate(pt) != 0 for g in G.gens):
            bad.append(idx)
    return bad
