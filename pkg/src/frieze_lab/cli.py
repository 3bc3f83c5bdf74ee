"""Command-line front end: ``frieze-lab <subcommand> ...``.

Exit codes: 0 success, 2 bad input, 3 computation error or failed check.
Output is JSON with a two-space indent unless ``--format text`` is given.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import catalog
from .errors import FriezeError, InvalidAutomorphism, InvalidPermutation, InvalidQuiver, PolyParseError, ScalarParseError
from .folding import FoldingGroup, fold, folded_coxeter_spec, lift_basis, restrict_basis
from .implicitize import ORDER_PRESETS, x_names
from .pipeline import Options, compute_frieze_variety, detect_recurrence, recurrence_vertices
from .polyring import GroebnerBasis, is_groebner
from .quiver import Quiver, identity_perm, parse_cycles
from .scalars import format_scalar, parse_scalar
from .seeds import AutomorphismSpec, PointSeed, coxeter_spec, mutate_point, orbit

EXIT_OK, EXIT_INPUT, EXIT_COMPUTE = 0, 2, 3


class InputError(Exception):
    """Malformed command-line input (exit code 2)."""


# input parsing -----------------------------------------------------------

def load_quiver(ref: str) -> Quiver:
    """A catalog name (A21, E7, D6, markov, ...) or a path to quiver JSON."""
    path = Path(ref)
    if path.is_file():
        try:
            return Quiver.from_json(path.read_text())
        except (json.JSONDecodeError, InvalidQuiver, TypeError, ValueError) as exc:
            raise InputError(f"{ref}: {exc}") from exc
    try:
        return catalog.by_name(ref)
    except KeyError:
        names = ", ".join(catalog.CATALOG)
        raise InputError(f"--quiver {ref!r} is neither a file nor a catalog name ({names}, D<n>)") from None


def parse_word(text: str, n: int) -> tuple[int, ...]:
    out = []
    for pos, part in enumerate(p for p in text.replace(" ", "").split(",") if p):
        if not part.isdigit() or not 1 <= int(part) <= n:
            raise InputError(f"mutation word entry {pos + 1} ({part!r}) is not a vertex in 1..{n}")
        out.append(int(part))
    return tuple(out)


def parse_point(text: str | None, n: int) -> tuple:
    if text is None:
        return (1,) * n
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != n:
        raise InputError(f"--point has {len(parts)} entries, the quiver has {n} vertices")
    out = []
    for pos, part in enumerate(parts):
        try:
            out.append(parse_scalar(part))
        except (ScalarParseError, ValueError, ZeroDivisionError) as exc:
            raise InputError(f"--point entry {pos + 1} ({part!r}): {exc}") from exc
    return tuple(out)


def build_spec(q: Quiver, spec: str, perm: str | None) -> AutomorphismSpec:
    try:
        sigma = parse_cycles(perm, q.n) if perm else identity_perm(q.n)
    except InvalidPermutation as exc:
        raise InputError(f"--perm: {exc}") from exc
    if spec == "coxeter":
        if perm:
            return AutomorphismSpec(coxeter_spec(q).word, sigma)
        return coxeter_spec(q)
    return AutomorphismSpec(parse_word(spec, q.n), sigma)


def parse_order(text: str | None, n: int):
    if text is None or text in ORDER_PRESETS:
        return text or "anchor"
    names = [p.strip() for p in text.split(",") if p.strip()]
    if sorted(names) != sorted(x_names(n)):
        raise InputError(f"--order {text!r} must be one of {ORDER_PRESETS} or a permutation of x1..x{n}")
    return names


def load_basis(path: str) -> GroebnerBasis:
    try:
        return GroebnerBasis.from_dict(json.loads(Path(path).read_text()))
    except (OSError, json.JSONDecodeError, KeyError, PolyParseError, ValueError) as exc:
        raise InputError(f"basis file {path}: {exc}") from exc


def parse_groups(texts: Sequence[str], n: int) -> FoldingGroup:
    try:
        return FoldingGroup.from_cycles(n, *texts)
    except InvalidPermutation as exc:
        raise InputError(f"--group: {exc}") from exc


# subcommands -------------------------------------------------------------

def _points(points) -> list[list[str]]:
    return [[format_scalar(x) for x in p] for p in points]


def cmd_mutate(args) -> dict:
    q = load_quiver(args.quiver)
    seed = PointSeed(q, parse_point(args.point, q.n))
    for k in parse_word(args.word, q.n):
        seed = mutate_point(seed, k)
    return {"quiver": seed.quiver.to_dict(), "point": [format_scalar(x) for x in seed.point]}


def cmd_orbit(args) -> dict:
    q = load_quiver(args.quiver)
    spec = build_spec(q, args.spec, args.perm)
    orb = orbit(PointSeed(q, parse_point(args.point, q.n)), spec, args.horizon)
    return {"spec": spec.to_dict(), "points": _points(orb.points)}


def cmd_recurrence(args) -> dict:
    q = load_quiver(args.quiver)
    spec = build_spec(q, args.spec, args.perm)
    if args.coordinate:
        coords = [args.coordinate]
    else:
        coords = recurrence_vertices(q) or list(range(1, q.n + 1))
    if any(not 1 <= c <= q.n for c in coords):
        raise InputError(f"--coordinate must lie in 1..{q.n}")
    orb = orbit(PointSeed(q, parse_point(args.point, q.n)), spec, 0)
    rec = detect_recurrence(orb, coords, args.horizon or 16)
    out = rec.to_dict()
    out["coordinates"] = coords
    return out


def cmd_components(args) -> dict:
    q = load_quiver(args.quiver)
    spec = build_spec(q, args.spec, args.perm)
    opts = Options(
        order=parse_order(args.order, q.n),
        anchor=args.anchor,
        horizon=args.horizon,
        period=args.period,
        threads=args.threads,
    )
    return compute_frieze_variety(q, spec, parse_point(args.point, q.n), opts).to_dict()


def cmd_fold(args) -> dict:
    q = load_quiver(args.quiver)
    G = parse_groups(args.group, q.n)
    folded, pi = fold(q, G)
    out: dict = {"orbits": [list(o) for o in G.orbits], "projection": list(pi), "folded": folded.to_dict()}
    if folded.is_acyclic():
        h, f = folded_coxeter_spec(q, G)
        out["folded_spec"] = h.to_dict()
        out["unfolded_spec"] = f.to_dict()
    if args.basis:
        basis = load_basis(args.basis)
        if args.direction == "lift":
            out["basis"] = lift_basis(basis, G.orbits).to_dict()
        else:
            out["basis"] = restrict_basis(basis, G.orbits).to_dict()
    return out


def cmd_check(args) -> dict:
    basis = load_basis(args.basis)
    out: dict = {"is_groebner": is_groebner(basis)}
    if args.quiver:
        q = load_quiver(args.quiver)
        if tuple(basis.vars) != x_names(q.n):
            raise InputError(f"basis variables {list(basis.vars)} do not match the quiver's x1..x{q.n}")
        spec = build_spec(q, args.spec, args.perm)
        orb = orbit(PointSeed(q, parse_point(args.point, q.n)), spec, args.horizon)
        step = args.modulus or 1
        failures = []
        checked = 0
        for t in range(args.residue, len(orb.points), step):
            pt = dict(zip(basis.vars, orb.points[t]))
            checked += 1
            if any(g.evaluate(pt) != 0 for g in basis.gens):
                failures.append(t)
        out.update(checked=checked, membership_failures=failures)
    out["ok"] = out["is_groebner"] and not out.get("membership_failures")
    return out


# text rendering ------------------------------------------------------------

def to_text(command: str, result: dict) -> str:
    if command == "recurrence":
        line = f"{result['charpoly']}, m={result['m']}, c={result['c']}"
        if result.get("rho"):
            line += f", rho={result['rho']}"
        return line
    if command == "orbit":
        return "\n".join(" ".join(p) for p in result["points"])
    if command == "components":
        lines = [f"m={result['m']} c={result['c']} components={result['component_count']}"]
        for comp in result["components"]:
            lines.append(f"[t={comp['t']} residues={comp['residues']} dim={comp['dim']}]")
            lines.extend(f"  {g}" for g in comp.get("generators", []))
        return "\n".join(lines)
    return json.dumps(result, indent=2)


# argument parser -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="frieze-lab", description="Generalized frieze varieties of quivers.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, spec=True, point=True):
        sp.add_argument("--quiver", required=True, help="quiver JSON file or catalog name")
        if spec:
            sp.add_argument("--spec", default="coxeter", help="'coxeter' or a comma-separated mutation word")
            sp.add_argument("--perm", default=None, help="vertex permutation in cycle notation, e.g. '(1 5)'")
        if point:
            sp.add_argument("--point", default=None, help="comma-separated base point (default all ones)")
        sp.add_argument("--format", choices=("json", "text"), default="json")

    sp = sub.add_parser("mutate", help="apply a mutation word to a point seed")
    common(sp, spec=False)
    sp.add_argument("--word", required=True)

    sp = sub.add_parser("orbit", help="print the orbit points a_0 .. a_T")
    common(sp)
    sp.add_argument("--horizon", type=int, default=10)

    sp = sub.add_parser("recurrence", help="minimal characteristic polynomial, m, c and rho")
    common(sp)
    sp.add_argument("--coordinate", type=int, default=None)
    sp.add_argument("--horizon", type=int, default=None)

    sp = sub.add_parser("components", help="full frieze variety report")
    common(sp)
    sp.add_argument("--order", default=None, help=f"one of {ORDER_PRESETS} or a ranking like x3,x2,x1")
    sp.add_argument("--anchor", type=int, default=None)
    sp.add_argument("--horizon", type=int, default=None)
    sp.add_argument("--period", type=int, default=None)
    sp.add_argument("--threads", type=int, default=1)

    sp = sub.add_parser("fold", help="fold a quiver by a group and translate bases")
    common(sp, spec=False, point=False)
    sp.add_argument("--group", action="append", required=True, help="generator in cycle notation (repeatable)")
    sp.add_argument("--basis", default=None, help="Groebner basis JSON to translate")
    sp.add_argument("--direction", choices=("lift", "restrict"), default="lift")

    sp = sub.add_parser("check", help="Buchberger criterion and orbit membership for a basis file")
    sp.add_argument("--basis", required=True)
    sp.add_argument("--quiver", default=None)
    sp.add_argument("--spec", default="coxeter")
    sp.add_argument("--perm", default=None)
    sp.add_argument("--point", default=None)
    sp.add_argument("--horizon", type=int, default=20)
    sp.add_argument("--residue", type=int, default=0)
    sp.add_argument("--modulus", type=int, default=None)
    sp.add_argument("--format", choices=("json", "text"), default="json")
    return p


COMMANDS = {
    "mutate": cmd_mutate,
    "orbit": cmd_orbit,
    "recurrence": cmd_recurrence,
    "components": cmd_components,
    "fold": cmd_fold,
    "check": cmd_check,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        result = COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except (InvalidAutomorphism, InvalidQuiver, InvalidPermutation) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except FriezeError as exc:
        print(f"computation error: {type(exc).__name__}: {exc}", file=err)
        return EXIT_COMPUTE
    text = to_text(args.command, result) if args.format == "text" else json.dumps(result, indent=2)
    print(text, file=out)
    if args.command == "check" and not result["ok"]:
        return EXIT_COMPUTE
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
