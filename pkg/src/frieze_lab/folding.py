"""Group actions on quivers, admissibility, orbit mutation, folded valued
quivers, and the transfer of Groebner bases between a quiver and its fold.

Folded vertex I corresponds to the I-th orbit when orbits are sorted by
their smallest element; that element is the orbit's default representative.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Sequence

from .errors import NotAdmissible, NotInvariant, OrderDependence, OrderMismatch
from .implicitize import x_names
from .polyring import GroebnerBasis, MonomialOrder, MultiPoly, eliminate, normal_form, reduce_basis
from .quiver import Perm, Quiver, check_perm, identity_perm, parse_cycles, perm_compose
from .seeds import AutomorphismSpec, Point, as_point, coxeter_spec, exchange

GROUP_LIMIT = 100_000


@dataclass(frozen=True)
class FoldingGroup:
    """Permutation group on 1..n given by generators."""

    n: int
    generators: tuple[Perm, ...]

    def __init__(self, n: int, generators: Sequence[Sequence[int]] = ()):
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "generators", tuple(check_perm(g, n) for g in generators))

    @classmethod
    def from_cycles(cls, n: int, *cycle_texts: str) -> FoldingGroup:
        return cls(n, [parse_cycles(t, n) for t in cycle_texts])

    @classmethod
    def trivial(cls, n: int) -> FoldingGroup:
        return cls(n, [])

    @property
    def orbits(self) -> tuple[tuple[int, ...], ...]:
        parent = list(range(self.n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            for i, gi in enumerate(g, start=1):
                a, b = find(i), find(gi)
                if a != b:
                    parent[max(a, b)] = min(a, b)
        groups: dict[int, list[int]] = {}
        for i in range(1, self.n + 1):
            groups.setdefault(find(i), []).append(i)
        return tuple(tuple(v) for _, v in sorted(groups.items()))

    @property
    def representatives(self) -> tuple[int, ...]:
        return tuple(o[0] for o in self.orbits)

    def projection(self) -> tuple[int, ...]:
        """pi(i) = index (1-based) of the orbit containing vertex i."""
        pi = [0] * self.n
        for idx, orb in enumerate(self.orbits, start=1):
            for v in orb:
                pi[v - 1] = idx
        return tuple(pi)

    def elements(self) -> list[Perm]:
        ident = identity_perm(self.n)
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for p in frontier:
                for g in self.generators:
                    q = perm_compose(g, p)
                    if q not in seen:
                        seen.add(q)
                        nxt.append(q)
                        if len(seen) > GROUP_LIMIT:
                            raise ValueError(f"group has more than {GROUP_LIMIT} elements")
            frontier = nxt
        return sorted(seen)


def check_admissible(q: Quiver, G: FoldingGroup) -> tuple[bool, str | None]:
    """Gamma-invariance, no arrows inside an orbit, and no path i -> j -> g(i)."""
    if G.n != q.n:
        return False, f"group acts on {G.n} points, quiver has {q.n} vertices"
    n, B = q.n, q.B
    for g in G.generators:
        for i in range(n):
            for j in range(n):
                if B[g[i] - 1][g[j] - 1] != B[i][j]:
                    return False, f"b[{i + 1}][{j + 1}] != b[{g[i]}][{g[j]}] under {g}"
    for orb in G.orbits:
        for a in orb:
            for b in orb:
                if B[a - 1][b - 1] != 0:
                    return False, f"arrow between {a} and {b} in the orbit {orb}"
    pi = G.projection()
    for i in range(n):
        for j in range(n):
            if B[i][j] <= 0:
                continue
            for k in range(n):
                if k != i and pi[k] == pi[i] and B[j][k] > 0:
                    return False, f"path {i + 1} -> {j + 1} -> {k + 1} returns to the orbit of {i + 1}"
    return True, None


def _require_admissible(q: Quiver, G: FoldingGroup) -> None:
    ok, witness = check_admissible(q, G)
    if not ok:
        raise NotAdmissible(witness)


def orbit_mutate(q: Quiver, orbit: Sequence[int]) -> Quiver:
    """Mutate at every vertex of the orbit; the result must not depend on the order."""
    verts = sorted(orbit)
    fwd = q
    for k in verts:
        fwd = fwd.mutate(k)
    if len(verts) > 1:
        bwd = q
        for k in reversed(verts):
            bwd = bwd.mutate(k)
        if bwd.B != fwd.B:
            raise OrderDependence(f"mutations at {verts} do not commute")
    return fwd


def orbit_mutate_point(q: Quiver, point: Sequence, orbit: Sequence[int]) -> tuple[Quiver, Point]:
    pt = list(as_point(point))
    cur = q
    for k in sorted(orbit):
        pt[k - 1] = exchange(cur, pt, k)
        cur = cur.mutate(k)
    return cur, tuple(pt)


def fold(q: Quiver, G: FoldingGroup) -> tuple[Quiver, tuple[int, ...]]:
    """Folded valued quiver and the projection vertex -> folded vertex."""
    _require_admissible(q, G)
    orbits = G.orbits
    r = len(orbits)
    B = [[sum(q.B[i - 1][J[0] - 1] for i in I) for J in orbits] for I in orbits]
    for a in range(r):
        B[a][a] = 0
    size = lcm(*(len(o) for o in orbits))
    D = [size // len(o) for o in orbits]
    return Quiver(B, D), G.projection()


def expand_word(G: FoldingGroup, word: Sequence[int]) -> tuple[int, ...]:
    """Unfolded mutation word: each folded vertex becomes its whole orbit."""
    orbits = G.orbits
    return tuple(v for I in word for v in orbits[I - 1])


def folded_coxeter_spec(q: Quiver, G: FoldingGroup) -> tuple[AutomorphismSpec, AutomorphismSpec]:
    """(h, f): the folded Coxeter spec and its orbit-expanded unfolded spec.

    Every orbit-mutation step re-checks admissibility.
    """
    folded, _ = fold(q, G)
    h = coxeter_spec(folded)
    cur = q
    for I in h.word:
        _require_admissible(cur, G)
        cur = orbit_mutate(cur, G.orbits[I - 1])
    _require_admissible(cur, G)
    return h, AutomorphismSpec(expand_word(G, h.word), identity_perm(q.n))


def is_invariant_point(point: Sequence, G: FoldingGroup) -> bool:
    return all(point[i - 1] == point[orb[0] - 1] for orb in G.orbits for i in orb)


def project_point(point: Sequence, G: FoldingGroup, check: bool = True) -> Point:
    if check and not is_invariant_point(point, G):
        raise NotInvariant(f"{list(point)} is not constant on the orbits {G.orbits}")
    return tuple(point[orb[0] - 1] for orb in G.orbits)


def lift_point(point: Sequence, G: FoldingGroup) -> Point:
    pi = G.projection()
    return tuple(point[pi[i] - 1] for i in range(G.n))


# Groebner bases ------------------------------------------------------------

def _reps(partition: Sequence[Sequence[int]], representatives: Sequence[int] | None) -> list[int]:
    reps = list(representatives) if representatives else [min(p) for p in partition]
    if len(reps) != len(partition) or any(r not in p for r, p in zip(reps, partition)):
        raise ValueError("each representative must lie in its own block")
    return reps


def _rename(p: MultiPoly, names: Sequence[str], mapping: dict[str, str]) -> MultiPoly:
    idx = {v: i for i, v in enumerate(p.vars)}
    target = {mapping[v]: idx[v] for v in p.vars if v in mapping}
    perm = [target.get(v) for v in names]
    terms = {tuple(e[k] if k is not None else 0 for k in perm): c for e, c in p.terms.items()}
    return MultiPoly(names, terms)


def restrict_basis(
    G_full: GroebnerBasis,
    partition: Sequence[Sequence[int]],
    representatives: Sequence[int] | None = None,
) -> GroebnerBasis:
    """Basis of the folded ideal: keep the generators in representative
    variables and rename x_{rep of block I} to x_I."""
    reps = _reps(partition, representatives)
    names = G_full.vars
    rep_vars = [f"x{r}" for r in reps]
    others = [v for v in names if v not in rep_vars]
    ranking = G_full.order.ranking
    if others and max(ranking.index(v) for v in others) > min(ranking.index(v) for v in rep_vars):
        raise OrderMismatch(f"order {G_full.order.describe()} does not rank every duplicate above the representatives")
    for block, r in zip(partition, reps):
        for k in block:
            if k == r:
                continue
            diff = MultiPoly.var(names, f"x{k}") - MultiPoly.var(names, f"x{r}")
            if not normal_form(diff, G_full.gens, G_full.order).is_zero():
                raise NotInvariant(f"x{k} - x{r} is not in the ideal")
    kept = eliminate(G_full, rep_vars)
    folded_names = x_names(len(partition))
    mapping = dict(zip(rep_vars, folded_names))
    order = MonomialOrder.lex(folded_names, [mapping[v] for v in kept.order.ranking])
    gens = [_rename(g, folded_names, mapping) for g in kept.gens]
    return GroebnerBasis(gens, order, G_full.reduced)


def lift_basis(
    G_folded: GroebnerBasis,
    partition: Sequence[Sequence[int]],
    representatives: Sequence[int] | None = None,
    ranking: Sequence[str] | None = None,
) -> GroebnerBasis:
    """Unfolded basis: rename x_I to x_{rep of block I} and adjoin x_k - x_rep.

    The default order ranks duplicated variables (largest label first) above
    the representatives, which keep the folded order among themselves.
    """
    reps = _reps(partition, representatives)
    n = sum(len(p) for p in partition)
    names = x_names(n)
    folded_names = G_folded.vars
    mapping = {fn: f"x{r}" for fn, r in zip(folded_names, reps)}
    if ranking is None:
        dup = sorted((k for p, r in zip(partition, reps) for k in p if k != r), reverse=True)
        ranking = [f"x{k}" for k in dup] + [mapping[v] for v in G_folded.order.ranking]
    order = MonomialOrder.lex(names, ranking)
    gens = [_rename(g, names, mapping) for g in G_folded.gens]
    for block, r in zip(partition, reps):
        for k in block:
            if k != r:
                gens.append(MultiPoly.var(names, f"x{k}") - MultiPoly.var(names, f"x{r}"))
    rep_vars = {f"x{r}" for r in reps}
    if any(ranking.index(f"x{k}") > min(ranking.index(v) for v in rep_vars) for k in range(1, n + 1) if f"x{k}" not in rep_vars):
        raise OrderMismatch("lift needs a block order with duplicated variables above the representatives")
    return reduce_basis(gens, order)
