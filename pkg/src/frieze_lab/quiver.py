"""Exchange matrices, matrix mutation and the combinatorics of acyclic and
affine quivers.

Convention: ``B[i][j] > 0`` means there are ``B[i][j]`` arrows i -> j.
User-facing vertex labels are 1-based; matrices are indexed from 0.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from math import gcd, lcm
from typing import Iterable, Sequence

from gmpy2 import mpq

from ._linalg import nullspace
from .errors import (
    InvalidPermutation,
    InvalidQuiver,
    NotAcyclic,
    NotAffine,
    NotSkewSymmetrizable,
    VertexOutOfRange,
)

Matrix = tuple[tuple[int, ...], ...]
Perm = tuple[int, ...]  # 1-based images: perm[i-1] = sigma(i)


def _as_matrix(B: Iterable[Iterable[int]]) -> Matrix:
    rows = tuple(tuple(int(x) for x in row) for row in B)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise InvalidQuiver("exchange matrix must be square")
    return rows


def find_symmetrizer(B: Matrix) -> tuple[int, ...] | None:
    """Smallest positive integer D with D*B skew-symmetric, or None."""
    n = len(B)
    d: list[mpq | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = mpq(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if B[i][j] == 0 and B[j][i] == 0:
                    continue
                if B[i][j] == 0 or B[j][i] == 0 or (B[i][j] > 0) == (B[j][i] > 0):
                    return None
                # d_i b_ij = -d_j b_ji
                want = -d[i] * B[i][j] / B[j][i]
                if d[j] is None:
                    d[j] = want
                    stack.append(j)
                elif d[j] != want:
                    return None
    for i in range(n):
        if B[i][i] != 0:
            return None
    den = lcm(*(int(x.denominator) for x in d)) if n else 1
    ints = [int(x * den) for x in d]
    g = gcd(*ints) if ints else 1
    return tuple(x // g for x in ints)


@dataclass(frozen=True)
class Quiver:
    """A skew-symmetrizable exchange matrix with its symmetrizer."""

    B: Matrix
    D: tuple[int, ...]

    def __init__(self, B, D: Sequence[int] | None = None):
        M = _as_matrix(B)
        if D is None:
            found = find_symmetrizer(M)
            if found is None:
                raise NotSkewSymmetrizable("no positive diagonal symmetrizer exists")
            D = found
        D = tuple(int(x) for x in D)
        if len(D) != len(M) or any(x <= 0 for x in D):
            raise InvalidQuiver("symmetrizer must be a positive vector of length n")
        n = len(M)
        for i in range(n):
            for j in range(n):
                if D[i] * M[i][j] != -D[j] * M[j][i]:
                    raise NotSkewSymmetrizable(f"D*B is not skew-symmetric at ({i + 1},{j + 1})")
        object.__setattr__(self, "B", M)
        object.__setattr__(self, "D", D)

    @classmethod
    def from_arrows(cls, n: int, arrows: Iterable[tuple[int, int]]) -> Quiver:
        """Simply-laced quiver from 1-based arrows (i, j) meaning i -> j."""
        B = [[0] * n for _ in range(n)]
        for i, j in arrows:
            if not (1 <= i <= n and 1 <= j <= n) or i == j:
                raise InvalidQuiver(f"bad arrow {i}->{j}")
            B[i - 1][j - 1] += 1
            B[j - 1][i - 1] -= 1
        return cls(B)

    @property
    def n(self) -> int:
        return len(self.B)

    @property
    def is_skew_symmetric(self) -> bool:
        return all(d == self.D[0] for d in self.D)

    def _check_vertex(self, k: int) -> int:
        if not 1 <= k <= self.n:
            raise VertexOutOfRange(f"vertex {k} not in 1..{self.n}")
        return k - 1

    def mutate(self, k: int) -> Quiver:
        """Matrix mutation at the 1-based vertex k."""
        return Quiver(mutate_matrix(self.B, k), self.D)

    def opposite(self) -> Quiver:
        return Quiver(tuple(tuple(-x for x in row) for row in self.B), self.D)

    def relabel(self, sigma: Perm) -> Quiver:
        """Quiver whose vertex i plays the role of vertex sigma(i) of self."""
        s = [x - 1 for x in check_perm(sigma, self.n)]
        B = tuple(tuple(self.B[s[i]][s[j]] for j in range(self.n)) for i in range(self.n))
        return Quiver(B, tuple(self.D[s[i]] for i in range(self.n)))

    # arrows ----------------------------------------------------------
    def arrows(self) -> list[tuple[int, int, int]]:
        """(i, j, b_ij) for every pair with b_ij > 0, 1-based."""
        return [
            (i + 1, j + 1, self.B[i][j])
            for i in range(self.n)
            for j in range(self.n)
            if self.B[i][j] > 0
        ]

    def in_neighbors(self, k: int) -> list[tuple[int, int]]:
        c = self._check_vertex(k)
        return [(i + 1, self.B[i][c]) for i in range(self.n) if self.B[i][c] > 0]

    def out_neighbors(self, k: int) -> list[tuple[int, int]]:
        c = self._check_vertex(k)
        return [(i + 1, -self.B[i][c]) for i in range(self.n) if self.B[i][c] < 0]

    def is_acyclic(self) -> bool:
        try:
            admissible_sink_order(self)
        except NotAcyclic:
            return False
        return True

    # JSON ------------------------------------------------------------
    def to_dict(self) -> dict:
        d = {"n": self.n, "B": [list(r) for r in self.B]}
        if not self.is_skew_symmetric:
            d["D"] = list(self.D)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> Quiver:
        try:
            B = data["B"]
        except (KeyError, TypeError) as exc:
            raise InvalidQuiver("quiver JSON needs a 'B' matrix") from exc
        if "n" in data and int(data["n"]) != len(B):
            raise InvalidQuiver("'n' does not match the size of 'B'")
        return cls(B, data.get("D"))

    @classmethod
    def from_json(cls, text: str) -> Quiver:
        return cls.from_dict(json.loads(text))


def mutate_matrix(B: Sequence[Sequence[int]], k: int) -> Matrix:
    """Fomin-Zelevinsky matrix mutation at the 1-based vertex k."""
    n = len(B)
    if not 1 <= k <= n:
        raise VertexOutOfRange(f"vertex {k} not in 1..{n}")
    c = k - 1
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == c or j == c:
                row.append(-B[i][j])
            else:
                bik, bkj = B[i][c], B[c][j]
                row.append(B[i][j] + (abs(bik) * bkj + bik * abs(bkj)) // 2)
        out.append(tuple(row))
    return tuple(out)


def admissible_sink_order(q: Quiver) -> list[int]:
    """Vertices (1-based) listed so each is a sink after mutating its predecessors.

    Equivalently: whenever i -> j, j comes before i.  Ties are broken by
    smallest label, so the result is deterministic.
    """
    n = q.n
    remaining = set(range(n))
    order: list[int] = []
    while remaining:
        # a sink of the induced subquiver has no outgoing arrow into remaining
        sink = next(
            (v for v in sorted(remaining) if all(q.B[v][j] <= 0 for j in remaining)),
            None,
        )
        if sink is None:
            raise NotAcyclic("quiver has an oriented cycle")
        order.append(sink + 1)
        remaining.remove(sink)
    return order


def cartan_companion(q: Quiver) -> list[list[int]]:
    """Symmetrized Euler/Cartan form D*(2I - |B|)."""
    n = q.n
    return [
        [q.D[i] * (2 if i == j else -abs(q.B[i][j])) for j in range(n)]
        for i in range(n)
    ]


def delta_vector(q: Quiver) -> tuple[tuple[int, ...], frozenset[int]]:
    """Minimal positive imaginary root of an affine acyclic quiver and its
    extending vertices (1-based labels i with delta_i = 1)."""
    if not q.is_acyclic():
        raise NotAcyclic("delta is only defined for acyclic quivers")
    C = cartan_companion(q)
    ker = nullspace([[mpq(x) for x in row] for row in C])
    if len(ker) != 1:
        raise NotAffine(f"radical of the symmetrized form has dimension {len(ker)}")
    v = ker[0]
    den = lcm(*(int(x.denominator) for x in v))
    ints = [int(x * den) for x in v]
    g = gcd(*ints)
    ints = [x // g for x in ints]
    if all(x < 0 for x in ints):
        ints = [-x for x in ints]
    if any(x <= 0 for x in ints):
        raise NotAffine("radical vector is not positive")
    # positive semidefinite check: an affine form has corank one and a
    # positive definite complement, tested on principal minors after deleting
    # one extending vertex
    ext = ints.index(1) if 1 in ints else 0
    sub = [[mpq(C[i][j]) for j in range(q.n) if j != ext] for i in range(q.n) if i != ext]
    if not _positive_definite(sub):
        raise NotAffine("symmetrized form is indefinite")
    return tuple(ints), frozenset(i + 1 for i, x in enumerate(ints) if x == 1)


def _positive_definite(M: list[list[mpq]]) -> bool:
    # Sylvester's criterion via exact LDL^T
    A = [row[:] for row in M]
    n = len(A)
    for k in range(n):
        if A[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            f = A[i][k] / A[k][k]
            for j in range(k, n):
                A[i][j] -= f * A[k][j]
    return True


def extending_vertices(q: Quiver) -> list[int]:
    return sorted(delta_vector(q)[1])


@dataclass(frozen=True)
class AffineType:
    family: str  # "A", "D", "E" or "valued"
    label: str
    period_hint: int


def affine_type(q: Quiver) -> AffineType | None:
    """Identify the Euclidean type of an acyclic quiver, or None if not affine."""
    try:
        delta, _ = delta_vector(q)
    except (NotAffine, NotAcyclic):
        return None
    n = q.n
    if not q.is_skew_symmetric or any(abs(x) > 1 for row in q.B for x in row):
        if n == 2 and q.is_skew_symmetric and abs(q.B[0][1]) == 2:
            return AffineType("A", "A~(1,1)", 1)
        return AffineType("valued", "valued", n)
    if all(x == 1 for x in delta):
        # cycle: count arrows agreeing with the cyclic orientation of the underlying graph
        p, q_ = sorted(_cycle_orientation(q), reverse=True)
        return AffineType("A", f"A~({p},{q_})", lcm(p, q_))
    top = max(delta)
    if top == 2:
        # the D~ family of the catalog has n vertices
        return AffineType("D", f"D~{n}", 2 * (n - 3) if n % 2 == 0 else n - 3)
    return {3: AffineType("E", "E~6", 6), 4: AffineType("E", "E~7", 12), 6: AffineType("E", "E~8", 30)}.get(top)


def _cycle_orientation(q: Quiver) -> tuple[int, int]:
    n = q.n
    adj = {i: [j for j in range(n) if q.B[i][j] != 0] for i in range(n)}
    walk, prev, cur = [0], None, 0
    while True:
        nxt = next(j for j in adj[cur] if j != prev) if prev is not None else adj[cur][0]
        if nxt == 0:
            break
        walk.append(nxt)
        prev, cur = cur, nxt
    walk.append(0)
    fwd = sum(1 for a, b in zip(walk, walk[1:]) if q.B[a][b] > 0)
    return fwd, n - fwd


def apply_permutation(q: Quiver, sigma: Perm) -> Quiver:
    return q.relabel(sigma)


def classify_symmetry(q: Quiver, sigma: Perm) -> str:
    """'automorphism', 'anti_automorphism' or 'neither' for a vertex permutation."""
    r = q.relabel(sigma)
    if r.B == q.B:
        return "automorphism"
    if all(r.B[i][j] == -q.B[i][j] for i in range(q.n) for j in range(q.n)):
        return "anti_automorphism"
    return "neither"


# permutations ----------------------------------------------------------

def check_perm(sigma: Sequence[int], n: int | None = None) -> Perm:
    s = tuple(int(x) for x in sigma)
    if n is not None and len(s) != n:
        raise InvalidPermutation(f"permutation has length {len(s)}, expected {n}")
    if sorted(s) != list(range(1, len(s) + 1)):
        raise InvalidPermutation(f"{list(s)} is not a permutation of 1..{len(s)}")
    return s


def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def perm_inverse(sigma: Perm) -> Perm:
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma):
        inv[s - 1] = i + 1
    return tuple(inv)


def perm_compose(sigma: Perm, tau: Perm) -> Perm:
    """(sigma o tau)(i) = sigma(tau(i))."""
    return tuple(sigma[t - 1] for t in tau)


def apply_perm(sigma: Perm, point: Sequence):
    """sigma.(a) = (a_sigma(1), ..., a_sigma(n))."""
    return tuple(point[s - 1] for s in sigma)


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int) -> Perm:
    """Cycle notation such as '(1 4)(2 5)(3 6)' or '(2,3,4,5)' to a permutation of 1..n."""
    img = list(range(1, n + 1))
    stripped = text.strip()
    if stripped in ("", "()", "id"):
        return tuple(img)
    if _CYCLE.sub("", stripped).strip():
        raise InvalidPermutation(f"cannot parse cycle notation {text!r}")
    seen: set[int] = set()
    for body in _CYCLE.findall(stripped):
        parts = [p for p in re.split(r"[\s,]+", body.strip()) if p]
        try:
            cyc = [int(p) for p in parts]
        except ValueError as exc:
            raise InvalidPermutation(f"non-integer in cycle ({body})") from exc
        if any(not 1 <= c <= n for c in cyc) or seen & set(cyc) or len(set(cyc)) != len(cyc):
            raise InvalidPermutation(f"invalid cycle ({body}) for n={n}")
        seen |= set(cyc)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a - 1] = b
    return tuple(img)


def format_cycles(sigma: Perm) -> str:
    seen: set[int] = set()
    out = []
    for start in range(1, len(sigma) + 1):
        if start in seen or sigma[start - 1] == start:
            continue
        cyc, cur = [], start
        while cur not in seen:
            seen.add(cur)
            cyc.append(cur)
            cur = sigma[cur - 1]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) or "()"
