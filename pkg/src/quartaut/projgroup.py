"""Elements and finite subgroups of PGL_n over Q(ζ_N).

A `ProjMatrix` is scaled so its first nonzero entry (row-major) is 1, making projective equality an
entry comparison. `closure` enumerates a finite group breadth-first from its generators.
"""

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional, Sequence

from quartaut.cyclofield import ConductorError
from quartaut.matrix import SingularMatrixError, SquareMatrix

DEFAULT_CAP = 10_000
LOG_EVERY = 500

Log = Optional[Callable[[str], None]]


class CapExceeded(RuntimeError):
    """A closure or order search ran past its cap."""


def _first_nonzero(M: SquareMatrix):
    for row in M.rows:
        for a in row:
            if a:
                return a
    raise SingularMatrixError("Zero matrix")


@dataclass(frozen=True)
class ProjMatrix:
    rep: SquareMatrix

    @property
    def n(self) -> int:
        return self.rep.n

    @property
    def conductor(self) -> int:
        return self.rep.conductor

    @property
    def key(self) -> tuple:
        return tuple(a.coeffs for row in self.rep.rows for a in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjMatrix):
            return NotImplemented
        return self.conductor == other.conductor and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __matmul__(self, other: 'ProjMatrix') -> 'ProjMatrix':
        return _rescale(self.rep @ other.rep)

    def inverse(self) -> 'ProjMatrix':
        return _rescale(self.rep.inverse())

    def __pow__(self, k: int) -> 'ProjMatrix':
        if k < 0:
            return self.inverse() ** -k
        result = identity(self.n, self.rep)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def conjugate(self, g: 'ProjMatrix') -> 'ProjMatrix':
        """g·self·g⁻¹"""
        return g @ self @ g.inverse()

    def is_identity(self) -> bool:
        return self.rep.is_identity()

    def __repr__(self) -> str:
        from quartaut.parse import format_matrix
        return f"ProjMatrix({format_matrix(self.rep)})"


def _rescale(M: SquareMatrix) -> ProjMatrix:
    c = _first_nonzero(M)
    if c == 1:
        return ProjMatrix(M)
    return ProjMatrix(M.scale(c.inverse()))


def normalize(M: SquareMatrix) -> ProjMatrix:
    """Canonical representative of (M) in PGL_n."""
    if not M.det():
        raise SingularMatrixError("Singular matrix has no projective class")
    return _rescale(M)


def identity(n: int, like: SquareMatrix) -> ProjMatrix:
    return ProjMatrix(SquareMatrix.identity(n, like.ctx))


def proj_order(g: ProjMatrix, cap: int = DEFAULT_CAP) -> int:
    """Least m ≥ 1 with g^m = 1 in PGL_n."""
    if cap < 1:
        raise ValueError(f"cap must be ≥ 1, got {cap}")
    power = g
    for m in range(1, cap + 1):
        if power.is_identity():
            return m
        power = power @ g
    raise CapExceeded(f"Order exceeds {cap}")


@dataclass
class FiniteMatrixGroup:
    elements: tuple[ProjMatrix, ...]
    generators: tuple[ProjMatrix, ...]
    _keys: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        self._keys = frozenset(e.key for e in self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[ProjMatrix]:
        return iter(self.elements)

    def __contains__(self, g: ProjMatrix) -> bool:
        return g.key in self._keys

    @property
    def keys(self) -> frozenset:
        return self._keys

    @property
    def conductor(self) -> int:
        return self.elements[0].conductor

    @property
    def n(self) -> int:
        return self.elements[0].n


def closure(gens: Sequence[ProjMatrix], cap: int = DEFAULT_CAP, log: Log = None) -> FiniteMatrixGroup:
    """Breadth-first closure of `gens` under right multiplication.

    Element order is deterministic: the identity first, then by BFS depth and generator order.
    """
    if not gens:
        raise ValueError("closure needs at least one generator")
    conductors = {g.conductor for g in gens}
    if len(conductors) > 1:
        raise ConductorError(f"Generators have mixed conductors {sorted(conductors)}; embed first")
    gens = tuple(gens)
    e = identity(gens[0].n, gens[0].rep)
    elements = [e]
    seen = {e.key}
    idx = 0
    while idx < len(elements):
        cur = elements[idx]
        idx += 1
        for g in gens:
            prod = cur @ g
            if prod.key in seen:
                continue
            seen.add(prod.key)
            elements.append(prod)
            if len(elements) > cap:
                raise CapExceeded(f"Closure exceeded {cap} elements")
            if log and len(elements) % LOG_EVERY == 0:
                log(f"closure: {len(elements)} elements, {len(elements) - idx} queued")
    if log:
        log(f"closure: done, order {len(elements)}")
    return FiniteMatrixGroup(tuple(elements), gens)


def subgroup_of(elements: Iterable[ProjMatrix]) -> FiniteMatrixGroup:
    """Wrap an explicit element list (which must already be a group)."""
    elements = tuple(elements)
    return FiniteMatrixGroup(elements, elements)


def is_normal(H: FiniteMatrixGroup, G: FiniteMatrixGroup) -> bool:
    """gHg⁻¹ = H for all g ∈ G, checked on generators of both."""
    if not H.keys <= G.keys:
        raise ValueError("H is not a subset of G")
    for g in G.generators:
        g_inv = g.inverse()
        for h in H.generators:
            if (g @ h @ g_inv) not in H:
                return False
    return True


def order_statistics(G: FiniteMatrixGroup, cap: int = DEFAULT_CAP) -> dict[int, int]:
    """Histogram of projective element orders, sorted by order."""
    counts = Counter(proj_order(g, cap) for g in G)
    return dict(sorted(counts.items()))


def intersection_size(H1: FiniteMatrixGroup, H2: FiniteMatrixGroup) -> int:
    if H1.n != H2.n or H1.conductor != H2.conductor:
        raise ConductorError("Groups live in different PGL_n(Q(ζ_N))")
    return len(H1.keys & H2.keys)


def point_key(point: Sequence) -> tuple:
    """A projective point scaled so its first nonzero coordinate is 1."""
    lead = next((c for c in point if c), None)
    if lead is None:
        raise ValueError("The zero vector is not a projective point")
    inv = lead.inverse()
    return tuple(c * inv for c in point)


def point_orbit(gens: Sequence[SquareMatrix], point: Sequence) -> list[tuple]:
    """Orbit of a projective point under ⟨gens⟩, breadth-first from `point`.

    Coordinates may live in any field the matrix entries multiply into (e.g. a `QuadraticExtension`).
    """
    start = point_key(point)
    found = [start]
    seen = {start}
    idx = 0
    while idx < len(found):
        cur = found[idx]
        idx += 1
        for M in gens:
            nxt = point_key(M.apply(cur))
            if nxt not in seen:
                seen.add(nxt)
                found.append(nxt)
    return found
