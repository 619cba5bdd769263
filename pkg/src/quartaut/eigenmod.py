"""Eigenspaces of Form_{n,d} under finite group actions, and screens built on them.

For a diagonal generator diag[ε^{e_1},…,ε^{e_n}] of order q, each monomial is an eigenvector; its index
is Σ e_i·m_i mod q. Non-diagonal generators are handled by exact kernels (`eigenspace_basis`).
"""

from dataclasses import dataclass
from math import gcd
from typing import Callable, Optional, Sequence, Union

from sympy import factorint

from quartaut.cyclofield import ConductorError, CycScalar
from quartaut.forms import Form, Monomial, monomials, substitute_direct
from quartaut.matrix import SquareMatrix, nullspace, rref

Log = Optional[Callable[[str], None]]


@dataclass(frozen=True)
class IndexTable:
    q: int
    d: int
    exps: tuple[int, ...]
    entries: dict[Monomial, int]

    @property
    def n(self) -> int:
        return len(self.exps)

    def __getitem__(self, m: Monomial) -> int:
        return self.entries[m]


@dataclass(frozen=True)
class CyclicClassLabel:
    kind: str  # 'D0' | 'D1' | 'D_ell' | 'B_j' | 'D_jl'
    params: tuple[int, ...]
    q: int
    exps: tuple[int, ...]

    @property
    def name(self) -> str:
        if self.kind in ('D0', 'D1', 'D_ell'):
            return f"D_{self.params[0]}"
        if self.kind == 'B_j':
            return f"B_{self.params[0]}"
        j, l = self.params
        return f"D_{{{j},{l}}}"


def index_table(exps: Sequence[int], q: int, d: int) -> IndexTable:
    if q < 1:
        raise ValueError(f"q must be ≥ 1, got {q}")
    exps = tuple(e % q for e in exps)
    entries = {
        m: sum(e * k for e, k in zip(exps, m)) % q
        for m in monomials(len(exps), d)
    }
    return IndexTable(q=q, d=d, exps=exps, entries=entries)


def monomial_eigenspace(table: IndexTable, j: int) -> list[Monomial]:
    """M_d(j): monomials of index j, descending lexicographic."""
    return [m for m in monomials(table.n, table.d) if table.entries[m] == j % table.q]


def checking_monomials(n: int, d: int, j: int) -> list[Monomial]:
    """x_i·x_j^{d−1} for i = 1..n (column j, 1-based)."""
    col = j - 1
    return [
        tuple((d - 1 if k == col else 0) + (1 if k == i else 0) for k in range(n))
        for i in range(n)
    ]


def checking_row(table: IndexTable) -> list[tuple[Monomial, int]]:
    """Indices of the n² singularity-checking monomials, grouped by column (x⁴ x³y x³z x³t y³x y⁴ …)."""
    return [
        (m, table.entries[m])
        for j in range(1, table.n + 1)
        for m in checking_monomials(table.n, table.d, j)
    ]


def singularity_screen(support: Sequence[Monomial], n: int, d: int) -> list[int]:
    """Columns j (1-based) whose checking monomials are all absent from `support`.

    A nonempty result means every form with this support is singular at the coordinate point e'_j.
    """
    if d < 3:
        raise ValueError("Screen needs d ≥ 3")
    present = set(support)
    return [
        j for j in range(1, n + 1)
        if not any(m in present for m in checking_monomials(n, d, j))
    ]


def eigenspace_basis(
    gens: Sequence[SquareMatrix],
    rho: Sequence[Union[CycScalar, int]],
    n: int,
    d: int,
    log: Log = None,
) -> list[Form]:
    """Basis of {f : f(g·x) = ρ(g)·f(x) for every generator g}, i.e. f_{g⁻¹} = ρ(g)·f.

    Refines the full monomial basis one generator at a time by exact kernels; the result is in reduced
    echelon form over the descending-lex monomial order, so each vector's leading coefficient is 1.
    """
    if len(rho) != len(gens):
        raise ValueError(f"{len(gens)} generators but {len(rho)} eigenvalues")
    if not gens:
        raise ValueError("eigenspace_basis needs at least one generator")
    ctx = gens[0].ctx
    for g in gens:
        if g.conductor != ctx.conductor:
            raise ConductorError(f"Generators have mixed conductors ({g.conductor} vs {ctx.conductor})")
        if g.n != n:
            raise ValueError(f"Generator is {g.n}×{g.n}, expected {n}×{n}")
    rho = [ctx.lift(r) for r in rho]
    basis = [Form.monomial(m, ctx) for m in monomials(n, d)]
    for k, (g, r) in enumerate(zip(gens, rho)):
        if not basis:
            break
        images = [substitute_direct(b, g) - b * r for b in basis]
        support = sorted({m for im in images for m in im.terms}, reverse=True)
        rows = [[im.coeff(m) for im in images] for m in support]
        kernel = nullspace(rows, len(basis), ctx)
        basis = [
            _combine(vec, basis, n, d, ctx)
            for vec in kernel
        ]
        if log:
            log(f"eigenspace: generator {k + 1}/{len(gens)}, dimension {len(basis)}")
    return _echelon(basis, n, d, ctx)


def _combine(vec, basis: list[Form], n: int, d: int, ctx) -> Form:
    total = Form.zero(n, d, ctx)
    for c, b in zip(vec, basis):
        if c:
            total = total + b * c
    return total


def _echelon(basis: list[Form], n: int, d: int, ctx) -> list[Form]:
    if not basis:
        return []
    order = monomials(n, d)
    reduced, _ = rref([[b.coeff(m) for m in order] for b in basis])
    return [Form(n, d, ctx, dict(zip(order, row))) for row in reduced]


def forms_rank(forms: Sequence[Form]) -> int:
    """Rank of a list of forms as vectors over their coefficient field."""
    if not forms:
        return 0
    f0 = forms[0]
    order = monomials(f0.n, f0.d)
    return len(rref([[f.coeff(m) for m in order] for f in forms])[1])


def is_prime_power(q: int) -> Optional[int]:
    """The prime p if q = p^a (a ≥ 1), else None."""
    if q < 2:
        return None
    factors = factorint(q)
    return next(iter(factors)) if len(factors) == 1 else None


def projective_order(exps: Sequence[int], q: int) -> int:
    """Order of diag[ε^{e_i}] in PGL, for ε of order q."""
    g = q
    for e in exps[1:]:
        g = gcd(g, (e - exps[0]) % q)
    return q // g


def _canonical(exps: Sequence[int], q: int) -> tuple[int, ...]:
    units = [u for u in range(1, q) if gcd(u, q) == 1]
    return min(
        tuple(sorted((u * (e - s)) % q for e in exps))
        for s in set(exps)
        for u in units
    )


def classify_cyclic(q: int, exps: Sequence[int]) -> CyclicClassLabel:
    """Canonical representative of ⟨diag[ε^{e_1},…,ε^{e_4}]⟩ up to conjugacy in PGL_4.

    The minimum over permutations, global shifts and generator re-choice (units mod q) is taken; the
    result is named after the representative families D_ℓ = diag[1,1,ε,ε^ℓ], B_j = diag[1,ε,ε^j,ε^j]
    and D_{j,ℓ} = diag[1,ε,ε^j,ε^ℓ].
    """
    p = is_prime_power(q)
    if p is None:
        raise ValueError(f"q must be a prime power ≥ 2, got {q}")
    if len(exps) != 4:
        raise ValueError(f"Expected 4 exponents, got {len(exps)}")
    exps = tuple(e % q for e in exps)
    order = projective_order(exps, q)
    if order != q:
        raise ValueError(f"diag{list(exps)} has projective order {order}, not {q}")
    c = _canonical(exps, q)
    # every canonical form starts with 0; a repeated value makes the second entry 0 too
    if c[1] == 0:
        if c[2] == 0:
            return CyclicClassLabel('D0', (0,), q, c)
        l = c[3]
        if l == 1:
            return CyclicClassLabel('D1', (1,), q, c)
        if l % p:
            return CyclicClassLabel('D_ell', (l,), q, c)
        # diag[1,1,ε,ε^m] with p | m is diag[1,ε,ε^j,ε^j] for j = m/(m−1) after a shift and re-choice
        j = (l * pow(l - 1, -1, q)) % q
        return CyclicClassLabel('B_j', (j,), q, (0, 1, j, j))
    return CyclicClassLabel('D_jl', (c[2], c[3]), q, c)


def class_representatives(q: int) -> list[CyclicClassLabel]:
    """One label per conjugacy class of cyclic subgroups of order q generated by a diagonal matrix."""
    seen: dict[tuple, CyclicClassLabel] = {}
    shapes = [(0, 0, 0, 1)]
    shapes += [(0, 0, 1, l) for l in range(q)]
    shapes += [(0, 1, j, l) for j in range(q) for l in range(q)]
    for exps in shapes:
        if projective_order(exps, q) != q:
            continue
        label = classify_cyclic(q, exps)
        seen.setdefault((label.kind, label.params), label)
    return sorted(seen.values(), key=lambda lab: (_KIND_ORDER[lab.kind], lab.params))


_KIND_ORDER = {'D0': 0, 'D1': 1, 'D_ell': 2, 'B_j': 3, 'D_jl': 4}


@dataclass
class ScreenReport:
    q: int
    d: int
    classes: int
    unscreened: list[tuple[CyclicClassLabel, int]]

    def to_json(self) -> dict:
        return {
            'q': self.q,
            'd': self.d,
            'classes': self.classes,
            'unscreened': [{'class': lab.name, 'index': i} for lab, i in self.unscreened],
        }


def invariant_screen_report(q: int, d: int, n: int = 4, log: Log = None) -> ScreenReport:
    """Every (class, eigenvalue index) pair whose monomial eigenspace escapes the column screen."""
    if q < 2:
        raise ValueError(f"q must be ≥ 2, got {q}")
    reps = class_representatives(q)
    unscreened = []
    for label in reps:
        table = index_table(label.exps, q, d)
        for i in range(q):
            support = monomial_eigenspace(table, i)
            if not singularity_screen(support, n, d):
                unscreened.append((label, i))
    if log:
        log(f"screen q={q} d={d}: {len(reps)} classes, {len(unscreened)} unscreened")
    return ScreenReport(q=q, d=d, classes=len(reps), unscreened=unscreened)


def diagonal_conjugate(a: Sequence[int], b: Sequence[int], q: int) -> bool:
    """Whether (diag[ε^a]) and (diag[ε^b]) are conjugate in PGL_n: equal eigenvalue multisets up to a scalar."""
    if len(a) != len(b):
        return False
    target = sorted(e % q for e in b)
    return any(
        sorted((e + s) % q for e in a) == target
        for s in range(q)
    )

