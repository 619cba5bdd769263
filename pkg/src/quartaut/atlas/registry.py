"""Catalogs of named forms and matrices, and the registry of exact checks run by `verify`.

Family modules register entries at import time with the `@form`, `@matrix` and `@check` decorators.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from time import perf_counter
from typing import Callable, Optional, Sequence, Union

from quartaut.cyclofield import ConductorError, CycScalar, FieldContext, QuadScalar, context_new, embed
from quartaut.forms import Form
from quartaut.matrix import SquareMatrix
from quartaut.parse import format_form, format_matrix, format_scalar, parse_scalar
from quartaut.projgroup import ProjMatrix

Log = Optional[Callable[[str], None]]
STATUSES = ('verified', 'failed', 'skipped')


class UnknownCatalogId(ValueError):
    """No form, matrix or check is registered under this key."""


@dataclass(frozen=True)
class CatalogId:
    name: str
    params: tuple = ()

    @classmethod
    def parse(cls, text: str, conductor: int = 1) -> 'CatalogId':
        """`ID` or `ID:p1,p2,...`, each parameter in the scalar grammar over Q(ζ_conductor)."""
        name, _, rest = text.partition(':')
        if not name:
            raise UnknownCatalogId("Empty catalog id")
        params = tuple(parse_scalar(p, conductor) for p in split_args(rest)) if rest else ()
        return cls(name, params)


def split_args(text: str) -> list[str]:
    """Split on commas outside parentheses, so `e(5,1),2` is two arguments."""
    out, depth, start = [], 0, 0
    for k, ch in enumerate(text):
        if ch == '(':
            depth += 1
        elif ch == ')':
            depth -= 1
        elif ch == ',' and depth == 0:
            out.append(text[start:k])
            start = k + 1
    out.append(text[start:])
    return [s.strip() for s in out]


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    build: Callable
    conductor: int
    params: tuple[str, ...] = ()
    doc: str = ''


FORMS: dict[str, CatalogEntry] = {}
MATRICES: dict[str, CatalogEntry] = {}


def _register(table: dict, kind: str, id: str, conductor: int, params: Sequence[str]):
    def wrap(fn):
        if id in table:
            raise ValueError(f"Duplicate {kind} id {id!r}")
        table[id] = CatalogEntry(id, fn, conductor, tuple(params), (fn.__doc__ or '').strip())
        return fn
    return wrap


def form(id: str, conductor: int = 1, params: Sequence[str] = ()):
    """Register `fn(ctx, *params) -> Form` under `id`; `conductor` is the least field holding its coefficients."""
    return _register(FORMS, 'form', id, conductor, params)


def matrix(id: str, conductor: int = 1, params: Sequence[str] = ()):
    return _register(MATRICES, 'matrix', id, conductor, params)


def _build(table: dict, kind: str, id: Union[str, CatalogId], params: Sequence, conductor: Optional[int]):
    if isinstance(id, CatalogId):
        id, params = id.name, id.params or params
    entry = table.get(id)
    if entry is None:
        raise UnknownCatalogId(f"Unknown {kind} id {id!r}")
    if len(params) != len(entry.params):
        want = ', '.join(entry.params) or 'no parameters'
        raise ValueError(f"{kind} {id!r} takes {want}; got {len(params)} parameter(s)")
    N = conductor or lcm(entry.conductor, *(p.conductor for p in params if isinstance(p, CycScalar)))
    if N % entry.conductor:
        raise ConductorError(f"{kind} {id!r} needs a conductor divisible by {entry.conductor}, got {N}")
    ctx = context_new(N)
    lifted = [embed(p, N) if isinstance(p, CycScalar) else ctx.lift(p) for p in params]
    return entry.build(ctx, *lifted)


def form_catalog(id: Union[str, CatalogId], params: Sequence = (), conductor: Optional[int] = None) -> Form:
    return _build(FORMS, 'form', id, params, conductor)


def matrix_catalog(id: Union[str, CatalogId], params: Sequence = (), conductor: Optional[int] = None) -> SquareMatrix:
    return _build(MATRICES, 'matrix', id, params, conductor)


def to_jsonable(value):
    """Render scalars, forms and matrices in their canonical text for report witnesses."""
    if isinstance(value, (bool, str)) or value is None:
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, CycScalar):
        return format_scalar(value)
    if isinstance(value, QuadScalar):
        return {'a': format_scalar(value.a), 'b': format_scalar(value.b)}
    if isinstance(value, Form):
        return format_form(value)
    if isinstance(value, SquareMatrix):
        return format_matrix(value)
    if isinstance(value, ProjMatrix):
        return format_matrix(value.rep)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    raise TypeError(f"Can't render {type(value).__name__} in a report")


class Checker:
    """Collects the sub-assertions, witness values and notes of one check run."""

    def __init__(self, ctx: FieldContext, log: Log = None):
        self.ctx = ctx
        self.log = log
        self.witness: dict = {}
        self.notes: list[str] = []
        self.failures: list[str] = []

    def expect(self, cond: bool, what: str) -> bool:
        if not cond:
            self.failures.append(what)
        if self.log:
            self.log(f"  {'ok' if cond else 'FAILED'}: {what}")
        return cond

    def record(self, key: str, value):
        self.witness[key] = to_jsonable(value)

    def note(self, msg: str):
        self.notes.append(msg)

    def constant(self, key: str, found, printed=None):
        """Record a recomputed constant, and note (without failing) when it differs from the printed one."""
        self.record(key, found)
        if found is None:
            self.failures.append(f"{key}: not proportional")
        elif printed is not None and found != printed:
            self.note(f"{key}: computed {to_jsonable(found)}, printed {to_jsonable(printed)}")


@dataclass
class VerificationReport:
    id: str
    status: str
    witness: dict = field(default_factory=dict)
    ms: int = 0
    notes: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)
    error: Optional[str] = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"Unknown status {self.status!r}")

    @property
    def ok(self) -> bool:
        return self.status != 'failed'

    def to_json(self) -> dict:
        out = {
            'id': self.id,
            'status': self.status,
            'witness': self.witness,
            'ms': self.ms,
        }
        if self.notes:
            out['notes'] = self.notes
        if self.failures:
            out['failures'] = self.failures
        if self.error:
            out['error'] = self.error
        return out


@dataclass(frozen=True)
class CheckEntry:
    id: str
    run: Callable[[Checker], None]
    conductor: int
    aliases: tuple[str, ...] = ()
    slow: bool = False
    doc: str = ''

    def to_json(self) -> dict:
        return {
            'id': self.id,
            'aliases': list(self.aliases),
            'conductor': self.conductor,
            'slow': self.slow,
            'doc': self.doc.splitlines()[0] if self.doc else '',
        }


CHECKS: dict[str, CheckEntry] = {}
ALIASES: dict[str, str] = {}


def check(id: str, conductor: int = 1, aliases: Sequence[str] = (), slow: bool = False):
    """Register `fn(c: Checker)` as the exact check `id`, run over Q(ζ_conductor)."""
    def wrap(fn):
        for key in (id, *aliases):
            if key in CHECKS or key in ALIASES:
                raise ValueError(f"Duplicate check key {key!r}")
        CHECKS[id] = CheckEntry(id, fn, conductor, tuple(aliases), slow, (fn.__doc__ or '').strip())
        for a in aliases:
            ALIASES[a] = id
        return fn
    return wrap


def resolve_check(key: str) -> CheckEntry:
    id = ALIASES.get(key, key)
    if id not in CHECKS:
        raise UnknownCatalogId(f"Unknown check id {key!r}")
    return CHECKS[id]


def theorem_check(key: str, log: Log = None) -> VerificationReport:
    """Run one registered check; exceptions inside it become a failed report."""
    entry = resolve_check(key)
    if log:
        log(f"{entry.id}: running over Q(ζ_{entry.conductor})")
    c = Checker(context_new(entry.conductor), log)
    start = perf_counter()
    error = None
    try:
        entry.run(c)
    except Exception as e:
        error = f"{type(e).__name__}: {e}"
    ms = round((perf_counter() - start) * 1000)
    status = 'failed' if error or c.failures else 'verified'
    if log:
        log(f"{entry.id}: {status} in {ms}ms")
    return VerificationReport(entry.id, status, c.witness, ms, c.notes, c.failures, error)


def run_all(log: Log = None, slow: bool = False) -> list[VerificationReport]:
    """Every registered check, sorted by id; checks marked slow are skipped unless `slow`."""
    reports = []
    for id in sorted(CHECKS):
        entry = CHECKS[id]
        if entry.slow and not slow:
            reports.append(VerificationReport(id, 'skipped'))
            continue
        reports.append(theorem_check(id, log))
    return reports
