"""Text syntax for scalars, forms and matrices, and the canonical printers that round-trip through it.

Grammar (no implicit multiplication)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' INT)?
    atom   := INT | NAME | NAME '(' args ')' | '(' expr ')'

Names are the variables x y z t, the constants i w sqrt2 sqrt3 sqrt5 sqrtm7, and `e(N,k)` for ζ_N^k.
"""

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from quartaut.cyclofield import ConductorError, CycScalar, FieldContext, context_new, embed, known_constant, zeta_power
from quartaut.forms import VARIABLES, Form, Monomial
from quartaut.matrix import SquareMatrix

CONSTANTS = {
    'i': 'i',
    'w': 'omega',
    'sqrt2': 'sqrt2',
    'sqrt3': 'sqrt3',
    'sqrt5': 'sqrt5',
    'sqrtm7': 'sqrt_m7',
}
TOKEN_RE = re.compile(r'(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))')
SUPERSCRIPTS = str.maketrans('0123456789', '⁰¹²³⁴⁵⁶⁷⁸⁹')


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


@dataclass
class Token:
    kind: str  # 'int' | 'name' | 'op' | 'end'
    text: str
    pos: int


@dataclass
class Node:
    kind: str  # 'num' | 'symbol' | 'add' | 'mul' | 'pow' | 'neg' | 'call'
    value: Union[int, str, None] = None
    children: list['Node'] = field(default_factory=list)
    pos: int = 0


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = TOKEN_RE.match(text, pos)
        start = m.start(m.lastindex)
        num, name, op = m.groups()
        if num is not None:
            tokens.append(Token('int', num, start))
        elif name is not None:
            tokens.append(Token('name', name, start))
        else:
            if op not in '+-*/^(),':
                raise ParseError(f"Unexpected character {op!r}", start)
            tokens.append(Token('op', op, start))
        pos = m.end()
    tokens.append(Token('end', '', len(text)))
    return tokens


class Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, op: str) -> Token:
        if self.tok.kind != 'op' or self.tok.text != op:
            raise ParseError(f"Expected {op!r}, found {self.tok.text or 'end of input'!r}", self.tok.pos)
        return self.advance()

    def at(self, *ops: str) -> bool:
        return self.tok.kind == 'op' and self.tok.text in ops

    def parse(self) -> Node:
        if self.tok.kind == 'end':
            raise ParseError("Empty expression", 0)
        node = self.expr()
        if self.tok.kind != 'end':
            raise ParseError(f"Unexpected {self.tok.text!r}", self.tok.pos)
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.at('+', '-'):
            op = self.advance()
            rhs = self.term()
            if op.text == '-':
                rhs = Node('neg', children=[rhs], pos=op.pos)
            node = Node('add', children=[node, rhs], pos=op.pos)
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.at('*', '/'):
            op = self.advance()
            rhs = self.unary()
            if op.text == '/':
                rhs = Node('call', 'recip', [rhs], pos=op.pos)
            node = Node('mul', children=[node, rhs], pos=op.pos)
        return node

    def unary(self) -> Node:
        if self.at('-'):
            op = self.advance()
            return Node('neg', children=[self.unary()], pos=op.pos)
        return self.power()

    def power(self) -> Node:
        base = self.atom()
        if self.at('^'):
            op = self.advance()
            if self.tok.kind != 'int':
                raise ParseError("Exponent must be a non-negative integer literal", self.tok.pos)
            exp = self.advance()
            return Node('pow', int(exp.text), [base], pos=op.pos)
        return base

    def atom(self) -> Node:
        tok = self.tok
        if tok.kind == 'int':
            self.advance()
            return Node('num', int(tok.text), pos=tok.pos)
        if tok.kind == 'name':
            self.advance()
            if self.at('('):
                self.advance()
                args = [self.expr()]
                while self.at(','):
                    self.advance()
                    args.append(self.expr())
                self.expect(')')
                return Node('call', tok.text, args, pos=tok.pos)
            return Node('symbol', tok.text, pos=tok.pos)
        if self.at('('):
            self.advance()
            node = self.expr()
            self.expect(')')
            return node
        raise ParseError(f"Unexpected {tok.text or 'end of input'!r}", tok.pos)


def parse_tree(text: str) -> Node:
    return Parser(text).parse()


Poly = dict[Monomial, CycScalar]
Names = dict[str, Union[CycScalar, int, Fraction]]


class _Evaluator:
    """Evaluate a parse tree into a (possibly inhomogeneous) polynomial over Q(ζ_N)."""

    def __init__(self, ctx: FieldContext, variables: tuple[str, ...], names: Optional[Names] = None):
        self.ctx = ctx
        self.variables = variables
        self.names = names or {}
        self.n = len(variables)
        self.const = (0,) * self.n

    def constant(self, c) -> Poly:
        c = self.ctx.lift(c)
        return {self.const: c} if c else {}

    def __call__(self, node: Node) -> Poly:
        return getattr(self, f"eval_{node.kind}")(node)

    def eval_num(self, node: Node) -> Poly:
        return self.constant(node.value)

    def eval_symbol(self, node: Node) -> Poly:
        name = node.value
        if name in self.variables:
            k = self.variables.index(name)
            return {tuple(1 if i == k else 0 for i in range(self.n)): self.ctx.one}
        if name in self.names:
            value = self.names[name]
            if isinstance(value, CycScalar):
                value = embed(value, self.ctx.conductor)
            return self.constant(value)
        if name in CONSTANTS:
            return self.constant(known_constant(CONSTANTS[name], self.ctx))
        raise ParseError(f"Unknown name {name!r}", node.pos)

    def eval_add(self, node: Node) -> Poly:
        out = dict(self(node.children[0]))
        for m, c in self(node.children[1]).items():
            s = out[m] + c if m in out else c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return out

    def eval_neg(self, node: Node) -> Poly:
        return {m: -c for m, c in self(node.children[0]).items()}

    def eval_mul(self, node: Node) -> Poly:
        return _poly_mul(self(node.children[0]), self(node.children[1]))

    def eval_pow(self, node: Node) -> Poly:
        base = self(node.children[0])
        out = {self.const: self.ctx.one}
        for _ in range(node.value):
            out = _poly_mul(out, base)
        return out

    def eval_call(self, node: Node) -> Poly:
        if node.value == 'recip':
            den = self(node.children[0])
            if not den:
                raise ParseError("Division by zero", node.pos)
            if set(den) != {self.const}:
                raise ParseError("Division by a non-constant", node.pos)
            return self.constant(den[self.const].inverse())
        if node.value == 'e':
            if len(node.children) != 2:
                raise ParseError("e(N,k) takes two integer arguments", node.pos)
            N, k = (_int_literal(a) for a in node.children)
            if N < 1:
                raise ParseError("e(N,k) needs N ≥ 1", node.pos)
            if self.ctx.conductor % N:
                raise ConductorError(f"e({N},{k}) needs a conductor divisible by {N}, got {self.ctx.conductor}")
            return self.constant(zeta_power(self.ctx, k * (self.ctx.conductor // N)))
        raise ParseError(f"Unknown function {node.value!r}", node.pos)


def _int_literal(node: Node) -> int:
    if node.kind == 'num':
        return node.value
    if node.kind == 'neg' and node.children[0].kind == 'num':
        return -node.children[0].value
    raise ParseError("Expected an integer literal", node.pos)


def _poly_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = tuple(x + y for x, y in zip(m1, m2))
            c = c1 * c2
            out[m] = out[m] + c if m in out else c
    return {m: c for m, c in out.items() if c}


def parse_scalar(text: str, conductor: int, names: Optional[Names] = None) -> CycScalar:
    """`names` binds extra symbols (e.g. `eps`) to scalars of a dividing conductor."""
    ctx = context_new(conductor)
    poly = _Evaluator(ctx, (), names)(parse_tree(text))
    if set(poly) - {()}:
        raise ParseError("Scalar expression contains a variable", 0)
    return poly.get((), ctx.zero)


def parse_form(text: str, n: int = 4, conductor: int = 1, names: Optional[Names] = None) -> Form:
    if n not in VARIABLES:
        raise ValueError(f"Forms have 3 or 4 variables, got {n}")
    ctx = context_new(conductor)
    poly = _Evaluator(ctx, VARIABLES[n], names)(parse_tree(text))
    degrees = sorted({sum(m) for m in poly})
    if len(degrees) > 1:
        raise ParseError(f"Polynomial is not homogeneous (degrees {degrees})", 0)
    return Form.from_terms(poly, n, ctx)


def parse_matrix(
    obj: Union[str, dict, list],
    conductor: Optional[int] = None,
    names: Optional[Names] = None,
) -> SquareMatrix:
    """Read `{"n":4, "conductor":N, "entries":[[scalar-text,...],...]}` (a dict, its JSON text, or the bare entry rows)."""
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as e:
            raise ParseError(f"Invalid matrix JSON: {e.msg}", e.pos) from e
    if isinstance(obj, list):
        obj = {'entries': obj}
    if not isinstance(obj, dict) or 'entries' not in obj:
        raise ValueError("Matrix JSON needs an \"entries\" list")
    N = obj.get('conductor', conductor or 1)
    rows = obj['entries']
    n = obj.get('n', len(rows))
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"Matrix entries are not {n}×{n}")
    return SquareMatrix.of([[parse_scalar(str(e), N, names) for e in row] for row in rows], context_new(N))


def _rational_text(r) -> str:
    r = Fraction(r)
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def _join(terms: list[str]) -> str:
    if not terms:
        return '0'
    out = terms[0]
    for t in terms[1:]:
        out += f" - {t[1:]}" if t.startswith('-') else f" + {t}"
    return out


def format_scalar(c: CycScalar) -> str:
    """Canonical text over the power basis, e.g. `2 + 3*e(5,1) - 1/2*e(5,3)`."""
    N = c.conductor
    terms = []
    for k, r in enumerate(c.coeffs):
        if not r:
            continue
        if k == 0:
            terms.append(_rational_text(r))
            continue
        z = f"e({N},{k})"
        if r == 1:
            terms.append(z)
        elif r == -1:
            terms.append(f"-{z}")
        else:
            terms.append(f"{_rational_text(r)}*{z}")
    return _join(terms)


def _monomial_text(m: Monomial, n: int, plain: bool) -> str:
    names = VARIABLES[n]
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(name + str(e).translate(SUPERSCRIPTS) if plain else f"{name}^{e}")
    return ('' if plain else '*').join(parts)


def format_form(f: Form, plain: bool = False) -> str:
    """Canonical text, terms in descending lexicographic monomial order."""
    terms = []
    for m, c in f.items():
        mono = _monomial_text(m, f.n, plain)
        if not mono:
            terms.append(format_scalar(c))
            continue
        sep = ' ' if plain else '*'
        if c == 1:
            terms.append(mono)
        elif c == -1:
            terms.append(f"-{mono}")
        elif c.is_rational():
            terms.append(f"{_rational_text(c.coeffs[0])}{sep}{mono}")
        else:
            terms.append(f"({format_scalar(c)}){sep}{mono}")
    return _join(terms)


def format_matrix(M: SquareMatrix) -> dict:
    return {
        'n': M.n,
        'conductor': M.conductor,
        'entries': [[format_scalar(a) for a in row] for row in M.rows],
    }
