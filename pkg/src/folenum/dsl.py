"""A small schubert-style expression language over the engine.

Grammar::

    program := stmt* expr? ;  stmt := IDENT ":=" expr ";"
    expr    := mul (("+"|"-") mul)*
    mul     := unary ("*" unary)*
    unary   := "-" unary | atom
    atom    := NUMBER | IDENT | IDENT "(" [expr ("," expr)*] ")" | "(" expr ")"
    NUMBER  := INT | INT "/" INT

``#`` starts a line comment.  Values are dynamically typed with strict tag
checks: scalars (weight-0 polynomials), classes (ring elements) and
bundles never coerce into each other implicitly; mixing a bundle into a
class expression is a type error, not a guess.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import bundles
from .chow import GradedContext, integrate, p2_context
from .ring import Q, RingElement, RingError

Span = tuple[int, int]  # byte offsets [start, end)


class DslError(Exception):
    def __init__(self, message: str, span: Span):
        super().__init__(message)
        self.message = message
        self.span = span

    def render(self, src: str | None = None) -> str:
        start, end = self.span
        out = f"{self.message} (at {start}..{end})"
        if src is not None:
            line_start = src.rfind("\n", 0, start) + 1
            line_end = src.find("\n", start)
            if line_end < 0:
                line_end = len(src)
            caret = " " * (start - line_start) + "^" * max(1, min(end, line_end) - start)
            out += "\n" + src[line_start:line_end] + "\n" + caret
        return out


class DslSyntaxError(DslError):
    pass


class DslEvalError(DslError):
    pass


# -- tokens ----------------------------------------------------------------

@dataclass(frozen=True)
class Token:
    kind: str       # IDENT NUMBER + - * / ( ) , := ; EOF
    text: str
    start: int
    end: int

    @property
    def span(self) -> Span:
        return (self.start, self.end)


_PUNCT = {"+": "+", "-": "-", "*": "*", "/": "/", "(": "(", ")": ")",
          ",": ",", ";": ";"}


def tokenize(src: str) -> list[Token]:
    """Tokenize; adjacent INT "/" INT fuses into one rational NUMBER."""
    toks: list[Token] = []
    i, n = 0, len(src)
    while i < n:
        ch = src[i]
        if ch in " \t\r\n":
            i += 1
            continue
        if ch == "#":
            while i < n and src[i] != "\n":
                i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            # rational literal INT/INT
            if j < n and src[j] == "/" and j + 1 < n and src[j + 1].isdigit():
                j += 1
                while j < n and src[j].isdigit():
                    j += 1
            toks.append(Token("NUMBER", src[i:j], i, j))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            toks.append(Token("IDENT", src[i:j], i, j))
            i = j
            continue
        if ch == ":" and i + 1 < n and src[i + 1] == "=":
            toks.append(Token(":=", ":=", i, i + 2))
            i += 2
            continue
        if ch in _PUNCT:
            toks.append(Token(_PUNCT[ch], ch, i, i + 1))
            i += 1
            continue
        raise DslSyntaxError(f"illegal character {ch!r}", (i, i + 1))
    toks.append(Token("EOF", "", n, n))
    return toks


# -- AST -------------------------------------------------------------------

@dataclass(frozen=True)
class Expr:
    span: Span = field(compare=False)


@dataclass(frozen=True)
class Number(Expr):
    value: Fraction = Q(0)


@dataclass(frozen=True)
class Ident(Expr):
    name: str = ""


@dataclass(frozen=True)
class Call(Expr):
    name: str = ""
    args: tuple[Expr, ...] = ()


@dataclass(frozen=True)
class BinOp(Expr):
    op: str = "+"
    lhs: Expr | None = None
    rhs: Expr | None = None


@dataclass(frozen=True)
class Neg(Expr):
    arg: Expr | None = None


@dataclass(frozen=True)
class Stmt:
    name: str
    value: Expr
    span: Span


@dataclass(frozen=True)
class Program:
    stmts: tuple[Stmt, ...]
    final: Expr | None


class _Parser:
    def __init__(self, toks: list[Token]):
        self.toks = toks
        self.pos = 0

    def peek(self, ahead: int = 0) -> Token:
        return self.toks[min(self.pos + ahead, len(self.toks) - 1)]

    def next(self) -> Token:
        t = self.toks[self.pos]
        if t.kind != "EOF":
            self.pos += 1
        return t

    def expect(self, kind: str) -> Token:
        t = self.peek()
        if t.kind != kind:
            raise DslSyntaxError(
                f"expected {kind!r}, found {t.kind!r}"
                + (f" ({t.text!r})" if t.text and t.kind != t.text else ""),
                t.span)
        return self.next()

    def expr(self) -> Expr:
        lhs = self.mul()
        while self.peek().kind in ("+", "-"):
            op = self.next()
            rhs = self.mul()
            lhs = BinOp((lhs.span[0], rhs.span[1]), op.kind, lhs, rhs)
        return lhs

    def mul(self) -> Expr:
        lhs = self.unary()
        while self.peek().kind == "*":
            self.next()
            rhs = self.unary()
            lhs = BinOp((lhs.span[0], rhs.span[1]), "*", lhs, rhs)
        return lhs

    def unary(self) -> Expr:
        t = self.peek()
        if t.kind == "-":
            self.next()
            arg = self.unary()
            return Neg((t.start, arg.span[1]), arg)
        return self.atom()

    def atom(self) -> Expr:
        t = self.peek()
        if t.kind == "NUMBER":
            self.next()
            return Number(t.span, Q(t.text))
        if t.kind == "IDENT":
            self.next()
            if self.peek().kind == "(":
                self.next()
                args: list[Expr] = []
                if self.peek().kind != ")":
                    args.append(self.expr())
                    while self.peek().kind == ",":
                        self.next()
                        args.append(self.expr())
                close = self.expect(")")
                return Call((t.start, close.end), t.text, tuple(args))
            return Ident(t.span, t.text)
        if t.kind == "(":
            self.next()
            inner = self.expr()
            self.expect(")")
            return inner
        raise DslSyntaxError(
            f"expected NUMBER, IDENT or '(', found {t.kind!r}", t.span)


def parse_expr(src: str) -> Expr:
    p = _Parser(tokenize(src))
    e = p.expr()
    p.expect("EOF")
    return e


def parse_program(src: str) -> Program:
    p = _Parser(tokenize(src))
    stmts: list[Stmt] = []
    final: Expr | None = None
    while p.peek().kind != "EOF":
        if p.peek().kind == "IDENT" and p.peek(1).kind == ":=":
            name = p.next()
            p.next()  # :=
            value = p.expr()
            semi = p.expect(";")
            stmts.append(Stmt(name.text, value, (name.start, semi.end)))
            continue
        final = p.expr()
        if p.peek().kind == ";":
            # a trailing semicolon turns the expression into a statement-less
            # print; only one final expression is allowed
            p.next()
        break
    p.expect("EOF")
    return Program(tuple(stmts), final)


def unparse(e: Expr) -> str:
    """Canonical printer; parse(unparse(parse(s))) == parse(s)."""
    def prec(node: Expr) -> int:
        if isinstance(node, BinOp):
            return 1 if node.op in ("+", "-") else 2
        if isinstance(node, Neg):
            return 3
        return 4

    def wrap(node: Expr, outer: int) -> str:
        s = unparse(node)
        return f"({s})" if prec(node) < outer else s

    if isinstance(e, Number):
        return str(e.value) if e.value.denominator != 1 else str(e.value.numerator)
    if isinstance(e, Ident):
        return e.name
    if isinstance(e, Call):
        return f"{e.name}({', '.join(unparse(a) for a in e.args)})"
    if isinstance(e, Neg):
        return "-" + wrap(e.arg, 4)
    if isinstance(e, BinOp):
        if e.op == "*":
            return f"{wrap(e.lhs, 2)}*{wrap(e.rhs, 3)}"
        # +/-: left-associative, so the right operand needs strictly
        # higher precedence to avoid re-association
        return f"{wrap(e.lhs, 1)} {e.op} {wrap(e.rhs, 2)}"
    raise TypeError(f"not an expression node: {e!r}")


# -- values and evaluation ---------------------------------------------------

@dataclass(frozen=True)
class Scalar:
    value: RingElement
    tag = "scalar"


@dataclass(frozen=True)
class ClassVal:
    value: RingElement
    tag = "class"


@dataclass(frozen=True)
class BundleVal:
    value: bundles.BundleClass
    tag = "bundle"


Value = Scalar | ClassVal | BundleVal


def value_text(v: Value) -> str:
    if isinstance(v, BundleVal):
        return f"bundle(rank {v.value.rank}, c = {v.value.chern.text()})"
    return v.value.text()


def builtins_env(ctx: GradedContext) -> dict[str, Value]:
    sc = ctx.scalars or ctx
    return {"omega": BundleVal(bundles.cotangent(ctx)),
            "h": ClassVal(ctx.var("h")),
            "d": Scalar(sc.var("d"))}


def _int_arg(v: Value, span: Span, what: str) -> int:
    if not isinstance(v, Scalar) or v.value.variables():
        raise DslEvalError(f"{what} must be a constant integer", span)
    q = v.value.constant()
    if q.denominator != 1:
        raise DslEvalError(f"{what} must be an integer, got {q}", span)
    return int(q)


def _class_arg(v: Value, span: Span, what: str) -> RingElement:
    if isinstance(v, ClassVal):
        return v.value
    if isinstance(v, Scalar):
        return v.value
    raise DslEvalError(f"{what} must be a class, got a bundle", span)


def _bundle_arg(v: Value, span: Span, what: str) -> bundles.BundleClass:
    if not isinstance(v, BundleVal):
        raise DslEvalError(f"{what} must be a bundle, got a {v.tag}", span)
    return v.value


def _eval_call(e: Call, args: list[Value], ctx: GradedContext) -> Value:
    name = e.name
    span = e.span

    def arity(n: int):
        if len(args) != n:
            raise DslEvalError(
                f"{name} expects {n} argument(s), got {len(args)}", span)

    try:
        if name == "o":
            arity(1)
            return BundleVal(bundles.line(ctx.lift(_class_arg(args[0], span, "o(...)"))))
        if name == "dual":
            arity(1)
            return BundleVal(bundles.dual(_bundle_arg(args[0], span, "dual(...)")))
        if name == "Symm":
            arity(2)
            n = _int_arg(args[0], span, "Symm order")
            return BundleVal(bundles.sym(n, _bundle_arg(args[1], span, "Symm(...)")))
        if name == "wedge2":
            arity(1)
            return BundleVal(bundles.wedge2(_bundle_arg(args[0], span, "wedge2(...)")))
        if name == "jet":
            arity(2)
            n = _int_arg(args[0], span, "jet order")
            return BundleVal(bundles.jet(n, _bundle_arg(args[1], span, "jet(...)"), ctx))
        if name in ("chern", "segre"):
            arity(2)
            i = _int_arg(args[0], span, f"{name} index")
            B = _bundle_arg(args[1], span, f"{name}(...)")
            total = B.chern if name == "chern" else bundles.segre(B)
            return ClassVal(total.weight_part(i))
        if name == "ctotal":
            arity(1)
            return ClassVal(_bundle_arg(args[0], span, "ctotal(...)").chern)
        if name == "stotal":
            arity(1)
            return ClassVal(bundles.segre(_bundle_arg(args[0], span, "stotal(...)")))
        if name == "rank":
            arity(1)
            sc = ctx.scalars or ctx
            return Scalar(sc.scalar(_bundle_arg(args[0], span, "rank(...)").rank))
        if name == "integral":
            arity(1)
            if not isinstance(args[0], ClassVal):
                raise DslEvalError(
                    f"integral(...) takes a class, got a {args[0].tag}", span)
            return Scalar(integrate(args[0].value, ctx))
    except DslError:
        raise
    except RingError as exc:
        raise DslEvalError(str(exc), span) from exc
    raise DslEvalError(f"unknown function {name!r}", span)


def _binop(op: str, a: Value, b: Value, span: Span, ctx: GradedContext) -> Value:
    if isinstance(a, BundleVal) or isinstance(b, BundleVal):
        if not (isinstance(a, BundleVal) and isinstance(b, BundleVal)):
            raise DslEvalError(
                f"cannot apply {op!r} to a {a.tag} and a {b.tag}", span)
        try:
            if op == "*":
                return BundleVal(bundles.tensor(a.value, b.value))
            if op == "+":
                return BundleVal(bundles.whitney(a.value, b.value))
        except RingError as exc:
            raise DslEvalError(str(exc), span) from exc
        raise DslEvalError(f"operator {op!r} is not defined on bundles", span)
    x, y = a.value, b.value
    try:
        out = x + y if op == "+" else x - y if op == "-" else x * y
    except RingError as exc:
        raise DslEvalError(str(exc), span) from exc
    if isinstance(a, ClassVal) or isinstance(b, ClassVal):
        return ClassVal(out)
    return Scalar(out)


def eval_expr(e: Expr, env: dict[str, Value],
              ctx: GradedContext | None = None) -> Value:
    """Evaluate an AST against name bindings and a Chow context."""
    ctx = ctx or p2_context()
    sc = ctx.scalars or ctx
    if isinstance(e, Number):
        return Scalar(sc.scalar(e.value))
    if isinstance(e, Ident):
        if e.name in env:
            return env[e.name]
        raise DslEvalError(f"unbound identifier {e.name!r}", e.span)
    if isinstance(e, Neg):
        v = eval_expr(e.arg, env, ctx)
        if isinstance(v, BundleVal):
            raise DslEvalError("cannot negate a bundle", e.span)
        return type(v)(-v.value)
    if isinstance(e, BinOp):
        a = eval_expr(e.lhs, env, ctx)
        b = eval_expr(e.rhs, env, ctx)
        return _binop(e.op, a, b, e.span, ctx)
    if isinstance(e, Call):
        args = [eval_expr(a, env, ctx) for a in e.args]
        return _eval_call(e, args, ctx)
    raise TypeError(f"not an expression node: {e!r}")


def run_program(prog: Program, ctx: GradedContext | None = None,
                env: dict[str, Value] | None = None
                ) -> tuple[dict[str, Value], Value | None]:
    """Execute statements, returning the bindings and the final value."""
    ctx = ctx or p2_context()
    env = dict(builtins_env(ctx) if env is None else env)
    for stmt in prog.stmts:
        env[stmt.name] = eval_expr(stmt.value, env, ctx)
    final = eval_expr(prog.final, env, ctx) if prog.final is not None else None
    return env, final
