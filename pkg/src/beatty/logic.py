"""First-order language over (Z, +, -, <, f, p_n, window predicates, 0, 1)
with f(x) = floor(phi * x): parser, printer, exact evaluation over the
integers, a normal-form decider for single-quantifier sentences, bounded
model checking for everything else, and an audit of the defining axioms.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd

from .congruence import (
    DEFAULT_ENUM_CAP,
    Congruence,
    CongruenceSystem,
    crt_combine,
    solve_system_bounded,
)
from .golden import f_floor
from .windows import (
    LinearConstraint,
    WindowSet,
    axiom_v_check,
    least_adequate_index,
    solution_window,
)

__all__ = [
    "Var", "Const", "Add", "Sub", "Scale", "F",
    "Cmp", "Div", "PPred", "Not", "And", "Or", "Implies", "Exists", "Forall",
    "ParseError", "parse", "parse_term", "format_formula", "format_term",
    "Decision", "EXACT", "BOUNDED", "DEFAULT_EVAL_BOUND",
    "evaluate", "free_vars", "nnf",
    "NormalFormQuery", "to_normal_form", "decide_existential_nf", "decide",
    "FamilyResult", "AuditReport", "axiom_audit",
]

EXACT = "exact"
BOUNDED = "bounded"
DEFAULT_EVAL_BOUND = 10_000


# --- terms -----------------------------------------------------------------

@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    value: int


@dataclass(frozen=True)
class Add:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Sub:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Scale:
    coeff: int
    term: "Term"


@dataclass(frozen=True)
class F:
    arg: "Term"


Term = Var | Const | Add | Sub | Scale | F


# --- formulas ---------------------------------------------------------------

@dataclass(frozen=True)
class Cmp:
    left: Term
    rel: str  # "<" or "="
    right: Term

    def __post_init__(self) -> None:
        if self.rel not in ("<", "="):
            raise ValueError(f"primitive relations are < and =, got {self.rel!r}")


@dataclass(frozen=True)
class Div:
    modulus: int
    term: Term

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError(f"divisibility modulus must be >= 1, got {self.modulus}")


@dataclass(frozen=True)
class PPred:
    """Solvability predicate: exists x with x = res_x (mod mod_x),
    f(x) = res_fx (mod mod_fx) and low < x < high."""

    mod_x: int
    mod_fx: int
    res_x: int
    res_fx: int
    low: Term
    high: Term

    def __post_init__(self) -> None:
        if self.mod_x < 1 or self.mod_fx < 1:
            raise ValueError("window predicate moduli must be >= 1")
        object.__setattr__(self, "res_x", self.res_x % self.mod_x)
        object.__setattr__(self, "res_fx", self.res_fx % self.mod_fx)


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"


Formula = Cmp | Div | PPred | Not | And | Or | Implies | Exists | Forall

_ATOMS = (Cmp, Div, PPred)
_RESERVED = {"f", "P", "exists", "forall"}
_P_DIGITS = re.compile(r"^p\d+$")


def free_vars(node: Formula | Term) -> set[str]:
    if isinstance(node, Var):
        return {node.name}
    if isinstance(node, Const):
        return set()
    if isinstance(node, (Add, Sub)):
        return free_vars(node.left) | free_vars(node.right)
    if isinstance(node, Scale):
        return free_vars(node.term)
    if isinstance(node, F):
        return free_vars(node.arg)
    if isinstance(node, Cmp):
        return free_vars(node.left) | free_vars(node.right)
    if isinstance(node, Div):
        return free_vars(node.term)
    if isinstance(node, PPred):
        return free_vars(node.low) | free_vars(node.high)
    if isinstance(node, Not):
        return free_vars(node.body)
    if isinstance(node, (And, Or, Implies)):
        return free_vars(node.left) | free_vars(node.right)
    if isinstance(node, (Exists, Forall)):
        return free_vars(node.body) - {node.var}
    raise TypeError(f"not a formula or term: {node!r}")


# --- parser -----------------------------------------------------------------

class ParseError(Exception):
    def __init__(self, message: str, position: int, expected: tuple[str, ...] = ()):
        detail = f"{message} at offset {position}"
        if expected:
            detail += " (expected " + " or ".join(expected) + ")"
        super().__init__(detail)
        self.position = position
        self.expected = expected


_TOKEN = re.compile(r"->|<=|>=|!=|[()\[\],.+\-*<>=!&|]|\d+|[A-Za-z_][A-Za-z0-9_]*")
_RELS = ("<", "<=", "=", "!=", ">", ">=")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos].isspace():
                pos += 1
                continue
            m = _TOKEN.match(text, pos)
            if not m:
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            self.tokens.append((m.group(), pos))
            pos = m.end()
        self.i = 0

    def _peek(self, ahead: int = 0) -> str | None:
        k = self.i + ahead
        return self.tokens[k][0] if k < len(self.tokens) else None

    def _pos(self) -> int:
        return self.tokens[self.i][1] if self.i < len(self.tokens) else len(self.text)

    def _advance(self) -> str:
        tok = self._peek()
        if tok is None:
            raise ParseError("unexpected end of input", self._pos())
        self.i += 1
        return tok

    def _expect(self, token: str) -> None:
        got = self._peek()
        if got != token:
            raise ParseError(
                f"unexpected {'end of input' if got is None else got!r}",
                self._pos(), (repr(token),),
            )
        self.i += 1

    # formulas; precedence ! > & > | > ->, quantifiers extend maximally right
    def parse_formula(self) -> Formula:
        left = self.parse_or()
        if self._peek() == "->":
            self._advance()
            return Implies(left, self.parse_formula())
        return left

    def parse_or(self) -> Formula:
        node = self.parse_and()
        while self._peek() == "|":
            self._advance()
            node = Or(node, self.parse_and())
        return node

    def parse_and(self) -> Formula:
        node = self.parse_unary()
        while self._peek() == "&":
            self._advance()
            node = And(node, self.parse_unary())
        return node

    def parse_unary(self) -> Formula:
        tok = self._peek()
        if tok == "!":
            self._advance()
            return Not(self.parse_unary())
        if tok in ("exists", "forall"):
            self._advance()
            name = self._variable_name()
            self._expect(".")
            body = self.parse_formula()
            return Exists(name, body) if tok == "exists" else Forall(name, body)
        return self.parse_atom()

    def _variable_name(self) -> str:
        pos = self._pos()
        tok = self._advance()
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", tok):
            raise ParseError(f"invalid variable name {tok!r}", pos)
        if tok in _RESERVED or _P_DIGITS.match(tok):
            raise ParseError(f"{tok!r} is reserved", pos)
        return tok

    def parse_atom(self) -> Formula:
        tok = self._peek()
        if tok is None:
            raise ParseError("unexpected end of input", self._pos())
        if _P_DIGITS.match(tok) and self._peek(1) == "(":
            modulus = int(tok[1:])
            pos = self._pos()
            if modulus < 1:
                raise ParseError("divisibility modulus must be >= 1", pos)
            self._advance()
            self._expect("(")
            term = self.parse_term()
            self._expect(")")
            return Div(modulus, term)
        if tok == "P":
            pos = self._pos()
            self._advance()
            self._expect("[")
            nums = [self._int()]
            for _ in range(3):
                self._expect(",")
                nums.append(self._int())
            self._expect("]")
            self._expect("(")
            low = self.parse_term()
            self._expect(",")
            high = self.parse_term()
            self._expect(")")
            if nums[0] < 1 or nums[1] < 1:
                raise ParseError("window predicate moduli must be >= 1", pos)
            return PPred(nums[0], nums[1], nums[2], nums[3], low, high)
        # Either `term REL term` or a parenthesized formula; a '(' is
        # ambiguous between the two, so try the comparison and backtrack.
        saved = self.i
        try:
            left = self.parse_term()
            rel_pos = self._pos()
            rel = self._peek()
            if rel not in _RELS:
                raise ParseError(
                    f"unexpected {'end of input' if rel is None else rel!r}",
                    rel_pos, _RELS,
                )
            self._advance()
            right = self.parse_term()
            return _desugar(left, rel, right)
        except ParseError:
            if self.tokens[saved][0] != "(":
                raise
            self.i = saved
        self._expect("(")
        inner = self.parse_formula()
        self._expect(")")
        return inner

    def _int(self) -> int:
        pos = self._pos()
        tok = self._advance()
        negative = False
        if tok == "-":
            negative = True
            tok = self._advance()
        if not tok.isdigit():
            raise ParseError(f"expected integer, got {tok!r}", pos)
        return -int(tok) if negative else int(tok)

    # terms; '*' binds tighter than '+'/'-', sums associate left
    def parse_term(self) -> Term:
        node = self.parse_product()
        while self._peek() in ("+", "-"):
            op = self._advance()
            right = self.parse_product()
            node = Add(node, right) if op == "+" else Sub(node, right)
        return node

    def parse_product(self) -> Term:
        tok = self._peek()
        if tok is not None and tok.isdigit() and self._peek(1) == "*":
            self._advance()
            self._advance()
            return Scale(int(tok), self.parse_product())
        if tok == "-" and (nxt := self._peek(1)) is not None and nxt.isdigit():
            if self._peek(2) == "*":
                self._advance()
                self._advance()
                self._advance()
                return Scale(-int(nxt), self.parse_product())
        return self.parse_primary()

    def parse_primary(self) -> Term:
        pos = self._pos()
        tok = self._peek()
        if tok is None:
            raise ParseError("unexpected end of input", pos)
        if tok == "(":
            self._advance()
            inner = self.parse_term()
            self._expect(")")
            return inner
        if tok == "f":
            self._advance()
            self._expect("(")
            arg = self.parse_term()
            self._expect(")")
            return F(arg)
        if tok.isdigit():
            self._advance()
            return Const(int(tok))
        if tok == "-" and (nxt := self._peek(1)) is not None and nxt.isdigit():
            self._advance()
            self._advance()
            return Const(-int(nxt))
        if re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", tok):
            if tok in _RESERVED or _P_DIGITS.match(tok):
                raise ParseError(f"{tok!r} is reserved", pos)
            self._advance()
            return Var(tok)
        raise ParseError(f"unexpected {tok!r}", pos, ("a term",))


def _desugar(left: Term, rel: str, right: Term) -> Formula:
    if rel == "<":
        return Cmp(left, "<", right)
    if rel == "=":
        return Cmp(left, "=", right)
    if rel == ">":
        return Cmp(right, "<", left)
    if rel == "<=":
        return Not(Cmp(right, "<", left))
    if rel == ">=":
        return Not(Cmp(left, "<", right))
    return Not(Cmp(left, "=", right))  # !=


def parse(text: str) -> Formula:
    """Parse a formula; raises ParseError with a position on bad input."""
    p = _Parser(text)
    node = p.parse_formula()
    if p.i < len(p.tokens):
        raise ParseError(f"unexpected trailing {p.tokens[p.i][0]!r}", p.tokens[p.i][1])
    return node


def parse_term(text: str) -> Term:
    p = _Parser(text)
    node = p.parse_term()
    if p.i < len(p.tokens):
        raise ParseError(f"unexpected trailing {p.tokens[p.i][0]!r}", p.tokens[p.i][1])
    return node


# --- printer ----------------------------------------------------------------

def format_term(term: Term, _prec: int = 0) -> str:
    if isinstance(term, Var):
        return term.name
    if isinstance(term, Const):
        return str(term.value)
    if isinstance(term, F):
        return f"f({format_term(term.arg)})"
    if isinstance(term, Scale):
        body = f"{term.coeff} * {format_term(term.term, 1)}"
        return body
    op = "+" if isinstance(term, Add) else "-"
    body = f"{format_term(term.left)} {op} {format_term(term.right, 1)}"
    return f"({body})" if _prec >= 1 else body


def format_formula(formula: Formula) -> str:
    if isinstance(formula, Cmp):
        return f"{format_term(formula.left)} {formula.rel} {format_term(formula.right)}"
    if isinstance(formula, Div):
        return f"p{formula.modulus}({format_term(formula.term)})"
    if isinstance(formula, PPred):
        head = f"P[{formula.mod_x},{formula.mod_fx},{formula.res_x},{formula.res_fx}]"
        return f"{head}({format_term(formula.low)}, {format_term(formula.high)})"
    if isinstance(formula, Not):
        return f"!({format_formula(formula.body)})"
    if isinstance(formula, (And, Or, Implies)):
        op = "&" if isinstance(formula, And) else ("|" if isinstance(formula, Or) else "->")
        return f"{_operand(formula.left)} {op} {_operand(formula.right)}"
    if isinstance(formula, Exists):
        return f"exists {formula.var}. {format_formula(formula.body)}"
    if isinstance(formula, Forall):
        return f"forall {formula.var}. {format_formula(formula.body)}"
    raise TypeError(f"not a formula: {formula!r}")


def _operand(sub: Formula) -> str:
    text = format_formula(sub)
    if isinstance(sub, _ATOMS) or isinstance(sub, Not):
        return text
    return f"({text})"


# --- evaluation -------------------------------------------------------------

@dataclass(frozen=True)
class Decision:
    """Outcome of evaluation or decision.

    truth None means unknown (a solver cap was hit).  provenance "exact"
    marks a sound answer over the integers; "bounded" marks truth over the
    model with every quantifier relativized to [-bound, bound].
    """

    truth: bool | None
    provenance: str = EXACT
    bound: int | None = None
    witness: int | None = None
    counterexample: int | None = None
    reason: str | None = None


def eval_term(term: Term, env: dict[str, int]) -> int:
    if isinstance(term, Var):
        if term.name not in env:
            raise ValueError(f"unassigned variable {term.name!r}")
        return env[term.name]
    if isinstance(term, Const):
        return term.value
    if isinstance(term, Add):
        return eval_term(term.left, env) + eval_term(term.right, env)
    if isinstance(term, Sub):
        return eval_term(term.left, env) - eval_term(term.right, env)
    if isinstance(term, Scale):
        return term.coeff * eval_term(term.term, env)
    if isinstance(term, F):
        return f_floor(eval_term(term.arg, env))
    raise TypeError(f"not a term: {term!r}")


def _negate(d: Decision) -> Decision:
    truth = None if d.truth is None else not d.truth
    return Decision(truth, d.provenance, d.bound,
                    witness=d.counterexample, counterexample=d.witness,
                    reason=d.reason)


def _merge_bound(a: Decision, b: Decision) -> int | None:
    return a.bound if a.bound is not None else b.bound


def _and_d(a: Decision, b: Decision) -> Decision:
    for d in (a, b):
        if d.truth is False and d.provenance == EXACT:
            return d
    if a.truth is False or b.truth is False:
        return a if a.truth is False else b
    if a.truth is None or b.truth is None:
        return a if a.truth is None else b
    prov = EXACT if a.provenance == EXACT and b.provenance == EXACT else BOUNDED
    return Decision(True, prov, _merge_bound(a, b) if prov == BOUNDED else None,
                    witness=a.witness if a.witness is not None else b.witness)


def _or_d(a: Decision, b: Decision) -> Decision:
    for d in (a, b):
        if d.truth is True and d.provenance == EXACT:
            return d
    if a.truth is True or b.truth is True:
        return a if a.truth is True else b
    if a.truth is None or b.truth is None:
        return a if a.truth is None else b
    prov = EXACT if a.provenance == EXACT and b.provenance == EXACT else BOUNDED
    return Decision(False, prov, _merge_bound(a, b) if prov == BOUNDED else None)


def _scan_order(bound: int):
    yield 0
    for v in range(1, bound + 1):
        yield v
        yield -v


_MISSING = object()


def _eval(formula: Formula, env: dict[str, int], bound: int, cap: int) -> Decision:
    if isinstance(formula, Cmp):
        lv = eval_term(formula.left, env)
        rv = eval_term(formula.right, env)
        return Decision(lv < rv if formula.rel == "<" else lv == rv)
    if isinstance(formula, Div):
        return Decision(eval_term(formula.term, env) % formula.modulus == 0)
    if isinstance(formula, PPred):
        low = eval_term(formula.low, env)
        high = eval_term(formula.high, env)
        if low >= high:
            return Decision(False)
        system = CongruenceSystem(
            Congruence(formula.mod_x, formula.res_x),
            Congruence(formula.mod_fx, formula.res_fx),
            lower=low, upper=high,
        )
        out = solve_system_bounded(system, enum_cap=cap)
        if out.is_witness:
            return Decision(True, witness=out.witness)
        if out.status == "no_solution":
            return Decision(False)
        return Decision(None, reason=out.reason)
    if isinstance(formula, Not):
        return _negate(_eval(formula.body, env, bound, cap))
    if isinstance(formula, And):
        return _and_d(_eval(formula.left, env, bound, cap),
                      _eval(formula.right, env, bound, cap))
    if isinstance(formula, Or):
        return _or_d(_eval(formula.left, env, bound, cap),
                     _eval(formula.right, env, bound, cap))
    if isinstance(formula, Implies):
        return _or_d(_negate(_eval(formula.left, env, bound, cap)),
                     _eval(formula.right, env, bound, cap))
    if isinstance(formula, (Exists, Forall)):
        existential = isinstance(formula, Exists)
        saved = env.get(formula.var, _MISSING)
        unknown_reason = None
        decisive: Decision | None = None
        for v in _scan_order(bound):
            env[formula.var] = v
            d = _eval(formula.body, env, bound, cap)
            if existential and d.truth is True:
                decisive = Decision(True, d.provenance,
                                    d.bound if d.provenance == BOUNDED else None,
                                    witness=v)
                break
            if not existential and d.truth is False:
                decisive = Decision(False, d.provenance,
                                    d.bound if d.provenance == BOUNDED else None,
                                    counterexample=v)
                break
            if d.truth is None and unknown_reason is None:
                unknown_reason = d.reason or "subformula unknown"
        if saved is _MISSING:
            del env[formula.var]
        else:
            env[formula.var] = saved
        if decisive is not None:
            return decisive
        if unknown_reason is not None:
            return Decision(None, reason=unknown_reason)
        # scan exhausted without a witness (resp. counterexample)
        return Decision(not existential, BOUNDED, bound=bound)
    raise TypeError(f"not a formula: {formula!r}")


def evaluate(
    formula: Formula,
    assignment: dict[str, int] | None = None,
    bound: int = DEFAULT_EVAL_BOUND,
    *,
    enum_cap: int = DEFAULT_ENUM_CAP,
) -> Decision:
    """Evaluate over the integers with f(x) = 0 for x <= 0.

    Quantifier-free parts are exact; quantifiers scan [-bound, bound], so an
    existential witness (or universal counterexample) is sound, while a
    completed scan yields a decision tagged "bounded"."""
    env = dict(assignment or {})
    missing = free_vars(formula) - set(env)
    if missing:
        raise ValueError(f"unassigned variables: {sorted(missing)}")
    return _eval(formula, env, bound, enum_cap)


# --- negation normal form ---------------------------------------------------

def nnf(formula: Formula) -> Formula:
    if isinstance(formula, _ATOMS):
        return formula
    if isinstance(formula, Not):
        body = formula.body
        if isinstance(body, _ATOMS):
            return formula
        if isinstance(body, Not):
            return nnf(body.body)
        if isinstance(body, And):
            return Or(nnf(Not(body.left)), nnf(Not(body.right)))
        if isinstance(body, Or):
            return And(nnf(Not(body.left)), nnf(Not(body.right)))
        if isinstance(body, Implies):
            return And(nnf(body.left), nnf(Not(body.right)))
        if isinstance(body, Exists):
            return Forall(body.var, nnf(Not(body.body)))
        if isinstance(body, Forall):
            return Exists(body.var, nnf(Not(body.body)))
    if isinstance(formula, And):
        return And(nnf(formula.left), nnf(formula.right))
    if isinstance(formula, Or):
        return Or(nnf(formula.left), nnf(formula.right))
    if isinstance(formula, Implies):
        return Or(nnf(Not(formula.left)), nnf(formula.right))
    if isinstance(formula, Exists):
        return Exists(formula.var, nnf(formula.body))
    if isinstance(formula, Forall):
        return Forall(formula.var, nnf(formula.body))
    raise TypeError(f"not a formula: {formula!r}")


def _quantifier_free(formula: Formula) -> bool:
    if isinstance(formula, _ATOMS):
        return True
    if isinstance(formula, Not):
        return _quantifier_free(formula.body)
    if isinstance(formula, (And, Or, Implies)):
        return _quantifier_free(formula.left) and _quantifier_free(formula.right)
    return False


# --- normal-form recognition ------------------------------------------------

@dataclass(frozen=True)
class NormalFormQuery:
    """One-variable existential conjunction: congruences on x and on f(x),
    an order window lower < x < upper, and linear constraints on f(x)."""

    var: str
    on_x: tuple[Congruence, ...]
    on_fx: tuple[Congruence, ...]
    lower: int | None
    upper: int | None
    linear: tuple[LinearConstraint, ...]


# encodes a recognized-but-unsatisfiable conjunct without leaving the shape
_FALSE_PAIR = (Congruence(2, 0), Congruence(2, 1))


def _linearize(term: Term, var: str) -> tuple[int, int, int] | None:
    """term == a*var + b*f(var) + c, or None when the term is not of that
    shape (f applied to anything but the bare variable, unknown names)."""
    if isinstance(term, Const):
        return 0, 0, term.value
    if isinstance(term, Var):
        return (1, 0, 0) if term.name == var else None
    if isinstance(term, F):
        if isinstance(term.arg, Var) and term.arg.name == var:
            return 0, 1, 0
        return None
    if isinstance(term, Scale):
        inner = _linearize(term.term, var)
        if inner is None:
            return None
        a, b, cst = inner
        return term.coeff * a, term.coeff * b, term.coeff * cst
    if isinstance(term, (Add, Sub)):
        left = _linearize(term.left, var)
        right = _linearize(term.right, var)
        if left is None or right is None:
            return None
        sign = 1 if isinstance(term, Add) else -1
        return (left[0] + sign * right[0],
                left[1] + sign * right[1],
                left[2] + sign * right[2])
    return None


def _flatten_and(formula: Formula) -> list[Formula] | None:
    if isinstance(formula, And):
        left = _flatten_and(formula.left)
        right = _flatten_and(formula.right)
        if left is None or right is None:
            return None
        return left + right
    if isinstance(formula, _ATOMS) or (
        isinstance(formula, Not) and isinstance(formula.body, _ATOMS)
    ):
        return [formula]
    return None


def _solve_unit_congruence(a: int, cst: int, n: int) -> Congruence | None:
    """x-classes of a*x + cst = 0 (mod n); None when there are none."""
    g = gcd(a, n)
    if cst % g:
        return None
    reduced = n // g
    if reduced == 1:
        return Congruence(1, 0)
    inv = pow((a // g) % reduced, -1, reduced)
    return Congruence(reduced, (-(cst // g) * inv) % reduced)


def to_normal_form(formula: Formula) -> NormalFormQuery | None:
    """Recognize `exists x. <conjunction>` where every conjunct is a
    congruence on x or on f(x), a constant order bound, or a linear
    comparison of f(x) with a rational multiple of x; None otherwise."""
    if not isinstance(formula, Exists):
        return None
    var = formula.var
    if free_vars(formula.body) - {var}:
        return None
    conjuncts = _flatten_and(nnf(formula.body))
    if conjuncts is None:
        return None

    on_x: list[Congruence] = []
    on_fx: list[Congruence] = []
    lower: int | None = None
    upper: int | None = None
    linear: list[LinearConstraint] = []

    for conjunct in conjuncts:
        if isinstance(conjunct, PPred):
            return None
        if isinstance(conjunct, Div):
            lin = _linearize(conjunct.term, var)
            if lin is None:
                return None
            a, b, cst = lin
            if a != 0 and b != 0 or (a == 0 and b == 0):
                return None
            target = on_x if b == 0 else on_fx
            solved = _solve_unit_congruence(a or b, cst, conjunct.modulus)
            target.extend([solved] if solved else _FALSE_PAIR)
            continue
        if isinstance(conjunct, Not):
            atom = conjunct.body
            if not isinstance(atom, Cmp) or atom.rel != "<":
                return None
            lin_l = _linearize(atom.left, var)
            lin_r = _linearize(atom.right, var)
            if lin_l is None or lin_r is None:
                return None
            # not(e < 0) == -e - 1 < 0 over the integers
            a = -(lin_l[0] - lin_r[0])
            b = -(lin_l[1] - lin_r[1])
            cst = -(lin_l[2] - lin_r[2]) - 1
            rel = "<"
        elif isinstance(conjunct, Cmp):
            lin_l = _linearize(conjunct.left, var)
            lin_r = _linearize(conjunct.right, var)
            if lin_l is None or lin_r is None:
                return None
            a = lin_l[0] - lin_r[0]
            b = lin_l[1] - lin_r[1]
            cst = lin_l[2] - lin_r[2]
            rel = conjunct.rel
        else:
            return None

        # now: a*x + b*f(x) + cst  <rel>  0
        if a == 0 and b == 0:
            return None
        if b == 0:
            if rel == "=":
                if cst % a == 0:
                    point = (-cst) // a
                    lower = point - 1 if lower is None else max(lower, point - 1)
                    upper = point + 1 if upper is None else min(upper, point + 1)
                else:
                    on_x.extend(_FALSE_PAIR)
            elif a > 0:  # x < -cst/a
                new_upper = (-cst - 1) // a + 1
                upper = new_upper if upper is None else min(upper, new_upper)
            else:  # x > -cst/a
                new_lower = (-cst) // a
                lower = new_lower if lower is None else max(lower, new_lower)
            continue
        if b > 0:
            constraint = LinearConstraint(rel, Fraction(-a, b), Fraction(-cst, b))
        else:
            flipped = {"<": ">", "=": "="}[rel]
            constraint = LinearConstraint(flipped, Fraction(-a, b), Fraction(-cst, b))
        linear.append(constraint)

    return NormalFormQuery(var, tuple(on_x), tuple(on_fx), lower, upper, tuple(linear))


# --- normal-form decision ---------------------------------------------------

def _query_holds(query: NormalFormQuery, x: int) -> bool:
    if any(not cg.holds(x) for cg in query.on_x):
        return False
    fx = f_floor(x)
    if any(not cg.holds(fx) for cg in query.on_fx):
        return False
    if query.lower is not None and not query.lower < x:
        return False
    if query.upper is not None and not x < query.upper:
        return False
    return all(lc.holds(x) for lc in query.linear)


def _negative_branch(query: NormalFormQuery, mx: Congruence, mf: Congruence) -> int | None:
    """Witness <= 0 if one exists there (f vanishes, so the f-congruence
    must have residue 0 and each linear constraint degenerates)."""
    if mf.residue != 0:
        return None
    lo = None if query.lower is None else query.lower + 1
    hi = 0 if query.upper is None else min(query.upper - 1, 0)
    for lc in query.linear:
        _, m, c0 = lc.integer_form()  # constraint reads: 0 <rel> m*x + c0
        rel = lc.relation
        if m == 0:
            satisfied = 0 < c0 if rel == "<" else (0 == c0 if rel == "=" else 0 > c0)
            if not satisfied:
                return None
            continue
        if rel == "=":
            if c0 % m:
                return None
            point = (-c0) // m
            lo = point if lo is None else max(lo, point)
            hi = min(hi, point)
        else:
            t = Fraction(-c0, m)
            # "<" means m*x > -c0, ">" means m*x < -c0
            wants_above = (rel == "<") == (m > 0)
            if wants_above:
                bound = floor(t) + 1
                lo = bound if lo is None else max(lo, bound)
            else:
                bound = -floor(-t) - 1  # ceil(t) - 1
                hi = min(hi, bound)
    if lo is not None and lo > hi:
        return None
    x = hi - ((hi - mx.residue) % mx.modulus)
    if lo is not None and x < lo:
        return None
    return x


def decide_existential_nf(
    query: NormalFormQuery, *, enum_cap: int = DEFAULT_ENUM_CAP
) -> Decision:
    """Exact decision of a normal-form query over the integers.

    Pipeline: merge the congruence lists, settle the x <= 0 branch directly,
    intersect the linear-constraint windows with the order bounds, and run
    the congruence solver on each surviving piece."""
    mx = crt_combine(list(query.on_x)) if query.on_x else Congruence(1, 0)
    if mx is None:
        return Decision(False)
    mf = crt_combine(list(query.on_fx)) if query.on_fx else Congruence(1, 0)
    if mf is None:
        return Decision(False)

    negative = _negative_branch(query, mx, mf)
    if negative is not None:
        assert _query_holds(query, negative)
        return Decision(True, witness=negative)

    window = WindowSet.all()
    for lc in query.linear:
        window = window.intersect(solution_window(lc))
    window = window.clip(query.lower, query.upper)

    unknown_reason = None
    for piece in window.pieces:
        merged = crt_combine([mx, Congruence(piece.mod, piece.res)])
        if merged is None:
            continue
        system = CongruenceSystem(
            merged, mf,
            lower=piece.lo - 1,
            upper=None if piece.hi is None else piece.hi + 1,
        )
        out = solve_system_bounded(system, enum_cap=enum_cap)
        if out.is_witness:
            assert _query_holds(query, out.witness)
            return Decision(True, witness=out.witness)
        if out.status == "unknown" and unknown_reason is None:
            unknown_reason = out.reason
    if unknown_reason is not None:
        return Decision(None, reason=unknown_reason)
    return Decision(False)


def decide(
    sentence: Formula,
    bound: int = DEFAULT_EVAL_BOUND,
    *,
    enum_cap: int = DEFAULT_ENUM_CAP,
) -> Decision:
    """Decide a sentence: quantifier-free parts exactly, single-quantifier
    normal-form sentences through the window/congruence pipeline (universal
    ones via their negation), everything else by bounded evaluation."""
    if free_vars(sentence):
        raise ValueError("decide requires a sentence (no free variables)")
    return _decide(nnf(sentence), bound, enum_cap)


def _decide(sentence: Formula, bound: int, cap: int) -> Decision:
    if _quantifier_free(sentence):
        return evaluate(sentence, {}, bound, enum_cap=cap)
    if isinstance(sentence, Exists) and _quantifier_free(sentence.body):
        query = to_normal_form(sentence)
        if query is not None:
            return decide_existential_nf(query, enum_cap=cap)
        return evaluate(sentence, {}, bound, enum_cap=cap)
    if isinstance(sentence, Forall) and _quantifier_free(sentence.body):
        query = to_normal_form(Exists(sentence.var, nnf(Not(sentence.body))))
        if query is not None:
            return _negate(decide_existential_nf(query, enum_cap=cap))
        return evaluate(sentence, {}, bound, enum_cap=cap)
    if isinstance(sentence, And):
        return _and_d(_decide(sentence.left, bound, cap), _decide(sentence.right, bound, cap))
    if isinstance(sentence, Or):
        return _or_d(_decide(sentence.left, bound, cap), _decide(sentence.right, bound, cap))
    return evaluate(sentence, {}, bound, enum_cap=cap)


# --- axiom audit ------------------------------------------------------------

@dataclass(frozen=True)
class FamilyResult:
    name: str
    instances: int
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class AuditReport:
    bound: int
    families: tuple[FamilyResult, ...]

    @property
    def passed(self) -> bool:
        return all(f.passed for f in self.families)


def _audit_minimum(n: int) -> FamilyResult:
    """f(x) is the least natural number not hit by {f(t), f(t)+t : t < x},
    f vanishes on nonpositives, and f(1) = 1."""
    failures: list[str] = []
    instances = 0
    for x in range(-n, 1):
        instances += 1
        if f_floor(x) != 0:
            failures.append(f"f({x}) != 0")
    if f_floor(1) != 1:
        failures.append("f(1) != 1")
    instances += 1
    limit = f_floor(n) + n + 2
    hit = bytearray(limit + 2)
    hit[0] = 1
    cursor = 1
    for x in range(1, n + 1):
        while cursor <= limit and hit[cursor]:
            cursor += 1
        instances += 1
        fx = f_floor(x)
        if fx != cursor:
            failures.append(f"x={x}: least unhit is {cursor}, f(x)={fx}")
        if fx <= limit:
            hit[fx] = 1
        if fx + x <= limit:
            hit[fx + x] = 1
    return FamilyResult("f-minimum", instances, tuple(failures[:5]))


def _audit_partition(n: int) -> FamilyResult:
    """Every positive integer is f(x) or f(x)+x for exactly one branch."""
    from .golden import decompose

    failures: list[str] = []
    counts = bytearray(n + 1)
    for x in range(1, n + 1):
        fx = f_floor(x)
        for v in (fx, fx + x):
            if v <= n:
                counts[v] += 1
    for m in range(1, n + 1):
        if counts[m] != 1:
            failures.append(f"n={m} covered {counts[m]} times")
    for m in range(1, n + 1):
        d = decompose(m)
        value = f_floor(d.x) if d.kind == "F" else f_floor(d.x) + d.x
        if value != m:
            failures.append(f"decompose({m}) -> {d} does not verify")
    return FamilyResult("beatty-partition", 2 * n, tuple(failures[:5]))


def _audit_window_predicate(n: int) -> FamilyResult:
    """Solver agreement with enumeration for the window predicate."""
    failures: list[str] = []
    instances = 0
    windows = [(-7, 23), (0, 50), (-3, 4), (-min(n, 60), min(n, 60))]
    for n_x in range(1, 5):
        for n_fx in range(1, 5):
            for m_x in range(n_x):
                for m_fx in range(n_fx):
                    for low, high in windows:
                        instances += 1
                        system = CongruenceSystem(
                            Congruence(n_x, m_x), Congruence(n_fx, m_fx),
                            lower=low, upper=high,
                        )
                        got = solve_system_bounded(system).is_witness
                        want = any(
                            x % n_x == m_x and f_floor(x) % n_fx == m_fx
                            for x in range(low + 1, high)
                        )
                        if got != want:
                            failures.append(
                                f"P[{n_x},{n_fx},{m_x},{m_fx}]({low},{high}): "
                                f"solver={got} enumeration={want}"
                            )
    return FamilyResult("window-predicate", instances, tuple(failures[:5]))


def _audit_convergents(n: int) -> FamilyResult:
    """Convergent-substituted implications, in the form that holds: x
    restricted to integer right-hand sides, convergent index at the least
    adequate value (the literal any-index form is false; see axiom_v_check)."""
    failures: list[str] = []
    instances = 0
    x_range = min(n, 2000)
    slopes = [Fraction(0), Fraction(1), Fraction(3, 2),
              Fraction(8, 5), Fraction(5, 3), Fraction(2)]
    for slope in slopes:
        for offset in range(-3, 4):
            index = least_adequate_index(slope, offset)
            report = axiom_v_check(slope, offset, index, x_range, only_integer_rhs=True)
            instances += report.checked
            if not report.passed:
                failures.append(
                    f"slope={slope} offset={offset} i={index}: "
                    f"x={report.counterexamples[0]}"
                )
    return FamilyResult("convergent-implications", instances, tuple(failures[:5]))


def _audit_f_identities(n: int) -> FamilyResult:
    """f(f(x)) = f(x) + x - 1 and f(f(x) + x) = 2 f(x) + x on [1, n]."""
    failures: list[str] = []
    for x in range(1, n + 1):
        fx = f_floor(x)
        if f_floor(fx) != fx + x - 1:
            failures.append(f"f(f({x})) != f({x}) + {x} - 1")
        if f_floor(fx + x) != 2 * fx + x:
            failures.append(f"f(f({x})+{x}) != 2f({x}) + {x}")
    return FamilyResult("f-identities", 2 * n, tuple(failures[:5]))


def axiom_audit(n: int) -> AuditReport:
    """Check the five defining axiom families on [-n, n]."""
    if n < 2:
        raise ValueError(f"audit range must be >= 2, got {n}")
    families = (
        _audit_minimum(n),
        _audit_partition(n),
        _audit_window_predicate(n),
        _audit_convergents(n),
        _audit_f_identities(n),
    )
    return AuditReport(n, families)
