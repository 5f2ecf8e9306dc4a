"""A one-line language for finite rings.

    expr  := atom { "x" atom }
    atom  := "Z(" nat ")" | "GF(" nat ")" | "M(" nat "," expr ")" | "UT(" nat "," expr ")"
           | "GA(" expr "," group ")" | "PQ(" expr "," poly ")" | "Gamma(" nat ")"
           | "EndC4C2" | "Quot(" expr ",[" elem { ";" elem } "])"
    group := "C(" nat ")" | "D(" nat ")"          D takes the group order
    poly  := "[" int { "," int } "]"             ascending, monic
    elem  := term { "+" term }
    term  := [ nat "*" ] ( "1" | "r" ["^" nat] ["*s"] | "s" | "x" ["^" nat] | "g" ["^" nat] )

The parser works on bytes so that every diagnostic carries a byte offset.
Whitespace is ignored between tokens.  ``x`` is the left-associative product.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .gamma import gamma_unit_group
from .groups import make_cyclic, make_dihedral
from .numtheory import prime_power
from .rings import (FiniteRing, ideal_closure, make_end_c4c2, make_gf, make_group_algebra,
                    make_matrix_ring, make_poly_quotient, make_product, make_quotient, make_zn)
from .units import UnitGroupReport

MAX_DEPTH = 64
MAX_NAT = 10**12


class ParseError(ValueError):
    def __init__(self, message: str, offset: int, expected: frozenset = frozenset()):
        super().__init__(message)
        self.message = message
        self.offset = offset
        self.expected = frozenset(expected)

    def __str__(self) -> str:
        text = f"at byte {self.offset}: {self.message}"
        if self.expected:
            text += " (expected " + ", ".join(repr(e) for e in sorted(self.expected)) + ")"
        return text


# -- AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class Zn:
    n: int


@dataclass(frozen=True)
class GF:
    q: int


@dataclass(frozen=True)
class Mat:
    m: int
    base: "RingExpr"


@dataclass(frozen=True)
class UT:
    m: int
    base: "RingExpr"


@dataclass(frozen=True)
class CyclicG:
    n: int


@dataclass(frozen=True)
class DihedralG:
    order: int


@dataclass(frozen=True)
class GA:
    base: "RingExpr"
    group: Union[CyclicG, DihedralG]


@dataclass(frozen=True)
class PQ:
    base: "RingExpr"
    poly: tuple[int, ...]


@dataclass(frozen=True)
class Prod:
    left: "RingExpr"
    right: "RingExpr"


@dataclass(frozen=True)
class Gamma:
    k: int


@dataclass(frozen=True)
class EndC4C2:
    pass


@dataclass(frozen=True)
class Term:
    coeff: Optional[int]  # None when no "n*" prefix was written
    gen: str  # "1", "r", "s", "x" or "g"
    exp: Optional[int] = None
    refl: bool = False  # the "*s" suffix on r


@dataclass(frozen=True)
class Elem:
    terms: tuple[Term, ...]


@dataclass(frozen=True)
class Quot:
    base: "RingExpr"
    elems: tuple[Elem, ...]


RingExpr = Union[Zn, GF, Mat, UT, GA, PQ, Prod, Gamma, EndC4C2, Quot]


def generator_context(e: RingExpr) -> frozenset:
    if isinstance(e, GA):
        return frozenset("rs") if isinstance(e.group, DihedralG) else frozenset("g")
    if isinstance(e, PQ):
        return frozenset("x")
    if isinstance(e, Quot):
        return generator_context(e.base)
    return frozenset()


# -- parser ------------------------------------------------------------------


class _Parser:
    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0
        self.depth = 0
        self.fail_pos = -1
        self.fail_expected: set[str] = set()

    # low level

    def skip_ws(self) -> None:
        while self.pos < len(self.data) and self.data[self.pos] in b" \t\r\n":
            self.pos += 1

    def note(self, *tokens: str) -> None:
        # remember what would have been acceptable at the current position
        if self.pos > self.fail_pos:
            self.fail_pos, self.fail_expected = self.pos, set()
        if self.pos == self.fail_pos:
            self.fail_expected.update(tokens)

    def peek(self, literal: str) -> bool:
        self.skip_ws()
        return self.data.startswith(literal.encode(), self.pos)

    def accept(self, literal: str) -> bool:
        if self.peek(literal):
            self.pos += len(literal)
            return True
        self.note(literal)
        return False

    def expect(self, literal: str) -> None:
        if not self.accept(literal):
            self.fail()

    def fail(self, message: Optional[str] = None):
        if message is None:
            if self.fail_pos >= len(self.data):
                message = "unexpected end of input"
            else:
                message = f"unexpected byte {self.data[self.fail_pos:self.fail_pos + 1]!r}"
        raise ParseError(message, max(self.fail_pos, 0), frozenset(self.fail_expected))

    def semantic(self, message: str, offset: int):
        raise ParseError(message, offset)

    def nat(self) -> tuple[int, int]:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.data) and 0x30 <= self.data[self.pos] <= 0x39:
            self.pos += 1
        if self.pos == start:
            self.note("<nat>")
            self.fail()
        digits = self.data[start:self.pos].lstrip(b"0") or b"0"
        # compare lengths first; int() refuses very long digit strings
        if len(digits) > len(str(MAX_NAT)) or int(digits) > MAX_NAT:
            shown = digits.decode() if len(digits) <= 20 else digits[:20].decode() + "..."
            self.semantic(f"number {shown} is too large", start)
        value = int(digits)
        return value, start

    def integer(self) -> int:
        self.skip_ws()
        neg = self.accept("-")
        value, _ = self.nat()
        return -value if neg else value

    # grammar

    def expr(self) -> RingExpr:
        self.depth += 1
        if self.depth > MAX_DEPTH:
            self.semantic("expression nested too deeply", self.pos)
        left = self.atom()
        while self.accept("x"):
            left = Prod(left, self.atom())
        self.depth -= 1
        return left

    def positive(self, what: str) -> int:
        value, start = self.nat()
        if value < 1:
            self.semantic(f"{what} must be positive", start)
        return value

    def keyword(self, name: str) -> bool:
        """Accept ``name`` followed by "(", allowing whitespace in between."""
        save = self.pos
        if self.accept(name):
            if self.accept("("):
                return True
            self.pos = save
        return False

    def atom(self) -> RingExpr:
        self.skip_ws()
        start = self.pos
        if self.keyword("Gamma"):
            k = self.positive("Gamma index")
            self.expect(")")
            return Gamma(k)
        if self.accept("EndC4C2"):
            return EndC4C2()
        if self.keyword("Quot"):
            base = self.expr()
            self.expect(",")
            self.expect("[")
            ctx = generator_context(base)
            elems = [self.elem(ctx)]
            while self.accept(";"):
                elems.append(self.elem(ctx))
            self.expect("]")
            self.expect(")")
            return Quot(base, tuple(elems))
        if self.keyword("GF"):
            q, qpos = self.nat()
            if q < 2 or prime_power(q) is None:
                self.semantic(f"{q} is not a prime power", qpos)
            self.expect(")")
            return GF(q)
        if self.keyword("GA"):
            base = self.expr()
            self.expect(",")
            group = self.group()
            self.expect(")")
            return GA(base, group)
        if self.keyword("PQ"):
            base = self.expr()
            self.expect(",")
            poly = self.poly()
            self.expect(")")
            return PQ(base, poly)
        for name, node in (("UT", UT), ("M", Mat)):
            if self.keyword(name):
                m = self.positive("matrix size")
                self.expect(",")
                base = self.expr()
                self.expect(")")
                return node(m, base)
        if self.keyword("Z"):
            n = self.positive("modulus")
            self.expect(")")
            return Zn(n)
        self.pos = start
        self.fail()

    def group(self) -> Union[CyclicG, DihedralG]:
        if self.keyword("C"):
            n = self.positive("cyclic group order")
            self.expect(")")
            return CyclicG(n)
        if self.keyword("D"):
            m, mpos = self.nat()
            if m < 2 or m % 2:
                self.semantic(f"D({m}): the dihedral group order must be even and at least 2", mpos)
            self.expect(")")
            return DihedralG(m)
        self.fail()

    def poly(self) -> tuple[int, ...]:
        self.skip_ws()
        start = self.pos
        self.expect("[")
        coeffs = [self.integer()]
        while self.accept(","):
            coeffs.append(self.integer())
        self.expect("]")
        if len(coeffs) < 2:
            self.semantic("modulus must have degree at least 1", start)
        if coeffs[-1] != 1:
            self.semantic(f"modulus is not monic: leading coefficient {coeffs[-1]}", start)
        return tuple(coeffs)

    def elem(self, ctx: frozenset) -> Elem:
        terms = [self.term(ctx)]
        while self.accept("+"):
            terms.append(self.term(ctx))
        return Elem(tuple(terms))

    def term(self, ctx: frozenset) -> Term:
        self.skip_ws()
        coeff = None
        if self.pos < len(self.data) and 0x30 <= self.data[self.pos] <= 0x39:
            value, vpos = self.nat()
            if self.accept("*"):
                coeff = value
            elif value == 1:
                return Term(None, "1")
            else:
                self.semantic(f"a bare constant must be written {value}*1", vpos)
        self.skip_ws()
        gpos = self.pos
        if self.accept("1"):
            return Term(coeff, "1")
        for gen in "rsxg":
            if self.accept(gen):
                break
        else:
            self.fail()
        if gen not in ctx:
            allowed = ", ".join(sorted(ctx)) or "none"
            self.semantic(f"generator {gen} is not available here (available: {allowed})", gpos)
        exp = None
        if gen != "s" and self.accept("^"):
            exp, _ = self.nat()
        refl = gen == "r" and self.accept("*s")
        return Term(coeff, gen, exp, refl)


def parse_ring_expr(text: Union[str, bytes]) -> RingExpr:
    data = text.encode("utf-8") if isinstance(text, str) else bytes(text)
    p = _Parser(data)
    e = p.expr()
    p.skip_ws()
    if p.pos != len(data):
        p.note("x")
        p.fail()
    return e


def parse_element(text: Union[str, bytes], generators) -> Elem:
    """Parse a single element expression over the given generator names."""
    data = text.encode("utf-8") if isinstance(text, str) else bytes(text)
    p = _Parser(data)
    e = p.elem(frozenset(generators))
    p.skip_ws()
    if p.pos != len(data):
        p.note("+")
        p.fail()
    return e


# -- printer -----------------------------------------------------------------


def _term_text(t: Term) -> str:
    body = t.gen
    if t.exp is not None:
        body += f"^{t.exp}"
    if t.refl:
        body += "*s"
    return body if t.coeff is None else f"{t.coeff}*{body}"


def elem_text(e: Elem) -> str:
    return " + ".join(_term_text(t) for t in e.terms)


def to_text(e: RingExpr) -> str:
    if isinstance(e, Zn):
        return f"Z({e.n})"
    if isinstance(e, GF):
        return f"GF({e.q})"
    if isinstance(e, Mat):
        return f"M({e.m}, {to_text(e.base)})"
    if isinstance(e, UT):
        return f"UT({e.m}, {to_text(e.base)})"
    if isinstance(e, GA):
        g = f"C({e.group.n})" if isinstance(e.group, CyclicG) else f"D({e.group.order})"
        return f"GA({to_text(e.base)}, {g})"
    if isinstance(e, PQ):
        return f"PQ({to_text(e.base)}, [{', '.join(str(c) for c in e.poly)}])"
    if isinstance(e, Prod):
        # the product is left-associative, so a product on the right needs no
        # parentheses only if it is not itself a product; there is no grouping
        # syntax, so such trees cannot be written and are rejected
        if isinstance(e.right, Prod):
            raise ValueError("a right-nested product has no textual form")
        return f"{to_text(e.left)} x {to_text(e.right)}"
    if isinstance(e, Gamma):
        return f"Gamma({e.k})"
    if isinstance(e, EndC4C2):
        return "EndC4C2"
    if isinstance(e, Quot):
        return f"Quot({to_text(e.base)}, [{'; '.join(elem_text(x) for x in e.elems)}])"
    raise TypeError(f"not a ring expression: {e!r}")


# -- evaluation --------------------------------------------------------------


class EvalError(ValueError):
    pass


@dataclass(frozen=True)
class GammaHandle:
    """Stands in for the infinite ring Gamma(k); only its unit group exists."""

    k: int

    @property
    def tag(self) -> str:
        return f"Gamma({self.k})"

    def units(self, budget: Optional[int] = None) -> UnitGroupReport:
        return gamma_unit_group(self.k, budget=budget)


def eval_elem(R: FiniteRing, e: Elem) -> int:
    total = R.zero
    for t in e.terms:
        if t.gen == "1":
            x = R.one
        else:
            if t.gen not in R.generators:
                raise EvalError(f"ring {R.tag} has no generator {t.gen}")
            x = R.pow(R.generators[t.gen], 1 if t.exp is None else t.exp)
        if t.refl:
            x = int(R.mul(x, R.generators["s"]))
        if t.coeff is not None:
            x = int(R.mul(R.from_int(t.coeff), x))
        total = int(R.add(total, x))
    return total


def ring_element(R: FiniteRing, text: str) -> int:
    return eval_elem(R, parse_element(text, R.generators))


def eval_ring_expr(e: RingExpr, *, budget: Optional[int] = None) -> Union[FiniteRing, GammaHandle]:
    if isinstance(e, Gamma):
        return GammaHandle(e.k)
    return _eval(e, budget)


def _eval(e: RingExpr, budget: Optional[int]) -> FiniteRing:
    if isinstance(e, Gamma):
        raise EvalError("Gamma(k) is infinite and may only appear on its own")
    if isinstance(e, Zn):
        return make_zn(e.n, budget=budget)
    if isinstance(e, GF):
        p, k = prime_power(e.q)
        return make_gf(p, k, budget=budget)
    if isinstance(e, EndC4C2):
        return make_end_c4c2()
    base = _eval(e.left if isinstance(e, Prod) else e.base, budget)
    try:
        if isinstance(e, Mat):
            return make_matrix_ring(e.m, base, budget=budget)
        if isinstance(e, UT):
            return make_matrix_ring(e.m, base, "upper_triangular", budget=budget)
        if isinstance(e, GA):
            if isinstance(e.group, CyclicG):
                G, gens, tag = make_cyclic(e.group.n), {"g": 1 % e.group.n}, f"C({e.group.n})"
            else:
                n = e.group.order // 2
                G, gens, tag = make_dihedral(e.group.order), {"r": 1 % n, "s": n}, f"D({e.group.order})"
            return make_group_algebra(base, G, generators=gens, group_tag=tag, budget=budget)
        if isinstance(e, PQ):
            return make_poly_quotient(base, e.poly, budget=budget)
        if isinstance(e, Prod):
            return make_product(base, _eval(e.right, budget), budget=budget)
        if isinstance(e, Quot):
            gens = [eval_elem(base, x) for x in e.elems]
            Q = make_quotient(base, ideal_closure(base, gens))
            Q.tag = f"{base.tag}/({'; '.join(elem_text(x) for x in e.elems)})"
            return Q
    except EvalError:
        raise
    except ValueError as exc:
        raise EvalError(str(exc)) from exc
    raise TypeError(f"not a ring expression: {e!r}")


def evaluate(text: Union[str, bytes], *, budget: Optional[int] = None):
    return eval_ring_expr(parse_ring_expr(text), budget=budget)
