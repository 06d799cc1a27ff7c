"""A small expression language for curves and twist applications.

Grammar (LL(1), whitespace between tokens is ignored):

    expr  := atom
           | "T(" expr ")" power? "(" expr ")"
           | "psi(" expr ")"
           | "phi[" int "](" expr ")"
    atom  := ("a" | "b") int | "c" | "B[" int "," int "]"
    power := "^" int

``T(x)^k(y)`` is the k-th twist of y about x, ``psi`` and ``phi[n]`` apply
the named monodromies.  Every failure carries the byte offset where the
parse stopped and the tokens that would have been accepted there.
"""
from dataclasses import dataclass

from .errors import ExprSyntaxError, IndexOutOfRange
from .mcg import apply_word, beta_gn, monodromy_phi, monodromy_psi, standard_curve_system
from .curves import dehn_twist


@dataclass(frozen=True)
class AtomCurve:
    family: str  # "a", "b" or "c"
    index: int = 0


@dataclass(frozen=True)
class TwistedBeta:
    genus: int
    n: int


@dataclass(frozen=True)
class Twist:
    about: object
    power: int
    target: object


@dataclass(frozen=True)
class ApplyPsi:
    target: object


@dataclass(frozen=True)
class ApplyPhi:
    n: int
    target: object


class _Parser:
    def __init__(self, text, g):
        self.text = text
        self.g = g
        self.i = 0

    def error(self, expected):
        found = self.text[self.i] if self.i < len(self.text) else None
        raise ExprSyntaxError(self.i, expected, found)

    def skip_ws(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.i] if self.i < len(self.text) else None

    def expect(self, ch):
        self.skip_ws()
        if self.i < len(self.text) and self.text[self.i] == ch:
            self.i += 1
            return
        self.error([repr(ch)])

    def integer(self, allow_negative=False):
        self.skip_ws()
        start = self.i
        if allow_negative and self.i < len(self.text) and self.text[self.i] == "-":
            self.i += 1
        digits = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if self.i == digits:
            self.i = start
            self.error(["integer"])
        return int(self.text[start:self.i])

    def match_word(self, word):
        self.skip_ws()
        if self.text.startswith(word, self.i):
            self.i += len(word)
            return True
        return False

    def curve_index(self, family):
        offset = self.i
        idx = self.integer()
        if not 1 <= idx <= self.g:
            raise IndexOutOfRange(
                f"at byte {offset}: {family}{idx} needs 1 <= index <= genus {self.g}"
            )
        return idx

    def expr(self):
        self.skip_ws()
        if self.match_word("psi"):
            self.expect("(")
            target = self.expr()
            self.expect(")")
            return ApplyPsi(target)
        if self.match_word("phi"):
            self.expect("[")
            n = self.integer(allow_negative=True)
            self.expect("]")
            self.expect("(")
            target = self.expr()
            self.expect(")")
            return ApplyPhi(n, target)
        ch = self.peek()
        if ch == "T":
            self.i += 1
            self.expect("(")
            about = self.expr()
            self.expect(")")
            power = 1
            if self.peek() == "^":
                self.i += 1
                power = self.integer(allow_negative=True)
            self.expect("(")
            target = self.expr()
            self.expect(")")
            return Twist(about, power, target)
        if ch == "B":
            self.i += 1
            self.expect("[")
            offset = self.i
            gg = self.integer()
            if gg != self.g:
                raise IndexOutOfRange(
                    f"at byte {offset}: B[{gg},_] does not match genus {self.g}"
                )
            self.expect(",")
            n = self.integer(allow_negative=True)
            self.expect("]")
            return TwistedBeta(gg, n)
        if ch in ("a", "b"):
            self.i += 1
            return AtomCurve(ch, self.curve_index(ch))
        if ch == "c":
            self.i += 1
            return AtomCurve("c")
        self.error(["'a'", "'b'", "'c'", "'B['", "'T('", "'psi('", "'phi['"])


def parse_expression(text, g):
    """Parse a curve expression against a fixed genus.

    Returns the syntax tree, or raises ExprSyntaxError with a byte offset
    and expected-token set, or IndexOutOfRange for indices outside 1..g.
    """
    p = _Parser(text, g)
    node = p.expr()
    p.skip_ws()
    if p.i != len(text):
        p.error(["end of input"])
    return node


def eval_expression(node, g):
    """Evaluate a parsed expression to a normalized Curve."""
    system = standard_curve_system(g)
    if isinstance(node, AtomCurve):
        if node.family == "c":
            return system.c
        if node.family == "a":
            return system.alphas[node.index - 1]
        return system.betas[node.index - 1]
    if isinstance(node, TwistedBeta):
        return beta_gn(g, node.n)
    if isinstance(node, Twist):
        about = eval_expression(node.about, g)
        target = eval_expression(node.target, g)
        return dehn_twist(target, about, node.power)
    if isinstance(node, ApplyPsi):
        return apply_word(monodromy_psi(g), eval_expression(node.target, g))
    if isinstance(node, ApplyPhi):
        return apply_word(monodromy_phi(g, node.n), eval_expression(node.target, g))
    raise TypeError(f"not an expression node: {node!r}")


def curve_from_text(text, g):
    return eval_expression(parse_expression(text, g), g)
