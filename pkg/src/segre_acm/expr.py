"""Parser and printer for sheaf expressions.

    expr   := ext | sum
    ext    := 'ext(' sum? ';' sum? ')' twist*
    sum    := '0' | term ('+' term)*
    term   := [int '*'] atom twist*
    atom   := 'O(' div ')' | 'Omega(' div ')' | 'L'
    div    := int ',' int | int | lin
    lin    := [+-][int](F|L|H) ([+-][int](F|L|H))*
    twist  := '(' int ')'

``O(k)`` means kH, ``L`` alone is the line bundle O(F-L), and a twist suffix
tensors with O(tH).  Whitespace is ignored.
"""
from __future__ import annotations

from .chow import DivisorClass
from .cohomology import ExtensionSheaf, FormalSheaf, LineBundle, OmegaPi

_CLASSES = {"F": (1, 0), "L": (0, 1), "H": (1, 1)}


class ParseError(ValueError):
    def __init__(self, text: str, pos: int, expected):
        self.offset = len(text[:pos].encode())
        self.expected = frozenset(expected)
        found = text[pos:pos + 1] or "end of input"
        want = ", ".join(sorted(repr(e) if len(e) == 1 else e for e in self.expected))
        super().__init__(f"at offset {self.offset}: expected {want}, found {found!r}")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    # -- lexing helpers ------------------------------------------------------
    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s: str) -> bool:
        self.skip()
        return self.text.startswith(s, self.pos)

    def accept(self, s: str) -> bool:
        if self.peek(s):
            self.pos += len(s)
            return True
        return False

    def expect(self, s: str) -> None:
        if not self.accept(s):
            self.fail({s})

    def fail(self, expected):
        self.skip()
        raise ParseError(self.text, self.pos, expected)

    def digits(self) -> str:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return self.text[start:self.pos]

    def integer(self) -> int:
        sign = 1
        if self.accept("-"):
            sign = -1
        else:
            self.accept("+")
        ds = self.digits()
        if not ds:
            self.fail({"integer"})
        return sign * int(ds)

    # -- grammar ---------------------------------------------------------------
    def parse(self):
        if self.accept("ext("):
            sub = self.sum_until(";")
            self.expect(";")
            quot = self.sum_until(")")
            self.expect(")")
            result = ExtensionSheaf(sub, quot)
            t = self.twists()
            if t:
                result = result.twist(t)
        else:
            result = self.sum_until(None)
        self.skip()
        if self.pos != len(self.text):
            self.fail({"+", "end of input"})
        return result

    def sum_until(self, stop):
        if stop is not None and self.peek(stop):
            return FormalSheaf()
        if self.accept("0"):
            if self.peek("*") or self.peek(","):
                self.fail({"atom"})
            return FormalSheaf()
        terms = [self.term()]
        while self.accept("+"):
            terms.append(self.term())
        return FormalSheaf(tuple(terms))

    def term(self):
        self.skip()
        mult = 1
        if self.pos < len(self.text) and self.text[self.pos].isdigit():
            mult = int(self.digits())
            if mult < 1:
                self.fail({"positive multiplicity"})
            self.expect("*")
            block = self.atom(set())
        else:
            block = self.atom({"multiplicity"})
        t = self.twists()
        return (block.twist(t) if t else block, mult)

    def twists(self) -> int:
        total = 0
        while self.accept("("):
            total += self.integer()
            self.expect(")")
        return total

    def atom(self, extra: set):
        if self.accept("Omega("):
            D = self.divisor()
            self.expect(")")
            return OmegaPi(D)
        if self.accept("O("):
            D = self.divisor()
            self.expect(")")
            return LineBundle(D)
        if self.accept("L"):
            return LineBundle(DivisorClass(1, -1))
        self.fail({"O(", "Omega(", "L"} | extra)

    def divisor(self) -> DivisorClass:
        self.skip()
        save = self.pos
        # plain integers: k or a,b
        try:
            k = self.integer()
        except ParseError:
            k = None
        if k is not None and not self.peek_class():
            if self.accept(","):
                return DivisorClass(k, self.integer())
            return DivisorClass(k, k)
        self.pos = save
        a = b = 0
        first = True
        while True:
            self.skip()
            if self.peek(")"):
                if first:
                    self.fail({"integer", "F", "L", "H"})
                break
            if self.accept("-"):
                sign = -1
            elif self.accept("+") or first:
                sign = 1
            else:
                self.fail({"+", "-", ")"})
            coef = int(self.digits() or 1)
            sym = self.class_symbol(first)
            da, db = _CLASSES[sym]
            a += sign * coef * da
            b += sign * coef * db
            first = False
        return DivisorClass(a, b)

    def peek_class(self) -> bool:
        self.skip()
        return self.pos < len(self.text) and self.text[self.pos] in _CLASSES

    def class_symbol(self, first: bool) -> str:
        if not self.peek_class():
            self.fail({"F", "L", "H"} | ({"integer"} if first else set()))
        sym = self.text[self.pos]
        self.pos += 1
        return sym


def parse(text: str):
    """Parse an expression into a FormalSheaf or ExtensionSheaf."""
    return _Parser(text).parse()


def format_sheaf(s) -> str:
    """Canonical text form; ``parse(format_sheaf(s)) == s``."""
    if isinstance(s, ExtensionSheaf):
        return f"ext({format_sheaf(s.sub)}; {format_sheaf(s.quot)})"
    return str(s)
