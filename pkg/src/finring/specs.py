"""Construction-expression grammar: parse, print, estimate, build.

    spec  := "Z" INT | "M" INT "(" spec ")" | "T" INT "(" spec ["," endo] ")"
           | "TE(" spec ")" | "DT(" spec ")" | "K(" INT ")(" spec ")"
           | "FM" INT "(" INT ")(" spec ")" | "prod(" spec {"," spec} ")"
           | "GR(" spec "," group ")" | "quotpoly(" spec "," INT ")"
           | "sub(" spec ";" elt {"," elt} ")" | "cmat(" spec ";" gens ")"
    endo  := "id" | "swap"
    group := "C" INT {"x" "C" INT}
    elt   := INT | "[" "[" INT {"," INT} "]" {"," "[" INT {"," INT} "]"} "]"
    gens  := same bracket shape as a matrix elt

"T", with an endomorphism argument, is the twisted-tuple construction;
without one it is the upper-triangular matrix ring.  Whitespace is
ignored everywhere.  Parsed trees print back to a canonical string that
re-parses to the same tree, and every built ring records that canonical
string as its replayable identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from . import constructions as cons
from . import structure
from .config import DEFAULT, EngineConfig
from .errors import SpecParseError
from .groups import cyclic_product
from .ring import Ring

_KEYWORDS = ("quotpoly", "prod", "cmat", "swap", "sub", "TE", "DT", "GR",
             "FM", "id", "Z", "M", "T", "K", "C", "x")
_SYMBOLS = "()[],;"


@dataclass(frozen=True)
class Token:
    kind: str  # keyword text, "INT", or a symbol
    value: int
    pos: int


def _lex(text: str) -> List[Token]:
    tokens: List[Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _SYMBOLS:
            tokens.append(Token(ch, 0, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("INT", int(text[i:j]), i))
            i = j
            continue
        for kw in _KEYWORDS:
            if text.startswith(kw, i):
                tokens.append(Token(kw, 0, i))
                i += len(kw)
                break
        else:
            raise SpecParseError(f"unexpected character {ch!r}", text, i)
    return tokens


# -- AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class MatLit:
    rows: Tuple[Tuple[int, ...], ...]

    def text(self) -> str:
        return "[" + ",".join(
            "[" + ",".join(str(v) for v in row) + "]" for row in self.rows
        ) + "]"


Elt = Union[int, MatLit]


@dataclass(frozen=True)
class Node:
    def text(self) -> str:
        raise NotImplementedError

    def order_estimate(self) -> int:
        """Structural upper bound on the order, used only for budget gates."""
        raise NotImplementedError


@dataclass(frozen=True)
class ZSpec(Node):
    n: int

    def text(self) -> str:
        return f"Z{self.n}"

    def order_estimate(self) -> int:
        return self.n


@dataclass(frozen=True)
class MSpec(Node):
    n: int
    base: Node

    def text(self) -> str:
        return f"M{self.n}({self.base.text()})"

    def order_estimate(self) -> int:
        return self.base.order_estimate() ** (self.n * self.n)


@dataclass(frozen=True)
class TSpec(Node):
    n: int
    base: Node
    endo: Optional[str] = None

    def text(self) -> str:
        if self.endo is None:
            return f"T{self.n}({self.base.text()})"
        return f"T{self.n}({self.base.text()},{self.endo})"

    def order_estimate(self) -> int:
        b = self.base.order_estimate()
        if self.endo is None:
            return b ** (self.n * (self.n + 1) // 2)
        return b ** self.n


@dataclass(frozen=True)
class TESpec(Node):
    base: Node

    def text(self) -> str:
        return f"TE({self.base.text()})"

    def order_estimate(self) -> int:
        return self.base.order_estimate() ** 2


@dataclass(frozen=True)
class DTSpec(Node):
    base: Node

    def text(self) -> str:
        return f"DT({self.base.text()})"

    def order_estimate(self) -> int:
        return self.base.order_estimate() ** 4


@dataclass(frozen=True)
class KSpec(Node):
    s: int
    base: Node

    def text(self) -> str:
        return f"K({self.s})({self.base.text()})"

    def order_estimate(self) -> int:
        return self.base.order_estimate() ** 4


@dataclass(frozen=True)
class FMSpec(Node):
    n: int
    s: int
    base: Node

    def text(self) -> str:
        return f"FM{self.n}({self.s})({self.base.text()})"

    def order_estimate(self) -> int:
        return self.base.order_estimate() ** (self.n * self.n)


@dataclass(frozen=True)
class ProdSpec(Node):
    factors: Tuple[Node, ...]

    def text(self) -> str:
        return "prod(" + ",".join(f.text() for f in self.factors) + ")"

    def order_estimate(self) -> int:
        total = 1
        for f in self.factors:
            total *= f.order_estimate()
        return total


@dataclass(frozen=True)
class GRSpec(Node):
    base: Node
    group: Tuple[int, ...]

    def group_text(self) -> str:
        return "x".join(f"C{k}" for k in self.group)

    def text(self) -> str:
        return f"GR({self.base.text()},{self.group_text()})"

    def order_estimate(self) -> int:
        g = 1
        for k in self.group:
            g *= k
        return self.base.order_estimate() ** g


@dataclass(frozen=True)
class QuotPolySpec(Node):
    base: Node
    n: int

    def text(self) -> str:
        return f"quotpoly({self.base.text()},{self.n})"

    def order_estimate(self) -> int:
        return self.base.order_estimate() ** self.n


@dataclass(frozen=True)
class SubSpec(Node):
    base: Node
    elts: Tuple[Elt, ...]

    def text(self) -> str:
        parts = ",".join(e.text() if isinstance(e, MatLit) else str(e)
                         for e in self.elts)
        return f"sub({self.base.text()};{parts})"

    def order_estimate(self) -> int:
        return self.base.order_estimate()


@dataclass(frozen=True)
class CmatSpec(Node):
    base: Node
    gens: Tuple[Tuple[int, ...], ...]

    def gens_text(self) -> str:
        return MatLit(self.gens).text()

    def text(self) -> str:
        return f"cmat({self.base.text()};{self.gens_text()})"

    def order_estimate(self) -> int:
        n = len(self.gens)
        return self.base.order_estimate() ** (n * n)


# -- parser --------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _lex(text)
        self.i = 0

    def _peek(self) -> Optional[Token]:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def _fail(self, message: str) -> SpecParseError:
        tok = self._peek()
        pos = tok.pos if tok is not None else len(self.text)
        return SpecParseError(message, self.text, pos)

    def _take(self, kind: str) -> Token:
        tok = self._peek()
        if tok is None or tok.kind != kind:
            got = "end of input" if tok is None else repr(tok.kind)
            raise self._fail(f"expected {kind!r}, found {got}")
        self.i += 1
        return tok

    def _int(self) -> int:
        return self._take("INT").value

    def spec(self) -> Node:
        tok = self._peek()
        if tok is None:
            raise self._fail("expected a construction")
        kind = tok.kind
        if kind == "Z":
            self.i += 1
            return ZSpec(self._int())
        if kind == "M":
            self.i += 1
            n = self._int()
            self._take("(")
            base = self.spec()
            self._take(")")
            return MSpec(n, base)
        if kind == "T":
            self.i += 1
            n = self._int()
            self._take("(")
            base = self.spec()
            endo = None
            if self._peek() is not None and self._peek().kind == ",":
                self.i += 1
                e = self._peek()
                if e is None or e.kind not in ("id", "swap"):
                    raise self._fail("expected 'id' or 'swap'")
                endo = e.kind
                self.i += 1
            self._take(")")
            return TSpec(n, base, endo)
        if kind == "TE":
            self.i += 1
            self._take("(")
            base = self.spec()
            self._take(")")
            return TESpec(base)
        if kind == "DT":
            self.i += 1
            self._take("(")
            base = self.spec()
            self._take(")")
            return DTSpec(base)
        if kind == "K":
            self.i += 1
            self._take("(")
            s = self._int()
            self._take(")")
            self._take("(")
            base = self.spec()
            self._take(")")
            return KSpec(s, base)
        if kind == "FM":
            self.i += 1
            n = self._int()
            self._take("(")
            s = self._int()
            self._take(")")
            self._take("(")
            base = self.spec()
            self._take(")")
            return FMSpec(n, s, base)
        if kind == "prod":
            self.i += 1
            self._take("(")
            factors = [self.spec()]
            while self._peek() is not None and self._peek().kind == ",":
                self.i += 1
                factors.append(self.spec())
            self._take(")")
            if len(factors) < 2:
                raise self._fail("prod needs at least two factors")
            return ProdSpec(tuple(factors))
        if kind == "GR":
            self.i += 1
            self._take("(")
            base = self.spec()
            self._take(",")
            group = [self._cyclic_factor()]
            while self._peek() is not None and self._peek().kind == "x":
                self.i += 1
                group.append(self._cyclic_factor())
            self._take(")")
            return GRSpec(base, tuple(group))
        if kind == "quotpoly":
            self.i += 1
            self._take("(")
            base = self.spec()
            self._take(",")
            n = self._int()
            self._take(")")
            return QuotPolySpec(base, n)
        if kind == "sub":
            self.i += 1
            self._take("(")
            base = self.spec()
            self._take(";")
            elts = [self._elt()]
            while self._peek() is not None and self._peek().kind == ",":
                self.i += 1
                elts.append(self._elt())
            self._take(")")
            return SubSpec(base, tuple(elts))
        if kind == "cmat":
            self.i += 1
            self._take("(")
            base = self.spec()
            self._take(";")
            gens = self._matrix()
            self._take(")")
            return CmatSpec(base, gens.rows)
        raise self._fail(f"unexpected token {kind!r}")

    def _cyclic_factor(self) -> int:
        self._take("C")
        k = self._int()
        if k < 1:
            raise self._fail("cyclic factor must be positive")
        return k

    def _elt(self) -> Elt:
        tok = self._peek()
        if tok is not None and tok.kind == "INT":
            self.i += 1
            return tok.value
        return self._matrix()

    def _matrix(self) -> MatLit:
        self._take("[")
        rows = [self._row()]
        while self._peek() is not None and self._peek().kind == ",":
            self.i += 1
            rows.append(self._row())
        self._take("]")
        if any(len(r) != len(rows[0]) for r in rows):
            raise self._fail("matrix rows have unequal lengths")
        return MatLit(tuple(rows))

    def _row(self) -> Tuple[int, ...]:
        self._take("[")
        vals = [self._int()]
        while self._peek() is not None and self._peek().kind == ",":
            self.i += 1
            vals.append(self._int())
        self._take("]")
        return tuple(vals)


def parse_spec(text: str) -> Node:
    parser = _Parser(text)
    node = parser.spec()
    trailing = parser._peek()
    if trailing is not None:
        raise SpecParseError("trailing input after construction", text,
                             trailing.pos)
    return node


# -- builder -------------------------------------------------------------------


def resolve_element(ring: Ring, elt: Elt) -> int:
    """Element id from an id or a matrix literal over a matrix-shaped ring."""
    if isinstance(elt, int):
        if not (0 <= elt < ring.order):
            raise SpecParseError(
                f"element {elt} out of range for {ring.label}", str(elt), 0)
        return elt
    layout = ring.info.get("layout")
    cells = ring.info.get("cells")
    if layout is None or cells is None:
        raise SpecParseError(
            f"matrix literal needs a matrix-shaped ring, got {ring.label}",
            elt.text(), 0)
    n = ring.info["n"]
    base = ring.info["base"]
    if len(elt.rows) != n or any(len(r) != n for r in elt.rows):
        raise SpecParseError(
            f"matrix literal must be {n}x{n} for {ring.label}", elt.text(), 0)
    values = []
    for (i, j) in cells:
        values.append(elt.rows[i][j])
    for i in range(n):
        for j in range(n):
            if (i, j) not in cells and elt.rows[i][j] != base.zero:
                raise SpecParseError(
                    f"cell ({i},{j}) is constrained to zero in {ring.label}",
                    elt.text(), 0)
    try:
        return layout.encode_values(values)
    except ValueError as exc:
        raise SpecParseError(str(exc), elt.text(), 0) from None


def build_node(node: Node, config: EngineConfig = DEFAULT,
               audit: str = "full") -> Ring:
    """Construct the ring a parse tree denotes; the canonical spec text is
    recorded on the result."""
    ring = _build(node, config, audit)
    ring.spec = node.text()
    return ring


def _build(node: Node, config: EngineConfig, audit: str) -> Ring:
    if isinstance(node, ZSpec):
        return cons.zmod(node.n, config, audit)
    if isinstance(node, MSpec):
        return cons.matrix_ring(_build(node.base, config, audit), node.n,
                                config, audit)
    if isinstance(node, TSpec):
        base = _build(node.base, config, audit)
        if node.endo is None:
            return cons.triangular_ring(base, node.n, config, audit)
        endo = cons.named_endomorphism(base, node.endo)
        return cons.skew_triangular(base, node.n, endo, config, audit)
    if isinstance(node, TESpec):
        return cons.trivial_extension(_build(node.base, config, audit),
                                      config, audit)
    if isinstance(node, DTSpec):
        return cons.dt_extension(_build(node.base, config, audit),
                                 config, audit)
    if isinstance(node, KSpec):
        return cons.k_s_ring(_build(node.base, config, audit), node.s,
                             config, audit)
    if isinstance(node, FMSpec):
        return cons.formal_matrix(_build(node.base, config, audit), node.n,
                                  node.s, config, audit)
    if isinstance(node, ProdSpec):
        factors = [_build(f, config, audit) for f in node.factors]
        return cons.product(factors, config, audit)
    if isinstance(node, GRSpec):
        base = _build(node.base, config, audit)
        return cons.group_ring(base, cyclic_product(node.group), config, audit)
    if isinstance(node, QuotPolySpec):
        return cons.quot_poly(_build(node.base, config, audit), node.n,
                              config, audit)
    if isinstance(node, SubSpec):
        parent = _build(node.base, config, audit)
        gens = [resolve_element(parent, e) for e in node.elts]
        label = f"sub({parent.label};" + ",".join(
            e.text() if isinstance(e, MatLit) else str(e)
            for e in node.elts) + ")"
        return structure.subring_generated(parent, gens, label=label,
                                           audit=audit)
    if isinstance(node, CmatSpec):
        base = _build(node.base, config, audit)
        return cons.entry_constrained_matrix(base, node.gens, config, audit)
    raise TypeError(f"unknown spec node {node!r}")


def build_spec(text: str, config: EngineConfig = DEFAULT,
               audit: str = "full") -> Ring:
    return build_node(parse_spec(text), config, audit)


def parse_element_text(text: str) -> Elt:
    """An element argument: a bare id or a matrix literal."""
    parser = _Parser(text)
    elt = parser._elt()
    trailing = parser._peek()
    if trailing is not None:
        raise SpecParseError("trailing input after element", text,
                             trailing.pos)
    return elt
