"""Free associative algebra: generator tables, words, deg-lex order, NCPoly."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Dict, Optional, Tuple

from . import scalar as sc
from .scalar import Scalar

Word = Tuple[int, ...]
EMPTY_WORD: Word = ()


class AlgebraError(Exception):
    pass


class GenTable:
    """Ordered table of named generators; position = default precedence rank
    (earlier entries are larger in the monomial order)."""

    def __init__(self, names):
        names = list(names)
        if len(set(names)) != len(names):
            raise AlgebraError(f"duplicate generator names in {names}")
        self.names = names
        self.index = {n: i for i, n in enumerate(names)}

    def lookup(self, name) -> Optional[int]:
        return self.index.get(name)

    def gen(self, name) -> int:
        i = self.index.get(name)
        if i is None:
            raise AlgebraError(f"unknown generator {name!r}")
        return i

    def name(self, gid: int) -> str:
        return self.names[gid]

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, GenTable) and self.names == other.names

    def __hash__(self):
        return hash(tuple(self.names))

    def __repr__(self):
        return f"GenTable({self.names})"


@dataclass(frozen=True)
class MonomialOrder:
    """Degree-lexicographic order; `rank` maps generator id to precedence
    position (rank 0 = largest letter)."""

    rank: Tuple[int, ...]

    @staticmethod
    def default(table: GenTable) -> "MonomialOrder":
        return MonomialOrder(tuple(range(len(table))))

    @staticmethod
    def from_precedence(table: GenTable, names) -> "MonomialOrder":
        if sorted(names) != sorted(table.names):
            raise AlgebraError("precedence list must mention every generator once")
        rank = [0] * len(table)
        for pos, n in enumerate(names):
            rank[table.gen(n)] = pos
        return MonomialOrder(tuple(rank))

    def cmp(self, a: Word, b: Word) -> int:
        """-1, 0, 1 for a <, =, > b."""
        if len(a) != len(b):
            return -1 if len(a) < len(b) else 1
        r = self.rank
        for x, y in zip(a, b):
            if x != y:
                # smaller rank = higher precedence = larger letter
                return 1 if r[x] < r[y] else -1
        return 0

    def key(self, w: Word):
        """Sort key: ascending key order = ascending monomial order."""
        return (len(w), tuple(-self.rank[g] for g in w))


def word_cmp(a: Word, b: Word, ord: MonomialOrder) -> str:
    c = ord.cmp(a, b)
    return "LT" if c < 0 else ("GT" if c > 0 else "EQ")


class NCPoly:
    """Finite Scalar-linear combination of words over a fixed table."""

    __slots__ = ("table", "terms")

    def __init__(self, table: GenTable, terms: Dict[Word, Scalar]):
        self.table = table
        self.terms = {w: c for w, c in terms.items() if not c.is_zero()}

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero(table) -> "NCPoly":
        return NCPoly(table, {})

    @staticmethod
    def one(table) -> "NCPoly":
        return NCPoly(table, {EMPTY_WORD: sc.ONE})

    @staticmethod
    def constant(table, c: Scalar) -> "NCPoly":
        return NCPoly(table, {EMPTY_WORD: c})

    @staticmethod
    def generator(table, gid: int) -> "NCPoly":
        return NCPoly(table, {(gid,): sc.ONE})

    @staticmethod
    def word(table, w: Word, c: Scalar = sc.ONE) -> "NCPoly":
        return NCPoly(table, {tuple(w): c})

    @staticmethod
    def parse(table, text: str) -> "NCPoly":
        from .exprparse import parse_poly_text

        return parse_poly_text(text, table)

    # -- basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def as_scalar(self) -> Optional[Scalar]:
        """The coefficient of the unit word, or None if non-scalar terms exist."""
        if not self.terms:
            return sc.ZERO
        if len(self.terms) == 1 and EMPTY_WORD in self.terms:
            return self.terms[EMPTY_WORD]
        return None

    def _check(self, other):
        if self.table != other.table:
            raise AlgebraError("mismatched generator tables")

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            nc = out.get(w, sc.ZERO) + c
            if nc.is_zero():
                out.pop(w, None)
            else:
                out[w] = nc
        return NCPoly(self.table, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            nc = out.get(w, sc.ZERO) - c
            if nc.is_zero():
                out.pop(w, None)
            else:
                out[w] = nc
        return NCPoly(self.table, out)

    def __neg__(self):
        return NCPoly(self.table, {w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        self._check(other)
        out: Dict[Word, Scalar] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                nc = out.get(w, sc.ZERO) + c1 * c2
                if nc.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = nc
        return NCPoly(self.table, out)

    def __rmul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: Scalar) -> "NCPoly":
        if c.is_zero():
            return NCPoly.zero(self.table)
        return NCPoly(self.table, {w: cc * c for w, cc in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.table == other.table and self.terms == other.terms

    def __hash__(self):
        return hash((self.table, frozenset(self.terms.items())))

    # -- structure --------------------------------------------------------

    def leading_term(self, ord: MonomialOrder) -> Tuple[Word, Scalar]:
        if not self.terms:
            raise AlgebraError("leading term of the zero polynomial")
        w = max(self.terms, key=ord.key)
        return w, self.terms[w]

    def monic(self, ord: MonomialOrder) -> "NCPoly":
        _, c = self.leading_term(ord)
        return self.scale(sc.ONE / c)

    def substitute_scalars(self, bindings) -> "NCPoly":
        return NCPoly(
            self.table, {w: c.substitute(bindings) for w, c in self.terms.items()}
        )

    def map_words(self, table, fn) -> "NCPoly":
        """Linear extension of a word map fn: Word -> NCPoly over `table`."""
        out = NCPoly.zero(table)
        for w, c in self.terms.items():
            out = out + fn(w).scale(c)
        return out

    def max_word_len(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    # -- rendering --------------------------------------------------------

    def render(self, ord: Optional[MonomialOrder] = None) -> str:
        if not self.terms:
            return "0"
        if ord is None:
            ord = MonomialOrder.default(self.table)
        pieces = []
        for w in sorted(self.terms, key=ord.key, reverse=True):
            c = self.terms[w]
            cs = str(c)
            neg = False
            if cs.startswith("-") and "+" not in cs and " - " not in cs:
                neg = True
                cs = str(-c)
            need_paren = ("+" in cs) or (" - " in cs)
            if need_paren:
                cs = f"({cs})"
            if w == EMPTY_WORD:
                body = cs
            else:
                names = "*".join(self.table.name(g) for g in w)
                body = names if cs == "1" else f"{cs}*{names}"
            if not pieces:
                pieces.append(("-" if neg else "") + body)
            else:
                pieces.append((" - " if neg else " + ") + body)
        return "".join(pieces)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"NCPoly({self.render()})"


def poly_mul(a: NCPoly, b: NCPoly) -> NCPoly:
    return a * b


def leading_term(p: NCPoly, ord: MonomialOrder) -> Tuple[Word, Scalar]:
    return p.leading_term(ord)
