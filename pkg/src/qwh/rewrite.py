"""Oriented rewriting in the free algebra: normal forms, overlap
enumeration, diamond-lemma confluence checks, bounded completion."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from . import scalar as sc
from .freealg import AlgebraError, GenTable, MonomialOrder, NCPoly, Word
from .report import CheckItem, CheckReport


class RewriteError(Exception):
    pass


@dataclass(frozen=True)
class RewriteRule:
    lhs: Word
    rhs: NCPoly  # every word strictly smaller than lhs; lhs coefficient 1


@dataclass(frozen=True)
class Overlap:
    rule_a: int
    rule_b: int
    word: Word
    pos_a: int  # position of lhs_a inside word
    pos_b: int


class RewriteSystem:
    def __init__(self, table: GenTable, order: MonomialOrder, rules: List[RewriteRule]):
        self.table = table
        self.order = order
        self.rules = list(rules)
        self._by_first: Dict[int, List[int]] = {}
        for i, r in enumerate(self.rules):
            self._by_first.setdefault(r.lhs[0], []).append(i)

    def __len__(self):
        return len(self.rules)

    # -- matching ---------------------------------------------------------

    def _match_at(self, w: Word, pos: int) -> Optional[int]:
        """Longest-lhs rule matching w at pos (ties broken by rule index)."""
        best = None
        best_len = -1
        for i in self._by_first.get(w[pos], ()):
            lhs = self.rules[i].lhs
            n = len(lhs)
            if pos + n <= len(w) and w[pos : pos + n] == lhs and n > best_len:
                best, best_len = i, n
        return best

    def find_redex(self, w: Word) -> Optional[Tuple[int, int]]:
        """Leftmost-outermost redex: (position, rule index) or None."""
        for pos in range(len(w)):
            i = self._match_at(w, pos)
            if i is not None:
                return pos, i
        return None

    def rewrite_word_once(self, w: Word, pos: int, rule_idx: int) -> NCPoly:
        rule = self.rules[rule_idx]
        prefix, suffix = w[:pos], w[pos + len(rule.lhs) :]
        out = NCPoly.zero(self.table)
        for rw, rc in rule.rhs.terms.items():
            out = out + NCPoly.word(self.table, prefix + rw + suffix, rc)
        return out

    def normal_form(self, p: NCPoly, rightmost: bool = False) -> NCPoly:
        """Exhaustive reduction; leftmost-outermost by default.

        Terminates because every rule strictly decreases the deg-lex order.
        """
        if p.table != self.table:
            raise AlgebraError("polynomial over a different generator table")
        out: Dict[Word, sc.Scalar] = {}
        work: List[Tuple[Word, sc.Scalar]] = list(p.terms.items())
        while work:
            w, c = work.pop()
            if c.is_zero():
                continue
            m = self._find(w, rightmost)
            if m is None:
                nc = out.get(w, sc.ZERO) + c
                if nc.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = nc
            else:
                pos, i = m
                rule = self.rules[i]
                prefix, suffix = w[:pos], w[pos + len(rule.lhs) :]
                for rw, rc in rule.rhs.terms.items():
                    work.append((prefix + rw + suffix, c * rc))
        return NCPoly(self.table, out)

    def _find(self, w, rightmost):
        if not rightmost:
            return self.find_redex(w)
        for pos in range(len(w) - 1, -1, -1):
            i = self._match_at(w, pos)
            if i is not None:
                return pos, i
        return None

    def is_normal_word(self, w: Word) -> bool:
        return self.find_redex(w) is None


def normal_form(p: NCPoly, sys: RewriteSystem) -> NCPoly:
    return sys.normal_form(p)


# ---------------------------------------------------------------------------
# building systems from relation lists
# ---------------------------------------------------------------------------

def interreduce_relations(
    relations: List[NCPoly], order: MonomialOrder
) -> List[NCPoly]:
    """Gaussian elimination on the Scalar-linear span of the relations.

    Returns monic polynomials with pairwise distinct leading words; any
    word that is some pivot's leading word occurs in no other row.
    """
    pivots: Dict[Word, NCPoly] = {}

    def reduce_row(p: NCPoly) -> NCPoly:
        changed = True
        while changed:
            changed = False
            for w in list(p.terms):
                piv = pivots.get(w)
                if piv is not None:
                    p = p - piv.scale(p.terms[w])
                    changed = True
        return p

    for rel in relations:
        p = reduce_row(rel)
        if p.is_zero():
            continue
        lw, lc = p.leading_term(order)
        p = p.scale(sc.ONE / lc)
        # eliminate the new pivot word from existing rows
        for w, piv in list(pivots.items()):
            if lw in piv.terms:
                pivots[w] = piv - p.scale(piv.terms[lw])
        pivots[lw] = p
    return [pivots[w] for w in sorted(pivots, key=order.key, reverse=True)]


def build_rules(
    relations: List[NCPoly],
    order: MonomialOrder,
    table: Optional[GenTable] = None,
) -> RewriteSystem:
    """Orient a relation span into a rewrite system with inter-reduced rhs."""
    if table is None:
        if not relations:
            raise RewriteError("need a table for an empty relation list")
        table = relations[0].table
    for r in relations:
        if r.table != table:
            raise AlgebraError("mismatched generator tables")
    rows = interreduce_relations([r for r in relations if not r.is_zero()], order)
    for p in rows:
        lw, _ = p.leading_term(order)
        if lw == ():
            raise RewriteError("inconsistent presentation: ideal contains the unit")
    rules = []
    for p in rows:
        lw, _ = p.leading_term(order)
        rhs = NCPoly.word(table, lw) - p
        rules.append(RewriteRule(lw, rhs))
    sys = RewriteSystem(table, order, rules)
    return _interreduce_rhs(sys)


def _interreduce_rhs(sys: RewriteSystem) -> RewriteSystem:
    """Normalize every rhs against the full system until stable."""
    rules = list(sys.rules)
    for _ in range(100):
        cur = RewriteSystem(sys.table, sys.order, rules)
        new_rules = []
        changed = False
        for r in rules:
            nf = cur.normal_form(r.rhs)
            if nf.terms != r.rhs.terms:
                changed = True
            new_rules.append(RewriteRule(r.lhs, nf))
        rules = new_rules
        if not changed:
            return RewriteSystem(sys.table, sys.order, rules)
    raise RewriteError("rhs inter-reduction did not stabilize")


# ---------------------------------------------------------------------------
# overlaps and confluence
# ---------------------------------------------------------------------------

def overlaps(sys: RewriteSystem) -> List[Overlap]:
    out = []
    rules = sys.rules
    for a, ra in enumerate(rules):
        for b, rb in enumerate(rules):
            la, lb = ra.lhs, rb.lhs
            # proper overlap: nonempty suffix of la = prefix of lb
            max_k = min(len(la), len(lb))
            for k in range(1, max_k):
                if la[len(la) - k :] == lb[:k]:
                    word = la + lb[k:]
                    out.append(Overlap(a, b, word, 0, len(la) - k))
            # containment: lb strictly inside la
            if a != b and len(lb) < len(la):
                for pos in range(len(la) - len(lb) + 1):
                    if la[pos : pos + len(lb)] == lb:
                        out.append(Overlap(a, b, la, 0, pos))
    # deterministic order
    out.sort(key=lambda o: (sys.order.key(o.word), o.rule_a, o.rule_b, o.pos_b))
    return out


def overlap_residual(sys: RewriteSystem, ov: Overlap) -> NCPoly:
    p1 = sys.rewrite_word_once(ov.word, ov.pos_a, ov.rule_a)
    p2 = sys.rewrite_word_once(ov.word, ov.pos_b, ov.rule_b)
    return sys.normal_form(p1) - sys.normal_form(p2)


def _overlap_label(sys: RewriteSystem, ov: Overlap) -> str:
    word = "*".join(sys.table.name(g) for g in ov.word)
    return f"overlap {word} (rules {ov.rule_a},{ov.rule_b})"


def diamond_check(sys: RewriteSystem, suite: str = "diamond") -> CheckReport:
    items = []
    for ov in overlaps(sys):
        res = overlap_residual(sys, ov)
        items.append(
            CheckItem(
                label=_overlap_label(sys, ov),
                passed=res.is_zero(),
                residual=None if res.is_zero() else res.render(sys.order),
            )
        )
    return CheckReport.from_items(suite, items)


@dataclass
class CompletionFailure:
    system: RewriteSystem
    pending: List[Overlap]  # overlaps not resolvable within the bound

    @property
    def ok(self):
        return False


def complete(sys: RewriteSystem, max_word_len: int):
    """Bounded Knuth-Bendix style completion.

    Returns a confluent RewriteSystem, or a CompletionFailure carrying the
    overlaps that could not be processed within the word-length bound.
    """
    if max_word_len < 3:
        raise RewriteError("max_word_len must be at least 3")
    cur = sys
    for _ in range(200):
        pending: List[Overlap] = []
        new_relations: List[NCPoly] = []
        for ov in overlaps(cur):
            if len(ov.word) > max_word_len:
                pending.append(ov)
                continue
            res = overlap_residual(cur, ov)
            if not res.is_zero():
                new_relations.append(res)
        if not new_relations:
            if pending:
                return CompletionFailure(cur, pending)
            return cur
        all_rel = [
            NCPoly.word(cur.table, r.lhs) - r.rhs for r in cur.rules
        ] + new_relations
        nxt = build_rules(all_rel, cur.order, cur.table)
        if any(len(r.lhs) > max_word_len for r in nxt.rules):
            bad = [o for o in overlaps(nxt) if len(o.word) > max_word_len]
            return CompletionFailure(nxt, bad)
        cur = nxt
    raise RewriteError("completion did not stabilize")
