"""Left coaction of the quantum matrices on quantum spaces.

A MixedAlgebra joins a group block (quantum-matrix entries) with a space
block (coordinates or one-forms); cross relations make every group letter
commute with every space letter, and block-sorted normal words carry the
group prefix first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from . import scalar as sc
from .freealg import GenTable, MonomialOrder, NCPoly, Word
from .presentations import (
    Presentation,
    builtin,
    transcribed_T_constraints,
)
from .report import CheckItem, CheckReport
from .rewrite import RewriteSystem, build_rules
from .scalar import Scalar


class CoactionError(Exception):
    pass


class MixedAlgebra:
    """Combined table: space generators first (higher precedence, so they
    migrate to the right of group letters in normal form)."""

    def __init__(self, group: Presentation, space: Presentation):
        if group.matrix is None:
            raise CoactionError(f"{group.name} carries no quantum-matrix structure")
        if space.vector is None:
            raise CoactionError(f"{space.name} is not a space presentation")
        self.group = group
        self.space = space
        names = [f"{n}" for n in space.table.names] + list(group.table.names)
        self.table = GenTable(names)
        self.order = self._mixed_order()
        self.n_space = len(space.table)

    def _mixed_order(self) -> MonomialOrder:
        # space block keeps its own precedence, group block likewise
        space_names = sorted(
            self.space.table.names, key=lambda n: self.space.order.rank[self.space.table.gen(n)]
        )
        group_names = sorted(
            self.group.table.names, key=lambda n: self.group.order.rank[self.group.table.gen(n)]
        )
        return MonomialOrder.from_precedence(self.table, space_names + group_names)

    # -- embeddings -------------------------------------------------------

    def space_gid(self, gid: int) -> int:
        return gid

    def group_gid(self, gid: int) -> int:
        return self.n_space + gid

    def lift_space(self, p: NCPoly) -> NCPoly:
        return NCPoly(
            self.table, {tuple(self.space_gid(g) for g in w): c for w, c in p.terms.items()}
        )

    def lift_group(self, p: NCPoly) -> NCPoly:
        return NCPoly(
            self.table, {tuple(self.group_gid(g) for g in w): c for w, c in p.terms.items()}
        )

    def cross_relations(self) -> List[NCPoly]:
        out = []
        for z in range(len(self.space.table)):
            for g in range(len(self.group.table)):
                zz, gg = self.space_gid(z), self.group_gid(g)
                out.append(
                    NCPoly.word(self.table, (zz, gg))
                    - NCPoly.word(self.table, (gg, zz))
                )
        return out

    def split_word(self, w: Word) -> Tuple[Word, Word]:
        """Block-sorted word -> (group part in group table, space part in
        space table)."""
        g_part, s_part = [], []
        for letter in w:
            if letter < self.n_space:
                s_part.append(letter)
            else:
                g_part.append(letter - self.n_space)
        return tuple(g_part), tuple(s_part)

    # -- the coaction -----------------------------------------------------

    def coact_generator(self, space_gid: int) -> NCPoly:
        row = self.space.vector.index(space_gid)
        out = NCPoly.zero(self.table)
        for col, target in enumerate(self.space.vector):
            ggen = self.group.matrix[row][col]
            if ggen is None:
                continue
            out = out + NCPoly.word(
                self.table, (self.group_gid(ggen), self.space_gid(target))
            )
        return out

    def coact(self, p: NCPoly) -> NCPoly:
        """delta extended multiplicatively to polynomials; result is not
        block-sorted (reduce against cross rules to sort)."""
        if p.table != self.space.table:
            raise CoactionError("polynomial is not over the space generators")

        def image(w: Word) -> NCPoly:
            out = NCPoly.one(self.table)
            for g in w:
                out = out * self.coact_generator(g)
            return out

        return p.map_words(self.table, image)

    def collect_space_coefficients(self, p: NCPoly) -> Dict[Word, NCPoly]:
        """Block-sorted polynomial -> map space word -> group-coefficient."""
        out: Dict[Word, NCPoly] = {}
        for w, c in p.terms.items():
            g_part, s_part = self.split_word(w)
            if any(letter >= self.n_space for letter in s_part):
                raise CoactionError("word not block-sorted")
            cur = out.setdefault(s_part, NCPoly.zero(self.group.table))
            out[s_part] = cur + NCPoly.word(self.group.table, g_part, c)
        return {w: p for w, p in out.items() if not p.is_zero()}


def coact(p: NCPoly, group: Presentation, space: Presentation) -> NCPoly:
    """Block-sorted coaction image of a space polynomial."""
    mixed = MixedAlgebra(group, space)
    sort_sys = build_rules(mixed.cross_relations(), mixed.order, mixed.table)
    return sort_sys.normal_form(mixed.coact(p))


# ---------------------------------------------------------------------------
# comodule checks
# ---------------------------------------------------------------------------

def comodule_residuals(
    space: Presentation, group: Presentation
) -> List[Tuple[NCPoly, NCPoly, MixedAlgebra]]:
    """(space relation, residual of its coaction image, mixed context)."""
    mixed = MixedAlgebra(group, space)
    relations = (
        [mixed.lift_group(r) for r in group.relations]
        + [mixed.lift_space(r) for r in space.relations]
        + mixed.cross_relations()
    )
    joint = build_rules(relations, mixed.order, mixed.table)
    return [
        (rel, joint.normal_form(mixed.coact(rel)), mixed) for rel in space.relations
    ]


def comodule_check(
    space: Presentation,
    group: Presentation,
    suite: Optional[str] = None,
) -> CheckReport:
    """Every space relation must map to zero under the coaction, modulo the
    group relations, the cross relations, and the space relations."""
    suite = suite or f"comodule({space.name},{group.name})"
    items = []
    for rel, residual, mixed in comodule_residuals(space, group):
        items.append(
            CheckItem(
                label=f"coaction preserves {rel.render(space.order)} = 0",
                passed=residual.is_zero(),
                residual=None if residual.is_zero() else residual.render(mixed.order),
            )
        )
    return CheckReport.from_items(suite, items)


def derive_group_constraints(
    space: Presentation, group: Optional[Presentation] = None
) -> List[NCPoly]:
    """Constraints on the (free) quantum-matrix entries forced by invariance
    of the space relations: coact each relation, express it in the basis
    {group word x normal space word}, and return the group coefficients."""
    if group is None:
        group = builtin("TT7")
    mixed = MixedAlgebra(group, space)
    relations = [mixed.lift_space(r) for r in space.relations] + mixed.cross_relations()
    sort_sys = build_rules(relations, mixed.order, mixed.table)
    out: List[NCPoly] = []
    for rel in space.relations:
        sorted_image = sort_sys.normal_form(mixed.coact(rel))
        for _, coeff in sorted(
            mixed.collect_space_coefficients(sorted_image).items()
        ):
            out.append(coeff)
    return [p for p in out if not p.is_zero()]


def quadratic_vectors(polys: List[NCPoly], table: GenTable) -> List[List[Scalar]]:
    """Quadratic polynomials as vectors over the ordered length-2 words."""
    n = len(table)
    out = []
    for p in polys:
        v = [sc.ZERO] * (n * n)
        for w, c in p.terms.items():
            if len(w) != 2:
                raise CoactionError(f"non-quadratic term in {p}")
            v[w[0] * n + w[1]] = c
        out.append(v)
    return out


def constraint_span_check(suite: str = "constraints", bindings=None) -> CheckReport:
    """Derived coordinate-space constraints span exactly the transcribed
    invariance relations (mutual membership, generic q)."""
    from .linalg import span_contains, span_equal

    group = builtin("TT7")
    space = builtin("xspace_generic_q")
    if bindings:
        group = group.substitute(bindings)
        space = space.substitute(bindings)
    derived = derive_group_constraints(space, group)
    transcribed = transcribed_T_constraints(group.table)
    if bindings:
        transcribed = [r.substitute_scalars(bindings) for r in transcribed]
    n = len(group.table) ** 2
    dv = quadratic_vectors(derived, group.table)
    tv = quadratic_vectors(transcribed, group.table)
    items = [
        CheckItem("derived span contains transcribed relations", span_contains(dv, tv, n)),
        CheckItem("transcribed span contains derived relations", span_contains(tv, dv, n)),
    ]
    return CheckReport.from_items(suite, items)


# ---------------------------------------------------------------------------
# the degree-filtered ansatz solver
# ---------------------------------------------------------------------------

#: elimination priority for the one-form ansatz unknowns
ANSATZ_UNKNOWNS = ("k", "lam12", "mu12", "c21", "lam", "mu")


@dataclass
class ConstraintSystem:
    """Solved form of the invariance conditions on an ansatz.

    ``equations`` keeps the raw (label, value) pairs before elimination;
    ``solved`` maps unknown -> pinned Scalar value; anything that would not
    eliminate stays in ``residual``.  ``witnesses`` lists coefficients that
    reduced to a nonzero constant: a nonempty list means no choice of the
    unknowns makes the space a comodule.
    """

    ansatz: str
    equations: List[Tuple[str, Scalar]] = field(default_factory=list)
    solved: Dict[str, Scalar] = field(default_factory=dict)
    residual: List[Tuple[str, Scalar]] = field(default_factory=list)
    witnesses: List[str] = field(default_factory=list)

    @property
    def inconsistent(self) -> bool:
        return bool(self.witnesses)

    def render(self) -> str:
        lines = [f"ansatz {self.ansatz}:"]
        if self.inconsistent:
            lines.append("  inconsistent; no solution exists")
            for w in self.witnesses:
                lines.append(f"  witness: {w}")
            return "\n".join(lines)
        for name, value in self.solved.items():
            lines.append(f"  {name} = {value}")
        for label, value in self.residual:
            lines.append(f"  unresolved: {value} = 0   [{label}]")
        if len(lines) == 1:
            lines.append("  no constraints")
        return "\n".join(lines)


def _unknowns_in(x: Scalar) -> List[str]:
    used = x.params_used()
    return [name for name in ANSATZ_UNKNOWNS if name in used]


def _reduce_mod_span(
    p: NCPoly, rows: List[NCPoly], order: MonomialOrder
) -> NCPoly:
    """Reduce against an interreduced list of monic relations (linear
    elimination on the quadratic words; terminates since leading words
    strictly drop)."""
    leads = {}
    for r in rows:
        w, c = r.leading_term(order)
        leads[w] = r.scale(sc.ONE / c)
    changed = True
    while changed and not p.is_zero():
        changed = False
        for w, c in list(p.terms.items()):
            r = leads.get(w)
            if r is not None:
                p = p - r.scale(c)
                changed = True
    return p


def ansatz_bucket_equations(
    ansatz: Presentation, group: Presentation
) -> List[Tuple[str, Scalar]]:
    """One scalar equation per surviving basis word: coact each template,
    normal-order the one-form part against the ansatz itself, split the
    quantum-matrix coefficients by degree, and reduce each bucket against
    the group relations.  Whatever survives must vanish identically."""
    if group.degree is None:
        raise CoactionError(f"{group.name} carries no degree grading")
    mixed = MixedAlgebra(group, ansatz)
    sort_rels = [mixed.lift_space(r) for r in ansatz.relations] + mixed.cross_relations()
    sort_sys = build_rules(sort_rels, mixed.order, mixed.table)
    from .rewrite import interreduce_relations

    rows = interreduce_relations(group.relations, group.order)
    equations: List[Tuple[str, Scalar]] = []
    for rel in ansatz.relations:
        template = rel.render(ansatz.order)
        image = sort_sys.normal_form(mixed.coact(rel))
        for sword, coeff in sorted(mixed.collect_space_coefficients(image).items()):
            sname = "*".join(ansatz.table.name(g) for g in sword)
            buckets: Dict[int, NCPoly] = {}
            for w, c in coeff.terms.items():
                d = sum(group.degree[g] for g in w)
                cur = buckets.setdefault(d, NCPoly.zero(group.table))
                buckets[d] = cur + NCPoly.word(group.table, w, c)
            for d in sorted(buckets):
                reduced = _reduce_mod_span(buckets[d], rows, group.order)
                for w, c in sorted(reduced.terms.items()):
                    wname = "*".join(group.table.name(g) for g in w)
                    label = (
                        f"coact({template}): coefficient of {wname} (x) {sname}"
                        f" at degree {d}"
                    )
                    equations.append((label, c))
    return equations


def _eliminate(
    equations: List[Tuple[str, Scalar]]
) -> Tuple[Dict[str, Scalar], List[Tuple[str, Scalar]], List[str]]:
    """Deterministic elimination: repeatedly solve equations that are linear
    in a single unknown (priority order ANSATZ_UNKNOWNS) and substitute."""
    pending = [(label, c) for label, c in equations if not c.is_zero()]
    solved: Dict[str, Scalar] = {}
    progress = True
    while progress:
        progress = False
        for target in ANSATZ_UNKNOWNS:
            if target in solved:
                continue
            for label, c in pending:
                if _unknowns_in(c) != [target]:
                    continue
                const = c.substitute({target: 0})
                slope = c.substitute({target: 1}) - const
                if slope.is_zero() or _unknowns_in(slope) or _unknowns_in(const):
                    continue  # not linear in the target alone
                solved[target] = -const / slope
                new_pending = []
                for lab2, c2 in pending:
                    c2 = c2.substitute({target: solved[target]})
                    if not c2.is_zero():
                        new_pending.append((lab2, c2))
                pending = new_pending
                progress = True
                break
            if progress:
                break
    witnesses = [
        f"{label}: residual {c}" for label, c in pending if not _unknowns_in(c)
    ]
    residual = [(label, c) for label, c in pending if _unknowns_in(c)]
    return solved, residual, witnesses


def ansatz_solve(
    ansatz: Presentation, group: Optional[Presentation] = None, bindings=None
) -> ConstraintSystem:
    """Solve the invariance conditions on an ansatz of quadratic one-form
    relations with unknown coefficients: every degree bucket of every
    coacted template must vanish modulo the group relations."""
    if group is None:
        group = builtin("TT7")
    if bindings:
        group = group.substitute(bindings)
        ansatz = ansatz.substitute(bindings)
    equations = ansatz_bucket_equations(ansatz, group)
    solved, residual, witnesses = _eliminate(equations)
    ordered = {n: solved[n] for n in ANSATZ_UNKNOWNS if n in solved}
    return ConstraintSystem(
        ansatz=ansatz.name,
        equations=equations,
        solved=ordered,
        residual=residual,
        witnesses=witnesses,
    )


def pin_free_coefficients(
    group: Optional[Presentation] = None, suite: str = "ansatz-pin", bindings=None
) -> Tuple[Dict[str, Scalar], CheckReport]:
    """Re-derive the one-form structure constants independently: substitute
    the forced zeros into the ansatz, pin the rest from the comodule
    residual equations, and confirm the pinned system is confluent and
    spans the built-in one-form relations."""
    from .linalg import span_equal
    from .rewrite import diamond_check

    if group is None:
        group = builtin("TT7")
    base = builtin("ansatz_xi").substitute({"k": 0, "lam12": 0, "mu12": 0})
    if bindings:
        group = group.substitute(bindings)
        base = base.substitute(bindings)
    equations = []
    for rel, residualp, mixed in comodule_residuals(base, group):
        template = rel.render(base.order)
        for w, c in sorted(residualp.terms.items()):
            wname = "*".join(mixed.table.name(g) for g in w)
            equations.append((f"coact({template}): coefficient of {wname}", c))
    pins, residual, witnesses = _eliminate(equations)
    items = [
        CheckItem(
            "comodule residual equations eliminate completely",
            not residual and not witnesses,
        )
    ]
    for name in ("c21", "lam", "mu"):
        items.append(
            CheckItem(
                f"pinned {name} = {pins[name]}" if name in pins else f"{name} unpinned",
                name in pins,
            )
        )
    if all(i.passed for i in items):
        pinned = base.substitute({n: v for n, v in pins.items()})
        xis = builtin("xispace")
        if bindings:
            xis = xis.substitute(bindings)
        n = len(xis.table)
        def to_xis(p: NCPoly) -> NCPoly:
            return p.map_words(
                xis.table,
                lambda w: NCPoly.word(
                    xis.table, tuple(xis.table.gen(pinned.table.name(g)) for g in w)
                ),
            )

        pv = quadratic_vectors([to_xis(p) for p in pinned.relations], xis.table)
        xv = quadratic_vectors(xis.relations, xis.table)
        items.append(
            CheckItem(
                "pinned relation span equals the built-in one-form relations",
                span_equal(pv, xv, n * n),
            )
        )
        joint = diamond_check(
            build_rules(xis.relations, xis.order, xis.table), suite="xi-diamond"
        )
        items.append(CheckItem("pinned one-form system is confluent", joint.ok))
        mixed_rep = comodule_check(pinned, group)
        items.append(CheckItem("pinned ansatz is a comodule", mixed_rep.ok))
    return pins, CheckReport.from_items(suite, items)


def degree_bucket(
    p: NCPoly, mixed: MixedAlgebra, grading: Optional[Dict[int, int]] = None
) -> Dict[int, NCPoly]:
    """Partition a block-sorted mixed polynomial by the degree of its group
    prefix; the buckets sum back to the input."""
    grading = grading if grading is not None else mixed.group.degree
    if grading is None:
        raise CoactionError("no grading available")
    out: Dict[int, NCPoly] = {}
    for w, c in p.terms.items():
        g_part, _ = mixed.split_word(w)
        d = sum(grading[g] for g in g_part)
        cur = out.setdefault(d, NCPoly.zero(p.table))
        out[d] = cur + NCPoly.word(p.table, w, c)
    return {d: q for d, q in out.items() if not q.is_zero()}


def ansatz_check(suite: str = "ansatz", bindings=None) -> CheckReport:
    """Suite wrapper for the degree-filtered ansatz analysis: the general
    one-form ansatz forces its three obstruction coefficients to zero, the
    variant keeping the square of the third one-form independent is
    impossible, and the remaining structure constants pin to the built-in
    one-form presentation."""
    system = ansatz_solve(builtin("ansatz_xi"), bindings=bindings)
    zero_names = ("k", "lam12", "mu12")
    items = [
        CheckItem(
            f"general ansatz solves with {name} = 0",
            name in system.solved and system.solved[name].is_zero(),
        )
        for name in zero_names
    ]
    items.append(
        CheckItem("general ansatz is consistent", not system.inconsistent)
    )
    variant = ansatz_solve(builtin("ansatz_xi3sq_variant"), bindings=bindings)
    witness = next(
        (w for w in variant.witnesses if "xi3*xi3" in w and "degree 0" in w),
        None,
    )
    items.append(
        CheckItem(
            "variant with an independent square of the third one-form is"
            " impossible",
            variant.inconsistent,
            residual=witness,
        )
    )
    _, pin_report = pin_free_coefficients(bindings=bindings)
    items.extend(pin_report.items)
    return CheckReport.from_items(suite, items)
