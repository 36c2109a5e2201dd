"""The invariant differential calculus: cross-relations among variables,
one-forms, and derivatives generated from the deformation matrix, joint
confluence, and evaluation of derivatives on normal-ordered monomials.

Normal words are block-sorted one-forms, then variables, then derivatives;
the derivative/variable exchange rule is the unique inhomogeneous one (it
carries the Kronecker term), so reducing a derivative against a polynomial
in the variables performs differentiation.
"""

from __future__ import annotations

from typing import Dict, List, Optional

from . import scalar as sc
from .freealg import GenTable, MonomialOrder, NCPoly, Word
from .linalg import ScalarMatrix, pair_to_lin, rhat_builtin
from .presentations import Presentation, builtin
from .report import CheckItem, CheckReport
from .rewrite import RewriteSystem, build_rules, diamond_check
from .scalar import Scalar


class DiffCalcError(Exception):
    pass


_D_GENS = ["d1", "d2", "d3"]
_X_GENS = ["x1", "x2", "x3"]
_XI_GENS = ["xi1", "xi2", "xi3"]

#: grading on the calculus, dual between variables and derivatives
WZ_DEGREES = {
    "x1": 1, "x2": -1, "x3": 0,
    "xi1": 1, "xi2": -1, "xi3": 0,
    "d1": -1, "d2": 1, "d3": 0,
}


def _involution_guard(R: ScalarMatrix):
    if not (R * R - ScalarMatrix.identity(9)).is_zero():
        raise DiffCalcError(
            "the deformation matrix must be involutive (its inverse is itself)"
        )


def wz_relations(
    R: Optional[ScalarMatrix] = None, generic_q: bool = False, bindings=None
) -> Presentation:
    """The full three-block presentation: variable relations, one-form
    relations, and the 27 cross-relations
        x^k xi^l = R^{kl}_{mn} xi^m x^n
        d_k xi^l = R^{lm}_{kn} xi^n d_m      (the matrix is its own inverse)
        d_l x^k  = delta^k_l + R^{km}_{ln} x^n d_m
    oriented so one-forms sort left, derivatives right."""
    if R is None:
        R = rhat_builtin()
    if bindings:
        R = R.substitute(bindings)
    _involution_guard(R)
    table = GenTable(_D_GENS + _X_GENS + _XI_GENS)
    order = MonomialOrder.default(table)

    def gen(name: str) -> NCPoly:
        return NCPoly.word(table, (table.gen(name),))

    def lift(p: NCPoly, src: GenTable) -> NCPoly:
        return NCPoly(
            table,
            {tuple(table.gen(src.name(g)) for g in w): c for w, c in p.terms.items()},
        )

    xspace = builtin("xspace_generic_q" if generic_q else "xspace")
    xispace = builtin("xispace")
    if bindings:
        xspace = xspace.substitute(bindings)
        xispace = xispace.substitute(bindings)
    rels: List[NCPoly] = [lift(r, xspace.table) for r in xspace.relations]
    rels += [lift(r, xispace.table) for r in xispace.relations]

    for k in (1, 2, 3):
        for l in (1, 2, 3):
            # x^k xi^l - R^{kl}_{mn} xi^m x^n
            rel = gen(f"x{k}") * gen(f"xi{l}")
            for m in (1, 2, 3):
                for n in (1, 2, 3):
                    c = R[pair_to_lin(k, l), pair_to_lin(m, n)]
                    if not c.is_zero():
                        rel = rel - (gen(f"xi{m}") * gen(f"x{n}")).scale(c)
            rels.append(rel)
            # d_k xi^l - R^{lm}_{kn} xi^n d_m
            rel = gen(f"d{k}") * gen(f"xi{l}")
            for m in (1, 2, 3):
                for n in (1, 2, 3):
                    c = R[pair_to_lin(l, m), pair_to_lin(k, n)]
                    if not c.is_zero():
                        rel = rel - (gen(f"xi{n}") * gen(f"d{m}")).scale(c)
            rels.append(rel)
            # d_l x^k - delta^k_l - R^{km}_{ln} x^n d_m
            rel = gen(f"d{l}") * gen(f"x{k}")
            if k == l:
                rel = rel - NCPoly.one(table)
            for m in (1, 2, 3):
                for n in (1, 2, 3):
                    c = R[pair_to_lin(k, m), pair_to_lin(l, n)]
                    if not c.is_zero():
                        rel = rel - (gen(f"x{n}") * gen(f"d{m}")).scale(c)
            rels.append(rel)

    params = frozenset().union(
        *[c.params_used() for r in rels for c in r.terms.values()]
    ) | {"u", "s"}
    degree = {table.gen(n): d for n, d in WZ_DEGREES.items()}
    return Presentation(
        name="wz_generic_q" if generic_q else "wz",
        table=table,
        params=params,
        relations=rels,
        order=order,
        degree=None if generic_q else degree,
    )


_CACHE: Dict[str, object] = {}


def wz_system(generic_q: bool = False, bindings=None) -> RewriteSystem:
    if bindings:
        pres = wz_relations(generic_q=generic_q, bindings=bindings)
        return build_rules(pres.relations, pres.order, pres.table)
    key = f"wz:{generic_q}"
    if key not in _CACHE:
        pres = wz_relations(generic_q=generic_q)
        _CACHE[key] = build_rules(pres.relations, pres.order, pres.table)
    return _CACHE[key]


def wz_confluence(
    generic_q: bool = False, suite: str = "diffcalc", bindings=None
) -> CheckReport:
    """Diamond check of the combined three-block system.  No rule has a
    derivative letter in second position, so no derivative/derivative
    ambiguity ever forms; the check covers every overlap that exists."""
    system = wz_system(generic_q=generic_q, bindings=bindings)
    return diamond_check(system, suite=suite)


def _x_table() -> GenTable:
    return builtin("xspace").table


def apply_derivative(i: int, p: NCPoly, bindings=None) -> NCPoly:
    """The action of the i-th derivative on a polynomial in the variables:
    reduce derivative times polynomial in the full calculus, then drop the
    terms where the derivative letter survives (it acts as zero on 1)."""
    if i not in (1, 2, 3):
        raise DiffCalcError(f"derivative index must be 1..3, got {i}")
    system = wz_system(bindings=bindings)
    table = system.table
    xsrc = p.table
    lifted = NCPoly(
        table,
        {
            tuple(table.gen(xsrc.name(g)) for g in w): c
            for w, c in p.terms.items()
        },
    )
    image = system.normal_form(NCPoly.word(table, (table.gen(f"d{i}"),)) * lifted)
    d_gids = {table.gen(n) for n in _D_GENS}
    xi_gids = {table.gen(n) for n in _XI_GENS}
    out = NCPoly.zero(xsrc)
    for w, c in image.terms.items():
        if any(g in d_gids for g in w):
            continue
        if any(g in xi_gids for g in w):
            raise DiffCalcError("one-form letter appeared while differentiating")
        out = out + NCPoly.word(xsrc, tuple(xsrc.gen(table.name(g)) for g in w), c)
    return out


def twisted_leibniz_check(
    suite: str = "twisted-leibniz", seed: int = 0, samples: int = 20, bindings=None
) -> CheckReport:
    """The derivative action is well-defined on the quotient: acting on a
    product before or after normal-ordering it gives the same result, and
    every variable relation is annihilated."""
    import random

    rng = random.Random(seed)
    xspace = builtin("xspace")
    if bindings:
        xspace = xspace.substitute(bindings)
    xsys = build_rules(xspace.relations, xspace.order, xspace.table)
    items = []
    for rel in xspace.relations:
        for i in (1, 2, 3):
            out = apply_derivative(i, rel, bindings=bindings)
            ok = xsys.normal_form(out).is_zero()
            items.append(
                CheckItem(
                    f"derivative {i} annihilates relation {rel.render(xspace.order)}",
                    ok,
                    residual=None if ok else out.render(xspace.order),
                )
            )
    for _ in range(samples):
        wlen = rng.randint(0, 3)
        word = tuple(rng.randrange(3) for _ in range(wlen))
        i = rng.randint(1, 3)
        p = NCPoly.word(xspace.table, word)
        via_raw = apply_derivative(i, p, bindings=bindings)
        via_nf = apply_derivative(i, xsys.normal_form(p), bindings=bindings)
        ok = xsys.normal_form(via_raw - via_nf).is_zero()
        items.append(
            CheckItem(
                f"derivative {i} on {'1' if not word else p.render(xspace.order)}:"
                " raw and normal-ordered representatives agree",
                ok,
            )
        )
    return CheckReport.from_items(suite, items)


def classical_derivative(i: int, p: NCPoly) -> NCPoly:
    """Ordinary partial differentiation of a commutative monomial sum,
    computed term by term on noncommutative words."""
    table = p.table
    target = table.gen(f"x{i}")
    out = NCPoly.zero(table)
    for w, c in p.terms.items():
        for pos, g in enumerate(w):
            if g == target:
                out = out + NCPoly.word(table, w[:pos] + w[pos + 1:], c)
    return out
