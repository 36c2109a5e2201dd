"""Built-in algebra presentations, the presentation DSL, and the degree map."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from . import scalar as sc
from .exprparse import ParseError, SourceSpan, parse_poly_text
from .freealg import GenTable, MonomialOrder, NCPoly, Word
from .rewrite import RewriteSystem, build_rules


class PresentationError(Exception):
    pass


@dataclass
class Presentation:
    name: str
    table: GenTable
    params: frozenset
    relations: List[NCPoly]
    order: MonomialOrder
    degree: Optional[Dict[int, int]] = None
    # 3x3 grid of generator ids (None = entry forced to zero) for quantum
    # matrices; `vector` lists the space generators in coaction order
    matrix: Optional[Tuple[Tuple[Optional[int], ...], ...]] = None
    vector: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        for r in self.relations:
            used = set()
            for c in r.terms.values():
                used |= c.params_used()
            extra = used - set(self.params)
            if extra:
                raise PresentationError(
                    f"{self.name}: relation uses undeclared parameters {sorted(extra)}"
                )
        if self.degree is not None:
            for r in self.relations:
                check_homogeneous(r, self.degree, self.name)

    def rewrite_system(self) -> RewriteSystem:
        return build_rules(self.relations, self.order, self.table)

    def substitute(self, bindings, name=None) -> "Presentation":
        return Presentation(
            name=name or self.name,
            table=self.table,
            params=self.params,
            relations=[r.substitute_scalars(bindings) for r in self.relations],
            order=self.order,
            degree=self.degree,
            matrix=self.matrix,
            vector=self.vector,
        )

    def parse(self, text: str) -> NCPoly:
        return NCPoly.parse(self.table, text)


def check_homogeneous(p: NCPoly, degree: Dict[int, int], where="relation"):
    degs = sorted({sum(degree[g] for g in w) for w in p.terms})
    if len(degs) > 1:
        raise PresentationError(
            f"{where}: relation {p} is not degree-homogeneous (degrees {degs})"
        )


def degree_of(x, pres: Presentation) -> int:
    """Degree of a word or homogeneous polynomial under the presentation's
    grading; the grading is additive over concatenation."""
    if pres.degree is None:
        raise PresentationError(f"{pres.name} carries no degree map")
    if isinstance(x, tuple):
        return sum(pres.degree[g] for g in x)
    assert isinstance(x, NCPoly)
    if x.is_zero():
        raise PresentationError("degree of the zero polynomial is undefined")
    degs = sorted({sum(pres.degree[g] for g in w) for w in x.terms})
    if len(degs) > 1:
        raise PresentationError(f"inhomogeneous polynomial; degrees found: {degs}")
    return degs[0]


# ---------------------------------------------------------------------------
# built-in presentations
# ---------------------------------------------------------------------------

_X_GENS = ["x1", "x2", "x3"]
_XI_GENS = ["xi1", "xi2", "xi3"]
T_GENS = ["T11", "T12", "T13", "T21", "T22", "T23", "T33"]
t_GENS = ["t11", "t12", "t13", "t21", "t22", "t23", "t31", "t32", "t33"]

T_DEGREES = {"T11": 0, "T12": 2, "T13": 1, "T21": -2, "T22": 0, "T23": -1, "T33": 0}


def _pres(
    name,
    gens,
    params,
    rel_texts,
    degree_by_name=None,
    matrix=None,
    vector=None,
    precedence=None,
):
    table = GenTable(gens)
    rels = [NCPoly.parse(table, t) for t in rel_texts]
    degree = None
    if degree_by_name is not None:
        degree = {table.gen(n): d for n, d in degree_by_name.items()}
    mat = None
    if matrix is not None:
        mat = tuple(
            tuple(None if n is None else table.gen(n) for n in row) for row in matrix
        )
    vec = None
    if vector is not None:
        vec = tuple(table.gen(n) for n in vector)
    order = (
        MonomialOrder.default(table)
        if precedence is None
        else MonomialOrder.from_precedence(table, precedence)
    )
    return Presentation(
        name=name,
        table=table,
        params=frozenset(params),
        relations=rels,
        order=order,
        degree=degree,
        matrix=mat,
        vector=vec,
    )


def _t_matrix(prefix):
    return [[f"{prefix}{i}{j}" for j in (1, 2, 3)] for i in (1, 2, 3)]


_T7_MATRIX = [
    ["T11", "T12", "T13"],
    ["T21", "T22", "T23"],
    [None, None, "T33"],
]

_TT7_RELS = [
    "T11*T12 - u^(-2)*T12*T11",
    "T11*T13 - u^(-1)*T13*T11",
    "T11*T22 - T22*T11",
    "T11*T21 - u^2*T21*T11",
    "T11*T23 - u*T23*T11",
    "T11*T33 - T33*T11",
    "T12*T13 - u*T13*T12",
    "T12*T22 - u^2*T22*T12",
    "T12*T21 - u^4*T21*T12",
    "T12*T23 - u^3*T23*T12",
    "T12*T33 - u^2*T33*T12",
    "T13*T22 - u*T22*T13",
    "T13*T21 - u^3*T21*T13",
    "T13*T33 - u*T33*T13",
    "T22*T21 - u^2*T21*T22",
    "T22*T23 - u*T23*T22",
    "T22*T33 - T33*T22",
    "T21*T23 - u^(-1)*T23*T21",
    "T21*T33 - u^(-2)*T33*T21",
    "T23*T33 - u^(-1)*T33*T23",
    "T13*T23 - u^2*T23*T13 + s*(T11*T22 - u^2*T21*T12 - T33*T33)",
]

_TDINV_RELS = [
    "T11*Dinv - Dinv*T11",
    "T12*Dinv - u^(-6)*Dinv*T12",
    "T13*Dinv - u^(-3)*Dinv*T13",
    "T22*Dinv - Dinv*T22",
    "T21*Dinv - u^6*Dinv*T21",
    "T23*Dinv - u^3*Dinv*T23",
    "T33*Dinv - Dinv*T33",
]

# commutation of the nine-generator determinant inverse; the t21 and t23
# factors are the derived ones (they also restrict correctly to the
# seven-generator table under the subalgebra embedding)
_tdinv_RELS = [
    "t11*dinv - dinv*t11",
    "t12*dinv - u^(-6)*dinv*t12",
    "t13*dinv - u^(-3)*dinv*t13",
    "t22*dinv - dinv*t22",
    "t21*dinv - u^6*dinv*t21",
    "t23*dinv - u^3*dinv*t23",
    "t31*dinv - u^3*dinv*t31",
    "t32*dinv - u^(-3)*dinv*t32",
    "t33*dinv - dinv*t33",
]

_ANSATZ_RELS = [
    "xi1*xi1",
    "xi2*xi2",
    "xi3*xi3 - k*xi1*xi2",
    "xi2*xi1 - c21*xi1*xi2",
    "xi3*xi1 - lam*xi1*xi3 - lam12*xi1*xi2",
    "xi3*xi2 - mu*xi2*xi3 - mu12*xi1*xi2",
]

# variant with xi1*xi2 = 0 and (xi3)^2 kept independent; the degree
# analysis pares the general coefficients down to this shape
_ANSATZ_VARIANT_RELS = [
    "xi1*xi1",
    "xi2*xi2",
    "xi1*xi2",
    "xi2*xi1",
    "xi3*xi1 - lam*xi1*xi3",
    "xi3*xi2 - mu*xi2*xi3",
]

BUILTIN_NAMES = (
    "classical_R",
    "xspace",
    "xispace",
    "TT7",
    "TDinv",
    "tdinv",
    "xspace_generic_q",
    "ansatz_xi",
    "ansatz_xi3sq_variant",
)


def builtin(name: str) -> Presentation:
    """The built-in algebra presentations, loaded from fixed literal data.

    `xspace` carries the derived constraint q=u^2 baked in; use
    `xspace_generic_q` to keep q independent and exhibit the obstruction.
    """
    if name == "classical_R":
        return _pres(
            name,
            _X_GENS,
            {"s"},
            [
                "x1*x2 - x2*x1 - s*x3*x3",
                "x1*x3 - x3*x1",
                "x2*x3 - x3*x2",
            ],
            vector=_X_GENS,
        )
    if name == "xspace":
        return _pres(
            name,
            _X_GENS,
            {"u", "s"},
            [
                "x1*x2 - u^2*x2*x1 - s*x3*x3",
                "x1*x3 - u*x3*x1",
                "x2*x3 - u^(-1)*x3*x2",
            ],
            vector=_X_GENS,
        )
    if name == "xspace_generic_q":
        return _pres(
            name,
            _X_GENS,
            {"u", "s", "q"},
            [
                "x1*x2 - q*x2*x1 - s*x3*x3",
                "x1*x3 - u*x3*x1",
                "x2*x3 - u^(-1)*x3*x2",
            ],
            vector=_X_GENS,
        )
    if name == "xispace":
        return _pres(
            name,
            _XI_GENS,
            {"u"},
            [
                "xi1*xi1",
                "xi2*xi2",
                "xi3*xi3",
                "xi2*xi1 + u^(-2)*xi1*xi2",
                "xi1*xi3 + u*xi3*xi1",
                "xi2*xi3 + u^(-1)*xi3*xi2",
            ],
            vector=_XI_GENS,
        )
    if name == "TT7":
        return _pres(
            name,
            T_GENS,
            {"u", "s"},
            _TT7_RELS,
            degree_by_name=T_DEGREES,
            matrix=_T7_MATRIX,
        )
    if name == "TDinv":
        return _pres(
            name,
            T_GENS + ["Dinv"],
            {"u"},
            _TDINV_RELS,
            degree_by_name={**T_DEGREES, "Dinv": 0},
            matrix=_T7_MATRIX,
        )
    if name == "tdinv":
        return _pres(
            name,
            t_GENS + ["dinv"],
            {"u"},
            _tdinv_RELS,
            matrix=_t_matrix("t"),
        )
    if name == "ansatz_xi":
        return _pres(
            name,
            _XI_GENS,
            {"u", "s", "q", "k", "c21", "lam", "lam12", "mu", "mu12"},
            _ANSATZ_RELS,
            vector=_XI_GENS,
            precedence=["xi3", "xi2", "xi1"],
        )
    if name == "ansatz_xi3sq_variant":
        return _pres(
            name,
            _XI_GENS,
            {"u", "s", "q", "lam", "mu"},
            _ANSATZ_VARIANT_RELS,
            vector=_XI_GENS,
            precedence=["xi3", "xi2", "xi1"],
        )
    raise PresentationError(f"unknown builtin {name!r}; valid names: {BUILTIN_NAMES}")


# quadratic constraints on the quantum-matrix entries forced by invariance
# of the coordinate space, with q kept independent (the grid of eight swap
# relations plus the four longer ones, the last inhomogeneous in s)
_T_CONSTRAINT_TEXTS = [
    "T11*T33 - T33*T11",
    "T12*T33 - u^2*T33*T12",
    "T13*T33 - u*T33*T13",
    "T21*T33 - u^(-2)*T33*T21",
    "T22*T33 - T33*T22",
    "T23*T33 - u^(-1)*T33*T23",
    "T11*T21 - q*T21*T11",
    "T12*T22 - q*T22*T12",
    "u*T11*T23 - q*T23*T11 - q*u*T21*T13 + T13*T21",
    "T12*T23 - q*u*T23*T12 - q*T22*T13 + u*T13*T22",
    "T11*T22 - T22*T11 - q*T21*T12 + q^(-1)*T12*T21",
    "s*(T11*T22 - q*T21*T12) - s*T33*T33 + T13*T23 - q*T23*T13",
]


def transcribed_T_constraints(table: Optional[GenTable] = None) -> List[NCPoly]:
    """The twelve quantum-matrix constraints derived from coordinate-space
    invariance, transcribed verbatim (generic q)."""
    if table is None:
        table = builtin("TT7").table
    return [NCPoly.parse(table, t) for t in _T_CONSTRAINT_TEXTS]


# ---------------------------------------------------------------------------
# presentation DSL
# ---------------------------------------------------------------------------

def parse_presentation(text: str, file: str = "<presentation>") -> Presentation:
    """Parse the presentation DSL.

    Lines: `algebra NAME`, `params u s q`, `generators a > b > c`,
    `degree GEN = INT`, `rel EXPR = EXPR` (or `rel EXPR`), `#` comments.
    """
    name = None
    params: List[str] = []
    gens: List[str] = []
    degree_lines: List[Tuple[str, int, SourceSpan]] = []
    rel_lines: List[Tuple[str, int, int]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        indent = len(line) - len(line.lstrip())
        span = SourceSpan(file, lineno, indent + 1)
        head, _, rest = stripped.partition(" ")
        rest = rest.strip()
        if head == "algebra":
            if not rest:
                raise ParseError("missing algebra name", span)
            name = rest
        elif head == "params":
            params = rest.split()
            for p in params:
                if p not in sc.PARAM_NAMES:
                    raise ParseError(f"unknown parameter {p!r}", span)
        elif head == "generators":
            gens = [g.strip() for g in rest.split(">")]
            if any(not g for g in gens):
                raise ParseError("malformed generator precedence list", span)
        elif head == "degree":
            gen_name, _, val = rest.partition("=")
            gen_name, val = gen_name.strip(), val.strip()
            try:
                d = int(val)
            except ValueError:
                raise ParseError(f"bad degree value {val!r}", span) from None
            degree_lines.append((gen_name, d, span))
        elif head == "rel":
            rel_lines.append((rest, lineno, line.index("rel") + 4))
        else:
            raise ParseError(f"unknown directive {head!r}", span)

    if name is None:
        raise ParseError("missing `algebra` line", SourceSpan(file, 1, 1))
    if not gens:
        raise ParseError("missing `generators` line", SourceSpan(file, 1, 1))

    table = GenTable(gens)
    degree = None
    if degree_lines:
        degree = {g: 0 for g in range(len(table))}
        for gen_name, d, span in degree_lines:
            gid = table.lookup(gen_name)
            if gid is None:
                raise ParseError(f"unknown generator {gen_name!r}", span)
            degree[gid] = d

    relations = []
    for rel_text, lineno, col0 in rel_lines:
        lhs_text, eq, rhs_text = rel_text.partition("=")
        lhs = parse_poly_text(lhs_text.strip(), table, file, lineno, col0)
        if eq:
            rhs = parse_poly_text(
                rhs_text.strip(), table, file, lineno, col0 + len(lhs_text) + 1
            )
            rel = lhs - rhs
        else:
            rel = lhs
        for c in rel.terms.values():
            extra = c.params_used() - set(params)
            if extra:
                raise ParseError(
                    f"relation uses undeclared parameters {sorted(extra)}",
                    SourceSpan(file, lineno, col0),
                )
        if degree is not None:
            try:
                check_homogeneous(rel, degree, name)
            except PresentationError as e:
                raise ParseError(str(e), SourceSpan(file, lineno, col0)) from None
        relations.append(rel)

    return Presentation(
        name=name,
        table=table,
        params=frozenset(params),
        relations=relations,
        order=MonomialOrder.default(table),
        degree=degree,
    )


def print_presentation(pres: Presentation) -> str:
    lines = [f"algebra {pres.name}"]
    if pres.params:
        ordered = [p for p in sc.PARAM_NAMES if p in pres.params]
        lines.append(f"params {' '.join(ordered)}")
    lines.append(f"generators {' > '.join(pres.table.names)}")
    if pres.degree is not None:
        for gid, d in sorted(pres.degree.items()):
            if d != 0:
                lines.append(f"degree {pres.table.name(gid)} = {d}")
    for r in pres.relations:
        lines.append(f"rel {r.render(pres.order)} = 0")
    return "\n".join(lines) + "\n"
