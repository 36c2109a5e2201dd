"""Exact matrices over the Scalar field and the 9x9 deformation matrix.

Pair indices (i, j), i, j in {1,2,3}, are linearized row-major:
(1,1),(1,2),(1,3),(2,1),(2,2),(2,3),(3,1),(3,2),(3,3).
"""

from __future__ import annotations

from typing import List, Optional, Tuple

from . import scalar as sc
from .presentations import Presentation, builtin
from .report import CheckItem, CheckReport
from .scalar import Scalar


class LinalgError(Exception):
    pass


def pair_to_lin(i: int, j: int) -> int:
    """(i, j) with i, j in 1..3 to 0-based linear index."""
    return 3 * (i - 1) + (j - 1)


def lin_to_pair(a: int) -> Tuple[int, int]:
    return a // 3 + 1, a % 3 + 1


class ScalarMatrix:
    def __init__(self, entries: List[List[Scalar]]):
        self.entries = entries
        self.rows = len(entries)
        self.cols = len(entries[0]) if entries else 0
        for row in entries:
            if len(row) != self.cols:
                raise LinalgError("ragged matrix")

    @staticmethod
    def zero(rows, cols) -> "ScalarMatrix":
        return ScalarMatrix([[sc.ZERO] * cols for _ in range(rows)])

    @staticmethod
    def identity(n) -> "ScalarMatrix":
        m = [[sc.ONE if i == j else sc.ZERO for j in range(n)] for i in range(n)]
        return ScalarMatrix(m)

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r][c]

    def __eq__(self, other):
        if not isinstance(other, ScalarMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and all(
                self.entries[i][j] == other.entries[i][j]
                for i in range(self.rows)
                for j in range(self.cols)
            )
        )

    def __mul__(self, other: "ScalarMatrix") -> "ScalarMatrix":
        if self.cols != other.rows:
            raise LinalgError(f"dimension mismatch {self.cols} vs {other.rows}")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = sc.ZERO
                for k in range(self.cols):
                    a = self.entries[i][k]
                    if a.is_zero():
                        continue
                    b = other.entries[k][j]
                    if b.is_zero():
                        continue
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return ScalarMatrix(out)

    def __sub__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise LinalgError("dimension mismatch")
        return ScalarMatrix(
            [
                [self.entries[i][j] - other.entries[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise LinalgError("dimension mismatch")
        return ScalarMatrix(
            [
                [self.entries[i][j] + other.entries[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def scale(self, c: Scalar) -> "ScalarMatrix":
        return ScalarMatrix(
            [[e * c for e in row] for row in self.entries]
        )

    def transpose(self) -> "ScalarMatrix":
        return ScalarMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def substitute(self, bindings) -> "ScalarMatrix":
        return ScalarMatrix(
            [[e.substitute(bindings) for e in row] for row in self.entries]
        )

    def columns(self) -> List[List[Scalar]]:
        return [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]

    def render_rows(self) -> List[List[str]]:
        return [[str(e) for e in row] for row in self.entries]


# ---------------------------------------------------------------------------
# the built-in 9x9 matrix
# ---------------------------------------------------------------------------

def rhat_builtin() -> ScalarMatrix:
    """Exact transcription of the 9x9 deformation matrix (rows/cols in
    pair-index order)."""
    u, s = sc.U, sc.S
    m = ScalarMatrix.zero(9, 9)
    e = m.entries

    def put(rp, cp, val):
        e[pair_to_lin(*rp)][pair_to_lin(*cp)] = val

    put((1, 1), (1, 1), sc.ONE)
    put((1, 2), (2, 1), u ** 2)
    put((1, 2), (3, 3), s)
    put((1, 3), (3, 1), u)
    put((2, 1), (1, 2), u ** -2)
    put((2, 1), (3, 3), -s * u ** -2)
    put((2, 2), (2, 2), sc.ONE)
    put((2, 3), (3, 2), u ** -1)
    put((3, 1), (1, 3), u ** -1)
    put((3, 2), (2, 3), u)
    put((3, 3), (3, 3), sc.ONE)
    return m


def _triple_ops(R: ScalarMatrix) -> Tuple[ScalarMatrix, ScalarMatrix]:
    """(R (x) 1, 1 (x) R) as 27x27 matrices on V (x) V (x) V with dim V = 3."""
    if (R.rows, R.cols) != (9, 9):
        raise LinalgError("expected a 9x9 matrix")
    R1 = ScalarMatrix.zero(27, 27)
    R2 = ScalarMatrix.zero(27, 27)
    for i in range(3):
        for j in range(3):
            for k in range(3):
                row = 9 * i + 3 * j + k
                for l in range(3):
                    for m_ in range(3):
                        for n in range(3):
                            col = 9 * l + 3 * m_ + n
                            if k == n:
                                R1.entries[row][col] = R.entries[3 * i + j][3 * l + m_]
                            if i == l:
                                R2.entries[row][col] = R.entries[3 * j + k][3 * m_ + n]
    return R1, R2


def ybe_check(R: ScalarMatrix, suite: str = "ybe") -> CheckReport:
    """Braid-form Yang-Baxter check: (R x 1)(1 x R)(R x 1) = (1 x R)(R x 1)(1 x R)."""
    R1, R2 = _triple_ops(R)
    lhs = R1 * R2 * R1
    rhs = R2 * R1 * R2
    diff = lhs - rhs
    items = []
    bad = [
        (i, j)
        for i in range(27)
        for j in range(27)
        if not diff.entries[i][j].is_zero()
    ]
    if not bad:
        items.append(CheckItem("27x27 residual identically zero", True))
    else:
        for i, j in bad[:20]:
            items.append(
                CheckItem(
                    f"residual entry ({i},{j})", False, str(diff.entries[i][j])
                )
            )
    return CheckReport.from_items(suite, items)


def involution_check(R: ScalarMatrix, suite: str = "involution") -> CheckReport:
    if R.rows != R.cols:
        raise LinalgError("involution check needs a square matrix")
    diff = R * R - ScalarMatrix.identity(R.rows)
    items = []
    if diff.is_zero():
        items.append(CheckItem("R*R = identity", True))
    else:
        for i in range(R.rows):
            for j in range(R.cols):
                if not diff.entries[i][j].is_zero():
                    items.append(
                        CheckItem(
                            f"(R*R - 1) entry ({i},{j})",
                            False,
                            str(diff.entries[i][j]),
                        )
                    )
    return CheckReport.from_items(suite, items)


# ---------------------------------------------------------------------------
# exact elimination
# ---------------------------------------------------------------------------

def _term_count(x: Scalar) -> int:
    return len(x.f.numer.terms()) + len(x.f.denom.terms())


def rref(M: ScalarMatrix) -> Tuple[ScalarMatrix, List[int]]:
    """Reduced row echelon form with pivots chosen by least term count."""
    m = [row[:] for row in M.entries]
    rows, cols = M.rows, M.cols
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        candidates = [i for i in range(r, rows) if not m[i][c].is_zero()]
        if not candidates:
            continue
        best = min(candidates, key=lambda i: _term_count(m[i][c]))
        m[r], m[best] = m[best], m[r]
        inv = sc.ONE / m[r][c]
        m[r] = [e * inv for e in m[r]]
        for i in range(rows):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return ScalarMatrix(m), pivots


def rank(M: ScalarMatrix) -> int:
    return len(rref(M)[1])


def kernel_basis(M: ScalarMatrix) -> List[List[Scalar]]:
    """Basis of the right null space."""
    R, pivots = rref(M)
    free = [c for c in range(M.cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [sc.ZERO] * M.cols
        v[fc] = sc.ONE
        for r, pc in enumerate(pivots):
            v[pc] = -R.entries[r][fc]
        basis.append(v)
    return basis


def column_space_basis(M: ScalarMatrix) -> List[List[Scalar]]:
    _, pivots = rref(M)
    cols = M.columns()
    return [cols[c] for c in pivots]


def _from_columns(cols: List[List[Scalar]], nrows: int) -> ScalarMatrix:
    if not cols:
        return ScalarMatrix.zero(nrows, 0)
    return ScalarMatrix(
        [[col[i] for col in cols] for i in range(nrows)]
    )


def span_contains(basis: List[List[Scalar]], vecs: List[List[Scalar]], n: int) -> bool:
    """Every vector of `vecs` lies in span(basis)?"""
    r0 = rank(_from_columns(basis, n))
    r1 = rank(_from_columns(basis + vecs, n))
    return r0 == r1


def span_equal(a: List[List[Scalar]], b: List[List[Scalar]], n: int) -> bool:
    return span_contains(a, b, n) and span_contains(b, a, n)


# ---------------------------------------------------------------------------
# eigenstructure
# ---------------------------------------------------------------------------

def eigensplit(R: ScalarMatrix):
    """Column bases of the +1 / -1 eigenprojections of an involutive matrix."""
    if not involution_check(R).ok:
        raise LinalgError("eigensplit requires an involutive matrix")
    n = R.rows
    half = sc.ONE / Scalar.from_int(2)
    p_plus = (ScalarMatrix.identity(n) + R).scale(half)
    p_minus = (ScalarMatrix.identity(n) - R).scale(half)
    return column_space_basis(p_plus), column_space_basis(p_minus)


def relation_vectors(pres: Presentation) -> List[List[Scalar]]:
    """Quadratic relations of a 3-generator presentation as 9-vectors in
    pair-index components."""
    if pres.vector is None or len(pres.vector) != 3:
        raise LinalgError(f"{pres.name} is not a 3-generator space presentation")
    pos = {gid: idx for idx, gid in enumerate(pres.vector)}
    out = []
    for rel in pres.relations:
        v = [sc.ZERO] * 9
        for w, c in rel.terms.items():
            if len(w) != 2 or w[0] not in pos or w[1] not in pos:
                raise LinalgError(
                    f"non-quadratic term in relation {rel.render(pres.order)}"
                )
            v[3 * pos[w[0]] + pos[w[1]]] = c
        out.append(v)
    return out


def eigenspace_identification(suite: str = "eigen", bindings=None) -> CheckReport:
    """Identify the two eigenspaces of the built-in matrix with the spans of
    the coordinate-space and one-form-space relations.

    The source fixes no pair-index linearization, so the check tries the
    printed convention first and its transpose second, reporting which one
    satisfies everything.
    """
    R = rhat_builtin()
    xspace, xispace = builtin("xspace"), builtin("xispace")
    if bindings:
        R = R.substitute(bindings)
        xspace = xspace.substitute(bindings)
        xispace = xispace.substitute(bindings)
    x_vecs = relation_vectors(xspace)
    xi_vecs = relation_vectors(xispace)

    for convention, M in (("as-printed", R), ("transposed", R.transpose())):
        vp, vm = eigensplit(M)
        dims_ok = {len(vp), len(vm)} == {6, 3}
        three = vp if len(vp) == 3 else vm
        six = vp if len(vp) == 6 else vm
        x_ok = span_equal(x_vecs, three, 9)
        xi_ok = span_equal(xi_vecs, six, 9)
        comp_ok = rank(_from_columns(x_vecs + xi_vecs, 9)) == 9
        if dims_ok and x_ok and xi_ok and comp_ok:
            x_sign = "+1" if three is vp else "-1"
            xi_sign = "+1" if six is vp else "-1"
            items = [
                CheckItem(f"eigenspace dimensions are {{6, 3}} [{convention}]", True),
                CheckItem(
                    f"coordinate relations span = 3-dim eigenspace "
                    f"(eigenvalue {x_sign})",
                    True,
                ),
                CheckItem(
                    f"one-form relations span = 6-dim eigenspace "
                    f"(eigenvalue {xi_sign})",
                    True,
                ),
                CheckItem("spans are complementary (joint rank 9)", True),
            ]
            return CheckReport.from_items(suite, items)

    # neither convention works: report the as-printed failure in detail
    vp, vm = eigensplit(R)
    items = [
        CheckItem(
            f"eigenspace dimensions {{{len(vp)}, {len(vm)}}} = {{6, 3}}",
            {len(vp), len(vm)} == {6, 3},
        ),
        CheckItem("coordinate relations span equals an eigenspace", False),
        CheckItem("one-form relations span equals an eigenspace", False),
    ]
    return CheckReport.from_items(suite, items)


def generic_q_not_eigenspace(suite: str = "eigen-generic-q", bindings=None) -> CheckReport:
    """With q kept independent the coordinate relations stop being an
    eigenspace of the built-in matrix (either convention)."""
    R = rhat_builtin()
    pres = builtin("xspace_generic_q")
    if bindings:
        R = R.substitute(bindings)
        pres = pres.substitute(bindings)
    vecs = relation_vectors(pres)
    items = []
    for convention, M in (("as-printed", R), ("transposed", R.transpose())):
        vp, vm = eigensplit(M)
        three = vp if len(vp) == 3 else vm
        ok = not span_equal(vecs, three, 9)
        items.append(
            CheckItem(
                f"generic-q span differs from the 3-dim eigenspace [{convention}]",
                ok,
            )
        )
    return CheckReport.from_items(suite, items)
