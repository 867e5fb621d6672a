"""Covariant derivative, curvature and Ricci for connections on the
class calculus.

On basis forms the connection acts through the conjugation pattern

    nabla e_a = - sum_c A_c (x) (e_{c^-1 a c} - e_a)

and extends to 1-forms by the left Leibniz rule.  Curvature is the usual
square of nabla written with the exterior derivative and a wedge on the
middle legs.  Ricci needs a lift of 2-forms back into the tensor square;
two lifts are provided:

  * canonical: e_a ^ e_b maps to e_a (x) e_b minus half the sum of all
    off-diagonal tensor monomials with the same element product; this one
    is an exact section of the wedge projection,
  * braided: id minus the braiding applied to a representative, which is
    well defined because the relation space is exactly the braiding-fixed
    subspace, but is not a section of the wedge.

Ricci contracts the lifted curvature relative to the flat background (the
exterior derivatives of the basis forms themselves), which is the
normalisation that makes the distinguished connection Ricci-flat.
"""

from __future__ import annotations

from typing import Sequence

from .calculus import Calculus, GroupFunction, OneForm, TwoForm
from .connections import Connection, _chart_rows, _require_chart_class
from .cyclotomic import rat
from .linalg import solve_affine, Mat

LIFT_VARIANTS = ("canonical", "braided")


class TensorOneOne:
    """An element of the tensor square of 1-forms in left-normal
    coordinates: sum coords[p][q] e_p (x) e_q."""

    __slots__ = ("calculus", "coords")

    def __init__(self, calculus: Calculus, coords: Sequence[Sequence[GroupFunction]]):
        m = calculus.n_members
        grid = tuple(tuple(row) for row in coords)
        if len(grid) != m or any(len(row) != m for row in grid):
            raise ValueError("square grid of coefficient functions required")
        object.__setattr__(self, "calculus", calculus)
        object.__setattr__(self, "coords", grid)

    def __setattr__(self, *_):
        raise AttributeError("TensorOneOne is immutable")

    @classmethod
    def zero(cls, calculus: Calculus) -> "TensorOneOne":
        z = calculus.zero_function()
        m = calculus.n_members
        return cls(calculus, [[z] * m for _ in range(m)])

    def __add__(self, other: "TensorOneOne") -> "TensorOneOne":
        return TensorOneOne(self.calculus, [
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.coords, other.coords)])

    def __sub__(self, other: "TensorOneOne") -> "TensorOneOne":
        return TensorOneOne(self.calculus, [
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.coords, other.coords)])

    def __neg__(self) -> "TensorOneOne":
        return TensorOneOne(self.calculus, [[-a for a in row] for row in self.coords])

    def __mul__(self, scalar) -> "TensorOneOne":
        return TensorOneOne(self.calculus, [[a * scalar for a in row] for row in self.coords])

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(f.is_zero() for row in self.coords for f in row)

    def __eq__(self, other):
        if not isinstance(other, TensorOneOne):
            return NotImplemented
        return all(a == b for ra, rb in zip(self.coords, other.coords)
                   for a, b in zip(ra, rb))

    __hash__ = None

    def __repr__(self):
        labels = self.calculus.cls.labels()
        parts = [f"({f!r})e_{labels[p]}(x)e_{labels[q]}"
                 for p, row in enumerate(self.coords)
                 for q, f in enumerate(row) if not f.is_zero()]
        return " + ".join(parts) if parts else "0"


class TensorTwoOne:
    """A 2-form-valued vector: sum coords[k][q] B_k (x) e_q over the
    quotient basis monomials B_k."""

    __slots__ = ("calculus", "coords")

    def __init__(self, calculus: Calculus, coords: Sequence[Sequence[GroupFunction]]):
        grid = tuple(tuple(row) for row in coords)
        if len(grid) != calculus.quotient_dim or any(
                len(row) != calculus.n_members for row in grid):
            raise ValueError("quotient-by-member grid of coefficients required")
        object.__setattr__(self, "calculus", calculus)
        object.__setattr__(self, "coords", grid)

    def __setattr__(self, *_):
        raise AttributeError("TensorTwoOne is immutable")

    @classmethod
    def zero(cls, calculus: Calculus) -> "TensorTwoOne":
        z = calculus.zero_function()
        return cls(calculus, [[z] * calculus.n_members
                              for _ in range(calculus.quotient_dim)])

    def __add__(self, other: "TensorTwoOne") -> "TensorTwoOne":
        return TensorTwoOne(self.calculus, [
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.coords, other.coords)])

    def __sub__(self, other: "TensorTwoOne") -> "TensorTwoOne":
        return TensorTwoOne(self.calculus, [
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.coords, other.coords)])

    def __neg__(self) -> "TensorTwoOne":
        return TensorTwoOne(self.calculus, [[-a for a in row] for row in self.coords])

    def __mul__(self, scalar) -> "TensorTwoOne":
        return TensorTwoOne(self.calculus, [[a * scalar for a in row] for row in self.coords])

    __rmul__ = __mul__

    def column(self, q: int) -> TwoForm:
        """The 2-form paired with e_q."""
        return TwoForm(self.calculus, [row[q] for row in self.coords])

    def is_zero(self) -> bool:
        return all(f.is_zero() for row in self.coords for f in row)

    def __eq__(self, other):
        if not isinstance(other, TensorTwoOne):
            return NotImplemented
        return all(a == b for ra, rb in zip(self.coords, other.coords)
                   for a, b in zip(ra, rb))

    __hash__ = None


# -- the connection action --------------------------------------------------

def connection_grid(conn: Connection) -> list[list[OneForm]]:
    """1-form entries V[a][q] with nabla e_a = sum_q V[a][q] (x) e_q."""
    cal = conn.calculus
    cls = cal.cls
    grp = cls.group
    m = cal.n_members
    grid = [[cal.zero_one_form() for _ in range(m)] for _ in range(m)]
    for apos, a in enumerate(cls.members):
        for cpos, c in enumerate(cls.members):
            conj_pos = cls.position(grp.conj(grp.inv(c), a))
            comp = conn.components[cpos]
            grid[apos][conj_pos] = grid[apos][conj_pos] - comp
            grid[apos][apos] = grid[apos][apos] + comp
    return grid


def covariant_derivative(conn: Connection, alpha: OneForm) -> TensorOneOne:
    """nabla alpha for a 1-form, left Leibniz rule over the coefficients."""
    cal = conn.calculus
    m = cal.n_members
    grid = connection_grid(conn)
    z = cal.zero_function()
    coords = [[z for _ in range(m)] for _ in range(m)]
    for apos, f in enumerate(alpha.coeffs):
        if f.is_zero():
            continue
        df = cal.d_function(f)
        for p in range(m):
            coords[p][apos] = coords[p][apos] + df.coeffs[p]
        for q in range(m):
            v = grid[apos][q]
            for p in range(m):
                if not v.coeffs[p].is_zero():
                    coords[p][q] = coords[p][q] + f * v.coeffs[p]
    return TensorOneOne(cal, coords)


def riemann(conn: Connection) -> list[TensorTwoOne]:
    """Curvature applied to each basis form:

        R(e_a) = sum_q (sum_m V[a][m] ^ V[m][q] - dV[a][q]) (x) e_q

    The sign is normalised so that for the distinguished connection the
    curvature of e_a pairs the positive background 2-forms de_b with the
    conjugation pattern, matching the component curvature F_a = de_a."""
    cal = conn.calculus
    m = cal.n_members
    grid = connection_grid(conn)
    out = []
    for apos in range(m):
        cols = []
        for q in range(m):
            two = -cal.d_one_form(grid[apos][q])
            for mid in range(m):
                two = two + cal.wedge(grid[apos][mid], grid[mid][q])
            cols.append(two)
        out.append(TensorTwoOne(cal, [[cols[q].coeffs[k] for q in range(m)]
                                      for k in range(cal.quotient_dim)]))
    return out


def curvature_of(conn: Connection, alpha: OneForm) -> TensorTwoOne:
    """Curvature acting on a general 1-form; tensorial over left
    multiplication, so it is the coefficient-weighted sum of the basis
    curvatures."""
    cal = conn.calculus
    total = TensorTwoOne.zero(cal)
    basis = riemann(conn)
    for apos, f in enumerate(alpha.coeffs):
        if not f.is_zero():
            total = total + basis[apos] * f
    return total


# -- curvature 2-forms ------------------------------------------------------

def curvature_forms(conn: Connection) -> list[TwoForm]:
    """The component curvature per class member:
    F_a = dA_a + sum_{cd=a} A_c ^ A_d - sum_c (A_c ^ A_a + A_a ^ A_c)."""
    cal = conn.calculus
    cls = cal.cls
    grp = cls.group
    out = []
    for apos, a in enumerate(cls.members):
        f = cal.d_one_form(conn.components[apos])
        for cpos, c in enumerate(cls.members):
            for dpos, d in enumerate(cls.members):
                if grp.mul(c, d) == a:
                    f = f + cal.wedge(conn.components[cpos], conn.components[dpos])
            f = f - cal.wedge(conn.components[cpos], conn.components[apos])
            f = f - cal.wedge(conn.components[apos], conn.components[cpos])
        out.append(f)
    return out


def relative_curvature(conn: Connection) -> list[TwoForm]:
    """Curvature measured against the flat background de_a.  For any
    connection with vanishing component sum the quadratic terms of the
    component curvature cancel, leaving dA_a - de_a."""
    cal = conn.calculus
    return [cal.d_one_form(conn.components[apos]) - cal.d_basis(apos)
            for apos in range(cal.n_members)]


# -- lifting 2-forms into the tensor square ---------------------------------

def _lift_table(cal: Calculus, variant: str) -> list[dict]:
    """For each quotient basis monomial, its lift as a pair -> rational map."""
    if variant not in LIFT_VARIANTS:
        raise ValueError(f"unknown lift variant {variant!r}; use one of {LIFT_VARIANTS}")
    cls = cal.cls
    grp = cls.group
    table = []
    for (p, q) in cal.quotient_pairs:
        entry: dict = {(p, q): rat(1)}
        if variant == "canonical":
            prod = grp.mul(cls.members[p], cls.members[q])
            half = rat(1, 2)
            for c in range(cal.n_members):
                for d in range(cal.n_members):
                    if c != d and grp.mul(cls.members[c], cls.members[d]) == prod:
                        entry[(c, d)] = entry.get((c, d), rat(0)) - half
        else:
            img = cal.braid_perm[(p, q)]
            entry[img] = entry.get(img, rat(0)) - rat(1)
        table.append({k: v for k, v in entry.items() if not v.is_zero()})
    return table


def lift(calculus: Calculus, omega: TwoForm, variant: str = "canonical") -> TensorOneOne:
    """Lift a 2-form into the tensor square; the canonical variant is a
    section of the wedge, the braided one is well defined but not."""
    cal = calculus
    m = cal.n_members
    z = cal.zero_function()
    coords = [[z for _ in range(m)] for _ in range(m)]
    for k, entry in enumerate(_lift_table(cal, variant)):
        f = omega.coeffs[k]
        if f.is_zero():
            continue
        for (p, q), c in entry.items():
            coords[p][q] = coords[p][q] + f * c
    return TensorOneOne(cal, coords)


def wedge_of_tensor(t: TensorOneOne) -> TwoForm:
    """Project a tensor-square element back down through the wedge."""
    cal = t.calculus
    out = cal.zero_two_form()
    for p, row in enumerate(t.coords):
        for q, f in enumerate(row):
            if f.is_zero():
                continue
            out = out + TwoForm(cal, [f * c for c in cal.reduction[(p, q)]])
    return out


# -- Ricci ------------------------------------------------------------------

def ricci(conn: Connection, variant: str = "canonical") -> TensorOneOne:
    """Contract the lifted relative curvature through the connection's
    conjugation pattern:

        sum_{a,c} lift(G_c)^{a b} e_b (x) (e_{c^-1 a c} - e_a)

    with G_c the relative curvature of component c.  Vanishes for the
    distinguished connection under every lift variant because the relative
    curvature itself vanishes there.
    """
    cal = conn.calculus
    cls = cal.cls
    grp = cls.group
    m = cal.n_members
    lifted = [lift(cal, g, variant) for g in relative_curvature(conn)]
    z = cal.zero_function()
    coords = [[z for _ in range(m)] for _ in range(m)]
    for cpos, c in enumerate(cls.members):
        h = lifted[cpos].coords
        for apos, a in enumerate(cls.members):
            conj_pos = cls.position(grp.conj(grp.inv(c), a))
            if conj_pos == apos:
                continue
            for b in range(m):
                f = h[apos][b]
                if f.is_zero():
                    continue
                coords[b][conj_pos] = coords[b][conj_pos] + f
                coords[b][apos] = coords[b][apos] - f
    return TensorOneOne(cal, coords)


def _chart_unchecked(cal: Calculus, alpha, beta, gamma) -> Connection:
    # bypasses the sum constraint: used to assemble linear systems in the
    # chart parameters where the constraint enters as separate equations
    rows = _chart_rows(alpha, beta, gamma, cal.constant(1))
    return Connection(cal, [cal.one_form(row) for row in rows])


def ricci_flat_solve(calculus: Calculus, variant: str = "canonical",
                     constrain_sum: bool = True):
    """Solve for all chart parameter triples with vanishing Ricci.

    Ricci is affine in the three parameter functions, so this is an exact
    linear solve in 3|G| scalars.  With the chart constraint included the
    expected outcome for the supported classes is a single isolated triple;
    without it the solution set picks up the constant shifts that leave the
    relative curvature unchanged.

    Returns (particular, kernel) where particular is a parameter triple and
    kernel is a basis of homogeneous triples.
    """
    cal = calculus
    _require_chart_class(cal)
    grp = cal.group
    order = grp.order
    m = cal.n_members
    nunk = 3 * order

    def params_from_vec(vec):
        return tuple(GroupFunction(grp, vec[i * order:(i + 1) * order])
                     for i in range(3))

    def ricci_of_params(params):
        conn = _chart_unchecked(cal, *params)
        return ricci(conn, variant)

    def flatten(t: TensorOneOne):
        return [t.coords[p][q](g) for p in range(m) for q in range(m)
                for g in range(order)]

    zero_params = params_from_vec([rat(0)] * nunk)
    base = flatten(ricci_of_params(zero_params))
    ncols = nunk
    nrows = len(base)
    cols = []
    for u in range(ncols):
        vec = [rat(0)] * nunk
        vec[u] = rat(1)
        col = flatten(ricci_of_params(params_from_vec(vec)))
        cols.append([a - b for a, b in zip(col, base)])
    rows = [[cols[u][r] for u in range(ncols)] for r in range(nrows)]
    rhs = [-v for v in base]
    if constrain_sum:
        for g in range(order):
            row = [rat(0)] * ncols
            for i in range(3):
                row[i * order + g] = rat(1)
            rows.append(row)
            rhs.append(rat(-1))
    particular, kern = solve_affine(Mat(rows), rhs)
    return params_from_vec(particular), [params_from_vec(v) for v in kern]
