"""Unitary representations with exact cyclotomic entries.

The built-in catalog covers groups with dihedral structure: an index-2
cyclic subgroup generated by some element of maximal order together with a
reflection.  The detection is structural, not name-based, so a group loaded
from a Cayley-table file (an S3 for instance) gets the same catalog as the
built-in construction.  This is the documented extension point: any other
group would need its own catalog registered here.

The two named spinor-side representations are
  spinor: dimension 2, rotation -> diag(z, z^-1) with z = zeta_(subgroup order),
  sign2:  dimension 2, rotation -> id, reflection -> diag(-1, 1),
matching the matrices used in the Dirac and wave-operator constructions.
"""

from __future__ import annotations

from .cyclotomic import Cyclotomic, cyclo, rat
from .errors import UnsupportedGroupError
from .groups import FiniteGroup
from .linalg import Mat, rank

_ZERO = rat(0)
_ONE = rat(1)


class Representation:
    """A unitary representation: one exact matrix per group element."""

    __slots__ = ("group", "dim", "matrices", "name")

    def __init__(self, group: FiniteGroup, matrices, name: str = "rep", check: bool = True):
        mats = tuple(matrices)
        if len(mats) != group.order:
            raise ValueError("need one matrix per group element")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "dim", mats[0].nrows)
        object.__setattr__(self, "matrices", mats)
        object.__setattr__(self, "name", name)
        if check:
            self._check()

    def __setattr__(self, *_):
        raise AttributeError("Representation is immutable")

    def _check(self):
        g = self.group
        if self.matrices[0] != Mat.identity(self.dim):
            raise ValueError(f"{self.name}: identity must map to the unit matrix")
        for a in range(g.order):
            for b in range(g.order):
                if self.matrices[a] @ self.matrices[b] != self.matrices[g.mul(a, b)]:
                    raise ValueError(
                        f"{self.name}: not a homomorphism at ({g.label(a)}, {g.label(b)})")
        for a in range(g.order):
            if self.matrices[a].conj_transpose() != self.matrices[g.inv(a)]:
                raise ValueError(f"{self.name}: not unitary at {g.label(a)}")

    def __call__(self, element: int) -> Mat:
        return self.matrices[element]

    def character(self) -> list[Cyclotomic]:
        return [m.trace() for m in self.matrices]

    def matrix_element(self, i: int, j: int) -> list[Cyclotomic]:
        """The function g -> rho(g)[i][j] as a value vector in element order."""
        return [m[i, j] for m in self.matrices]

    def conjugate(self) -> "Representation":
        return Representation(self.group, [m.conj() for m in self.matrices],
                              name=f"{self.name}~conj", check=False)

    def __repr__(self):
        return f"Representation({self.name}, dim {self.dim} over {self.group.name})"


class DihedralStructure:
    """A choice of rotation generator and reflection exhibiting the group as
    dihedral of order 2n; elements decompose as r^i or s r^i."""

    __slots__ = ("group", "n", "rotation", "reflection", "decomp")

    def __init__(self, group: FiniteGroup, rotation: int, reflection: int):
        n = group.order // 2
        decomp = [None] * group.order
        cur = 0
        for i in range(n):
            decomp[cur] = (0, i)
            decomp[group.mul(reflection, cur)] = (1, i)
            cur = group.mul(cur, rotation)
        if any(d is None for d in decomp):
            raise ValueError("rotation/reflection pair does not decompose the group")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rotation", rotation)
        object.__setattr__(self, "reflection", reflection)
        object.__setattr__(self, "decomp", tuple(decomp))

    def __setattr__(self, *_):
        raise AttributeError("DihedralStructure is immutable")


def _element_order(group: FiniteGroup, g: int) -> int:
    k, cur = 1, g
    while cur != 0:
        cur = group.mul(cur, g)
        k += 1
    return k


def dihedral_structure(group: FiniteGroup) -> DihedralStructure:
    """Detect dihedral structure: the first element r of order |G|/2 and the
    first involution s outside <r> with s r s^-1 = r^-1.  Raises
    UnsupportedGroupError when the group has no such presentation."""
    order = group.order
    if order % 2 or order < 2:
        raise UnsupportedGroupError(
            f"group {group.name} of order {order} has no dihedral presentation")
    n = order // 2
    for r in range(order) if n > 1 else [0]:
        if _element_order(group, r) != n and n > 1:
            continue
        subgroup = set()
        cur = 0
        for _ in range(n):
            subgroup.add(cur)
            cur = group.mul(cur, r)
        if len(subgroup) != n:
            continue
        for s in range(order):
            if s in subgroup or group.mul(s, s) != 0:
                continue
            if group.conj(s, r) == group.inv(r):
                return DihedralStructure(group, r, s)
    raise UnsupportedGroupError(
        f"group {group.name} of order {order} has no dihedral presentation")


def _spinor_matrices(struct: DihedralStructure, k: int) -> list[Mat]:
    """rho_k: rotation^i -> diag(z^(ki), z^(-ki)), reflection shifts to the
    antidiagonal; z = zeta_n (or zeta_2n would be redundant: k indexes the
    2-dimensional irreducible family)."""
    n = struct.n
    out = []
    for flip, i in struct.decomp:
        zp = cyclo(n, k * i)
        zm = cyclo(n, -k * i)
        if flip:
            out.append(Mat([[_ZERO, zm], [zp, _ZERO]]))
        else:
            out.append(Mat([[zp, _ZERO], [_ZERO, zm]]))
    return out


def _one_dim(struct: DihedralStructure, sign_r: int, sign_s: int) -> list[Mat]:
    vals = []
    for flip, i in struct.decomp:
        v = (sign_r ** i) * (sign_s ** flip)
        vals.append(Mat([[rat(v)]]))
    return vals


def builtin_rep(group: FiniteGroup, name: str) -> Representation:
    """The named 2-dimensional representation on a dihedral-structured group.

    spinor is faithful on the rotation subgroup; sign2 factors through the
    rotation/reflection parity.
    """
    struct = dihedral_structure(group)
    if name == "spinor":
        return Representation(group, _spinor_matrices(struct, 1), name="spinor")
    if name == "sign2":
        mats = []
        for flip, _ in struct.decomp:
            if flip:
                mats.append(Mat([[rat(-1), _ZERO], [_ZERO, _ONE]]))
            else:
                mats.append(Mat.identity(2))
        return Representation(group, mats, name="sign2")
    raise UnsupportedGroupError(f"no built-in representation named {name!r}")


def irreducibles(group: FiniteGroup) -> list[Representation]:
    """The complete irreducible catalog of a dihedral-structured group.

    For rotation order n even: four 1-dimensional characters and n/2 - 1
    two-dimensional representations; for n odd: two characters and
    (n - 1)/2 two-dimensional ones.  Completeness is the standard dihedral
    classification; the test suite certifies sum-of-squares and character
    orthogonality exactly.
    """
    struct = dihedral_structure(group)
    n = struct.n
    out = [Representation(group, _one_dim(struct, 1, 1), name="trivial"),
           Representation(group, _one_dim(struct, 1, -1), name="sign")]
    if n % 2 == 0:
        out.append(Representation(group, _one_dim(struct, -1, 1), name="rot-parity"))
        out.append(Representation(group, _one_dim(struct, -1, -1), name="rot-parity*sign"))
    top = (n - 1) // 2 if n % 2 else n // 2 - 1
    for k in range(1, top + 1):
        out.append(Representation(group, _spinor_matrices(struct, k), name=f"planar{k}"))
    return out


def peter_weyl_matrix(reps: list[Representation]) -> Mat:
    """All matrix-element functions stacked as rows; full row rank means the
    catalog spans every function on the group."""
    rows = []
    for rep in reps:
        for i in range(rep.dim):
            for j in range(rep.dim):
                rows.append(rep.matrix_element(i, j))
    return Mat(rows)


def peter_weyl_rank(reps: list[Representation]) -> int:
    return rank(peter_weyl_matrix(reps))
