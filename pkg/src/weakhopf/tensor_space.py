"""Named-basis vector spaces, exact linear maps and dense rank-3 tensors.

Conventions, fixed once for the whole package:

* a ``LinMap`` matrix is indexed ``rows[codomain_index][domain_index]``;
* the tensor product ``V (x) W`` uses row-major flattening,
  ``flat(i, j) = i * dim(W) + j`` with ``i`` indexing the left factor, and
  basis labels are the strings ``"v⊗w"``.

Row-major flattening is associative, so ``(U⊗V)⊗W`` and ``U⊗(V⊗W)`` are the
same ``FinVec`` and iterated tensor products never need re-bracketing.
All data is immutable after construction; every operation is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Sequence

from .errors import FieldMismatch, NotInjective, ShapeMismatch
from .scalars import Field


@dataclass(frozen=True)
class FinVec:
    """A finite-dimensional vector space with a named, ordered basis."""

    field: Field
    labels: tuple[str, ...]

    def __post_init__(self):
        if len(self.labels) == 0:
            raise ShapeMismatch("a space needs at least one basis vector")
        if len(set(self.labels)) != len(self.labels):
            raise ShapeMismatch("basis labels must be distinct")

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def __repr__(self):
        return f"FinVec({self.field!r}, dim={self.dim})"


def ground(field: Field) -> FinVec:
    """The field itself as a 1-dimensional space (used for counits and functionals)."""
    return FinVec(field, ("k",))


def tensor_product(V: FinVec, W: FinVec) -> FinVec:
    if V.field != W.field:
        raise FieldMismatch("tensor product of spaces over different fields")
    labels = tuple(f"{a}⊗{b}" for a in V.labels for b in W.labels)
    return FinVec(V.field, labels)


def flatten_index(i: int, j: int, dim_right: int) -> int:
    return i * dim_right + j


def unflatten_index(idx: int, dim_right: int) -> tuple[int, int]:
    return divmod(idx, dim_right)


def unflatten_multi(idx: int, dims: Sequence[int]) -> tuple[int, ...]:
    out = []
    for d in reversed(dims):
        idx, r = divmod(idx, d)
        out.append(r)
    return tuple(reversed(out))


@dataclass(frozen=True)
class Vector:
    space: FinVec
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.space.dim:
            raise ShapeMismatch("coordinate count does not match the space dimension")

    @classmethod
    def zero(cls, space: FinVec) -> "Vector":
        z = space.field.zero()
        return cls(space, tuple(z for _ in range(space.dim)))

    @classmethod
    def basis(cls, space: FinVec, i: int) -> "Vector":
        z, o = space.field.zero(), space.field.one()
        return cls(space, tuple(o if j == i else z for j in range(space.dim)))

    @classmethod
    def from_coords(cls, space: FinVec, coords: Iterable) -> "Vector":
        f = space.field
        return cls(space, tuple(f.coerce(c) for c in coords))

    def nonzeros(self):
        return [(i, c) for i, c in enumerate(self.coords) if c]

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "Vector") -> "Vector":
        if other.space != self.space:
            raise ShapeMismatch("vector addition across different spaces")
        return Vector(self.space, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Vector") -> "Vector":
        if other.space != self.space:
            raise ShapeMismatch("vector subtraction across different spaces")
        return Vector(self.space, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scale(self, s) -> "Vector":
        s = self.space.field.coerce(s)
        return Vector(self.space, tuple(s * c for c in self.coords))

    def tensor(self, other: "Vector") -> "Vector":
        """Kronecker product, landing in ``tensor_product(self.space, other.space)``."""
        target = tensor_product(self.space, other.space)
        z = self.space.field.zero()
        coords = [z] * target.dim
        dw = other.space.dim
        for i, a in self.nonzeros():
            base = i * dw
            for j, b in other.nonzeros():
                coords[base + j] = a * b
        return Vector(target, tuple(coords))

    def describe(self) -> str:
        """Human-readable linear combination of basis labels."""
        fmt = self.space.field.fmt
        terms = [f"{fmt(c)}·{self.space.labels[i]}" for i, c in self.nonzeros()]
        return " + ".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# exact elimination
# ---------------------------------------------------------------------------

def rref(rows: Sequence[Sequence], field: Field) -> tuple[list[list], list[int]]:
    """Reduced row echelon form over an exact field.

    Pivots are normalised to 1 and eliminated above and below, so the result
    is canonical for the row space.  Returns ``(matrix, pivot_columns)``.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots: list[int] = []
    pr = 0
    for pc in range(ncols):
        pivot_row = None
        for r in range(pr, nrows):
            if m[r][pc]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        m[pr], m[pivot_row] = m[pivot_row], m[pr]
        inv = field.inv(m[pr][pc])
        m[pr] = [inv * x for x in m[pr]]
        for r in range(nrows):
            if r != pr and m[r][pc]:
                f = m[r][pc]
                m[r] = [a - f * b for a, b in zip(m[r], m[pr])]
        pivots.append(pc)
        pr += 1
        if pr == nrows:
            break
    return m, pivots


def rref_with_transform(rows: Sequence[Sequence], field: Field):
    """RREF of A together with the row-operation matrix E, so that E·A = R."""
    nrows = len(rows)
    z, o = field.zero(), field.one()
    aug = [list(r) + [o if j == i else z for j in range(nrows)] for i, r in enumerate(rows)]
    red, pivots = rref(aug, field)
    ncols = len(rows[0]) if nrows else 0
    # pivots inside the original columns only; the identity block cannot
    # contribute pivots before rank is exhausted
    pivots = [p for p in pivots if p < ncols]
    R = [row[:ncols] for row in red]
    E = [row[ncols:] for row in red]
    return R, E, pivots


def solve(a_rows: Sequence[Sequence], b: Sequence, field: Field):
    """One exact solution x of A·x = b, or None if inconsistent.

    Free variables are set to zero, which makes the answer deterministic.
    """
    nrows = len(a_rows)
    ncols = len(a_rows[0]) if nrows else 0
    aug = [list(r) + [bv] for r, bv in zip(a_rows, b)]
    red, pivots = rref(aug, field)
    pivots = [p for p in pivots if p < ncols]
    rank = len(pivots)
    for r in range(rank, nrows):
        if red[r] and red[r][ncols]:
            return None
    # also catch a pivot in the augmented column
    for r in range(nrows):
        lead = next((c for c, v in enumerate(red[r]) if v), None)
        if lead == ncols:
            return None
    x = [field.zero()] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return x


# ---------------------------------------------------------------------------
# linear maps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LinMap:
    """An exact linear map, stored as a codomain×domain matrix."""

    domain: FinVec
    codomain: FinVec
    rows: tuple[tuple, ...]

    def __post_init__(self):
        if self.domain.field != self.codomain.field:
            raise FieldMismatch("map between spaces over different fields")
        if len(self.rows) != self.codomain.dim or any(
            len(r) != self.domain.dim for r in self.rows
        ):
            raise ShapeMismatch(
                f"matrix shape {len(self.rows)}×{len(self.rows[0]) if self.rows else 0} "
                f"does not match {self.codomain.dim}×{self.domain.dim}"
            )

    @property
    def field(self) -> Field:
        return self.domain.field

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rows(cls, domain: FinVec, codomain: FinVec, rows) -> "LinMap":
        f = domain.field
        return cls(domain, codomain, tuple(tuple(f.coerce(x) for x in r) for r in rows))

    @classmethod
    def from_images(cls, domain: FinVec, codomain: FinVec, images) -> "LinMap":
        """Build a map from the images of the domain basis vectors."""
        cols = []
        for img in images:
            coords = img.coords if isinstance(img, Vector) else tuple(img)
            if len(coords) != codomain.dim:
                raise ShapeMismatch("image has wrong length")
            cols.append(coords)
        if len(cols) != domain.dim:
            raise ShapeMismatch("need one image per domain basis vector")
        f = domain.field
        rows = tuple(
            tuple(f.coerce(cols[j][i]) for j in range(domain.dim))
            for i in range(codomain.dim)
        )
        return cls(domain, codomain, rows)

    @classmethod
    def from_function(cls, domain: FinVec, codomain: FinVec,
                      fn: Callable[[int], Vector]) -> "LinMap":
        return cls.from_images(domain, codomain, [fn(j) for j in range(domain.dim)])

    @classmethod
    def identity(cls, space: FinVec) -> "LinMap":
        z, o = space.field.zero(), space.field.one()
        rows = tuple(
            tuple(o if i == j else z for j in range(space.dim)) for i in range(space.dim)
        )
        return cls(space, space, rows)

    @classmethod
    def zero(cls, domain: FinVec, codomain: FinVec) -> "LinMap":
        z = domain.field.zero()
        return cls(domain, codomain, tuple(tuple(z for _ in range(domain.dim))
                                           for _ in range(codomain.dim)))

    # -- algebra ------------------------------------------------------------

    def __matmul__(self, other: "LinMap") -> "LinMap":
        """Composition self ∘ other."""
        if other.codomain != self.domain:
            raise ShapeMismatch("composition shape mismatch")
        z = self.field.zero()
        n = other.domain.dim
        out = [[z] * n for _ in range(self.codomain.dim)]
        for i, arow in enumerate(self.rows):
            orow = out[i]
            for k, aval in enumerate(arow):
                if not aval:
                    continue
                brow = other.rows[k]
                for j, bval in enumerate(brow):
                    if bval:
                        orow[j] = orow[j] + aval * bval
        return LinMap(other.domain, self.codomain, tuple(tuple(r) for r in out))

    def __add__(self, other: "LinMap") -> "LinMap":
        if other.domain != self.domain or other.codomain != self.codomain:
            raise ShapeMismatch("sum of maps with different shapes")
        return LinMap(self.domain, self.codomain,
                      tuple(tuple(a + b for a, b in zip(r1, r2))
                            for r1, r2 in zip(self.rows, other.rows)))

    def __sub__(self, other: "LinMap") -> "LinMap":
        if other.domain != self.domain or other.codomain != self.codomain:
            raise ShapeMismatch("difference of maps with different shapes")
        return LinMap(self.domain, self.codomain,
                      tuple(tuple(a - b for a, b in zip(r1, r2))
                            for r1, r2 in zip(self.rows, other.rows)))

    def scale(self, s) -> "LinMap":
        s = self.field.coerce(s)
        return LinMap(self.domain, self.codomain,
                      tuple(tuple(s * x for x in r) for r in self.rows))

    def tensor(self, other: "LinMap") -> "LinMap":
        """Kronecker product consistent with the row-major basis ordering."""
        dom = tensor_product(self.domain, other.domain)
        cod = tensor_product(self.codomain, other.codomain)
        z = self.field.zero()
        rows = [[z] * dom.dim for _ in range(cod.dim)]
        dd, cd = other.domain.dim, other.codomain.dim
        for i1, r1 in enumerate(self.rows):
            for j1, a in enumerate(r1):
                if not a:
                    continue
                for i2, r2 in enumerate(other.rows):
                    for j2, b in enumerate(r2):
                        if b:
                            rows[i1 * cd + i2][j1 * dd + j2] = a * b
        return LinMap(dom, cod, tuple(tuple(r) for r in rows))

    def apply(self, v: Vector) -> Vector:
        if v.space != self.domain:
            raise ShapeMismatch("vector not in the domain")
        z = self.field.zero()
        out = [z] * self.codomain.dim
        for j, c in v.nonzeros():
            for i in range(self.codomain.dim):
                a = self.rows[i][j]
                if a:
                    out[i] = out[i] + a * c
        return Vector(self.codomain, tuple(out))

    def __call__(self, v: Vector) -> Vector:
        return self.apply(v)

    def column(self, j: int) -> Vector:
        return Vector(self.codomain, tuple(r[j] for r in self.rows))

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.domain.dim)]

    # -- rank / inverse -----------------------------------------------------

    @cached_property
    def rank(self) -> int:
        _, pivots = rref(self.rows, self.field)
        return len(pivots)

    def transposed_rows(self) -> tuple[tuple, ...]:
        return tuple(tuple(self.rows[i][j] for i in range(self.codomain.dim))
                     for j in range(self.domain.dim))

    def inverse(self) -> "LinMap | None":
        """Exact two-sided inverse for a square map, or None if singular."""
        if self.domain.dim != self.codomain.dim:
            return None
        R, E, pivots = rref_with_transform(self.rows, self.field)
        if len(pivots) != self.domain.dim:
            return None
        return LinMap(self.codomain, self.domain, tuple(tuple(r) for r in E))


def map_tensor(f: LinMap, g: LinMap) -> LinMap:
    return f.tensor(g)


def compose(f: LinMap, g: LinMap) -> LinMap:
    return f @ g


def swap_map(V: FinVec, W: FinVec) -> LinMap:
    """The flip V⊗W → W⊗V."""
    dom = tensor_product(V, W)
    cod = tensor_product(W, V)
    z, o = V.field.zero(), V.field.one()
    rows = [[z] * dom.dim for _ in range(cod.dim)]
    for i in range(V.dim):
        for j in range(W.dim):
            rows[j * V.dim + i][i * W.dim + j] = o
    return LinMap(dom, cod, tuple(tuple(r) for r in rows))


def left_inverse_on_image(f: LinMap) -> LinMap:
    """A map g with g∘f = id on f's domain.

    Requires f injective (full column rank, decided by exact elimination).
    Off the image g is whatever the reduced-row-echelon pseudo-solve
    produces, which is deterministic.
    """
    R, E, pivots = rref_with_transform(f.rows, f.field)
    if len(pivots) != f.domain.dim:
        raise NotInjective(
            f"rank {len(pivots)} < domain dimension {f.domain.dim}"
        )
    rows = tuple(tuple(E[r]) for r in range(f.domain.dim))
    return LinMap(f.codomain, f.domain, rows)


def rank(f: LinMap) -> int:
    return f.rank


def image_basis(f: LinMap) -> list[Vector]:
    """Canonical (echelonised) basis of the image of f."""
    return Subspace.from_vectors(f.codomain, f.columns()).basis_vectors


def solve_coordinates(basis: Sequence[Vector], target: Vector):
    """Coordinates of ``target`` in the span of ``basis`` (or None).

    The basis vectors need not be independent; free coefficients are zero.
    """
    if not basis:
        return None if not target.is_zero else []
    space = target.space
    a_rows = [[v.coords[i] for v in basis] for i in range(space.dim)]
    return solve(a_rows, list(target.coords), space.field)


class Subspace:
    """A subspace in canonical reduced-row-echelon form.

    Two subspaces are equal iff their canonical bases coincide, which makes
    span comparisons exact and deterministic.
    """

    def __init__(self, space: FinVec, rref_rows: list[list]):
        self.space = space
        self.rows = [r for r in rref_rows if any(r)]

    @classmethod
    def from_vectors(cls, space: FinVec, vectors: Iterable[Vector]) -> "Subspace":
        rows = [list(v.coords) for v in vectors]
        if not rows:
            return cls(space, [])
        red, _ = rref(rows, space.field)
        return cls(space, red)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def basis_vectors(self) -> list[Vector]:
        return [Vector(self.space, tuple(r)) for r in self.rows]

    def contains(self, v: Vector) -> bool:
        if v.space != self.space:
            raise ShapeMismatch("vector lives in a different space")
        residual = list(v.coords)
        for row in self.rows:
            lead = next(i for i, x in enumerate(row) if x)
            c = residual[lead]
            if c:
                residual = [a - c * b for a, b in zip(residual, row)]
        return not any(residual)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis_vectors)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.space == other.space
                and self.rows == other.rows)

    def __repr__(self):
        return f"Subspace(dim={self.dim} of {self.space.dim})"


# ---------------------------------------------------------------------------
# rank-3 structure-constant tensors
# ---------------------------------------------------------------------------

PAIR_TO_ONE = "pair_to_one"   # X⊗Y → Z, entries[i][j][k] = coeff of z_k in (x_i, y_j)
ONE_TO_PAIR = "one_to_pair"   # X → Y⊗Z, entries[i][j][k] = coeff of y_j⊗z_k in image of x_i


@dataclass(frozen=True)
class Tensor3:
    """Dense rank-3 tensor of structure constants with a declared orientation."""

    kind: str
    spaces: tuple[FinVec, FinVec, FinVec]
    entries: tuple

    def __post_init__(self):
        if self.kind not in (PAIR_TO_ONE, ONE_TO_PAIR):
            raise ShapeMismatch(f"unknown tensor orientation {self.kind!r}")
        X, Y, Z = self.spaces
        if len(self.entries) != X.dim or any(
            len(plane) != Y.dim or any(len(row) != Z.dim for row in plane)
            for plane in self.entries
        ):
            raise ShapeMismatch("tensor entry shape does not match the spaces")

    @classmethod
    def from_entries(cls, kind: str, spaces, entries) -> "Tensor3":
        f = spaces[0].field
        ent = tuple(
            tuple(tuple(f.coerce(x) for x in row) for row in plane) for plane in entries
        )
        return cls(kind, tuple(spaces), ent)

    def to_linmap(self) -> LinMap:
        X, Y, Z = self.spaces
        if self.kind == PAIR_TO_ONE:
            dom = tensor_product(X, Y)
            rows = tuple(
                tuple(self.entries[i][j][k] for i in range(X.dim) for j in range(Y.dim))
                for k in range(Z.dim)
            )
            return LinMap(dom, Z, rows)
        cod = tensor_product(Y, Z)
        rows = tuple(
            tuple(self.entries[i][j][k] for i in range(X.dim))
            for j in range(Y.dim) for k in range(Z.dim)
        )
        return LinMap(X, cod, rows)

    @classmethod
    def from_linmap(cls, kind: str, spaces, f: LinMap) -> "Tensor3":
        X, Y, Z = spaces
        if kind == PAIR_TO_ONE:
            entries = tuple(
                tuple(
                    tuple(f.rows[k][i * Y.dim + j] for k in range(Z.dim))
                    for j in range(Y.dim)
                )
                for i in range(X.dim)
            )
        else:
            entries = tuple(
                tuple(
                    tuple(f.rows[j * Z.dim + k][i] for k in range(Z.dim))
                    for j in range(Y.dim)
                )
                for i in range(X.dim)
            )
        return cls(kind, tuple(spaces), entries)
