"""Finite groupoids and the three weak Hopf example families built from them:
the groupoid algebra, its dual, and the abelian-group construction with the
averaged comultiplication.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import AxiomViolation, CharacteristicDividesOrder, ShapeMismatch
from .scalars import Field
from .tensor_space import FinVec, LinMap, Vector, ground
from .weak_hopf import AlgebraData, CoalgebraData, WeakBialgebraData, WeakHopfData


@dataclass(frozen=True)
class FiniteGroupoid:
    """A validated finite groupoid.

    ``mul`` is the partial multiplication as a dict on composable pairs,
    ``inv`` the (total) inversion.  ``d``/``r`` are the source and range maps
    g ↦ g⁻¹g and g ↦ gg⁻¹; ``identities`` is the ordered list of objects.
    Elements are ordered identities-first, each block sorted, which fixes
    every downstream basis ordering.
    """

    elements: tuple[str, ...]
    mul: dict
    inv: dict
    d: dict = field(compare=False)
    r: dict = field(compare=False)
    identities: tuple[str, ...] = field(compare=False)

    @property
    def composable(self) -> set[tuple[str, str]]:
        return set(self.mul.keys())

    def index(self, g: str) -> int:
        return self.elements.index(g)

    def isotropy(self, e: str) -> tuple[str, ...]:
        return tuple(g for g in self.elements if self.d[g] == e and self.r[g] == e)

    def exists(self, g: str, h: str) -> bool:
        return (g, h) in self.mul

    def product(self, g: str, h: str):
        return self.mul.get((g, h))

    def __repr__(self):
        return f"FiniteGroupoid({len(self.elements)} elements, {len(self.identities)} objects)"


def validate_groupoid(elements, mul, inv) -> FiniteGroupoid:
    """Exhaustively verify the groupoid axioms and their standard consequences,
    then derive the source/range maps, objects and composable pairs.

    Raises AxiomViolation with the axiom tag and a witness tuple on failure.
    """
    elements = list(elements)
    if not elements:
        raise AxiomViolation("nonempty", ())
    if len(set(elements)) != len(elements):
        raise AxiomViolation("distinct-elements", ())
    eset = set(elements)
    mul = dict(mul)
    for (g, h), gh in mul.items():
        if g not in eset or h not in eset or gh not in eset:
            raise AxiomViolation("table-range", (g, h, gh))
    inv = dict(inv)
    if set(inv) != eset or any(v not in eset for v in inv.values()):
        raise AxiomViolation("inverse-total", ())

    def ex(g, h):
        return (g, h) in mul

    # (i)+(ii): ∃(gh)l ⇔ ∃gh ∧ ∃hl ⇔ ∃g(hl), with equal products
    for g, h, l in itertools.product(elements, repeat=3):
        left_defined = ex(g, h) and ex(mul[g, h], l)
        right_defined = ex(h, l) and ex(g, mul[h, l])
        both_factors = ex(g, h) and ex(h, l)
        if left_defined != right_defined:
            raise AxiomViolation("(i)", (g, h, l))
        if left_defined != both_factors:
            raise AxiomViolation("(ii)", (g, h, l))
        if left_defined and mul[mul[g, h], l] != mul[g, mul[h, l]]:
            raise AxiomViolation("(i)", (g, h, l))

    # (iii): unique local units
    d, r = {}, {}
    for g in elements:
        rights = [x for x in elements if ex(g, x) and mul[g, x] == g]
        lefts = [x for x in elements if ex(x, g) and mul[x, g] == g]
        if len(rights) != 1 or len(lefts) != 1:
            raise AxiomViolation("(iii)", (g,))
        d[g], r[g] = rights[0], lefts[0]

    # (iv): declared inverses produce the local units
    for g in elements:
        gi = inv[g]
        if not (ex(gi, g) and mul[gi, g] == d[g] and ex(g, gi) and mul[g, gi] == r[g]):
            raise AxiomViolation("(iv)", (g, gi))

    identities = sorted({d[g] for g in elements} | {r[g] for g in elements})

    # consequences of the definition, verified for safety
    for e in identities:
        if not (ex(e, e) and mul[e, e] == e and inv[e] == e and d[e] == e and r[e] == e):
            raise AxiomViolation("prop-(i)", (e,))
    for g in elements:
        candidates = [
            x for x in elements
            if ex(x, g) and mul[x, g] == d[g] and ex(g, x) and mul[g, x] == r[g]
        ]
        if candidates != [inv[g]]:
            raise AxiomViolation("prop-(ii)", (g,))
        if inv[inv[g]] != g:
            raise AxiomViolation("prop-(ii)", (g,))
    for g, h in itertools.product(elements, repeat=2):
        if ex(g, h) != (d[g] == r[h]):
            raise AxiomViolation("prop-(iii)", (g, h))
        if ex(g, h):
            gh = mul[g, h]
            if d[gh] != d[h] or r[gh] != r[g]:
                raise AxiomViolation("prop-(iii)", (g, h))
            if not ex(inv[h], inv[g]) or mul[inv[h], inv[g]] != inv[gh]:
                raise AxiomViolation("prop-(iv)", (g, h))

    rest = sorted(g for g in elements if g not in set(identities))
    ordered = tuple(identities) + tuple(rest)
    return FiniteGroupoid(ordered, mul, inv, d, r, tuple(identities))


# ---------------------------------------------------------------------------
# constructors for the recurring example family
# ---------------------------------------------------------------------------

def trivial_groupoid(n_objects: int) -> FiniteGroupoid:
    """n isolated identities (disjoint union of trivial groups)."""
    elements = [f"e{i + 1}" for i in range(n_objects)]
    mul = {(e, e): e for e in elements}
    inv = {e: e for e in elements}
    return validate_groupoid(elements, mul, inv)


def _cyclic_block(n: int, prefix: str):
    labels = [f"{prefix}e"] + [f"{prefix}a{k}" if k > 1 else f"{prefix}a" for k in range(1, n)]
    mul = {}
    for i in range(n):
        for j in range(n):
            mul[labels[i], labels[j]] = labels[(i + j) % n]
    inv = {labels[i]: labels[(-i) % n] for i in range(n)}
    return labels, mul, inv


def cyclic_group_groupoid(n: int, prefix: str = "") -> FiniteGroupoid:
    """Z/n as a one-object groupoid."""
    labels, mul, inv = _cyclic_block(n, prefix)
    return validate_groupoid(labels, mul, inv)


def disjoint_union_of_cyclic(orders) -> FiniteGroupoid:
    """Disjoint union of cyclic groups; arrows never cross components."""
    elements, mul, inv = [], {}, {}
    for i, n in enumerate(orders):
        labels, m, iv = _cyclic_block(n, prefix=f"g{i + 1}.")
        elements += labels
        mul.update(m)
        inv.update(iv)
    return validate_groupoid(elements, mul, inv)


def two_object_iso_groupoid() -> FiniteGroupoid:
    """The 4-element groupoid with objects e, f and one isomorphism g: e → f."""
    elements = ["e", "f", "g", "g^-1"]
    mul = {
        ("e", "e"): "e", ("f", "f"): "f",
        ("f", "g"): "g", ("g", "e"): "g",
        ("g^-1", "f"): "g^-1", ("e", "g^-1"): "g^-1",
        ("g", "g^-1"): "f", ("g^-1", "g"): "e",
    }
    inv = {"e": "e", "f": "f", "g": "g^-1", "g^-1": "g"}
    return validate_groupoid(elements, mul, inv)


def groupoid_from_spec(spec: dict) -> FiniteGroupoid:
    """Parse the two supported input forms.

    Explicit: ``{"elements": [...], "mul": [[g, h, gh], ...], "inv": {g: g⁻¹}}``.
    Shorthand: ``{"disjoint_union": [{"group": "Z/2"}, {"group": "Z/3"}]}``.
    """
    if "disjoint_union" in spec:
        orders = []
        for item in spec["disjoint_union"]:
            name = item["group"].strip()
            if not name.startswith("Z/"):
                raise ShapeMismatch(f"unsupported group {name!r}; use Z/n")
            orders.append(int(name[2:]))
        return disjoint_union_of_cyclic(orders)
    elements = spec["elements"]
    mul = {(g, h): gh for g, h, gh in spec["mul"]}
    inv = dict(spec["inv"])
    return validate_groupoid(elements, mul, inv)


def groupoid_to_spec(G: FiniteGroupoid) -> dict:
    return {
        "elements": list(G.elements),
        "mul": sorted([g, h, gh] for (g, h), gh in G.mul.items()),
        "inv": {g: G.inv[g] for g in G.elements},
    }


# ---------------------------------------------------------------------------
# weak Hopf structures on groupoids
# ---------------------------------------------------------------------------

def groupoid_algebra(G: FiniteGroupoid, field: Field) -> WeakHopfData:
    """The groupoid algebra: basis δ_g, product δ_gδ_h = δ_{gh} on composable
    pairs (zero otherwise), grouplike comultiplication, unit Σ_e δ_e and
    antipode δ_g ↦ δ_{g⁻¹}."""
    space = FinVec(field, G.elements)
    n = space.dim
    z, o = field.zero(), field.one()

    mul_entries = [[[z] * n for _ in range(n)] for _ in range(n)]
    for (g, h), gh in G.mul.items():
        mul_entries[G.index(g)][G.index(h)][G.index(gh)] = o
    unit = [o if g in set(G.identities) else z for g in G.elements]
    alg = AlgebraData.from_tensor(space, mul_entries, unit)

    comul_entries = [[[z] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        comul_entries[i][i][i] = o
    coalg = CoalgebraData.from_tensor(space, comul_entries, [o] * n)

    s_rows = [[z] * n for _ in range(n)]
    for j, g in enumerate(G.elements):
        s_rows[G.index(G.inv[g])][j] = o
    antipode = LinMap(space, space, tuple(tuple(r) for r in s_rows))
    return WeakHopfData(WeakBialgebraData(alg, coalg), antipode)


def dual_groupoid_algebra(G: FiniteGroupoid, field: Field) -> WeakHopfData:
    """The dual structure written out directly on the basis {p_g}: pointwise
    product, unit Σ p_g, coproduct Δ(p_g) = Σ_{∃h⁻¹g} p_h ⊗ p_{h⁻¹g},
    counit p_g ↦ p_g(Σ δ_e) and antipode p_g ↦ p_{g⁻¹}.

    Built independently of :func:`weak_hopf.dualize` so the two construction
    routes can be compared tensor-entrywise.
    """
    space = FinVec(field, tuple(f"p_{g}" for g in G.elements))
    n = space.dim
    z, o = field.zero(), field.one()

    mul_entries = [[[z] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        mul_entries[i][i][i] = o
    alg = AlgebraData.from_tensor(space, mul_entries, [o] * n)

    comul_entries = [[[z] * n for _ in range(n)] for _ in range(n)]
    for k, g in enumerate(G.elements):
        for i, h in enumerate(G.elements):
            hig = G.product(G.inv[h], g)
            if hig is not None:
                comul_entries[k][i][G.index(hig)] = o
    counit = [o if g in set(G.identities) else z for g in G.elements]
    coalg = CoalgebraData.from_tensor(space, comul_entries, counit)

    s_rows = [[z] * n for _ in range(n)]
    for j, g in enumerate(G.elements):
        s_rows[G.index(G.inv[g])][j] = o
    antipode = LinMap(space, space, tuple(tuple(r) for r in s_rows))
    return WeakHopfData(WeakBialgebraData(alg, coalg), antipode)


# ---------------------------------------------------------------------------
# the abelian-group example
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FiniteAbelianGroup:
    """A finite abelian group as a product of cyclic factors."""

    factors: tuple[int, ...]

    def __post_init__(self):
        if not self.factors or any(n < 1 for n in self.factors):
            raise ShapeMismatch("factors must be positive integers")

    @property
    def order(self) -> int:
        out = 1
        for n in self.factors:
            out *= n
        return out

    @property
    def elements(self) -> list[tuple[int, ...]]:
        return list(itertools.product(*(range(n) for n in self.factors)))

    def label(self, g: tuple[int, ...]) -> str:
        return ",".join(str(x) for x in g)

    def op(self, g, h):
        return tuple((a + b) % n for a, b, n in zip(g, h, self.factors))

    def neg(self, g):
        return tuple((-a) % n for a, n in zip(g, self.factors))

    @property
    def identity(self):
        return tuple(0 for _ in self.factors)


def abelian_group_weak_hopf(G: FiniteAbelianGroup, field: Field) -> WeakHopfData:
    """Group algebra of a finite abelian group with the averaged coproduct
    Δ(g) = (1/N) Σ_h gh ⊗ h⁻¹, counit ε(g) = N·[g = 1], identity antipode.

    Requires that the field characteristic does not divide N = |G|.
    """
    N = G.order
    if field.char_divides(N):
        raise CharacteristicDividesOrder(
            f"characteristic {field.characteristic} divides |G| = {N}"
        )
    elems = G.elements
    index = {g: i for i, g in enumerate(elems)}
    space = FinVec(field, tuple(G.label(g) for g in elems))
    n = space.dim
    z, o = field.zero(), field.one()
    inv_n = field.inv(field.from_int(N))

    mul_entries = [[[z] * n for _ in range(n)] for _ in range(n)]
    for i, g in enumerate(elems):
        for j, h in enumerate(elems):
            mul_entries[i][j][index[G.op(g, h)]] = o
    unit = [o if g == G.identity else z for g in elems]
    alg = AlgebraData.from_tensor(space, mul_entries, unit)

    comul_entries = [[[z] * n for _ in range(n)] for _ in range(n)]
    for i, g in enumerate(elems):
        for h in elems:
            comul_entries[i][index[G.op(g, h)]][index[G.neg(h)]] = inv_n
    counit = [field.from_int(N) if g == G.identity else z for g in elems]
    coalg = CoalgebraData.from_tensor(space, comul_entries, counit)

    return WeakHopfData(WeakBialgebraData(alg, coalg), LinMap.identity(space))
