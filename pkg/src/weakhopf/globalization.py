"""Globalization of right partial module-coalgebra actions.

A globalization packages a global right module coalgebra D, a coalgebra
monomorphism θ: C → D and a projection π of D onto θ(C) that together
recover the partial action as θ(c↼h) = π(θ(c)◂h) and generate D from θ(C).

When H contains a grouplike element e absorbed by the action (c↼he = c↼h),
the standard construction D = C⊗eH with θ(c) = c⊗e and
π(c⊗eh) = (c↼eh)⊗e produces such a triple.

The dual transfer turns a globalization of (C, ↼) into a globalization of
the left partial module algebra C* inside D*, through φ(α) = α∘θ⁻¹∘π, and
the two verdicts agree; both directions are checked exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .dualization import dual_convolution_algebra, dualize_right_coalgebra_action
from .errors import HypothesisViolated, InputNotGlobalization, NotInjective, ShapeMismatch
from .partial_actions import LEFT, RIGHT, ActionTensor, check_module_algebra, \
    check_module_coalgebra
from .report import CheckResult, Report, compare_maps, compare_vectors
from .tensor_space import (
    FinVec,
    LinMap,
    Subspace,
    Vector,
    left_inverse_on_image,
    solve_coordinates,
    tensor_product,
)
from .weak_hopf import CoalgebraData, WeakHopfData


@dataclass(frozen=True)
class GrouplikeElement:
    """An element e with Δ(e) = e⊗e (hence ε(e) = 1)."""

    element: Vector
    label: str


def is_grouplike(H: WeakHopfData, v: Vector) -> bool:
    return not v.is_zero and H.delta(v) == v.tensor(v)


def absorbed_by(act: ActionTensor, v: Vector) -> bool:
    """Whether c↼(hv) = c↼h for all c and h, as an exact map identity."""
    ident_c = LinMap.identity(act.space)
    rmul_v = act.hopf.alg.rmul(v)
    return act.action @ ident_c.tensor(rmul_v) == act.action


def find_basis_grouplikes(act: ActionTensor) -> list[GrouplikeElement]:
    """Grouplike elements absorbed by a right partial action, among the basis
    vectors of H and 0/1-sums of the idempotent grouplike basis vectors.

    The general variety of grouplikes (solutions of quadratic systems) is not
    searched; the returned list may be empty.
    """
    if act.side != RIGHT or not act.is_coalgebra_action():
        raise ShapeMismatch("grouplike search expects a right action on a coalgebra")
    H = act.hopf
    space = H.space
    candidates: list[tuple[Vector, str]] = [
        (Vector.basis(space, i), space.labels[i]) for i in range(space.dim)
    ]
    idempotent_grouplikes = [
        i for i in range(space.dim)
        if is_grouplike(H, Vector.basis(space, i))
        and H.product(Vector.basis(space, i), Vector.basis(space, i))
        == Vector.basis(space, i)
    ]
    if 2 <= len(idempotent_grouplikes) <= 12:
        for size in range(2, len(idempotent_grouplikes) + 1):
            for combo in itertools.combinations(idempotent_grouplikes, size):
                v = Vector.zero(space)
                for i in combo:
                    v = v + Vector.basis(space, i)
                candidates.append((v, "+".join(space.labels[i] for i in combo)))
    out = []
    for v, label in candidates:
        if is_grouplike(H, v) and absorbed_by(act, v):
            out.append(GrouplikeElement(v, label))
    return out


@dataclass(frozen=True)
class GlobalizationTriple:
    partial: ActionTensor       # right partial action ↼ on C
    D: CoalgebraData
    global_act: ActionTensor    # right global action ◂ on D
    theta: LinMap               # C → D
    pi: LinMap                  # D → D, projection onto θ(C)

    def __post_init__(self):
        C = self.partial.carrier.space
        Ds = self.D.space
        if self.theta.domain != C or self.theta.codomain != Ds:
            raise ShapeMismatch("θ must map C into D")
        if self.pi.domain != Ds or self.pi.codomain != Ds:
            raise ShapeMismatch("π must be an endomorphism of D")
        if self.global_act.carrier.space != Ds:
            raise ShapeMismatch("the global action must live on D")


def check_globalization(gt: GlobalizationTriple) -> Report:
    """Every clause of the globalization definition, exactly:

    (i) D is a coalgebra carrying a global right action; (ii) θ is a
    coalgebra monomorphism; (iii) π is a projection onto θ(C) satisfying the
    comultiplication compatibility, the counit-weighted projection rule, and
    the recovery of the partial action; (iv) θ(C) generates D under ◂.
    """
    rep = Report("globalization triple")
    C = gt.partial.carrier
    D = gt.D
    H = gt.partial.hopf

    rep.extend(D.validate(), prefix="(i)-")
    rep.extend(check_module_coalgebra(gt.global_act), prefix="(i)-")

    injective = gt.theta.rank == C.space.dim
    rep.add(CheckResult("(ii)-theta-injective", injective,
                        None if injective else f"rank {gt.theta.rank} < {C.space.dim}"))
    rep.add(compare_maps("(ii)-theta-comult",
                         D.comul @ gt.theta,
                         gt.theta.tensor(gt.theta) @ C.comul))
    rep.add(compare_maps("(ii)-theta-counit", D.counit @ gt.theta, C.counit))

    rep.add(compare_maps("(iii)-pi-projection", gt.pi @ gt.pi, gt.pi))
    im_pi = Subspace.from_vectors(D.space, gt.pi.columns())
    im_theta = Subspace.from_vectors(D.space, gt.theta.columns())
    rep.add(CheckResult("(iii)-pi-image", im_pi == im_theta,
                        None if im_pi == im_theta else "im π ≠ θ(C)"))

    rep.add(compare_maps("Eq 5", gt.pi.tensor(gt.pi) @ D.comul, D.comul @ gt.pi))

    fail = None
    for k in range(H.space.dim):
        slice_k = gt.global_act.slices[k]
        lhs = gt.pi @ slice_k @ gt.pi

        def image(d: int, slice_k=slice_k) -> Vector:
            out = Vector.zero(D.space)
            for a, b, c in D.delta_pairs(d):
                s = D.eps(gt.pi.apply(Vector.basis(D.space, a)))
                if s:
                    out = out + gt.pi.apply(slice_k.apply(Vector.basis(D.space, b))).scale(c * s)
            return out

        rhs = LinMap.from_function(D.space, D.space, image)
        r = compare_maps("Eq 6", lhs, rhs)
        if not r.passed:
            fail = CheckResult("Eq 6", False, f"h={H.space.labels[k]}; {r.witness}")
            break
    rep.add(fail or CheckResult("Eq 6", True))

    fail = None
    for k in range(H.space.dim):
        lhs = gt.theta @ gt.partial.slices[k]
        rhs = gt.pi @ gt.global_act.slices[k] @ gt.theta
        r = compare_maps("Eq 7", lhs, rhs)
        if not r.passed:
            fail = CheckResult("Eq 7", False, f"h={H.space.labels[k]}; {r.witness}")
            break
    rep.add(fail or CheckResult("Eq 7", True))

    generated = Subspace.from_vectors(
        D.space,
        [gt.global_act.slices[k].apply(gt.theta.column(i))
         for i in range(C.space.dim) for k in range(H.space.dim)],
    )
    rep.add(CheckResult("(iv)-generation", generated.dim == D.space.dim,
                        None if generated.dim == D.space.dim
                        else f"θ(C)◂H spans {generated.dim} of {D.space.dim} dimensions"))
    return rep


def standard_globalization(act: ActionTensor, e) -> GlobalizationTriple:
    """The globalization D = C⊗eH of a right partial action, built from a
    grouplike e that the action absorbs.

    θ(c) = c⊗e, the global action multiplies the right tensor factor, and
    π(c⊗eh) = (c↼eh)⊗e.  Raises HypothesisViolated if Δ(e) ≠ e⊗e or if
    c↼he ≠ c↼h for some basis pair.
    """
    if act.side != RIGHT or not act.is_coalgebra_action():
        raise ShapeMismatch("standard globalization expects a right action on a coalgebra")
    H = act.hopf
    C = act.carrier
    evec = e.element if isinstance(e, GrouplikeElement) else e
    if not is_grouplike(H, evec):
        raise HypothesisViolated("grouplike", "Δ(e) ≠ e⊗e or e = 0")
    if not absorbed_by(act, evec):
        raise HypothesisViolated("absorption", "c↼he ≠ c↼h for some basis pair")

    # basis of the subspace eH
    lmul_e = H.alg.lmul(evec)
    eH = Subspace.from_vectors(H.space, lmul_e.columns())
    f_vectors = eH.basis_vectors
    t = len(f_vectors)
    m = C.space.dim
    field = C.space.field

    dspace = FinVec(field, tuple(
        f"{cl}⊗eh{j}" for cl in C.space.labels for j in range(t)))

    pair_basis = [a.tensor(b) for a in f_vectors for b in f_vectors]
    f_delta_coords = []
    for fj in f_vectors:
        coords = solve_coordinates(pair_basis, H.delta(fj))
        if coords is None:
            raise HypothesisViolated("grouplike", "Δ(eH) escapes eH⊗eH")
        f_delta_coords.append(coords)

    # comultiplication of D in the product basis
    DD = tensor_product(dspace, dspace)

    def comul_image(idx: int) -> Vector:
        i, j = divmod(idx, t)
        out = Vector.zero(DD)
        for a, b, cc in C.delta_pairs(i):
            for pq, ch in enumerate(f_delta_coords[j]):
                if not ch:
                    continue
                p, q = divmod(pq, t)
                pos = (a * t + p) * dspace.dim + (b * t + q)
                out = out + Vector.basis(DD, pos).scale(cc * ch)
        return out

    comul = LinMap.from_function(dspace, DD, comul_image)
    counit = LinMap.from_rows(
        dspace, C.counit.codomain,
        [[C.eps_coeff(i) * H.eps(f_vectors[j]) for i in range(m) for j in range(t)]])
    D = CoalgebraData(dspace, comul, counit)

    # right action on the last tensor factor
    slices = []
    for k in range(H.space.dim):
        ek = Vector.basis(H.space, k)
        cols = []
        for i in range(m):
            for j in range(t):
                prod = H.product(f_vectors[j], ek)
                coords = solve_coordinates(f_vectors, prod)
                col = [field.zero()] * dspace.dim
                for jj, c in enumerate(coords):
                    if c:
                        col[i * t + jj] = c
                cols.append(col)
        slices.append(LinMap.from_images(dspace, dspace, cols))
    global_act = ActionTensor.from_slices(H, D, RIGHT, slices)

    e_coords = solve_coordinates(f_vectors, evec)
    theta_cols = []
    for i in range(m):
        col = [field.zero()] * dspace.dim
        for j, c in enumerate(e_coords):
            if c:
                col[i * t + j] = c
        theta_cols.append(col)
    theta = LinMap.from_images(C.space, dspace, theta_cols)

    pi_cols = []
    for i in range(m):
        for j in range(t):
            moved = act.act_by(f_vectors[j]).apply(Vector.basis(C.space, i))
            col = [field.zero()] * dspace.dim
            for ci, cv in moved.nonzeros():
                for jj, c in enumerate(e_coords):
                    if c:
                        col[ci * t + jj] = col[ci * t + jj] + cv * c
            pi_cols.append(col)
    pi = LinMap.from_images(dspace, dspace, pi_cols)

    return GlobalizationTriple(act, D, global_act, theta, pi)


# ---------------------------------------------------------------------------
# dual transfer
# ---------------------------------------------------------------------------

@dataclass
class DualGlobalizationResult:
    """Both sides of the globalization equivalence: the coalgebra-side report
    for the input triple, and the algebra-side report for (H▷φ(C*), φ)."""

    coalgebra_report: Report
    algebra_report: Report
    phi: LinMap | None
    B: Subspace | None
    partial_dual: ActionTensor | None   # left partial action ⇀ on C*
    global_dual: ActionTensor | None    # left global action ▷ on D*

    @property
    def ok(self) -> bool:
        return self.coalgebra_report.ok and self.algebra_report.ok


def dual_globalization_transfer(gt: GlobalizationTriple,
                                strict: bool = True) -> DualGlobalizationResult:
    """Transfer a globalization triple to the dual side and verify the
    algebra-globalization conditions for (B, φ) with B = H▷φ(C*) ⊆ D* and
    φ(α) = α∘θ⁻¹∘π.

    With ``strict`` the input must itself pass check_globalization; with
    ``strict=False`` both reports are produced regardless, which is how the
    two sides of the equivalence are compared on corrupted inputs.
    """
    coalg_rep = check_globalization(gt)
    if strict and not coalg_rep.ok:
        raise InputNotGlobalization(
            f"input fails: {[r.label for r in coalg_rep.failures]}")

    rep = Report("dual algebra globalization")
    H = gt.partial.hopf
    C = gt.partial.carrier
    D = gt.D

    Cstar = dual_convolution_algebra(C)
    Dstar = dual_convolution_algebra(D)

    # left partial action on C* and left global action on D* by transposition
    partial_dual = dualize_right_coalgebra_action(gt.partial, check=False)
    g_slices = [LinMap(Dstar.space, Dstar.space, s.transposed_rows())
                for s in gt.global_act.slices]
    global_dual = ActionTensor.from_slices(H, Dstar, LEFT, g_slices)

    try:
        theta_li = left_inverse_on_image(gt.theta)
    except NotInjective:
        rep.add(CheckResult("(i)-phi-injective", False, "θ is not injective"))
        return DualGlobalizationResult(coalg_rep, rep, None, None,
                                       partial_dual, global_dual)

    n_map = theta_li @ gt.pi                       # D → C
    phi = LinMap(Cstar.space, Dstar.space, n_map.transposed_rows())

    rep.extend(check_module_algebra(global_dual), prefix="Dstar-")

    b_gens = [global_dual.slices[k].apply(phi.column(a))
              for k in range(H.space.dim) for a in range(Cstar.space.dim)]
    B = Subspace.from_vectors(Dstar.space, b_gens)

    closed_mul = None
    for b1 in B.basis_vectors:
        for b2 in B.basis_vectors:
            if not B.contains(Dstar.product(b1, b2)):
                closed_mul = f"{b1.describe()} · {b2.describe()} escapes B"
                break
        if closed_mul:
            break
    rep.add(CheckResult("B-closed-product", closed_mul is None, closed_mul))

    closed_act = None
    for k in range(H.space.dim):
        for b in B.basis_vectors:
            if not B.contains(global_dual.slices[k].apply(b)):
                closed_act = f"h={H.space.labels[k]} moves B outside itself"
                break
        if closed_act:
            break
    rep.add(CheckResult("B-closed-action", closed_act is None, closed_act))

    injective = phi.rank == Cstar.space.dim
    rep.add(CheckResult("(i)-phi-injective", injective,
                        None if injective else "φ has a kernel"))
    rep.add(compare_maps("(i)-phi-multiplicative",
                         phi @ Cstar.mul, Dstar.mul @ phi.tensor(phi)))

    phi_image = Subspace.from_vectors(Dstar.space, phi.columns())
    ideal_fail = None
    for a in range(Cstar.space.dim):
        fa = phi.column(a)
        for b in b_gens:
            if not phi_image.contains(Dstar.product(fa, b)):
                ideal_fail = (f"φ({Cstar.space.labels[a]})·b escapes φ(C*) "
                              f"for b={b.describe()}")
                break
        if ideal_fail:
            break
    rep.add(CheckResult("(i)-right-ideal", ideal_fail is None, ideal_fail))

    phi_one = phi.apply(Cstar.unit)
    induced_fail = None
    for k in range(H.space.dim):
        for a in range(Cstar.space.dim):
            lhs = phi.apply(partial_dual.slices[k].apply(Vector.basis(Cstar.space, a)))
            rhs = Dstar.product(phi_one, global_dual.slices[k].apply(phi.column(a)))
            r = compare_vectors("(ii)-induced-action", lhs, rhs)
            if not r.passed:
                induced_fail = CheckResult(
                    "(ii)-induced-action", False,
                    f"h={H.space.labels[k]}, α={Cstar.space.labels[a]}; {r.witness}")
                break
        if induced_fail:
            break
    rep.add(induced_fail or CheckResult("(ii)-induced-action", True))

    contains_phi = all(B.contains(phi.column(a)) for a in range(Cstar.space.dim))
    rep.add(CheckResult("(iii)-generation", contains_phi,
                        None if contains_phi
                        else "φ(C*) ⊄ H▷φ(C*) (the unit slice is corrupted)"))

    return DualGlobalizationResult(coalg_rep, rep, phi, B, partial_dual, global_dual)
