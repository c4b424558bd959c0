"""JSON import/export for every workbench object.

All scalar entries are canonical strings produced by the field's formatter,
and `canonical_dumps` sorts keys, so identical inputs serialize to
byte-identical documents.
"""

from __future__ import annotations

import json

from .errors import ShapeMismatch
from .globalization import GlobalizationTriple
from .groupoid import (
    FiniteAbelianGroup,
    FiniteGroupoid,
    groupoid_from_spec,
    groupoid_to_spec,
)
from .partial_actions import ActionTensor, GroupoidPartialAction, LambdaFunctional
from .scalars import Field, field_from_name, field_name
from .tensor_space import FinVec, LinMap, Vector, ground
from .weak_hopf import AlgebraData, CoalgebraData, WeakBialgebraData, WeakHopfData


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _matrix_to(field: Field, rows):
    return [[field.fmt(x) for x in row] for row in rows]


def _tensor_to(field: Field, entries):
    return [[[field.fmt(x) for x in row] for row in plane] for plane in entries]


# -- bare linear data --------------------------------------------------------

def linmap_to_json(f: LinMap) -> dict:
    field = f.domain.field
    return {
        "schema": "linmap",
        "field": field_name(field),
        "domain": list(f.domain.labels),
        "codomain": list(f.codomain.labels),
        "rows": _matrix_to(field, f.rows),
    }


def linmap_from_json(d: dict) -> LinMap:
    field = field_from_name(d["field"])
    dom = FinVec(field, tuple(d["domain"]))
    cod = FinVec(field, tuple(d["codomain"]))
    return LinMap.from_rows(dom, cod, d["rows"])


def tensor3_to_json(t) -> dict:
    field = t.spaces[0].field
    return {
        "schema": "tensor3",
        "field": field_name(field),
        "kind": t.kind,
        "spaces": [list(s.labels) for s in t.spaces],
        "entries": _tensor_to(field, t.entries),
    }


def tensor3_from_json(d: dict):
    from .tensor_space import Tensor3

    field = field_from_name(d["field"])
    spaces = tuple(FinVec(field, tuple(labels)) for labels in d["spaces"])
    return Tensor3.from_entries(d["kind"], spaces, d["entries"])


# -- structures --------------------------------------------------------------

def algebra_to_json(A: AlgebraData) -> dict:
    f = A.field
    return {
        "schema": "algebra",
        "field": field_name(f),
        "basis": list(A.space.labels),
        "mul": _tensor_to(f, A.mul_tensor().entries),
        "unit": [f.fmt(x) for x in A.unit.coords],
    }


def algebra_from_json(d: dict) -> AlgebraData:
    f = field_from_name(d["field"])
    space = FinVec(f, tuple(d["basis"]))
    return AlgebraData.from_tensor(space, d["mul"], d["unit"])


def coalgebra_to_json(C: CoalgebraData) -> dict:
    f = C.field
    return {
        "schema": "coalgebra",
        "field": field_name(f),
        "basis": list(C.space.labels),
        "comul": _tensor_to(f, C.comul_tensor().entries),
        "counit": [f.fmt(x) for x in C.counit.rows[0]],
    }


def coalgebra_from_json(d: dict) -> CoalgebraData:
    f = field_from_name(d["field"])
    space = FinVec(f, tuple(d["basis"]))
    return CoalgebraData.from_tensor(space, d["comul"], d["counit"])


def weakhopf_to_json(H: WeakHopfData) -> dict:
    f = H.field
    return {
        "schema": "weak-hopf",
        "field": field_name(f),
        "basis": list(H.space.labels),
        "mul": _tensor_to(f, H.alg.mul_tensor().entries),
        "unit": [f.fmt(x) for x in H.unit.coords],
        "comul": _tensor_to(f, H.coalg.comul_tensor().entries),
        "counit": [f.fmt(x) for x in H.coalg.counit.rows[0]],
        "antipode": _matrix_to(f, H.antipode.rows),
    }


def weakhopf_from_json(d: dict) -> WeakHopfData:
    f = field_from_name(d["field"])
    space = FinVec(f, tuple(d["basis"]))
    alg = AlgebraData.from_tensor(space, d["mul"], d["unit"])
    coalg = CoalgebraData.from_tensor(space, d["comul"], d["counit"])
    antipode = LinMap.from_rows(space, space, d["antipode"])
    return WeakHopfData(WeakBialgebraData(alg, coalg), antipode)


def _carrier_to_json(carrier) -> dict:
    if isinstance(carrier, CoalgebraData):
        return coalgebra_to_json(carrier)
    return algebra_to_json(carrier)


def _carrier_from_json(d: dict):
    if d.get("schema") == "coalgebra":
        return coalgebra_from_json(d)
    if d.get("schema") == "algebra":
        return algebra_from_json(d)
    raise ShapeMismatch("carrier must be a coalgebra or algebra document")


def action_to_json(act: ActionTensor, groupoid: FiniteGroupoid | None = None) -> dict:
    f = act.hopf.field
    out = {
        "schema": "action",
        "field": field_name(f),
        "side": act.side,
        "hopf": weakhopf_to_json(act.hopf),
        "carrier": _carrier_to_json(act.carrier),
        "tensor": _tensor_to(f, act.tensor3().entries),
    }
    if groupoid is not None:
        out["groupoid"] = groupoid_to_spec(groupoid)
    return out


def action_from_json(d: dict) -> ActionTensor:
    hopf = weakhopf_from_json(d["hopf"])
    carrier = _carrier_from_json(d["carrier"])
    f = hopf.field
    side = d["side"]
    X = carrier.space
    H = hopf.space
    entries = d["tensor"]
    slices = []
    for i in range(H.dim):
        if side == "left":
            rows = [[f.parse(entries[i][j][k]) for j in range(X.dim)]
                    for k in range(X.dim)]
        else:
            rows = [[f.parse(entries[j][i][k]) for j in range(X.dim)]
                    for k in range(X.dim)]
        slices.append(LinMap(X, X, tuple(tuple(r) for r in rows)))
    return ActionTensor.from_slices(hopf, carrier, side, slices)


def action_groupoid_from_json(d: dict) -> FiniteGroupoid | None:
    if "groupoid" in d:
        return groupoid_from_spec(d["groupoid"])
    return None


def lambda_to_json(lf: LambdaFunctional, groupoid: FiniteGroupoid | None = None,
                   hopf_kind: str | None = None, side: str = "left") -> dict:
    f = lf.hopf.field
    out = {
        "schema": "lambda",
        "field": field_name(f),
        "side": side,
        "hopf": weakhopf_to_json(lf.hopf),
        "values": [f.fmt(v) for v in lf.values],
    }
    if groupoid is not None:
        out["groupoid"] = groupoid_to_spec(groupoid)
    if hopf_kind is not None:
        out["hopf_kind"] = hopf_kind
    return out


def lambda_from_json(d: dict):
    """Returns (functional, groupoid_or_None, hopf_kind_or_None, side)."""
    from .groupoid import dual_groupoid_algebra, groupoid_algebra

    f = field_from_name(d["field"])
    G = groupoid_from_spec(d["groupoid"]) if "groupoid" in d else None
    kind = d.get("hopf_kind")
    if "hopf" in d:
        hopf = weakhopf_from_json(d["hopf"])
    elif G is not None and kind in ("kG", "kG-dual"):
        hopf = groupoid_algebra(G, f) if kind == "kG" else dual_groupoid_algebra(G, f)
    else:
        raise ShapeMismatch("lambda document needs 'hopf' or 'groupoid'+'hopf_kind'")
    lf = LambdaFunctional.from_values(hopf, d["values"])
    return lf, G, kind, d.get("side", "left")


def gpa_to_json(gpa: GroupoidPartialAction) -> dict:
    f = gpa.coalgebra.field
    return {
        "schema": "groupoid-action",
        "field": field_name(f),
        "groupoid": groupoid_to_spec(gpa.groupoid),
        "coalgebra": coalgebra_to_json(gpa.coalgebra),
        "projections": {g: _matrix_to(f, gpa.P(g).rows) for g in gpa.groupoid.elements},
        "isos": {g: _matrix_to(f, gpa.theta(g).rows) for g in gpa.groupoid.elements},
    }


def gpa_from_json(d: dict) -> GroupoidPartialAction:
    G = groupoid_from_spec(d["groupoid"])
    C = coalgebra_from_json(d["coalgebra"])
    space = C.space
    projections = {g: LinMap.from_rows(space, space, d["projections"][g])
                   for g in G.elements}
    isos = {g: LinMap.from_rows(space, space, d["isos"][g]) for g in G.elements}
    return GroupoidPartialAction(G, C, projections, isos)


def triple_to_json(gt: GlobalizationTriple) -> dict:
    f = gt.partial.hopf.field
    return {
        "schema": "globalization",
        "field": field_name(f),
        "partial": action_to_json(gt.partial),
        "D": coalgebra_to_json(gt.D),
        "global_tensor": _tensor_to(f, gt.global_act.tensor3().entries),
        "theta": _matrix_to(f, gt.theta.rows),
        "pi": _matrix_to(f, gt.pi.rows),
    }


def triple_from_json(d: dict) -> GlobalizationTriple:
    partial = action_from_json(d["partial"])
    D = coalgebra_from_json(d["D"])
    f = partial.hopf.field
    H = partial.hopf.space
    X = D.space
    entries = d["global_tensor"]
    slices = []
    for i in range(H.dim):
        rows = [[f.parse(entries[j][i][k]) for j in range(X.dim)] for k in range(X.dim)]
        slices.append(LinMap(X, X, tuple(tuple(r) for r in rows)))
    global_act = ActionTensor.from_slices(partial.hopf, D, "right", slices)
    theta = LinMap.from_rows(partial.carrier.space, X, d["theta"])
    pi = LinMap.from_rows(X, X, d["pi"])
    return GlobalizationTriple(partial, D, global_act, theta, pi)


def abelian_group_from_spec(d: dict) -> FiniteAbelianGroup:
    return FiniteAbelianGroup(tuple(int(n) for n in d["factors"]))
