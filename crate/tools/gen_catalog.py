#!/usr/bin/env python3
"""Regenerate the catalog data files under crates/core/data/.

The classical tables (transitive sphere actions, rank-one symmetric space
presentations, candidate slice representations, the positive-curvature row
data) are emitted from the closed-form descriptions below so that ranges can
be widened without hand-editing fifty JSON records. Run from the repo root:

    python3 tools/gen_catalog.py
"""

import hashlib
import json
import os

OUT = os.path.join(os.path.dirname(__file__), "..", "crates", "core", "data")

SCHEMA_FIELDS = {
    "sphere_actions": "group, rep_name, constituents, reality, real_dim, sphere_dim, stabilizer, notes",
    "cross_spaces": "kind, n, group, stabilizer, embedding, isotropy, dim, cohomogeneity_on_self, symmetry, notes",
    "slice_candidates": "family, n, name, descriptor, v_real_dim, nu, route, notes",
    "embeddings": "id, ambient, sub, descriptor, sub_dim, semisimple, fixed_space_dims, restrictions, notes",
    "wallach": "index, g1, h1, dim, parameter, hprime_candidates, notes",
    "su_base": "index, n_ideal, h_prime, dim_v, requires_m, notes",
    "models": "name, ambient_dim, constraints, action, base_points, checks, notes",
    "fixtures": "name, value, tolerance, notes",
}


def fields_sha(kind):
    h = hashlib.sha256()
    h.update(kind.encode())
    h.update(b":")
    h.update(SCHEMA_FIELDS[kind].encode())
    return h.hexdigest()


def write(kind, records):
    env = {
        "schema": kind,
        "version": 1,
        "fields_sha256": fields_sha(kind),
        "records": records,
    }
    path = os.path.join(OUT, kind + ".json")
    with open(path, "w") as f:
        json.dump(env, f, indent=1, sort_keys=False)
        f.write("\n")
    print("wrote", path, f"({len(records) if isinstance(records, list) else '-'} records)")


# ---------------------------------------------------------------- algebras

def alg(simples=(), torus=0):
    return {"simples": [list(s) for s in simples], "torus": torus}


def so_alg(n):
    if n <= 1:
        return alg()
    if n == 2:
        return alg(torus=1)
    if n == 3:
        return alg([("A", 1)])
    if n == 4:
        return alg([("A", 1), ("A", 1)])
    m = n // 2
    if n % 2 == 1:
        return alg([("B", n // 2)])
    return alg([("D", m)])


def su_alg(n):
    return alg([("A", n - 1)]) if n >= 2 else alg()


def u_alg(n):
    a = su_alg(n)
    a["torus"] = 1
    return a


def sp_alg(n):
    if n == 0:
        return alg()
    if n == 1:
        return alg([("A", 1)])
    return alg([("C", n)])


def group(name, algebra, cover="", center=None):
    return {"name": name, "algebra": algebra, "cover": cover, "center": center or []}


def constituent(weights=(), charges=()):
    return {"weights": [list(w) for w in weights], "charges": list(charges)}


def so_vector_constituents(n):
    if n == 2:
        return [constituent(charges=[1]), constituent(charges=[-1])]
    if n == 3:
        return [constituent(weights=[[2]])]
    if n == 4:
        return [constituent(weights=[[1], [1]])]
    m = n // 2
    if n % 2 == 1:
        return [constituent(weights=[[1] + [0] * (m - 1)])]
    return [constituent(weights=[[1] + [0] * (m - 1)])]


def sp_std_doubled(n):
    # Complexification of the quaternionic module H^n: two copies of C^{2n}.
    w = [1] + [0] * (n - 1) if n >= 2 else [1]
    return [constituent(weights=[w]), constituent(weights=[w])]


# ---------------------------------------------------------- sphere actions

def sphere_actions():
    rows = []
    for n in range(2, 27):  # SO(n) on S^{n-1}, spheres up to S^25
        rows.append({
            "group": group(f"SO({n})", so_alg(n), "SO"),
            "rep_name": "vector",
            "constituents": so_vector_constituents(n),
            "reality": "real",
            "real_dim": n,
            "sphere_dim": n - 1,
            "stabilizer": group(f"SO({n - 1})", so_alg(n - 1), "SO"),
            "notes": "",
        })
    for n in range(2, 14):  # SU(n) on S^{2n-1}
        rows.append({
            "group": group(f"SU({n})", su_alg(n), "simply-connected"),
            "rep_name": "standard",
            "constituents": [constituent(weights=[[1] + [0] * (n - 2)])],
            "reality": "complex",
            "real_dim": 2 * n,
            "sphere_dim": 2 * n - 1,
            "stabilizer": group(f"SU({n - 1})", su_alg(n - 1), "simply-connected"),
            "notes": "",
        })
    for n in range(1, 14):  # U(n) on S^{2n-1}
        w = [[1] + [0] * (n - 2)] if n >= 2 else []
        rows.append({
            "group": group(f"U({n})", u_alg(n)),
            "rep_name": "standard",
            "constituents": [constituent(weights=w, charges=[1])],
            "reality": "complex",
            "real_dim": 2 * n,
            "sphere_dim": 2 * n - 1,
            "stabilizer": group(f"U({n - 1})", u_alg(n - 1) if n >= 2 else alg()),
            "notes": "det-twists of the standard module cover the remaining transitive U(n) actions"
            if n >= 2 else "",
        })
    for n in range(1, 7):  # Sp(n) on S^{4n-1}
        rows.append({
            "group": group(f"Sp({n})", sp_alg(n), "simply-connected"),
            "rep_name": "quaternionic-module",
            "constituents": sp_std_doubled(n),
            "reality": "quaternionic",
            "real_dim": 4 * n,
            "sphere_dim": 4 * n - 1,
            "stabilizer": group(f"Sp({n - 1})", sp_alg(n - 1), "simply-connected"),
            "notes": "",
        })
    for n in range(1, 7):  # Sp(n)xU(1)
        w = [[1] + [0] * (n - 1)] if n >= 2 else [[1]]
        stab = sp_alg(n - 1)
        stab = {"simples": stab["simples"], "torus": stab["torus"] + 1}
        rows.append({
            "group": group(f"Sp({n})xU(1)", {"simples": sp_alg(n)["simples"], "torus": 1}),
            "rep_name": "quaternionic-module",
            "constituents": [constituent(weights=w, charges=[1])],
            "reality": "complex",
            "real_dim": 4 * n,
            "sphere_dim": 4 * n - 1,
            "stabilizer": group(f"Sp({n - 1})xU(1)", stab),
            "notes": "",
        })
    for n in range(2, 7):  # Sp(n)xSp(1)
        w = [1] + [0] * (n - 1)
        g = sp_alg(n)["simples"] + [["A", 1]]
        s = sp_alg(n - 1)["simples"] + [["A", 1]]
        rows.append({
            "group": group(f"Sp({n})xSp(1)", {"simples": g, "torus": 0}),
            "rep_name": "quaternionic-module",
            "constituents": [constituent(weights=[w, [1]])],
            "reality": "real",
            "real_dim": 4 * n,
            "sphere_dim": 4 * n - 1,
            "stabilizer": group(f"Sp({n - 1})xSp(1)", {"simples": s, "torus": 0}),
            "notes": "",
        })
    rows.append({
        "group": group("G2", alg([("G2", 2)]), "simply-connected"),
        "rep_name": "fundamental7",
        "constituents": [constituent(weights=[[1, 0]])],
        "reality": "real",
        "real_dim": 7,
        "sphere_dim": 6,
        "stabilizer": group("SU(3)", su_alg(3), "simply-connected"),
        "notes": "",
    })
    rows.append({
        "group": group("Spin(7)", alg([("B", 3)]), "Spin"),
        "rep_name": "spin8",
        "constituents": [constituent(weights=[[0, 0, 1]])],
        "reality": "real",
        "real_dim": 8,
        "sphere_dim": 7,
        "stabilizer": group("G2", alg([("G2", 2)]), "simply-connected"),
        "notes": "",
    })
    rows.append({
        "group": group("Spin(9)", alg([("B", 4)]), "Spin"),
        "rep_name": "spin16",
        "constituents": [constituent(weights=[[0, 0, 0, 1]])],
        "reality": "real",
        "real_dim": 16,
        "sphere_dim": 15,
        "stabilizer": group("Spin(7)", alg([("B", 3)]), "Spin"),
        "notes": "",
    })
    return rows


# ------------------------------------------------------------ cross spaces

def symmetry(name="geodesic-symmetry", tau=-1, nu=1):
    return {"name": name, "tau_scalar": tau, "nu_scalar": nu}


def cross_spaces():
    rows = []
    for n in range(2, 17):
        iso = {
            "constituents": so_vector_constituents(n),
            "reality": "real",
            "real_dim": n,
        }
        rows.append({
            "kind": "sphere", "n": n,
            "group": group(f"SO({n + 1})", so_alg(n + 1), "SO; Spin cover used for slice analysis"),
            "stabilizer": group(f"SO({n})", so_alg(n), "SO"),
            "embedding": "block SO(n) fixing the last coordinate axis",
            "isotropy": iso,
            "dim": n,
            "cohomogeneity_on_self": 1,
            "symmetry": symmetry(),
            "notes": "",
        })
        note = ""
        if n == 2:
            note = ("exceptional-set naming: the classification statement excludes the "
                    "dimension-2 projective spaces while the exceptional table lists this "
                    "row as the real projective plane; both readings are recorded here")
        rows.append({
            "kind": "real_proj", "n": n,
            "group": group(f"SO({n + 1})", so_alg(n + 1), "SO"),
            "stabilizer": group(f"S(O(1)xO({n}))", so_alg(n), "disconnected: two components"),
            "embedding": "block S(O(1)xO(n))",
            "isotropy": iso,
            "dim": n,
            "cohomogeneity_on_self": 1,
            "symmetry": symmetry(),
            "notes": note,
        })
    for n in range(1, 5):
        if n == 1:
            iso = {"constituents": [constituent(charges=[2])], "reality": "complex", "real_dim": 2}
        else:
            iso = {
                "constituents": [constituent(weights=[[1] + [0] * (n - 2)], charges=[n + 1])],
                "reality": "complex",
                "real_dim": 2 * n,
            }
        rows.append({
            "kind": "complex_proj", "n": n,
            "group": group(f"SU({n + 1})", su_alg(n + 1), "simply-connected"),
            "stabilizer": group(f"S(U(1)xU({n}))", u_alg(n)),
            "embedding": "block S(U(1)xU(n))",
            "isotropy": iso,
            "dim": 2 * n,
            "cohomogeneity_on_self": 1,
            "symmetry": symmetry(),
            "notes": "isomorphic to the 2-sphere presented over the unitary pair" if n == 1 else "",
        })
    for n in range(1, 5):
        if n == 1:
            simples = [["A", 1], ["A", 1]]
            iso_w = [[1], [1]]
        else:
            simples = [["A", 1], ["C", n]]
            iso_w = [[1], [1] + [0] * (n - 1)]
        rows.append({
            "kind": "quat_proj", "n": n,
            "group": group(f"Sp({n + 1})", sp_alg(n + 1), "simply-connected"),
            "stabilizer": group(f"Sp(1)xSp({n})", {"simples": simples, "torus": 0}, "simply-connected"),
            "embedding": "block Sp(1)xSp(n)",
            "isotropy": {"constituents": [constituent(weights=iso_w)], "reality": "real", "real_dim": 4 * n},
            "dim": 4 * n,
            "cohomogeneity_on_self": 1,
            "symmetry": symmetry(),
            "notes": "",
        })
    rows.append({
        "kind": "cayley_plane", "n": 2,
        "group": group("F4", alg([("F4", 4)]), "simply-connected"),
        "stabilizer": group("Spin(9)", alg([("B", 4)]), "Spin"),
        "embedding": "Spin(9) as the isotropy of the octonionic projective plane",
        "isotropy": {"constituents": [constituent(weights=[[0, 0, 0, 1]])], "reality": "real", "real_dim": 16},
        "dim": 16,
        "cohomogeneity_on_self": 1,
        "symmetry": symmetry(),
        "notes": "",
    })
    return rows


# -------------------------------------------------------- slice candidates

def stab(id_, dim, semisimple, fixed, ss_fixed=None, circle=None):
    d = {"id": id_, "dim": dim, "semisimple": semisimple, "fixed": fixed}
    if ss_fixed:
        d["ss_fixed"] = ss_fixed
    if circle is not None:
        d["circle_weights"] = circle
    return d


def slice_candidates():
    rows = []
    # Sphere family: the low-dimensional special isomorphisms.
    rows.append({
        "family": "sphere", "n": 3,
        "name": "left-quaternion-multiplication",
        "descriptor": "Spin(3) = Sp(1) acting on the quaternions by left multiplication",
        "v_real_dim": 4,
        "nu": {"constituents": [constituent(weights=[[1]]), constituent(weights=[[1]])],
               "reality": "quaternionic", "real_dim": 4},
        "route": {"kind": "dimension-bound"},
        "notes": "",
    })
    rows.append({
        "family": "sphere", "n": 4,
        "name": "factor-projection",
        "descriptor": "Spin(4) -> Sp(1) onto one normal factor, V = H",
        "v_real_dim": 4,
        "nu": {"constituents": [constituent(weights=[[1], [0]]), constituent(weights=[[1], [0]])],
               "reality": "quaternionic", "real_dim": 4},
        "route": {
            "kind": "containment-obstruction",
            "hv": stab("spin3-diag-in-spin5", 3, True, {"vector": 2, "spin": 1}),
            "k": stab("sp1-factor-in-spin5", 3, True, {"vector": 1, "spin": 0}),
            "reps": ["vector", "spin"],
        },
        "notes": "regular tangent stabilizer is the diagonal threefold cover; the slice "
                 "stabilizer is one normal factor, and their fixed spaces in the projected "
                 "five-dimensional module already differ",
    })
    rows.append({
        "family": "sphere", "n": 4,
        "name": "rotation-quotient",
        "descriptor": "Spin(4) -> SO(3) through one factor, V = R^3",
        "v_real_dim": 3,
        "nu": {"constituents": [constituent(weights=[[2], [0]])], "reality": "real", "real_dim": 3},
        "route": {
            "kind": "containment-obstruction",
            "hv": stab("spin3-diag-in-spin5", 3, True, {"vector": 2, "spin": 1}),
            "k": stab("u1-times-sp1-in-spin5", 4, False, {"vector": 1, "spin": 0},
                      ss_fixed={"vector": 1, "spin": 2}),
            "reps": ["vector", "spin"],
        },
        "notes": "",
    })
    rows.append({
        "family": "sphere", "n": 5,
        "name": "symplectic-module",
        "descriptor": "Spin(5) = Sp(2) acting on H^2",
        "v_real_dim": 8,
        "nu": {"constituents": [constituent(weights=[[0, 1]]), constituent(weights=[[0, 1]])],
               "reality": "quaternionic", "real_dim": 8},
        "route": {"kind": "dimension-bound"},
        "notes": "",
    })
    rows.append({
        "family": "sphere", "n": 6,
        "name": "unitary-module",
        "descriptor": "Spin(6) = SU(4) acting on C^4",
        "v_real_dim": 8,
        "nu": {"constituents": [constituent(weights=[[0, 1, 0]])], "reality": "complex", "real_dim": 8},
        "route": {"kind": "dimension-bound"},
        "notes": "",
    })
    rows.append({
        "family": "sphere", "n": 7,
        "name": "spin-module",
        "descriptor": "Spin(7) acting on R^8",
        "v_real_dim": 8,
        "nu": {"constituents": [constituent(weights=[[0, 0, 1]])], "reality": "real", "real_dim": 8},
        "route": {"kind": "dimension-bound"},
        "notes": "",
    })
    rows.append({
        "family": "sphere", "n": 9,
        "name": "spin-module",
        "descriptor": "Spin(9) acting on R^16",
        "v_real_dim": 16,
        "nu": {"constituents": [constituent(weights=[[0, 0, 0, 1]])], "reality": "real", "real_dim": 16},
        "route": {"kind": "dimension-bound"},
        "notes": "",
    })
    # Real projective plane: the half-rotation slice of the quadratic-forms model.
    rows.append({
        "family": "real_proj", "n": 2,
        "name": "half-rotation",
        "descriptor": "O(2) -> O(2)/{+-1}; the identity component acts with twist 2",
        "v_real_dim": 2,
        "nu": {"constituents": [constituent(charges=[2])], "reality": "complex", "real_dim": 2},
        "route": {"kind": "witness", "model": "s4-traceless-sym", "ambient": "S^4"},
        "notes": "Veronese embedding",
    })
    # Complex projective spaces: determinant circle and, for n = 2, the
    # rotation-group quotient.
    for n in range(2, 5):
        rows.append({
            "family": "complex_proj", "n": n,
            "name": "determinant-circle",
            "descriptor": "U(n) -> T^1 = U(n)/SU(n), V = C",
            "v_real_dim": 2,
            "nu": {"constituents": [constituent(weights=[[0] * (n - 1)], charges=[n])],
                   "reality": "complex", "real_dim": 2},
            "route": {
                "kind": "containment-obstruction",
                "hv": stab(f"tangent-stab-u{n - 1}-in-su{n + 1}", (n - 1) * (n - 1), False,
                           {"defining": 0}),
                "k": stab(f"su{n}-block-in-su{n + 1}", n * n - 1, True, {"defining": 2}),
                "reps": ["defining"],
            },
            "notes": "",
        })
    rows.append({
        "family": "complex_proj", "n": 2,
        "name": "adjoint-quotient",
        "descriptor": "U(2) -> SU(2)/{+-1} = SO(3), V = R^3",
        "v_real_dim": 3,
        "nu": {"constituents": [constituent(weights=[[2]], charges=[0])], "reality": "real", "real_dim": 3},
        "route": {"kind": "witness", "model": "s7-su3", "ambient": "S^7"},
        "notes": "adjoint sphere of the special unitary group in three variables",
    })
    # Quaternionic projective spaces.
    for n in range(1, 5):
        dim_hv = 3 + (0 if n == 1 else (n - 1) * (2 * n - 1))
        rows.append({
            "family": "quat_proj", "n": n,
            "name": "sp1-rotation-quotient",
            "descriptor": "Sp(1)xSp(n) -> Sp(1)/{+-1} = SO(3), V = R^3",
            "v_real_dim": 3,
            "nu": {"constituents": [constituent(weights=[[2], [0] * max(n, 1)])],
                   "reality": "real", "real_dim": 3},
            "route": {
                "kind": "containment-obstruction",
                "hv": stab(f"sp1-diag-times-sp{n - 1}-in-sp{n + 1}", dim_hv, True,
                           {"quaternionic-module": 0}),
                "k": stab(f"t1-times-sp{n}-in-sp{n + 1}", 1 + n * (2 * n + 1), False,
                          {"quaternionic-module": 0},
                          ss_fixed={"quaternionic-module": 4}),
                "reps": ["quaternionic-module"],
            },
            "notes": "",
        })
        rows.append({
            "family": "quat_proj", "n": n,
            "name": "second-factor-projection",
            "descriptor": "Sp(1)xSp(n) -> Sp(n), V = H^n",
            "v_real_dim": 4 * n,
            "nu": {"constituents": [constituent(weights=[[0], ([1] + [0] * (n - 1)) if n >= 2 else [1]]),
                                      constituent(weights=[[0], ([1] + [0] * (n - 1)) if n >= 2 else [1]])],
                   "reality": "quaternionic", "real_dim": 4 * n},
            "route": {
                "kind": "containment-obstruction",
                "hv": stab(f"sp1-diag-times-sp{n - 1}-in-sp{n + 1}", dim_hv, True,
                           {"quaternionic-module": 0}),
                "k": stab(f"sp1-times-sp{n - 1}-block-in-sp{n + 1}", dim_hv, True,
                          {"quaternionic-module": 4}),
                "reps": ["quaternionic-module"],
            },
            "notes": "the fixed set of the block stabilizer is a quaternionic line while the "
                     "diagonal tangent stabilizer fixes nothing",
        })
    rows.append({
        "family": "quat_proj", "n": 2,
        "name": "so5-quotient",
        "descriptor": "Sp(1)xSp(2) -> Sp(2)/{+-1} = SO(5), V = R^5",
        "v_real_dim": 5,
        "nu": {"constituents": [constituent(weights=[[0], [1, 0]])], "reality": "real", "real_dim": 5},
        "route": {"kind": "witness", "model": "", "ambient": "S^13"},
        "notes": "Veronese embedding as a singular orbit of the cohomogeneity-two linear "
                 "action on the 14-dimensional trace-free quaternion-Hermitian module",
    })
    rows.append({
        "family": "cayley_plane", "n": 2,
        "name": "vector9-quotient",
        "descriptor": "Spin(9) -> SO(9), V = R^9",
        "v_real_dim": 9,
        "nu": {"constituents": [constituent(weights=[[1, 0, 0, 0]])], "reality": "real", "real_dim": 9},
        "route": {"kind": "witness", "model": "", "ambient": "S^25"},
        "notes": "Veronese embedding inside the unit sphere of the 26-dimensional module",
    })
    return rows


# -------------------------------------------------------------- embeddings

def embeddings():
    rows = []
    # Quaternionic-line separation inside Sp(3) (the n = 2 instance).
    herm3 = [constituent(weights=[[1], [0]]), constituent(weights=[[1], [0]]),
             constituent(weights=[[0], [1]]), constituent(weights=[[0], [1]]),
             constituent(weights=[[0], [0]]), constituent(weights=[[0], [0]]),
             constituent(weights=[[0], [0]]), constituent(weights=[[0], [0]])]
    rows.append({
        "id": "sp1-times-sp1-block-in-sp3",
        "ambient": group("Sp(3)", sp_alg(3), "simply-connected"),
        "sub": alg([("A", 1), ("A", 1)]),
        "descriptor": "diagonal blocks 1 and 3",
        "sub_dim": 6,
        "semisimple": True,
        "fixed_space_dims": {"quaternionic-module": 4},
        "restrictions": {"quaternionic-module": {
            "constituents": herm3, "reality": "real", "real_dim": 12}},
        "notes": "fixes the middle quaternionic line",
    })
    rows.append({
        "id": "sp1-diag-times-sp1-in-sp3",
        "ambient": group("Sp(3)", sp_alg(3), "simply-connected"),
        "sub": alg([("A", 1), ("A", 1)]),
        "descriptor": "Sp(1) embedded diagonally into blocks 1,2; Sp(1) in block 3",
        "sub_dim": 6,
        "semisimple": True,
        "fixed_space_dims": {"quaternionic-module": 0},
        "restrictions": {"quaternionic-module": {
            "constituents": [constituent(weights=[[1], [0]])] * 4
            + [constituent(weights=[[0], [1]])] * 2,
            "reality": "real", "real_dim": 12}},
        "notes": "",
    })
    rows.append({
        "id": "full-group-sp3",
        "ambient": group("Sp(3)", sp_alg(3), "simply-connected"),
        "sub": sp_alg(3),
        "descriptor": "identity embedding",
        "sub_dim": 21,
        "semisimple": True,
        "fixed_space_dims": {"quaternionic-module": 0},
        "restrictions": {"quaternionic-module": {
            "constituents": [constituent(weights=[[1, 0, 0]]), constituent(weights=[[1, 0, 0]])],
            "reality": "real", "real_dim": 12}},
        "notes": "a faithful module of the full group has no global fixed line",
    })
    # Spin(5)-side data used by the 4-sphere candidate analysis.
    rows.append({
        "id": "spin3-diag-in-spin5",
        "ambient": group("Spin(5)", alg([("B", 2)]), "Spin"),
        "sub": alg([("A", 1)]),
        "descriptor": "diagonal Spin(3) inside Spin(4)",
        "sub_dim": 3,
        "semisimple": True,
        "fixed_space_dims": {"vector": 2, "spin": 1},
        "restrictions": {
            "vector": {"constituents": [constituent(weights=[[2]]), constituent(weights=[[0]]),
                                          constituent(weights=[[0]])],
                        "reality": "real", "real_dim": 5},
            "spin": {"constituents": [constituent(weights=[[2]]), constituent(weights=[[0]])],
                      "reality": "real", "real_dim": 4},
        },
        "notes": "spin fixed dimension is counted in the complexified module",
    })
    rows.append({
        "id": "sp1-factor-in-spin5",
        "ambient": group("Spin(5)", alg([("B", 2)]), "Spin"),
        "sub": alg([("A", 1)]),
        "descriptor": "one normal Sp(1) factor of Spin(4)",
        "sub_dim": 3,
        "semisimple": True,
        "fixed_space_dims": {"vector": 1, "spin": 0},
        "restrictions": {
            "vector": {"constituents": [constituent(weights=[[1]]), constituent(weights=[[1]]),
                                          constituent(weights=[[0]])],
                        "reality": "real", "real_dim": 5},
            "spin": {"constituents": [constituent(weights=[[1]]), constituent(weights=[[1]])],
                      "reality": "real", "real_dim": 4},
        },
        "notes": "",
    })
    rows.append({
        "id": "u1-times-sp1-in-spin5",
        "ambient": group("Spin(5)", alg([("B", 2)]), "Spin"),
        "sub": alg([("A", 1)], ),
        "descriptor": "U(1) x Sp(1): circle in the first factor, full second factor",
        "sub_dim": 4,
        "semisimple": False,
        "fixed_space_dims": {"vector": 1, "spin": 0},
        "restrictions": {},
        "notes": "restriction rule stored only for the semisimple part (see the slice "
                 "candidate data); the mixed circle needs torus charges",
    })
    return rows


# ------------------------------------------------------------ wallach rows

def hp(algebra, description, contains_k, dim_v_prime, notes=""):
    return {"h_prime": algebra, "description": description, "contains_k": contains_k,
            "dim_v_prime": dim_v_prime, "notes": notes}


def wallach():
    rows = []
    rows.append({
        "index": 1, "g1": "SU(n+1)", "h1": "U(n)", "dim": "2n", "parameter": "n",
        "hprime_candidates": {"*": [
            hp(alg([("A", 1)]), "su(2)+su(m-2) from the unitary base candidate table",
               True, 3, "see the su_base table; survivor of the Frankel filter"),
        ]},
        "notes": "base orbit is a complex projective space; central projection of the "
                 "regular stabilizer onto the center is witnessed by the twist circle",
    })
    rows.append({
        "index": 2, "g1": "SU(3)", "h1": "T^2", "dim": "6", "parameter": "",
        "hprime_candidates": {},
        "notes": "the maximal torus carries no unitary or symplectic ideal",
    })
    rows.append({
        "index": 3, "g1": "Spin(2n+1)", "h1": "Spin(2n)", "dim": "2n", "parameter": "n",
        "hprime_candidates": {
            "2": [
                hp(alg([("A", 1), ("A", 1)], 1), "R+so(4)", True, 4,
                   "maximal rank; slice 4 is not bigger than the base dimension 4"),
                hp(alg([("A", 1)], 2), "R+t1+su(2)", True, 2,
                   "maximal rank; slice 2 is not bigger than the base dimension 4"),
                hp(alg([("A", 1), ("A", 1)]), "so(4) without the center line", True, 4,
                   "semisimple candidate, killed by the central-projection fact"),
            ],
            "3": [
                hp(alg([("A", 3)], 1), "R+su(4)", True, 8,
                   "sole survivor; two totally geodesic 6-spheres in codimension 8"),
                hp(alg([("G2", 2)], 1), "R+g2", False, 7,
                   "does not contain the regular stabilizer: the centralizer of su(3) "
                   "inside g2 is trivial, so the mixed circle cannot embed"),
            ],
        },
        "notes": "central projection witnessed by the unitary slice circle",
    })
    rows.append({
        "index": 4, "g1": "Sp(n)", "h1": "Sp(1)xSp(n-1)", "dim": "4(n-1)", "parameter": "n",
        "hprime_candidates": {
            str(n): [
                hp({"simples": sp_alg(n)["simples"], "torus": 1},
                   "the full group: the second singular orbit degenerates to a fixed point",
                   True, 4 * n,
                   "quaternionic projective model with the stabilizer acting on the cell"),
            ] for n in range(2, 7)
        },
        "notes": "central projection witnessed by the unitary slice circle",
    })
    rows.append({
        "index": 5, "g1": "Sp(n)", "h1": "T^1xSp(n-1)", "dim": "2(2n-1)", "parameter": "n",
        "hprime_candidates": {
            str(n): [
                hp({"simples": ([["A", 1]] + sp_alg(n - 2)["simples"]) if n >= 3 else [["A", 1]],
                    "torus": 1},
                   "R+su(2)+sp(n-2)", True, 3,
                   "survivor: not of maximal rank, slice is a 2-sphere"),
                hp({"simples": ([["A", 1]] + sp_alg(n - 1)["simples"]), "torus": 1},
                   "R+sp(1)+sp(n-1)", True, 4 * n - 2,
                   "maximal rank; slice equals the base dimension, Frankel-excluded"),
            ] for n in range(2, 7)
        },
        "notes": "central projection witnessed by the unitary slice circle",
    })
    rows.append({
        "index": 6, "g1": "Sp(3)", "h1": "Sp(1)^3", "dim": "12", "parameter": "",
        "hprime_candidates": {"*": [
            hp(alg([("C", 2)], 1), "R+sp(2), with the circle mixed into the first block",
               True, 5, "survivor: rank 3 of 4, slice is a 4-sphere"),
            hp(alg([("C", 2)], 2), "R+u(1)+sp(2)", True, 6,
               "maximal rank; slice 6 is not bigger than the base dimension 12"),
        ]},
        "notes": "central projection witnessed by the unitary slice circle",
    })
    rows.append({
        "index": 7, "g1": "F4", "h1": "Spin(9)", "dim": "16", "parameter": "",
        "hprime_candidates": {},
        "notes": "so(9) is neither unitary nor symplectic",
    })
    rows.append({
        "index": 8, "g1": "F4", "h1": "Spin(8)", "dim": "24", "parameter": "",
        "hprime_candidates": {},
        "notes": "so(8) is neither unitary nor symplectic",
    })
    rows.append({
        "index": 9, "g1": "G2", "h1": "SU(3)", "dim": "6", "parameter": "",
        "hprime_candidates": {"*": [
            hp(alg([("A", 1), ("A", 1)], 1), "R+so(4)", True, 4,
               "maximal rank; slice 4 is not bigger than the base dimension 6"),
            hp(alg([("A", 2)], 1), "R+su(3)", True, 6,
               "maximal rank; slice 6 is not bigger than the base dimension 6"),
            hp(alg([("A", 1)], 2), "R+t1+su(2)", True, 2,
               "maximal rank; slice 2 is not bigger than the base dimension 6"),
            hp(alg([("A", 2)]), "su(3) without the center line", True, 6,
               "semisimple candidate, killed by the central-projection fact"),
        ]},
        "notes": "central projection witnessed by the unitary slice circle",
    })
    return rows


def su_base():
    return [
        {"index": 1, "n_ideal": "0", "h_prime": "R+su(m-1)", "dim_v": "2(m-1)",
         "requires_m": 0, "notes": ""},
        {"index": 2, "n_ideal": "k", "h_prime": "R^2+su(m-2)", "dim_v": "2",
         "requires_m": 0, "notes": ""},
        {"index": 3, "n_ideal": "k", "h_prime": "R+su(2)+su(m-2)", "dim_v": "4",
         "requires_m": 0, "notes": ""},
        {"index": 4, "n_ideal": "R", "h_prime": "R+su(m-1)", "dim_v": "2(m-1)",
         "requires_m": 0, "notes": ""},
        {"index": 5, "n_ideal": "R", "h_prime": "R+so(4)", "dim_v": "4",
         "requires_m": 4, "notes": "only for m = 4"},
        {"index": 6, "n_ideal": "su(m-2)", "h_prime": "u(2)+su(m-2)", "dim_v": "4",
         "requires_m": 0, "notes": ""},
        {"index": 7, "n_ideal": "su(m-2)", "h_prime": "su(2)+su(m-2)", "dim_v": "3",
         "requires_m": 0, "notes": "not of maximal rank; the surviving candidate"},
    ]


# ------------------------------------------------------------------ models

import math


def models():
    s6 = math.sqrt(6.0)
    return [
        {
            "name": "s4-traceless-sym",
            "ambient_dim": 5,
            "constraints": [{"kind": "unit-sphere"}],
            "action": "so3-conjugation-sym",
            "base_points": {
                "veronese": [0.0, 1.0, 0.0, 0.0, 0.0],
                "regular": [math.sqrt(0.28), math.sqrt(0.72), 0.0, 0.0, 0.0],
            },
            "checks": [
                {"base_point": "veronese", "expect": "not-totally-geodesic",
                 "fixture": "veronese-rp2-in-s4", "notes": "minimal Veronese surface"},
            ],
            "notes": "unit sphere of the trace-free symmetric 3x3 matrices under conjugation; "
                     "orthonormal basis diag(1,-1,0)/sqrt2, diag(1,1,-2)/sqrt6, S12, S13, S23",
        },
        {
            "name": "s4-round-equatorial",
            "ambient_dim": 5,
            "constraints": [{"kind": "unit-sphere"}],
            "action": "so4-block-rotations",
            "base_points": {"equatorial": [1.0, 0.0, 0.0, 0.0, 0.0]},
            "checks": [
                {"base_point": "equatorial", "expect": "totally-geodesic",
                 "fixture": "", "notes": "great 3-sphere"},
            ],
            "notes": "",
        },
        {
            "name": "cp2-hermitian-projectors",
            "ambient_dim": 9,
            "constraints": [{"kind": "hermitian-projector"}],
            "action": "so3-conjugation-herm",
            "base_points": {
                "real-point": [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
                "one-zero-i": [0.5, 0.0, 0.5, 0.0, 0.0, 0.0, 0.0, -math.sqrt(0.5), 0.0],
            },
            "checks": [
                {"base_point": "real-point", "expect": "totally-geodesic",
                 "fixture": "", "notes": "real projective plane as the real locus"},
                {"base_point": "one-zero-i", "expect": "not-totally-geodesic",
                 "fixture": "so3-orbit-in-cp2", "notes": ""},
            ],
            "notes": "rank-one Hermitian projections of trace one in R^9; coordinates "
                     "E11,E22,E33,S12,S13,S23,A12,A13,A23 (off-diagonal entries scaled by sqrt2)",
        },
        {
            "name": "s7-su3",
            "ambient_dim": 8,
            "constraints": [{"kind": "unit-sphere"}],
            "action": "su3-adjoint",
            "base_points": {
                "cp2-vertex": [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0],
            },
            "checks": [
                {"base_point": "cp2-vertex", "expect": "not-totally-geodesic",
                 "fixture": "cp2-orbit-in-s7", "notes": "orbit of i*diag(1,1,-2)/sqrt6"},
            ],
            "notes": "unit sphere of su(3) with the negative trace form, adjoint action",
        },
        {
            "name": "flat-torus",
            "ambient_dim": 4,
            "constraints": [{"kind": "product-circles"}],
            "action": "first-circle-rotation",
            "base_points": {"start": [1.0, 0.0, 1.0, 0.0]},
            "checks": [
                {"base_point": "start", "expect": "totally-geodesic",
                 "fixture": "", "notes": "circle fibers are closed geodesics"},
            ],
            "notes": "product of two unit circles in R^4 with the flat induced metric",
        },
    ]


def fixtures():
    # The two non-analytic values are pinned by the exact-bracket oracle run
    # (see the geometry test suite); the Veronese value also has a closed form.
    return [
        {"name": "veronese-rp2-in-s4", "value": 1.1547005383792515, "tolerance": 1e-3,
         "notes": "2/sqrt(3); Frobenius norm of the second fundamental form"},
        {"name": "so3-orbit-in-cp2", "value": 1.7320508075688772, "tolerance": 1e-3,
         "notes": "pinned by the exact-bracket oracle run"},
        {"name": "cp2-orbit-in-s7", "value": 1.1547005383792515, "tolerance": 1e-3,
         "notes": "pinned by the exact-bracket oracle run"},
    ]


def main():
    os.makedirs(OUT, exist_ok=True)
    write("sphere_actions", sphere_actions())
    write("cross_spaces", cross_spaces())
    write("slice_candidates", slice_candidates())
    write("embeddings", embeddings())
    write("wallach", wallach())
    write("su_base", su_base())
    write("models", models())
    write("fixtures", fixtures())


if __name__ == "__main__":
    main()
