#!/usr/bin/env python3
# Copyright 2026 The qchan Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the channel documents in tests/fixtures.

Run from the repository root. Zoo documents are written as family+params so
they stay readable; the rest carry explicit matrices.
"""

import json
import math
import pathlib

import numpy as np

OUT = pathlib.Path("tests/fixtures")
S = 1 / math.sqrt(2)


def cmat(m):
    m = np.asarray(m, dtype=complex)
    return [[[float(z.real), float(z.imag)] for z in row] for row in m]


def ket(d, i):
    v = np.zeros((d, 1), dtype=complex)
    v[i, 0] = 1
    return v


def is_row(x):
    # A list of numbers or of [re, im] pairs; printed on one line.
    return isinstance(x, list) and all(
        not isinstance(e, (list, dict))
        or (isinstance(e, list) and all(not isinstance(f, (list, dict)) for f in e))
        for e in x)


def dumps(x, depth=0):
    pad = "  " * (depth + 1)
    end = "  " * depth
    if isinstance(x, dict) and x:
        items = [f"{pad}{json.dumps(k)}: {dumps(v, depth + 1)}" for k, v in x.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(x, list) and x and not is_row(x):
        items = [pad + dumps(v, depth + 1) for v in x]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    return json.dumps(x)


def write(name, doc, description):
    doc = dict(doc)
    doc["metadata"] = {"name": name, "description": description}
    text = dumps(doc)
    (OUT / f"{name}.json").write_text(text + "\n")


def kraus(name, ops, description):
    ops = [np.asarray(a, dtype=complex) for a in ops]
    write(name, {"kind": "kraus", "d_in": ops[0].shape[1], "d_out": ops[0].shape[0],
                 "payload": [cmat(a) for a in ops]}, description)


def zoo(name, family, params, description):
    write(name, {"kind": "zoo", "payload": {"family": family, "params": params}},
          description)


def main():
    OUT.mkdir(parents=True, exist_ok=True)

    for d in (2, 3, 4):
        zoo(f"pinching-d{d}", "pinching", {"d": d},
            "diagonal pinching; equal to its own complement")

    # X -> sum_j <e_j, X e_j> |v_j><v_j| on M3 -> M2 with v1 = e1 and
    # v2 = v3 = e2/sqrt(2), written with normalised states.
    e = [ket(3, j) for j in range(3)]
    f = [ket(2, j) for j in range(2)]
    pairs = [(e[0] @ e[0].conj().T, f[0] @ f[0].conj().T),
             (0.5 * e[1] @ e[1].conj().T, f[1] @ f[1].conj().T),
             (0.5 * e[2] @ e[2].conj().T, f[1] @ f[1].conj().T)]
    write("holevo-shared-state",
          {"kind": "holevo", "d_in": 3, "d_out": 2,
           "payload": [{"F": cmat(F), "R": cmat(R)} for F, R in pairs]},
          "two effects prepare the same state; not degradable")
    vs = [f[0], S * f[1], S * f[1]]
    kraus("holevo-shared-state-dual", [e[j] @ vs[j].conj().T for j in range(3)],
          "Heisenberg-picture map of holevo-shared-state")

    kraus("probe-e1-to-identity", [ket(2, i) @ ket(2, 0).conj().T for i in range(2)],
          "X -> <e1, X e1> I; unital, not trace preserving")
    kraus("trace-to-e1", [ket(2, 0) @ ket(2, i).conj().T for i in range(2)],
          "X -> tr(X) |e1><e1|; dual of probe-e1-to-identity")

    kraus("identity-d2", [np.eye(2)], "identity channel on M2")

    zoo("werner-holevo-d3-third", "werner-holevo", {"d": 3, "lambda": "1/3"},
        "Werner-Holevo channel, d = 3, lambda = 1/3")
    zoo("werner-holevo-d2-half", "werner-holevo", {"d": 2, "lambda": "1/2"},
        "Werner-Holevo channel, d = 2, lambda = 1/2")
    zoo("werner-holevo-d2-one", "werner-holevo", {"d": 2, "lambda": 1, "range": "cp"},
        "Werner-Holevo map at lambda = 1, outside the EB window")
    zoo("phi-lambda-d2-half", "phi-lambda", {"d": 2, "lambda": "1/2"},
        "(tr(X) I + lambda (X + X^T)) / (2 lambda + d), d = 2, lambda = 1/2")
    zoo("phi-lambda-d2-zero", "phi-lambda", {"d": 2, "lambda": 0},
        "completely depolarising channel on M2")

    zoo("schur-qubit-offdiag", "schur", {"a": cmat([[1, 0.5], [0.5, 1]])},
        "Schur multiplier with off-diagonal symbol entries 1/2")
    zoo("schur-diagonal", "schur", {"a": cmat([[1, 0], [0, 2]])},
        "Schur multiplier with a diagonal symbol")
    zoo("schur-complement-qubit", "schur-complement",
        {"a": cmat([[1, 0.5], [0.5, 1]])},
        "complement of the Schur multiplier with symbol [[1, 1/2], [1/2, 1]]")
    zoo("schur-complement-all-ones", "schur-complement", {"a": cmat(np.ones((3, 3)))},
        "complement of the Schur multiplier with the all-ones symbol")

    plus = np.array([[S], [S]], dtype=complex)
    zoo("ad-rank-one", "ad-operator", {"a": cmat(ket(2, 0) @ plus.conj().T)},
        "X -> A X A^* with A = |e1><+|")
    zoo("ad-full-rank", "ad-operator", {"a": cmat([[1, 0.5], [0, 1]])},
        "X -> A X A^* with an invertible A")

    u = np.array([[0.6], [0.8j]], dtype=complex)
    r = np.diag([0.7, 0.3, 0.0]).astype(complex)
    write("single-effect",
          {"kind": "holevo", "d_in": 2, "d_out": 3,
           "payload": [{"F": cmat(u @ u.conj().T), "R": cmat(r)}]},
          "X -> <u, X u> R with a mixed state R")

    zoo("direct-sum-pure", "direct-sum-pure",
        {"blocks": [cmat([[1, 0], [0, 1], [0, 0]]), cmat([[0.5], [0.5j], [1]])]},
        "direct sum of two pure maps")

    # Ad_W o S_A o Ad_Z with W a co-isometry.
    a = np.array([[1, 0.3], [0.3, 1]], dtype=complex)
    w = np.array([[1, 0, 0], [0, 0, 1]], dtype=complex)  # 2 x 3 co-isometry
    z = np.array([[1, 0.5], [0, 1], [1j, 0]], dtype=complex)  # 3 x 2
    vals, vecs = np.linalg.eigh(a.T)
    b = vecs @ np.diag(np.sqrt(np.clip(vals, 0, None))) @ vecs.conj().T
    ops = []
    for k in range(2):
        ak = np.diag(b[k, :])
        ops.append(w.conj().T @ ak @ z.conj().T)
    kraus("compressed-schur", ops, "Ad_W o S_A o Ad_Z with W a co-isometry")

    zoo("cstar-extreme-qubit", "cstar-extreme-gen",
        {"u": [[[S, 0], [S, 0]], [[1, 0], [0, 0]]],
         "v": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]},
        "X -> sum_i <u_i, X u_i> |v_i><v_i| with orthonormal v_i")

    zoo("random-degradable-seb", "random-degradable-seb",
        {"d_in": 3, "d_out": 4, "classes": 2, "seed": 7},
        "seeded degradable rank-one Holevo form")
    zoo("random-seb-violator", "random-seb-violator",
        {"d_in": 3, "d_out": 4, "classes": 2, "seed": 7},
        "seeded rank-one Holevo form with overlapping class states")
    zoo("random-channel", "random-channel",
        {"d_in": 2, "d_out": 2, "choi_rank": 2, "seed": 11},
        "seeded channel with Choi rank 2")

    # Amplitude damping, gamma = 0.3, given by its Choi matrix and by a
    # Stinespring isometry.
    g = 0.3
    k0 = np.array([[1, 0], [0, math.sqrt(1 - g)]], dtype=complex)
    k1 = np.array([[0, math.sqrt(g)], [0, 0]], dtype=complex)
    choi = sum(np.kron(ket(2, i) @ ket(2, j).conj().T,
                       sum(k @ (ket(2, i) @ ket(2, j).conj().T) @ k.conj().T for k in (k0, k1)))
               for i in range(2) for j in range(2))
    write("amplitude-damping-choi", {"kind": "choi", "d_in": 2, "d_out": 2,
                                     "payload": cmat(choi)},
          "amplitude damping channel, gamma = 0.3, as a Choi matrix")
    env = 2
    dil = np.zeros((2 * env, 2), dtype=complex)
    for r_ in range(2):
        for j, k in enumerate((k0, k1)):
            dil[r_ * env + j, :] = k[r_, :]
    write("amplitude-damping-stinespring",
          {"kind": "stinespring", "d_in": 2, "d_out": 2,
           "payload": {"env_dim": env, "a": cmat(dil)}},
          "amplitude damping channel, gamma = 0.3, as a Stinespring isometry")


if __name__ == "__main__":
    main()
