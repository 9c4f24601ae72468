#!/usr/bin/env python3
"""Smoke test for the alcove_py extension module.

Build the extension first, then run this script from anywhere:

    cargo build --release -p alcove-py
    python3 python/smoke_test.py

The script locates the compiled cdylib under target/, stages it under a
temporary directory with the importable name, and exercises the main types.
"""

import json
import pathlib
import shutil
import sys
import sysconfig
import tempfile


def stage_module() -> pathlib.Path:
    repo = pathlib.Path(__file__).resolve().parent.parent
    ext = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    candidates = []
    for profile in ("release", "debug"):
        for stem in ("libalcove_py.so", "libalcove_py.dylib", "alcove_py.dll"):
            p = repo / "target" / profile / stem
            if p.exists():
                candidates.append(p)
    if not candidates:
        sys.exit(
            "could not find the compiled extension; "
            "run `cargo build --release -p alcove-py` first"
        )
    newest = max(candidates, key=lambda p: p.stat().st_mtime)
    stage = pathlib.Path(tempfile.mkdtemp(prefix="alcove-py-"))
    target = stage / f"alcove_py{ext}"
    shutil.copy2(newest, target)
    return stage


sys.path.insert(0, str(stage_module()))

import alcove_py  # noqa: E402

checks = 0


def check(condition, label):
    global checks
    assert condition, f"FAILED: {label}"
    checks += 1
    print(f"ok: {label}")


rs = alcove_py.RootSystem(2)
check(rs.rank() == 2, "rank")
check(rs.num_positive_roots() == 3, "three positive roots in A2")

# counting oracles
check(rs.weyl_dim([1, 1]) == 8, "adjoint module has dimension 8")
check(rs.weyl_dim([1, 0]) == 3, "defining module has dimension 3")
check(rs.schubert_cell_dim([1, 1]) == 4, "<2rho, theta^vee> = 4")
check(rs.multiplicity([1, 1], [0, 0]) == 2, "zero-weight multiplicity 2")
check(rs.multiplicity([1, 1], [1, 1]) == 1, "highest weight multiplicity 1")
check(rs.dominance_leq([0, 0], [1, 1]) and not rs.dominance_leq([2, -1], [-1, 2]),
      "dominance order")
table = rs.multiplicities([1, 1])
check(sum(table.values()) == 8, "multiplicities sum to the dimension")

# galleries
gamma = rs.minimal_gallery([1, 1])
check(gamma.p() == 1, "based gallery crosses one wall")
check(gamma.weight() == [1, 1], "based gallery ends at theta^vee")
check(gamma.dimension() == 4, "based gallery dimension")
check(gamma.is_positively_folded(), "based gallery positively folded")
check(gamma.is_ls(gamma), "based gallery is LS")

total, hist = rs.ls_counts([1, 1])
check(total == 8, "eight LS galleries for the adjoint coweight")
check(hist["0,0"] == 2, "two LS galleries of weight zero")
check(hist == table, "LS histogram equals the Freudenthal table")

ls = rs.ls_galleries([1, 1])
check(len(ls) == 8, "LS enumeration is materialized")

# root operators
check(gamma.phi(1) == 1 and gamma.epsilon(1) == 0, "phi/epsilon at the top")
check(gamma.e(1) is None, "raising at the highest weight is undefined")
down = gamma.f(2)
check(down is not None and down.weight() == [2, -1], "lowering along alpha_2")
check(down.e(2) == gamma, "raising inverts lowering")

# crystal graph
graph = rs.crystal([1, 1])
check(graph.node_count() == 8, "crystal has 8 nodes")
check(graph.verify() == [], "crystal axioms hold")
sources = graph.sources()
check(len(sources) == 1 and graph.weights()[sources[0]] == [1, 1],
      "unique highest node of weight theta^vee")
check(len(graph.edges()) > 0 and all(i in (1, 2) for (_, _, i) in graph.edges()),
      "edges labeled by simple-root index")
parsed = json.loads(graph.to_json())
check(len(parsed["nodes"]) == 8, "crystal JSON round-trips")
check(graph.to_dot().startswith("digraph"), "DOT export")

string = rs.crystal([1, 0])
check(string.node_count() == 3, "defining representation string")

# quiver modules and polytopes
prim = alcove_py.primitive_a2()
a, b, c, d = alcove_py.a2_modules()
check(c.dims() == [1, 1] and c.preprojective(), "fixture module C")
check(c.pol() == prim["beta1"], "Pol(C) is the first triangle")
check(d.pol() == prim["beta2"], "Pol(D) is the second triangle")
check(a.pol() == prim["alpha1"] and b.pol() == prim["alpha2"], "segment fixtures")

maya = alcove_py.maya_module(5, [2, 4, 5])
check(maya.dims() == [1, 1, 2, 1, 0], "Maya module dimensions")
check(maya.preprojective(), "Maya module satisfies the relation")
check([0, 0, 0, 0, 0] in maya.dim_vectors(), "zero submodule present")
coord_hull = maya.pol("coordinate")
exhaustive_hull = maya.pol("exhaustive", 3)
check(coord_hull == exhaustive_hull, "backends agree on the Maya polytope")

summed = c.direct_sum(d)
check(summed.pol() == c.pol().minkowski(d.pol()), "Pol is additive on direct sums")

whole = prim["alpha1"].minkowski(prim["alpha2"])
check(alcove_py.union_equals([prim["beta1"], prim["beta2"]], whole),
      "the two triangles tile the rhombus")
check(not alcove_py.union_equals([prim["beta1"]], whole), "one triangle does not")
check(whole.contains(["1/2", "1/2"]) and not whole.contains(["2", "0"]),
      "membership tests")
check(whole.area() == "1", "rhombus has unit area")
check(whole.dilate(3).area() == "9", "area scales quadratically")

ok = alcove_py.Polytope([["0", "0"], ["1", "0"], ["1/2", "0"]])
check(len(ok.vertices()) == 2, "collinear points collapse to a segment")

print(f"\nall {checks} smoke checks passed")
