#!/usr/bin/env python3
"""Smoke test for the varops_py extension module.

Builds nothing itself: expects `cargo build -p varops-py` (or --release) to
have produced libvarops_py.so, which it copies next to a temp dir under the
importable name varops_py.so.
"""

import json
import math
import shutil
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        REPO / "target" / "release" / "libvarops_py.so",
        REPO / "target" / "debug" / "libvarops_py.so",
    ]
    built = [p for p in candidates if p.exists()]
    if not built:
        sys.exit("build the extension first: cargo build -p varops-py")
    stage = Path(tempfile.mkdtemp(prefix="varops_py_"))
    shutil.copy2(built[0], stage / "varops_py.so")
    sys.path.insert(0, str(stage))
    import varops_py

    return varops_py


def check(name, condition):
    status = "PASS" if condition else "FAIL"
    print(f"{status} {name}")
    if not condition:
        sys.exit(1)


def main():
    vp = load_module()
    print(f"varops_py {vp.__version__}")

    # synthesize the mod-2 sum and check its laws
    table = vp.Table.extend_associative(
        ["0", "1"],
        {"0": "0", "1": "1"},
        {"0,0": "0", "0,1": "1", "1,0": "1", "1,1": "0"},
        4,
    )
    check("synthesized table has horizon 4", table.horizon == 4)
    check("G(1,1,1,0) = 1", table.value(["1", "1", "1", "0"]) == "1")
    check("xor is associative", table.check("associative")["verdict"])
    check("xor is strongly preassociative", table.check("strongly-preassociative")["verdict"])
    profile = table.idempotence_profile()
    check("xor is not idempotent", not profile["idempotent"])
    check("xor is unarily idempotent", profile["unarily_idempotent"])
    check("kernel has 3 classes", table.kernel_class_count() == 3)

    # JSON round trip
    again = vp.Table.from_json(table.to_json())
    check("JSON round trip preserves values", again.value(["1", "1"]) == "0")

    # factorization of an associative table is identity-like
    inner, outer, qinv = table.factorize()
    check("factorized inner table is associative", inner.check("associative")["verdict"])
    check("outer map is a dict", isinstance(outer["map"], dict))
    check("quasi-inverse recorded", "map" in qinv)

    # quasi-inverse enumeration: the 2-collapse map has 4 members
    members = vp.quasi_inverses(
        ["a", "b", "c"], ["a", "b", "c"], {"a": "a", "b": "a", "c": "c"}
    )
    check("collapse map has 4 quasi-inverses", len(members) == 4)

    # real families
    check("sum(1,2,3) = 6", vp.eval_family("sum", [1.0, 2.0, 3.0]) == 6.0)
    check("empty word maps to None", vp.eval_family("sum", []) is None)
    check(
        "2-norm of (3,4) is 5",
        abs(vp.eval_family("pnorm", [3.0, 4.0], {"p": 2.0}) - 5.0) < 1e-9,
    )
    report = vp.check_family_associativity("pnorm", {"p": 3.0}, seed=1)
    check("p-norm passes the sampled associativity identity", report["verdict"])
    report = vp.check_family_preassociativity("relu-sum", seed=1)
    check("relu∘sum fails preassociativity", not report["verdict"])
    check("relu∘sum failure carries a witness", report["witness"] is not None)

    fact = vp.factorize_family("exp-sum")
    check("exp-sum factors through sum", fact["inner"] == "sum")

    demo = vp.exp_sequence_demo()
    check(
        "arity-indexed demo agrees at arity 2",
        abs(demo["h2_log_pair"] - 5.0) < 1e-9
        and abs(demo["h2_half_log_pair"] - 5.0) < 1e-9,
    )
    expected = 3.0 ** 1.5 + 2.0 ** 1.5 + 1.0
    check(
        "arity-indexed demo separates at arity 3",
        abs(demo["h3_log_triple"] - 10.0) < 1e-9
        and abs(demo["h3_half_log_triple"] - expected) < 1e-9,
    )

    # error surfaces
    try:
        vp.eval_family("pnorm", [1.0], {"p": 0.5})
        check("invalid p rejected", False)
    except ValueError:
        check("invalid p rejected", True)

    try:
        vp.Table.from_json(json.dumps({"carrier": ["a", "a"]}))
        check("malformed table rejected", False)
    except ValueError:
        check("malformed table rejected", True)

    print("all smoke checks passed")


if __name__ == "__main__":
    main()
