#!/usr/bin/env python3
"""Smoke test for the rees_aci_py extension module.

Build the module first, then run this script:

    cargo build -p rees-aci-py --release
    python3 python/smoke_test.py

The script locates the compiled cdylib under target/, exposes it under the
importable name, and checks the structural numbers of the standard example
instance a = (3,3,3), b = (1,1,1).
"""

import json
import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def import_module():
    candidates = [
        ROOT / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("librees_aci_py.so", "rees_aci_py.so", "librees_aci_py.dylib")
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit("build the extension first: cargo build -p rees-aci-py")
    stage = pathlib.Path(tempfile.mkdtemp(prefix="rees_aci_py_"))
    shutil.copy2(built, stage / "rees_aci_py.so")
    sys.path.insert(0, str(stage))
    import rees_aci_py

    return rees_aci_py


def main():
    mod = import_module()

    inst = mod.Instance([3, 3, 3], [1, 1, 1])
    assert inst.m == 3
    assert inst.bsum == 3
    assert inst.equi_generated
    assert inst.b_gcd == 1
    assert inst.minimal_predicted() is True
    assert inst.elimination_equation() == "W^3 - X1*X2*X3"
    print("instance properties: ok")

    basis = inst.reduced_basis()
    assert len(basis) == 10, basis
    assert "W^3 - X1*X2*X3" in basis
    assert "T1^3*X2 - T2^3*X1" in basis
    exps = inst.reduced_basis_exponents()
    assert len(exps) == 10 and all(len(lead) == 7 for lead, _ in exps)
    print("reduced basis: ok (10 members)")

    report = inst.analyze()
    numbers = report["numbers"]
    assert numbers["relType"] == 3
    assert numbers["reductionNumber"] == 2
    assert numbers["multiplicityComputed"] == 13
    assert numbers["multiplicityFormula"] == 13
    assert numbers["socleDegree"] == 3
    assert numbers["secondaryEliminationDegree"] == 4
    assert numbers["fiberPrincipal"] is True
    assert report["homology"]["acm"] is True
    assert report["homology"]["symCM"] is True
    assert report["basis"]["minimal"] is True
    failed = [c for c in report["claims"] if c["ok"] is False]
    assert not failed, failed
    print("analysis report: ok (relType 3, red 2, multiplicity 13, ACM)")

    partial = inst.analyze(skip=["homology"])
    assert partial["homology"] is None
    print("section skipping: ok")

    try:
        mod.Instance([3, 3, 3], [0, 0, 1])
    except ValueError as err:
        assert "nonzero" in str(err)
        print("validation: ok (%s)" % err)
    else:
        sys.exit("expected a ValueError for a single nonzero b")

    outcome = mod.suite([([3, 3, 3], [1, 1, 1]), ([4, 4, 4], [1, 1, 2])])
    assert outcome["summary"]["passed"] == 2, json.dumps(outcome["summary"])
    print("suite runner: ok (2 instances passed)")

    assert len(mod.desk_suite_instances()) == 2500
    print("desk suite enumeration: ok (2500 instances)")

    print("smoke test passed")


if __name__ == "__main__":
    main()
