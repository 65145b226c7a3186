#!/usr/bin/env python3
"""Smoke test for the puiseux extension module.

Builds the cdylib with cargo, loads it as an importable module from a
scratch directory, and checks a handful of exact results end to end.
Run from anywhere: paths are resolved relative to this file.
"""

import shutil
import subprocess
import sys
import sysconfig
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def build_module() -> Path:
    subprocess.run(
        ["cargo", "build", "-p", "puiseux-py", "--release"],
        cwd=ROOT,
        check=True,
    )
    lib = ROOT / "target" / "release" / "libpuiseux.so"
    if not lib.exists():  # pragma: no cover - platform fallback
        suffix = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
        candidates = list((ROOT / "target" / "release").glob(f"*puiseux*{suffix}"))
        if not candidates:
            raise FileNotFoundError("built cdylib not found under target/release")
        lib = candidates[0]
    return lib


def main() -> None:
    lib = build_module()
    scratch = Path(tempfile.mkdtemp(prefix="puiseux-smoke-"))
    shutil.copy2(lib, scratch / "puiseux.so")
    sys.path.insert(0, str(scratch))

    import puiseux

    # Structure flags for a bounded decreasing geometric monoid.
    report = puiseux.classify("geometric:2/3")
    assert report["atomicity"] == "atomic", report
    assert report["bounded"] is True and report["strongly_bounded"] is False, report
    assert "Thm 6.2" in report["citations"], report

    # Exact membership both ways.
    verdict = puiseux.member("primary:2,3", "5/6")
    assert verdict["status"] == "in", verdict
    assert verdict["representation"] == {"1": 1, "2": 1}, verdict
    verdict = puiseux.member("geometric:2/3", "1/3")
    assert verdict["status"] == "not-in", verdict
    assert verdict["reason"] == {"kind": "valuation-obstruction", "prime": 2}, verdict

    # Atom listings: closed form and antimatter.
    listing = puiseux.atoms("geometric:2/3", depth=4)
    assert listing["atoms"] == ["2/3", "4/9", "8/27", "16/81"], listing
    assert puiseux.atoms("geometric:1/2")["antimatter_flag"] is True

    # Exact generators as strings.
    assert puiseux.generators("psums-primary:all", depth=3) == ["1/2", "5/6", "31/30"]

    # Verified witness constructions.
    wit = puiseux.witness_psums(3)
    assert wit["generators"] == ["1/2", "5/6", "31/30"], wit
    assert wit["verdict"] == {"status": "verified"}, wit
    wit = puiseux.witness_unbounded_geo("2/3", 3)
    assert wit["generators"] == ["8/3", "76/9", "656/27"], wit
    assert wit["verdict"] == {"status": "verified"}, wit
    wit = puiseux.witness_infinite_atoms("geometric:1/2", 3)
    assert wit["claimed_atoms"] == ["1/2", "3/4", "7/8"], wit
    assert wit["verdict"] == {"status": "verified"}, wit

    # Substantiality with an exact finite total.
    sub = puiseux.substantial("2,3,5")
    assert sub["verdict"] == "insubstantial", sub
    assert sub["partial_sums"] == [[5, "31/30"]], sub

    # Numerical semigroup invariants.
    facts = puiseux.ns([6, 9, 20])
    assert facts["frobenius"] == 43 and facts["genus"] == 22, facts
    assert facts["apery"] == [0, 49, 20, 9, 40, 29], facts

    # Errors surface as exceptions, not wrong answers.
    try:
        puiseux.member("geometric:0", "1/2")
    except ValueError:
        pass
    else:
        raise AssertionError("invalid descriptor must raise ValueError")

    print("smoke test passed: 12 checks")


if __name__ == "__main__":
    main()
