#!/usr/bin/env python3
"""Exercises the command-line tool end to end: exit codes, JSON output
shape, DOT export, and byte stability."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

FAILURES = []


def run(binary, *args, expect_code=0):
    proc = subprocess.run([binary, *args], capture_output=True, text=True)
    if proc.returncode != expect_code:
        FAILURES.append(
            f"{' '.join(args)}: exit {proc.returncode}, expected {expect_code}\n"
            f"stdout: {proc.stdout}\nstderr: {proc.stderr}"
        )
    return proc


def check(cond, message):
    if not cond:
        FAILURES.append(message)


def main():
    binary = sys.argv[1]
    data = Path(sys.argv[2])
    p3 = str(data / "p3.json")
    chain = str(data / "chain.json")
    bad = str(data / "bad.json")

    # decompose: document shape and determinism
    first = run(binary, "decompose", p3)
    second = run(binary, "decompose", p3)
    check(first.stdout == second.stdout, "decompose output is not byte stable")
    doc = json.loads(first.stdout)
    check(doc["schema_version"] == "1", "wrong schema_version")
    check(doc["max_size"] == 1, f"wrong max_size: {doc['max_size']}")
    check(len(doc["components"]) == 1, "p3 must have one component")
    check(doc["components"][0]["kind"] == "loose_hooked_a", "wrong component kind")
    check(doc["D_set"] == ["a0", "a1"], f"wrong D_set: {doc['D_set']}")

    chain_doc = json.loads(run(binary, "decompose", chain).stdout)
    check(len(chain_doc["components"]) == 4, "chain must have four components")
    check(len(chain_doc["order_arcs"]) == 3, "chain must have three order arcs")

    # DOT export, reduced and full
    with tempfile.TemporaryDirectory() as tmp:
        dot_path = Path(tmp) / "out.dot"
        run(binary, "decompose", chain, "--dot", str(dot_path), "--reduce")
        dot = dot_path.read_text()
        check(dot.startswith("digraph components {"), "missing DOT header")
        check("->" in dot, "DOT output has no arcs")
        check(dot.count("label=") == 4, "DOT output must label all components")

    # parse failure -> exit 2
    run(binary, "decompose", bad, expect_code=2)
    run(binary, "decompose", str(data / "missing.json"), expect_code=2)

    # classify
    cls = json.loads(run(binary, "classify", chain).stdout)
    check(cls["edge_classes"]["a0-b1"] == "forbidden", "wrong class for a0-b1")
    check(cls["edge_classes"]["a0-b0"] == "inevitable", "wrong class for a0-b0")

    # enumerate-verifying, with and without a cap
    fam = json.loads(run(binary, "enumerate-verifying", chain).stdout)
    check(fam["count"] == 5, f"chain has 5 verifying sets, got {fam['count']}")
    check(fam["truncated"] is False, "family must not be truncated")
    capped = json.loads(
        run(binary, "enumerate-verifying", chain, "--cap", "2").stdout
    )
    check(capped["truncated"] is True, "cap must truncate")
    check(capped["count"] == 2, "capped count must match the cap")

    # check-verifying: verifying set -> 0, non-verifying -> 1
    good = json.loads(run(binary, "check-verifying", p3, "--set", "a0,a1").stdout)
    check(good["verifying"] is True, "a0,a1 verifies on p3")
    bad_set = json.loads(
        run(binary, "check-verifying", p3, "--set", "b0", expect_code=1).stdout
    )
    check(bad_set["verifying"] is False, "b0 must not verify on p3")
    check(bad_set["cost"] == 2, "cost of {b0} is 2")

    # oracle comparison
    run(binary, "check", "--input", p3)
    run(binary, "check", "--random", "25", "--seed", "7")
    run(binary, "check", "--random", "1", "--max-a", "40", expect_code=2)
    run(binary, "check", expect_code=2)

    # bench smoke: the empty row and a small sweep
    bench = run(binary, "bench", "--sizes", "0", "1000", "--repeats", "1")
    check("edges" in bench.stdout, "bench must print a table header")
    check(len(bench.stdout.strip().splitlines()) == 3, "bench must print one row per size")

    if FAILURES:
        print("CLI test failures:")
        for f in FAILURES:
            print(" -", f)
        return 1
    print("cli: all checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
