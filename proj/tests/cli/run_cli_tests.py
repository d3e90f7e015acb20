#!/usr/bin/env python3
"""Exercises the fogq command line: output formats, exit codes, determinism."""

import json
import pathlib
import subprocess
import sys
import tempfile

BIN = sys.argv[1] if len(sys.argv) > 1 else "fogq"
E1 = "y^2 = x^3 - x"
E2 = "y^2 = x^3 - x + 1"

failures = []


def run(*args, expect=0):
    proc = subprocess.run([BIN, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        failures.append(
            f"fogq {' '.join(args)}: exit {proc.returncode}, wanted {expect}\n"
            f"stdout: {proc.stdout!r}\nstderr: {proc.stderr!r}"
        )
    return proc


def check(cond, label):
    if not cond:
        failures.append(label)


def test_zeta():
    out = run("zeta", "--curve", "x^3-x", "--prime", "5", "--prec", "2").stdout
    check(out == "T^2 + 2T + 5; oracle #E(F_5)=8 OK\n", f"zeta text output: {out!r}")

    j = json.loads(run("zeta", "--curve", E1, "--prime", "13", "--prec", "2",
                       "--json").stdout)
    check(j["charpoly"] == "T^2 - 6T + 13", f"zeta json charpoly: {j}")
    check(j["oracle"].endswith("OK"), f"zeta json oracle: {j}")

    run("zeta", "--curve", E1, "--prime", "3", "--prec", "4", expect=3)
    out = run("zeta", "--curve", E1, "--prime", "3", "--prec", "4",
              "--small-p").stdout
    check(out.startswith("T^2 + 3;"), f"small-p zeta: {out!r}")

    run("zeta", "--curve", E1, "--prime", "5", "--prec", "1", expect=2)
    run("zeta", "--curve", "y^2 = x^4 + 1", "--prime", "5", expect=3)
    run("zeta", "--curve", E1, "--prime", "15", expect=3)
    run("zeta", "--curve", E1, expect=3)  # missing required option


def test_realise_check(tmp):
    proj = tmp / "proj.json"
    run("realise", "--curve", E1, "--primes", "5,7", "--prec", "3",
        "-o", str(proj))
    again = tmp / "proj2.json"
    run("realise", "--curve", E1, "--primes", "5,7", "--prec", "3",
        "-o", str(again))
    check(proj.read_bytes() == again.read_bytes(), "realise not deterministic")

    out = run("check", str(proj)).stdout
    check("pure, pinned" in out, f"clean check report: {out!r}")

    opened = tmp / "open.json"
    run("realise", "--curve", E1, "--primes", "5,13", "--prec", "2",
        "--kind", "open", "-o", str(opened))
    out = run("check", str(opened), expect=2).stdout
    check("integer lift not pinned" in out, f"modular check report: {out!r}")

    # hand-corrupt one Frobenius entry: purity fails, exit 1
    doc = json.loads(proj.read_text())
    doc["local"][0]["frobenius"][0][0] = "1"
    corrupt = tmp / "corrupt.json"
    corrupt.write_text(json.dumps(doc))
    out = run("check", str(corrupt), expect=1).stdout
    check("FAIL" in out and "graded-purity" in out, f"corrupt check: {out!r}")

    run("check", str(tmp / "missing.json"), expect=3)
    bad = tmp / "bad.json"
    bad.write_text("{not json")
    run("check", str(bad), expect=3)
    return proj, opened


def test_object_ops(tmp, proj):
    t1 = tmp / "t1.json"
    t2 = tmp / "t2.json"
    run("twist", str(proj), "-n", "2", "-o", str(t1))
    run("twist", str(t1), "-n", "-2", "-o", str(t2))
    check(t2.read_bytes() == proj.read_bytes(), "twist round trip not byte-identical")

    s = tmp / "sum.json"
    run("sum", str(proj), str(proj), "-o", str(s))
    check(json.loads(s.read_text())["dim"] == 4, "sum dim")
    run("check", str(s))

    tp = tmp / "tensor.json"
    run("tensor", str(proj), str(proj), "-o", str(tp))
    check(json.loads(tp.read_text())["dim"] == 4, "tensor dim")

    d = tmp / "dual.json"
    run("dual", str(proj), "-o", str(d))
    doc = json.loads(d.read_text())
    check(doc["dim"] == 2, "dual dim")
    check(doc["filtration"][0]["weight"] == -1, "dual weight")


def test_hom_split(tmp, proj, opened):
    j = json.loads(run("hom", str(proj), str(proj), "--json").stdout)
    check(j["rank"] == 1, f"hom rank: {j['rank']}")
    check(j["basis"][0]["status"] == "verified", "hom status")
    check(j["basis"][0]["verified_primes"] == [5, 7], "hom verified primes")

    out = run("hom", str(proj), str(proj), "--bound", "100").stdout
    check("verified" in out and '"rank":1' in out.replace(" ", ""),
          f"hom text+json: {out!r}")

    j = json.loads(run("split", str(opened), "--prime", "5", "--json").stdout)
    check(j["prec"] == 2, "split prec")
    check([(p["weight"], p["rank"]) for p in j["parts"]] == [(1, 2), (2, 3)],
          f"split parts: {j}")
    run("split", str(opened), "--prime", "11", expect=3)  # prime not stored


def test_tate_rank():
    args = ("tate-rank", "--curves", E1, E2, "--primes", "5,7,13",
            "--prec", "3", "--json")
    j = json.loads(run(*args).stdout)
    check(j["rank"] == 2, f"tate rank: {j}")
    check(j["expected"] == 2, f"tate expected: {j}")
    check(j["status"] == "Kunneth identity holds", f"tate status: {j}")

    j2 = json.loads(run(*args).stdout)
    j.pop("wall_ms"), j2.pop("wall_ms")
    check(j == j2, "tate-rank output not deterministic")

    out = run("tate-rank", "--curves", E1, E2, "--primes", "5,7,13",
              "--prec", "3").stdout
    check("rank 2" in out, f"tate text: {out!r}")
    run("tate-rank", "--curves", E1, E2, "--primes", "23", "--prec", "3",
        expect=3)  # bad reduction for E2


def main():
    run("--version")
    with tempfile.TemporaryDirectory() as d:
        tmp = pathlib.Path(d)
        test_zeta()
        proj, opened = test_realise_check(tmp)
        test_object_ops(tmp, proj)
        test_hom_split(tmp, proj, opened)
        test_tate_rank()
    if failures:
        print(f"{len(failures)} CLI checks failed:")
        for f in failures:
            print(" -", f)
        return 1
    print("cli suite: all checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
