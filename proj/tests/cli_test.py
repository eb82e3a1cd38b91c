#!/usr/bin/env python3
"""Exit codes, output format and JSON reports of the mulab command line."""
import json
import os
import re
import subprocess
import sys
import tempfile

import jsonschema

exe, schema_path = sys.argv[1], sys.argv[2]
schema = json.load(open(schema_path))
failures = []


def run(*args):
    return subprocess.run([exe, *args], capture_output=True, text=True, timeout=600)


def expect(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


r = run("eval", "mu", "--u", "0.2+0.1i", "--v", "0.35-0.05i", "--tau", "0+1i")
expect(r.returncode == 0, "eval mu exits 0")
expect(re.fullmatch(r"-?[0-9.e+-]+[+-][0-9.e+-]+i", r.stdout.strip()) is not None, "eval prints a+bi")
z = complex(r.stdout.strip().replace("i", "j"))
expect(abs(z - complex(-0.28180586604682625, -0.85915776434588759)) < 1e-13, "eval mu matches the direct sum")

r = run("eval", "eta", "--tau-re", "0", "--tau-im", "1")
expect(r.returncode == 0 and abs(complex(r.stdout.strip().replace("i", "j")) - 0.76822542232605666) < 1e-14,
       "eval eta with --tau-re/--tau-im")

r = run("eval", "mu", "--u", "0", "--v", "0.3", "--tau", "0+1i")
expect(r.returncode == 3 and "PoleProximity" in r.stderr, "eval mu at a pole exits 3 with PoleProximity")
expect(run("eval", "mu", "--u", "1e-1+2.5E-1i", "--v", "0.3", "--tau", "1i").returncode == 0, "exponent literals")
expect(run("eval", "mu", "--u", "abc", "--v", "0.3", "--tau", "1i").returncode == 2, "bad literal exits 2")
expect(run("eval", "nosuch", "--tau", "1i").returncode == 2, "unknown function exits 2")
expect(run("eval", "mu", "--u", "0.1", "--tau", "1i").returncode == 2, "missing argument exits 2")
expect(run("eval", "eta", "--tau", "0.1-0.2i").returncode == 2, "Im tau <= 0 exits 2")
expect(run("frobnicate").returncode == 2, "unknown subcommand exits 2")

with tempfile.NamedTemporaryFile(suffix=".json") as f:
    r = run("verify", "--suite", "theta", "--seed", "1", "--samples", "20", "--json", "--report", f.name)
    expect(r.returncode == 0, "verify theta exits 0")
    rep = json.loads(r.stdout)
    jsonschema.validate(rep, schema)
    expect(json.load(open(f.name)) == rep, "--report file equals stdout report")
    expect(rep["seed"] == 1 and rep["samples"] == 20 and "tolerances" in rep, "defaults recorded in report")
    expect(rep["all_pass"] and all(x["pass"] for x in rep["results"]), "theta report all pass")

r = run("verify", "--id", "MU-6", "--samples", "5")
expect(r.returncode == 0, "verify --id MU-6 exits 0")
r = run("verify", "--suite", "mu", "--samples", "3", "--tol", "1e-30", "--json")
expect(r.returncode == 1, "impossible tolerance exits 1")
rep = json.loads(r.stdout)
jsonschema.validate(rep, schema)
expect(not rep["all_pass"], "all_pass false when anything fails")
expect(run("verify", "--suite", "nope").returncode == 2, "unknown suite exits 2")
expect(run("verify", "--id", "NOPE").returncode == 2, "unknown id exits 2")

r = run("verify", "--suite", "genmu", "--samples", "4", "--json")
rep = json.loads(r.stdout)
jsonschema.validate(rep, schema)
expect(r.returncode == 0 and all(g["resolved"] for g in rep["groups"]), "reading groups resolved in genmu report")

reports = []
for n in ("1", "3"):
    r = subprocess.run([exe, "verify", "--suite", "MN", "--samples", "3", "--json"], capture_output=True, text=True,
                       env={**os.environ, "MU_LAB_MAX_THREADS": n})
    rep = json.loads(r.stdout)
    expect(1 <= rep["max_threads"] <= int(n), "MU_LAB_MAX_THREADS=%s caps the workers" % n)
    reports.append([(x["id"], x["max_rel_residual"]) for x in rep["results"]])
expect(reports[0] == reports[1], "residuals independent of thread count")

r = run("list")
expect(r.returncode == 0 and len(r.stdout.splitlines()) >= 60, "list shows at least 60 identities")
r = run("list", "--json")
items = json.loads(r.stdout)
expect(len(items) >= 60 and {"id", "paper_tag", "suite", "tol_class"} <= set(items[0]), "list --json")
sub = json.loads(run("list", "--suite", "completion", "--json").stdout)
expect(0 < len(sub) < len(items) and all(x["suite"] == "completion" for x in sub), "list --suite filters")

sys.exit(1 if failures else 0)
