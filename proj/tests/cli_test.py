"""CLI contract: exit codes, JSON schemas, byte-identical reruns."""
import json
import pathlib
import subprocess
import sys

import jsonschema

STARQ, SCHEMAS, MODE = sys.argv[1], pathlib.Path(sys.argv[2]), sys.argv[3]

# (args, schema, expected exit codes)
CASES = [
    (["orbit", "(0,0,0)"], "orbit", {0}),
    (["orbit", "(1/2,-1/2,-3/2)"], "orbit", {0}),
    (["orbit", "(c,0,-c)"], "orbit", {0}),
    (["classify", "(1,-1,1,-1)"], "classify", {0}),
    (["classify", "(c,-c,c)"], "classify", {0}),
    (["classify", "(-1,0,1)"], "classify", {0}),
    (["classify", "(2,0,0,0)"], "classify", {0}),
    (["classify", "(0,2,0)", "--gl"], "classify", {0}),
    (["enumerate", "(1,0,0,0,0,-1,-2)"], "enumerate", {0}),
    (["family", "(c,0,0,0)"], "family", {0}),
    (["enumerate", "(c,0,0)"], "error", {1}),
    (["family", "(1,0,0,0,0,-1,-2)"], "family", {0}),
    (["family", "(1,0,0,0,0,-1,-2)", "--regularity", "3"], "family", {0}),
    (["family", "(2,1,0)", "--gl"], "family", {0}),
    (["degree", "(0,0,-1,3)"], "degree", {0}),
    (["jh", "--n", "4", "--c", "2"], "jh", {0}),
    (["jh", "--n", "4", "--c", "c", "--k", "3"], "jh", {0}),
    (["fock-check", "--check", "J", "--n", "2", "--samples", "3"], "fock-check", {0}),
    (["fock-check", "--check", "weight-spaces", "--samples", "5"], "fock-check", {0}),
    (["classify", "(1,2"], "error", {1}),
    (["enumerate", "(-1,0,1)"], "error", {1}),
    (["degree", "(1,2,3)", ], "error", {1}),
]

USAGE = [
    [],
    ["frobnicate"],
    ["classify"],
    ["classify", "(1,2)", "--params", "c:half-integer"],
    ["jh", "--n", "4"],
    ["jh", "--n", "4", "--c", "2", "--k", "9"],
    ["orbit", "(0,0,0)", "--dot", "--table"],
]


def run(args):
    p = subprocess.run([STARQ, *args], capture_output=True)
    return p.returncode, p.stdout


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


failures = []
if MODE == "schema":
    for args, name, codes in CASES + [(["selftest"], "selftest", {0, 1})]:
        code, out = run(args)
        if code not in codes:
            failures.append(f"{args}: exit {code}, expected {sorted(codes)}")
            continue
        try:
            jsonschema.validate(json.loads(out), schema(name))
        except (ValueError, jsonschema.ValidationError) as e:
            failures.append(f"{args}: {str(e).splitlines()[0]}")
    for args in USAGE:
        code, _ = run(args)
        if code != 2:
            failures.append(f"{args}: exit {code}, expected 2")
    for s in SCHEMAS.glob("*.schema.json"):
        jsonschema.Draft202012Validator.check_schema(json.loads(s.read_text()))
elif MODE == "determinism":
    extra = [
        ["orbit", "(1/2,-1/2,-3/2)", "--dot"],
        ["orbit", "(3,2,1)", "--table"],
        ["family", "(1,0,0,0,0,-1,-2)", "--dot"],
        ["family", "(1,0,0,0,0,-1,-2)", "--table"],
        ["enumerate", "(1,0,0,0,0,-1,-2)", "--table"],
        ["jh", "--n", "4", "--c", "c", "--table"],
    ]
    for args in [c[0] for c in CASES] + extra:
        first, second = run(args), run(args)
        if first != second:
            failures.append(f"{args}: output differs between runs")
else:
    sys.exit(f"unknown mode {MODE}")

for f in failures:
    print("FAIL", f)
print(f"{MODE}: {len(failures)} failures")
sys.exit(1 if failures else 0)
