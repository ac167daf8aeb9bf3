"""Run the command line tool and validate every output against docs/schemas."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

BASE = "https://relwitt.example/schemas/"

CASES = [
    ("ring_eval", 0, ["ring", "eval", "--ring", "zmod:5", "--op", "add", "--a", "2", "--b", "4"]),
    ("ring_eval", 0, ["ring", "eval", "--ring", "zmod:4", "--op", "inverse", "--a", "2"]),
    ("ring_eval", 0, ["ring", "eval", "--ring", "gf:4", "--op", "elements"]),
    ("ring_eval", 0, ["ring", "eval", "--ring", "zmod:3,zmod:3", "--op", "mul", "--a", "(1|2)", "--b", "(2|2)"]),
    ("ideal_members", 0, ["ideal", "members", "--ring", "zmod:8", "--ideal", "2", "--contains", "6"]),
    ("poly_nagata", 0, ["poly", "nagata", "--ring", "zmod:2", "--nvars", "2", "--f", "X2", "--phi", "X1"]),
    ("mat_pf", 0, ["pf", "--ring", "zmod:5", "--matrix", "[[0,1],[-1,0]]"]),
    ("mat_det", 0, ["mat", "det", "--ring", "int", "--matrix", "[[1,2],[3,4]]"]),
    ("word_eval", 0, ["word", "eval", "--ring", "zmod:4", "--n", "3", "--ideal", "2", "--word",
                      '{"n":3,"tokens":[{"conj":[{"i":1,"j":3,"a":"1"}],"core":{"i":2,"j":1,"a":"2"}},'
                      '{"inv":{"i":1,"j":2,"a":"1"}}]}']),
    ("witt_verify", 0, ["witt", "verify", "--ring", "zmod:5", "--ideal", "unit", "--alpha", "[[0,1],[-1,0]]",
                        "--beta", "[[0,1],[-1,0]]", "--cert", '{"t":0,"epsilon":{"n":4,"tokens":[]}}']),
    ("witt_product", 0, ["witt", "product", "--ring", "zmod:5", "--ideal", "unit", "--alpha", "[[0,1],[-1,0]]",
                         "--beta", "[[0,2],[-2,0]]"]),
    ("witt_lift", 0, ["witt", "lift", "--ring", "zmod:8", "--ideal", "4", "--alpha", "[[0,5],[-5,0]]"]),
    ("witt_root", 0, ["witt", "root", "--ring", "zmod:5", "--matrix", "[[1,2],[0,1]]", "--m", "2"]),
    ("um_complete", 0, ["um", "complete", "--ring", "int", "--row", "[3,5,7]"]),
    ("um_theta", 0, ["um", "theta", "--ring", "int", "--a", "[1,0,0]", "--b", "[1,0,0]"]),
    ("um_symbol", 0, ["um", "symbol", "--ring", "zmod:9", "--ideal", "3", "--row", "[7,3,0]"]),
    ("um_vdk", 0, ["um", "vdk", "--ring", "zmod:5", "--u", "[1,0,0]", "--v", "[2,0,0]"]),
    ("um_vdk", 0, ["um", "vdk", "--ring", "zmod:3", "--u", "[1,1,0]", "--v", "[2,0,1]"]),
    ("um_lift", 0, ["um", "lift", "--ring", "zmod:8", "--ideal", "2", "--row", "[3,2,2]"]),
    ("orbit", 0, ["orbit", "um", "--ring", "zmod:4", "--n", "3", "--ideal", "2"]),
    ("orbit", 0, ["orbit", "alt", "--ring", "zmod:2", "--n", "2", "--ideal", "unit"]),
    ("report", 0, ["report", "vaserstein", "--ring", "zmod:2", "--ideal", "unit"]),
    ("report", 0, ["report", "vaserstein", "--ring", "zmod:4", "--ideal", "2"]),
    ("error", 1, ["pf", "--ring", "int", "--matrix", "[[0,1],[1,0]]"]),
    ("error", 1, ["witt", "root", "--ring", "zmod:4", "--matrix", "[[1,2],[0,1]]", "--m", "2"]),
    ("error", 64, ["pf", "--bogus", "1"]),
]


def main():
    cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    registry = Registry()
    for path in schema_dir.glob("*.json"):
        schema = json.loads(path.read_text())
        jsonschema.Draft202012Validator.check_schema(schema)
        registry = registry.with_resource(BASE + path.name, Resource.from_contents(schema))

    failures = 0
    for key, code, args in CASES:
        ref = BASE + "error.json" if key == "error" else BASE + "commands.json#/$defs/" + key
        validator = jsonschema.Draft202012Validator({"$ref": ref}, registry=registry)
        proc = subprocess.run([cli, *args], capture_output=True, text=True, check=False)
        stream = proc.stderr if key == "error" else proc.stdout
        label = " ".join(args[:2])
        if proc.returncode != code:
            print(f"FAIL {label}: exit {proc.returncode}, expected {code}\n{proc.stderr}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(stream)))
        for e in errors:
            print(f"FAIL {label}: {'/'.join(map(str, e.absolute_path))}: {e.message}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {label} -> {key}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
