#!/usr/bin/env python3
"""Run every shipped script with --json and validate each line against the
schema of its command. Usage: validate_schemas.py CLI SOURCE_DIR"""
import json
import pathlib
import subprocess
import sys

import jsonschema

# covers commands and options the shipped scripts might not
EXTRA = """
ring QQ[x,y] weight omega=1,0 epsilon=0
let I=[x^2+y^2, x*y]
let Z=[0]
inw I --trace 1
inw Z
gb Z
betti Z
betti I --sub 1 --initial 1
truncate I 1
syz I 3
check lifting I
check remark-initial I 1
check same-beta0 --seed 3 --budget 5
"""


def main():
    cli, src = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {}
    for p in sorted((src / "schemas").glob("*.schema.json")):
        s = json.loads(p.read_text())
        jsonschema.Draft202012Validator.check_schema(s)
        schemas[p.name.split(".")[0]] = jsonschema.Draft202012Validator(s)

    inputs = [(p.name, p.read_text()) for p in sorted((src / "scripts").glob("*.crg"))]
    inputs.append(("inline", EXTRA))
    seen, errors = set(), []
    for name, text in inputs:
        r = subprocess.run([cli, "-", "--json", "--budget", "20"], input=text, capture_output=True, text=True)
        if r.returncode != 0:
            errors.append(f"{name}: exit {r.returncode}: {r.stderr.strip()}")
            continue
        for k, line in enumerate(r.stdout.splitlines(), 1):
            obj = json.loads(line)
            cmd = obj.get("command")
            if cmd not in schemas:
                errors.append(f"{name}:{k}: no schema for command {cmd!r}")
                continue
            seen.add(cmd)
            for e in schemas[cmd].iter_errors(obj):
                errors.append(f"{name}:{k}: {e.message}")
    missing = set(schemas) - seen
    if missing:
        errors.append("never exercised: " + ", ".join(sorted(missing)))
    for e in errors:
        print(e)
    print(f"{len(inputs)} scripts, {len(seen)} command kinds validated, {len(errors)} problems")
    return 1 if errors else 0


if __name__ == "__main__":
    sys.exit(main())
