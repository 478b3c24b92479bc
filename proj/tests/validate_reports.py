"""Runs the command-line tool and validates every JSON report against the schema."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
schema = json.loads(pathlib.Path(schema_path).read_text())
validator = jsonschema.Draft202012Validator(schema)

with tempfile.TemporaryDirectory() as tmp:
    space = pathlib.Path(tmp, "space.json")
    space.write_text('{"points": 3, "opens": [[], [0, 1], [2], [0, 1, 2]]}')
    operator = pathlib.Path(tmp, "op.json")
    operator.write_text('{"points": 2, "images": ["10", "10", "11", "11"]}')

    commands = [
        ["table"],
        ["table", "--within", "2,5"],
        ["census"],
        ["census", "--within", "3,4"],
        ["classify", "--within", "3,4"],
        ["verify", "all"],
        ["--timing", "verify", "table.golden"],
        ["quotient", "--relate", "7=13"],
        ["space", "analyze", "--file", str(space), "--set", "101"],
        ["space", "analyze", "--file", str(operator)],
        ["space", "enumerate", "-n", "3", "--up-to-homeo"],
        ["space", "enumerate", "-n", "5", "--count-only"],
        ["space", "fourteen", "--max-n", "5"],
        ["space", "check", "--premise", "7=8", "--conclusion", "discrete", "--max-n", "3"],
    ]

    failures = 0
    for args in commands:
        proc = subprocess.run([cli, *args], capture_output=True, text=True)
        if proc.returncode not in (0, 1):
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(json.loads(proc.stdout)), key=lambda e: list(e.path))
        for error in errors[:3]:
            print(f"FAIL {' '.join(args)}: {list(error.path)}: {error.message}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {' '.join(args)}")

sys.exit(1 if failures else 0)
