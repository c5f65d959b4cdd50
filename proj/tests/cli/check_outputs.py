#!/usr/bin/env python3
# Copyright 2026 The dunkl-sd Authors
# SPDX-License-Identifier: Apache-2.0
"""Runs the dunkl binary and validates its JSON output against the schema."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema


def main() -> int:
    binary, schema_path = sys.argv[1], sys.argv[2]
    schema = json.loads(Path(schema_path).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    json_runs = [
        (["spectrum", "--potential", "coulomb", "--d", "3", "--levels", "3"], 0),
        (["spectrum", "--potential", "pho", "--d", "4", "--mu", "0.4", "--De", "8"], 0),
        (["spectrum", "--potential", "oscillator", "--d", "5", "--ell", "1/2,1,0,3/2"], 0),
        (["density", "--potential", "oscillator", "--d", "3", "--n", "1", "--samples", "100"], 0),
        (["wavefunction", "--potential", "coulomb", "--d", "4", "--n", "2", "--samples", "100"], 0),
        (["cartesian", "--d", "3", "--mu", "0.2", "--n", "1,0,2", "--axis", "1", "--samples", "50"], 0),
        (["verify", "--sweep", "cartesian"], 0),
        (["verify", "--sweep", "pho"], 0),
        (["verify", "--sweep", "cartesian", "--points", "200", "--no-richardson"], 1),
    ]
    failures = 0
    for args, want in json_runs:
        proc = subprocess.run([binary, *args, "--format", "json"], capture_output=True, text=True)
        if proc.returncode != want:
            print(f"FAIL exit {proc.returncode} != {want}: {' '.join(args)}\n{proc.stderr}")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(json.loads(proc.stdout)), key=str)
        for e in errors[:5]:
            print(f"FAIL schema {' '.join(args)}: {e.message} at {list(e.absolute_path)}")
        failures += bool(errors)

    code_runs = [
        (["spectrum", "--mu", "-0.6"], 3),
        (["spectrum", "--format", "xml"], 2),
        (["figure", "--id", "7"], 2),
        (["density", "--potential", "coulomb", "--d", "3", "--mu", "0.4", "--n", "-1"], 3),
    ]
    for args, want in code_runs:
        proc = subprocess.run([binary, *args], capture_output=True, text=True)
        if proc.returncode != want:
            print(f"FAIL exit {proc.returncode} != {want}: {' '.join(args)}")
            failures += 1

    with tempfile.TemporaryDirectory() as tmp:
        for fig, count in [("1a", 4), ("1b", 4), ("2a", 3), ("2b", 3), ("2c", 3), ("3a", 4), ("3b", 4)]:
            proc = subprocess.run([binary, "figure", "--id", fig, "--output-dir", tmp], capture_output=True, text=True)
            files = proc.stdout.split()
            if proc.returncode != 0 or len(files) != count or not all(Path(f).exists() for f in files):
                print(f"FAIL figure {fig}: exit {proc.returncode}, files {files}")
                failures += 1

    print("all CLI output checks passed" if failures == 0 else f"{failures} CLI output checks failed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
