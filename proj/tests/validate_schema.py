"""Runs the CLI on every bundled spec and validates the JSON reports."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema


def main() -> int:
    cli, schema_path, specs_dir = sys.argv[1:4]
    schema = json.loads(pathlib.Path(schema_path).read_text())
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        for spec in sorted(pathlib.Path(specs_dir).glob("*.th")):
            out = pathlib.Path(tmp) / (spec.stem + ".json")
            proc = subprocess.run([cli, "--json", str(out), "analyze", str(spec)], capture_output=True, text=True)
            if proc.returncode == 1:
                print(f"{spec.name}: cli failed: {proc.stderr.strip()}")
                failures += 1
                continue
            report = json.loads(out.read_text())
            errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
            for e in errors:
                print(f"{spec.name}: {'/'.join(map(str, e.path))}: {e.message}")
            if report["status"] not in proc.stdout:
                print(f"{spec.name}: text output lacks status {report['status']}")
                failures += 1
            failures += len(errors)
            print(f"{spec.name}: {report['status']} ({len(errors)} schema errors)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
