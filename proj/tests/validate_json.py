#!/usr/bin/env python3
"""Validate every CLI JSON artifact against the shipped schema."""
import json
import subprocess
import sys

import jsonschema


def main() -> int:
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as fh:
        schema = json.load(fh)
    jsonschema.Draft7Validator.check_schema(schema)

    cases = [
        ["pi", "--n", "1000"],
        ["mertens", "--grid", "10,100,1000"],
        ["density", "--n", "10000"],
        ["flow", "--t", "1.5", "--d0", "0.25"],
        ["flow", "--t", "0.5", "--d0", "0.25", "--order", "8"],
        ["scale-check", "--n1", "100000", "--n2", "1000"],
        ["report", "--grid", "1000:100000:1"],
        ["report", "--grid", "5000"],
    ]
    for case in cases:
        proc = subprocess.run(
            [binary, *case, "--format", "json"],
            capture_output=True,
            text=True,
            check=True,
        )
        doc = json.loads(proc.stdout)
        jsonschema.validate(doc, schema, cls=jsonschema.Draft7Validator)
        print("ok:", " ".join(case))

    # A document that fits none of the shapes must be rejected.
    try:
        jsonschema.validate({"nope": 1}, schema, cls=jsonschema.Draft7Validator)
    except jsonschema.ValidationError:
        print("ok: negative control rejected")
    else:
        print("schema accepted a bogus document", file=sys.stderr)
        return 1

    print("all artifacts validate against the schema")
    return 0


if __name__ == "__main__":
    sys.exit(main())
