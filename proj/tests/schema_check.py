# Validates CLI JSON output and the shipped surface config against the schemas.
import json
import pathlib
import subprocess
import sys

import jsonschema

tool, root = sys.argv[1], pathlib.Path(sys.argv[2])
output_schema = json.loads((root / "schema/output.schema.json").read_text())
surface_schema = json.loads((root / "schema/surface.schema.json").read_text())

config = root / "surfaces/blowup_p2.json"
jsonschema.validate(json.loads(config.read_text()), surface_schema)

runs = [
    ["integrate", "--surface", "p2", "--bundle", "O(1)", "--n1", "2", "--n2", "1", "--route", "both"],
    ["integrate", "--surface", str(config), "--bundle", "E", "--n1", "2", "--n2", "0"],
    ["series", "--surface", "p1xp1", "--bundle", "K", "--cap", "3", "--compare", "closed-form"],
    ["series", "--surface", "hirzebruch(2)", "--divisor", "1,0,0,1", "--cap", "2", "--route", "product"],
]
for args in runs:
    out = subprocess.run([tool, *args], check=True, capture_output=True, text=True).stdout
    jsonschema.validate(json.loads(out), output_schema)
    print("valid:", " ".join(args))
