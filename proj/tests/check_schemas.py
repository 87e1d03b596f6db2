import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

cli = sys.argv[1]
formats = Path(sys.argv[2])
cache = tempfile.mkdtemp()

batch = Path(cache) / "batch.txt"
batch.write_text("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]\nO1+ U2+ O3+ U1+ O2+ U3+\n")

runs = [
    ("parse", ["parse", "--pd", "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"]),
    ("parse", ["parse", "--file", str(batch)]),
    ("invariants", ["invariants", "--fixture", "4_1"]),
    ("invariants", ["invariants", "--fixture", "L4a1{1}"]),
    ("nulldiag", ["nulldiag", "--fixture", "11a263"]),
    ("nulldiag", ["--jobs", "2", "nulldiag", "--file", str(batch)]),
    ("nullbound", ["nullbound", "--fixture", "8_20"]),
    ("nullbound", ["nullbound", "--fixture", "5_1", "--depth", "1", "--search-limit", "1"]),
    ("fourplat", ["fourplat", "--vector", "1,2,3,1,3", "--all"]),
    ("fourplat", ["fourplat", "--fraction", "8/3", "--all"]),
    ("montesinos", ["montesinos", "--fractions", "1/3,-2/5,3/7", "--e", "1"]),
    ("montesinos", ["--seed", "4", "montesinos", "--random", "5"]),
    ("enumerate", ["enumerate", "--max-cr", "8"]),
    ("enumerate", ["enumerate", "--count", "7,2"]),
    ("enumerate", ["enumerate", "--family", "A", "--a", "1", "--b", "2"]),
    ("verify", ["verify", "--only", "4"]),
]

bad = 0
for schema_name, args in runs:
    schema = json.loads((formats / f"{schema_name}.schema.json").read_text())
    env = {"NULLIFY_CACHE_DIR": cache, "PATH": "/usr/bin:/bin"}
    first = subprocess.run([cli, *args], capture_output=True, text=True, env=env)
    second = subprocess.run([cli, *args], capture_output=True, text=True, env=env)
    label = " ".join(args)
    try:
        jsonschema.validate(json.loads(first.stdout), schema)
        ok = first.stdout == second.stdout
        print(("ok      " if ok else "unstable") + "  " + label)
        bad += not ok
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        print(f"invalid   {label}: {str(e).splitlines()[0]}")
        bad += 1

for args, code in [(["parse", "--gauss", "O1+ U2−"], 2), (["nulldiag", "--fixture", "nope"], 2),
                   (["fourplat"], 2), (["nulldiag", "--fixture", "8_20", "--search-limit", "2"], 1)]:
    got = subprocess.run([cli, *args], capture_output=True, text=True).returncode
    print(("ok      " if got == code else "wrong   ") + f"  exit {got} for {' '.join(args)}")
    bad += got != code

sys.exit(1 if bad else 0)
