# Copyright 2026 The Altruist Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runs every CLI command and validates its stdout against schemas/."""

import json
import pathlib
import shutil
import subprocess
import sys
import tempfile

import jsonschema


def main(binary, schema_dir):
    schemas = {}
    for p in pathlib.Path(schema_dir).glob("*.json"):
        s = json.loads(p.read_text())
        jsonschema.Draft202012Validator.check_schema(s)
        schemas[p.stem] = s

    tmp = pathlib.Path(tempfile.mkdtemp(prefix="altruist_schema_"))
    failures = []
    runs = 0

    def run(schema, args, code=0):
        nonlocal runs
        runs += 1
        r = subprocess.run([binary, *args], capture_output=True, text=True)
        label = " ".join(args)
        if r.returncode != code:
            failures.append(f"{label}: exit {r.returncode}, expected {code}")
            return None
        try:
            doc = json.loads(r.stdout)
            jsonschema.validate(doc, schemas[schema])
        except (json.JSONDecodeError, jsonschema.ValidationError) as e:
            failures.append(f"{label}: {str(e).splitlines()[0]}")
            return None
        return r.stdout

    def put(name, text):
        p = tmp / name
        p.write_text(text)
        return str(p)

    games = {}
    for kind in ("example1", "footnote-sym", "footnote-asym"):
        games[kind] = put(kind + ".json", run("game", ["generate", kind]) or "{}")
    phi = put("phi.cnf", "1 2\n-1\n")
    run("game", ["generate", "sat-singleton", "--formula", phi])
    run("network", ["generate", "sat-network", "--formula", phi])
    run("network", ["generate", "sat-network", "--formula", phi, "--symmetric"])
    part = put("p.txt", "1 1\n")
    games["partition"] = put(
        "part.json",
        run("network", ["generate", "partition", "--partition", part]) or "{}")
    linear = put("linear.json", json.dumps({
        "resources": [
            {"id": "r1", "delay": {"kind": "linear", "a": "1"}},
            {"id": "r2", "delay": {"kind": "affine", "a": "1", "b": "1/2"}},
            {"id": "r3", "delay": {"kind": "quadratic", "a": "1"}},
        ],
        "agents": [
            {"id": "a1", "beta": "0", "strategies": [["r1"], ["r2", "r3"]]},
            {"id": "a2", "beta": "1/2", "strategies": [["r1"], ["r3"]]},
        ],
    }))

    for g in games.values():
        run("validate", ["validate", "--game", g])
        run("oracle", ["oracle", "--game", g])
        run("optimum", ["optimum", "--game", g])
    for g in (games["example1"], games["footnote-sym"]):
        run("solve", ["solve", "--game", g])
        run("thresholds", ["thresholds", "--game", g])
    for policy in ("round_robin", "random", "max_gain"):
        run("dynamics", ["dynamics", "--game", games["example1"], "--policy",
                         policy, "--seed", "4", "--max-steps", "20"])
        run("dynamics", ["dynamics", "--game", linear, "--policy", policy])
    run("validate", ["validate", "--game", linear])
    run("oracle", ["oracle", "--game", linear])

    ex = games["example1"]
    target = put("t.json", json.dumps({"target": {"e": 2, "f": 2}}))
    costs = put("c.json", json.dumps({"costs": {
        "egoist1": {"e": "1", "f": "2"}, "egoist2": {"e": "1", "f": "2"},
        "egoist3": {"e": "3", "f": "1"}, "altruist": {"e": "0", "f": "5/2"}}}))
    run("stabilize", ["stabilize", "--game", ex, "--target", target])
    run("stabilize", ["stabilize", "--game", ex, "--target", target,
                      "--costs", costs])
    run("vcg", ["vcg", "--game", ex, "--target", target, "--costs", costs])
    far = put("far.json", json.dumps({"r1": 2, "r2": 1, "r3": 0}))
    run("stabilize", ["stabilize", "--game", games["footnote-asym"],
                      "--target", far], code=1)

    run("error", ["solve", "--game", games["footnote-asym"]], code=2)
    run("error", ["solve", "--game", str(tmp / "missing.json")], code=2)
    run("error", ["frobnicate"], code=2)
    run("error", ["--budget", "3", "oracle", "--game", ex], code=3)
    run("solve", ["solve", "--game", ex, "--require-ne"], code=1)

    shutil.rmtree(tmp)
    for f in failures:
        print("FAIL", f)
    print(f"{runs - len(failures)}/{runs} outputs valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1], sys.argv[2]))
