# Copyright 2026 The circulant-iso Authors
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

"""Validates CLI JSON output against the schemas in docs/schemas."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

CLI = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])


def load_registry():
    resources = []
    for path in SCHEMAS.glob("*.schema.json"):
        doc = json.loads(path.read_text())
        resources.append((path.name, Resource.from_contents(doc)))
    return Registry().with_resources(resources)


REGISTRY = load_registry()


def validator(name):
    schema = json.loads((SCHEMAS / name).read_text())
    return jsonschema.Draft202012Validator(schema, registry=REGISTRY)


def run(*args, ok=(0,)):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    if proc.returncode not in ok:
        raise SystemExit(f"{' '.join(args)}: exit {proc.returncode}\n{proc.stderr}")
    return json.loads(proc.stdout)


def check_jump_set(js, n):
    assert js == sorted(set(js)), js
    assert all(1 <= r <= n // 2 for r in js), js


failures = 0


def expect(name, doc, extra=None):
    global failures
    errors = list(validator(name).iter_errors(doc))
    for e in errors:
        print(f"{name}: {e.message}")
    try:
        if extra:
            extra(doc)
    except AssertionError as e:
        errors.append(e)
        print(f"{name}: semantic check failed: {e}")
    failures += bool(errors)


def record_checks(doc):
    check_jump_set(doc["r"], doc["n"])
    check_jump_set(doc["s"], doc["n"])
    if "certificate" in doc:
        assert sorted(doc["certificate"]) == list(range(doc["n"]))


classify_cases = [
    ("48", "1,2,23", "2,11,13", (0,)),
    ("48", "1,4,23", "4,11,13", (0,)),
    ("48", "1,2,23", "1,2,23", (0,)),
    ("48", "1,3,23", "3,9,15", (3,)),
    ("81", "1,3,26,28", "3,10,17,37", (0,)),
    ("16", "1,2,7", "1,6,7", (3,)),
]
for n, r, s, ok in classify_cases:
    expect("classification_record.schema.json",
           run("classify", "--n", n, "--r", r, "--s", s, ok=ok), record_checks)


def orbit_checks(doc):
    assert doc["size"] == len(doc["members"])
    assert doc["representative"] == doc["members"][0] == min(doc["members"])
    for m in doc["members"]:
        check_jump_set(m, doc["n"])


for n, r in [("81", "1,26,27,28"), ("48", "1,2,23"), ("16", "1,2,7"), ("12", "6")]:
    expect("adam_orbit.schema.json", run("orbit", "--n", n, "--r", r), orbit_checks)


def report_checks(doc):
    sizes = [len(c["members"]) for c in doc["classes"]]
    assert doc["pair_count"] == sizes.count(2)
    assert doc["triple_count"] == sizes.count(3)
    assert sum(doc["class_sizes"].values()) == len(doc["classes"])
    for c in doc["classes"]:
        for m in c["members"]:
            check_jump_set(m, doc["n"])
            assert len(m) == doc["k"]


for n, k, timing in [("16", "3", True), ("48", "3", False), ("81", "3", False), ("54", "3", True)]:
    args = ["enumerate", "--n", n, "--k", k, "--format", "json"] + (["--timing"] if timing else [])
    expect("enumeration_report.schema.json", run(*args), report_checks)

for n, r, s in [("16", "1,2,7", "1,6,7"), ("48", "1,3,23", "3,9,15"), ("12", "1", "2")]:
    expect("oracle_verdict.schema.json", run("oracle", "--n", n, "--r", r, "--s", s))

expect("oracle_verdict.schema.json", run("oracle", "--n", "32", "--r", "1,2,15", "--s", "1,14,15", "--budget", "1",
                                         ok=(3,)))

print("schema failures:", failures)
sys.exit(1 if failures else 0)
