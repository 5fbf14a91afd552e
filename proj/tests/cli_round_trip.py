"""Exact rationals survive a write/read cycle and identical runs give identical records."""
import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

exe, work = sys.argv[1], Path(sys.argv[2])


def run(path):
    subprocess.run([exe, "juddian", "--k", "3/2", "--j", "2", "--mu", "1/4", "--out", str(path)], check=True)
    return json.loads(path.read_text())


def strip_timing(node):
    if isinstance(node, dict):
        return {k: strip_timing(v) for k, v in node.items() if k != "timing_ms"}
    if isinstance(node, list):
        return [strip_timing(v) for v in node]
    return node


def rationals(node):
    if isinstance(node, dict):
        for v in node.values():
            yield from rationals(v)
    elif isinstance(node, list):
        for v in node:
            yield from rationals(v)
    elif isinstance(node, str) and "/" in node and node.replace("/", "").lstrip("-").isdigit():
        yield node


first = run(work / "round_trip_a.json")
second = run(work / "round_trip_b.json")
assert first["schema_version"] == "1.0"
assert strip_timing(first) == strip_timing(second), "runs differ"

count = 0
for text in rationals(first):
    num, den = text.split("/")
    value = Fraction(int(num), int(den))
    assert f"{value.numerator}/{value.denominator}" == text, text
    count += 1
assert count > 10

points = first["result"]["points"]
assert len(points) == 2
for p in points:
    lo, hi = Fraction(p["kappa_sq"]["lower"]), Fraction(p["kappa_sq"]["upper"])
    assert 0 < lo <= hi
    assert p["validation"]["exact_eigencheck"] is True
print(f"round trip ok: {count} rationals")
