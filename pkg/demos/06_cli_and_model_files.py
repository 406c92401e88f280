#!/usr/bin/env python3
"""The JSON model files and the command-line front end.

Models travel as small JSON documents ("explicit" or "window"); the CLI
turns them into bound reports, verification audits, parameter-sweep CSVs,
windowed bounds, and Monte Carlo estimates.  This script drives the CLI
in-process via its main() entry point.
"""

import json
import tempfile
from pathlib import Path

from mdepbounds import consecutive_run_model, dump_model
from mdepbounds.cli import main

workdir = Path(tempfile.mkdtemp(prefix="mdepbounds_demo_"))
model_path = workdir / "run24.json"
dump_model(consecutive_run_model(24), model_path)

print("== the model file ==")
print(model_path.read_text()[:230] + "  ...\n")

print("== report: bounds, exact union, Monte Carlo ==")
main(["report", str(model_path), "--exact", "--mc", "50000", "9"])
print()

print("== verify: derivation audit + dependence check (exit 0 = all pass) ==")
code = main(["verify", str(model_path), "--max-subset", "2",
             "--out", str(workdir / "verify.json")])
audit = json.loads((workdir / "verify.json").read_text())
print(f"exit code {code}; derivation checks: {audit['derivation']['total']}, "
      f"dependence checks: {audit['dependence']['total']}")
print()

print("== sweep: CSV over a growing horizon ==")
main(["sweep", str(model_path), "horizon=8..20:4", "--exact"])
print()

print("== window: the rate form from the command line ==")
main(["window", str(model_path), "0", "2"])
print()

print("== mc: estimate vs exact for the first two events ==")
main(["mc", str(model_path), "1", "2", "100000", "3", "--exact"])
