#!/usr/bin/env python3
# Copyright 2026 The SITP Authors
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
"""Cross-check exported MIPs against an external MIP solver.

For every instance in the data directory this exports the big-M MIP with
`sitp export-mip`, solves it with HiGHS (pip install highspy) and compares
the optimum with `sitp exact --method enum` and with expected.json.

    tools/mps_crosscheck.py --sitp build/tools/sitp
    tools/mps_crosscheck.py --sitp build/tools/sitp --generate   # rebuild data
"""

import argparse
import json
import pathlib
import subprocess
import sys
import tempfile

REL_TOL = 1e-6


def highs_objective(mps_path):
    import highspy

    h = highspy.Highs()
    h.setOptionValue("output_flag", False)
    h.setOptionValue("mip_rel_gap", 0.0)
    h.setOptionValue("mip_abs_gap", 0.0)
    if h.readModel(str(mps_path)) != highspy.HighsStatus.kOk:
        raise RuntimeError(f"HiGHS could not read {mps_path}")
    h.run()
    status = h.modelStatusToString(h.getModelStatus())
    if status != "Optimal":
        return status, None
    return status, h.getInfo().objective_function_value


def run(cmd):
    return subprocess.run(cmd, check=False, capture_output=True, text=True)


def enum_objective(sitp, instance):
    r = run([sitp, "exact", str(instance), "--method", "enum"])
    if r.returncode == 1:
        return None
    if r.returncode != 0:
        raise RuntimeError(r.stderr)
    return json.loads(r.stdout)["solution"]["objective"]


def close(a, b):
    return abs(a - b) <= REL_TOL * max(1.0, abs(a), abs(b))


def generate(sitp, data):
    data.mkdir(parents=True, exist_ok=True)
    for seed in range(1, 11):
        name = f"tiny_{seed:02d}"
        s = 1 if seed % 2 else 2
        r = run([sitp, "gen", "--centers", "3", "--zones", "4", "--items", "2",
                 "--sparsity", str(s), "--capacity-factor", "1.3",
                 "--seed", str(seed), "--out", str(data / f"{name}.json")])
        if r.returncode != 0:
            raise RuntimeError(r.stderr)
        r = run([sitp, "export-mip", str(data / f"{name}.json"),
                 "--out", str(data / f"{name}.mps")])
        if r.returncode != 0:
            raise RuntimeError(r.stderr)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sitp", default="build/tools/sitp")
    ap.add_argument("--data", default="tests/data/mps")
    ap.add_argument("--generate", action="store_true",
                    help="regenerate instances, exports and expected.json")
    args = ap.parse_args()
    data = pathlib.Path(args.data)

    import highspy

    if args.generate:
        generate(args.sitp, data)

    expected_path = data / "expected.json"
    expected = {} if args.generate else json.loads(expected_path.read_text())
    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        for inst in sorted(data.glob("tiny_*.json")):
            name = inst.stem
            mps = pathlib.Path(tmp) / f"{name}.mps"
            r = run([args.sitp, "export-mip", str(inst), "--out", str(mps)])
            if r.returncode != 0:
                raise RuntimeError(r.stderr)
            shipped = data / f"{name}.mps"
            same_file = mps.read_text() == shipped.read_text()
            status, mip = highs_objective(mps)
            enum = enum_objective(args.sitp, inst)
            if args.generate:
                expected[name] = {"highs_status": status, "objective": mip}
            want = expected[name]["objective"]
            ok = same_file and ((mip is None and enum is None and want is None)
                                or (mip is not None and enum is not None
                                    and want is not None and close(mip, enum)
                                    and close(mip, want)))
            failures += not ok
            print(f"{name}: highs={mip} enum={enum} expected={want} "
                  f"export_identical={same_file} {'ok' if ok else 'MISMATCH'}")

    if args.generate:
        expected["_solver"] = f"HiGHS {highspy.Highs().version()} (highspy)"
        expected_path.write_text(json.dumps(expected, indent=1, sort_keys=True) + "\n")
    print("all match" if failures == 0 else f"{failures} mismatches")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
