"""Compare the accelerated kernels against the pure-Python fallback.

Runs the same workload twice in subprocesses (with and without the
TOUGH_CYCLES_NO_NUMBA flag) and prints a small table.  Usage:

    python3 benchmarks/bench_kernels.py
"""

import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, time
from tough_cycles import kernels
from tough_cycles.enumeration import connected_graphs
from tough_cycles.graph import petersen
from tough_cycles.invariants import circumference, connectivity, toughness

kernels.warmup()
results = {"using_numba": kernels.USING_NUMBA}

t0 = time.perf_counter()
for _ in range(200):
    g = petersen()
    toughness(g); connectivity(g); circumference(g)
results["petersen_invariants_200x"] = time.perf_counter() - t0

t0 = time.perf_counter()
n_graphs = sum(1 for _ in connected_graphs(7))
results["enumerate_n7"] = time.perf_counter() - t0
results["n7_count"] = n_graphs

t0 = time.perf_counter()
for g in connected_graphs(7):
    toughness(g); circumference(g)
results["sweep_invariants_n7"] = time.perf_counter() - t0

print(json.dumps(results))
"""


def run(disable_numba: bool) -> dict:
    env = dict(os.environ)
    if disable_numba:
        env["TOUGH_CYCLES_NO_NUMBA"] = "1"
    else:
        env.pop("TOUGH_CYCLES_NO_NUMBA", None)
    proc = subprocess.run([sys.executable, "-c", WORKLOAD], env=env,
                          capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main():
    fast = run(disable_numba=False)
    slow = run(disable_numba=True)
    assert fast["n7_count"] == slow["n7_count"] == 853
    print(f"{'benchmark':<28}{'accelerated':>14}{'fallback':>14}{'speedup':>10}")
    for key in ("petersen_invariants_200x", "enumerate_n7",
                "sweep_invariants_n7"):
        f, s = fast[key], slow[key]
        print(f"{key:<28}{f:>13.3f}s{s:>13.3f}s{s / f:>9.1f}x")
    if not fast["using_numba"]:
        print("note: accelerated run fell back to pure Python "
              "(numba unavailable)")


if __name__ == "__main__":
    main()
