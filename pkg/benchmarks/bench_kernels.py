"""Compare the numba kernels with the pure-Python fallback.

Each path runs in its own interpreter because the switch is read at import
time.  Compiled timings exclude the first call (JIT warm-up).

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
import numpy as np
from quiverdet import NUMBA_ENABLED, _kernels
from quiverdet.partitions import partitions

repeat = int(sys.argv[1])

def best(fn):
    fn()  # warm-up, includes compilation
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)

rng = np.random.default_rng(0)
p = 2147483647
mats = [rng.integers(0, p, size=(60, 60), dtype=np.int64) for _ in range(4)]
out = {
    "numba": NUMBA_ENABLED,
    "character tables S_0..S_14": best(lambda: _kernels.character_tables(14, partitions)),
    "rank mod p, 4 x 60x60": best(lambda: [_kernels.rank_mod_p(m.copy(), p) for m in mats]),
}
print(json.dumps(out))
"""


def run(disable: bool, repeat: int) -> dict:
    env = dict(os.environ)
    env.pop("QUIVERDET_DISABLE_NUMBA", None)
    if disable:
        env["QUIVERDET_DISABLE_NUMBA"] = "1"
    res = subprocess.run([sys.executable, "-c", WORKER, str(repeat)], env=env, capture_output=True, text=True,
                         check=True)
    return json.loads(res.stdout)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    fast, slow = run(False, args.repeat), run(True, args.repeat)
    if not fast["numba"]:
        print("numba is not available; both runs use the fallback")
    print(f"{'kernel':32} {'numba s':>10} {'python s':>10} {'speedup':>8}")
    for key in fast:
        if key == "numba":
            continue
        print(f"{key:32} {fast[key]:10.4f} {slow[key]:10.4f} {slow[key] / fast[key]:8.1f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
