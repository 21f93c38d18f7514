"""Timing comparison between the compiled and numpy trial kernels.

Both kernels produce bit-identical counts, so the only question is speed.
Run from the repository root:

    python3 benchmarks/bench_backends.py --nodes 321 --trials 2000
"""

from __future__ import annotations

import argparse
import time

from spiroplanck.coverage import FieldSpec
from spiroplanck.oracle import HAS_COMPILED, TrialConfig, simulate


def time_backend(config: TrialConfig, backend: str, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        simulate(config, backend=backend)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--side", type=float, default=100.0, help="field side in meters")
    parser.add_argument("--range", type=float, default=7.0, help="sensing range in meters")
    parser.add_argument("--nodes", type=int, default=321, help="nodes per trial")
    parser.add_argument("--trials", type=int, default=2000, help="trials per run")
    parser.add_argument("--seed", type=int, default=1729, help="master seed")
    parser.add_argument("--repeats", type=int, default=3, help="runs per backend, best kept")
    args = parser.parse_args()

    config = TrialConfig(
        field=FieldSpec(side_m=args.side, range_m=args.range),
        n_nodes=args.nodes,
        trials=args.trials,
        seed=args.seed,
    )
    print(f"nodes={args.nodes} trials={args.trials} seed={args.seed}")

    python_time = time_backend(config, "python", args.repeats)
    rate = args.trials / python_time
    print(f"python   {python_time:8.3f} s   {rate:10.0f} trials/s")

    if not HAS_COMPILED:
        print("compiled kernel not built; nothing to compare")
        return 0

    compiled_time = time_backend(config, "compiled", args.repeats)
    rate = args.trials / compiled_time
    print(f"compiled {compiled_time:8.3f} s   {rate:10.0f} trials/s")
    print(f"speedup  {python_time / compiled_time:8.2f} x")

    fast = simulate(config, backend="compiled")
    slow = simulate(config, backend="python")
    identical = (
        fast.p_no_isolated == slow.p_no_isolated
        and fast.mean_isolated_count == slow.mean_isolated_count
        and (fast.coverage_histogram == slow.coverage_histogram).all()
    )
    print(f"outputs bit-identical: {identical}")
    return 0 if identical else 1


if __name__ == "__main__":
    raise SystemExit(main())
