"""Compare the pure-Python and compiled scan kernels on one ring system.

Builds a random closed ring over an n-element universe, then times the three
table builders and the five verdict scans on both backends.  Runtimes grow as
2^n times the member count, so the default n=11 keeps a single run under a
few seconds while still leaving the compiled kernels plenty to chew on.

Usage::

    python3 -m benchmarks.bench_kernels --n 11 --repeat 3 --seed 7
"""

from __future__ import annotations

import argparse
import random
import statistics
import time

from measurext import kernels

PURE = kernels.PURE
COMPILED = kernels.COMPILED


def build_system(n: int, seed: int, cap: int = 1 << 14):
    """A closed member list with atoms and small random weights."""
    rng = random.Random(f"bench:{seed}")
    while True:
        seeds = [rng.getrandbits(n) | 1 for _ in range(3)]
        members = PURE.closure(seeds, cap)
        if members is not None and len(members) >= 8:
            break
    atoms = PURE.refine_atoms(members)
    k = len(atoms)
    weights = [rng.randint(0, 20) for _ in range(k)]
    inf_mask = 0
    for i in range(k):
        if rng.random() < 0.2:
            inf_mask |= 1 << i
            weights[i] = 0
    return members, atoms, weights, inf_mask


def time_call(fn, repeat: int) -> float:
    samples = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - start)
    return statistics.median(samples)


def bench_backend(impl, n, members, atoms, weights, inf_mask, repeat):
    timings = {}
    timings["atom_masks"] = time_call(lambda: impl.atom_masks(n, atoms), repeat)
    timings["union_table"] = time_call(lambda: impl.union_table(atoms), repeat)
    timings["mass_table"] = time_call(lambda: impl.mass_table(weights, inf_mask), repeat)

    amask = impl.atom_masks(n, atoms)
    union_tab = impl.union_table(atoms)
    mass = impl.mass_table(weights, inf_mask)
    carrier = 0
    for a in atoms:
        carrier |= a
    memset = frozenset(members)
    finfam = [x for x in members if not (amask[x] & inf_mask)]
    k = len(atoms)

    timings["scan_m"] = time_call(
        lambda: impl.scan_m(n, members, finfam, amask, mass, union_tab, memset), repeat
    )
    timings["scan_mca"] = time_call(
        lambda: impl.scan_mca(n, amask, mass, inf_mask, carrier), repeat
    )
    timings["scan_mca_fin"] = time_call(
        lambda: impl.scan_mca_fin(n, finfam, amask, mass), repeat
    )
    timings["scan_mco"] = time_call(
        lambda: impl.scan_mco(n, members, amask, mass, inf_mask, carrier, union_tab, memset, k),
        repeat,
    )
    timings["scan_mco_fin"] = time_call(
        lambda: impl.scan_mco_fin(n, members, finfam, amask, mass, union_tab, memset),
        repeat,
    )
    return timings


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=11, help="universe size (default 11)")
    parser.add_argument("--repeat", type=int, default=3, help="median of this many runs")
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args(argv)

    members, atoms, weights, inf_mask = build_system(args.n, args.seed)
    print(
        f"system: n={args.n}, members={len(members)}, atoms={len(atoms)}, "
        f"infinite atoms={bin(inf_mask).count('1')}, backend={kernels.BACKEND}"
    )

    pure = bench_backend(PURE, args.n, members, atoms, weights, inf_mask, args.repeat)
    if COMPILED is None:
        print("compiled kernels are not built; pure timings only")
        for op, t in pure.items():
            print(f"  {op:<14} {t * 1e3:9.2f} ms")
        return 0

    fast = bench_backend(COMPILED, args.n, members, atoms, weights, inf_mask, args.repeat)
    print(f"{'operation':<14} {'pure':>10} {'compiled':>10} {'speedup':>9}")
    for op in pure:
        ratio = pure[op] / fast[op] if fast[op] > 0 else float("inf")
        print(
            f"{op:<14} {pure[op] * 1e3:8.2f}ms {fast[op] * 1e3:8.2f}ms {ratio:8.1f}x"
        )
    total_pure = sum(pure.values())
    total_fast = sum(fast.values())
    print(
        f"{'total':<14} {total_pure * 1e3:8.2f}ms {total_fast * 1e3:8.2f}ms "
        f"{total_pure / total_fast:8.1f}x"
    )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
