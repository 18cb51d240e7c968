"""Compare the compiled and pure-Python integer kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each workload is run on every available backend; results are checked for
equality before timings are printed.
"""

from __future__ import annotations

import argparse
import random
import timeit

from hopfsmash import kernels
from hopfsmash.catalog import h8_tau4_action, nichols8, nichols8_automorphism
from hopfsmash.exact_math import ExactMatrix, FieldSpec, kron
from hopfsmash.hopf_core import convolve
from hopfsmash.powers import twisted_power_endo
from hopfsmash.smash import smash_coproduct


def _random_matrix(field: FieldSpec, n: int, rng: random.Random) -> ExactMatrix:
    entries = [[rng.randint(-5, 5) for _ in range(field.degree)] for _ in range(n * n)]
    scalars = [field.scalar(0) if rng.random() < 0.5 else sum(
        (field.zeta(k) * c for k, c in enumerate(e)), field.zero()) for e in entries]
    return ExactMatrix.from_scalars(field, n, n, scalars)


def workloads():
    rng = random.Random(0)
    F1, F3 = FieldSpec(1), FieldSpec(3)
    a64, b64 = _random_matrix(F1, 64, rng), _random_matrix(F1, 64, rng)
    a32, b32 = _random_matrix(F3, 32, rng), _random_matrix(F3, 32, rng)
    s8, t8 = _random_matrix(F1, 8, rng), _random_matrix(F3, 8, rng)
    K = smash_coproduct(h8_tau4_action()).K
    n3 = nichols8(F3)
    tau = nichols8_automorphism("z", 0, 0, "z^2", n3)
    return [
        ("matmul 64x64 over Q", lambda: a64 @ b64),
        ("matmul 32x32 over Q(zeta_3)", lambda: a32 @ b32),
        ("kron 8x8 (x) 8x8 over Q", lambda: kron(s8, s8)),
        ("kron 8x8 (x) 8x8 over Q(zeta_3)", lambda: kron(t8, t8)),
        ("convolve on 16-dim smash coproduct", lambda: convolve(K, K.antipode, K.identity_endo)),
        ("twisted power Q_6 on nichols8 over Q(zeta_3)", lambda: twisted_power_endo(n3.algebra, 6, tau)),
    ]


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args()
    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)}")
    header = f"{'workload':<46}" + "".join(f"{b + ' (ms)':>16}" for b in backends)
    if len(backends) > 1:
        header += f"{'speedup':>10}"
    print(header)
    for label, fn in workloads():
        outputs, times = {}, {}
        for b in backends:
            with kernels.use_backend(b):
                outputs[b] = fn()
                times[b] = min(timeit.repeat(fn, number=1, repeat=args.repeat)) * 1000
        first = next(iter(outputs.values()))
        assert all(o == first for o in outputs.values()), f"backends disagree on {label}"
        row = f"{label:<46}" + "".join(f"{times[b]:>16.2f}" for b in backends)
        if len(backends) > 1:
            row += f"{times['python'] / times['cython']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
