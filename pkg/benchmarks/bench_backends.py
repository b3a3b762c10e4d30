#!/usr/bin/env python3
"""Benchmark the compiled word kernel against the pure-Python fallback.

Times the genus-2 ball enumeration (the hot loop of loop-class counting)
and the per-word canonicalization on both backends, when both are present.

Run from the repository root:

    python setup.py build_ext --inplace   # build the compiled kernel
    PYTHONPATH=src python benchmarks/bench_backends.py
"""

import itertools
import time


def load_backends():
    backends = {}
    from systolab import _wordkernel_py

    backends["pure"] = _wordkernel_py
    try:
        from systolab import _wordkernel

        backends["compiled"] = _wordkernel
    except ImportError:
        pass
    return backends


def sample_words(kernel, count=20000, length=6):
    rng_state = 12345
    words = []
    letters = list(range(8))
    for i in range(count):
        rng_state = (1103515245 * rng_state + 12345) % (1 << 31)
        word = []
        x = rng_state
        for _ in range(length):
            x, pick = divmod(x, 8)
            if word and letters[pick] == (word[-1] + 4) % 8:
                pick = (pick + 1) % 8
            word.append(letters[pick])
            if x < 8:
                x = (1103515245 * x + 12345) % (1 << 31)
        words.append(bytes(word))
    return words


def bench(label, fn, repeat=3):
    best = min(timeit(fn) for _ in range(repeat))
    print(f"  {label:<34} {best:8.3f} s")
    return best


def timeit(fn):
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def main():
    backends = load_backends()
    print(f"backends available: {', '.join(backends)}")
    words = None
    results = {}
    for name, kernel in backends.items():
        print(f"[{name}]")
        results[name, "ball"] = bench(
            "ball_profile(genus=2, max_len=6)", lambda: kernel.ball_profile(2, 6)
        )
        if words is None:
            words = sample_words(kernel)
        results[name, "canon"] = bench(
            f"canonical() on {len(words)} words",
            lambda: list(itertools.starmap(kernel.canonical, ((w, 2) for w in words))),
        )
    if len(backends) == 2:
        for task, label in (("ball", "ball enumeration"), ("canon", "canonicalization")):
            ratio = results["pure", task] / results["compiled", task]
            print(f"speedup ({label}): {ratio:.1f}x")


if __name__ == "__main__":
    main()
