"""Reproducible sweeps behind ``cliffinner selftest``."""

from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .bogolyubov import BogolyubovAction, fixes_bivector, lemma3_witness_check
from .clifford import Multivector
from .families import random_map, small_maps, small_orthogonal_blocks
from .finitary import FinitaryOrthogonal, core_properties, invariant_core
from .innerness import centralizer, decide, tensor_split_check
from .scalars import ONE, ZERO, Scalar


@dataclass
class SuiteResult:
    name: str
    passed: bool
    cases: int
    detail: str
    seconds: float = 0.0


def _decide_agrees(data: dict) -> bool:
    return decide(FinitaryOrthogonal.from_json(data)).routes_agree


def _agreement(maps, workers: int) -> list[bool]:
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_decide_agrees, [p.to_json() for p in maps], chunksize=16))
    return [decide(p).routes_agree for p in maps]


def suite_oracle_small(workers: int = 1) -> SuiteResult:
    maps = list(small_maps(3))
    ok = _agreement(maps, workers)
    bad = ok.count(False)
    return SuiteResult("oracle equivalence, m <= 3 small entries", bad == 0, len(maps), f"{bad} disagreements")


def suite_oracle_random(count: int = 200, seed: int = 2024, workers: int = 1) -> SuiteResult:
    rng = random.Random(seed)
    maps = [random_map(rng, max_m=4) for _ in range(count)]
    ok = _agreement(maps, workers)
    bad = ok.count(False)
    return SuiteResult("oracle equivalence, random rotations/reflections", bad == 0, count, f"{bad} disagreements")


def suite_negative() -> SuiteResult:
    cases = [
        FinitaryOrthogonal([], -1),
        FinitaryOrthogonal([[-1]], 1),
        FinitaryOrthogonal([[0, 1], [1, 0]], 1),
    ]
    verdicts = [decide(p) for p in cases]
    ok = all(not v.inner and v.witness is None and v.routes_agree for v in verdicts)
    return SuiteResult("negative branches (-Id, reflection, swap)", ok, len(cases), "all not inner" if ok else "mismatch")


def suite_example(samples: int = 100, seed: int = 7) -> SuiteResult:
    phi = FinitaryOrthogonal([[1]], -1)
    v = decide(phi, 5)
    v0 = Multivector.generator(5, 0)
    ok = v.inner and v.routes_agree and v.witness == v0
    rng = random.Random(seed)
    action = BogolyubovAction(phi, 5)
    v0_inv = v0.inverse()
    for _ in range(samples):
        a = Multivector(5, {rng.randrange(32): Scalar(rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(8)})
        ok = ok and action.apply(a) == v0_inv * a * v0
    return SuiteResult("worked example: conjugation by v0", ok, samples, f"witness {v.witness}")


def suite_invariant_core(count: int = 100, seed: int = 11) -> SuiteResult:
    rng = random.Random(seed)
    bad = 0
    for tail in (1, -1):
        for _ in range(count):
            p = random_map(rng, max_m=5, min_m=0)
            p = FinitaryOrthogonal(p.block, tail)
            if not all(core_properties(p, invariant_core(p)).values()):
                bad += 1
    return SuiteResult("invariant core properties", bad == 0, 2 * count, f"{bad} failures")


def suite_centralizer(max_n: int = 6) -> SuiteResult:
    cases = [(n, k) for n in range(1, max_n + 1) for k in range(0, n + 1, 2)]
    for n, k in cases:
        centralizer(n, k)  # raises on mismatch with the formula
    return SuiteResult("centralizer formula", True, len(cases), f"(n, k) up to n = {max_n}")


def _unit(n, i, c=ONE):
    return [c if j == i else ZERO for j in range(n)]


def bivector_pairs(n: int, rich: bool):
    coords = [(_unit(n, i), _unit(n, j)) for i, j in itertools.combinations(range(n), 2)]
    if not rich:
        return coords
    vecs = [_unit(n, i) for i in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        for c in (ONE, -ONE, Scalar(0, 1), Scalar(0, -1)):
            vecs.append([ONE if t == i else c if t == j else ZERO for t in range(n)])
    pairs = []
    for v, w in itertools.combinations(vecs, 2):
        # skip dependent pairs
        if any(v[a] * w[b] != v[b] * w[a] for a in range(n) for b in range(a + 1, n)):
            pairs.append((v, w))
    return pairs


def bivector_sweep(max_n: int = 4):
    """(maps, checks, antecedent hits, counterexamples) over all small orthogonal maps."""
    maps = checks = hits = bad = 0
    for n in range(2, max_n + 1):
        for m in range(1, n + 1):
            tails = (1,) if m == n else (1, -1)
            rich = m < 4
            pairs = bivector_pairs(n, rich)
            for block in small_orthogonal_blocks(m):
                for tail in tails:
                    action = BogolyubovAction(FinitaryOrthogonal(block, tail), n)
                    maps += 1
                    for v1, v2 in pairs:
                        checks += 1
                        if fixes_bivector(action, v1, v2):
                            hits += 1
                        if not lemma3_witness_check(action, v1, v2):
                            bad += 1
    return maps, checks, hits, bad


def suite_bivector() -> SuiteResult:
    maps, checks, hits, bad = bivector_sweep()
    return SuiteResult("fixed bivector spans an invariant plane", bad == 0, checks, f"{maps} maps, {hits} fixed bivectors, {bad} counterexamples")


def suite_tensor_split() -> SuiteResult:
    cases = [(4, 2), (6, 2), (6, 4)]
    ok = all(tensor_split_check(n, k) for n, k in cases)
    return SuiteResult("Cl(V_n) = Cl(V_k) (x) centralizer", ok, len(cases), "bijective" if ok else "failed")


def suite_engine(seed: int = 3) -> SuiteResult:
    rng = random.Random(seed)
    ok = True
    for _ in range(100):
        n = rng.randint(3, 8)
        a, b, c = (Multivector(n, {rng.randrange(1 << n): rng.randint(-3, 3) for _ in range(6)}) for _ in range(3))
        ok = ok and (a * b) * c == a * (b * c)
    for i, j in itertools.product(range(10), repeat=2):
        vi, vj = Multivector.generator(10, i), Multivector.generator(10, j)
        expected = Multivector.scalar(10, 2) if i == j else Multivector.zero(10)
        ok = ok and vi * vj + vj * vi == expected
    return SuiteResult("engine laws (associativity, anticommutation)", ok, 200, "")


SUITES = {
    "example": suite_example,
    "negative": suite_negative,
    "oracle-small": suite_oracle_small,
    "oracle-random": suite_oracle_random,
    "invariant-core": suite_invariant_core,
    "centralizer": suite_centralizer,
    "bivector": suite_bivector,
    "tensor-split": suite_tensor_split,
    "engine": suite_engine,
}


def run_all(workers: int = 1, only: list[str] | None = None) -> list[SuiteResult]:
    out = []
    for key, fn in SUITES.items():
        if only and key not in only:
            continue
        t0 = time.perf_counter()
        if key.startswith("oracle"):
            res = fn(workers=workers)
        else:
            res = fn()
        res.seconds = time.perf_counter() - t0
        out.append(res)
    return out


def format_table(results: list[SuiteResult]) -> str:
    width = max(len(r.name) for r in results)
    lines = [f"{'suite':<{width}}  status  cases  detail"]
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{r.name:<{width}}  {status:<6}  {r.cases:>5}  {r.detail}")
    return "\n".join(lines)
