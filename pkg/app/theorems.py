"""
Theorem registry shared by ``verify``: one runner per theorem id, and the
seeded randomized batch mode.
"""

from __future__ import annotations

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict
from typing import Callable

from app.config import Settings, configure, settings
from app.errors import DomainError
from app.net.payoffs import CostStructure
from app.io.model_file import ModelFile
from app.random_models import potential_payoff, random_costs, random_payoff
from app.stability.verify import (
    verify_addition_equivalences,
    verify_deletion_equivalence,
    verify_pairwise_corollaries,
)
from app.consent.verify import check_thm5, check_thm6, compare_case_a, verify_m_networks, verify_two_sided
from app.trust.verify import verify_monadic_equivalence
from app.potentials.existence import existence_report
from app.verdict import VerificationReport

log = logging.getLogger(__name__)


def _costs(model: ModelFile) -> CostStructure:
    return model.costs if model.costs is not None else CostStructure.zeros(model.n)


def _gamma(model: ModelFile) -> CostStructure:
    gamma = model.one_sided_costs()
    return gamma if gamma is not None else CostStructure.zeros(model.n)


THEOREMS: dict[str, Callable[[ModelFile], VerificationReport]] = {
    "deletion-equivalence": lambda m: verify_deletion_equivalence(m.phi),
    "addition-equivalence": lambda m: verify_addition_equivalences(m.phi),
    "pairwise-corollaries": lambda m: verify_pairwise_corollaries(m.phi),
    "m-networks": lambda m: verify_m_networks(m.phi),
    "two-sided": lambda m: verify_two_sided(m.phi, _costs(m)),
    "one-sided-inclusion": lambda m: check_thm5(m.phi, _gamma(m)),
    "sunk-cost-inclusion": lambda m: check_thm6(m.phi, _costs(m)),
    "case-a-comparison": lambda m: compare_case_a(m.phi, _costs(m)),
    "monadic-equivalence": lambda m: verify_monadic_equivalence(m.phi, _costs(m)),
    "potentials-existence": lambda m: existence_report(m.phi, m.costs),
}

# theorems whose random instances carry strictly positive costs
NEEDS_COSTS = {"two-sided", "one-sided-inclusion", "sunk-cost-inclusion", "case-a-comparison",
               "monadic-equivalence", "potentials-existence"}


def run_theorem(theorem: str, model: ModelFile) -> VerificationReport:
    try:
        runner = THEOREMS[theorem]
    except KeyError as e:
        raise DomainError(f"unknown theorem id {theorem!r}; choose from {', '.join(THEOREMS)}") from e
    report = runner(model)
    log.info("%s on %s: %s", theorem, model.name or "model", "verified" if report.ok else "violated")
    return report


def random_instance(theorem: str, n: int, seed: int, index: int) -> ModelFile:
    rng = random.Random(f"{seed}:{theorem}:{n}:{index}")
    if theorem == "potentials-existence" and index % 2 == 0:
        phi = potential_payoff(n, rng)
    else:
        phi = random_payoff(n, rng)
    costs = random_costs(n, rng) if theorem in NEEDS_COSTS else None
    return ModelFile(phi, costs, None, f"random-{seed}-{index}", {"generator": "random", "seed": seed, "index": index})


def _run_one(job: tuple[str, int, int, int, Settings]) -> VerificationReport:
    theorem, n, seed, index, current = job
    configure(**asdict(current))
    return run_theorem(theorem, random_instance(theorem, n, seed, index))


def run_random_batch(theorem: str, count: int, n: int, seed: int | None = None,
                     jobs: int | None = None) -> list[VerificationReport]:
    """Reports come back in instance order whatever the number of workers."""
    if theorem not in THEOREMS:
        raise DomainError(f"unknown theorem id {theorem!r}")
    seed = settings().seed if seed is None else seed
    jobs = settings().jobs if jobs is None else jobs
    work = [(theorem, n, seed, k, settings()) for k in range(count)]
    log.info("random batch: %s x%d at n=%d, seed %d, %d worker(s)", theorem, count, n, seed, jobs)
    if jobs <= 1:
        return [_run_one(job) for job in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_one, work))
