"""The acceptance battery: every identity check over desk-scale parameter ranges."""

import json
import logging
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import partial

from spcob.core.errors import DomainError
from spcob.core.models import Report
from spcob.spmat import homotopy
from spcob.stable import msp, thom, tower, whitney
from spcob.verify import checks

logger = logging.getLogger(__name__)

Check = Callable[[], Report]


@dataclass(frozen=True)
class Limits:
    max_r: int = 3
    max_n: int = 6
    max_deg: int = 8

    def __post_init__(self) -> None:
        if self.max_r < 1 or self.max_n < self.max_r or self.max_deg < 0:
            raise DomainError(f"suite limits need 1 <= max_r <= max_n and max_deg >= 0, got {self}")


def battery(limits: Limits) -> list[Check]:
    r_max, n_max, deg = limits.max_r, limits.max_n, limits.max_deg
    small = min(deg, 6)
    out: list[Check] = []
    for r in range(1, r_max + 2):
        out += [partial(checks.jacobi_trudi, r, deg), partial(checks.h_consistency, r, deg)]
    for r in range(1, r_max + 1):
        out += [partial(checks.straightening, r, deg), partial(checks.lr_positivity, r, deg)]
    for r in range(1, r_max + 1):
        for n in range(r, n_max + 1):
            out += [
                partial(checks.basis_property, r, n),
                partial(checks.thom_inclusion_check, r, n),
                partial(checks.exact_sequence, r, n),
            ]
            if n < n_max:
                out.append(partial(checks.stabilization_maps, r, n))
        for n in range(r, n_max + 3):
            out.append(partial(tower.sandwich_check, r, n))
        out += [
            partial(tower.limit_from_tower, r, small),
            partial(thom.thom_ideal_check, r, deg),
        ]
    out += [partial(checks.hp_ring, n) for n in range(1, n_max + 1)]
    out.append(partial(checks.ranks, n_max + 2))
    for r in range(1, r_max + 2):
        for s in range(1, r_max + 3 - r):
            out.append(partial(whitney.coproduct_injectivity, r, s, min(deg, 7)))
    for r in range(1, r_max + 1):
        for s in range(1, r_max + 1):
            out.append(partial(whitney.coproduct_generator_images, r, s, max(r + s, 2)))
            if r + s <= 4:
                out.append(partial(whitney.coproduct_thom_compatibility, r, s, small))
    out += [
        partial(whitney.coproduct_coassociativity, 1, 1, 1, small),
        partial(whitney.coproduct_coassociativity, 2, 1, 2, small),
        partial(msp.msp_tower_check, deg),
        partial(checks.cartan, 5),
        partial(checks.perp, 4),
        partial(checks.thom_sign, 6),
        homotopy.verify_explicit_matrix,
        homotopy.fallback_report,
        partial(checks.symplectic_closure, 4),
    ]
    core, label = homotopy.homotopy_core()
    for K in range(1, 6):
        out.append(partial(homotopy.shift_product_report, K + 1, K, core, label))
    out.append(partial(homotopy.shift_product_report, 4, 1, core, label))
    return out


def _key(report: Report) -> tuple[str, str]:
    return report.check, json.dumps(report.params, sort_keys=True)


def run_all(limits: Limits, workers: int = 4) -> list[Report]:
    """Run the battery concurrently; output order depends only on check names and params."""
    jobs = battery(limits)
    logger.info("suite: %d checks on %d workers", len(jobs), workers)
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        reports = list(pool.map(lambda job: job(), jobs))
    return sorted(reports, key=_key)
