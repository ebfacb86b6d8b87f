"""The Thom ideal p_r * Z[[p_1..p_r]], the model of A(MSp_2r) inside A(BSp_2r)."""

from dataclasses import dataclass
from typing import Any

from spcob.core.errors import DomainError
from spcob.core.models import Outcome, Report
from spcob.lib import linalg
from spcob.stable.series import HomSeries, SeriesRing, bsp, monomials


@dataclass(frozen=True)
class ThomIdealElem:
    series: HomSeries

    def __post_init__(self) -> None:
        R = self.series.ring
        if not self.series.divisible_by(R.nvars):
            raise DomainError(f"{self.series} is not divisible by {R.names[-1]}")

    @property
    def ring(self) -> SeriesRing:
        return self.series.ring

    def cofactor(self) -> HomSeries:
        """The x with p_r * x = series, one truncation step down."""
        R = self.ring
        k = R.nvars - 1
        lower = R.with_trunc(R.trunc - R.weights[k])
        terms = {e[:k] + (e[k] - 1,): c for e, c in self.series.terms.items()}
        return HomSeries.from_terms(lower, terms)

    def __str__(self) -> str:
        return str(self.series)

    def to_json(self) -> dict[str, Any]:
        return self.series.to_json()


def thom_ideal_embed(x: HomSeries) -> ThomIdealElem:
    """x -> p_r * x; the truncation grows by deg p_r so nothing is lost."""
    R = x.ring
    wide = x.widen(R.trunc + R.weights[-1])
    return ThomIdealElem(HomSeries.gen(wide.ring, R.nvars) * wide)


def restrict(x: HomSeries) -> HomSeries:
    """Set p_r = 0 and drop the last variable."""
    R = x.ring
    if R.nvars < 2:
        raise DomainError("restriction to r-1 variables needs r >= 2")
    lower = SeriesRing(R.names[:-1], R.weights[:-1], R.trunc)
    return HomSeries.from_terms(lower, {e[:-1]: c for e, c in x.eval_zero(R.nvars).terms.items()})


def _exactness(r: int, D: int) -> Outcome:
    full = bsp(r, D)
    for d in range(D + 1):
        top = monomials(full, d)
        index = {m: i for i, m in enumerate(top)}
        source = monomials(bsp(r, D), d - r) if d >= r else []
        embedded = [thom_ideal_embed(HomSeries.monomial(bsp(r, D - r), m)) for m in source]
        matrix = [[0] * len(source) for _ in top]
        for j, y in enumerate(embedded):
            for e, c in y.series.terms.items():
                matrix[index[e]][j] += c
        ok, kernel = linalg.full_column_rank(matrix, len(source))
        if not ok:
            return False, {"degree": d, "stage": "embedding", "kernel": kernel}
        for y in embedded:
            if r >= 2 and restrict(y.series):
                return False, {"degree": d, "stage": "composite", "element": str(y)}
        if r >= 2:
            below = monomials(bsp(r - 1, D), d)
            hit = {e[:-1] for e in top if e[-1] == 0}
            if set(below) - hit:
                return False, {"degree": d, "stage": "surjection", "missing": [list(m) for m in set(below) - hit]}
            kernel_dim = len(top) - len(below)
        else:
            kernel_dim = len(top) if d > 0 else 0
        if kernel_dim != len(source):
            return False, {"degree": d, "stage": "middle", "kernel_dim": kernel_dim, "image_dim": len(source)}
    return True, None


def thom_ideal_check(r: int, D: int) -> Report:
    """0 -> p_r Z[[p]] -> Z[[p_1..p_r]] -> Z[[p_1..p_{r-1}]] -> 0, degree by degree."""
    if r < 1 or D < 0:
        raise DomainError(f"thom ideal check needs r >= 1 and D >= 0, got r={r}, D={D}")
    return Report.timed("stable.thom_ideal", {"r": r, "D": D}, lambda: _exactness(r, D))
