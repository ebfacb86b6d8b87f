from dataclasses import dataclass
from itertools import zip_longest


@dataclass(frozen=True)
class TPoly:
    """Dense integer polynomial in t; coeffs[k] is the coefficient of t^k, no trailing zeros."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) for c in self.coeffs)
        end = len(coeffs)
        while end and coeffs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", coeffs[:end])

    @classmethod
    def of(cls, *coeffs: int) -> "TPoly":
        return cls(tuple(coeffs))

    @classmethod
    def const(cls, c: int) -> "TPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "TPoly | int") -> "TPoly":
        other = _lift(other)
        return TPoly(tuple(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)))

    __radd__ = __add__

    def __neg__(self) -> "TPoly":
        return TPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "TPoly | int") -> "TPoly":
        return self + (-_lift(other))

    def __mul__(self, other: "TPoly | int") -> "TPoly":
        other = _lift(other)
        if not self or not other:
            return ZERO
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return TPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TPoly":
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        chunks = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            chunks.append(("-" if c < 0 else "+", body))
        first_sign, first = chunks[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in chunks[1:]:
            text += f" {sign} {body}"
        return text


def _lift(x: "TPoly | int") -> TPoly:
    return x if isinstance(x, TPoly) else TPoly.const(x)


ZERO = TPoly()
ONE = TPoly.const(1)
T = TPoly.of(0, 1)
