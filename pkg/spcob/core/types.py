from typing import Literal

Basis = Literal["e", "h", "x", "schur"]
OutputFormat = Literal["json", "text"]

FORMATS: tuple[OutputFormat, ...] = ("json", "text")

Exponents = tuple[int, ...]
