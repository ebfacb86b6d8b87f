import json
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import Any

from spcob.core.errors import ParseError

_SAFE_INT = 2**53


def coeff_out(c: int) -> str:
    return str(int(c))


def coeff_in(raw: Any) -> int:
    if isinstance(raw, bool):
        raise ParseError(f"coefficient must be an integer, got {raw!r}")
    if isinstance(raw, int):
        return raw
    if isinstance(raw, str):
        try:
            return int(raw.strip())
        except ValueError as e:
            raise ParseError(f"coefficient must be a decimal integer string, got {raw!r}") from e
    raise ParseError(f"coefficient must be an integer, got {raw!r}")


def small_int_out(c: int) -> int | str:
    """Plain JSON number when it survives a double round-trip, decimal string otherwise."""
    return int(c) if -_SAFE_INT < c < _SAFE_INT else str(int(c))


def terms_out(terms: Iterable[tuple[Sequence[int], int]]) -> list[dict[str, Any]]:
    return [{"key": [int(k) for k in key], "coeff": coeff_out(c)} for key, c in terms]


def terms_in(data: Any) -> list[tuple[tuple[int, ...], int]]:
    if not isinstance(data, list):
        raise ParseError("'terms' must be a list")
    out = []
    for entry in data:
        if not isinstance(entry, dict) or "key" not in entry or "coeff" not in entry:
            raise ParseError(f"term must be an object with 'key' and 'coeff': {entry!r}")
        key = entry["key"]
        if not isinstance(key, list) or not all(isinstance(k, int) and not isinstance(k, bool) for k in key):
            raise ParseError(f"term key must be an integer array: {key!r}")
        out.append((tuple(key), coeff_in(entry["coeff"])))
    return out


def require(data: Any, *fields: str) -> dict[str, Any]:
    if not isinstance(data, dict):
        raise ParseError(f"expected a JSON object, got {type(data).__name__}")
    missing = [f for f in fields if f not in data]
    if missing:
        raise ParseError(f"missing field(s): {', '.join(missing)}")
    return data


def load_inline_or_file(inline: str | None, file: str | None) -> Any:
    if inline is not None and file is not None:
        raise ParseError("give the input inline or via --file, not both")
    if file is not None:
        try:
            text = Path(file).read_text()
        except OSError as e:
            raise ParseError(f"cannot read {file}: {e}") from e
    elif inline is not None:
        text = inline
    else:
        raise ParseError("no input given (inline JSON or --file)")
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed JSON: {e}") from e
