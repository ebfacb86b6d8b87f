import argparse
import logging
import time
from collections.abc import Callable
from functools import wraps
from typing import Any, NoReturn

from spcob.core.errors import ConsistencyError, SpcobError, UsageError
from spcob.core.models import Report
from spcob.lib import logs
from spcob.lib.display.format import report_lines, summary_line
from spcob.lib.display.writer import Writer

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace, Writer], int]


def _json_safe(v: Any) -> Any:
    if v is None or isinstance(v, (bool, int, float, str)):
        return v
    if isinstance(v, (list, tuple)):
        return [_json_safe(x) for x in v[:50]]
    if isinstance(v, dict):
        return {str(k): _json_safe(x) for k, x in list(v.items())[:50]}
    return f"<{type(v).__name__}>"


def _record(usage: str, args: argparse.Namespace, exit_code: int, duration_ms: int) -> None:
    try:
        logs.info(
            "cli",
            usage,
            args=_json_safe(vars(args)),
            exit_code=exit_code,
            duration_ms=duration_ms,
        )
    except Exception as e:
        logger.debug(f"invocation log failed: {e}")


def spcob_cmd(usage: str) -> Callable[[Handler], Handler]:
    def decorator(f: Handler) -> Handler:
        @wraps(f)
        def wrapper(args: argparse.Namespace, out: Writer) -> int:
            start = time.monotonic()
            exit_code = 0
            try:
                exit_code = f(args, out)
                return exit_code
            except ConsistencyError as e:
                logger.error(f"{usage}: {e}")
                logs.write("errors", e, context=usage)
                out.error(str(e))
                exit_code = e.exit_code
                return exit_code
            except SpcobError as e:
                logger.error(f"{usage}: {e}")
                out.error(str(e))
                exit_code = e.exit_code
                return exit_code
            finally:
                _record(usage, args, exit_code, int((time.monotonic() - start) * 1000))

        return wrapper

    return decorator


def fail(msg: str) -> NoReturn:
    raise UsageError(msg)


def finish(out: Writer, fmt: str, reports: list[Report]) -> int:
    """Emit reports, log the failing ones, and map them to an exit code."""
    failed = [r for r in reports if not r.passed]
    for r in failed:
        logs.info("checks", r.check, **r.to_json())
    if fmt == "json":
        out.json(reports[0].to_json() if len(reports) == 1 else [r.to_json() for r in reports])
    else:
        for r in reports:
            for line in report_lines(r):
                out.print(line)
        if len(reports) > 1:
            out.print(summary_line(reports))
    return 1 if failed else 0
