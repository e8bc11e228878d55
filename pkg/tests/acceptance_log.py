"""Collects one verdict line per acceptance criterion for the terminal summary."""

RESULTS: dict[int, tuple[bool, str]] = {}


def record(n: int, ok: bool, detail: str) -> bool:
    RESULTS[n] = (bool(ok), detail)
    return ok
