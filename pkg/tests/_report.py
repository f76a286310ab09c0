"""Shared registry for the acceptance suite's one-line-per-criterion report."""

lines: list[str] = []


def record(number: int, name: str, passed: bool, detail: str) -> None:
    status = "PASS" if passed else "FAIL"
    lines.append(f"criterion {number:2d} [{status}] {name}: {detail}")
