"""One PASS/FAIL line per acceptance criterion, echoed at the end of the run."""

LINES: list[str] = []


def record(criterion: str, passed: bool, seconds: float, detail: str = "") -> None:
    line = f"criterion {criterion}: {'PASS' if passed else 'FAIL'} ({seconds:.2f} s)"
    if detail:
        line += f" {detail}"
    LINES.append(line)
    print(line)
