"""One line per acceptance criterion, printed at the end of the pytest run."""
RESULTS: list[str] = []


def record(number: int, name: str, ok: bool, detail: str) -> str:
    line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {name}: {detail}"
    RESULTS.append(line)
    print(line)
    return line
