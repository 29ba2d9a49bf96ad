"""Collects the one-line verdict of every acceptance criterion."""

RESULTS: list[str] = []


def report(number, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
    if detail:
        line += f" ({detail})"
    RESULTS.append(line)
    print(line, flush=True)
    return ok
