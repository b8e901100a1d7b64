LINES: list[str] = []


def report(n: int, ok: bool, detail: str) -> bool:
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"
    print(line)
    LINES.append(line)
    return ok
