import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

# (number, ok, detail) recorded by test_acceptance; printed after the run
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"ACCEPTANCE {num} {'PASS' if ok else 'FAIL'}: {detail}")
