from pathlib import Path

import pytest

from nonderangements import _kernels

GOLDEN = Path(__file__).parent / "golden"

KERNEL_MODULES = [_kernels.pure] + ([_kernels.compiled] if _kernels.compiled is not None else [])


def read_golden(name):
    """Rows of a golden file split on '|', skipping comments."""
    rows = []
    for line in (GOLDEN / name).read_text().splitlines():
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        rows.append([c.strip() for c in line.split("|")])
    return rows


@pytest.fixture(params=KERNEL_MODULES, ids=lambda m: m.BACKEND)
def kernels(request):
    return request.param


_acceptance = {}


def _criterion(nodeid):
    # "test_criterion_6_identities[eq]" -> "criterion 6 (identities)"
    name = nodeid.split("::")[-1].split("[")[0]
    _, _, num, *words = name.split("_")
    return int(num), " ".join(words)


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or report.failed:
        key = _criterion(report.nodeid)
        ok = report.outcome == "passed" and _acceptance.get(key, True)
        _acceptance[key] = ok


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section(f"acceptance criteria (kernel backend: {_kernels.BACKEND})")
    for (num, words), ok in sorted(_acceptance.items()):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {num}: {words}")
