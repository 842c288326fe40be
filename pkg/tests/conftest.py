import pytest

from cigenus import genus

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


@pytest.fixture
def record_criterion():
    """Register one acceptance line; the summary is printed at the end of the run."""

    def record(label: str, passed: bool, detail: str = ""):
        ACCEPTANCE_RESULTS.append((label, passed, detail))
        print(f"[{'PASS' if passed else 'FAIL'}] {label} {detail}")

    return record


@pytest.fixture
def inject_fault(monkeypatch):
    """Perturb one coefficient of the catalog S-series of a chosen genus kind."""

    def install(kind="todd", index=2, delta=1):
        def fault(g, s):
            if g.kind != kind or s.order < index:
                return s
            coeffs = list(s.coefficients)
            coeffs[index] += delta
            return type(s)(coeffs)

        monkeypatch.setattr(genus, "_fault", fault)

    return install


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {label} {detail}".rstrip())
