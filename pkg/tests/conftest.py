import pytest

# criterion number -> (title, passed, details)
_ACCEPTANCE: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or not (rep.when == "call" or rep.failed):
        return
    number, title = marker.args
    details = [str(v) for k, v in item.user_properties if k == "detail"]
    _, ok, prev = _ACCEPTANCE.get(number, (title, True, []))
    _ACCEPTANCE[number] = (title, ok and rep.passed, prev + details)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    tr = terminalreporter
    tr.write_sep("=", "acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, ok, details = _ACCEPTANCE[number]
        tr.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}")
        for d in details:
            tr.write_line(f"    {d}")
