import pytest

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line('markers', 'criterion(number, title): acceptance criterion')


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker('criterion')
    if mark is None or rep.when != 'call':
        return
    number, title = mark.args
    detail = dict(item.user_properties).get('detail', '')
    if rep.failed:
        msg = str(rep.longrepr.reprcrash.message).splitlines()[0] if rep.longrepr else ''
        detail = f'{detail}; {msg}' if detail else msg
    _CRITERIA[number] = (title, 'PASS' if rep.passed else 'FAIL', detail)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section('acceptance criteria')
    for n in sorted(_CRITERIA):
        title, status, detail = _CRITERIA[n]
        terminalreporter.write_line(f'criterion {n} ({title}): {status}' + (f' - {detail}' if detail else ''))
