import pytest


def pytest_addoption(parser):
    parser.addoption("--deep", action="store_true", default=False, help="run the q=5 Scarf comparison")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--deep"):
        return
    skip = pytest.mark.skip(reason="needs --deep")
    for item in items:
        if "deep" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS, _line
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        terminalreporter.write_line(_line(n, *RESULTS[n]))
