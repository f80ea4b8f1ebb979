"""Collects per-criterion outcomes from test_acceptance.py and prints one line per criterion."""

import pytest

_KEY = pytest.StashKey[dict]()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k): acceptance criterion number")
    config.stash[_KEY] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when != "call" and not (rep.failed or rep.skipped):
        return
    k = mark.args[0]
    entry = item.config.stash[_KEY].setdefault(k, {"passed": [], "failed": [], "unmet": [], "details": []})
    if hasattr(rep, "wasxfail"):
        entry["unmet"].append(rep.wasxfail or item.name)
    elif rep.passed:
        entry["passed"].append(item.name)
    else:
        entry["failed"].append(item.name)
    entry["details"].extend(v for name, v in item.user_properties if name == "detail")


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash[_KEY]
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(results):
        e = results[k]
        status = "PASS" if not e["failed"] and not e["unmet"] else "FAIL"
        parts = list(dict.fromkeys(e["details"]))
        parts += [f"failed: {n}" for n in e["failed"]]
        parts += [f"not met as stated: {r}" for r in e["unmet"]]
        terminalreporter.write_line(f"criterion {k}: {status} - " + "; ".join(parts))
