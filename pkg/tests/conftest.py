from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

import pytest

_RESULTS_KEY = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[_RESULTS_KEY] = {}


@pytest.fixture
def record(request):
    """Record an acceptance verdict: record(key, ok, detail)."""
    results = request.config.stash[_RESULTS_KEY]

    def _record(key, ok, detail=""):
        results[key] = (ok, detail)
        print(f"criterion {key}: {'PASS' if ok else 'FAIL'} {detail}")

    return _record


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash.get(_RESULTS_KEY, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    groups: dict[str, list] = {}
    for key, val in results.items():
        groups.setdefault(key.split()[0], []).append((key, val))
    for num in sorted(groups, key=int):
        items = groups[num]
        ok = all(v[0] for _, v in items)
        if len(items) == 1 and items[0][0] == num:
            terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {items[0][1][1]}")
            continue
        failed = [k[len(num) + 1 :] for k, v in items if not v[0]]
        note = f"  failing: {', '.join(failed)}" if failed else ""
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}{note}")
        for key, (sub_ok, detail) in items:
            terminalreporter.write_line(f"    {key[len(num) + 1:]}: {'PASS' if sub_ok else 'FAIL'}  {detail}")
