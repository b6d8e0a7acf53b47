import time

_SUITE_START = time.monotonic()


def pytest_collection_modifyitems(config, items):
    # acceptance criteria run last so their timer covers the rest of the suite
    front = [it for it in items if "test_acceptance" not in it.nodeid]
    back = [it for it in items if "test_acceptance" in it.nodeid]
    items[:] = front + back


def suite_elapsed() -> float:
    return time.monotonic() - _SUITE_START
