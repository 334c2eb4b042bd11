import os

import pytest


def pytest_collection_modifyitems(config, items):
    if os.environ.get("CORETOWER_EXTENDED"):
        return
    skip = pytest.mark.skip(reason="set CORETOWER_EXTENDED=1 to run extended sweeps")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)
